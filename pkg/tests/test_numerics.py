import cmath
import math

import numpy as np
import pytest

from fse.errors import PoleOfGamma, ZeroBase
from fse.numerics import (digamma, log_gamma, panel_nodes, principal_power,
                          signum)


def test_log_gamma_at_one_and_half():
    assert abs(log_gamma(1.0)) < 1e-14
    # reflection at z=1/2 pins Gamma(1/2)^2 = pi
    assert abs(log_gamma(0.5) - 0.5 * math.log(math.pi)) < 1e-14


def test_log_gamma_recurrence_random():
    rng = np.random.default_rng(7)
    for _ in range(100):
        z = complex(rng.uniform(-10, 10), rng.uniform(-10, 10))
        if abs(z - round(z.real)) < 0.1 and abs(z.imag) < 0.1:
            continue
        lhs = log_gamma(z + 1.0)
        rhs = math.log(abs(z)) + 1j * cmath.phase(z) + log_gamma(z)
        # compare through exp to dodge 2*pi*i branch offsets
        assert abs(cmath.exp(lhs - rhs) - 1.0) < 1e-12


def test_log_gamma_reflection_random():
    rng = np.random.default_rng(11)
    checked = 0
    while checked < 100:
        z = complex(rng.uniform(-10, 10), rng.uniform(-10, 10))
        if min(abs(z.real - round(z.real)), 1.0) < 0.1 and abs(z.imag) < 0.1:
            continue
        val = cmath.exp(log_gamma(z)) * cmath.exp(log_gamma(1.0 - z))
        ref = math.pi / cmath.sin(math.pi * z)
        assert abs(val - ref) / abs(ref) < 1e-10
        checked += 1


def test_log_gamma_conjugation():
    z = 2.3 + 1.7j
    assert log_gamma(z.conjugate()) == log_gamma(z).conjugate()


def test_log_gamma_pole_refusal():
    for z in (0.0, -1.0, -7.0, -3.0 + 1e-13j):
        with pytest.raises(PoleOfGamma):
            log_gamma(z)


def test_digamma_spot_values():
    # psi(1) = -euler_gamma, psi(1/2) = -euler_gamma - 2 ln 2
    eg = 0.5772156649015329
    assert abs(digamma(1.0) + eg) < 1e-13
    assert abs(digamma(0.5) + eg + 2.0 * math.log(2.0)) < 1e-13


def test_digamma_recurrence_complex():
    rng = np.random.default_rng(13)
    for _ in range(60):
        z = complex(rng.uniform(-8, 8), rng.uniform(-8, 8))
        if abs(z.imag) < 0.05 and abs(z.real - round(z.real)) < 0.05:
            continue
        assert abs(digamma(z + 1.0) - digamma(z) - 1.0 / z) < 1e-11 * max(
            1.0, abs(digamma(z)))


def test_principal_power_examples():
    assert principal_power(1.0, 3.7 - 2j) == 1.0
    assert abs(principal_power(-1.0, 0.5) - 1j) < 1e-15
    ref = cmath.exp(1.5 * (math.log(2.0) + 1j * math.pi / 2.0))
    assert abs(principal_power(2j, 1.5) - ref) < 1e-15 * abs(ref)
    assert principal_power(0.0, 2.0) == 0.0
    with pytest.raises(ZeroBase):
        principal_power(0.0, -1.0)
    with pytest.raises(ZeroBase):
        principal_power(0.0, 1j)


def test_principal_power_identities():
    rng = np.random.default_rng(17)
    for _ in range(40):
        z = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        if abs(z) < 0.1:
            continue
        assert abs(principal_power(z, 1.0) - z) < 1e-14 * abs(z)
        assert principal_power(z, 0.0) == 1.0


def test_signum():
    assert signum(0.0) == 0
    assert signum(-3.2) == -1
    assert signum(7.0) == 1


def test_panel_nodes_integrate_polynomial():
    # order-15 Gauss rule is exact for degree 29
    xs, ws = panel_nodes(-1.0, 2.0, 15)
    got = sum(w * x ** 8 for x, w in zip(xs, ws))
    assert abs(got - (2.0 ** 9 + 1.0) / 9.0) < 1e-12
