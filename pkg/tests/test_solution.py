import pytest

from fse.delta import delta_closed_form, delta_quadrature
from fse.errors import ConfigMismatch
from fse.linear import linear_closed_form
from fse.result import DeltaConfig, LinearConfig, TimeConfig
from fse.solution import full_solution
from fse.time_factor import time_factor


def test_point_potential_product():
    tcfg = TimeConfig(beta=0.7, hbar=1.0, energy=-0.5)
    dcfg = DeltaConfig(alpha=1.5, theta=0.0, c_alpha=1.0, energy=-0.5)
    r = full_solution(tcfg, dcfg, 0.8, 1.3)
    want = time_factor(tcfg, 1.3).value * delta_closed_form(dcfg, 0.8).value
    assert abs(r.value - want) <= 1e-11 * abs(want)
    assert "*" in r.method
    assert r.err_est > 0.0


def test_origin_falls_back_to_quadrature():
    tcfg = TimeConfig(beta=1.0, hbar=1.0, energy=-0.5)
    dcfg = DeltaConfig(alpha=1.5, theta=0.0, c_alpha=1.0, energy=-0.5)
    r = full_solution(tcfg, dcfg, 0.0, 0.4)
    want = time_factor(tcfg, 0.4).value * delta_quadrature(dcfg, 0.0).value
    assert abs(r.value - want) <= 1e-10 * abs(want)
    assert "quadrature" in r.method


def test_ramp_potential_product():
    tcfg = TimeConfig(beta=0.9, hbar=1.0, energy=0.5)
    lcfg = LinearConfig(alpha=1.5, theta=0.3, hbar=1.0, c_alpha=1.0,
                        energy=0.5, slope=1.0)
    r = full_solution(tcfg, lcfg, 1.1, 0.6)
    want = time_factor(tcfg, 0.6).value * linear_closed_form(lcfg, 1.1).value
    assert abs(r.value - want) <= 1e-13 * abs(want)


def test_mismatched_configs_refused():
    dcfg = DeltaConfig(alpha=1.5, theta=0.0, c_alpha=1.0, energy=-0.5)
    with pytest.raises(ConfigMismatch):
        full_solution(TimeConfig(beta=1.0, hbar=2.0, energy=-0.5),
                      dcfg, 1.0, 1.0)
    with pytest.raises(ConfigMismatch):
        full_solution(TimeConfig(beta=1.0, hbar=1.0, energy=-0.7),
                      dcfg, 1.0, 1.0)
