"""Configuration and result containers shared across the solver modules."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import ValidationError


def _check_positive(value, name):
    if not (value > 0.0) or not math.isfinite(value):
        raise ValidationError("%s must be positive and finite" % name)


def _check_order_pair(alpha, theta):
    if not (1.0 < alpha <= 2.0):
        raise ValidationError("alpha must satisfy 1 < alpha <= 2")
    lim = min(alpha, 2.0 - alpha)
    # skew bound is closed: theta = +-lim is admissible
    if abs(theta) > lim + 1e-15:
        raise ValidationError(
            "theta violates |theta| <= min(alpha, 2 - alpha): "
            "got theta=%g with alpha=%g" % (theta, alpha))


@dataclass(frozen=True)
class TimeConfig:
    """Parameters of the separated time factor f(t) = f0 * E_beta(...)."""

    beta: float
    hbar: float = 1.0
    energy: complex = -1.0 + 0.0j
    f0: complex = 1.0 + 0.0j

    def __post_init__(self):
        if not (0.0 < self.beta <= 1.0):
            raise ValidationError("beta must satisfy 0 < beta <= 1")
        _check_positive(self.hbar, "hbar")
        e = complex(self.energy)
        f = complex(self.f0)
        if not all(math.isfinite(v) for v in (e.real, e.imag, f.real, f.imag)):
            raise ValidationError("energy and f0 must be finite")
        object.__setattr__(self, "energy", e)
        object.__setattr__(self, "f0", f)


@dataclass(frozen=True)
class DeltaConfig:
    """Attractive point potential, bound state at energy < 0.

    c_alpha scales |p|^alpha in the kinetic symbol; gamma_strength is the
    potential weight; k_norm is the free overall normalization scalar.
    """

    alpha: float
    theta: float = 0.0
    hbar: float = 1.0
    c_alpha: float = 1.0
    energy: float = -1.0
    gamma_strength: float = 1.0
    k_norm: complex = 1.0 + 0.0j

    def __post_init__(self):
        _check_order_pair(self.alpha, self.theta)
        _check_positive(self.hbar, "hbar")
        _check_positive(self.c_alpha, "c_alpha")
        if not (self.energy < 0.0) or not math.isfinite(self.energy):
            raise ValidationError("energy must be negative for the point-potential bound state")
        _check_positive(self.gamma_strength, "gamma_strength")
        k = complex(self.k_norm)
        if not (math.isfinite(k.real) and math.isfinite(k.imag)):
            raise ValidationError("k_norm must be finite")
        object.__setattr__(self, "k_norm", k)


@dataclass(frozen=True)
class LinearConfig:
    """Uniform-force potential slope * x for x > 0 at any real energy."""

    alpha: float
    theta: float = 0.0
    hbar: float = 1.0
    c_alpha: float = 1.0
    energy: float = 0.0
    slope: float = 1.0

    def __post_init__(self):
        _check_order_pair(self.alpha, self.theta)
        _check_positive(self.hbar, "hbar")
        _check_positive(self.c_alpha, "c_alpha")
        if not math.isfinite(self.energy):
            raise ValidationError("energy must be finite")
        _check_positive(self.slope, "slope")

    @property
    def n_norm(self) -> float:
        """Overall amplitude, recomputed from the current fields every time."""
        a1 = self.alpha + 1.0
        return (1.0 / (2.0 * math.pi * self.hbar)) * (
            self.c_alpha / (self.slope * self.hbar * a1)) ** (-1.0 / a1)


@dataclass
class EvalResult:
    """A single evaluated value with an error estimate and the route used."""

    value: complex
    err_est: float
    method: str
    work: int = 0

    def __post_init__(self):
        v = complex(self.value)
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            raise ValidationError("result value must be finite")
        self.value = v


@dataclass
class GridResult:
    """Evaluation over a coordinate grid; parallel lists, one entry per node."""

    coords: list[float] = field(default_factory=list)
    values: list[complex] = field(default_factory=list)
    err_ests: list[float] = field(default_factory=list)
    methods: list[str] = field(default_factory=list)

    def append(self, coord, res: EvalResult):
        self.coords.append(float(coord))
        self.values.append(complex(res.value))
        self.err_ests.append(float(res.err_est))
        self.methods.append(res.method)

    def __len__(self):
        return len(self.coords)
