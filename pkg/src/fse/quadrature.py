"""Adaptive quadrature engines and discrete Fourier-pair checkers.

Three strategies cover the integral shapes the solvers need: plain
adaptive bisection on a finite interval, an oscillatory splitter for
semi-infinite cosine/sine integrals with algebraic decay, and a rotated
ray for integrands that decay only off the real axis.  These routines are
the ground truth the closed forms are compared against, so they share no
code with the H-function evaluators.
"""

from __future__ import annotations

import cmath
import heapq
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .accel import euler_alternating
from .errors import GridTooCoarse, QuadratureFailure, ValidationError
from .numerics import panel_nodes
from .result import EvalResult


class Strategy(Enum):
    Adaptive = "adaptive"
    OscillatorySplit = "oscillatory"
    RotatedRay = "ray"


@dataclass(frozen=True)
class QuadratureSpec:
    abs_tol: float
    rel_tol: float
    max_panels: int = 800
    strategy: Strategy = Strategy.Adaptive

    def __post_init__(self):
        if not (self.abs_tol > 0.0 and self.rel_tol > 0.0):
            raise ValidationError("tolerances must be positive")
        if self.max_panels < 8:
            raise ValidationError("max_panels must be at least 8")


@dataclass(frozen=True)
class GridSpec:
    start: float
    stop: float
    count: int

    def __post_init__(self):
        if not (self.start < self.stop):
            raise ValidationError("grid start must be below stop")
        if self.count < 2:
            raise ValidationError("grid count must be at least 2")

    def nodes(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.count)


def _panel_est(f, a: float, b: float):
    """One panel: order-30 value and its deviation from order-15."""
    x1, w1 = panel_nodes(a, b, 15)
    x2, w2 = panel_nodes(a, b, 30)
    v1 = sum(wi * f(xi) for xi, wi in zip(x1, w1))
    v2 = sum(wi * f(xi) for xi, wi in zip(x2, w2))
    return v2, abs(v2 - v1)


def adaptive(f, a: float, b: float, tol: float, max_panels: int = 800):
    """Heap-driven bisection; returns (value, error bound, panels used)."""
    val, err = _panel_est(f, a, b)
    heap = [(-err, 0, a, b, val, err)]
    total = val
    toterr = err
    count = 1
    serial = 1
    while toterr > tol and count < max_panels:
        neg, _, pa, pb, pval, perr = heapq.heappop(heap)
        mid = 0.5 * (pa + pb)
        lv, le = _panel_est(f, pa, mid)
        rv, re_ = _panel_est(f, mid, pb)
        total += lv + rv - pval
        toterr += le + re_ - perr
        heapq.heappush(heap, (-le, serial, pa, mid, lv, le))
        heapq.heappush(heap, (-re_, serial + 1, mid, pb, rv, re_))
        serial += 2
        count += 1
    # re-sum in interval order: deterministic and kinder to cancellation
    panels = sorted(heap, key=lambda t: t[2])
    total = sum(p[4] for p in panels)
    toterr = sum(p[5] for p in panels)
    return total, toterr, count


def osc_semi_inf(g, omega: float, kind: str, tol: float, a: float = 0.0,
                 max_half: int = 96):
    """Integral of g over [a, inf) where g oscillates like cos/sin(omega p).

    Splits at the oscillation zeros, then feeds the alternating half-period
    pieces to Euler acceleration; g itself must supply the oscillating
    factor and decay algebraically.
    """
    if omega <= 0.0:
        raise ValidationError("oscillation frequency hint must be positive")
    if kind == "cos":
        first = 0.5 * math.pi / omega
    elif kind == "sin":
        first = math.pi / omega
    else:
        raise ValidationError("oscillation kind must be 'cos' or 'sin'")
    half = math.pi / omega
    # zeros before a are irrelevant; find the first zero past the head
    k0 = 0
    while first + k0 * half <= a:
        k0 += 1
    z0 = first + k0 * half
    head, head_err, _ = adaptive(g, a, z0, 0.1 * tol)
    pieces = []
    perr = 0.0
    for j in range(max_half):
        lo = z0 + j * half
        hi = lo + half
        v, e, _ = adaptive(g, lo, hi, 0.05 * tol / (j + 1.0) ** 2, max_panels=60)
        pieces.append(v)
        perr += e
        if j >= 7 and j % 2 == 1:
            est, spread = euler_alternating(pieces)
            if spread < 0.1 * tol:
                return head + est, head_err + perr + spread, j + 1
    est, spread = euler_alternating(pieces)
    return head + est, head_err + perr + spread, max_half


def tail_algebraic(g, cut: float, decay: float, tol: float):
    """Integral of g over [cut, inf) for g ~ p^(-decay-1), decay > 0.

    Inverting p = 1/u maps the tail to (0, 1/cut]; a further power map
    u = u0 v^m flattens the fractional endpoint behavior so fixed-order
    panels see a smooth integrand.
    """
    if decay <= 0.0:
        raise ValidationError("tail decay exponent must be positive")
    u0 = 1.0 / cut
    m = max(2, math.ceil(3.0 / decay))

    def h(v):
        u = u0 * v ** m
        p = 1.0 / u
        return g(p) * p * p * u0 * m * v ** (m - 1)

    return adaptive(h, 0.0, 1.0, tol, max_panels=200)


def ray_segment(f, angle: float, radius: float, tol: float,
                max_panels: int = 1500):
    """Integral of f along the ray t*e^(i*angle), t in [0, radius].

    The radial variable runs through t = v^4 so endpoint fractional powers
    in the integrand do not defeat the panel error estimator.
    """
    rot = cmath.exp(1j * angle)

    def h(v):
        t = v ** 4
        return 4.0 * v ** 3 * f(t * rot)

    val, err, count = adaptive(h, 0.0, radius ** 0.25, tol, max_panels)
    return rot * val, err, count


def integrate(f, spec: QuadratureSpec, a: float = 0.0, b: float = math.inf,
              omega: float | None = None, kind: str = "cos",
              ray_angle: float | None = None) -> EvalResult:
    """Evaluate an integral under the given strategy and certify the result.

    Adaptive needs a finite [a, b]; OscillatorySplit integrates [a, inf)
    and needs the frequency hint omega; RotatedRay needs ray_angle and a
    finite radius b, with f taking the complex ray point.
    """
    tol = spec.abs_tol
    if spec.strategy is Strategy.Adaptive:
        if not (math.isfinite(a) and math.isfinite(b) and a < b):
            raise ValidationError("adaptive strategy needs a finite interval")
        val, err, work = adaptive(f, a, b, tol, spec.max_panels)
        label = "adaptive"
    elif spec.strategy is Strategy.OscillatorySplit:
        if omega is None:
            raise ValidationError("oscillatory strategy needs a frequency hint")
        if math.isfinite(b):
            raise ValidationError("oscillatory strategy integrates to infinity")
        val, err, work = osc_semi_inf(f, omega, kind, tol, a)
        label = "oscillatory"
    elif spec.strategy is Strategy.RotatedRay:
        if ray_angle is None:
            raise ValidationError("ray strategy needs ray_angle")
        if not (math.isfinite(b) and b > 0.0) or a != 0.0:
            raise ValidationError("ray strategy needs a = 0 and a finite radius")
        val, err, work = ray_segment(f, ray_angle, b, tol, spec.max_panels)
        label = "ray"
    else:  # pragma: no cover - enum is closed
        raise ValidationError("unknown strategy")
    bound = max(spec.abs_tol, spec.rel_tol * abs(val))
    if err > bound:
        raise QuadratureFailure(
            "%s quadrature stalled: error %.2e exceeds %.2e after %d panels"
            % (label, err, bound, work))
    return EvalResult(value=complex(val), err_est=float(err), method=label,
                      work=int(work))


def fourier_pair_check(samples, grid: GridSpec, hbar: float = 1.0):
    """Round-trip and Plancherel defects of a sampled wavefunction.

    Forward transform (1/2pi hbar) integral of e^(-ipx/hbar) psi dx and its
    inverse are discretized with trapezoid weights on conjugate grids, so
    insufficient edge decay shows up as a real defect instead of being
    hidden by an exactly unitary DFT pair.  Returns (roundtrip, ratio) with
    ratio = norm(psi)^2 / (2 pi hbar norm(psihat)^2).
    """
    if hbar <= 0.0:
        raise ValidationError("hbar must be positive")
    psi = np.asarray(list(samples), dtype=complex)
    n = grid.count
    if psi.shape != (n,):
        raise ValidationError("sample count must match the grid")
    if not np.all(np.isfinite(psi.real) & np.isfinite(psi.imag)):
        raise ValidationError("samples must be finite")
    if not np.any(psi):
        return 0.0, 1.0
    x = grid.nodes()
    dx = x[1] - x[0]
    wx = np.full(n, dx)
    wx[0] = wx[-1] = 0.5 * dx
    dp = 2.0 * math.pi * hbar / (n * dx)
    p = dp * (np.arange(n) - n // 2)
    wp = np.full(n, dp)
    wp[0] = wp[-1] = 0.5 * dp
    kernel = np.exp(-1j * np.outer(p, x) / hbar)
    psihat = kernel @ (wx * psi) / (2.0 * math.pi * hbar)
    back = kernel.conj().T @ (wp * psihat)
    roundtrip = float(np.max(np.abs(back - psi)))
    if roundtrip > 1e-3:
        raise GridTooCoarse(
            "Fourier round-trip defect %.2e; refine or widen the grid" % roundtrip)
    ratio = float(np.sum(wx * np.abs(psi) ** 2)
                  / (2.0 * math.pi * hbar * np.sum(wp * np.abs(psihat) ** 2)))
    return roundtrip, ratio
