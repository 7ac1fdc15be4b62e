"""Command-line front end: evaluate any solution family on a grid.

Subcommands map one-to-one onto the solution families plus `verify`,
which runs the acceptance checks.  Output is a CSV or JSON table with
one row per grid point; floats are serialized with 17 significant
digits so parsing an emitted file reproduces the values bit-exactly.
Exit codes: 0 success, 2 invalid parameters, 3 numerical failure,
4 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .delta import delta_closed_form, delta_quadrature
from .errors import EvaluationError, ValidationError
from .foxh import FoxHParams, eval_auto, eval_contour, eval_series
from .linear import linear_closed_form, linear_quadrature, linear_series
from .mittag import ml_contour, ml_eval, ml_series
from .quadrature import GridSpec
from .result import (DeltaConfig, EvalResult, LinearConfig, TimeConfig,
                     _check_order_pair)
from .solution import full_solution
from .time_factor import time_factor
from .verify import format_report, run_criteria

_H_ROUTES = {"auto": eval_auto, "series": eval_series, "contour": eval_contour}


def _parse_grid(text: str) -> GridSpec:
    parts = text.split(":")
    if len(parts) != 3:
        raise ValidationError("grid must be start:stop:count")
    try:
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise ValidationError("grid must be start:stop:count with numeric fields")
    if count > 100000:
        raise ValidationError("grid count must be <= 100000")
    return GridSpec(start, stop, count)


def _parse_pairs(text: str):
    if not text:
        return ()
    out = []
    for item in text.split(","):
        bits = item.split(":")
        if len(bits) != 2:
            raise ValidationError("gamma pairs must be a:W,a:W,...")
        try:
            out.append((float(bits[0]), float(bits[1])))
        except ValueError:
            raise ValidationError("gamma pair fields must be numeric")
    return tuple(out)


def _check_tol(tol: float) -> float:
    if not 1e-12 <= tol <= 1e-2:
        raise ValidationError("tolerance must lie in [1e-12, 1e-2]")
    return tol


def _resolve_c_alpha(args) -> float:
    if args.c_alpha is not None:
        return args.c_alpha
    if args.alpha == 2.0:
        return args.hbar ** 2 / (2.0 * args.mass)
    raise ValidationError(
        "--c-alpha is required unless alpha = 2 (where it defaults to hbar^2/(2 mass))")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fse",
        description="closed-form solutions of the space-time fractional "
                    "Schrodinger equation on evaluation grids")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--hbar", type=float, default=1.0)
    common.add_argument("--mass", type=float, default=1.0)
    common.add_argument("--grid", type=str, required=True,
                        help="start:stop:count, endpoints inclusive")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--method",
                        choices=("auto", "series", "contour", "quadrature"),
                        default="auto")
    common.add_argument("--tol", type=float, default=1e-9)

    p = sub.add_parser("time", parents=[common],
                       help="Caputo time factor on a t-grid")
    p.add_argument("--beta", type=float, default=1.0)
    p.add_argument("--energy", type=float, default=-1.0)
    p.add_argument("--f0", type=complex, default=1.0 + 0.0j)

    p = sub.add_parser("delta", parents=[common],
                       help="point-potential bound state on an x-grid")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument("--energy", type=float, default=-1.0)
    p.add_argument("--gamma", type=float, default=1.0)
    p.add_argument("--c-alpha", dest="c_alpha", type=float, default=None)
    p.add_argument("--k-norm", dest="k_norm", type=complex, default=1.0 + 0.0j)

    p = sub.add_parser("linear", parents=[common],
                       help="linear-ramp wavefunction on an x-grid")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument("--energy", type=float, default=0.0)
    p.add_argument("--slope", type=float, default=1.0)
    p.add_argument("--c-alpha", dest="c_alpha", type=float, default=None)

    p = sub.add_parser("foxh", parents=[common],
                       help="H-function on a real argument grid")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--upper", type=str, default="",
                   help="numerator parameter pairs a:W,a:W,...")
    p.add_argument("--lower", type=str, required=True,
                   help="denominator parameter pairs b:W,b:W,...")

    p = sub.add_parser("ml", parents=[common],
                       help="one-parameter Mittag-Leffler on a real grid")
    p.add_argument("--beta", type=float, required=True)

    p = sub.add_parser("full", parents=[common],
                       help="separated solution f(t)*phi(x) on an x-grid")
    p.add_argument("--potential", choices=("delta", "linear"), required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--beta", type=float, default=1.0)
    p.add_argument("--f0", type=complex, default=1.0 + 0.0j)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument("--energy", type=float, default=-1.0)
    p.add_argument("--gamma", type=float, default=1.0)
    p.add_argument("--slope", type=float, default=1.0)
    p.add_argument("--c-alpha", dest="c_alpha", type=float, default=None)
    p.add_argument("--k-norm", dest="k_norm", type=complex, default=1.0 + 0.0j)

    p = sub.add_parser("verify", help="run the acceptance checks")
    p.add_argument("--only", type=str, default="",
                   help="comma-separated criterion numbers, default all")
    return parser


def _space_config(args):
    _check_order_pair(args.alpha, args.theta)
    c_alpha = _resolve_c_alpha(args)
    if args.potential == "delta":
        return DeltaConfig(alpha=args.alpha, theta=args.theta, hbar=args.hbar,
                           c_alpha=c_alpha, energy=args.energy,
                           gamma_strength=args.gamma, k_norm=args.k_norm)
    return LinearConfig(alpha=args.alpha, theta=args.theta, hbar=args.hbar,
                        c_alpha=c_alpha, energy=args.energy, slope=args.slope)


def _rows_time(args, nodes, tol):
    cfg = TimeConfig(beta=args.beta, hbar=args.hbar, energy=args.energy,
                     f0=args.f0)
    if args.method == "quadrature":
        raise ValidationError("the time factor has no quadrature route")
    out = []
    for t in nodes:
        r = time_factor(cfg, float(t), rel_tol=tol)
        out.append((float(t), r.value, r.err_est, r.method))
    return out, {"beta": args.beta, "hbar": args.hbar, "energy": args.energy,
                 "f0": str(args.f0)}


def _rows_delta(args, nodes, tol):
    _check_order_pair(args.alpha, args.theta)
    c_alpha = _resolve_c_alpha(args)
    cfg = DeltaConfig(alpha=args.alpha, theta=args.theta, hbar=args.hbar,
                      c_alpha=c_alpha, energy=args.energy,
                      gamma_strength=args.gamma, k_norm=args.k_norm)
    out = []
    for x in nodes:
        x = float(x)
        if args.method == "quadrature":
            r = delta_quadrature(cfg, x, abs_tol=tol)
        elif x == 0.0 and args.method == "auto":
            r = delta_quadrature(cfg, x, abs_tol=tol)
        else:
            r = delta_closed_form(cfg, x, rel_tol=tol, method=args.method)
        out.append((x, r.value, r.err_est, r.method))
    meta = {"alpha": args.alpha, "theta": args.theta, "hbar": args.hbar,
            "c_alpha": c_alpha, "energy": args.energy, "gamma": args.gamma,
            "k_norm": str(args.k_norm)}
    return out, meta


def _rows_linear(args, nodes, tol):
    _check_order_pair(args.alpha, args.theta)
    c_alpha = _resolve_c_alpha(args)
    cfg = LinearConfig(alpha=args.alpha, theta=args.theta, hbar=args.hbar,
                       c_alpha=c_alpha, energy=args.energy, slope=args.slope)
    out = []
    for x in nodes:
        x = float(x)
        if args.method == "quadrature":
            r = linear_quadrature(cfg, x, abs_tol=tol)
        elif args.method == "series":
            r = linear_series(cfg, x)
        else:
            r = linear_closed_form(cfg, x, rel_tol=tol, method=args.method)
        out.append((x, r.value, r.err_est, r.method))
    meta = {"alpha": args.alpha, "theta": args.theta, "hbar": args.hbar,
            "c_alpha": c_alpha, "energy": args.energy, "slope": args.slope}
    return out, meta


def _rows_foxh(args, nodes, tol):
    if args.method == "quadrature":
        raise ValidationError("the H-function has no quadrature route")
    try:
        params = FoxHParams(m=args.m, n=args.n,
                            upper=_parse_pairs(args.upper),
                            lower=_parse_pairs(args.lower))
    except (ValueError, TypeError) as exc:
        raise ValidationError(str(exc))
    ev = _H_ROUTES[args.method]
    out = []
    for z in nodes:
        r = ev(params, complex(float(z)), tol)
        out.append((float(z), r.value, r.err_est, r.method))
    meta = {"m": args.m, "n": args.n, "upper": args.upper, "lower": args.lower}
    return out, meta


def _rows_ml(args, nodes, tol):
    if args.method == "quadrature":
        raise ValidationError("the Mittag-Leffler function has no quadrature route")
    out = []
    for z in nodes:
        z = float(z)
        if args.method == "series":
            val, err, work = ml_series(args.beta, z, tol)
            r = EvalResult(val, err, "series", work)
        elif args.method == "contour":
            val, err, work = ml_contour(args.beta, z, tol)
            r = EvalResult(val, err, "contour", work)
        else:
            r = ml_eval(args.beta, z, tol)
        out.append((z, r.value, r.err_est, r.method))
    return out, {"beta": args.beta}


def _rows_full(args, nodes, tol):
    tcfg = TimeConfig(beta=args.beta, hbar=args.hbar, energy=args.energy,
                      f0=args.f0)
    scfg = _space_config(args)
    out = []
    for x in nodes:
        r = full_solution(tcfg, scfg, float(x), args.t, rel_tol=tol)
        out.append((float(x), r.value, r.err_est, r.method))
    meta = {"potential": args.potential, "t": args.t, "beta": args.beta,
            "f0": str(args.f0), "alpha": args.alpha, "theta": args.theta,
            "hbar": args.hbar, "energy": args.energy}
    if args.potential == "delta":
        meta["gamma"] = args.gamma
        meta["k_norm"] = str(args.k_norm)
    else:
        meta["slope"] = args.slope
    return out, meta


_ROWS = {"time": _rows_time, "delta": _rows_delta, "linear": _rows_linear,
         "foxh": _rows_foxh, "ml": _rows_ml, "full": _rows_full}


def _emit_csv(rows) -> str:
    lines = ["coord,re,im,abs2,err_est,method"]
    for c, v, e, m in rows:
        lines.append("%.17g,%.17g,%.17g,%.17g,%.17g,%s"
                     % (c, v.real, v.imag, abs(v) ** 2, e, m))
    return "\n".join(lines) + "\n"


def _emit_json(command, meta, tol, method, rows) -> str:
    payload = {
        "meta": {"command": command, "version": __version__,
                 "tolerance": tol, "method": method, "config": meta},
        "rows": [{"coord": c, "re": v.real, "im": v.imag,
                  "abs2": abs(v) ** 2, "err_est": e, "method": m}
                 for c, v, e, m in rows],
    }
    return json.dumps(payload, indent=2) + "\n"


def _mend_argv(argv):
    # argparse reads "--grid -3:3:121" as a dangling option; fuse the pair
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--grid":
            val = next(it, None)
            out.append(tok if val is None else "--grid=" + val)
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(_mend_argv(sys.argv[1:] if argv is None else argv))
    try:
        if args.command == "verify":
            only = None
            if args.only:
                try:
                    only = [int(s) for s in args.only.split(",")]
                except ValueError:
                    raise ValidationError("--only takes comma-separated integers")
            results = run_criteria(only)
            sys.stdout.write(format_report(results))
            return 0 if all(r.passed for _, r in results) else 1
        tol = _check_tol(args.tol)
        nodes = _parse_grid(args.grid).nodes()
        rows, meta = _ROWS[args.command](args, nodes, tol)
        if args.format == "json":
            text = _emit_json(args.command, meta, tol, args.method, rows)
        else:
            text = _emit_csv(rows)
        sys.stdout.write(text)
        sys.stdout.flush()
        return 0
    except ValidationError as exc:
        sys.stderr.write("error: invalid parameters: %s\n" % exc)
        return 2
    except EvaluationError as exc:
        sys.stderr.write("error: %s: %s\n" % (type(exc).__name__, exc))
        return 3
    except OSError as exc:
        sys.stderr.write("error: i/o failure: %s\n" % exc)
        return 4


if __name__ == "__main__":
    sys.exit(main())
