"""Command-line front end.

Three command families:

* ``bound {ball,manifold,partial-disk,needle,generic}`` — evaluate an
  upper bound at one alpha (or on an alpha grid with ``--curve N``);
* ``figure {fig1,fig2a,fig2b}`` — emit the data behind the standard
  comparison plots as CSV;
* ``solve {neumann-gap,disk-gap,needle-gamma,partial-threshold}`` — run
  one of the root solvers and report value, residual, and bracket.

Every invocation produces an OutputRecord (query echo, named results,
and a provenance string per result).  ``--json`` prints the record as
JSON; the default text form is ``key = value`` lines for scalars and
CSV for curves, both with 12 significant digits and LF line endings so
identical invocations are byte-identical.  ``--out PATH`` redirects the
payload to a file.  The environment variable ``STICKYGAP_M_MAX``
overrides the angular-mode scan cap of the disk eigenvalue solver.

Exit codes: 0 success; 2 flag or validation error; 3 numeric failure
(no root found, non-finite value, violated invariant); 4 unwritable
output path.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Any

import numpy as np

from . import disk, models
from .disk import DiskEigenConfig
from .exceptions import (InvariantViolationError, NonFiniteError,
                         NoRootFoundError)
from .interpolation import (BoundConstants, BoundCurve, _require_positive,
                            alpha_grid, bound_curve, interpolation_bound)
from .models import BallSpec, ManifoldSpec, NeedleSpec, PartialDiskSpec


@dataclass
class OutputRecord:
    """One CLI answer: echoed inputs, named results, provenance per result."""

    query_echo: dict[str, Any]
    results: dict[str, Any]
    provenance: dict[str, str]


def _record(echo: dict, results: dict, provenance: dict) -> OutputRecord:
    missing = set(results) - set(provenance)
    if missing:
        raise RuntimeError(f"internal error: results lack provenance: {sorted(missing)}")
    return OutputRecord(query_echo=echo, results=results, provenance=provenance)


def _echo_flags(args, command: str, subcommand: str, names: tuple[str, ...]) -> dict:
    echo: dict[str, Any] = {"command": command, "subcommand": subcommand}
    for name in names:
        value = getattr(args, name)
        if value is not None:
            echo[name] = value
    return echo


def _env_m_max() -> int | None:
    raw = os.environ.get("STICKYGAP_M_MAX")
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"STICKYGAP_M_MAX must be an integer >= 2, got {raw!r}") from None
    if value < 2:
        raise ValueError(f"STICKYGAP_M_MAX must be an integer >= 2, got {raw!r}")
    return value


def _disk_cfg() -> DiskEigenConfig:
    m_max = _env_m_max()
    return DiskEigenConfig() if m_max is None else DiskEigenConfig(m_max=m_max)


# -------------------------------------------------------------- rendering

def _fmt(value) -> str:
    if isinstance(value, bool):
        return str(value)
    if isinstance(value, float):
        return format(value, ".12g")
    return str(value)


def _render_text(record: OutputRecord) -> str:
    results = record.results
    if "alphas" in results:
        columns = ["alpha"] + (["exact"] if "exact" in results else []) + ["upper_bound"]
        series = [results["alphas"]] + ([results["exact"]] if "exact" in results else []) \
            + [results["upper_bounds"]]
        lines = [",".join(columns)]
        for row in zip(*series):
            lines.append(",".join(format(v, ".12g") for v in row))
        return "\n".join(lines) + "\n"
    return "".join(f"{key} = {_fmt(value)}\n" for key, value in results.items())


def _render_json(record: OutputRecord) -> str:
    payload = {
        "query_echo": record.query_echo,
        "results": record.results,
        "provenance": record.provenance,
    }
    return json.dumps(payload, indent=2) + "\n"


def _emit(payload: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(payload)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(payload)


def _curve_results(curve: BoundCurve, with_exact: bool = False) -> dict:
    results: dict[str, Any] = {"alphas": [float(a) for a in curve.alphas]}
    if with_exact:
        results["exact"] = [float(v) for v in curve.exact]
    results["upper_bounds"] = [float(v) for v in curve.upper_bounds]
    return results


_CURVE_PROV = {
    "alphas": "midpoint grid of mixing weights on (0, 1)",
    "upper_bounds": "upper bound on the optimal Poincaré constant at each alpha",
    "exact": "reciprocal of the computed disk eigenvalue at each alpha",
}


# ---------------------------------------------------------------- bound

def _bound_ball(args) -> OutputRecord:
    echo = _echo_flags(args, "bound", "ball", ("d", "beta", "gamma", "c_omega", "curve"))
    c_om = models._resolve_ball_c_omega(models._check_dim(args.d), args.c_omega)
    if args.curve is not None:
        spec = BallSpec(d=args.d, beta=args.beta, gamma=1.0)
        alphas = alpha_grid(args.curve)
        upper = np.array([models._ball_bound_at(spec.d, spec.beta, c_om, float(a))
                          for a in alphas])
        curve = BoundCurve(alphas=alphas, upper_bounds=upper)
        return _record(echo, _curve_results(curve), _CURVE_PROV)
    spec = BallSpec(d=args.d, beta=args.beta, gamma=args.gamma)
    results = {
        "alpha": spec.alpha,
        "upper_bound": models.ball_bound(spec, args.c_omega),
    }
    prov = {
        "alpha": "mixing weight gamma / (d + gamma) derived from the flags",
        "upper_bound": "closed-form interpolation bound for the unit ball "
                       "with sticky-reflecting boundary diffusion",
    }
    return _record(echo, results, prov)


def _bound_manifold(args) -> OutputRecord:
    echo = _echo_flags(args, "bound", "manifold",
                       ("d", "k_r", "k_2", "c_omega", "c_sigma", "vol_ratio",
                        "alpha", "curve"))
    spec = ManifoldSpec(d=args.d, k_r=args.k_r, k_2=args.k_2, c_omega=args.c_omega,
                        c_sigma=args.c_sigma, vol_ratio=args.vol_ratio)
    if args.curve is not None:
        alphas = alpha_grid(args.curve)
        upper = np.array([models.manifold_bound(spec, float(a)) for a in alphas])
        curve = BoundCurve(alphas=alphas, upper_bounds=upper)
        return _record(echo, _curve_results(curve), _CURVE_PROV)
    results = {
        "m1": models.manifold_m1(spec, args.alpha),
        "m2": models.manifold_m2(spec, args.alpha),
        "upper_bound": models.manifold_bound(spec, args.alpha),
    }
    prov = {
        "m1": "curvature-based interpolation bound for the manifold",
        "m2": "integral-geometric bound from the boundary volume ratio",
        "upper_bound": "minimum of the two manifold bounds",
    }
    return _record(echo, results, prov)


def _bound_partial_disk(args) -> OutputRecord:
    echo = _echo_flags(args, "bound", "partial-disk", ("delta", "alpha", "curve"))
    spec = PartialDiskSpec(delta=args.delta)
    if args.curve is not None:
        alphas = alpha_grid(args.curve)
        upper = np.array([models.partial_disk_bound(spec, float(a)) for a in alphas])
        curve = BoundCurve(alphas=alphas, upper_bounds=upper)
        return _record(echo, _curve_results(curve), _CURVE_PROV)
    results = {"upper_bound": models.partial_disk_bound(spec, args.alpha)}
    prov = {"upper_bound": "upper bound for the unit disk with boundary diffusion "
                           "restricted to an arc"}
    return _record(echo, results, prov)


def _bound_needle(args) -> OutputRecord:
    echo = _echo_flags(args, "bound", "needle", ("L", "beta", "alpha", "curve"))
    spec = NeedleSpec(length=args.L, beta=args.beta)
    if args.curve is not None:
        alphas = alpha_grid(args.curve)
        upper = np.array([models.needle_bound(spec, float(a)) for a in alphas])
        curve = BoundCurve(alphas=alphas, upper_bounds=upper)
        return _record(echo, _curve_results(curve), _CURVE_PROV)
    results = {
        "gamma_needle": models.needle_gamma(spec),
        "regime": models.needle_regime(spec).value,
        "upper_bound": models.needle_bound(spec, args.alpha),
    }
    prov = {
        "gamma_needle": "smallest positive root of the needle secular equation",
        "regime": "which term of the needle bound dominates across alpha",
        "upper_bound": "upper bound for the disk with an attached needle",
    }
    return _record(echo, results, prov)


def _bound_generic(args) -> OutputRecord:
    echo = _echo_flags(args, "bound", "generic",
                       ("c_omega", "c_sigma", "k", "k1", "k2", "alpha", "curve"))
    consts = BoundConstants(c_omega=args.c_omega, c_sigma=args.c_sigma,
                            k_sigma_omega=args.k, k1=args.k1, k2=args.k2)
    if args.curve is not None:
        curve = bound_curve(consts, args.curve)
        return _record(echo, _curve_results(curve), _CURVE_PROV)
    results = {"upper_bound": interpolation_bound(consts, args.alpha)}
    prov = {"upper_bound": "interpolation bound evaluated at the supplied constants"}
    return _record(echo, results, prov)


_BOUND_HANDLERS = {
    "ball": _bound_ball,
    "manifold": _bound_manifold,
    "partial-disk": _bound_partial_disk,
    "needle": _bound_needle,
    "generic": _bound_generic,
}


# --------------------------------------------------------------- figure

def _cmd_figure(args) -> OutputRecord:
    echo = _echo_flags(args, "figure", args.which, ("n",))
    if args.which == "fig1":
        echo["strict_scan"] = bool(args.strict_scan)
        curve = disk.exact_curve(args.n, _disk_cfg(), args.strict_scan)
        return _record(echo, _curve_results(curve, with_exact=True), _CURVE_PROV)
    delta = {"fig2a": 0.5, "fig2b": 0.9}[args.which]
    echo["delta"] = delta
    spec = PartialDiskSpec(delta=delta)
    alphas = alpha_grid(args.n)
    upper = np.array([models.partial_disk_bound(spec, float(a)) for a in alphas])
    curve = BoundCurve(alphas=alphas, upper_bounds=upper)
    return _record(echo, _curve_results(curve), _CURVE_PROV)


# ---------------------------------------------------------------- solve

def _solve_neumann_gap(args) -> OutputRecord:
    echo = {"command": "solve", "subcommand": "neumann-gap"}
    m_max = _env_m_max()
    if m_max is not None:
        echo["m_max"] = m_max
    sigma, mode, rr = disk._neumann_detail(m_max if m_max is not None else disk._DEFAULT_M_MAX)
    results = {
        "sigma_omega": float(sigma),
        "mode": int(mode),
        "residual": float(rr.residual),
        "bracket_lo": float(rr.bracket[0] ** 2),
        "bracket_hi": float(rr.bracket[1] ** 2),
        "converged": bool(rr.converged),
    }
    prov = {
        "sigma_omega": "first nonzero Neumann Laplacian eigenvalue of the unit disk",
        "mode": "angular mode attaining the eigenvalue",
        "residual": "derivative of the order-m Bessel function at the computed root",
        "bracket_lo": "lower end of the enclosing interval, eigenvalue scale",
        "bracket_hi": "upper end of the enclosing interval, eigenvalue scale",
        "converged": "whether bisection reached the requested tolerance",
    }
    return _record(echo, results, prov)


def _solve_disk_gap(args) -> OutputRecord:
    echo = {"command": "solve", "subcommand": "disk-gap", "alpha": args.alpha,
            "strict_scan": bool(args.strict_scan)}
    m_max = _env_m_max()
    if m_max is not None:
        echo["m_max"] = m_max
    alpha = disk._check_alpha_halfopen(args.alpha)
    lam, mode, rr = disk._gap_detail(alpha, _disk_cfg(), args.strict_scan)
    results = {
        "lambda_gap": float(lam),
        "mode": int(mode),
        "c_alpha": 1.0 / float(lam),
        "residual": float(rr.residual),
        "bracket_lo": float(rr.bracket[0] ** 2),
        "bracket_hi": float(rr.bracket[1] ** 2),
        "converged": bool(rr.converged),
    }
    prov = {
        "lambda_gap": "smallest positive eigenvalue of the sticky-reflecting "
                      "disk generator at the given alpha",
        "mode": "angular mode attaining the eigenvalue",
        "c_alpha": "optimal Poincaré constant, reciprocal of the eigenvalue",
        "residual": "secular function value at the computed root",
        "bracket_lo": "lower end of the enclosing interval, eigenvalue scale",
        "bracket_hi": "upper end of the enclosing interval, eigenvalue scale",
        "converged": "whether bisection reached the requested tolerance",
    }
    return _record(echo, results, prov)


def _solve_needle_gamma(args) -> OutputRecord:
    echo = {"command": "solve", "subcommand": "needle-gamma", "L": args.L}
    length = _require_positive("L", args.L)
    rr = models._needle_gamma_search(length, models._NEEDLE_GAMMA_CFG)
    results = {
        "gamma_needle": float(rr.root),
        "residual": float(rr.residual),
        "bracket_lo": float(rr.bracket[0]),
        "bracket_hi": float(rr.bracket[1]),
        "converged": bool(rr.converged),
    }
    prov = {
        "gamma_needle": "smallest positive root of the needle secular equation",
        "residual": "secular function value at the computed root",
        "bracket_lo": "lower end of the enclosing interval",
        "bracket_hi": "upper end of the enclosing interval",
        "converged": "whether bisection reached the requested tolerance",
    }
    return _record(echo, results, prov)


def _solve_partial_threshold(args) -> OutputRecord:
    echo = {"command": "solve", "subcommand": "partial-threshold"}
    rr = models._threshold_detail()
    results = {
        "delta_star": float(rr.root),
        "residual": float(rr.residual),
        "bracket_lo": float(rr.bracket[0]),
        "bracket_hi": float(rr.bracket[1]),
        "converged": bool(rr.converged),
    }
    prov = {
        "delta_star": "smallest arc fraction whose boundary constant reaches "
                      "the bulk-plus-trace level, the continuity threshold",
        "residual": "defect of the threshold equation at the computed root",
        "bracket_lo": "lower end of the enclosing interval",
        "bracket_hi": "upper end of the enclosing interval",
        "converged": "whether bisection reached the requested tolerance",
    }
    return _record(echo, results, prov)


_SOLVE_HANDLERS = {
    "neumann-gap": _solve_neumann_gap,
    "disk-gap": _solve_disk_gap,
    "needle-gamma": _solve_needle_gamma,
    "partial-threshold": _solve_partial_threshold,
}


# --------------------------------------------------------------- parser

def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="PATH", default=None,
                        help="write the output to PATH instead of stdout")
    common.add_argument("--json", action="store_true",
                        help="emit the full record (echo, results, provenance) as JSON")

    parser = argparse.ArgumentParser(
        prog="stickygap",
        description="Upper bounds on the optimal Poincaré constant for Brownian "
                    "motion with sticky-reflecting boundary diffusion.")
    sub = parser.add_subparsers(dest="command", required=True)

    bound = sub.add_parser("bound", help="evaluate an upper bound for one model")
    bsub = bound.add_subparsers(dest="model", required=True)

    p = bsub.add_parser("ball", parents=[common],
                        help="unit ball in R^d, diffusion on the whole sphere")
    p.add_argument("--d", type=int, required=True, help="dimension, integer >= 2")
    p.add_argument("--beta", type=float, required=True, help="boundary diffusivity")
    p.add_argument("--c-omega", type=float, default=None,
                   help="bulk Neumann Poincaré constant (required for d >= 3)")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--gamma", type=float, help="inward push rate; sets alpha = gamma/(d+gamma)")
    g.add_argument("--curve", type=int, metavar="N", help="emit an N-point alpha curve as CSV")

    p = bsub.add_parser("manifold", parents=[common],
                        help="compact manifold with curvature lower bounds")
    p.add_argument("--d", type=int, required=True, help="dimension, integer >= 2")
    p.add_argument("--k-r", type=float, required=True, help="Ricci curvature lower bound")
    p.add_argument("--k-2", type=float, required=True,
                   help="second-fundamental-form lower bound")
    p.add_argument("--c-omega", type=float, required=True, help="bulk Poincaré constant")
    p.add_argument("--c-sigma", type=float, required=True, help="boundary Poincaré constant")
    p.add_argument("--vol-ratio", type=float, required=True,
                   help="volume ratio |Omega| / |boundary|")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--alpha", type=float, help="mixing weight in (0, 1)")
    g.add_argument("--curve", type=int, metavar="N", help="emit an N-point alpha curve as CSV")

    p = bsub.add_parser("partial-disk", parents=[common],
                        help="unit disk, boundary diffusion on an arc")
    p.add_argument("--delta", type=float, required=True,
                   help="arc fraction of the circle, in (0, 1)")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--alpha", type=float, help="mixing weight in (0, 1)")
    g.add_argument("--curve", type=int, metavar="N", help="emit an N-point alpha curve as CSV")

    p = bsub.add_parser("needle", parents=[common],
                        help="unit disk with an attached one-dimensional needle")
    p.add_argument("--L", type=float, required=True, help="needle length")
    p.add_argument("--beta", type=float, required=True, help="boundary diffusivity")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--alpha", type=float, help="mixing weight in (0, 1)")
    g.add_argument("--curve", type=int, metavar="N", help="emit an N-point alpha curve as CSV")

    p = bsub.add_parser("generic", parents=[common],
                        help="interpolation bound from the five raw constants")
    p.add_argument("--c-omega", type=float, required=True, help="bulk Poincaré constant")
    p.add_argument("--c-sigma", type=float, required=True, help="boundary Poincaré constant")
    p.add_argument("--k", type=float, required=True,
                   help="boundary-by-bulk control constant (inf allowed)")
    p.add_argument("--k1", type=float, required=True, help="bulk trace-defect constant")
    p.add_argument("--k2", type=float, required=True, help="boundary trace-defect constant")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--alpha", type=float, help="mixing weight in (0, 1)")
    g.add_argument("--curve", type=int, metavar="N", help="emit an N-point alpha curve as CSV")

    figure = sub.add_parser("figure", help="emit figure-reproduction data as CSV")
    fsub = figure.add_subparsers(dest="which", required=True)
    p = fsub.add_parser("fig1", parents=[common],
                        help="disk: exact constant vs closed-form bound")
    p.add_argument("--n", type=int, required=True, help="number of alpha samples")
    p.add_argument("--strict-scan", action="store_true",
                   help="scan every angular mode instead of stopping early")
    for name, blurb in (("fig2a", "partial disk, delta = 0.5 (discontinuous regime)"),
                        ("fig2b", "partial disk, delta = 0.9 (continuous regime)")):
        p = fsub.add_parser(name, parents=[common], help=blurb)
        p.add_argument("--n", type=int, required=True, help="number of alpha samples")

    solve = sub.add_parser("solve", help="run one of the root solvers")
    ssub = solve.add_subparsers(dest="which", required=True)
    ssub.add_parser("neumann-gap", parents=[common],
                    help="first nonzero Neumann eigenvalue of the unit disk")
    p = ssub.add_parser("disk-gap", parents=[common],
                        help="smallest disk eigenvalue at a given alpha")
    p.add_argument("--alpha", type=float, required=True, help="mixing weight in [0, 1)")
    p.add_argument("--strict-scan", action="store_true",
                   help="scan every angular mode instead of stopping early")
    p = ssub.add_parser("needle-gamma", parents=[common],
                        help="smallest root of the needle secular equation")
    p.add_argument("--L", type=float, required=True, help="needle length")
    ssub.add_parser("partial-threshold", parents=[common],
                    help="arc fraction where the partial-disk bound becomes continuous")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "bound":
            record = _BOUND_HANDLERS[args.model](args)
        elif args.command == "figure":
            record = _cmd_figure(args)
        else:
            record = _SOLVE_HANDLERS[args.which](args)
        payload = _render_json(record) if args.json else _render_text(record)
        _emit(payload, args.out)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NoRootFoundError, NonFiniteError, InvariantViolationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return 4
    return 0


if __name__ == "__main__":
    sys.exit(main())
