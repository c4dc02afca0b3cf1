"""Command-line front-end: solve, coeffs, basis, validate.

All numeric output goes to CSV files with a one-line header, '.' decimal
separator and 17 significant digits, so two runs with the same configuration
produce byte-identical files and any plotting tool can re-create the
convergence and basis figures from them.

Exit codes: 0 success, 1 validation failure, 2 configuration error,
3 quadrature non-convergence (files are still written).
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np

from .expressions import ExpressionError, parse_expression, to_callable
from .sobolev import (
    connection_asymptotic,
    connection_ratio,
    connection_recurrence,
    sobolev_basis,
    sobolev_coeffs,
    sobolev_eval_all,
)
from .solver import BVProblem, builtin_problem, partial_sum, sobolev_error, solve
from .validation import run_suites

__all__ = ["RunConfig", "main", "run_solve", "run_coeffs", "run_basis", "run_validate"]

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_CONFIG = 2
EXIT_QUADRATURE = 3

ENV_OUT_DIR = "LAGSOB_OUT_DIR"

COEFF_MODE_LIMIT = 30


@dataclass
class RunConfig:
    command: str
    lam: float = 1.0
    n_max: int = 20
    quad_m0: int = 32
    quad_tol: float = 1e-12
    problem: Optional[str] = None
    f_expr: Optional[str] = None
    u_expr: Optional[str] = None
    du_expr: Optional[str] = None
    x_min: float = 0.0
    x_max: float = 20.0
    count: int = 401
    out_dir: Path = field(default_factory=Path.cwd)


def _fmt(v: float) -> str:
    return f"{v:.17g}"


def _write_csv(path: Path, header: str, rows) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="\n") as fh:
        fh.write(header + "\n")
        for row in rows:
            fh.write(",".join(row) + "\n")


def _config_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_CONFIG


def _make_problem(config: RunConfig):
    """BVProblem from --problem or --f-expr (plus optional exact solution)."""
    if (config.problem is None) == (config.f_expr is None):
        raise ValueError("exactly one of --problem and --f-expr must be given")
    if config.problem is not None:
        return builtin_problem(config.problem)
    try:
        rhs = to_callable(parse_expression(config.f_expr))
    except ExpressionError as exc:
        raise ValueError(f"--f-expr: {exc}")
    exact = exact_deriv = None
    if config.u_expr is not None:
        if config.du_expr is None:
            raise ValueError("--u-expr requires --du-expr for error reporting")
        try:
            exact = to_callable(parse_expression(config.u_expr))
        except ExpressionError as exc:
            raise ValueError(f"--u-expr: {exc}")
        try:
            exact_deriv = to_callable(parse_expression(config.du_expr))
        except ExpressionError as exc:
            raise ValueError(f"--du-expr: {exc}")
    return BVProblem(
        lam=config.lam, rhs=rhs, exact=exact, exact_deriv=exact_deriv, label="custom"
    )


def run_solve(config: RunConfig) -> int:
    try:
        problem = _make_problem(config)
    except ValueError as exc:
        return _config_error(str(exc))
    if config.problem is not None and config.lam != problem.lam:
        return _config_error(
            f"--problem {config.problem} fixes --lambda {problem.lam:g} "
            f"(its attached exact solution depends on it)"
        )

    sol = solve(problem, n_max=config.n_max, quad_m0=config.quad_m0, quad_tol=config.quad_tol)
    out = Path(config.out_dir)

    have_exact = problem.exact is not None and problem.exact_deriv is not None

    # coeffs.csv: one extra connection coefficient so every row has its a_n.
    a_full = connection_recurrence(problem.lam, config.n_max + 1).a
    rows = []
    for n in range(config.n_max + 1):
        r = sol.quad_report[n]
        rows.append(
            [
                str(n),
                _fmt(a_full[n]),
                _fmt(sol.g[n]),
                _fmt(sol.fhat[n]),
                _fmt(sol.basis.s[n]),
                _fmt(sol.uhat[n]),
                _fmt(r.achieved_tol),
            ]
        )
    _write_csv(out / "coeffs.csv", "n,a_n,g_n,f_n,s_n,uhat_n,quad_tol_achieved", rows)

    # solution.csv on the sample grid.
    grid = np.linspace(config.x_min, config.x_max, config.count)
    approx = partial_sum(sol, config.n_max, grid)
    if have_exact:
        exact_vals = np.asarray(problem.exact(grid), dtype=float)
        header = f"x,approx_{config.n_max},u_exact,abs_err"
        rows = [
            [_fmt(x), _fmt(a), _fmt(u), _fmt(abs(a - u))]
            for x, a, u in zip(grid, approx, exact_vals)
        ]
    else:
        header = f"x,approx_{config.n_max}"
        rows = [[_fmt(x), _fmt(a)] for x, a in zip(grid, approx)]
    _write_csv(out / "solution.csv", header, rows)

    # convergence.csv needs the exact solution.
    eps = None
    if have_exact:
        eps = [sobolev_error(sol, n) for n in range(config.n_max + 1)]
        rows = [
            [str(n), _fmt(e), _fmt(math.log10(e)) if e > 0.0 else "-inf"]
            for n, e in enumerate(eps)
        ]
        _write_csv(out / "convergence.csv", "n,eps_n,log10_eps_n", rows)

    quad_ok = sol.quad_converged and all(r.converged for r in sol.norm_report.values())

    label = problem.label or "custom"
    print(f"problem {label}: lam={problem.lam:g}, n_max={config.n_max}")
    print(f"  uhat_0 = {sol.uhat[0]:.12g}, uhat_{config.n_max} = {sol.uhat[config.n_max]:.12g}")
    if eps is not None:
        print(f"  eps_0 = {eps[0]:.6e}, eps_{config.n_max} = {eps[config.n_max]:.6e}")
    worst = max(r.achieved_tol for r in sol.quad_report)
    print(f"  quadrature: worst achieved tolerance {worst:.3e} "
          f"({'converged' if quad_ok else 'NOT converged at cap'})")
    print(f"  wrote {out / 'coeffs.csv'}, {out / 'solution.csv'}"
          + (f", {out / 'convergence.csv'}" if eps is not None else ""))
    return EXIT_OK if quad_ok else EXIT_QUADRATURE


def run_coeffs(config: RunConfig) -> int:
    a_rec = connection_recurrence(config.lam, config.n_max + 1).a
    rows = []
    for n in range(config.n_max + 1):
        a_rat = connection_ratio(config.lam, n)
        asym = connection_asymptotic(config.lam, n) if n >= 1 else math.nan
        rows.append(
            [str(n), _fmt(a_rec[n]), _fmt(a_rat), _fmt(abs(a_rec[n] - a_rat)), _fmt(asym)]
        )
    out = Path(config.out_dir)
    _write_csv(out / "an_table.csv", "n,a_rec,a_ratio,abs_diff,a_asymptotic", rows)
    print(f"wrote {out / 'an_table.csv'} ({config.n_max + 1} rows, lam={config.lam:g})")
    return EXIT_OK


def run_basis(config: RunConfig) -> int:
    if config.n_max > COEFF_MODE_LIMIT:
        return _config_error(
            f"--nmax {config.n_max} exceeds coefficient mode limit {COEFF_MODE_LIMIT}; "
            f"sample larger bases pointwise via 'solve' outputs instead"
        )
    basis = sobolev_basis(config.lam, config.n_max)
    out = Path(config.out_dir)

    header = "n," + ",".join(f"c{k}" for k in range(config.n_max + 1))
    rows = []
    for n in range(config.n_max + 1):
        c = sobolev_coeffs(basis, n).coeffs
        padded = [_fmt(v) for v in c] + [""] * (config.n_max - n)
        rows.append([str(n)] + padded)
    _write_csv(out / "basis_coeffs.csv", header, rows)

    grid = np.linspace(config.x_min, config.x_max, config.count)
    vals = sobolev_eval_all(basis, config.n_max, grid)
    header = "x," + ",".join(f"S{k}" for k in range(config.n_max + 1))
    rows = [
        [_fmt(x)] + [_fmt(vals[k, i]) for k in range(config.n_max + 1)]
        for i, x in enumerate(grid)
    ]
    _write_csv(out / "basis_samples.csv", header, rows)
    print(f"wrote {out / 'basis_coeffs.csv'} and {out / 'basis_samples.csv'} (lam={config.lam:g})")
    return EXIT_OK


def run_validate(config: RunConfig, perturb_a0: float = 0.0) -> int:
    results = run_suites(config.lam, perturb_a0=perturb_a0)
    width = max(len(name) for name, _, _ in results)
    failed = []
    for name, ok, detail in results:
        print(f"{name:<{width}}  {'PASS' if ok else 'FAIL'}  {detail}")
        if not ok:
            failed.append(name)
    if failed:
        print(f"validation failed: {failed[0]}", file=sys.stderr)
        return EXIT_VALIDATION
    print(f"all {len(results)} suites passed (lam={config.lam:g})")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lagsob",
        description="Laguerre-Sobolev basis and diagonalized spectral solver for "
        "-u'' + (lambda/x) u = f on (0, inf)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, grid=False):
        p.add_argument("--lambda", dest="lam", type=float, default=1.0,
                       help="potential strength lambda > 0 (default 1)")
        p.add_argument("--nmax", "--n-max", dest="n_max", type=int, default=20,
                       help="highest basis index (default 20)")
        p.add_argument("--out-dir", dest="out_dir", type=Path, default=None,
                       help=f"output directory (default cwd; env {ENV_OUT_DIR} overrides)")
        if grid:
            p.add_argument("--x-min", dest="x_min", type=float, default=0.0)
            p.add_argument("--x-max", dest="x_max", type=float, default=20.0)
            p.add_argument("--count", dest="count", type=int, default=401,
                           help="number of sample-grid points (default 401)")

    p_solve = sub.add_parser("solve", help="solve a boundary value problem")
    common(p_solve, grid=True)
    p_solve.add_argument("--quad-m0", dest="quad_m0", type=int, default=32,
                         help="initial quadrature size (default 32)")
    p_solve.add_argument("--quad-tol", dest="quad_tol", type=float, default=1e-12,
                         help="quadrature doubling tolerance (default 1e-12)")
    p_solve.add_argument("--problem", choices=["exp-decay", "rational-decay"],
                         help="builtin problem name")
    p_solve.add_argument("--f-expr", dest="f_expr", help="right-hand side f(x) as an expression")
    p_solve.add_argument("--u-expr", dest="u_expr", help="exact solution u(x) for error reporting")
    p_solve.add_argument("--du-expr", dest="du_expr", help="derivative u'(x), required with --u-expr")

    p_coeffs = sub.add_parser("coeffs", help="tabulate connection coefficients a_n")
    common(p_coeffs)

    p_basis = sub.add_parser("basis", help="emit basis coefficients and samples")
    common(p_basis, grid=True)

    p_validate = sub.add_parser("validate", help="run the identity validation suites")
    common(p_validate)

    return parser


def _resolve_out_dir(args) -> Path:
    env = os.environ.get(ENV_OUT_DIR)
    if env:
        return Path(env)
    if args.out_dir is not None:
        return Path(args.out_dir)
    return Path.cwd()


def config_from_args(args) -> RunConfig:
    cfg = RunConfig(command=args.command, lam=args.lam, n_max=args.n_max,
                    out_dir=_resolve_out_dir(args))
    for name in ("quad_m0", "quad_tol", "problem", "f_expr", "u_expr", "du_expr",
                 "x_min", "x_max", "count"):
        if hasattr(args, name):
            setattr(cfg, name, getattr(args, name))
    return cfg


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = config_from_args(args)
        if config.lam <= 0.0:
            return _config_error("--lambda must be > 0")
        if config.n_max < 0:
            return _config_error("--nmax must be >= 0")
        if config.command == "solve":
            return run_solve(config)
        if config.command == "coeffs":
            return run_coeffs(config)
        if config.command == "basis":
            return run_basis(config)
        if config.command == "validate":
            return run_validate(config)
    except ValueError as exc:
        return _config_error(str(exc))
    raise AssertionError(f"unhandled command {config.command!r}")


if __name__ == "__main__":
    sys.exit(main())
