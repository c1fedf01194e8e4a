"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

import numpy as np

from . import area as ar
from .concave import ConcaveMapSpec, SchwarzSpec, extremal_F, f_theta_series
from .harness import (
    GridSpec,
    SUITES,
    convex_quotient,
    koebe_inverse_quotient,
    koebe_quotient,
    overall_pass,
    quotient_prime,
    quotient_series,
    run_suites,
)
from .hypergeom import UnitModulusParameter, coefficient_A, coefficient_B
from .report import _jsonable, reports_to_csv, reports_to_json, rows_to_csv
from .series import (
    TruncatedSeries,
    dirichlet_parseval,
    series_reciprocal,
    series_shift_down,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
AREA_FAMILIES = ("identity", "koebe", "koebe-inverse", "convex", "f-theta", "concave")
AREA_METHODS = ("green", "parseval", "grid2d", "all")


class UsageError(ValueError):
    pass


def _float_list(text: str) -> tuple:
    try:
        return tuple(float(v) for v in text.split(",") if v.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="concave-dirichlet",
                                description="Coefficients, areas and claim sweeps for "
                                            "concave univalent maps.")
    p.add_argument("--seed", type=int, default=GridSpec.seed, help="RNG seed (default 7)")
    p.add_argument("--format", dest="output_format", choices=("json", "csv", "pretty"),
                   default="pretty")
    p.add_argument("-o", "--output", help="write output here instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("coeffs", help="table of A_n(alpha, x) and B_n(alpha, x)")
    c.add_argument("--alpha", type=float, required=True)
    c.add_argument("--gamma", type=float, default=0.0, help="x = exp(i gamma)")
    c.add_argument("--n", type=int, default=10, help="largest n")

    a = sub.add_parser("area", help="Dirichlet area of a quotient map on |z| < r")
    a.add_argument("--family", choices=AREA_FAMILIES, required=True)
    a.add_argument("--r", type=float, required=True)
    a.add_argument("--method", choices=AREA_METHODS, default="all")
    a.add_argument("--alpha", type=float, default=2.0)
    a.add_argument("--gamma", type=float, default=0.0)
    a.add_argument("--t", type=float, default=0.0, help="Schwarz map z + t(z^2 - z)")
    a.add_argument("--theta", type=float, default=0.0)

    v = sub.add_parser("verify", help="run claim sweeps")
    v.add_argument("suite", choices=tuple(SUITES) + ("all",))
    v.add_argument("--alphas", type=_float_list)
    v.add_argument("--gamma-count", type=int)
    v.add_argument("--n-max", type=int)
    v.add_argument("--trials", type=int)
    v.add_argument("--r-values", type=_float_list)
    v.add_argument("--table-csv", help="also write the bound comparison rows as CSV")

    b = sub.add_parser("bound", help="gamma_0, E_0 and the constant M")
    b.add_argument("--alpha", type=float, required=True)
    b.add_argument("--b-abs", type=float, required=True)
    b.add_argument("--nodes", type=int, default=4097)
    return p


# -- commands ----------------------------------------------------------------

def cmd_coeffs(args) -> tuple[list[dict], int]:
    alpha = args.alpha
    if not (-1 < alpha < 1 or 1 < alpha <= 2):
        raise UsageError("alpha must lie in (-1, 1) or (1, 2]")
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    x = UnitModulusParameter(args.gamma).x
    rows = []
    for n in range(1, args.n + 1):
        A = complex(coefficient_A(n, alpha, x))
        B = complex(coefficient_B(n, alpha, x))
        rows.append({"n": n, "A_re": A.real, "A_im": A.imag, "B_re": B.real, "B_im": B.imag})
    return rows, EXIT_OK


def _area_map(args) -> ar.AnalyticMap:
    fam = args.family
    if fam == "identity":
        s = TruncatedSeries.identity()
        return ar.AnalyticMap(lambda z: z, lambda z: np.ones_like(z), "z", s)
    if fam == "koebe":
        return koebe_quotient()
    if fam == "koebe-inverse":
        return koebe_inverse_quotient()
    if fam == "convex":
        return convex_quotient()
    if fam == "f-theta":
        q = series_reciprocal(series_shift_down(f_theta_series(args.theta, 97)))
        q = TruncatedSeries(q.coeffs[:-1])
        return ar.AnalyticMap.from_series(q, "z/f_theta")
    spec = ConcaveMapSpec(args.alpha, UnitModulusParameter(args.gamma),
                          schwarz=SchwarzSpec(args.t))
    phi, gp = spec.schwarz, quotient_prime(spec)
    return ar.AnalyticMap(lambda z: phi(z) / extremal_F(spec, phi(z)),
                          lambda z: gp(phi(z)) * phi.deriv(z), "phi/f", quotient_series(spec))


def cmd_area(args) -> tuple[list[dict], int]:
    if not 0 < args.r < 1:
        raise UsageError("--r must lie in (0, 1)")
    g = _area_map(args)
    methods = ("green", "parseval", "grid2d") if args.method == "all" else (args.method,)
    rows = []
    for m in methods:
        if m == "green":
            res = ar.area_green(g, args.r)
            rows.append({"method": m, "value": res.value, "est_error": res.est_error})
        elif m == "grid2d":
            res = ar.area_grid2d(g, args.r)
            rows.append({"method": m, "value": res.value, "est_error": res.est_error})
        else:
            rows.append({"method": m, "value": dirichlet_parseval(g.series, args.r),
                         "est_error": 0.0})
    for row in rows:
        row.update(family=args.family, r=args.r)
    return rows, EXIT_OK


def grid_from_args(args) -> GridSpec:
    grid = GridSpec(seed=args.seed)
    overrides = {}
    if args.alphas is not None:
        overrides["alpha_values"] = args.alphas
    if args.gamma_count is not None:
        overrides["gamma_count"] = args.gamma_count
    if args.n_max is not None:
        overrides["n_max"] = args.n_max
    if args.trials is not None:
        overrides["trials"] = args.trials
    if args.r_values is not None:
        overrides["r_values"] = args.r_values
    return replace(grid, **overrides)


def cmd_bound(args) -> tuple[list[dict], int]:
    res = ar.M_bound(args.alpha, args.b_abs, nodes=args.nodes)
    return [{"alpha": res.alpha, "b_abs": res.b_abs, "gamma0": res.gamma0,
             "E0_scan": res.E0_scan, "E0_endpoint": res.E0_endpoint,
             "argmax": res.argmax, "M": res.M}], EXIT_OK


# -- output ------------------------------------------------------------------

def _pretty_rows(rows: list[dict]) -> str:
    if not rows:
        return "(no rows)\n"
    cols = list(rows[0])

    def fmt(v):
        if isinstance(v, float):
            return f"{v:.12g}"
        return "-" if v is None else str(v)

    cells = [[fmt(r.get(c)) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(cols, widths))]
    lines += ["  ".join(v.rjust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


def render_rows(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_jsonable(rows), indent=2) + "\n"
    if fmt == "csv":
        return rows_to_csv(rows)
    return _pretty_rows(rows)


def render_reports(reports, fmt: str) -> str:
    if fmt == "json":
        return reports_to_json(reports)
    if fmt == "csv":
        return reports_to_csv(reports)
    out = [r.summary_line() for r in reports]
    for r in reports:
        if r.claim_id == "area.bound_comparison":
            cols = ("alpha", "gamma", "t", "r", "quadrature", "closed_form", "M_pi_r2",
                    "rel_dev_closed", "rel_dev_bound", "exceeds_bound")
            out.append("")
            out.append(r.notes)
            out.append(_pretty_rows([{c: row[c] for c in cols} for row in r.params["rows"]])
                       .rstrip("\n"))
    failed = sum(1 for r in reports if not r.passed and not r.informational)
    out.append(f"\n{len(reports)} claims, {failed} failed")
    return "\n".join(out) + "\n"


def _emit(text: str, path: str | None):
    if path:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        if args.command == "verify":
            grid = grid_from_args(args)
            reports = run_suites(args.suite, grid)
            _emit(render_reports(reports, args.output_format), args.output)
            if args.table_csv:
                rows = [row for r in reports if r.claim_id == "area.bound_comparison"
                        for row in r.params["rows"]]
                with open(args.table_csv, "w", newline="") as fh:
                    fh.write(rows_to_csv(rows))
            return EXIT_OK if overall_pass(reports) else EXIT_FAIL
        handler = {"coeffs": cmd_coeffs, "area": cmd_area, "bound": cmd_bound}[args.command]
        rows, code = handler(args)
    except (UsageError, ValueError, ar.SingularParameterError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(render_rows(rows, args.output_format), args.output)
    return code


if __name__ == "__main__":
    sys.exit(main())
