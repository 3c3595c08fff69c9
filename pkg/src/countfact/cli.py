"""Command-line front end.

Subcommands: coeffs, factorize, metrics, bounds, sweep, simulate.
Exit codes: 0 success, 1 invariant violation under --check, 2 usage error.
All numeric output is emitted at 17 significant digits with a '.' decimal
separator, which round-trips float64 bitwise.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import math
import os
import sys

import numpy as np

from . import bounds as bounds_mod
from . import factorizations as fz
from . import metrics as mt
from .mechanism import MechanismConfig, estimate_errors
from .sequences import coefficient_table
from .structmat import counting_matrix

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

SWEEP_HEADER = ("n", "method", "metric", "value", "residual", "predicted_residual")
BOUND_METRICS = ("nuclear_lb", "mathias_lb")
LOWER_BOUND_METHOD = "lower-bound"  # method column for bound rows


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _print_table(pairs) -> None:
    width = max(len(name) for name, _ in pairs)
    for name, value in pairs:
        text = _fmt(value) if isinstance(value, float) else str(value)
        print(f"{name:<{width}}  {text}")


def _run_checks(label: str, failures: list[str]) -> int:
    if failures:
        for message in failures:
            print(f"CHECK FAIL [{label}] {message}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    print(f"CHECK OK [{label}]")
    return EXIT_OK


# ---------------------------------------------------------------------------
# sweep machinery
# ---------------------------------------------------------------------------


def sweep_sizes(n_min: int, n_max: int, geometric: bool) -> list[int]:
    if not 1 <= n_min <= n_max:
        raise ValueError(f"need 1 <= n_min <= n_max, got {n_min}..{n_max}")
    if not geometric:
        return list(range(n_min, n_max + 1))
    sizes = []
    n = 1
    while n <= n_max:
        if n >= n_min:
            sizes.append(n)
        n *= 2
    return sizes


def sweep_rows(methods, metrics, sizes, threads: int = 1):
    """One (n, method, metric, value, residual, predicted) tuple per point,
    sorted by (method, metric, n) so the output is deterministic regardless
    of worker completion order."""
    method_metrics = [m for m in metrics if m in mt.METRICS]
    bound_metrics = [m for m in metrics if m in BOUND_METRICS]

    def method_point(method, n):
        report = mt.error_report(method, n)
        out = []
        if mt.MAXSE in method_metrics:
            out.append((n, method, mt.MAXSE, report.maxse, report.maxse_residual,
                        report.predicted_maxse_residual))
        if mt.MEANSE in method_metrics:
            out.append((n, method, mt.MEANSE, report.meanse, report.meanse_residual,
                        report.predicted_meanse_residual))
        return out

    def bound_point(n):
        report = bounds_mod.bound_report(n)
        out = []
        if "nuclear_lb" in bound_metrics:
            out.append((n, LOWER_BOUND_METHOD, "nuclear_lb", report.nuclear_lb,
                        report.nuclear_residual, bounds_mod.predicted_nuclear_residual()))
        if "mathias_lb" in bound_metrics:
            out.append((n, LOWER_BOUND_METHOD, "mathias_lb", report.mathias_lb,
                        report.mathias_residual, bounds_mod.predicted_mathias_residual()))
        return out

    tasks = []
    with concurrent.futures.ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        if method_metrics:
            tasks += [pool.submit(method_point, method, n)
                      for method in methods for n in sizes]
        if bound_metrics:
            tasks += [pool.submit(bound_point, n) for n in sizes]
        rows = [row for task in tasks for row in task.result()]
    rows.sort(key=lambda row: (row[1], row[2], row[0]))
    return rows


def write_sweep_csv(path: str, rows) -> None:
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(",".join(SWEEP_HEADER) + "\n")
        for n, method, metric, value, residual, predicted in rows:
            handle.write(
                f"{n},{method},{metric},{_fmt(value)},{_fmt(residual)},{_fmt(predicted)}\n"
            )


_PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd",
    "#ff7f0e", "#8c564b", "#17becf", "#e377c2",
)


def write_sweep_svg(path: str, rows) -> None:
    """Residual vs log2(n) line chart: one polyline per (method, metric)
    series, one dashed horizontal line at each series' predicted residual."""
    series: dict[tuple[str, str], list] = {}
    for n, method, metric, _value, residual, predicted in rows:
        series.setdefault((method, metric), []).append((math.log2(n), residual, predicted))
    for points in series.values():
        points.sort()

    width, height = 960, 540
    left, right, top, bottom = 70, 200, 30, 50
    xs = [x for points in series.values() for x, _, _ in points]
    ys = [y for points in series.values() for _, y, _ in points]
    ys += [p for points in series.values() for _, _, p in points]
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    if x_hi - x_lo < 1e-9:
        x_lo, x_hi = x_lo - 0.5, x_hi + 0.5
    if y_hi - y_lo < 1e-9:
        y_lo, y_hi = y_lo - 0.5, y_hi + 0.5
    pad = 0.05 * (y_hi - y_lo)
    y_lo, y_hi = y_lo - pad, y_hi + pad

    def px(x: float) -> float:
        return left + (x - x_lo) / (x_hi - x_lo) * (width - left - right)

    def py(y: float) -> float:
        return height - bottom - (y - y_lo) / (y_hi - y_lo) * (height - top - bottom)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}" '
        f'font-family="monospace" font-size="12">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{left}" y1="{height - bottom}" x2="{width - right}" '
        f'y2="{height - bottom}" stroke="black"/>',
        f'<line x1="{left}" y1="{top}" x2="{left}" y2="{height - bottom}" stroke="black"/>',
    ]
    for k in range(math.ceil(x_lo), math.floor(x_hi) + 1):
        x = px(k)
        parts.append(f'<line x1="{x:.1f}" y1="{height - bottom}" x2="{x:.1f}" '
                     f'y2="{height - bottom + 5}" stroke="black"/>')
        parts.append(f'<text x="{x:.1f}" y="{height - bottom + 18}" '
                     f'text-anchor="middle">2^{k}</text>')
    for i in range(7):
        y_val = y_lo + i * (y_hi - y_lo) / 6
        y = py(y_val)
        parts.append(f'<line x1="{left - 5}" y1="{y:.1f}" x2="{left}" y2="{y:.1f}" '
                     f'stroke="black"/>')
        parts.append(f'<text x="{left - 8}" y="{y + 4:.1f}" text-anchor="end">'
                     f'{y_val:.3f}</text>')
    parts.append(f'<text x="{(left + width - right) / 2:.1f}" y="{height - 8}" '
                 f'text-anchor="middle">n (log2 axis)</text>')
    parts.append(f'<text x="18" y="{(top + height - bottom) / 2:.1f}" text-anchor="middle" '
                 f'transform="rotate(-90 18 {(top + height - bottom) / 2:.1f})">'
                 f'value - log(n)/pi</text>')

    for i, ((method, metric), points) in enumerate(sorted(series.items())):
        color = _PALETTE[i % len(_PALETTE)]
        coords = " ".join(f"{px(x):.2f},{py(y):.2f}" for x, y, _ in points)
        parts.append(f'<polyline points="{coords}" fill="none" stroke="{color}" '
                     f'stroke-width="1.5"/>')
        predicted = points[0][2]
        y = py(predicted)
        parts.append(f'<line x1="{left}" y1="{y:.2f}" x2="{width - right}" y2="{y:.2f}" '
                     f'stroke="{color}" stroke-dasharray="6 4" stroke-width="1"/>')
        legend_y = top + 16 * i + 4
        parts.append(f'<line x1="{width - right + 10}" y1="{legend_y}" '
                     f'x2="{width - right + 34}" y2="{legend_y}" stroke="{color}" '
                     f'stroke-width="2"/>')
        parts.append(f'<text x="{width - right + 40}" y="{legend_y + 4}">'
                     f'{method}/{metric} (limit {predicted:.5f})</text>')
    parts.append("</svg>")
    with open(path, "w", encoding="utf-8") as handle:
        handle.write("\n".join(parts) + "\n")


def _append_csv_rows(path: str, rows) -> None:
    new_file = not os.path.exists(path)
    with open(path, "a", encoding="utf-8", newline="") as handle:
        if new_file:
            handle.write(",".join(SWEEP_HEADER) + "\n")
        for n, method, metric, value, residual, predicted in rows:
            handle.write(
                f"{n},{method},{metric},{_fmt(value)},{_fmt(residual)},{_fmt(predicted)}\n"
            )


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_coeffs(args) -> int:
    table = coefficient_table(args.n)
    print(f"coefficient table at n = {args.n}")
    print(f"{'k':>6} {'r':>24} {'rtilde':>24} {'d_sq[j=k+1]':>24} {'alpha[m=k+1]':>24}")
    for k in range(args.n):
        print(f"{k:>6} {_fmt(table.r[k]):>24} {_fmt(table.rtilde[k]):>24} "
              f"{_fmt(table.d_sq[k]):>24} {_fmt(table.alpha[k]):>24}")
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as handle:
            handle.write("k,r,rtilde,d_sq,alpha\n")
            for k in range(args.n):
                handle.write(f"{k},{_fmt(table.r[k])},{_fmt(table.rtilde[k])},"
                             f"{_fmt(table.d_sq[k])},{_fmt(table.alpha[k])}\n")
    if args.check:
        return _run_checks("coeffs", _coeff_checks(table))
    return EXIT_OK


def _coeff_checks(table) -> list[str]:
    failures = []
    n = table.n
    if table.r[0] != 1.0 or (n > 1 and np.any(np.diff(table.r) >= 0)):
        failures.append("r must start at 1 and be strictly decreasing")
    if n > 1:
        k = np.arange(1, n)
        r_sq = table.r[1:] ** 2
        lower = 1.0 / (np.pi * (k + 4.0 / np.pi - 1.0))
        upper = 1.0 / (np.pi * (k + 0.25))
        if np.any(r_sq < lower * (1 - 1e-12)) or np.any(r_sq > upper * (1 + 1e-12)):
            failures.append("squared coefficients violate the Wallis sandwich")
    prefix_gap = np.abs(np.cumsum(table.rtilde) - table.r).max()
    if prefix_gap > 1e-13:
        failures.append(f"prefix sums of rtilde deviate from r by {prefix_gap:.3e}")
    if table.d_sq[-1] != 1.0 or (n > 1 and np.any(np.diff(table.d_sq) >= 0)):
        failures.append("d_sq must be strictly decreasing and end at 1")
    if n > 1:
        diff = table.d_sq[:-1] - table.d_sq[1:]
        expected = (table.r[1:] ** 2)[::-1]
        if np.any(np.abs(diff - expected) > 1e-14 * table.d_sq[:-1]):
            failures.append("adjacent d_sq differences do not match squared coefficients")
        if np.any(np.diff(table.alpha) <= 0):
            failures.append("alpha must be strictly increasing")
    if np.any(table.alpha < 1.0 - 1e-12) or np.any(table.alpha > 1.0663):
        failures.append("alpha left the interval [1, 1.0663]")
    return failures


def cmd_factorize(args) -> int:
    f = fz.factorize(args.method, args.n)
    report = mt.error_report(args.method, args.n, factorization=f)
    _print_table([
        ("method", f.method),
        ("n", f.n),
        ("inner_dim", f.inner_dim),
        ("max_row_norm_left", math.sqrt(float(np.max(f.row_norms_sq_left)))),
        ("max_col_norm_right", math.sqrt(float(np.max(f.col_norms_sq_right)))),
        ("frobenius_left", math.sqrt(f.frobenius_sq_left)),
        ("maxse", report.maxse),
        ("meanse", report.meanse),
    ])
    if args.dump:
        if args.n > fz.DENSE_BUDGET:
            print(f"error: --dump needs n <= {fz.DENSE_BUDGET}", file=sys.stderr)
            return EXIT_USAGE
        for side, mat in (("left", f.left), ("right", f.right)):
            path = f"{args.dump}_{side}.csv"
            np.savetxt(path, fz.to_dense(mat), fmt="%.17g", delimiter=",")
            print(f"wrote {path}")
    if args.check:
        failures = []
        if args.n <= fz.DENSE_BUDGET:
            deviation = fz.verify_reconstruction(f)
            if deviation > 1e-9:
                failures.append(f"reconstruction deviates by {deviation:.3e}")
        if args.method == fz.NSR:
            gap = np.abs(f.col_norms_sq_right - 1.0).max()
            if gap > 1e-12:
                failures.append(f"right-factor columns deviate from unit norm by {gap:.3e}")
        return _run_checks("factorize", failures)
    return EXIT_OK


def cmd_metrics(args) -> int:
    report = mt.error_report(args.method, args.n)
    pairs = [
        ("method", report.method),
        ("n", report.n),
        ("maxse", report.maxse),
        ("meanse", report.meanse),
        ("maxse_residual", report.maxse_residual),
        ("meanse_residual", report.meanse_residual),
        ("predicted_maxse_residual", report.predicted_maxse_residual),
        ("predicted_meanse_residual", report.predicted_meanse_residual),
    ]
    if report.closed_form_maxse is not None:
        pairs.append(("closed_form_maxse", report.closed_form_maxse))
    if report.closed_form_meanse is not None:
        pairs.append(("closed_form_meanse", report.closed_form_meanse))
    _print_table(pairs)
    if args.csv:
        offset = mt.residual_offset(args.n)
        rows = [
            (args.n, args.method, mt.MAXSE, report.maxse, report.maxse - offset,
             report.predicted_maxse_residual),
            (args.n, args.method, mt.MEANSE, report.meanse, report.meanse - offset,
             report.predicted_meanse_residual),
        ]
        _append_csv_rows(args.csv, rows)
    if args.check:
        return _run_checks("metrics", _metric_checks(args.method, args.n, report))
    return EXIT_OK


def _metric_checks(method: str, n: int, report) -> list[str]:
    failures = []
    if report.meanse > report.maxse * (1 + 1e-12):
        failures.append("meanse exceeds maxse")
    if report.closed_form_maxse is not None:
        rel = abs(report.maxse - report.closed_form_maxse) / report.closed_form_maxse
        tol = 1e-12 if method == fz.SQRT else 1e-9
        if rel > tol:
            failures.append(f"direct maxse deviates from closed form by {rel:.3e}")
    nuclear = bounds_mod.nuclear_lower_bound(n)
    if nuclear > report.maxse * (1 + 1e-9):
        failures.append("nuclear lower bound exceeds maxse")
    return failures


def cmd_bounds(args) -> int:
    report = bounds_mod.bound_report(args.n)
    pairs = [
        ("n", report.n),
        ("nuclear_lb", report.nuclear_lb),
        ("mathias_lb", report.mathias_lb),
        ("nuclear_residual", report.nuclear_residual),
        ("mathias_residual", report.mathias_residual),
        ("predicted_nuclear_residual", bounds_mod.predicted_nuclear_residual()),
        ("predicted_mathias_residual", bounds_mod.predicted_mathias_residual()),
    ]
    if report.g_n is not None:
        pairs.append(("g_n", report.g_n))
        pairs.append(("g_n_predicted", report.g_n_predicted))
    _print_table(pairs)
    if args.csv:
        rows = [
            (args.n, LOWER_BOUND_METHOD, "nuclear_lb", report.nuclear_lb,
             report.nuclear_residual, bounds_mod.predicted_nuclear_residual()),
            (args.n, LOWER_BOUND_METHOD, "mathias_lb", report.mathias_lb,
             report.mathias_residual, bounds_mod.predicted_mathias_residual()),
        ]
        _append_csv_rows(args.csv, rows)
    if args.check:
        failures = []
        if args.n >= 2 and report.nuclear_lb < report.mathias_lb:
            failures.append("nuclear bound fell below the weaker bound")
        if args.n <= 32:
            singular = np.linalg.svd(counting_matrix(args.n), compute_uv=False)
            oracle = float(singular.sum()) / args.n
            if abs(oracle - report.nuclear_lb) > 1e-8:
                failures.append("cosecant sum disagrees with the SVD oracle")
        return _run_checks("bounds", failures)
    return EXIT_OK


def cmd_sweep(args) -> int:
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    metrics = [m.strip() for m in args.metrics.split(",") if m.strip()]
    known = set(fz.METHODS) | {LOWER_BOUND_METHOD}
    if not methods:
        raise UsageError("empty method set")
    bad = [m for m in methods if m not in known]
    if bad:
        raise UsageError(f"unknown method(s): {', '.join(bad)}")
    bad = [m for m in metrics if m not in mt.METRICS + BOUND_METRICS]
    if bad:
        raise UsageError(f"unknown metric(s): {', '.join(bad)}")
    if not metrics:
        raise UsageError("empty metric set")
    try:
        sizes = sweep_sizes(args.n_min, args.n_max, args.geometric)
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    factor_methods = [m for m in methods if m in fz.METHODS]
    rows = sweep_rows(factor_methods, metrics, sizes, threads=args.threads)
    try:
        write_sweep_csv(args.out, rows)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"wrote {args.out} ({len(rows)} rows)")
    if args.svg:
        try:
            write_sweep_svg(args.svg, rows)
        except OSError as exc:
            print(f"error: cannot write {args.svg}: {exc}", file=sys.stderr)
            return EXIT_USAGE
        print(f"wrote {args.svg}")
    if args.check:
        return _run_checks("sweep", _sweep_checks(rows))
    return EXIT_OK


def _sweep_checks(rows) -> list[str]:
    """Ordering invariants at every sweep point."""
    failures = []
    by_point: dict[tuple[str, int], dict[str, float]] = {}
    sizes = set()
    for n, method, metric, value, _residual, _predicted in rows:
        by_point.setdefault((method, n), {})[metric] = value
        sizes.add(n)
    nuclear = {n: bounds_mod.nuclear_lower_bound(n) for n in sizes}
    for (method, n), values in sorted(by_point.items()):
        if method == LOWER_BOUND_METHOD:
            continue
        if mt.MAXSE in values and mt.MEANSE in values:
            if values[mt.MEANSE] > values[mt.MAXSE] * (1 + 1e-12):
                failures.append(f"meanse > maxse at ({method}, {n})")
        if mt.MAXSE in values and nuclear[n] > values[mt.MAXSE] * (1 + 1e-9):
            failures.append(f"nuclear bound above maxse at ({method}, {n})")
    for n in sorted(sizes):
        nsr_v = by_point.get((fz.NSR, n), {}).get(mt.MAXSE)
        sqrt_v = by_point.get((fz.SQRT, n), {}).get(mt.MAXSE)
        if n >= 4 and nsr_v is not None and sqrt_v is not None and nsr_v > sqrt_v:
            failures.append(f"normalized maxse above plain square root at n = {n}")
    return failures


def cmd_simulate(args) -> int:
    if args.input == "zeros":
        x = np.zeros(args.n)
    elif args.input == "ones":
        x = np.ones(args.n)
    else:
        try:
            x = np.loadtxt(args.input, delimiter=",", dtype=np.float64).reshape(-1)
        except OSError as exc:
            print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
            return EXIT_USAGE
        if x.shape != (args.n,):
            print(f"error: input length {x.size} != n = {args.n}", file=sys.stderr)
            return EXIT_USAGE
    f = fz.factorize(args.method, args.n)
    cfg = MechanismConfig(factorization=f, mu=args.mu, trials=args.trials,
                          seed=args.seed, input=x)
    result = estimate_errors(cfg)
    if np.isfinite(result.z_mean).all():
        z_summary = [
            ("max_abs_z_mean", float(np.abs(result.z_mean).max())),
            ("z_var_min", float(result.z_var.min())),
            ("z_var_max", float(result.z_var.max())),
        ]
    else:
        z_summary = []  # sigma = 0: no standardized deviations to report
    _print_table([
        ("method", args.method),
        ("n", args.n),
        ("mu", float(args.mu)),
        ("trials", args.trials),
        ("seed", args.seed),
        ("empirical_err_inf", result.empirical_err_inf),
        ("empirical_err_2", result.empirical_err_2),
        ("theory_err_inf", result.theory_err_inf),
        ("theory_err_2", result.theory_err_2),
    ] + z_summary)
    if args.csv:
        new_file = not os.path.exists(args.csv)
        with open(args.csv, "a", encoding="utf-8", newline="") as handle:
            if new_file:
                handle.write("n,method,mu,trials,seed,empirical_err_inf,"
                             "empirical_err_2,theory_err_inf,theory_err_2\n")
            handle.write(f"{args.n},{args.method},{_fmt(args.mu)},{args.trials},"
                         f"{args.seed},{_fmt(result.empirical_err_inf)},"
                         f"{_fmt(result.empirical_err_2)},{_fmt(result.theory_err_inf)},"
                         f"{_fmt(result.theory_err_2)}\n")
    if args.check:
        failures = []
        bound = 4.0 / math.sqrt(args.trials)
        spread = 5.0 / math.sqrt(args.trials)
        if np.isfinite(result.z_mean).all():
            if np.abs(result.z_mean).max() >= bound:
                failures.append("standardized deviations have biased mean")
            if result.z_var.min() <= 1 - spread or result.z_var.max() >= 1 + spread:
                failures.append("standardized deviations have off-unit variance")
        rerun = estimate_errors(cfg)
        if (rerun.empirical_err_inf != result.empirical_err_inf
                or rerun.empirical_err_2 != result.empirical_err_2):
            failures.append("rerun with the identical seed was not bit-identical")
        return _run_checks("simulate", failures)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="countfact",
        description="Factorizations of the prefix-sum counting matrix, their "
                    "error norms, lower bounds, sweeps, and a Gaussian-mechanism "
                    "simulator.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, csv_flag=True):
        p.add_argument("--check", action="store_true",
                       help="verify invariants; exit 1 on violation")
        if csv_flag:
            p.add_argument("--csv", metavar="PATH",
                           help="append result rows to a CSV file")

    p = sub.add_parser("coeffs", help="print the coefficient table at size n")
    p.add_argument("--n", type=int, required=True)
    add_common(p)
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("factorize", help="construct one factorization")
    p.add_argument("--method", required=True, choices=fz.METHODS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dump", metavar="PREFIX",
                   help="write PREFIX_left.csv / PREFIX_right.csv (17 significant digits)")
    add_common(p, csv_flag=False)
    p.set_defaults(func=cmd_factorize)

    p = sub.add_parser("metrics", help="error norms for one (method, n)")
    p.add_argument("--method", required=True, choices=fz.METHODS)
    p.add_argument("--n", type=int, required=True)
    add_common(p)
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("bounds", help="lower bounds at size n")
    p.add_argument("--n", type=int, required=True)
    add_common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("sweep", help="residual sweep over a grid of sizes")
    p.add_argument("--methods", default="sqrt,nsr,group-algebra",
                   help="comma-separated subset of: sqrt,nsr,group-algebra")
    p.add_argument("--metrics", default="maxse,meanse,nuclear_lb,mathias_lb",
                   help="comma-separated subset of: maxse,meanse,nuclear_lb,mathias_lb")
    p.add_argument("--n-min", type=int, default=4)
    p.add_argument("--n-max", type=int, default=8192)
    p.add_argument("--geometric", action=argparse.BooleanOptionalAction, default=True,
                   help="powers of two (default) vs every integer size")
    p.add_argument("--out", required=True, metavar="CSV", help="output CSV path")
    p.add_argument("--svg", metavar="SVG", help="optional SVG line chart")
    p.add_argument("--threads", type=int, default=4,
                   help="worker threads for sweep points")
    p.add_argument("--check", action="store_true",
                   help="verify ordering invariants at every point; exit 1 on violation")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("simulate", help="seeded Monte-Carlo of the Gaussian mechanism")
    p.add_argument("--method", required=True, choices=fz.METHODS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mu", type=float, default=1.0, help="GDP level (inf allowed)")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--input", default="zeros",
                   help="zeros | ones | path to a one-column CSV of length n")
    add_common(p)
    p.set_defaults(func=cmd_simulate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
