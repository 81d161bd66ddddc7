"""Command-line front door: deterministic CSV/JSON emission for the toolkit.

Every run is seed-free and single-threaded, so identical configurations
produce byte-identical output.  Floats are printed with 17 significant
digits (round-trip exact for doubles).  Structured log lines go to stderr
as ``level=... op=... msg=...``.

Exit codes: 0 success, 1 validation error (bad flags, missing files, grid
out of range), 2 computation error.
"""

import argparse
import json
import math
import os
import sys
from contextlib import nullcontext

from . import circle, goldbach, identities, mangoldt, omega, zeros
from .accum import max_discrepancy

ZEROS_ENV_VAR = "GOLDBACHKIT_ZEROS"


class CliError(Exception):
    """Configuration problem detected before or during validation."""


def _log(level: str, op: str, msg: str) -> None:
    print(f"level={level} op={op} msg={msg}", file=sys.stderr)


def _fmt(value: float) -> str:
    return f"{value:.17g}"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        _log("error", "cli", message)
        raise SystemExit(1)


def _open_output(path):
    if path is None or path == "-":
        return nullcontext(sys.stdout)
    return open(path, "w", encoding="ascii")


def _parse_grid(spec: str) -> list[int]:
    parts = spec.split(":")
    if len(parts) != 3:
        raise CliError(f"grid must be start:stop:ratio, got {spec!r}")
    try:
        start, stop, ratio = int(parts[0]), int(parts[1]), float(parts[2])
    except ValueError as exc:
        raise CliError(f"bad grid component in {spec!r}: {exc}") from None
    if start < 1 or stop < start:
        raise CliError(f"grid needs 1 <= start <= stop, got {spec!r}")
    if ratio <= 1.0:
        raise CliError(f"geometric grid ratio must exceed 1, got {ratio}")
    values: list[int] = []
    current = float(start)
    while current <= stop + 0.5:
        point = int(round(current))
        if point <= stop and (not values or point != values[-1]):
            values.append(point)
        current *= ratio
    return values


def _resolve_zero_table(path_arg):
    if path_arg:
        path = path_arg
    elif os.environ.get(ZEROS_ENV_VAR):
        path = os.environ[ZEROS_ENV_VAR]
    else:
        table = zeros.bundled_zeros()
        _log("info", "zeros", f"using bundled table ({len(table)} ordinates)")
        return table
    if not os.path.exists(path):
        raise CliError(f"zero file not found: {path}")
    return zeros.load_zeros(path)


def _cmd_sieve(args) -> int:
    table = mangoldt.build_mangoldt(args.limit)
    with _open_output(args.output) as out:
        out.write("n,lambda\n")
        for n in range(1, args.limit + 1):
            out.write(f"{n},{_fmt(table.values[n])}\n")
    _log("info", "sieve", f"limit={args.limit} psi={_fmt(mangoldt.chebyshev_psi(table, args.limit))}")
    return 0


def _build_tables(args, k: int, limit: int):
    table = mangoldt.build_mangoldt(limit)
    built = {}
    if args.method in ("direct", "both"):
        built["direct"] = goldbach.gk_direct(table, k, limit)
    if args.method in ("fft", "both"):
        built["fft"] = goldbach.gk_fft(table, k, limit)
    return built


def _validate_k_limit(k: int, limit: int) -> None:
    if k < 2:
        raise CliError(f"need k >= 2, got {k}")
    if limit < 2:
        raise CliError(f"need limit >= 2, got {limit}")


def _cmd_gk(args) -> int:
    _validate_k_limit(args.k, args.limit)
    if args.method in ("direct", "both") and args.limit > goldbach.DIRECT_ORACLE_CAP:
        raise CliError(
            f"direct method capped at {goldbach.DIRECT_ORACLE_CAP}; use --method fft"
        )
    built = _build_tables(args, args.k, args.limit)
    if args.method == "both":
        scale = float(max(abs(built["direct"].values).max(), 1.0))
        gap = max_discrepancy(built["direct"].values, built["fft"].values, scale=scale)
        if args.output:
            for name, tab in built.items():
                with open(f"{args.output}.{name}.csv", "w", encoding="ascii") as out:
                    goldbach.write_goldbach_csv(tab, out)
        else:
            for tab in built.values():
                goldbach.write_goldbach_csv(tab, sys.stdout)
        print(f"max_discrepancy,{_fmt(gap)}")
    else:
        with _open_output(args.output) as out:
            goldbach.write_goldbach_csv(built[args.method], out)
    return 0


def _cmd_sk(args) -> int:
    _validate_k_limit(args.k, args.limit)
    built = _build_tables(args, args.k, args.limit)
    table = built[args.method if args.method != "both" else "fft"]
    prefix = goldbach.sk_prefix(table)
    with _open_output(args.output) as out:
        out.write("X,S_k\n")
        for x in range(table.k, table.limit + 1):
            out.write(f"{x},{_fmt(prefix.sums[x])}\n")
    return 0


def _cmd_residual(args) -> int:
    _validate_k_limit(args.k, args.limit)
    grid = _parse_grid(args.grid)
    if grid[-1] > args.limit:
        raise CliError(f"grid point {grid[-1]} exceeds sieve limit {args.limit}")
    zero_table = _resolve_zero_table(args.zeros)
    sieve = mangoldt.build_mangoldt(args.limit)
    gtable = goldbach.gk_fft(sieve, args.k, args.limit)
    prefix = goldbach.sk_prefix(gtable)
    report = zeros.residual_report(prefix, zero_table, grid, eps=args.eps)
    with _open_output(args.output) as out:
        zeros.write_residual_csv(report, out)
    _log("info", "residual",
         f"k={args.k} zeros={report.zeros_used} tail={_fmt(report.truncation_estimate)}")
    return 0


def _cmd_zeros_info(args) -> int:
    table = _resolve_zero_table(args.zeros)
    print(f"count,{len(table)}")
    print(f"first,{_fmt(table.ordinates[0])}")
    print(f"last,{_fmt(table.gamma_max)}")
    print(f"inverse_square_sum,{_fmt(table.inverse_square_sum())}")
    print(f"source,{table.source}")
    return 0


def _cmd_circle_check(args) -> int:
    n = args.n
    sieve = mangoldt.build_mangoldt(8 * n)
    nodes = args.nodes if args.nodes else 8 * n
    quad, coeff = circle.cauchy_psi_recovery(sieve, n, nodes)
    power_sum, reference = circle.minor_arc_l2(sieve, n)
    lemma = circle.lemma1_check(args.k, n, 0.0)
    classification = circle.arc_classify(n, args.k, args.delta)
    diagnostics = {
        "n": n,
        "nodes": nodes,
        "cauchy_quadrature": quad,
        "cauchy_coefficient": coeff,
        "cauchy_rel_gap": abs(quad - coeff) / coeff if coeff else 0.0,
        "minor_arc_power_sum": power_sum,
        "minor_arc_reference": reference,
        "minor_arc_ratio": power_sum / reference,
        "lemma_sum_nk_ratio": lemma.ratio,
        "lemma_sum_nk_budget": lemma.budget,
        "major_arc_fraction": classification.major_fraction,
        "major_arc_measure": classification.analytic_measure,
        "fz_identity_max_error": circle.fz_powerseries_identity(sieve, args.k, min(n, 512)),
    }
    with _open_output(args.output) as out:
        json.dump(diagnostics, out, indent=2, sort_keys=True)
        out.write("\n")
    if args.arc_csv:
        with open(args.arc_csv, "w", encoding="ascii") as out:
            out.write("theta,re,im,abs,arc_class\n")
            for theta, re_v, im_v, abs_v, label in circle.arc_sweep(
                sieve, n, args.k, args.delta
            ):
                out.write(f"{_fmt(theta)},{_fmt(re_v)},{_fmt(im_v)},{_fmt(abs_v)},{label}\n")
    return 0


def _cmd_omega_scan(args) -> int:
    grid = _parse_grid(args.x_grid)
    k = args.k
    x_max = grid[-1]
    limit = 2 * k * x_max
    sieve = mangoldt.build_mangoldt(limit)
    gtables = {
        level: goldbach.gk_fft(sieve, level, 2 * level * x_max)
        for level in range(2, k + 1)
    }
    chain_rows = []
    maxg_rows = []
    for x in grid:
        y = args.y if args.y else omega.default_cutoff(x)
        q = mangoldt.primorial(y)
        if q.value >= 2 * x:
            _log("warning", "omega-scan",
                 f"q={q.value} >= 2x={2 * x}: progression classes mostly empty")
        report = omega.chain_check(sieve, {l: gtables[l] for l in range(2, k + 1)},
                                   float(x), q.value)
        for level in report.levels:
            chain_rows.append((x, report.q, report.phi_q, str(level.level),
                               level.min_lhs, level.rhs, level.margin))
        chain_rows.append((x, report.q, report.phi_q, "final",
                           report.final_lhs, report.final_rhs,
                           report.final_lhs - report.final_rhs))
        scan = omega.max_gk_scan(gtables[k], float(x), q)
        maxg_rows.append((x, scan.max_g, scan.primorial_bound, scan.loglog_reference))
    with _open_output(args.output) as out:
        out.write("x,q,phi_q,level,min_lhs,rhs,margin\n")
        for x, qv, phi_q, level, lhs, rhs, margin in chain_rows:
            out.write(f"{x},{qv},{phi_q},{level},{_fmt(lhs)},{_fmt(rhs)},{_fmt(margin)}\n")
    with _open_output(args.maxg_output) as out:
        out.write("x,maxG,bound,loglog_ref\n")
        for x, max_g, bound, ref in maxg_rows:
            out.write(f"{x},{_fmt(max_g)},{_fmt(bound)},{_fmt(ref)}\n")
    return 0


def _cmd_identities(args) -> int:
    rows = identities.run_identity_suite(args.kmax)
    failures = 0
    for name, ok in rows:
        print(f"{'PASS' if ok else 'FAIL'} {name}")
        failures += 0 if ok else 1
    if failures:
        _log("error", "identities", f"{failures} identity group(s) failed")
        return 2
    return 0


def _cmd_singular_series(args) -> int:
    query = goldbach.SingularSeriesQuery(k=args.k, n=args.n, prime_cutoff=args.cutoff)
    value, tail = goldbach.singular_series(query)
    with _open_output(args.output) as out:
        out.write("k,n,P,value,tail_bound\n")
        out.write(f"{args.k},{args.n},{_fmt(args.cutoff)},{_fmt(value)},{_fmt(tail)}\n")
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="goldbachkit",
                     description="Weighted Goldbach sums, zero-term oscillation, "
                                 "and circle-method diagnostics")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("sieve", help="dump Lambda(n) up to a limit")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_sieve)

    p = sub.add_parser("gk", help="build G_k tables")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--method", choices=("direct", "fft", "both"), default="fft")
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_gk)

    p = sub.add_parser("sk", help="prefix sums S_k(X)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--method", choices=("direct", "fft"), default="fft")
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_sk)

    p = sub.add_parser("residual", help="S_k(X) - X^k/k! - H_k(X) report")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--grid", required=True, help="geometric grid start:stop:ratio")
    p.add_argument("--zeros", default=None)
    p.add_argument("--eps", type=float, default=0.05)
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_residual)

    p = sub.add_parser("zeros-info", help="describe a zero-ordinate table")
    p.add_argument("--zeros", default=None)
    p.set_defaults(func=_cmd_zeros_info)

    p = sub.add_parser("circle-check", help="contour recovery and arc diagnostics")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--nodes", type=int, default=None)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--delta", type=float, default=0.5)
    p.add_argument("--arc-csv", default=None)
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_circle_check)

    p = sub.add_parser("omega-scan", help="chain inequality and max-G scan")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--x-grid", required=True, help="geometric grid start:stop:ratio")
    p.add_argument("--y", type=float, default=None, help="prime cutoff for q")
    p.add_argument("--output", default=None)
    p.add_argument("--maxg-output", default=None)
    p.set_defaults(func=_cmd_omega_scan)

    p = sub.add_parser("identities", help="exact combinatorial identity suite")
    p.add_argument("--kmax", type=int, default=25)
    p.set_defaults(func=_cmd_identities)

    p = sub.add_parser("singular-series", help="local-density Euler product")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cutoff", type=float, default=goldbach.DEFAULT_PRIME_CUTOFF)
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_singular_series)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (CliError, zeros.ZeroFormatError) as exc:
        _log("error", args.command, str(exc))
        return 1
    except Exception as exc:  # computation failure
        _log("error", args.command, f"{type(exc).__name__}: {exc}")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
