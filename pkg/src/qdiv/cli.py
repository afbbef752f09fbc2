"""Command line front end.

Exit codes: 0 on success, 1 when inputs fail a precondition (the
ValueError family raised by the library), 2 when an enumeration budget is
exceeded. argparse keeps its native behavior of exiting with 2 on usage
errors, which deliberately reads as "this run was too much to even start".

Cells are reported 1-based on the command line; library objects index
them 0-based.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .distributions import format_distribution, make_comparable, parse_distribution
from .divergence import MEASURE_LABELS, all_measures, build_maximizer
from .enumeration import count_ordered, count_unordered
from .errors import BudgetExceeded
from .experiments import (
    DEFAULT_PAIR_BUDGET,
    emit_tables,
    run_pairwise_experiment,
    run_rank_comparison,
    run_uniform_study,
    write_uniform_study_csv,
)
from .oracle import DEFAULT_BUDGET, verify_maximizer_sweep


def _parse_cells_range(text: str) -> list[int]:
    """Accept "6..10" or "6,7,8"."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(part) for part in text.split(",") if part.strip()]


def _parse_int_list(text: str) -> list[int]:
    return [int(part) for part in text.split(",") if part.strip()]


def _cmd_count(args: argparse.Namespace) -> int:
    print(f"unordered={count_unordered(args.dots, args.cells)}")
    print(f"ordered={count_ordered(args.dots, args.cells)}")
    return 0


def _cmd_compare(args: argparse.Namespace) -> int:
    p = parse_distribution(args.p)
    q = parse_distribution(args.q)
    values = {mv.measure: mv.value for mv in all_measures(p, q, rescale=args.rescale)}
    wanted = MEASURE_LABELS if args.measure == "all" else (args.measure,)
    for name in wanted:
        print(f"{name}={values[name]:.6f}")
    return 0


def _cmd_maximize(args: argparse.Namespace) -> int:
    p = parse_distribution(args.p)
    result = build_maximizer(p)
    print(f"maximizer={format_distribution(result.maximizer)}")
    print(f"kl_max={result.max_divergence:.6f}")
    print(f"argmin_cell={result.argmin_cell + 1}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    report = verify_maximizer_sweep(
        (args.dots, args.cells), budget=args.budget, tolerance=args.tolerance
    )
    print(f"checked={report.checked}")
    print(f"violations={len(report.violations)}")
    print(f"max_gap={report.max_gap:.3e}")
    return 0


def _cmd_pairwise(args: argparse.Namespace) -> int:
    result = run_pairwise_experiment(
        args.dots,
        args.cells,
        args.out,
        budget=args.budget,
        threads=args.threads,
    )
    print(f"rows={result.rows_written}")
    print(f"csv={result.out_path}")
    print(f"summary={result.summary_path}")
    return 0


def _cmd_uniform_study(args: argparse.Namespace) -> int:
    rows = run_uniform_study(args.dots, args.cells)
    path = write_uniform_study_csv(rows, args.out)
    print(f"rows={len(rows)}")
    print(f"csv={path}")
    return 0


def _cmd_tables(args: argparse.Namespace) -> int:
    out_dir = Path(args.out_dir)
    records = emit_tables(args.cells, args.multipliers, out_dir)
    print(f"records={len(records)}")
    print(f"table1={out_dir / 'table1.csv'}")
    print(f"table2={out_dir / 'table2.csv'}")
    return 0


def _cmd_rank(args: argparse.Namespace) -> int:
    result = run_rank_comparison(args.dots, args.cells, args.out)
    print(f"rows={len(result.rows)}")
    print(f"csv={result.out_path}")
    print(f"spearman={result.spearman_path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qdiv",
        description="Divergence measures over integer-quantized distributions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="count distributions on a domain")
    count.add_argument("--dots", type=int, required=True)
    count.add_argument("--cells", type=int, required=True)
    count.set_defaults(func=_cmd_count)

    compare = sub.add_parser("compare", help="measures between two distributions")
    compare.add_argument("--p", required=True, help='multiplicities, e.g. "2,1,1"')
    compare.add_argument("--q", required=True)
    compare.add_argument(
        "--measure", choices=("all",) + MEASURE_LABELS, default="all"
    )
    compare.add_argument(
        "--rescale",
        action="store_true",
        help="rescale both inputs to a common total first",
    )
    compare.set_defaults(func=_cmd_compare)

    maximize = sub.add_parser("maximize", help="worst-case opponent for kl")
    maximize.add_argument("--p", required=True)
    maximize.set_defaults(func=_cmd_maximize)

    verify = sub.add_parser(
        "verify", help="brute-force check of the maximizer construction"
    )
    verify.add_argument("--dots", type=int, required=True)
    verify.add_argument("--cells", type=int, required=True)
    verify.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    verify.add_argument("--tolerance", type=float, default=1e-9)
    verify.set_defaults(func=_cmd_verify)

    pairwise = sub.add_parser("pairwise", help="all-pairs measure sweep to CSV")
    pairwise.add_argument("--dots", type=int, required=True)
    pairwise.add_argument("--cells", type=int, required=True)
    pairwise.add_argument("--out", required=True)
    pairwise.add_argument("--budget", type=int, default=DEFAULT_PAIR_BUDGET)
    pairwise.add_argument("--threads", type=int, default=None)
    pairwise.set_defaults(func=_cmd_pairwise)

    uniform = sub.add_parser(
        "uniform-study", help="every distribution against the uniform one"
    )
    uniform.add_argument("--dots", type=int, required=True)
    uniform.add_argument("--cells", type=int, required=True)
    uniform.add_argument("--out", required=True)
    uniform.set_defaults(func=_cmd_uniform_study)

    tables = sub.add_parser("tables", help="maxima and mean/max summary tables")
    tables.add_argument(
        "--cells", type=_parse_cells_range, default=list(range(6, 11))
    )
    tables.add_argument(
        "--multipliers", type=_parse_int_list, default=[2, 3, 4, 5]
    )
    tables.add_argument("--out-dir", required=True)
    tables.set_defaults(func=_cmd_tables)

    rank = sub.add_parser("rank", help="per-measure rankings and their agreement")
    rank.add_argument("--dots", type=int, required=True)
    rank.add_argument("--cells", type=int, required=True)
    rank.add_argument("--out", required=True)
    rank.set_defaults(func=_cmd_rank)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
