#!/usr/bin/env python3
"""Run the full experiment battery into one output directory.

Covers the all-pairs sweep on the 15-dot, 5-cell domain, the uniform
study and rank comparison on the 32-dot, 8-cell domain, and both summary
tables over cells 6..10 with dot multipliers 2..5.
"""

import argparse
from pathlib import Path

from qdiv import (
    emit_tables,
    run_pairwise_experiment,
    run_rank_comparison,
    run_uniform_study,
    write_uniform_study_csv,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="results", type=Path)
    parser.add_argument("--threads", type=int, default=None)
    args = parser.parse_args()
    out: Path = args.out_dir
    out.mkdir(parents=True, exist_ok=True)

    result = run_pairwise_experiment(
        15, 5, out / "pairwise_15_5.csv", threads=args.threads
    )
    print(f"pairwise: {result.rows_written} rows -> {result.out_path}")

    rows = run_uniform_study(32, 8)
    path = write_uniform_study_csv(rows, out / "uniform_32_8.csv")
    print(f"uniform study: {len(rows)} rows -> {path}")

    records = emit_tables(range(6, 11), (2, 3, 4, 5), out)
    print(f"tables: {len(records)} records -> {out / 'table1.csv'}, {out / 'table2.csv'}")

    ranks = run_rank_comparison(32, 8, out / "ranks_32_8.csv")
    print(f"ranks: {len(ranks.rows)} rows -> {ranks.out_path}, {ranks.spearman_path}")


if __name__ == "__main__":
    main()
