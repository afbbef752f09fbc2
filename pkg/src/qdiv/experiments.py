"""Experiment harness: pairwise sweeps, uniform studies, summary tables.

All CSV output is byte-deterministic: header row, comma separator, 6-decimal
fixed-point reals, LF line endings, UTF-8. The pairwise engine is the only
parallel path; workers own disjoint row slices and every float reduction
runs along the cell axis inside a single worker, so the thread count can
never reorder an operation that reaches the output.

Convention note: the uniform-study pipeline (study rows, tables, ranks)
reports the squared Hellinger distance under its "hellinger" column, the
form the summary tables are defined over. Rankings are unaffected (squaring
is monotone on [0, 1]). The pairwise sweep reports the unsquared distance,
matching the hellinger() measure itself.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .distributions import OrderedQuantumDistribution, format_distribution
from .divergence import hellinger_squared, jaccard_distance, jsd, kl, kn
from .enumeration import count_unordered, enumerate_ordered, enumerate_unordered
from .errors import BudgetExceeded, NonUniformCapable
from .stats import DistributionProperties, GapStats, distribution_properties, fractional_ranks, gap_stats, pearson, spearman

PAIRWISE_MEASURES = ("kl", "kn", "jsd", "hellinger", "jaccard")
TABLE_MEASURES = ("kn", "kl", "jsd", "hellinger", "jaccard")

DEFAULT_PAIR_BUDGET = 2 * 10**6
_CHUNK_ROWS = 64


@dataclass(frozen=True)
class ExperimentRecord:
    """One (cells, dots, measure, statistic) cell of a summary table."""

    cells: int
    dots: int
    measure: str
    statistic: str
    value: float


@dataclass
class UniformStudyRow:
    """One ordered distribution compared against the uniform background.

    Asymmetric measures put the enumerated distribution first:
    kl(P, uniform) and kn(P, uniform). hellinger holds the squared form
    (see module docstring). ranks are ascending-by-value with average ties.
    """

    distribution: OrderedQuantumDistribution
    kn: float
    kl: float
    jsd: float
    hellinger: float
    jaccard: float
    properties: DistributionProperties
    ranks: dict[str, float]

    def value(self, measure: str) -> float:
        return getattr(self, measure)


@dataclass
class PairwiseResult:
    """Where a pairwise sweep landed and its companion statistics.

    values is populated only when the sweep ran with keep_values=True; each
    measure maps to its full N*N column in row-major pair order.
    """

    total: int
    cells: int
    rows_written: int
    correlations: dict[tuple[str, str], float]
    gaps: dict[str, GapStats]
    out_path: Path
    summary_path: Path
    values: Optional[dict[str, np.ndarray]] = None


@dataclass
class RankComparisonResult:
    rows: list[UniformStudyRow]
    spearman: dict[tuple[str, str], float]
    out_path: Path
    spearman_path: Path


def _f6(v: float) -> str:
    return f"{v:.6f}"


def _write_text(path: Path, lines: list[str]) -> None:
    # newline="" so the explicit LF endings pass through untranslated
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write("\n".join(lines))
        fh.write("\n")


def run_pairwise_experiment(
    total: int,
    cells: int,
    out_path: str | Path,
    budget: int = DEFAULT_PAIR_BUDGET,
    threads: Optional[int] = None,
    keep_values: bool = False,
) -> PairwiseResult:
    """All ordered pairs of unordered distributions, all five measures.

    Writes one CSV row per pair (index_p, index_q, kl, kn, jsd, hellinger,
    jaccard), indices being 0-based positions in the lex-descending
    enumeration, plus a companion summary CSV with the Pearson correlations
    between measure columns and gap statistics per column. Raises
    BudgetExceeded when the pair count would pass the budget.
    """
    out_path = Path(out_path)
    count = count_unordered(total, cells)
    pairs = count * count
    if pairs > budget:
        raise BudgetExceeded(f"{pairs} pairs exceed the budget of {budget}")

    dists = list(enumerate_unordered(total, cells))
    n = cells
    counts = np.array([d.multiplicities for d in dists], dtype=np.int64)
    probs = counts / float(total)
    logs = np.log2(probs)
    roots = np.sqrt(probs)

    # kl(P, U) per row; the block M - n + 1 sits on a minimal cell, and the
    # value only depends on the minimal probability, not the tie chosen.
    plogp = np.sum(probs * np.log2(probs * total), axis=1)
    klmax = plogp - probs.min(axis=1) * np.log2(total - n + 1)
    klmax_safe = np.where(klmax == 0.0, 1.0, klmax)

    out_kl = np.empty((count, count), dtype=np.float64)
    out_kn = np.empty_like(out_kl)
    out_jsd = np.empty_like(out_kl)
    out_he = np.empty_like(out_kl)
    out_jd = np.empty_like(out_kl)

    def fill(start: int) -> None:
        stop = min(start + _CHUNK_ROWS, count)
        ap = probs[start:stop, None, :]
        lp = logs[start:stop, None, :]
        aq = probs[None, :, :]
        lq = logs[None, :, :]
        out_kl[start:stop] = np.sum(ap * (lp - lq), axis=2)
        out_kn[start:stop] = out_kl[start:stop] / klmax_safe[start:stop, None]
        mid_log = np.log2(0.5 * (ap + aq))
        out_jsd[start:stop] = 0.5 * np.sum(
            ap * (lp - mid_log) + aq * (lq - mid_log), axis=2
        )
        diff = roots[start:stop, None, :] - roots[None, :, :]
        out_he[start:stop] = np.sqrt(0.5 * np.sum(diff * diff, axis=2))
        mins = np.sum(
            np.minimum(counts[start:stop, None, :], counts[None, :, :]), axis=2
        )
        out_jd[start:stop] = 1.0 - mins / (2 * total - mins)

    starts = range(0, count, _CHUNK_ROWS)
    workers = threads if threads else (os.cpu_count() or 1)
    if workers > 1 and count > _CHUNK_ROWS:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(fill, starts))
    else:
        for start in starts:
            fill(start)

    lines = ["index_p,index_q,kl,kn,jsd,hellinger,jaccard"]
    for i in range(count):
        row_kl = out_kl[i]
        row_kn = out_kn[i]
        row_jsd = out_jsd[i]
        row_he = out_he[i]
        row_jd = out_jd[i]
        for j in range(count):
            lines.append(
                f"{i},{j},{row_kl[j]:.6f},{row_kn[j]:.6f},{row_jsd[j]:.6f},"
                f"{row_he[j]:.6f},{row_jd[j]:.6f}"
            )
    _write_text(out_path, lines)

    columns = {
        "kl": out_kl.ravel(),
        "kn": out_kn.ravel(),
        "jsd": out_jsd.ravel(),
        "hellinger": out_he.ravel(),
        "jaccard": out_jd.ravel(),
    }
    correlations: dict[tuple[str, str], float] = {}
    for a_i, a in enumerate(PAIRWISE_MEASURES):
        for b in PAIRWISE_MEASURES[a_i + 1 :]:
            try:
                correlations[(a, b)] = pearson(columns[a], columns[b])
            except Exception:
                continue  # degenerate column in a tiny space; row omitted
    gaps = {m: gap_stats(columns[m]) for m in PAIRWISE_MEASURES}

    summary_path = out_path.with_name(out_path.stem + "_summary" + out_path.suffix)
    summary = ["record,measure_a,measure_b,value"]
    for (a, b), value in correlations.items():
        summary.append(f"pearson,{a},{b},{_f6(value)}")
    for m in PAIRWISE_MEASURES:
        g = gaps[m]
        summary.append(f"distinct_count,{m},,{g.distinct_count}")
        summary.append(f"mean_gap,{m},,{_f6(g.mean_gap)}")
        summary.append(f"sd_gap,{m},,{_f6(g.sd_gap)}")
        summary.append(f"mean_over_max,{m},,{_f6(g.mean_over_max)}")
    _write_text(summary_path, summary)

    return PairwiseResult(
        total=total,
        cells=cells,
        rows_written=pairs,
        correlations=correlations,
        gaps=gaps,
        out_path=out_path,
        summary_path=summary_path,
        values=columns if keep_values else None,
    )


def run_uniform_study(total: int, cells: int) -> list[UniformStudyRow]:
    """Every ordered distribution against the uniform one, with ranks.

    Requires cells to divide total so the uniform distribution exists on
    the same quantum.
    """
    if total % cells != 0:
        raise NonUniformCapable(
            f"{cells} cells cannot split {total} dots uniformly"
        )
    uniform = OrderedQuantumDistribution((total // cells,) * cells)
    rows: list[UniformStudyRow] = []
    for p in enumerate_ordered(total, cells):
        rows.append(
            UniformStudyRow(
                distribution=p,
                kn=kn(p, uniform),
                kl=kl(p, uniform),
                jsd=jsd(p, uniform),
                hellinger=hellinger_squared(p, uniform),
                jaccard=jaccard_distance(p, uniform),
                properties=distribution_properties(p),
                ranks={},
            )
        )
    for measure in TABLE_MEASURES:
        ranks = fractional_ranks([row.value(measure) for row in rows])
        for row, rank in zip(rows, ranks):
            row.ranks[measure] = float(rank)
    return rows


def write_uniform_study_csv(rows: list[UniformStudyRow], out_path: str | Path) -> Path:
    out_path = Path(out_path)
    header = (
        "distribution,kn,kl,jsd,hellinger,jaccard,"
        "entropy,cv,skewness,excess_kurtosis,"
        "rank_kn,rank_kl,rank_jsd,rank_hellinger,rank_jaccard"
    )
    lines = [header]
    for row in rows:
        props = row.properties
        skew = _f6(props.skewness) if props.skewness is not None else ""
        kurt = _f6(props.excess_kurtosis) if props.excess_kurtosis is not None else ""
        ranks = ",".join(f"{row.ranks[m]:.1f}" for m in TABLE_MEASURES)
        lines.append(
            f'"{format_distribution(row.distribution)}",'
            f"{_f6(row.kn)},{_f6(row.kl)},{_f6(row.jsd)},"
            f"{_f6(row.hellinger)},{_f6(row.jaccard)},"
            f"{_f6(props.entropy)},{_f6(props.cv)},{skew},{kurt},{ranks}"
        )
    _write_text(out_path, lines)
    return out_path


def emit_tables(
    cells_range: Sequence[int],
    dots_multipliers: Sequence[int],
    out_dir: str | Path,
) -> list[ExperimentRecord]:
    """Per-measure maxima (table1.csv) and mean/max ratios (table2.csv).

    The mean includes the uniform distribution's own all-zero row. Table 2
    gains a final average row across all (cells, dots) experiments.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    records: list[ExperimentRecord] = []
    header = "cells,dots," + ",".join(TABLE_MEASURES)
    t1_lines = [header]
    t2_lines = [header]
    ratio_acc = {m: [] for m in TABLE_MEASURES}
    for cells in cells_range:
        for mult in dots_multipliers:
            dots = cells * mult
            rows = run_uniform_study(dots, cells)
            maxima = {}
            ratios = {}
            for m in TABLE_MEASURES:
                values = [row.value(m) for row in rows]
                vmax = max(values)
                maxima[m] = vmax
                ratios[m] = (sum(values) / len(values)) / vmax if vmax else 0.0
                ratio_acc[m].append(ratios[m])
                records.append(ExperimentRecord(cells, dots, m, "max", vmax))
                records.append(
                    ExperimentRecord(cells, dots, m, "mean_over_max", ratios[m])
                )
            t1_lines.append(
                f"{cells},{dots}," + ",".join(_f6(maxima[m]) for m in TABLE_MEASURES)
            )
            t2_lines.append(
                f"{cells},{dots}," + ",".join(_f6(ratios[m]) for m in TABLE_MEASURES)
            )
    t2_lines.append(
        "avg,,"
        + ",".join(_f6(sum(ratio_acc[m]) / len(ratio_acc[m])) for m in TABLE_MEASURES)
    )
    _write_text(out_dir / "table1.csv", t1_lines)
    _write_text(out_dir / "table2.csv", t2_lines)
    return records


def run_rank_comparison(
    total: int, cells: int, out_path: str | Path
) -> RankComparisonResult:
    """Per-measure ranks plus the full Spearman matrix between measures."""
    out_path = Path(out_path)
    rows = run_uniform_study(total, cells)
    lines = ["distribution," + ",".join(f"rank_{m}" for m in TABLE_MEASURES)]
    for row in rows:
        ranks = ",".join(f"{row.ranks[m]:.1f}" for m in TABLE_MEASURES)
        lines.append(f'"{format_distribution(row.distribution)}",{ranks}')
    _write_text(out_path, lines)

    values = {m: [row.value(m) for row in rows] for m in TABLE_MEASURES}
    coefficients: dict[tuple[str, str], float] = {}
    matrix_lines = ["measure," + ",".join(TABLE_MEASURES)]
    for a in TABLE_MEASURES:
        entries = []
        for b in TABLE_MEASURES:
            rho = spearman(values[a], values[b])
            coefficients[(a, b)] = rho
            entries.append(_f6(rho))
        matrix_lines.append(f"{a}," + ",".join(entries))
    spearman_path = out_path.with_name(out_path.stem + "_spearman" + out_path.suffix)
    _write_text(spearman_path, matrix_lines)
    return RankComparisonResult(
        rows=rows,
        spearman=coefficients,
        out_path=out_path,
        spearman_path=spearman_path,
    )
