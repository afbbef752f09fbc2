"""Distribution properties, correlations, and value-spread statistics."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .distributions import QuantumDistribution
from .errors import DegenerateInput


@dataclass(frozen=True)
class DistributionProperties:
    """Entropy of the probability view plus moment shape of the multiplicities.

    skewness and excess_kurtosis are None for uniform distributions, whose
    zero variance leaves them undefined; consumers building correlations
    must skip those rows.
    """

    entropy: float
    cv: float
    skewness: Optional[float]
    excess_kurtosis: Optional[float]


@dataclass(frozen=True)
class GapStats:
    """Spread summary of a value vector.

    Values are sorted and collapsed to distinct entries (equality after
    rounding to 12 decimals, enough to separate genuinely different small
    rationals while absorbing float noise); gaps are the adjacent
    differences of that collapsed vector. mean_over_max uses the original
    uncollapsed values.
    """

    distinct_count: int
    mean_gap: float
    sd_gap: float
    mean_over_max: float


def distribution_properties(p: QuantumDistribution) -> DistributionProperties:
    """Entropy in bits; cv, skewness, excess kurtosis over the multiplicities.

    Moments use the population (1/n) convention: the cells are a complete
    population, not a sample. skewness = m3 / m2^1.5 and excess kurtosis =
    m4 / m2^2 - 3.
    """
    probs = p.probabilities
    entropy = -sum(x * math.log2(x) for x in probs)
    ms = p.multiplicities
    n = p.cardinality
    mean = p.total / n
    m2 = sum((k - mean) ** 2 for k in ms) / n
    cv = math.sqrt(m2) / mean
    if m2 == 0.0:
        return DistributionProperties(entropy, cv, None, None)
    m3 = sum((k - mean) ** 3 for k in ms) / n
    m4 = sum((k - mean) ** 4 for k in ms) / n
    return DistributionProperties(
        entropy=entropy,
        cv=cv,
        skewness=m3 / m2**1.5,
        excess_kurtosis=m4 / m2**2 - 3.0,
    )


def _paired_arrays(x: Sequence[float], y: Sequence[float]) -> tuple[np.ndarray, np.ndarray]:
    xa = np.asarray(x, dtype=np.float64)
    ya = np.asarray(y, dtype=np.float64)
    if xa.ndim != 1 or ya.ndim != 1 or xa.size != ya.size:
        raise DegenerateInput("correlation needs two equal-length vectors")
    if xa.size < 2:
        raise DegenerateInput("correlation needs at least two points")
    return xa, ya


def pearson(x: Sequence[float], y: Sequence[float]) -> float:
    """Product-moment correlation in [-1, 1]."""
    xa, ya = _paired_arrays(x, y)
    xc = xa - xa.mean()
    yc = ya - ya.mean()
    den = math.sqrt(float(np.sum(xc * xc)) * float(np.sum(yc * yc)))
    if den == 0.0:
        raise DegenerateInput("correlation undefined for zero-variance input")
    return float(np.sum(xc * yc)) / den


def fractional_ranks(values: Sequence[float]) -> np.ndarray:
    """Ascending 1-based ranks with ties sharing their average rank."""
    v = np.asarray(values, dtype=np.float64)
    order = np.argsort(v, kind="stable")
    ranks = np.empty(v.size, dtype=np.float64)
    sorted_v = v[order]
    i = 0
    while i < v.size:
        j = i
        while j + 1 < v.size and sorted_v[j + 1] == sorted_v[i]:
            j += 1
        ranks[order[i : j + 1]] = 0.5 * (i + j) + 1.0
        i = j + 1
    return ranks


def spearman(x: Sequence[float], y: Sequence[float]) -> float:
    """Rank correlation: pearson on fractional ranks."""
    xa, ya = _paired_arrays(x, y)
    return pearson(fractional_ranks(xa), fractional_ranks(ya))


def gap_stats(values: Sequence[float]) -> GapStats:
    """Distinct-value gaps and mean/max ratio for a non-empty vector."""
    v = np.asarray(values, dtype=np.float64)
    if v.size == 0:
        raise DegenerateInput("gap_stats needs a non-empty vector")
    distinct = np.unique(np.round(v, 12))
    if distinct.size >= 2:
        gaps = np.diff(distinct)
        mean_gap = float(gaps.mean())
        sd_gap = float(gaps.std())  # population sd
    else:
        mean_gap = 0.0
        sd_gap = 0.0
    vmax = float(v.max())
    mean_over_max = float(v.mean()) / vmax if vmax != 0.0 else 0.0
    return GapStats(
        distinct_count=int(distinct.size),
        mean_gap=mean_gap,
        sd_gap=sd_gap,
        mean_over_max=mean_over_max,
    )
