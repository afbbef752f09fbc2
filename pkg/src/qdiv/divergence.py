"""The measure battery: KL, its maximizer, normalized KL, and companions.

All logarithms are base 2, so divergences are in bits. Asymmetric measures
require both arguments to share one quantum 1/M; callers holding
distributions with different totals rescale first (see all_measures with
rescale=True, or distributions.make_comparable).

The centerpiece is kn(), a KL divergence normalized into [0, 1] by dividing
by the largest KL value any same-quantum zero-free distribution can achieve
against the first argument. That maximizer has a closed form constructed by
build_maximizer(): one unit in every cell, all remaining M - n + 1 units
stacked on a cell where the first argument is smallest.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .distributions import QuantumDistribution, make_comparable
from .errors import DegenerateNormalizer, DomainMismatch, QuantumMismatch

MEASURE_LABELS = ("kl", "kn", "jsd", "hellinger", "jaccard")


@dataclass(frozen=True)
class MeasureValue:
    """One labeled measure result."""

    measure: str
    value: float


@dataclass(frozen=True)
class MaximizerResult:
    """The KL-maximizing opponent for a fixed first argument.

    maximizer holds multiplicity 1 everywhere except argmin_cell (0-based,
    lowest index among minimal cells of the input), which holds M - n + 1.
    max_divergence = kl(P, maximizer), the normalization constant of kn.
    """

    maximizer: QuantumDistribution
    max_divergence: float
    argmin_cell: int


def _check_cells(p: QuantumDistribution, q: QuantumDistribution) -> None:
    if p.cardinality != q.cardinality:
        raise DomainMismatch(
            f"cannot compare {p.cardinality} cells against {q.cardinality}"
        )


def _check_quantum(p: QuantumDistribution, q: QuantumDistribution) -> None:
    if p.total != q.total:
        raise QuantumMismatch(
            f"totals differ ({p.total} vs {q.total}); rescale to a common "
            "quantum first"
        )


def kl(p: QuantumDistribution, q: QuantumDistribution) -> float:
    """Kullback-Leibler divergence of p from q in bits.

    Non-negative, zero exactly when the distributions are equal. Finite for
    every valid pair because quantum distributions have no zero cells.
    """
    _check_cells(p, q)
    _check_quantum(p, q)
    total = 0.0
    for kp, kq in zip(p.multiplicities, q.multiplicities):
        total += (kp / p.total) * math.log2(kp / kq)
    return total


def build_maximizer(p: QuantumDistribution) -> MaximizerResult:
    """Construct the same-quantum distribution maximizing kl(p, .).

    KL grows by starving high-probability cells of mass in the second
    argument, so the optimum puts the legal minimum of 1 everywhere and the
    whole free quantity M - n on top of a minimal cell of p. Ties on the
    minimum are broken toward the lowest index; any choice yields the same
    divergence.
    """
    ms = p.multiplicities
    argmin_cell = min(range(len(ms)), key=lambda i: ms[i])
    block = p.total - p.cardinality + 1
    counts = tuple(block if i == argmin_cell else 1 for i in range(len(ms)))
    u = QuantumDistribution(counts)
    return MaximizerResult(maximizer=u, max_divergence=kl(p, u), argmin_cell=argmin_cell)


def kn(p: QuantumDistribution, q: QuantumDistribution) -> float:
    """Normalized KL divergence: kl(p, q) / kl(p, maximizer(p)), in [0, 1].

    Equal inputs return 0 by the continuity convention 0/0 -> 0, which also
    covers the total = cells case where only one distribution exists and the
    normalizer is 0.
    """
    _check_cells(p, q)
    _check_quantum(p, q)
    if p == q:
        return 0.0
    denom = build_maximizer(p).max_divergence
    if denom == 0.0:
        raise DegenerateNormalizer(
            "zero maximal divergence for distinct inputs; inputs are not "
            "valid same-quantum distributions"
        )
    return kl(p, q) / denom


def jsd(p: QuantumDistribution, q: QuantumDistribution) -> float:
    """Jensen-Shannon divergence in bits: mean KL from each input to their mixture.

    Symmetric, bounded by 1 in base 2. The mixture lives on the common
    quantum 1/(2M) and never needs materializing as a distribution.
    """
    _check_cells(p, q)
    _check_quantum(p, q)
    total = 0.0
    for kp, kq in zip(p.multiplicities, q.multiplicities):
        a = kp / p.total
        b = kq / q.total
        mid = 0.5 * (a + b)
        total += a * math.log2(a / mid) + b * math.log2(b / mid)
    return 0.5 * total


def hellinger_squared(p: QuantumDistribution, q: QuantumDistribution) -> float:
    """Squared Hellinger distance, 0.5 * sum of squared root differences.

    Algebraically equal to 1 - sum(sqrt(P_i Q_i)); the difference form is
    used because it is exactly zero on equal inputs and never negative.
    """
    _check_cells(p, q)
    _check_quantum(p, q)
    total = 0.0
    for kp, kq in zip(p.multiplicities, q.multiplicities):
        d = math.sqrt(kp / p.total) - math.sqrt(kq / q.total)
        total += d * d
    return 0.5 * total


def hellinger(p: QuantumDistribution, q: QuantumDistribution) -> float:
    """Hellinger distance in [0, 1]; the square root of hellinger_squared."""
    return math.sqrt(hellinger_squared(p, q))


def jaccard_distance(p: QuantumDistribution, q: QuantumDistribution) -> float:
    """Generalized Jaccard distance on multiplicities: 1 - sum(min)/sum(max).

    Works directly on the integer counts. Both arguments should share a
    quantum for the result to mean anything; rescale first if they do not.
    """
    _check_cells(p, q)
    mins = 0
    maxs = 0
    for kp, kq in zip(p.multiplicities, q.multiplicities):
        if kp <= kq:
            mins += kp
            maxs += kq
        else:
            mins += kq
            maxs += kp
    return 1.0 - mins / maxs


def all_measures(
    p: QuantumDistribution, q: QuantumDistribution, rescale: bool = False
) -> list[MeasureValue]:
    """Every measure for one pair, optionally rescaling to a common quantum."""
    if rescale:
        p, q = make_comparable(p, q)
    return [
        MeasureValue("kl", kl(p, q)),
        MeasureValue("kn", kn(p, q)),
        MeasureValue("jsd", jsd(p, q)),
        MeasureValue("hellinger", hellinger(p, q)),
        MeasureValue("jaccard", jaccard_distance(p, q)),
    ]
