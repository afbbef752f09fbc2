"""Brute-force cross-checks for the maximizer construction.

build_maximizer claims a closed-form optimum; this module earns trust in it
the expensive way, by scanning every same-quantum opponent. The sweep report
doubles as a property-test backend and as the source of frozen expected
values elsewhere in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .distributions import QuantumDistribution
from .divergence import build_maximizer, kl
from .enumeration import EnumerationSpec, count_unordered, enumerate_unordered
from .errors import BudgetExceeded

DEFAULT_BUDGET = 10**6


@dataclass
class MaximalityReport:
    """Outcome of one exhaustive maximality sweep.

    violations lists (P, Q, kl_via_maximizer, kl_via_Q) for every P where
    some brute-force opponent Q beat the constructed maximizer by more than
    the tolerance. max_gap is the worst (brute force - constructed) margin
    seen anywhere; float rounding noise when the construction is optimal.
    """

    spec: EnumerationSpec
    checked: int = 0
    violations: list[tuple[QuantumDistribution, QuantumDistribution, float, float]] = field(
        default_factory=list
    )
    max_gap: float = float("-inf")


def _check_budget(total: int, cells: int, budget: int) -> None:
    space = count_unordered(total, cells)
    if space > budget:
        raise BudgetExceeded(
            f"brute force over {space} distributions exceeds budget {budget}"
        )


def brute_force_max_kl(
    p: QuantumDistribution, budget: int = DEFAULT_BUDGET
) -> tuple[QuantumDistribution, float]:
    """Scan every same-quantum distribution for the largest kl(p, .).

    Returns the winning opponent and its divergence; ties keep the first
    winner in enumeration order.
    """
    _check_budget(p.total, p.cardinality, budget)
    best_q = None
    best = float("-inf")
    for q in enumerate_unordered(p.total, p.cardinality):
        value = kl(p, q)
        if value > best:
            best = value
            best_q = q
    return best_q, best


def verify_maximizer_sweep(
    spec: EnumerationSpec | tuple[int, int],
    budget: int = DEFAULT_BUDGET,
    tolerance: float = 1e-9,
) -> MaximalityReport:
    """Compare build_maximizer against brute force for every P in the space."""
    if not isinstance(spec, EnumerationSpec):
        spec = EnumerationSpec(*spec)
    _check_budget(spec.total, spec.cells, budget)
    report = MaximalityReport(spec=spec)
    # Opponents are the same list for every P; materialize once.
    opponents = list(enumerate_unordered(spec.total, spec.cells))
    for p in opponents:
        constructed = build_maximizer(p).max_divergence
        best_q = None
        best = float("-inf")
        for q in opponents:
            value = kl(p, q)
            if value > best:
                best = value
                best_q = q
        gap = best - constructed
        if gap > report.max_gap:
            report.max_gap = gap
        if gap > tolerance:
            report.violations.append((p, best_q, constructed, best))
        report.checked += 1
    report.violations.sort(key=lambda v: v[0].multiplicities)
    return report


def special_case_gap(p: QuantumDistribution) -> float:
    """Margin between the maximizer and the nearest competing block shape.

    For a non-increasing p, compares the optimal opponent (all ones, block
    M - n + 1 on a minimal cell) against the runner-up shape that keeps a 2
    in the next-to-last cell and M - n in the last. Returns
    kl(p, U) - kl(p, Q_special).
    """
    ms = p.multiplicities
    n = p.cardinality
    m = p.total
    if any(ms[i] < ms[i + 1] for i in range(n - 1)):
        raise ValueError("special_case_gap expects non-increasing multiplicities")
    if n < 2:
        raise ValueError("need at least two cells")
    if m < n + 1:
        raise ValueError("need at least one free unit beyond the minimum fill")
    q_special = QuantumDistribution((1,) * (n - 2) + (2, m - n))
    u = build_maximizer(p)
    return u.max_divergence - kl(p, q_special)
