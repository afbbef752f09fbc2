"""Exact counting and lazy generation of quantum distributions.

Unordered distributions over n cells with total M are the compositions of M
into n positive parts; ordered ones are the partitions of M into exactly n
parts. Both stream in lexicographically descending order of the multiplicity
vector, and both counts are exact big integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .distributions import OrderedQuantumDistribution, QuantumDistribution
from .errors import InvalidSpec


@dataclass(frozen=True)
class EnumerationSpec:
    """A (total, cells) pair with total >= cells >= 1."""

    total: int
    cells: int

    def __post_init__(self) -> None:
        _check(self.total, self.cells)


def _check(total: int, cells: int) -> None:
    if cells < 1:
        raise InvalidSpec(f"need at least one cell, got {cells}")
    if total < cells:
        raise InvalidSpec(
            f"total {total} cannot fill {cells} cells with positive multiplicities"
        )


def count_unordered(total: int, cells: int) -> int:
    """Number of compositions of total into cells positive parts.

    Stars and bars: C(M-1, M-n) ways to arrange the M-n free units among
    cells that already hold one unit each.
    """
    _check(total, cells)
    return math.comb(total - 1, total - cells)


@lru_cache(maxsize=None)
def _partitions_into(x: int, y: int) -> int:
    # p_y(x) = p_y(x - y) + p_{y-1}(x - 1), seeded with p_1(x) = 1 for x >= 1.
    if y < 1 or x < y:
        return 0
    if y == 1:
        return 1
    return _partitions_into(x - y, y) + _partitions_into(x - 1, y - 1)


def count_ordered(total: int, cells: int) -> int:
    """Number of partitions of total into exactly cells positive parts."""
    _check(total, cells)
    return _partitions_into(total, cells)


def _compositions(total: int, cells: int) -> Iterator[tuple[int, ...]]:
    if cells == 1:
        yield (total,)
        return
    for first in range(total - cells + 1, 0, -1):
        for rest in _compositions(total - first, cells - 1):
            yield (first,) + rest


def _partitions(total: int, cells: int, cap: int) -> Iterator[tuple[int, ...]]:
    if cells == 1:
        if total <= cap:
            yield (total,)
        return
    # smallest admissible lead part keeps the tail non-increasing and positive
    low = -(-total // cells)
    for first in range(min(cap, total - cells + 1), low - 1, -1):
        for rest in _partitions(total - first, cells - 1, first):
            yield (first,) + rest


def enumerate_unordered(total: int, cells: int) -> Iterator[QuantumDistribution]:
    """Yield every unordered quantum distribution once, lex-descending."""
    _check(total, cells)
    for parts in _compositions(total, cells):
        yield QuantumDistribution(parts)


def enumerate_ordered(total: int, cells: int) -> Iterator[OrderedQuantumDistribution]:
    """Yield every ordered quantum distribution once, lex-descending."""
    _check(total, cells)
    for parts in _partitions(total, cells, total):
        yield OrderedQuantumDistribution(parts)
