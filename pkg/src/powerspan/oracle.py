"""Brute-force subset sums, used as ground truth for the fast procedures.

Reachable sums are tracked in a Python int used as a bitset: bit ``s`` is set
when ``s`` is a subset sum. Each token instance costs one shift-or over
``sum_value(A) + 1`` bits.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterator, Tuple

from .core import DCollection, DomainError, sum_value

DEFAULT_BOUND = 10**6


class OracleBoundExceeded(DomainError):
    """The collection is too large for brute force."""


@dataclass(frozen=True)
class SpanSet:
    """Sorted, duplicate-free subset sums of a collection."""

    elements: Tuple[int, ...]

    def __contains__(self, n) -> bool:
        i = bisect_left(self.elements, n)
        return i < len(self.elements) and self.elements[i] == n

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


def _reach(A: DCollection, bound: int) -> int:
    total = sum_value(A)
    if total > bound:
        raise OracleBoundExceeded(f"sum {total} exceeds oracle bound {bound}")
    bits = 1
    value = 1
    for a in A.mults:
        for _ in range(a):
            bits |= bits << value
        value *= A.base
    return bits


def _bit_positions(bits: int) -> Tuple[int, ...]:
    s = bin(bits)[:1:-1]
    return tuple(i for i, c in enumerate(s) if c == "1")


def oracle_span(A: DCollection, bound: int = DEFAULT_BOUND) -> SpanSet:
    return SpanSet(_bit_positions(_reach(A, bound)))


def oracle_contains(A: DCollection, n: int, bound: int = DEFAULT_BOUND) -> bool:
    if n < 0:
        return False
    return bool(_reach(A, bound) >> n & 1)


def oracle_equal(A: DCollection, B: DCollection, bound: int = DEFAULT_BOUND) -> bool:
    # Spans over different bases are still plain integer sets.
    return _reach(A, bound) == _reach(B, bound)
