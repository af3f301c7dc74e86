"""Structure of the subset-sum set of a d-collection.

A normal collection splits at its critical places (``a_j < d-1``, plus the
top place) into irreducible blocks. Block ``i`` covering places
``shift..top`` reaches exactly the multiples ``d**shift * {0, ..., length}``,
and the whole span is the direct sum of these block ranges. Every query below
works on that decomposition; nothing enumerates submultisets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Tuple

from .core import (
    DCollection,
    InvalidExchange,
    NotNormal,
    require_same_base,
    is_normal,
    normalize,
    normalize_up_to,
    sum_value,
)


@dataclass(frozen=True)
class IrreducibleBlock:
    shift: int
    top: int
    block_sum: int
    length: int


@dataclass(frozen=True)
class Decomposition:
    base: int
    blocks: Tuple[IrreducibleBlock, ...] = ()

    @property
    def irreducible(self) -> bool:
        return len(self.blocks) == 1


def critical_indices(A: DCollection) -> List[int]:
    if not A.mults:
        raise NotNormal("the empty collection has no critical places")
    if not is_normal(A):
        raise NotNormal(f"collection is not normal: {A.mults}")
    d = A.base
    k = A.top
    return [j for j, a in enumerate(A.mults) if a < d - 1 or j == k]


def decompose(A: DCollection) -> Decomposition:
    """Split a normal, nonempty collection into irreducible blocks.

    Raises NotNormal otherwise; use :func:`span_profile` for arbitrary input.
    """
    d = A.base
    blocks = []
    shift = 0
    for top in critical_indices(A):
        scale = d**shift
        length = 0
        for t in range(top, shift - 1, -1):
            length = length * d + A[t]
        blocks.append(IrreducibleBlock(shift, top, length * scale, length))
        shift = top + 1
    return Decomposition(d, tuple(blocks))


def span_profile(A: DCollection) -> Decomposition:
    N = normalize(A)
    if not N.mults:
        return Decomposition(A.base)
    return decompose(N)


def contains(A: DCollection, n: int) -> bool:
    """Decide whether ``n`` is a subset sum of ``A``.

    Blocks are peeled off from the top: each takes as many of its units
    ``d**shift`` as fit, capped at its length. The prefix bound on lower
    blocks makes this greedy choice the only possible one.
    """
    if n < 0 or n > sum_value(A):
        return False
    profile = span_profile(A)
    r = n
    for block in reversed(profile.blocks):
        unit = profile.base**block.shift
        r -= min(block.length, r // unit) * unit
    return r == 0


def components(A: DCollection, n: int) -> Tuple[int, ...] | None:
    """Per-block multipliers ``(c_1, ..., c_s)`` with ``n = sum(c_i * d**shift_i)``.

    Returns None when ``n`` is not in the span.
    """
    if n < 0:
        return None
    profile = span_profile(A)
    r = n
    out = []
    for block in reversed(profile.blocks):
        unit = profile.base**block.shift
        c = min(block.length, r // unit)
        out.append(c)
        r -= c * unit
    return tuple(reversed(out)) if r == 0 else None


def mex(A: DCollection) -> int:
    profile = span_profile(A)
    if len(profile.blocks) > 1:
        return profile.blocks[0].block_sum + 1
    return sum_value(A) + 1


def span_size(A: DCollection) -> int:
    size = 1
    for block in span_profile(A).blocks:
        size *= block.length + 1
    return size


def enumerate_span(A: DCollection, limit: int) -> List[int]:
    """Return the ``limit`` smallest subset sums in increasing order.

    The block multipliers are run as a mixed-radix odometer with the lowest
    block as the fastest digit; that order is numeric order because each
    block's range stays below the next block's unit.
    """
    if limit < 1:
        raise ValueError(f"limit must be positive, got {limit}")
    profile = span_profile(A)
    units = [profile.base**b.shift for b in reversed(profile.blocks)]
    digits = itertools.product(*(range(b.length + 1) for b in reversed(profile.blocks)))
    return [sum(c * u for c, u in zip(cs, units)) for cs in itertools.islice(digits, limit)]


def span_equal(A: DCollection, B: DCollection) -> bool:
    require_same_base(A, B)
    return normalize(A) == normalize(B)


def exchange_preserves_span(A: DCollection, i: int) -> bool:
    """Whether ``elementary_exchange(A, i)`` has the same span as ``A``.

    True exactly when normalizing below ``i`` piles more than ``2(d-1)``
    tokens onto place ``i``.
    """
    if i < 0 or A[i] < A.base:
        raise InvalidExchange(f"cannot exchange at place {i}: multiplicity below {A.base}")
    return normalize_up_to(A, i)[i] > A.threshold
