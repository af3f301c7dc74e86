"""d-collections, elementary exchanges and normalization.

A d-collection is a finite multiset of powers of a fixed base ``d >= 2``,
stored as the multiplicity sequence ``(a_0, ..., a_k)`` where ``a_i`` counts
tokens of value ``d**i``.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Tuple


class InvalidCollection(ValueError):
    """Raised for a base below 2 or a negative multiplicity."""


class DomainError(ValueError):
    """Base class for errors raised by operations on valid collections."""


class InvalidExchange(DomainError):
    pass


class NotNormal(DomainError):
    pass


class BaseMismatch(DomainError):
    pass


@dataclass(frozen=True)
class DCollection:
    """Multiplicities of the tokens ``1, d, d**2, ...``.

    Trailing zero multiplicities are trimmed on construction, so two
    collections holding the same multiset always compare equal.
    """

    base: int
    mults: Tuple[int, ...] = ()

    def __post_init__(self):
        try:
            base = operator.index(self.base)
            mults = [operator.index(a) for a in self.mults]
        except TypeError as exc:
            raise InvalidCollection(f"non-integer value: {exc}") from None
        if base < 2:
            raise InvalidCollection(f"base must be at least 2, got {base}")
        for i, a in enumerate(mults):
            if a < 0:
                raise InvalidCollection(f"negative multiplicity {a} at place {i}")
        while mults and mults[-1] == 0:
            mults.pop()
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "mults", tuple(mults))

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError(i)
        return self.mults[i] if i < len(self.mults) else 0

    @property
    def top(self) -> int:
        """Index of the largest token, -1 for the empty collection."""
        return len(self.mults) - 1

    @property
    def threshold(self) -> int:
        # 2(d-1): the largest multiplicity allowed in a normal collection
        return 2 * (self.base - 1)


def make_collection(base: int, mults: Iterable[int] = ()) -> DCollection:
    return DCollection(base, tuple(mults))


def sum_value(A: DCollection) -> int:
    d = A.base
    total = 0
    for a in reversed(A.mults):
        total = total * d + a
    return total


def token_count(A: DCollection) -> int:
    return sum(A.mults)


def square_sum(A: DCollection) -> int:
    """Sum of the squared token values, ``sum(a_i * d**(2*i))``.

    Every elementary exchange strictly increases this quantity, which is
    what makes any exchange sequence terminate.
    """
    d2 = A.base * A.base
    total = 0
    for a in reversed(A.mults):
        total = total * d2 + a
    return total


def require_same_base(A: DCollection, B: DCollection) -> None:
    if A.base != B.base:
        raise BaseMismatch(f"bases differ: {A.base} vs {B.base}")


def dominates(A: DCollection, B: DCollection) -> bool:
    """Return True when ``A`` is a submultiset of ``B`` (``a_i <= b_i`` for all i)."""
    require_same_base(A, B)
    return len(A.mults) <= len(B.mults) and all(a <= b for a, b in zip(A.mults, B.mults))


def elementary_exchange(A: DCollection, i: int) -> DCollection:
    """Replace ``d`` tokens ``d**i`` by a single token ``d**(i+1)``."""
    d = A.base
    if i < 0 or A[i] < d:
        raise InvalidExchange(f"cannot exchange at place {i}: multiplicity {A[i] if i >= 0 else 0} < {d}")
    mults = list(A.mults) + [0]
    mults[i] -= d
    mults[i + 1] += 1
    return DCollection(d, tuple(mults))


def is_proper_exchange(A: DCollection, i: int) -> bool:
    return i >= 0 and A[i] > A.threshold


def is_normal(A: DCollection) -> bool:
    return all(a <= A.threshold for a in A.mults)


def is_j_normal(A: DCollection, j: int) -> bool:
    """``d-1 <= a_i <= 2(d-1)`` below ``j`` and ``a_j < d-1``."""
    d = A.base
    if j < 0:
        return False
    return all(d - 1 <= A[i] <= A.threshold for i in range(j)) and A[j] < d - 1


def _sweep(base: int, mults: Sequence[int], stop: int | None) -> DCollection:
    # Places are visited in increasing order; at each place the whole batch
    # of exchanges the inner while-loop would perform is applied at once.
    d = base
    limit = 2 * (d - 1)
    work = list(mults)
    i = 0
    while i < len(work) and (stop is None or i < stop):
        a = work[i]
        if a > limit:
            q = -(-(a - limit) // d)
            work[i] = a - q * d
            if i + 1 == len(work):
                work.append(0)
            work[i + 1] += q
        i += 1
    return DCollection(d, tuple(work))


def normalize(A: DCollection) -> DCollection:
    """Apply proper exchanges place by place from the bottom until normal.

    The result has the same sum and the same set of subset sums as ``A``.
    """
    return _sweep(A.base, A.mults, None)


def normalize_up_to(A: DCollection, j: int) -> DCollection:
    """Like :func:`normalize`, but never exchanges at places ``>= j``."""
    if j < 0:
        raise ValueError(f"j must be nonnegative, got {j}")
    return _sweep(A.base, A.mults, j)


def iter_schedule(A: DCollection, schedule: Iterable[int]) -> Iterator[Tuple[int, DCollection]]:
    """Yield ``(i, state)`` after every single exchange performed.

    Scheduled places are exchanged only when ``a_i >= 2d-1`` and skipped
    otherwise. Once the schedule runs out, the remaining proper exchanges
    are done bottom-up, one at a time.
    """
    state = A
    for i in schedule:
        if is_proper_exchange(state, i):
            state = elementary_exchange(state, i)
            yield i, state
    i = 0
    while i <= state.top:
        while state[i] > state.threshold:
            state = elementary_exchange(state, i)
            yield i, state
        i += 1


def normalize_with_schedule(A: DCollection, schedule: Iterable[int]) -> DCollection:
    """Normal form reached by trying the exchanges in ``schedule`` first.

    Always equal to ``normalize(A)``; exists to exercise that claim.
    """
    state = A
    for i in schedule:
        if is_proper_exchange(state, i):
            state = elementary_exchange(state, i)
    return normalize(state)
