"""Subset sums of finite multisets of powers of a fixed base."""

from .core import (
    BaseMismatch,
    DCollection,
    DomainError,
    InvalidCollection,
    InvalidExchange,
    NotNormal,
    dominates,
    elementary_exchange,
    is_j_normal,
    is_normal,
    is_proper_exchange,
    iter_schedule,
    make_collection,
    normalize,
    normalize_up_to,
    normalize_with_schedule,
    square_sum,
    sum_value,
    token_count,
)
from .oracle import OracleBoundExceeded, SpanSet, oracle_contains, oracle_equal, oracle_span
from .span import (
    Decomposition,
    IrreducibleBlock,
    components,
    contains,
    critical_indices,
    decompose,
    enumerate_span,
    exchange_preserves_span,
    mex,
    span_equal,
    span_profile,
    span_size,
)

__version__ = "0.1.0"
