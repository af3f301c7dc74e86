"""Acceptance criteria, one test each.

Every fast procedure is compared against the brute-force oracle on seeded
random corpora. Each test records a PASS/FAIL line that is repeated in the
terminal summary.
"""

import itertools
import json
import random
import subprocess
import sys
import time
from pathlib import Path

import pytest

from powerspan import (
    DCollection,
    contains,
    decompose,
    elementary_exchange,
    enumerate_span,
    exchange_preserves_span,
    is_j_normal,
    is_normal,
    iter_schedule,
    mex,
    normalize,
    normalize_with_schedule,
    oracle_contains,
    oracle_equal,
    oracle_span,
    span_equal,
    span_size,
    square_sum,
    sum_value,
)

SEED = 20261017
BASES = (2, 3, 4, 5)
PER_BASE = 600
MAX_LEN = 6
MAX_SUM = 10**4
GOLDEN = Path(__file__).parent / "golden"


def random_collection(rng, d, max_len=MAX_LEN, max_sum=MAX_SUM):
    while True:
        mults = [rng.randint(0, 3 * d) for _ in range(rng.randint(0, max_len))]
        A = DCollection(d, tuple(mults))
        if sum_value(A) <= max_sum:
            return A


@pytest.fixture(scope="module")
def corpus():
    rng = random.Random(SEED)
    return {d: [random_collection(rng, d) for _ in range(PER_BASE)] for d in BASES}


@pytest.fixture(scope="module")
def mixed(corpus):
    # round-robin over bases so any prefix covers every d
    return [A for group in zip(*corpus.values()) for A in group]


def test_normalization_soundness(corpus, report):
    start = time.perf_counter()
    bad = 0
    for d, items in corpus.items():
        for A in items:
            N = normalize(A)
            if not (is_normal(N) and oracle_equal(A, N)):
                bad += 1
    elapsed = time.perf_counter() - start
    n = sum(len(v) for v in corpus.values())
    ok = bad == 0 and elapsed < 60 and all(len(v) >= 500 for v in corpus.values())
    assert report("1 normalization soundness", ok, f"{n} collections, {bad} failures, {elapsed:.2f}s")


def _pair_variants(rng, A):
    d = A.base
    mults = list(A.mults) + [0]
    # near miss: one multiplicity off by one
    i = rng.randrange(len(mults))
    near = mults[:]
    near[i] = max(0, near[i] + rng.choice((-1, 1)))
    yield DCollection(d, tuple(near))
    # any applicable exchange, proper or not
    valid = [i for i, a in enumerate(A.mults) if a >= d]
    if valid:
        yield elementary_exchange(A, rng.choice(valid))
    # undo an exchange: one token d**(i+1) becomes d tokens d**i
    splittable = [i for i, a in enumerate(A.mults) if i > 0 and a > 0]
    if splittable:
        i = rng.choice(splittable)
        split = mults[:]
        split[i] -= 1
        split[i - 1] += d
        yield DCollection(d, tuple(split))
    # partial normalization along a random schedule
    state = A
    for i in [rng.randrange(len(mults)) for _ in range(rng.randint(1, 6))]:
        if state[i] >= 2 * d - 1:
            state = elementary_exchange(state, i)
    yield state


def test_span_equality_both_directions(corpus, report):
    rng = random.Random(SEED + 2)
    pairs = []
    for d, items in corpus.items():
        for A in items:
            pairs.extend((A, B) for B in _pair_variants(rng, A))
            pairs.append((A, rng.choice(items)))
    mismatches = sum(span_equal(A, B) != oracle_equal(A, B) for A, B in pairs)
    equal = sum(oracle_equal(A, B) for A, B in pairs)
    ok = mismatches == 0 and len(pairs) >= 2000 and 0 < equal < len(pairs)
    assert report("2 span equality", ok,
                  f"{len(pairs)} pairs ({equal} equal, {len(pairs) - equal} unequal), {mismatches} discrepancies")


def test_membership(mixed, report):
    sample = [A for A in mixed if sum_value(A) <= 4000][:240]
    checked = mismatches = 0
    for A in sample:
        S = oracle_span(A)
        for n in range(sum_value(A) + 2):
            checked += 1
            mismatches += contains(A, n) != (n in S)
        for n in (0, sum_value(A) // 2, sum_value(A) + 1):
            mismatches += contains(A, n) != oracle_contains(A, n)
    ok = mismatches == 0 and len(sample) >= 200
    assert report("3 membership", ok, f"{len(sample)} collections, {checked} queries, {mismatches} discrepancies")


def test_mex_size_enumeration(mixed, report):
    sample = mixed[:400]
    bad = 0
    for A in sample:
        S = list(oracle_span(A))
        expected_mex = next(n for n, s in enumerate(S + [None]) if n != s)
        bad += mex(A) != expected_mex
        bad += span_size(A) != len(S)
        bad += enumerate_span(A, len(S)) != S
    ok = bad == 0 and len(sample) >= 200
    assert report("4 mex/size/enumeration", ok, f"{len(sample)} collections, {bad} discrepancies")


def test_confluence(mixed, report):
    rng = random.Random(SEED + 5)
    sample = mixed[:250]
    runs = mismatches = non_increasing = exchanges = 0
    for A in sample:
        target = normalize(A)
        for _ in range(25):
            schedule = [rng.randrange(A.top + 3) for _ in range(rng.randint(0, 20))]
            runs += 1
            mismatches += normalize_with_schedule(A, schedule) != target
            state = A
            for _, nxt in iter_schedule(A, schedule):
                exchanges += 1
                non_increasing += square_sum(nxt) <= square_sum(state)
                state = nxt
            mismatches += state != target
    ok = mismatches == 0 and non_increasing == 0 and len(sample) >= 200
    assert report("5 confluence", ok,
                  f"{runs} schedules, {exchanges} exchanges, {mismatches} discrepancies, "
                  f"{non_increasing} semi-invariant violations")


def test_exchange_safety(mixed, report):
    worked = DCollection(2, (3, 2, 0))
    worked_ok = (exchange_preserves_span(worked, 1)
                 and list(oracle_span(elementary_exchange(worked, 1))) == list(range(8)))
    cases = [(worked, 1)]
    for A in mixed:
        cases.extend((A, i) for i, a in enumerate(A.mults) if a >= A.base)
    cases = cases[:1200]
    mismatches = preserved = 0
    for A, i in cases:
        expected = oracle_equal(elementary_exchange(A, i), A)
        preserved += expected
        mismatches += exchange_preserves_span(A, i) != expected
    ok = worked_ok and mismatches == 0 and len(cases) >= 500 and 0 < preserved < len(cases)
    assert report("6 exchange safety", ok,
                  f"{len(cases)} pairs ({preserved} preserving), {mismatches} discrepancies, "
                  f"worked case {'ok' if worked_ok else 'WRONG'}")


def test_full_interval(report):
    rng = random.Random(SEED + 7)
    bad = 0
    count = 300
    for _ in range(count):
        d = rng.choice(BASES)
        k = rng.randint(0, 5)
        mults = [rng.randint(d - 1, 3 * d) for _ in range(k)] + [rng.randint(1, 3 * d)]
        A = DCollection(d, tuple(mults))
        total = sum_value(A)
        bad += list(oracle_span(A)) != list(range(total + 1))
        bad += total < 2 * d**k - 1
    assert report("7 full interval below top", bad == 0, f"{count} collections, {bad} failures")


def test_j_normal_mex(report):
    rng = random.Random(SEED + 8)
    bad = 0
    count = 200
    for _ in range(count):
        d = rng.choice(BASES)
        j = rng.randint(0, 4)
        mults = [rng.randint(d - 1, 2 * (d - 1)) for _ in range(j)] + [rng.randint(0, d - 2)]
        mults += [rng.randint(0, 3 * d) for _ in range(rng.randint(0, 1))] + [rng.randint(1, 3 * d)]
        A = DCollection(d, tuple(mults))
        assert is_j_normal(A, j)
        X = 1 + sum(a * d**i for i, a in enumerate(A.mults[: j + 1]))
        S = oracle_span(A)
        bad += not (mex(A) == X < d ** (j + 1))
        bad += X in S or any(n not in S for n in range(X))
    assert report("8 j-normal mex formula", bad == 0, f"{count} collections, {bad} failures")


def test_irreducible_sums_distinct(report):
    details = []
    ok = True
    for d in (2, 3):
        sums = []
        for k in range(5):
            lower = itertools.product(range(d - 1, 2 * d - 1), repeat=k)
            for low in lower:
                for top in range(1, 2 * d - 1):
                    A = DCollection(d, low + (top,))
                    ok &= is_normal(A) and decompose(A).irreducible
                    sums.append(sum_value(A))
        ok &= len(sums) == len(set(sums))
        details.append(f"d={d}: {len(sums)} collections, {len(set(sums))} distinct sums")
    assert report("9 irreducible distinctness", ok, "; ".join(details))


def test_cli_contract(report):
    cases = json.loads((GOLDEN / "cases.json").read_text())
    failed = []
    for case in cases:
        proc = subprocess.run([sys.executable, "-m", "powerspan", *case["argv"]], capture_output=True)
        expected = (GOLDEN / f"{case['name']}.out").read_bytes()
        if proc.stdout != expected or proc.returncode != case["exit"]:
            failed.append(case["name"])
    assert report("10 CLI contract", not failed,
                  f"{len(cases)} golden cases" + (f", failed: {failed}" if failed else ""))
