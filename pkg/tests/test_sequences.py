"""Sequence generators: frozen prefixes, recurrence laws, block/scalar agreement."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from autoseries.errors import DomainError
from autoseries.sequences import (
    CoefficientSequence,
    affine_seq,
    delta,
    digit_sum,
    digit_sum_block,
    period_doubling,
    period_doubling_block,
    pm_thue_morse,
    pm_thue_morse_block,
    thue_morse,
    thue_morse_block,
)

EXHAUSTIVE_N = 100_000


# -- digit-parity t_n ---------------------------------------------------------


def test_thue_morse_prefix():
    assert [thue_morse(n) for n in range(8)] == [0, 1, 1, 0, 1, 0, 0, 1]


def test_thue_morse_powers_of_two():
    for k in range(0, 60):
        assert thue_morse(2**k) == 1


def test_thue_morse_million_against_popcount_oracle():
    n = 10**6
    oracle = bin(n).count("1") & 1
    assert oracle == 1  # frozen: 10^6 has seven set bits
    assert thue_morse(n) == oracle


def test_thue_morse_recurrences_exhaustive():
    t = thue_morse_block(0, 2 * EXHAUSTIVE_N + 2)
    n = np.arange(1, EXHAUSTIVE_N + 1)
    assert np.array_equal(t[2 * n], t[n])
    assert np.array_equal(t[2 * n + 1], 1 - t[n])


def test_thue_morse_rejects_negative():
    with pytest.raises(DomainError):
        thue_morse(-1)


# -- +/-1 form ----------------------------------------------------------------


def test_pm_prefix():
    assert [pm_thue_morse(n) for n in range(4)] == [1, -1, -1, 1]


def test_pm_recurrences_first_thousand():
    for n in range(1001):
        assert pm_thue_morse(2 * n) == pm_thue_morse(n)
        assert pm_thue_morse(2 * n + 1) == -pm_thue_morse(n)


def test_pm_equals_one_minus_two_t_exhaustive():
    t = thue_morse_block(0, EXHAUSTIVE_N)
    e = pm_thue_morse_block(0, EXHAUSTIVE_N)
    assert np.array_equal(e, 1 - 2 * t)


def test_pm_block_sums_vanish_on_even_prefixes():
    # every block [2m, 2m+1] sums to zero, so prefixes of even length do too
    e = pm_thue_morse_block(0, 2 * EXHAUSTIVE_N)
    pair_sums = e[0::2] + e[1::2]
    assert np.all(pair_sums == 0)
    assert int(np.sum(e)) == 0


# -- difference sequence ------------------------------------------------------


def test_delta_examples():
    assert delta(1) == 1
    assert delta(3) == -1
    assert delta(6) == 0


def test_delta_rejects_zero():
    with pytest.raises(DomainError):
        delta(0)


def test_delta_range_and_zero_pattern():
    t = thue_morse_block(0, EXHAUSTIVE_N + 1)
    d = t[1:] - t[:-1]
    assert set(np.unique(d)) <= {-1, 0, 1}
    # delta vanishes exactly where consecutive values agree
    zeros = np.flatnonzero(d == 0) + 1
    assert np.array_equal(zeros, np.flatnonzero(t[1:] == t[:-1]) + 1)


def test_first_double_zeros_of_t():
    # first indices with t_{n-1} = t_n = 0
    t = thue_morse_block(0, 30)
    hits = [n for n in range(1, 30) if t[n - 1] == 0 and t[n] == 0]
    assert hits[:4] == [6, 10, 18, 24]


# -- period-doubling ----------------------------------------------------------


def _period_doubling_oracle(n: int, memo={0: 0}) -> int:
    # independent unroll of the defining recurrence
    if n in memo:
        return memo[n]
    if n % 2 == 0:
        v = 0
    elif n % 4 == 1:
        v = 1
    else:
        v = _period_doubling_oracle((n - 3) // 4)
    memo[n] = v
    return v


def test_period_doubling_prefix():
    expected = [_period_doubling_oracle(n) for n in range(8)]
    assert expected == [0, 1, 0, 0, 0, 1, 0, 1]
    assert [period_doubling(n) for n in range(8)] == expected


def test_period_doubling_rules_exhaustive():
    p = period_doubling_block(0, 4 * EXHAUSTIVE_N + 4)
    n = np.arange(EXHAUSTIVE_N + 1)
    assert np.all(p[2 * n] == 0)
    assert np.all(p[4 * n + 1] == 1)
    assert np.array_equal(p[4 * n + 3], p[n])


def test_period_doubling_block_matches_scalar():
    blk = period_doubling_block(0, 3000)
    assert [period_doubling(n) for n in range(3000)] == blk.tolist()


# -- digit sums ----------------------------------------------------------------


def test_digit_sum_examples():
    assert digit_sum(255, 2) == 8
    assert digit_sum(1000, 10) == 1
    assert digit_sum(7, 3) == 3  # 7 = 21 in base 3


def test_digit_sum_rejects_small_base():
    with pytest.raises(DomainError):
        digit_sum(5, 1)


def test_digit_sum_base2_parity_is_thue_morse():
    s2 = digit_sum_block(1, EXHAUSTIVE_N + 1, 2)
    t = thue_morse_block(1, EXHAUSTIVE_N + 1)
    assert np.array_equal(s2 % 2, t)


@pytest.mark.parametrize("base", [2, 3, 10])
def test_digit_sum_block_matches_scalar(base):
    blk = digit_sum_block(1, 2000, base)
    assert [digit_sum(n, base) for n in range(1, 2000)] == blk.tolist()


@pytest.mark.parametrize("base", [2, 3, 10])
def test_digit_sum_majorant(base):
    seq = CoefficientSequence.digit_sum(base)
    vals = digit_sum_block(1, 10_001, base)
    for n in (1, 2, 9, 10, 99, 100, 9999, 10000):
        assert vals[n - 1] <= seq.value_bound(n)
    # the majorant is monotone, so the block maximum obeys the last bound
    assert vals.max() <= seq.value_bound(10_000)


# -- affine alphabets -----------------------------------------------------------


def test_affine_examples():
    assert [affine_seq(n, -1.0, 0.0) for n in range(4)] == [-1.0, 0.0, 0.0, -1.0]
    for n in range(1001):
        assert affine_seq(n, 0.0, 1.0) == thue_morse(n)
    r2 = 2.0**0.5
    q = CoefficientSequence.affine(-r2, 1.0 - r2)
    for n in range(50):
        assert q.term(n) == (1.0 - r2 if thue_morse(n) else -r2)


def test_affine_value_bound():
    q = CoefficientSequence.affine(-2.5, 0.5)
    assert q.bound_constant == 2.5
    assert CoefficientSequence.plus_minus().bound_constant == 1.0


# -- stream plumbing -------------------------------------------------------------


@pytest.mark.parametrize(
    "seq",
    [
        CoefficientSequence.thue_morse(),
        CoefficientSequence.shifted_thue_morse(),
        CoefficientSequence.plus_minus(),
        CoefficientSequence.shifted_plus_minus(),
        CoefficientSequence.delta(),
        CoefficientSequence.period_doubling(),
        CoefficientSequence.digit_sum(3),
        CoefficientSequence.affine(-0.5, 0.5),
    ],
    ids=lambda s: s.label(),
)
def test_block_matches_term_everywhere(seq):
    lo = seq.min_index
    blk = seq.block(lo, lo + 500)
    assert blk.dtype == np.float64
    assert [seq.term(n) for n in range(lo, lo + 500)] == blk.tolist()


def test_min_index_enforced():
    with pytest.raises(DomainError):
        CoefficientSequence.delta().term(0)
    with pytest.raises(DomainError):
        CoefficientSequence.shifted_plus_minus().block(0, 5)


def test_generators_are_pure():
    assert [thue_morse(12345)] * 3 == [thue_morse(12345) for _ in range(3)]
    seq = CoefficientSequence.digit_sum(7)
    assert np.array_equal(seq.block(1, 100), seq.block(1, 100))


# -- property-based laws -----------------------------------------------------------


@given(st.integers(min_value=0, max_value=2**62))
def test_doubling_laws_random(n):
    assert thue_morse(2 * n) == thue_morse(n)
    assert thue_morse(2 * n + 1) == 1 - thue_morse(n)
    assert pm_thue_morse(n) == 1 - 2 * thue_morse(n)


@given(st.integers(min_value=0, max_value=2**62))
def test_period_doubling_laws_random(n):
    assert period_doubling(2 * n) == 0
    assert period_doubling(4 * n + 1) == 1
    assert period_doubling(4 * n + 3) == period_doubling(n)


@given(st.integers(min_value=1, max_value=2**62), st.integers(min_value=2, max_value=16))
@settings(max_examples=200)
def test_digit_sum_laws_random(n, base):
    # shifting by one base digit preserves the sum; congruence mod base-1
    assert digit_sum(n * base, base) == digit_sum(n, base)
    assert digit_sum(n, base) % (base - 1) == n % (base - 1)
