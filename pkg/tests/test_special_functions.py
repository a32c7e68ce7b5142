"""Zeta engine: closed-form oracles, brute-force brackets, bound honesty."""

import math
from fractions import Fraction

import mpmath
import pytest

from autoseries.errors import DomainError, ResourceLimitError
from autoseries.precision import Precision
from autoseries.result import Method
from autoseries.special_functions import dirichlet_eta, hurwitz_zeta, riemann_zeta

P12 = Precision(target_eps=1e-12)
GRID = [1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 4.5, 5.0, 5.5, 6.0, 6.5, 7.0, 7.5, 8.0]


# -- classical closed forms -----------------------------------------------------


def test_zeta_two():
    r = riemann_zeta(2.0, P12)
    assert abs(r.value - math.pi**2 / 6) <= 1e-12
    assert r.abs_error_bound <= 1e-12
    assert r.method is Method.EULER_MACLAURIN


def test_zeta_four():
    r = riemann_zeta(4.0, P12)
    assert abs(r.value - math.pi**4 / 90) <= 1e-12


def test_zeta_three_against_partial_sum_oracle():
    # brute force: sum 1/n^3 to N = 10^6 brackets the value with integral tails
    n_max = 10**6
    partial = math.fsum(1.0 / n**3 for n in range(1, n_max + 1))
    lower = partial + 1.0 / (2.0 * (n_max + 1) ** 2)
    upper = partial + 1.0 / (2.0 * n_max**2)
    r = riemann_zeta(3.0, P12)
    assert lower - r.abs_error_bound <= r.value <= upper + r.abs_error_bound


def test_eta_closed_forms():
    r = dirichlet_eta(2.0, P12)
    assert abs(r.value - math.pi**2 / 12) <= 1e-12
    r = dirichlet_eta(4.0, P12)
    assert abs(r.value - (1 - 2.0**-3) * math.pi**4 / 90) <= 1e-12


def test_eta_four_against_alternating_oracle():
    # alternating partial sums bracket eta with |tail| <= 1/(N+1)^4
    n_max = 10**4
    partial = math.fsum((-1.0) ** (n - 1) / n**4 for n in range(1, n_max + 1))
    tail = 1.0 / (n_max + 1) ** 4
    r = dirichlet_eta(4.0, P12)
    assert abs(r.value - partial) <= tail + r.abs_error_bound


# -- Hurwitz -----------------------------------------------------------------


@pytest.mark.parametrize("s", [2.0, 3.0, 4.0])
def test_hurwitz_at_one_is_zeta(s):
    z = riemann_zeta(s, P12)
    h = hurwitz_zeta(s, 1.0, P12)
    assert abs(z.value - h.value) <= z.abs_error_bound + h.abs_error_bound


def test_hurwitz_quarter_against_partial_sum_oracle():
    n_max = 10**6
    a = 0.25
    partial = math.fsum((n + a) ** -2.0 for n in range(n_max + 1))
    lower = partial + 1.0 / (n_max + 1 + a)
    upper = partial + 1.0 / (n_max + a)
    r = hurwitz_zeta(2.0, Fraction(1, 4), P12)
    assert lower - r.abs_error_bound <= r.value <= upper + r.abs_error_bound


def test_hurwitz_half_closed_form():
    # at a = 1/2 the Hurwitz value is (2^s - 1) zeta(s)
    r = hurwitz_zeta(2.0, 0.5, P12)
    assert abs(r.value - 3.0 * math.pi**2 / 6) <= 1e-12


# -- grid invariants ------------------------------------------------------------


def test_eta_zeta_relation_on_grid():
    for s in GRID:
        z = riemann_zeta(s, P12)
        e = dirichlet_eta(s, P12)
        resid = abs(e.value + 2.0 ** (1 - s) * z.value - z.value)
        assert resid <= e.abs_error_bound + (1 + 2.0 ** (1 - s)) * z.abs_error_bound


def test_hurwitz_one_matches_zeta_on_grid():
    for s in GRID:
        z = riemann_zeta(s, P12)
        h = hurwitz_zeta(s, 1, P12)
        assert abs(z.value - h.value) <= z.abs_error_bound + h.abs_error_bound


def test_zeta_strictly_decreasing_on_grid():
    values = [riemann_zeta(s, P12).value for s in GRID]
    assert all(a > b for a, b in zip(values, values[1:]))


def test_bound_covers_doubled_precision_deviation():
    high = Precision(working_bits=106, target_eps=1e-25)
    for s in (1.5, 2.0, 3.0, 6.0):
        r = riemann_zeta(s, Precision(target_eps=1e-10))
        r2 = riemann_zeta(s, high)
        assert abs(r.value - float(r2.value)) <= r.abs_error_bound
        h = hurwitz_zeta(s, 0.25, Precision(target_eps=1e-10))
        h2 = hurwitz_zeta(s, Fraction(1, 4), high)
        assert abs(h.value - float(h2.value)) <= h.abs_error_bound


def test_matches_mpmath_reference():
    mpmath.mp.prec = 80
    for s in (1.5, 2.0, 3.7, 6.0):
        r = riemann_zeta(s, P12)
        assert abs(r.value - float(mpmath.zeta(s))) <= r.abs_error_bound
    h = hurwitz_zeta(2.5, 0.25, P12)
    assert abs(h.value - float(mpmath.zeta(2.5, 0.25))) <= h.abs_error_bound


def test_high_precision_path():
    p = Precision(working_bits=140, target_eps=1e-35)
    r = riemann_zeta(2.0, p)
    mpmath.mp.prec = 200
    ref = mpmath.pi**2 / 6
    assert abs(r.value - ref) < mpmath.mpf(10) ** -35


# -- domain errors ----------------------------------------------------------------


@pytest.mark.parametrize("s", [1.0, 0.5, -2.0])
def test_rejects_s_at_most_one(s):
    with pytest.raises(DomainError):
        riemann_zeta(s)
    with pytest.raises(DomainError):
        dirichlet_eta(s)
    with pytest.raises(DomainError):
        hurwitz_zeta(s, 0.5)


@pytest.mark.parametrize("a", [0.0, -0.25, 1.5])
def test_rejects_bad_hurwitz_parameter(a):
    with pytest.raises(DomainError):
        hurwitz_zeta(2.0, a)


def test_unreachable_tolerance_raises():
    with pytest.raises((ResourceLimitError, DomainError)):
        riemann_zeta(2.0, Precision(working_bits=53, target_eps=1e-18))
