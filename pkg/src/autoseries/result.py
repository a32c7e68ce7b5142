"""Evaluation result record shared by the series evaluator and the zeta engine."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any


class Method(Enum):
    """How a value was produced.

    NAIVE               direct bounded summation with an analytic tail bound
    ODD_DECOMPOSITION   odd-index split of the +/-1 series, scaled by 2^s/(2^s+1)
    FUNCTIONAL_EQUATION binomial functional-equation acceleration
    EULER_MACLAURIN     Euler-Maclaurin zeta engine (and values derived from it)
    """

    NAIVE = "naive"
    ODD_DECOMPOSITION = "odd-decomposition"
    FUNCTIONAL_EQUATION = "functional-equation"
    EULER_MACLAURIN = "euler-maclaurin"


@dataclass(frozen=True)
class EvalResult:
    """A value with a rigorous absolute error bound.

    ``value`` is a float on the double-precision path and an mpmath ``mpf``
    when more working bits were requested.  ``abs_error_bound`` always
    satisfies |value - exact| <= abs_error_bound and, on success, is at most
    the tolerance that was requested.
    """

    value: Any
    abs_error_bound: float
    terms_used: int
    method: Method

    def __post_init__(self) -> None:
        if self.terms_used < 1:
            raise ValueError("terms_used must be >= 1")
        if self.abs_error_bound < 0:
            raise ValueError("abs_error_bound must be non-negative")
