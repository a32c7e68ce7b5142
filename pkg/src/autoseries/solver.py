"""Solve the alphabet balance function for new series identities.

For sequences q_n = t_n - k and r_n = t_n + l over the 0/1 digit-parity
stream, the combination

    (2^s+1) sum(q_{n-1}/n^s) + (2^s-1) sum(r_n/n^s)
        = zeta(s) * (2^s - (2^s (k-l) + (k+l)))

holds for every real s > 1, so the balance value

    lam(s; k, l) = 2^s - (2^s (k-l) + (k+l))

selects which closed-form family an alphabet produces: 0 collapses the
zeta term and leaves a pure ratio between the two series, 2^s reproduces
the zeta combination, and 2^s - 2 yields the alternating-zeta combination
via eta(s) = (1 - 2^(1-s)) zeta(s).  Each case solves for s in closed form
as a base-2 logarithm of a ratio of the alphabet offsets.

Positivity of k and l is NOT required here: the algebra nowhere uses it,
and the all-s solution of the first case is exactly k = 1/2, l = -1/2.
Solutions with s <= 1 are returned flagged rather than rejected; the
identity they denote is valid algebra that this package cannot verify
numerically (its series evaluators need s > 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError
from .evaluator import IndexShift, SeriesSpec
from .identities import (
    CoefficientFunction,
    Eta,
    Identity,
    LhsTerm,
    Mul,
    Route,
    TwoPowerRatio,
    TwoPowPoly,
    ValidityDomain,
    ZERO_RHS,
    Zeta,
)
from .sequences import CoefficientSequence

#: Post-solve residual tolerance, relative to 1 + 2^s.
RESIDUAL_RTOL = 1e-12


class AlphabetCase(Enum):
    """Which target the balance value must hit."""

    ZERO = "zero"
    POW_S = "pows"
    POW_S_MINUS_2 = "powsminus2"


@dataclass(frozen=True)
class AlphabetSolution:
    """A solved alphabet (k, l, case, s) ready to be minted into an identity.

    ``verifiable`` is False when the solved exponent is <= 1; the algebra
    still holds but the series evaluators cannot check it.
    """

    k: float
    l: float
    case: AlphabetCase
    s: float
    residual: float
    verifiable: bool

    def describe(self) -> str:
        note = "" if self.verifiable else "  [s <= 1: not verifiable by this package]"
        return (
            f"case={self.case.value} k={self.k:.12g} l={self.l:.12g} "
            f"-> s={self.s:.12g} (balance residual {self.residual:.2e}){note}"
        )


def lambda_fn(s: float, k: float, l: float) -> float:
    """The balance value 2^s - (2^s (k-l) + (k+l))."""
    x = 2.0**s
    return x - (x * (k - l) + (k + l))


def case_target(case: AlphabetCase, s: float) -> float:
    """The value lam must take for the case's closed form to hold at s."""
    if case is AlphabetCase.ZERO:
        return 0.0
    if case is AlphabetCase.POW_S:
        return 2.0**s
    return 2.0**s - 2.0


def _ratio_for_case(case: AlphabetCase, k: float, l: float) -> float:
    """The positive ratio whose base-2 log solves the case, with named guards."""
    if case is AlphabetCase.ZERO:
        if k == l + 1.0:
            raise DomainError("case 'zero' needs k != l + 1 (denominator -k+l+1 vanishes)")
        if k + l == 0.0:
            raise DomainError("case 'zero' needs k + l != 0")
        ratio = (k + l) / (-k + l + 1.0)
        if not ratio > 0.0:
            raise DomainError("case 'zero' needs (k+l)/(-k+l+1) > 0")
        return ratio
    if k == l:
        raise DomainError(f"case '{case.value}' needs k != l (denominator k-l vanishes)")
    if case is AlphabetCase.POW_S:
        if k + l == 0.0:
            raise DomainError("case 'pows' needs k + l != 0")
        ratio = -(k + l) / (k - l)
        if not ratio > 0.0:
            raise DomainError("case 'pows' needs -(k+l)/(k-l) > 0")
        return ratio
    if k + l == 2.0:
        raise DomainError("case 'powsminus2' needs k + l != 2")
    ratio = -(k + l - 2.0) / (k - l)
    if not ratio > 0.0:
        raise DomainError("case 'powsminus2' needs -(k+l-2)/(k-l) > 0")
    return ratio


def solve_case(case: AlphabetCase | str, k: float, l: float) -> AlphabetSolution:
    """Solve lam(s; k, l) = target(s) for s, checking the guards by name.

    s comes out as log2 of the case ratio; the balance residual
    |lam(s) - target(s)| is checked against 1e-12 (1 + 2^s) before the
    solution is returned.
    """
    case = AlphabetCase(case)
    k = float(k)
    l = float(l)
    ratio = _ratio_for_case(case, k, l)
    s = math.log2(ratio)
    residual = abs(lambda_fn(s, k, l) - case_target(case, s))
    tol = RESIDUAL_RTOL * (1.0 + 2.0**s)
    if not residual <= tol:
        raise DomainError(
            f"solved s={s:g} fails the balance check: residual {residual:g} > {tol:g}"
        )
    return AlphabetSolution(k, l, case, s, residual, verifiable=s > 1.0)


def _holds_for_all_s(case: AlphabetCase, k: float, l: float) -> bool:
    # lam - target is (1 - (k-l) - target_slope) 2^s - (k+l) - target_const;
    # it vanishes identically only at these alphabet offsets
    if case is AlphabetCase.ZERO:
        return k - l == 1.0 and k + l == 0.0
    if case is AlphabetCase.POW_S:
        return k == 0.0 and l == 0.0
    return k == 1.0 and l == 1.0


def mint_identity(sol: AlphabetSolution) -> Identity:
    """Turn a solved alphabet into a verifiable identity.

    The q series is the alphabet {-k, 1-k} read at the shifted index, the
    r series is {l, 1+l} unshifted.  Case 'zero' states the pure ratio
    between them; the other cases state the (2^s+1, 2^s-1) combination
    against 2^s zeta(s) or 2^s eta(s).  Minting requires s > 1.
    """
    if not sol.s > 1.0:
        raise DomainError(
            f"minted identities need s > 1; this solution has s={sol.s:g}"
        )
    q_spec = SeriesSpec(CoefficientSequence.affine(-sol.k, 1.0 - sol.k), IndexShift.BY_ONE)
    r_spec = SeriesSpec(CoefficientSequence.affine(sol.l, 1.0 + sol.l))
    alphabet = f"k={sol.k:.12g}, l={sol.l:.12g}"
    valid = ValidityDomain() if _holds_for_all_s(sol.case, sol.k, sol.l) else ValidityDomain(sol.s)
    default_s = (2.0, 3.0, 4.0) if valid.fixed_s is None else (sol.s,)
    if sol.case is AlphabetCase.ZERO:
        lhs = (
            LhsTerm(CoefficientFunction(0.0, 1.0), q_spec, Route.AUTO),
            LhsTerm(TwoPowerRatio((-1.0, 1.0), (1.0, 1.0)), r_spec, Route.AUTO),
        )
        rhs = ZERO_RHS
        stmt = "sum(q[n-1]/n^s) = (1-2^s)/(1+2^s) sum(r[n]/n^s)"
    else:
        lhs = (
            LhsTerm(CoefficientFunction(1.0, 1.0), q_spec, Route.AUTO),
            LhsTerm(CoefficientFunction(1.0, -1.0), r_spec, Route.AUTO),
        )
        if sol.case is AlphabetCase.POW_S:
            rhs = Mul((TwoPowPoly((0.0, 1.0)), Zeta()))
            stmt = "(2^s+1) sum(q[n-1]/n^s) + (2^s-1) sum(r[n]/n^s) = 2^s zeta(s)"
        else:
            rhs = Mul((TwoPowPoly((0.0, 1.0)), Eta()))
            stmt = "(2^s+1) sum(q[n-1]/n^s) + (2^s-1) sum(r[n]/n^s) = 2^s eta(s)"
    return Identity(
        identity_id=f"minted-{sol.case.value}[{sol.k:.10g},{sol.l:.10g}]",
        lhs=lhs,
        rhs=rhs,
        valid_s=valid,
        default_s=default_s,
        description=f"{stmt} with {alphabet}",
    )
