"""Self-verifying identity registry with residual reports.

Each identity pairs a linear combination of Dirichlet series (left side)
with a closed form over zeta, eta, Hurwitz zeta, pi, logarithms and
rational constants (right side).  ``verify`` evaluates both sides with
certified absolute bounds, targeting half the requested tolerance per
side, and the identity passes exactly when the observed residual fits
inside the combined bounds.  Because the bounds are rigorous, a false
identity is detected as soon as they shrink below its defect; the
registry test suite includes a deliberately wrong pairing to prove that.

Left-side coefficients are affine in 2^s; the few rational-in-2^s factors
(the shifted-to-unshifted ratio, the odd-series bridge) get a dedicated
polynomial-ratio node instead of being forced into the affine form.

Two classical digit-sum checks and the alternating binary product have no
exponent parameter; they are registered as fixed-form entries and verified
at their natural tolerance (the product check is heuristic: its partial
products oscillate and no rigorous tail is claimed, so it carries a
calibrated threshold and a ``heuristic`` flag).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable

import numpy as np
from mpmath.ctx_mp import MPContext

from .errors import DomainError, ResourceLimitError
from .precision import Precision
from .result import EvalResult, Method
from .sequences import CoefficientSequence, SequenceKind, digit_sum_block, pm_thue_morse_block
from .special_functions import dirichlet_eta, hurwitz_zeta, riemann_zeta
from .evaluator import (
    COMPOSITE9_SERIES,
    DEFAULT_MAX_TERMS,
    DELTA_SERIES,
    DenominatorForm,
    F_SERIES,
    G_SERIES,
    GAMMA_SERIES,
    IndexShift,
    ODD_PLUS_MINUS_SERIES,
    PHI_SERIES,
    SeriesSpec,
    ZETA_SERIES,
    chunked_kahan_sum,
    depth_for,
    eval_functional_equation,
    eval_naive,
    eval_odd_series,
    _combine_ctx,
    _gamma_f_coefficient,
)

#: Above this many naive terms, auto-routed series fall back to the
#: accelerated decomposition when one exists.
AUTO_NAIVE_CAP = 30_000_000

_SQRT2 = math.sqrt(2.0)


def _pow2s(s: float, prec: Precision):
    if prec.is_double:
        return 2.0**s
    ctx = MPContext()
    ctx.prec = prec.working_bits + 20
    return ctx.power(2, ctx.mpf(s))


# ---------------------------------------------------------------------------
# left-side coefficient functions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CoefficientFunction:
    """c(s) = alpha * 2^s + beta."""

    alpha: float
    beta: float

    def value(self, s: float, prec: Precision | None = None):
        x = _pow2s(s, prec or Precision())
        return self.alpha * x + self.beta

    @property
    def is_zero(self) -> bool:
        return self.alpha == 0.0 and self.beta == 0.0

    def describe(self) -> str:
        if self.alpha == 0.0:
            return f"{self.beta:g}"
        if self.beta == 0.0:
            return f"{self.alpha:g}*2^s" if self.alpha != 1.0 else "2^s"
        sign = "+" if self.beta > 0 else "-"
        lead = "2^s" if self.alpha == 1.0 else f"{self.alpha:g}*2^s"
        return f"({lead} {sign} {abs(self.beta):g})"


@dataclass(frozen=True)
class TwoPowerRatio:
    """P(2^s)/Q(2^s) with constant-first coefficient tuples.

    Dedicated form for factors like (1-2^s)/(1+2^s) and -4^s/(4^s-1) that
    are rational, not affine, in 2^s.
    """

    num: tuple[float, ...]
    den: tuple[float, ...]

    def _poly(self, coeffs, x):
        acc = 0.0
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    def value(self, s: float, prec: Precision | None = None):
        x = _pow2s(s, prec or Precision())
        den = self._poly(self.den, x)
        if den == 0:
            raise DomainError(f"coefficient denominator vanishes at s={s:g}")
        return self._poly(self.num, x) / den

    @property
    def is_zero(self) -> bool:
        return all(c == 0.0 for c in self.num)

    def describe(self) -> str:
        def poly(coeffs):
            parts = []
            for i, c in enumerate(coeffs):
                if c == 0.0:
                    continue
                base = "1" if i == 0 else ("2^s" if i == 1 else f"2^{i}s")
                parts.append(base if c == 1.0 else f"{c:g}*{base}" if c != -1.0 else f"-{base}")
            return " + ".join(parts).replace("+ -", "- ") or "0"

        return f"({poly(self.num)})/({poly(self.den)})"


SeriesCoefficient = CoefficientFunction | TwoPowerRatio


# ---------------------------------------------------------------------------
# right-side closed forms
# ---------------------------------------------------------------------------


class Expr:
    """Immutable closed-form expression over zeta/eta/Hurwitz/pi/log/rationals.

    ``bracket(s, budget, prec, cache)`` returns (value, bound) with
    |value - exact| <= bound, steering leaf tolerances so the bound lands
    under ``budget``; the returned bound is recomputed from what the leaves
    actually certified, so it stays honest even if the steering guess was
    poor.
    """

    def rough(self, s) -> float:
        raise NotImplementedError

    def bracket(self, s, budget: float, prec: Precision, cache: "_EvalCache"):
        raise NotImplementedError

    def describe(self) -> str:
        raise NotImplementedError


def _const_pair(value, prec: Precision):
    return value, 4.0 * prec.unit_roundoff * abs(float(value))


@dataclass(frozen=True)
class Num(Expr):
    value: Fraction

    def rough(self, s):
        return float(self.value)

    def bracket(self, s, budget, prec, cache):
        if prec.is_double:
            v = self.value.numerator / self.value.denominator
            return v, 0.5 * prec.unit_roundoff * abs(v)
        ctx = MPContext()
        ctx.prec = prec.working_bits + 20
        return _const_pair(ctx.mpf(self.value.numerator) / self.value.denominator, prec)

    def describe(self):
        return str(self.value)


@dataclass(frozen=True)
class Pi(Expr):
    def rough(self, s):
        return math.pi

    def bracket(self, s, budget, prec, cache):
        if prec.is_double:
            return _const_pair(math.pi, prec)
        ctx = MPContext()
        ctx.prec = prec.working_bits + 20
        return _const_pair(+ctx.pi, prec)

    def describe(self):
        return "pi"


@dataclass(frozen=True)
class Sqrt(Expr):
    arg: int

    def rough(self, s):
        return math.sqrt(self.arg)

    def bracket(self, s, budget, prec, cache):
        if prec.is_double:
            return _const_pair(math.sqrt(self.arg), prec)
        ctx = MPContext()
        ctx.prec = prec.working_bits + 20
        return _const_pair(ctx.sqrt(self.arg), prec)

    def describe(self):
        return f"sqrt({self.arg})"


@dataclass(frozen=True)
class Log(Expr):
    arg: Fraction

    def rough(self, s):
        return math.log(self.arg)

    def bracket(self, s, budget, prec, cache):
        if prec.is_double:
            return _const_pair(math.log(self.arg.numerator / self.arg.denominator), prec)
        ctx = MPContext()
        ctx.prec = prec.working_bits + 20
        return _const_pair(ctx.log(ctx.mpf(self.arg.numerator) / self.arg.denominator), prec)

    def describe(self):
        return f"log({self.arg})"


@dataclass(frozen=True)
class TwoPowPoly(Expr):
    """Polynomial in 2^s, constant-first coefficients."""

    coeffs: tuple[float, ...]

    def _eval(self, x):
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def rough(self, s):
        return self._eval(2.0**s)

    def bracket(self, s, budget, prec, cache):
        v = self._eval(_pow2s(s, prec))
        return v, 4.0 * len(self.coeffs) * prec.unit_roundoff * abs(float(v))

    def describe(self):
        return TwoPowerRatio(self.coeffs, (1.0,)).describe().removesuffix("/(1)")


@dataclass(frozen=True)
class Zeta(Expr):
    def rough(self, s):
        return 1.0 + 2.0 ** (-s) + 1.0 / (s - 1.0)

    def bracket(self, s, budget, prec, cache):
        r = cache.get_or_eval(
            ("zeta", s), budget, lambda e: riemann_zeta(s, prec.with_eps(e))
        )
        return r.value, r.abs_error_bound

    def describe(self):
        return "zeta(s)"


@dataclass(frozen=True)
class Eta(Expr):
    def rough(self, s):
        return 0.8

    def bracket(self, s, budget, prec, cache):
        r = cache.get_or_eval(
            ("eta", s), budget, lambda e: dirichlet_eta(s, prec.with_eps(e))
        )
        return r.value, r.abs_error_bound

    def describe(self):
        return "eta(s)"


@dataclass(frozen=True)
class HurwitzZeta(Expr):
    a: Fraction

    def rough(self, s):
        return float(self.a) ** (-s) + 1.0 / (s - 1.0) + 1.0

    def bracket(self, s, budget, prec, cache):
        r = cache.get_or_eval(
            ("hurwitz", self.a, s), budget, lambda e: hurwitz_zeta(s, self.a, prec.with_eps(e))
        )
        return r.value, r.abs_error_bound

    def describe(self):
        return f"zeta(s,{self.a})"


@dataclass(frozen=True)
class Add(Expr):
    terms: tuple[Expr, ...]

    def rough(self, s):
        return sum(t.rough(s) for t in self.terms)

    def bracket(self, s, budget, prec, cache):
        share = budget / max(len(self.terms), 1)
        vals, bounds = [], []
        for t in self.terms:
            v, b = t.bracket(s, share, prec, cache)
            vals.append(v)
            bounds.append(b)
        total = sum(vals)
        rounding = 2.0 * len(vals) * prec.unit_roundoff * sum(abs(float(v)) for v in vals)
        return total, sum(bounds) + rounding

    def describe(self):
        return " + ".join(t.describe() for t in self.terms)


@dataclass(frozen=True)
class Mul(Expr):
    factors: tuple[Expr, ...]

    def rough(self, s):
        out = 1.0
        for f in self.factors:
            out *= f.rough(s)
        return out

    def bracket(self, s, budget, prec, cache):
        roughs = [max(abs(f.rough(s)), 1e-30) for f in self.factors]
        total_rough = 1.0
        for r in roughs:
            total_rough *= r
        m = len(self.factors)
        vals, bounds = [], []
        for f, r in zip(self.factors, roughs):
            co = max(total_rough / r, 1e-30)
            v, b = f.bracket(s, 0.9 * budget / (m * co), prec, cache)
            vals.append(v)
            bounds.append(b)
        out = 1.0
        for v in vals:
            out = out * v
        err = 0.0
        for i, b in enumerate(bounds):
            widen = b
            for j, v in enumerate(vals):
                if j != i:
                    widen *= abs(float(v)) + bounds[j]
            err += widen
        rounding = 4.0 * m * prec.unit_roundoff * abs(float(out))
        return out, err + rounding

    def describe(self):
        return " * ".join(f.describe() for f in self.factors)


@dataclass(frozen=True)
class PowInt(Expr):
    base: Expr
    exponent: int

    def rough(self, s):
        return self.base.rough(s) ** self.exponent

    def bracket(self, s, budget, prec, cache):
        n = self.exponent
        r = max(abs(self.base.rough(s)), 1e-30)
        v, b = self.base.bracket(s, budget / (n * max(r ** (n - 1), 1e-30) * 2.0), prec, cache)
        out = v**n
        err = n * (abs(float(v)) + b) ** (n - 1) * b
        return out, err + 4.0 * n * prec.unit_roundoff * abs(float(out))

    def describe(self):
        return f"{self.base.describe()}^{self.exponent}"


@dataclass(frozen=True)
class Ratio(Expr):
    num: Expr
    den: Expr

    def rough(self, s):
        d = self.den.rough(s)
        return self.num.rough(s) / d if d else math.inf

    def bracket(self, s, budget, prec, cache):
        dr = max(abs(self.den.rough(s)), 1e-30)
        nr = abs(self.num.rough(s))
        nv, nb = self.num.bracket(s, 0.45 * budget * dr, prec, cache)
        dv, db = self.den.bracket(s, 0.45 * budget * dr * dr / max(nr, 1e-30), prec, cache)
        dabs = abs(float(dv))
        if dabs <= db:
            raise ResourceLimitError("denominator interval straddles zero")
        out = nv / dv
        err = (nb + abs(float(out)) * db) / (dabs - db)
        return out, err + 4.0 * prec.unit_roundoff * abs(float(out))

    def describe(self):
        return f"({self.num.describe()})/({self.den.describe()})"


ZERO_RHS = Num(Fraction(0))


# ---------------------------------------------------------------------------
# evaluation cache (per verify call)
# ---------------------------------------------------------------------------


class _EvalCache(dict):
    """Shares zeta / f evaluations across the pairs of one verification."""

    def get_or_eval(self, key, eps: float, fn: Callable[[float], EvalResult]) -> EvalResult:
        hit = self.get(key)
        if hit is not None and hit.abs_error_bound <= eps:
            return hit
        out = fn(eps)
        self[key] = out
        return out


# ---------------------------------------------------------------------------
# identities
# ---------------------------------------------------------------------------


class Route(Enum):
    AUTO = "auto"
    NAIVE = "naive"
    FUNCTIONAL_EQUATION = "functional-equation"
    ODD_SPLIT = "odd-split"
    DECOMPOSED = "decomposed"


@dataclass(frozen=True)
class LhsTerm:
    coefficient: SeriesCoefficient
    series: SeriesSpec
    route: Route = Route.AUTO


class IdentityKind(Enum):
    DIRICHLET = "dirichlet"       # parametrized by real s > 1
    FIXED_SERIES = "fixed"        # a single numerical series, no exponent
    PRODUCT = "product"           # the alternating binary product


@dataclass(frozen=True)
class ValidityDomain:
    """All real s > 1, or one specific s."""

    fixed_s: float | None = None

    def contains(self, s: float) -> bool:
        if self.fixed_s is None:
            return s > 1.0
        return abs(s - self.fixed_s) <= 1e-9 * max(1.0, abs(self.fixed_s))

    def describe(self) -> str:
        return "s > 1" if self.fixed_s is None else f"s = {self.fixed_s:g}"


@dataclass(frozen=True)
class Identity:
    """One verifiable equality with its preferred evaluation routes."""

    identity_id: str
    lhs: tuple[LhsTerm, ...]
    rhs: Expr
    valid_s: ValidityDomain = field(default_factory=ValidityDomain)
    description: str = ""
    kind: IdentityKind = IdentityKind.DIRICHLET
    default_s: tuple[float, ...] = (2.0, 3.0, 4.0)
    default_eps: float = 1e-8
    fixed_lhs: Callable[[float, Precision, int], EvalResult] | None = None
    heuristic: bool = False


@dataclass(frozen=True)
class VerificationRecord:
    """Outcome of checking one identity at one exponent."""

    identity_id: str
    s: float | None
    lhs_value: float
    lhs_bound: float
    rhs_value: float
    rhs_bound: float
    residual: float
    passed: bool
    terms_used: int
    wall_time_s: float
    heuristic: bool = False


# -- routed evaluation of one LHS pair ---------------------------------------

_DECOMPOSABLE_KINDS = {
    SequenceKind.THUE_MORSE: (0.0, 1.0, False),
    SequenceKind.SHIFTED_THUE_MORSE: (0.0, 1.0, True),
    SequenceKind.PLUS_MINUS: (1.0, -1.0, False),
    SequenceKind.SHIFTED_PLUS_MINUS: (1.0, -1.0, True),
}


def _affine_form(spec: SeriesSpec) -> tuple[float, float, bool] | None:
    """(value at t=0, value at t=1, shifted?) when the series is
    an alphabet over t with an n^s denominator, else None."""
    if spec.denom is not DenominatorForm.POWER_OF_N:
        return None
    kind = spec.coeffs.kind
    if kind is SequenceKind.AFFINE:
        low, high, shifted = spec.coeffs.low, spec.coeffs.high, False
    elif kind in _DECOMPOSABLE_KINDS:
        low, high, shifted = _DECOMPOSABLE_KINDS[kind]
    else:
        return None
    if spec.shift is IndexShift.BY_ONE:
        shifted = not shifted
    return low, high, shifted


def _eval_decomposed(
    spec: SeriesSpec,
    s: float,
    eps: float,
    prec: Precision,
    max_terms: int | None,
    cache: _EvalCache,
) -> EvalResult:
    """Alphabet series through  a*zeta + (b-a)*(0/1 series), reduced to
    alpha*zeta(s) + beta*f(s) with exact rational-in-2^s factors."""
    form = _affine_form(spec)
    if form is None:
        raise DomainError(f"{spec.label()} has no alphabet decomposition")
    low, high, shifted = form
    ctx = _combine_ctx(prec)
    if ctx is None:
        slope = high - low
        alpha = low + slope / 2.0
        beta = -slope / 2.0 if shifted else slope * _gamma_f_coefficient(s)
    else:
        slope = ctx.mpf(high) - low
        alpha = low + slope / 2
        if shifted:
            beta = -slope / 2
        else:
            q = ctx.power(2, -ctx.mpf(s))
            beta = slope * (q + 1) / (2 * (1 - q))
    a_abs = abs(float(alpha))
    b_abs = abs(float(beta))
    value = 0.0
    bound = 0.0
    terms = 1
    absacc = 0.0
    if a_abs != 0.0:
        ze = eps * 0.45 / (a_abs * (2.0 if b_abs != 0.0 else 1.0))
        z = cache.get_or_eval(("zeta", s), ze, lambda e: riemann_zeta(s, prec.with_eps(e)))
        value = value + alpha * z.value
        bound += a_abs * z.abs_error_bound
        terms += z.terms_used
        absacc += a_abs * abs(float(z.value))
    if b_abs != 0.0:
        fe = eps * 0.45 / (b_abs * (2.0 if a_abs != 0.0 else 1.0))
        f = cache.get_or_eval(
            ("f", s),
            fe,
            lambda e: eval_functional_equation(
                s, e, depth=depth_for(s, e), prec=prec, max_terms=max_terms
            ),
        )
        value = value + beta * f.value
        bound += b_abs * f.abs_error_bound
        terms += f.terms_used
        absacc += b_abs * abs(float(f.value))
    bound += 8.0 * prec.unit_roundoff * absacc
    return EvalResult(value, bound, terms, Method.FUNCTIONAL_EQUATION)


def _eval_routed(
    term: LhsTerm,
    s: float,
    eps: float,
    prec: Precision,
    max_terms: int | None,
    cache: _EvalCache,
) -> EvalResult:
    spec = term.series
    route = term.route
    cap = max_terms if max_terms is not None else DEFAULT_MAX_TERMS
    if route is Route.AUTO:
        decomposable = _affine_form(spec) is not None
        try:
            needed = spec.required_counters(s, eps * 0.95, cap)
        except ResourceLimitError:
            if not decomposable:
                raise
            needed = None
        if needed is not None and (needed <= AUTO_NAIVE_CAP or not decomposable):
            route = Route.NAIVE
        else:
            route = Route.DECOMPOSED
    if route is Route.NAIVE:
        return eval_naive(spec, s, eps, prec, max_terms)
    if route is Route.DECOMPOSED:
        return _eval_decomposed(spec, s, eps, prec, max_terms, cache)
    if route is Route.FUNCTIONAL_EQUATION:
        return cache.get_or_eval(
            ("f", s),
            eps,
            lambda e: eval_functional_equation(
                s, e, depth=depth_for(s, e), prec=prec, max_terms=max_terms
            ),
        )
    if route is Route.ODD_SPLIT:
        # f = 2^s/(2^s+1) A, g = -2^s/(2^s-1) A from the even/odd index split
        ctx = _combine_ctx(prec)
        q = 2.0 ** (-s) if ctx is None else ctx.power(2, -ctx.mpf(s))
        if spec == F_SERIES or (
            spec.coeffs.kind is SequenceKind.SHIFTED_PLUS_MINUS
            and spec.denom is DenominatorForm.POWER_OF_N
        ):
            factor = 1.0 / (1.0 + q)
        elif spec == G_SERIES:
            factor = -1.0 / (1.0 - q)
        else:
            raise DomainError(f"odd-split route does not apply to {spec.label()}")
        f_abs = abs(float(factor))
        a = cache.get_or_eval(
            ("A", s),
            eps * 0.98 / f_abs,
            lambda e: eval_odd_series(s, e, prec, max_terms),
        )
        value = factor * a.value
        bound = f_abs * a.abs_error_bound + 4.0 * prec.unit_roundoff * abs(float(value))
        return EvalResult(value, bound, a.terms_used, Method.ODD_DECOMPOSITION)
    raise DomainError(f"unknown route {route}")


def eval_series_spec(
    spec: SeriesSpec,
    s: float,
    eps: float,
    route: Route = Route.AUTO,
    prec: Precision | None = None,
    max_terms: int | None = None,
) -> EvalResult:
    """Evaluate one series with route selection (naive when affordable,
    the alphabet decomposition or odd split otherwise)."""
    prec = prec if prec is not None else Precision.for_eps(eps)
    term = LhsTerm(CoefficientFunction(0.0, 1.0), spec, route)
    return _eval_routed(term, s, eps, prec, max_terms, _EvalCache())


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------


def _check_eps(eps: float) -> float:
    eps = float(eps)
    if not (eps > 0.0) or not math.isfinite(eps):
        raise DomainError(f"eps must be positive, got {eps}")
    return eps


def verify(
    identity: Identity,
    s: float | None,
    eps: float,
    prec: Precision | None = None,
    max_terms: int | None = None,
    product_terms: int = 10**6,
) -> VerificationRecord:
    """Evaluate both sides of ``identity`` to eps/2 each and compare.

    ``s`` must lie in the identity's validity domain; fixed-form entries
    take ``s=None``.  The record passes exactly when the residual is at
    most the sum of the two reported bounds.
    """
    eps = _check_eps(eps)
    if identity.kind is IdentityKind.PRODUCT:
        if s is not None:
            raise DomainError(f"{identity.identity_id} has no exponent parameter")
        return verify_woods_robbins(product_terms, pairing=True, threshold=eps)
    if identity.kind is IdentityKind.FIXED_SERIES:
        if s is not None:
            raise DomainError(f"{identity.identity_id} has no exponent parameter")
    else:
        if s is None:
            raise DomainError(f"{identity.identity_id} needs an exponent s")
        s = float(s)
        if not identity.valid_s.contains(s):
            raise DomainError(
                f"{identity.identity_id} is only valid for {identity.valid_s.describe()}, got s={s:g}"
            )
    prec = prec if prec is not None else Precision.for_eps(eps)
    t0 = time.perf_counter()
    cache = _EvalCache()

    rhs_value, rhs_bound = identity.rhs.bracket(s, eps * 0.5, prec, cache)
    terms = 0

    if identity.kind is IdentityKind.FIXED_SERIES:
        lhs_res = identity.fixed_lhs(eps * 0.5, prec, max_terms or DEFAULT_MAX_TERMS)
        lhs_value, lhs_bound = lhs_res.value, lhs_res.abs_error_bound
        terms += lhs_res.terms_used
    else:
        pairs = [t for t in identity.lhs if not t.coefficient.is_zero]
        share = eps * 0.5 * 0.98 / max(len(pairs), 1)
        lhs_value = 0.0
        comp = 0.0
        lhs_bound = 0.0
        absacc = 0.0
        for pair in pairs:
            coef = pair.coefficient.value(s, prec)
            coef_abs = abs(float(coef))
            series_eps = share / max(coef_abs, 1e-30)
            r = _eval_routed(pair, s, series_eps, prec, max_terms, cache)
            terms += r.terms_used
            contrib = coef * r.value
            y = contrib - comp
            t = lhs_value + y
            comp = (t - lhs_value) - y
            lhs_value = t
            lhs_bound += coef_abs * r.abs_error_bound
            absacc += abs(float(contrib))
        lhs_bound += 8.0 * prec.unit_roundoff * absacc

    residual = abs(float(lhs_value - rhs_value))
    passed = residual <= lhs_bound + rhs_bound
    return VerificationRecord(
        identity_id=identity.identity_id,
        s=None if identity.kind is not IdentityKind.DIRICHLET else float(s),
        lhs_value=float(lhs_value),
        lhs_bound=float(lhs_bound),
        rhs_value=float(rhs_value),
        rhs_bound=float(rhs_bound),
        residual=residual,
        passed=passed,
        terms_used=max(terms, 1),
        wall_time_s=time.perf_counter() - t0,
        heuristic=identity.heuristic,
    )


# ---------------------------------------------------------------------------
# the corollary-2 family builder
# ---------------------------------------------------------------------------


def make_corollary2_identity(
    u: CoefficientFunction, v: CoefficientFunction, identity_id: str | None = None
) -> Identity:
    """u * (shifted 0/1 series) + v * (0/1 series) against its closed form.

    The equality, with x = 2^s and f the shifted +/-1 series:

        u phi + v gamma = (u+v)/2 zeta - f/2 (u + v (1+x)/(1-x))

    Rearranged to residual form, the f coefficient becomes the polynomial
    ratio (u (1-x) + v (1+x)) / (2 (1-x)).  The 0/1 series are pinned to
    the naive route so the check exercises real partial sums against the
    accelerated right side.
    """
    au, bu = u.alpha, u.beta
    av, bv = v.alpha, v.beta
    f_num = (bu + bv, au - bu + av + bv, -au + av)
    pairs = [
        LhsTerm(u, PHI_SERIES, Route.NAIVE),
        LhsTerm(v, GAMMA_SERIES, Route.NAIVE),
        LhsTerm(
            CoefficientFunction(-(au + av) / 2.0, -(bu + bv) / 2.0),
            ZETA_SERIES,
            Route.DECOMPOSED,
        ),
        LhsTerm(TwoPowerRatio(f_num, (2.0, -2.0)), F_SERIES, Route.FUNCTIONAL_EQUATION),
    ]
    return Identity(
        identity_id=identity_id or f"corollary2[{u.describe()},{v.describe()}]",
        lhs=tuple(pairs),
        rhs=ZERO_RHS,
        description=(
            f"{u.describe()}*sum(t[n-1]/n^s) + {v.describe()}*sum(t[n]/n^s) "
            "against its zeta/f closed form"
        ),
    )


def verify_corollary2(
    u: CoefficientFunction,
    v: CoefficientFunction,
    s: float,
    eps: float,
    prec: Precision | None = None,
    max_terms: int | None = None,
) -> VerificationRecord:
    """Check the u,v combination of the 0/1 series at exponent s."""
    return verify(make_corollary2_identity(u, v), s, eps, prec, max_terms)


# ---------------------------------------------------------------------------
# fixed digit-sum series
# ---------------------------------------------------------------------------


def _digit_harmonic_lhs(base: int) -> Callable[[float, Precision, int], EvalResult]:
    """sum_{n>=1} s_b(n)/(n(n+1)) with the digit-sum integral tail."""

    def tail(n: float) -> float:
        lnb = math.log(base)
        return (base - 1.0) * ((math.log(n) + 1.0) / (lnb * n) + 1.0 / n)

    def block(lo: int, hi: int) -> np.ndarray:
        n = np.arange(lo, hi, dtype=np.float64)
        c = digit_sum_block(lo, hi, base).astype(np.float64)
        return c / (n * (n + 1.0))

    def evaluate(eps: float, prec: Precision, max_terms: int) -> EvalResult:
        n = max(base, 16)
        while tail(n) > 0.95 * eps:
            n *= 2
            if n > 4 * max_terms:
                raise ResourceLimitError(
                    f"digit-sum series (base {base}) needs more than {n} terms "
                    f"for eps={eps:g} (cap {max_terms})"
                )
        lo, hi = n // 2, n
        while lo + 1 < hi:
            mid = (lo + hi) // 2
            if tail(mid) <= 0.95 * eps:
                hi = mid
            else:
                lo = mid
        n = hi
        if n > max_terms:
            raise ResourceLimitError(
                f"digit-sum series (base {base}) needs {n} terms for eps={eps:g} "
                f"(cap {max_terms})"
            )
        value = chunked_kahan_sum(block, 1, n)
        # positive terms: the partial sum itself caps the absolute sum
        bound = tail(n) + 32.0 * prec.unit_roundoff * (value + 1.0)
        if bound > eps:
            raise ResourceLimitError(f"cannot certify eps={eps:g} at this precision")
        return EvalResult(value, bound, n, Method.NAIVE)

    return evaluate


def _binary_weighted_lhs(eps: float, prec: Precision, max_terms: int) -> EvalResult:
    """sum_{n>=1} s_2(n)(2n+1)/(n^2 (n+1)^2), tail <= 2 (log2 n + 1)/n^2 style."""

    def tail(n: float) -> float:
        ln2 = math.log(2.0)
        return 2.0 * ((math.log(n) / 2.0 + 0.25) / ln2 + 0.5) / (n * n)

    def block(lo: int, hi: int) -> np.ndarray:
        n = np.arange(lo, hi, dtype=np.float64)
        c = digit_sum_block(lo, hi, 2).astype(np.float64)
        return c * (2.0 * n + 1.0) / (n * n * (n + 1.0) * (n + 1.0))

    n = 16
    while tail(n) > 0.95 * eps:
        n *= 2
        if n > 4 * max_terms:
            raise ResourceLimitError(f"binary weighted series needs more than {n} terms")
    lo, hi = n // 2, n
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if tail(mid) <= 0.95 * eps:
            hi = mid
        else:
            lo = mid
    n = hi
    if n > max_terms:
        raise ResourceLimitError(f"binary weighted series needs {n} terms (cap {max_terms})")
    value = chunked_kahan_sum(block, 1, n)
    bound = tail(n) + 32.0 * prec.unit_roundoff * (value + 1.0)
    if bound > eps:
        raise ResourceLimitError(f"cannot certify eps={eps:g} at this precision")
    return EvalResult(value, bound, n, Method.NAIVE)


# ---------------------------------------------------------------------------
# the alternating binary product
# ---------------------------------------------------------------------------


def verify_woods_robbins(
    n_factors: int,
    pairing: bool = True,
    threshold: float = 1e-3,
    prec: Precision | None = None,
) -> VerificationRecord:
    """Partial product prod_{n<N} ((2n+1)/(2n+2))^(e_n) against sqrt(2)/2.

    Accumulated in the log domain.  With pairing on, factors 2m and 2m+1
    are combined first (e_{2m+1} = -e_{2m}), which turns the term magnitude
    from ~1/n into ~1/(8m^2).  The threshold is heuristic, calibrated at
    1e-3 for N = 10^6; no rigorous tail is claimed for the product.
    """
    if n_factors < 2:
        raise DomainError(f"need at least 2 factors, got {n_factors}")
    t0 = time.perf_counter()

    if pairing:
        m_pairs = n_factors // 2

        def block(lo: int, hi: int) -> np.ndarray:
            m = np.arange(lo, hi, dtype=np.float64)
            e = pm_thue_morse_block(lo, hi).astype(np.float64)
            return e * np.log1p(-2.0 / (16.0 * m * m + 20.0 * m + 6.0))

        log_total = chunked_kahan_sum(block, 0, m_pairs)
        if n_factors % 2:
            n = n_factors - 1
            log_total += float(pm_thue_morse_block(n, n + 1)[0]) * math.log1p(
                -1.0 / (2.0 * n + 2.0)
            )
    else:

        def block(lo: int, hi: int) -> np.ndarray:
            n = np.arange(lo, hi, dtype=np.float64)
            e = pm_thue_morse_block(lo, hi).astype(np.float64)
            return e * np.log1p(-1.0 / (2.0 * n + 2.0))

        log_total = chunked_kahan_sum(block, 0, n_factors)

    value = math.exp(log_total)
    target = _SQRT2 / 2.0
    residual = abs(value - target)
    rhs_bound = 4.0 * 2.0**-52 * target
    return VerificationRecord(
        identity_id="woods-robbins",
        s=None,
        lhs_value=value,
        lhs_bound=threshold,
        rhs_value=target,
        rhs_bound=rhs_bound,
        residual=residual,
        passed=residual <= threshold + rhs_bound,
        terms_used=n_factors,
        wall_time_s=time.perf_counter() - t0,
        heuristic=True,
    )


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------


def _affine_series(low: float, high: float, shifted: bool) -> SeriesSpec:
    return SeriesSpec(
        CoefficientSequence.affine(low, high),
        IndexShift.BY_ONE if shifted else IndexShift.NONE,
    )


def _one() -> CoefficientFunction:
    return CoefficientFunction(0.0, 1.0)


def _const(c: float) -> CoefficientFunction:
    return CoefficientFunction(0.0, c)


def _build_registry() -> tuple[Identity, ...]:
    two_pow_s = TwoPowPoly((0.0, 1.0))
    entries: list[Identity] = []

    entries.append(
        Identity(
            identity_id="lemma1",
            lhs=(
                LhsTerm(_one(), F_SERIES, Route.FUNCTIONAL_EQUATION),
                LhsTerm(TwoPowerRatio((-1.0, 1.0), (1.0, 1.0)), G_SERIES, Route.NAIVE),
            ),
            rhs=ZERO_RHS,
            description="shifted +/-1 series equals (1-2^s)/(1+2^s) times the unshifted one",
        )
    )
    entries.append(make_corollary2_identity(_one(), _const(0.0), "corollary2-phi"))
    entries.append(make_corollary2_identity(_const(0.0), _one(), "corollary2-gamma"))
    entries.append(
        Identity(
            identity_id="theorem3",
            lhs=(
                LhsTerm(CoefficientFunction(1.0, 1.0), PHI_SERIES, Route.DECOMPOSED),
                LhsTerm(CoefficientFunction(1.0, -1.0), GAMMA_SERIES, Route.DECOMPOSED),
            ),
            rhs=Mul((two_pow_s, Zeta())),
            description="(2^s+1) sum(t[n-1]/n^s) + (2^s-1) sum(t[n]/n^s) = 2^s zeta(s)",
        )
    )
    entries.append(
        Identity(
            identity_id="example4a",
            lhs=(
                LhsTerm(_const(5.0), PHI_SERIES, Route.DECOMPOSED),
                LhsTerm(_const(3.0), GAMMA_SERIES, Route.DECOMPOSED),
            ),
            rhs=Mul((Num(Fraction(2, 3)), PowInt(Pi(), 2))),
            valid_s=ValidityDomain(2.0),
            default_s=(2.0,),
            description="sum((5 t[n-1] + 3 t[n])/n^2) = 2 pi^2/3",
        )
    )
    entries.append(
        Identity(
            identity_id="example4b",
            lhs=(
                LhsTerm(_const(9.0), PHI_SERIES, Route.DECOMPOSED),
                LhsTerm(_const(7.0), GAMMA_SERIES, Route.DECOMPOSED),
            ),
            rhs=Mul((Num(Fraction(8)), Zeta())),
            valid_s=ValidityDomain(3.0),
            default_s=(3.0,),
            description="sum((9 t[n-1] + 7 t[n])/n^3) = 8 zeta(3)",
        )
    )
    entries.append(
        Identity(
            identity_id="theorem5-zero",
            lhs=(
                LhsTerm(_one(), _affine_series(-0.5, 0.5, True)),
                LhsTerm(TwoPowerRatio((-1.0, 1.0), (1.0, 1.0)), _affine_series(-0.5, 0.5, False)),
            ),
            rhs=ZERO_RHS,
            description="alphabet k=1/2, l=-1/2: shifted series equals (1-2^s)/(1+2^s) times unshifted",
        )
    )
    entries.append(
        Identity(
            identity_id="theorem5-pows",
            lhs=(
                LhsTerm(CoefficientFunction(1.0, 1.0), _affine_series(0.0, 1.0, True)),
                LhsTerm(CoefficientFunction(1.0, -1.0), _affine_series(0.0, 1.0, False)),
            ),
            rhs=Mul((two_pow_s, Zeta())),
            description="alphabet k=0, l=0 combination equals 2^s zeta(s)",
        )
    )
    entries.append(
        Identity(
            identity_id="theorem5-eta",
            lhs=(
                LhsTerm(CoefficientFunction(1.0, 1.0), _affine_series(-1.0, 0.0, True)),
                LhsTerm(CoefficientFunction(1.0, -1.0), _affine_series(1.0, 2.0, False)),
            ),
            rhs=Mul((two_pow_s, Eta())),
            description="alphabet k=1, l=1 combination equals 2^s eta(s)",
        )
    )
    entries.append(
        Identity(
            identity_id="prop6a",
            lhs=(
                LhsTerm(_const(5.0), _affine_series(-1.0, 0.0, True)),
                LhsTerm(_const(3.0), _affine_series(1.0 / 3.0, 4.0 / 3.0, False)),
            ),
            rhs=ZERO_RHS,
            valid_s=ValidityDomain(2.0),
            default_s=(2.0,),
            description="alphabets {-1,0} and {1/3,4/3}: 5 sum(q[n-1]/n^2) + 3 sum(r[n]/n^2) = 0",
        )
    )
    entries.append(
        Identity(
            identity_id="prop6b",
            lhs=(
                LhsTerm(_const(9.0), _affine_series(-1.0, 0.0, True)),
                LhsTerm(_const(7.0), _affine_series(9.0 / 7.0, 16.0 / 7.0, False)),
            ),
            rhs=Mul((Num(Fraction(8)), Zeta())),
            valid_s=ValidityDomain(3.0),
            default_s=(3.0,),
            description="alphabets {-1,0} and {9/7,16/7}: sum((9 q[n-1] + 7 r[n])/n^3) = 8 zeta(3)",
        )
    )
    entries.append(
        Identity(
            identity_id="prop6c",
            lhs=(
                LhsTerm(_const(17.0), _affine_series(-_SQRT2, 1.0 - _SQRT2, True)),
                LhsTerm(
                    _const(15.0),
                    _affine_series((17.0 * _SQRT2 - 2.0) / 15.0, (17.0 * _SQRT2 + 13.0) / 15.0, False),
                ),
            ),
            rhs=Mul((Num(Fraction(16)), Eta())),
            valid_s=ValidityDomain(4.0),
            default_s=(4.0,),
            description="irrational alphabets over sqrt(2): sum((17 q[n-1] + 15 r[n])/n^4) = 16 eta(4)",
        )
    )
    entries.append(
        Identity(
            identity_id="example8",
            lhs=(
                LhsTerm(_one(), DELTA_SERIES, Route.NAIVE),
                LhsTerm(
                    TwoPowerRatio((0.0, 0.0, -1.0), (-1.0, 0.0, 1.0)),
                    ODD_PLUS_MINUS_SERIES,
                    Route.NAIVE,
                ),
            ),
            rhs=ZERO_RHS,
            default_s=(2.0, 3.0),
            description="sum((t[n]-t[n-1])/n^s) = 4^s/(4^s-1) sum(e[m]/(2m+1)^s)",
        )
    )
    entries.append(
        Identity(
            identity_id="example9",
            lhs=(LhsTerm(_one(), COMPOSITE9_SERIES, Route.NAIVE),),
            rhs=Ratio(HurwitzZeta(Fraction(1, 4)), TwoPowPoly((0.0, 0.0, 1.0))),
            default_s=(2.0, 3.0),
            default_eps=1e-6,
            description="period-doubling composite series equals 4^-s zeta(s, 1/4)",
        )
    )
    for base in (2, 3, 10):
        entries.append(
            Identity(
                identity_id=f"shallit:{base}",
                lhs=(),
                rhs=Mul((Num(Fraction(base, base - 1)), Log(Fraction(base)))),
                kind=IdentityKind.FIXED_SERIES,
                default_s=(),
                default_eps=1e-4,
                fixed_lhs=_digit_harmonic_lhs(base),
                description=f"sum(s_{base}(n)/(n(n+1))) = ({base}/{base - 1}) log {base}",
            )
        )
    entries.append(
        Identity(
            identity_id="allouche-shallit",
            lhs=(),
            rhs=Mul((Num(Fraction(1, 9)), PowInt(Pi(), 2))),
            kind=IdentityKind.FIXED_SERIES,
            default_s=(),
            default_eps=1e-8,
            fixed_lhs=_binary_weighted_lhs,
            description="sum(s_2(n)(2n+1)/(n^2 (n+1)^2)) = pi^2/9",
        )
    )
    entries.append(
        Identity(
            identity_id="woods-robbins",
            lhs=(),
            rhs=Mul((Sqrt(2), Num(Fraction(1, 2)))),
            kind=IdentityKind.PRODUCT,
            default_s=(),
            default_eps=1e-3,
            heuristic=True,
            description="prod(((2n+1)/(2n+2))^(e_n)) = sqrt(2)/2  [heuristic threshold]",
        )
    )
    return tuple(entries)


_REGISTRY = _build_registry()


def builtin_registry() -> list[Identity]:
    """All bundled identities, in report order."""
    return list(_REGISTRY)


def get_identity(identity_id: str) -> Identity:
    """Look up a bundled identity; hyphens and underscores are equivalent."""
    wanted = identity_id.strip().lower().replace("_", "-")
    for ident in _REGISTRY:
        if ident.identity_id == wanted:
            return ident
    raise KeyError(f"unknown identity {identity_id!r}")
