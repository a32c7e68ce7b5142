"""Bounded evaluation of Dirichlet series with digit-parity coefficients.

Three routes are implemented and cross-validated:

* ``eval_naive``: direct summation of the first N terms with an analytic
  tail bound by integral comparison.  For a coefficient majorant C(n) that
  is constant, sum_{n>N} C/n^s <= C N^(1-s)/(s-1); digit-sum coefficients
  use the (b-1)(log_b n + 1) majorant and the corresponding integral.

* ``eval_odd_series`` / ``eval_f_via_odd_split``: every n >= 1 factors
  uniquely as 2^k (2m+1), and e_{2^k(2m+1)-1} = (-1)^k e_m, so the shifted
  +/-1 series satisfies  f(s) = 2^s/(2^s+1) * A(s)  with
  A(s) = sum_{m>=0} e_m/(2m+1)^s.

* ``eval_functional_equation``: the binomial acceleration
  f(s) = sum_{k>=1} 2^(-s-k) binom(s+k-1, k) f(s+k), truncated at depth K.
  The inner values f(s+k) converge at the much cheaper exponents s+k and
  are obtained naively.  The k > K remainder uses |f(p) - 1| <= zeta(p) - 1
  (the first term of f is 1/1^p; everything else is dominated by
  sum_{n>=2} n^(-p)) together with zeta(p) - 1 <= 2^(-p) (1 + 2/(p-1)) and
  a geometric majorant for the weights.

Every partial-sum loop uses compensated (Kahan) accumulation over fixed
2^14-term chunks, so results are bit-reproducible, and every reported
bound adds an explicit rounding budget on top of the analytic tail.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from mpmath.ctx_mp import MPContext

from .errors import DomainError, ResourceLimitError
from .precision import Precision
from .result import EvalResult, Method
from .sequences import CoefficientSequence, SequenceKind
from .special_functions import riemann_zeta

#: Fixed summation chunk; fixed so chunk boundaries (and hence rounding)
#: never depend on how work is scheduled.
CHUNK = 1 << 14

#: Default hard cap on naive term counts; beyond it the evaluator refuses
#: rather than silently degrade.
DEFAULT_MAX_TERMS = 10**9

#: Default truncation depth of the functional-equation route.
DEFAULT_DEPTH = 40

# Fraction of the tolerance given to the analytic tail; the rest absorbs
# the rounding budget.
_TAIL_FRACTION = 0.95

# Conservative envelope for per-term power/multiply rounding, in-chunk
# pairwise summation, and the cross-chunk Kahan combination, in units of
# unit roundoff times the absolute-sum majorant.
_ROUNDING_OPS = 32.0


class IndexShift(Enum):
    NONE = "none"       # sum_{n>=1} c_n / n^s
    BY_ONE = "by-one"   # sum_{n>=0} c_n / (n+1)^s


class DenominatorForm(Enum):
    POWER_OF_N = "n^s"
    POWER_OF_ODD_N = "(2n+1)^s"
    COMPOSITE9 = "composite9"   # c_n ((4n+3)^s - n^s) / (4n^2+3n)^s


@dataclass(frozen=True)
class SeriesSpec:
    """A Dirichlet series: coefficient stream, index shift, denominator form.

    The shifted +/-1 stream with no index shift and the unshifted stream
    with a by-one shift denote the same series; both are accepted.
    """

    coeffs: CoefficientSequence
    shift: IndexShift = IndexShift.NONE
    denom: DenominatorForm = DenominatorForm.POWER_OF_N

    def __post_init__(self) -> None:
        if self.shift is IndexShift.BY_ONE and self.denom is not DenominatorForm.POWER_OF_N:
            raise DomainError("by-one shift is only defined for n^s denominators")
        if self.denom is DenominatorForm.COMPOSITE9:
            if self.coeffs.kind is not SequenceKind.PERIOD_DOUBLING:
                raise DomainError(
                    "the composite denominator form is only valid with the "
                    "period-doubling coefficient stream"
                )
        if self.coeffs.min_index > self.first_coeff_index:
            raise DomainError(
                f"{self.coeffs.label()} starts at index {self.coeffs.min_index}, "
                f"but this series reads coefficient {self.first_coeff_index}"
            )

    # -- indexing ------------------------------------------------------------

    @property
    def counter_start(self) -> int:
        """First value of the summation counter j."""
        if self.denom is DenominatorForm.POWER_OF_N:
            return 0 if self.shift is IndexShift.BY_ONE else 1
        if self.denom is DenominatorForm.POWER_OF_ODD_N:
            return 0
        return 1

    @property
    def first_coeff_index(self) -> int:
        return self.counter_start

    def label(self) -> str:
        parts = [self.coeffs.label()]
        if self.shift is IndexShift.BY_ONE:
            parts.append("shift+1")
        if self.denom is not DenominatorForm.POWER_OF_N:
            parts.append(self.denom.value)
        return "/".join(parts)

    # -- terms ----------------------------------------------------------------

    def term_block(self, lo: int, hi: int, s: float) -> np.ndarray:
        """Terms for counters j in [lo, hi) as float64."""
        c = self.coeffs.block(lo, hi)
        if self.denom is DenominatorForm.POWER_OF_N:
            off = 1 if self.shift is IndexShift.BY_ONE else 0
            d = np.arange(lo + off, hi + off, dtype=np.float64)
            return c * d ** (-s)
        if self.denom is DenominatorForm.POWER_OF_ODD_N:
            d = 2.0 * np.arange(lo, hi, dtype=np.float64) + 1.0
            return c * d ** (-s)
        nf = np.arange(lo, hi, dtype=np.float64)
        # (4n+3)^s - n^s over (4n^2+3n)^s simplifies to n^-s - (4n+3)^-s
        return c * (nf ** (-s) - (4.0 * nf + 3.0) ** (-s))

    def term_mp(self, j: int, s, ctx: MPContext):
        c = self.coeffs.term(j)
        if self.denom is DenominatorForm.POWER_OF_N:
            off = 1 if self.shift is IndexShift.BY_ONE else 0
            return c * ctx.power(j + off, -s)
        if self.denom is DenominatorForm.POWER_OF_ODD_N:
            return c * ctx.power(2 * j + 1, -s)
        return c * (ctx.power(j, -s) - ctx.power(4 * j + 3, -s))

    # -- analytic bounds -------------------------------------------------------

    def tail_bound(self, n_counters: int, s: float) -> float:
        """Upper bound on |sum of all terms beyond the first n_counters|."""
        n = n_counters
        if n < 1:
            raise DomainError("tail bound needs at least one summed term")
        cbound = self.coeffs.bound_constant
        if self.denom is DenominatorForm.POWER_OF_ODD_N:
            # sum_{j>=M} C (2j+1)^-s <= C (2M-1)^(1-s) / (2(s-1))
            return cbound * (2.0 * n - 1.0) ** (1.0 - s) / (2.0 * (s - 1.0))
        if self.denom is DenominatorForm.COMPOSITE9:
            return float(n) ** (1.0 - s) / (s - 1.0)
        # n^s denominators: after n counters the last denominator is n
        if cbound is not None:
            return cbound * float(n) ** (1.0 - s) / (s - 1.0)
        # digit-sum majorant (b-1)(log_b x + 1), decreasing after division
        # by x^s once log_b x >= 1, hence the n >= base floor in the schedule
        b = self.coeffs.base
        lnb = math.log(b)
        ln_n = math.log(n)
        return (
            (b - 1.0)
            * float(n) ** (1.0 - s)
            * ((ln_n / (s - 1.0) + 1.0 / (s - 1.0) ** 2) / lnb + 1.0 / (s - 1.0))
        )

    def abs_sum_bound(self, n_counters: int, s: float) -> float:
        """Upper bound on sum of |terms|, used only for the rounding budget."""
        cbound = self.coeffs.bound_constant
        if cbound is None:
            cbound = self.coeffs.value_bound(max(n_counters, self.coeffs.base))
        if self.denom is DenominatorForm.POWER_OF_ODD_N:
            return cbound * (1.0 + 1.0 / (2.0 * (s - 1.0)))
        return cbound * (1.0 + 1.0 / (s - 1.0))

    def required_counters(self, s: float, eps_tail: float, max_terms: int) -> int:
        """Smallest counter count whose tail bound undershoots eps_tail."""
        min_n = max(2, self.counter_start + 1)
        if self.coeffs.bound_constant is None:
            min_n = max(min_n, self.coeffs.base, 16)
            n = min_n
            while self.tail_bound(n, s) > eps_tail:
                if n > 4 * max_terms:
                    raise ResourceLimitError(
                        f"naive evaluation of {self.label()} at s={s:g} to "
                        f"eps={eps_tail:g} needs more than {n} terms "
                        f"(cap {max_terms})"
                    )
                n *= 2
            lo, hi = n // 2, n
            while lo + 1 < hi:
                mid = (lo + hi) // 2
                if self.tail_bound(mid, s) <= eps_tail:
                    hi = mid
                else:
                    lo = mid
            n = max(min_n, hi)
        else:
            c = self.coeffs.bound_constant
            if c == 0.0:
                return min_n
            if self.denom is DenominatorForm.POWER_OF_ODD_N:
                log_root = (math.log(c) - math.log(2.0 * (s - 1.0)) - math.log(eps_tail)) / (s - 1.0)
                log_req = log_root - math.log(2.0)
            else:
                log_root = (math.log(c) - math.log(s - 1.0) - math.log(eps_tail)) / (s - 1.0)
                log_req = log_root
            if log_req > math.log(4.0 * max_terms):
                raise ResourceLimitError(
                    f"naive evaluation of {self.label()} at s={s:g} to "
                    f"eps={eps_tail:g} needs N~{math.exp(min(log_req, 700.0)):.3g} "
                    f"terms (cap {max_terms})"
                )
            n = max(min_n, math.ceil(math.exp(log_req)))
            while self.tail_bound(n, s) > eps_tail:
                n = n + max(1, n // 16)
        if n > max_terms:
            raise ResourceLimitError(
                f"naive evaluation of {self.label()} at s={s:g} to "
                f"eps={eps_tail:g} needs N={n} terms (cap {max_terms})"
            )
        return n


# ---------------------------------------------------------------------------
# canonical series
# ---------------------------------------------------------------------------

#: f(s) = sum_{n>=1} e_{n-1}/n^s, the shifted +/-1 series.
F_SERIES = SeriesSpec(CoefficientSequence.plus_minus(), IndexShift.BY_ONE)
#: g(s) = sum_{n>=1} e_n/n^s.
G_SERIES = SeriesSpec(CoefficientSequence.plus_minus())
#: sum_{n>=1} t_{n-1}/n^s.
PHI_SERIES = SeriesSpec(CoefficientSequence.thue_morse(), IndexShift.BY_ONE)
#: sum_{n>=1} t_n/n^s.
GAMMA_SERIES = SeriesSpec(CoefficientSequence.thue_morse())
#: sum_{n>=1} (t_n - t_{n-1})/n^s.
DELTA_SERIES = SeriesSpec(CoefficientSequence.delta())
#: A(s) = sum_{m>=0} e_m/(2m+1)^s.
ODD_PLUS_MINUS_SERIES = SeriesSpec(
    CoefficientSequence.plus_minus(), IndexShift.NONE, DenominatorForm.POWER_OF_ODD_N
)
#: the period-doubling composite series of the Hurwitz identity.
COMPOSITE9_SERIES = SeriesSpec(
    CoefficientSequence.period_doubling(), IndexShift.NONE, DenominatorForm.COMPOSITE9
)
#: all-ones coefficients; naive route sums the zeta series directly.
ZETA_SERIES = SeriesSpec(CoefficientSequence.affine(1.0, 1.0))


# ---------------------------------------------------------------------------
# summation kernels
# ---------------------------------------------------------------------------


def _check_s(s: float) -> float:
    s = float(s)
    if not (s > 1.0) or not math.isfinite(s):
        raise DomainError(f"series exponent must satisfy s > 1, got {s}")
    return s


def _check_eps(eps: float) -> float:
    eps = float(eps)
    if not (eps > 0.0) or not math.isfinite(eps):
        raise DomainError(f"eps must be positive, got {eps}")
    return eps


def chunked_kahan_sum(block_fn, start: int, count: int) -> float:
    """Compensated sum of ``block_fn(lo, hi)`` chunks in fixed ascending order.

    Chunk boundaries are fixed at multiples of CHUNK from ``start``, so the
    result is bit-reproducible for given inputs no matter how callers
    schedule work.
    """
    j = start
    end = start + count
    total = 0.0
    comp = 0.0
    while j < end:
        hi = min(j + CHUNK, end)
        part = float(np.sum(block_fn(j, hi)))
        y = part - comp
        t = total + y
        comp = (t - total) - y
        total = t
        j = hi
    return total


def _sum_f64(spec: SeriesSpec, s: float, n_counters: int) -> float:
    return chunked_kahan_sum(
        lambda lo, hi: spec.term_block(lo, hi, s), spec.counter_start, n_counters
    )


def _sum_mp(spec: SeriesSpec, s: float, n_counters: int, prec: Precision):
    ctx = MPContext()
    ctx.prec = prec.working_bits + 20 + max(0, n_counters.bit_length())
    s_mp = ctx.mpf(s)
    j0 = spec.counter_start
    return ctx.fsum(spec.term_mp(j, s_mp, ctx) for j in range(j0, j0 + n_counters))


def partial_sum(spec: SeriesSpec, s: float, n_terms: int, prec: Precision | None = None):
    """Sum of the first ``n_terms`` terms, with no tail accounting.

    Mainly useful for prefix checks and term-level algebra tests.
    """
    s = _check_s(s)
    if n_terms < 1:
        raise DomainError("n_terms must be >= 1")
    prec = prec or Precision()
    if prec.is_double:
        return _sum_f64(spec, s, n_terms)
    return _sum_mp(spec, s, n_terms, prec)


# ---------------------------------------------------------------------------
# naive route
# ---------------------------------------------------------------------------


def eval_naive(
    spec: SeriesSpec,
    s: float,
    eps: float,
    prec: Precision | None = None,
    max_terms: int | None = None,
) -> EvalResult:
    """Directly sum ``spec`` at s > 1 until the analytic tail is below eps.

    The reported bound is the tail bound at the chosen truncation plus an
    explicit rounding budget; if that total cannot undershoot eps at the
    working precision, a resource error is raised instead of returning an
    uncertified value.
    """
    s = _check_s(s)
    eps = _check_eps(eps)
    prec = prec if prec is not None else Precision.for_eps(eps)
    cap = max_terms if max_terms is not None else DEFAULT_MAX_TERMS
    n = spec.required_counters(s, eps * _TAIL_FRACTION, cap)
    rounding = _ROUNDING_OPS * prec.unit_roundoff * spec.abs_sum_bound(n, s)
    bound = spec.tail_bound(n, s) + rounding
    if bound > eps:
        raise ResourceLimitError(
            f"cannot certify eps={eps:g} for {spec.label()} at s={s:g}: "
            f"rounding budget {rounding:g} at working precision "
            f"{prec.working_bits}; raise working_bits"
        )
    value = _sum_f64(spec, s, n) if prec.is_double else _sum_mp(spec, s, n, prec)
    return EvalResult(value, bound, n, Method.NAIVE)


# ---------------------------------------------------------------------------
# odd-index split
# ---------------------------------------------------------------------------


def odd_split_factor(s: float) -> float:
    """2^s/(2^s + 1), the factor linking f(s) to the odd-denominator series."""
    return 1.0 / (1.0 + 2.0 ** (-_check_s(s)))


def eval_odd_series(
    s: float,
    eps: float,
    prec: Precision | None = None,
    max_terms: int | None = None,
) -> EvalResult:
    """A(s) = sum_{m>=0} e_m/(2m+1)^s by bounded direct summation."""
    return eval_naive(ODD_PLUS_MINUS_SERIES, s, eps, prec, max_terms)


def eval_f_via_odd_split(
    s: float,
    eps: float,
    prec: Precision | None = None,
    max_terms: int | None = None,
) -> EvalResult:
    """f(s) through the unique factorization n = 2^k (2m+1):  f = 2^s/(2^s+1) A."""
    s = _check_s(s)
    eps = _check_eps(eps)
    prec = prec if prec is not None else Precision.for_eps(eps)
    ctx = _combine_ctx(prec)
    if ctx is None:
        factor = odd_split_factor(s)
    else:
        factor = 1 / (1 + ctx.power(2, -ctx.mpf(s)))
    inner = eval_odd_series(s, eps * 0.98 / float(factor), prec, max_terms)
    value = factor * inner.value
    bound = float(factor) * inner.abs_error_bound + 4.0 * prec.unit_roundoff * abs(float(value))
    return EvalResult(value, bound, inner.terms_used, Method.ODD_DECOMPOSITION)


# ---------------------------------------------------------------------------
# functional-equation route
# ---------------------------------------------------------------------------


def _combine_ctx(prec: Precision) -> MPContext | None:
    """Context for value combinations, None on the plain-double path.

    mpf arithmetic rounds at the precision of the operand's own context, so
    every quantity that multiplies a high-precision value must itself be
    produced inside such a context; plain-float factors would silently cap
    the result at 53 bits and falsify the rounding budget.
    """
    if prec.is_double:
        return None
    ctx = MPContext()
    ctx.prec = prec.working_bits + 20
    return ctx


def _fe_weights(s: float, depth: int, ctx: MPContext | None = None):
    """Weights w_k = 2^(-s-k) binom(s+k-1, k) for k = 1..depth+1, plus their sum
    over 1..depth.  Rising-factorial recurrence, no gamma function."""
    if ctx is None:
        w = [0.0] * (depth + 2)
        w[1] = s * 2.0 ** (-s - 1.0)
        for k in range(1, depth + 1):
            w[k + 1] = w[k] * (s + k) / (2.0 * (k + 1.0))
        return w, math.fsum(w[1 : depth + 1])
    s_mp = ctx.mpf(s)
    w = [ctx.mpf(0)] * (depth + 2)
    w[1] = s_mp * ctx.power(2, -s_mp - 1)
    for k in range(1, depth + 1):
        w[k + 1] = w[k] * (s_mp + k) / (2 * (k + 1))
    return w, ctx.fsum(w[1 : depth + 1])


def _fe_truncation(s: float, depth: int, w_next: float) -> float:
    """Bound on the sum of the skipped tail terms past ``depth``."""
    rho = (s + depth + 1.0) / (2.0 * (depth + 2.0))
    if rho >= 1.0:
        return math.inf
    p = s + depth + 1.0
    f_abs = 1.0 + 2.0 ** (-p) * (1.0 + 2.0 / (p - 1.0))
    return f_abs * w_next / (1.0 - rho)


def depth_for(s: float, eps: float, minimum: int = DEFAULT_DEPTH) -> int:
    """Smallest truncation depth >= ``minimum`` whose remainder fits 0.45 eps."""
    s = _check_s(s)
    eps = _check_eps(eps)
    k = max(minimum, 1)
    w = s * 2.0 ** (-s - 1.0)
    for i in range(1, k):
        w = w * (s + i) / (2.0 * (i + 1.0))
    while k < 1000:
        w_next = w * (s + k) / (2.0 * (k + 1.0))
        if _fe_truncation(s, k, w_next) <= 0.45 * eps:
            return k
        w = w_next
        k += 1
    raise ResourceLimitError(f"no workable truncation depth below 1000 for s={s:g}, eps={eps:g}")


def eval_functional_equation(
    s: float,
    eps: float,
    depth: int = DEFAULT_DEPTH,
    prec: Precision | None = None,
    max_terms: int | None = None,
) -> EvalResult:
    """f(s) via the binomial acceleration, truncated at ``depth`` terms.

    45% of eps goes to the truncation remainder and 45% is spread across
    the inner naive evaluations in proportion to their weights (which is a
    uniform inner tolerance eps * 0.45 / sum(w_k)); the rest absorbs
    rounding.  Inner values live at exponents s+1 .. s+depth where direct
    summation is cheap.
    """
    s = _check_s(s)
    eps = _check_eps(eps)
    if depth < 1:
        raise DomainError(f"depth must be >= 1, got {depth}")
    prec = prec if prec is not None else Precision.for_eps(eps)

    ctx = _combine_ctx(prec)
    w, w_sum = _fe_weights(s, depth, ctx)
    # geometric majorant for the skipped weights: ratios (s+k)/(2(k+1))
    # decrease in k, so sum_{k>K} w_k <= w_{K+1}/(1-rho)
    trunc = _fe_truncation(s, depth, float(w[depth + 1]))
    if math.isinf(trunc):
        raise ResourceLimitError(
            f"truncation depth {depth} is too small to bound the remainder "
            f"at s={s:g}; increase depth beyond {math.ceil(s)}"
        )
    if trunc > 0.45 * eps:
        raise ResourceLimitError(
            f"depth {depth} leaves truncation remainder {trunc:g} > {0.45 * eps:g} "
            f"at s={s:g}; increase depth"
        )

    inner_eps = 0.45 * eps / float(w_sum)
    total = 0.0
    comp = 0.0
    inner_bound = 0.0
    abs_comb = 0.0
    terms = depth
    for k in range(1, depth + 1):
        r = eval_naive(F_SERIES, s + k, inner_eps, prec, max_terms)
        terms += r.terms_used
        contrib = w[k] * r.value
        y = contrib - comp
        t = total + y
        comp = (t - total) - y
        total = t
        inner_bound += float(w[k]) * r.abs_error_bound
        abs_comb += float(w[k]) * abs(float(r.value))
    rounding = 8.0 * prec.unit_roundoff * abs_comb
    bound = trunc + inner_bound + rounding
    if bound > eps:
        raise ResourceLimitError(
            f"functional-equation route certified only {bound:g} > eps={eps:g} "
            f"at s={s:g}; increase depth or working_bits"
        )
    return EvalResult(total, bound, terms, Method.FUNCTIONAL_EQUATION)


# ---------------------------------------------------------------------------
# derived 0/1 series
# ---------------------------------------------------------------------------


class ZeroOneSeries(Enum):
    PHI = "phi"      # sum t_{n-1}/n^s
    GAMMA = "gamma"  # sum t_n/n^s


def _gamma_f_coefficient(s: float) -> float:
    """(1+2^s)/(2(2^s-1)), written in 2^-s so large s cannot overflow."""
    q = 2.0 ** (-s)
    return (q + 1.0) / (2.0 * (1.0 - q))


def eval_phi_gamma(
    which: ZeroOneSeries | str,
    s: float,
    eps: float,
    prec: Precision | None = None,
    depth: int | None = None,
    max_terms: int | None = None,
    f_result: EvalResult | None = None,
) -> EvalResult:
    """The 0/1 series through their exact relation to zeta and f.

    Substituting e_n = 1 - 2 t_n into the +/-1 series gives

        sum t_{n-1}/n^s = zeta(s)/2 - f(s)/2
        sum t_n/n^s     = zeta(s)/2 + (1+2^s)/(2(2^s-1)) f(s)

    and the bounds propagate through the exact rational-in-2^s factors.
    ``f_result`` lets a caller reuse one accelerated f evaluation for both
    series; it must carry a bound tight enough for the requested eps.
    """
    which = ZeroOneSeries(which)
    s = _check_s(s)
    eps = _check_eps(eps)
    prec = prec if prec is not None else Precision.for_eps(eps)
    ctx = _combine_ctx(prec)
    if which is ZeroOneSeries.PHI:
        f_coef = 0.5
    elif ctx is None:
        f_coef = _gamma_f_coefficient(s)
    else:
        q = ctx.power(2, -ctx.mpf(s))
        f_coef = (q + 1) / (2 * (1 - q))
    z = riemann_zeta(s, prec.with_eps(eps * 0.5))
    if f_result is None:
        f_eps = 0.45 * eps / float(f_coef)
        f_result = eval_functional_equation(
            s,
            f_eps,
            depth=depth if depth is not None else depth_for(s, f_eps),
            prec=prec,
            max_terms=max_terms,
        )
    if which is ZeroOneSeries.PHI:
        value = z.value / 2 - f_result.value / 2
    else:
        value = z.value / 2 + f_coef * f_result.value
    f_coef_abs = abs(float(f_coef))
    rounding = 8.0 * prec.unit_roundoff * (
        abs(float(z.value)) + f_coef_abs * abs(float(f_result.value))
    )
    bound = z.abs_error_bound / 2 + f_coef_abs * f_result.abs_error_bound + rounding
    if bound > eps:
        raise ResourceLimitError(
            f"{which.value} evaluation certified only {bound:g} > eps={eps:g} at s={s:g}"
        )
    return EvalResult(value, bound, z.terms_used + f_result.terms_used, f_result.method)


def eval_composite9(
    s: float,
    eps: float,
    prec: Precision | None = None,
    max_terms: int | None = None,
) -> EvalResult:
    """The period-doubling composite series, summed directly.

    Each term is bounded by n^-s (the numerator never exceeds (4n+3)^s and
    the coefficient is a bit), so the usual integral tail applies.
    """
    return eval_naive(COMPOSITE9_SERIES, s, eps, prec, max_terms)
