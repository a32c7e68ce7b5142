"""Coefficient sequences driven by the binary digit-parity map.

Everything here is an exact, pure function of the index n: the 0/1
digit-parity sequence t_n, its +/-1 form e_n = (-1)^t_n, the difference
sequence d_n = t_n - t_{n-1}, the period-doubling sequence, base-b digit
sums, and two-letter alphabets a + (b - a) t_n over the reals.

Scalar generators are O(log n) per term (bit counting, no tables), so any
index can be queried independently; block generators produce numpy arrays
for the chunked summation kernels and agree with the scalar forms
everywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DomainError

# ---------------------------------------------------------------------------
# scalar generators
# ---------------------------------------------------------------------------


def thue_morse(n: int) -> int:
    """Parity of the number of 1-bits in the binary expansion of n.

    The sequence starts 0, 1, 1, 0, 1, 0, 0, 1, ... and satisfies
    t_{2n} = t_n and t_{2n+1} = 1 - t_n.
    """
    if n < 0:
        raise DomainError(f"index must be >= 0, got {n}")
    return int(n).bit_count() & 1


def pm_thue_morse(n: int) -> int:
    """The +/-1 form (-1)^t_n, i.e. 1 - 2 t_n.

    Satisfies e_{2n} = e_n and e_{2n+1} = -e_n.
    """
    return 1 - 2 * thue_morse(n)


def delta(n: int) -> int:
    """Difference t_n - t_{n-1}, in {-1, 0, 1}.  Defined for n >= 1."""
    if n < 1:
        raise DomainError(f"difference sequence needs n >= 1, got {n}")
    return thue_morse(n) - thue_morse(n - 1)


def period_doubling(n: int) -> int:
    """Period-doubling bit: p_{2n} = 0, p_{4n+1} = 1, p_{4n+3} = p_n.

    The value at 0 is 0 (forced by the even rule at n = 0).  Equivalently
    this is the parity of the 2-adic valuation of n + 1, which is what the
    block generator uses.
    """
    if n < 0:
        raise DomainError(f"index must be >= 0, got {n}")
    while True:
        if n % 2 == 0:
            return 0
        if n % 4 == 1:
            return 1
        n = (n - 3) // 4


def digit_sum(n: int, base: int) -> int:
    """Sum of the base-b digits of n, for n >= 1 and b >= 2."""
    if base < 2:
        raise DomainError(f"digit-sum base must be >= 2, got {base}")
    if n < 1:
        raise DomainError(f"digit sum needs n >= 1, got {n}")
    total = 0
    while n:
        n, r = divmod(n, base)
        total += r
    return total


def affine_seq(n: int, low: float, high: float) -> float:
    """Two-letter alphabet over t_n: ``low`` where t_n = 0, ``high`` where t_n = 1."""
    return high if thue_morse(n) else low


# ---------------------------------------------------------------------------
# block generators (uint64 index arithmetic)
# ---------------------------------------------------------------------------


def _indices(lo: int, hi: int) -> np.ndarray:
    if lo < 0 or hi < lo:
        raise DomainError(f"bad index range [{lo}, {hi})")
    return np.arange(lo, hi, dtype=np.uint64)


def _parity_block(values: np.ndarray) -> np.ndarray:
    return (np.bitwise_count(values) & np.uint64(1)).astype(np.int64)


def thue_morse_block(lo: int, hi: int) -> np.ndarray:
    """t_n for n in [lo, hi) as an int64 array."""
    return _parity_block(_indices(lo, hi))


def pm_thue_morse_block(lo: int, hi: int) -> np.ndarray:
    """e_n for n in [lo, hi) as an int64 array."""
    return 1 - 2 * thue_morse_block(lo, hi)


def period_doubling_block(lo: int, hi: int) -> np.ndarray:
    """Period-doubling bits via the parity of the 2-adic valuation of n + 1."""
    m = _indices(lo, hi) + np.uint64(1)
    # trailing-zero count: popcount((m & -m) - 1); uint64 wraparound gives -m
    low_bit = m & (np.uint64(0) - m)
    return _parity_block(low_bit - np.uint64(1))


def digit_sum_block(lo: int, hi: int, base: int) -> np.ndarray:
    """s_b(n) for n in [lo, hi), lo >= 1."""
    if base < 2:
        raise DomainError(f"digit-sum base must be >= 2, got {base}")
    if lo < 1:
        raise DomainError(f"digit sum needs n >= 1, got range start {lo}")
    idx = _indices(lo, hi)
    if base == 2:
        return np.bitwise_count(idx).astype(np.int64)
    b = np.uint64(base)
    acc = np.zeros(idx.shape, dtype=np.uint64)
    x = idx.copy()
    while x.any():
        acc += x % b
        x //= b
    return acc.astype(np.int64)


# ---------------------------------------------------------------------------
# coefficient streams
# ---------------------------------------------------------------------------


class SequenceKind(Enum):
    THUE_MORSE = "t"
    SHIFTED_THUE_MORSE = "t-shifted"
    PLUS_MINUS = "pm"
    SHIFTED_PLUS_MINUS = "pm-shifted"
    DELTA = "delta"
    PERIOD_DOUBLING = "period-doubling"
    DIGIT_SUM = "digit-sum"
    AFFINE = "affine"


_SHIFTED_KINDS = {SequenceKind.SHIFTED_THUE_MORSE, SequenceKind.SHIFTED_PLUS_MINUS}


@dataclass(frozen=True)
class CoefficientSequence:
    """An exact stream n -> c_n with a uniform majorant |c_n| <= C(n).

    ``base`` is only meaningful for digit sums; ``low``/``high`` only for
    affine alphabets (the values taken where t_n is 0 and 1).  The majorant
    feeds the evaluator's analytic tail bounds: it is the constant 1 for all
    bit-valued and +/-1-valued kinds, max(|low|, |high|) for alphabets, and
    (b-1) (floor(log_b n) + 1) for digit sums.
    """

    kind: SequenceKind
    base: int = 0
    low: float = 0.0
    high: float = 0.0

    def __post_init__(self) -> None:
        if self.kind is SequenceKind.DIGIT_SUM and self.base < 2:
            raise DomainError(f"digit-sum base must be >= 2, got {self.base}")

    # -- constructors ------------------------------------------------------

    @classmethod
    def thue_morse(cls) -> "CoefficientSequence":
        return cls(SequenceKind.THUE_MORSE)

    @classmethod
    def shifted_thue_morse(cls) -> "CoefficientSequence":
        return cls(SequenceKind.SHIFTED_THUE_MORSE)

    @classmethod
    def plus_minus(cls) -> "CoefficientSequence":
        return cls(SequenceKind.PLUS_MINUS)

    @classmethod
    def shifted_plus_minus(cls) -> "CoefficientSequence":
        return cls(SequenceKind.SHIFTED_PLUS_MINUS)

    @classmethod
    def delta(cls) -> "CoefficientSequence":
        return cls(SequenceKind.DELTA)

    @classmethod
    def period_doubling(cls) -> "CoefficientSequence":
        return cls(SequenceKind.PERIOD_DOUBLING)

    @classmethod
    def digit_sum(cls, base: int) -> "CoefficientSequence":
        return cls(SequenceKind.DIGIT_SUM, base=base)

    @classmethod
    def affine(cls, low: float, high: float) -> "CoefficientSequence":
        return cls(SequenceKind.AFFINE, low=float(low), high=float(high))

    # -- stream API ---------------------------------------------------------

    @property
    def min_index(self) -> int:
        """Smallest index at which the stream is defined."""
        if self.kind is SequenceKind.DELTA or self.kind is SequenceKind.DIGIT_SUM:
            return 1
        if self.kind in _SHIFTED_KINDS:
            return 1
        return 0

    def term(self, n: int) -> float:
        if n < self.min_index:
            raise DomainError(f"{self.kind.value} sequence needs n >= {self.min_index}, got {n}")
        k = self.kind
        if k is SequenceKind.THUE_MORSE:
            return float(thue_morse(n))
        if k is SequenceKind.SHIFTED_THUE_MORSE:
            return float(thue_morse(n - 1))
        if k is SequenceKind.PLUS_MINUS:
            return float(pm_thue_morse(n))
        if k is SequenceKind.SHIFTED_PLUS_MINUS:
            return float(pm_thue_morse(n - 1))
        if k is SequenceKind.DELTA:
            return float(delta(n))
        if k is SequenceKind.PERIOD_DOUBLING:
            return float(period_doubling(n))
        if k is SequenceKind.DIGIT_SUM:
            return float(digit_sum(n, self.base))
        return affine_seq(n, self.low, self.high)

    def block(self, lo: int, hi: int) -> np.ndarray:
        """c_n for n in [lo, hi) as a float64 array."""
        if lo < self.min_index:
            raise DomainError(f"{self.kind.value} sequence needs n >= {self.min_index}, got {lo}")
        k = self.kind
        if k is SequenceKind.THUE_MORSE:
            return thue_morse_block(lo, hi).astype(np.float64)
        if k is SequenceKind.SHIFTED_THUE_MORSE:
            return thue_morse_block(lo - 1, hi - 1).astype(np.float64)
        if k is SequenceKind.PLUS_MINUS:
            return pm_thue_morse_block(lo, hi).astype(np.float64)
        if k is SequenceKind.SHIFTED_PLUS_MINUS:
            return pm_thue_morse_block(lo - 1, hi - 1).astype(np.float64)
        if k is SequenceKind.DELTA:
            return (thue_morse_block(lo, hi) - thue_morse_block(lo - 1, hi - 1)).astype(np.float64)
        if k is SequenceKind.PERIOD_DOUBLING:
            return period_doubling_block(lo, hi).astype(np.float64)
        if k is SequenceKind.DIGIT_SUM:
            return digit_sum_block(lo, hi, self.base).astype(np.float64)
        t = thue_morse_block(lo, hi).astype(np.float64)
        return self.low + (self.high - self.low) * t

    # -- majorant ------------------------------------------------------------

    @property
    def bound_constant(self) -> float | None:
        """Constant C with |c_n| <= C, or None when the majorant grows (digit sums)."""
        if self.kind is SequenceKind.AFFINE:
            return max(abs(self.low), abs(self.high))
        if self.kind is SequenceKind.DIGIT_SUM:
            return None
        return 1.0

    def value_bound(self, n: int) -> float:
        """Majorant C(n) with |c_m| <= C(m) for all m, nondecreasing in n."""
        c = self.bound_constant
        if c is not None:
            return c
        return (self.base - 1) * (math.floor(math.log(n, self.base)) + 1)

    def label(self) -> str:
        k = self.kind
        if k is SequenceKind.DIGIT_SUM:
            return f"digit-sum(base={self.base})"
        if k is SequenceKind.AFFINE:
            return f"affine({self.low:g},{self.high:g})"
        return k.value
