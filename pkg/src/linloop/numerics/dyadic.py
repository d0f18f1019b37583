# src/linloop/numerics/dyadic.py
"""
任意精度的二進位 (dyadic) 區間算術。

端點以 mpmath 的原始 mpf 值 (sign, mantissa, exponent, bitcount) 表示，也就是 mantissa × 2^exponent。
每次運算都以 `prec` 位元的工作精度進行外向捨入：下端點向下、上端點向上。
"""

# 1. 標準庫導入
import functools
import math
from dataclasses import dataclass
from fractions import Fraction

# 2. 第三方庫導入
from mpmath.libmp import (
    fone,
    from_man_exp,
    from_rational,
    fzero,
    mpf_abs,
    mpf_add,
    mpf_cmp,
    mpf_div,
    mpf_mul,
    mpf_neg,
    mpf_shift,
    mpf_sqrt,
    mpf_sub,
    round_ceiling,
    round_floor,
    to_rational,
    to_str,
)

# 3. 本專案導入
from linloop.errors import IntervalDivisionError

DEFAULT_PRECISION = 53

Mpf = tuple
Scalar = int | Fraction


def mpf_min(*values: Mpf) -> Mpf:
    """回傳一組原始 mpf 值中的最小值。"""
    return min(values, key=functools.cmp_to_key(mpf_cmp))


def mpf_max(*values: Mpf) -> Mpf:
    """回傳一組原始 mpf 值中的最大值。"""
    return max(values, key=functools.cmp_to_key(mpf_cmp))


def mpf_to_fraction(value: Mpf) -> Fraction:
    """將原始 mpf 值精確轉換為 Fraction (二進位有理數必定可精確表示)。"""
    p, q = to_rational(value)
    return Fraction(int(p), int(q))


def fraction_to_mpf(value: Scalar, prec: int, rounding: str) -> Mpf:
    """以指定方向捨入，將有理數轉為原始 mpf 值；二進位有理數會被精確保留。"""
    value = Fraction(value)
    if value.denominator & (value.denominator - 1) == 0:
        exponent = value.denominator.bit_length() - 1
        return from_man_exp(value.numerator, -exponent)
    return from_rational(value.numerator, value.denominator, prec, rounding)


def dyadic_floor(value: Scalar, bits: int) -> Mpf:
    """向下捨入到 2^(-bits) 的格點上 (固定小數點，與工作精度無關)。"""
    return from_man_exp(math.floor(Fraction(value) * 2**bits), -bits)


def dyadic_ceil(value: Scalar, bits: int) -> Mpf:
    """向上捨入到 2^(-bits) 的格點上。"""
    return from_man_exp(math.ceil(Fraction(value) * 2**bits), -bits)


def mpf_str(value: Mpf, digits: int = 12) -> str:
    """以十進位近似顯示原始 mpf 值，僅供日誌與文字報告使用。"""
    return to_str(value, digits)


@dataclass(frozen=True)
class DyadicInterval:
    """
    端點為二進位數的閉區間 [lo, hi]。

    不變量: lo ≤ hi；所有運算結果皆包含對應的精確集合運算結果。
    """

    lo: Mpf
    hi: Mpf
    prec: int = DEFAULT_PRECISION

    def __post_init__(self):
        if mpf_cmp(self.lo, self.hi) > 0:
            raise ValueError(f"區間端點順序錯誤: [{mpf_str(self.lo)}, {mpf_str(self.hi)}]")

    # --- 建構 ---

    @classmethod
    def exact(cls, value: Mpf, prec: int = DEFAULT_PRECISION) -> "DyadicInterval":
        """由單一二進位數建立退化區間。"""
        return cls(value, value, prec)

    @classmethod
    def point(cls, value: Scalar, prec: int = DEFAULT_PRECISION) -> "DyadicInterval":
        """包含有理數 value 的最窄區間 (二進位有理數為退化區間)。"""
        return cls(fraction_to_mpf(value, prec, round_floor), fraction_to_mpf(value, prec, round_ceiling), prec)

    @classmethod
    def from_fractions(cls, lo: Scalar, hi: Scalar, prec: int = DEFAULT_PRECISION) -> "DyadicInterval":
        """包含有理數區間 [lo, hi] 的外向捨入區間。"""
        return cls(fraction_to_mpf(lo, prec, round_floor), fraction_to_mpf(hi, prec, round_ceiling), prec)

    @classmethod
    def enclose_fixed(cls, lo: Scalar, hi: Scalar, bits: int, prec: int = DEFAULT_PRECISION) -> "DyadicInterval":
        """
        以 2^(-bits) 固定格點外向捨入 [lo, hi]。

        格點在 bits 增加時彼此巢狀，因此結果對 bits 單調收縮。
        """
        return cls(dyadic_floor(lo, bits), dyadic_ceil(hi, bits), prec)

    # --- 查詢 ---

    @property
    def lo_fraction(self) -> Fraction:
        return mpf_to_fraction(self.lo)

    @property
    def hi_fraction(self) -> Fraction:
        return mpf_to_fraction(self.hi)

    def as_fractions(self) -> tuple[Fraction, Fraction]:
        return self.lo_fraction, self.hi_fraction

    def width(self) -> Mpf:
        """寬度的上界。"""
        return mpf_sub(self.hi, self.lo, self.prec, round_ceiling)

    def midpoint(self) -> Mpf:
        """精確的中點 (二進位數的平均值仍是二進位數)。"""
        return mpf_shift(mpf_add(self.lo, self.hi), -1)

    def is_degenerate(self) -> bool:
        return mpf_cmp(self.lo, self.hi) == 0

    def contains(self, value: Scalar | Mpf) -> bool:
        if isinstance(value, tuple):
            return mpf_cmp(self.lo, value) <= 0 <= mpf_cmp(self.hi, value)
        value = Fraction(value)
        return self.lo_fraction <= value <= self.hi_fraction

    def contains_zero(self) -> bool:
        return mpf_cmp(self.lo, fzero) <= 0 <= mpf_cmp(self.hi, fzero)

    def excludes_zero(self) -> bool:
        return not self.contains_zero()

    def is_positive(self) -> bool:
        """區間內每一點都嚴格大於 0。"""
        return mpf_cmp(self.lo, fzero) > 0

    def is_negative(self) -> bool:
        """區間內每一點都嚴格小於 0。"""
        return mpf_cmp(self.hi, fzero) < 0

    def subset_of(self, other: "DyadicInterval") -> bool:
        return mpf_cmp(other.lo, self.lo) <= 0 and mpf_cmp(self.hi, other.hi) <= 0

    def mag(self) -> Mpf:
        """max |x| over the interval。"""
        return mpf_max(mpf_abs(self.lo), mpf_abs(self.hi))

    def mig(self) -> Mpf:
        """min |x| over the interval；包含 0 時為 0。"""
        if self.contains_zero():
            return fzero
        return mpf_min(mpf_abs(self.lo), mpf_abs(self.hi))

    def bisect(self) -> tuple["DyadicInterval", "DyadicInterval"]:
        mid = self.midpoint()
        return DyadicInterval(self.lo, mid, self.prec), DyadicInterval(mid, self.hi, self.prec)

    def hull(self, other: "DyadicInterval") -> "DyadicInterval":
        return DyadicInterval(
            mpf_min(self.lo, other.lo), mpf_max(self.hi, other.hi), max(self.prec, other.prec)
        )

    def widen(self, amount: Mpf) -> "DyadicInterval":
        """兩端各向外擴張 amount。"""
        return DyadicInterval(
            mpf_sub(self.lo, amount, self.prec, round_floor),
            mpf_add(self.hi, amount, self.prec, round_ceiling),
            self.prec,
        )

    # --- 算術 ---

    def _coerce(self, other: "DyadicInterval | Scalar") -> "DyadicInterval":
        if isinstance(other, DyadicInterval):
            return other
        return DyadicInterval.point(other, self.prec)

    def __add__(self, other):
        return iv_add(self, self._coerce(other))

    def __radd__(self, other):
        return iv_add(self._coerce(other), self)

    def __sub__(self, other):
        return iv_sub(self, self._coerce(other))

    def __rsub__(self, other):
        return iv_sub(self._coerce(other), self)

    def __mul__(self, other):
        return iv_mul(self, self._coerce(other))

    def __rmul__(self, other):
        return iv_mul(self._coerce(other), self)

    def __truediv__(self, other):
        return iv_div(self, self._coerce(other))

    def __rtruediv__(self, other):
        return iv_div(self._coerce(other), self)

    def __neg__(self):
        return iv_neg(self)

    def __str__(self):
        return f"[{mpf_str(self.lo)}, {mpf_str(self.hi)}]"


ZERO = DyadicInterval(fzero, fzero)
ONE = DyadicInterval(fone, fone)


def _result_prec(x: DyadicInterval, y: DyadicInterval) -> int:
    return max(x.prec, y.prec)


def iv_neg(x: DyadicInterval) -> DyadicInterval:
    return DyadicInterval(mpf_neg(x.hi), mpf_neg(x.lo), x.prec)


def iv_add(x: DyadicInterval, y: DyadicInterval) -> DyadicInterval:
    prec = _result_prec(x, y)
    return DyadicInterval(
        mpf_add(x.lo, y.lo, prec, round_floor),
        mpf_add(x.hi, y.hi, prec, round_ceiling),
        prec,
    )


def iv_sub(x: DyadicInterval, y: DyadicInterval) -> DyadicInterval:
    prec = _result_prec(x, y)
    return DyadicInterval(
        mpf_sub(x.lo, y.hi, prec, round_floor),
        mpf_sub(x.hi, y.lo, prec, round_ceiling),
        prec,
    )


def iv_mul(x: DyadicInterval, y: DyadicInterval) -> DyadicInterval:
    prec = _result_prec(x, y)
    if y.is_degenerate():
        x, y = y, x
    if x.is_degenerate():
        # 純量乘區間：只需兩個端點乘積
        candidates = [(x.lo, y.lo), (x.lo, y.hi)]
    else:
        candidates = [(x.lo, y.lo), (x.lo, y.hi), (x.hi, y.lo), (x.hi, y.hi)]
    lows = [mpf_mul(a, b, prec, round_floor) for a, b in candidates]
    highs = [mpf_mul(a, b, prec, round_ceiling) for a, b in candidates]
    return DyadicInterval(mpf_min(*lows), mpf_max(*highs), prec)


def iv_div(x: DyadicInterval, y: DyadicInterval) -> DyadicInterval:
    if y.contains_zero():
        raise IntervalDivisionError(f"除數區間 {y} 包含 0")
    prec = _result_prec(x, y)
    candidates = [(x.lo, y.lo), (x.lo, y.hi), (x.hi, y.lo), (x.hi, y.hi)]
    lows = [mpf_div(a, b, prec, round_floor) for a, b in candidates]
    highs = [mpf_div(a, b, prec, round_ceiling) for a, b in candidates]
    return DyadicInterval(mpf_min(*lows), mpf_max(*highs), prec)


def iv_sqr(x: DyadicInterval) -> DyadicInterval:
    """x² 的緊緻包圍 (區間跨越 0 時下界為 0)。"""
    lo_sq = mpf_mul(x.mig(), x.mig(), x.prec, round_floor)
    hi_sq = mpf_mul(x.mag(), x.mag(), x.prec, round_ceiling)
    return DyadicInterval(lo_sq, hi_sq, x.prec)


def iv_sqrt(x: DyadicInterval) -> DyadicInterval:
    """非負部分的平方根；負的下端點截斷為 0。"""
    lo = x.lo if mpf_cmp(x.lo, fzero) > 0 else fzero
    if mpf_cmp(x.hi, fzero) < 0:
        raise ValueError(f"無法對負區間 {x} 取平方根")
    return DyadicInterval(mpf_sqrt(lo, x.prec, round_floor), mpf_sqrt(x.hi, x.prec, round_ceiling), x.prec)


def iv_sum(values, prec: int = DEFAULT_PRECISION) -> DyadicInterval:
    total = DyadicInterval(fzero, fzero, prec)
    for value in values:
        total = iv_add(total, value)
    return total


def iv_dot(row, vector) -> DyadicInterval:
    """兩個區間向量的內積。"""
    total = None
    for a, b in zip(row, vector, strict=True):
        term = iv_mul(a, b)
        total = term if total is None else iv_add(total, term)
    if total is None:
        return ZERO
    return total


def power_of_two(exponent: int) -> Mpf:
    return from_man_exp(1, exponent)


@dataclass(frozen=True)
class ComplexInterval:
    """矩形複數區間 re + i·im，供頻譜模組的根包圍與輻角計數使用。"""

    re: DyadicInterval
    im: DyadicInterval

    @classmethod
    def real(cls, x: DyadicInterval) -> "ComplexInterval":
        return cls(x, DyadicInterval(fzero, fzero, x.prec))

    @classmethod
    def exact(cls, re: Mpf, im: Mpf, prec: int = DEFAULT_PRECISION) -> "ComplexInterval":
        return cls(DyadicInterval.exact(re, prec), DyadicInterval.exact(im, prec))

    def __add__(self, other: "ComplexInterval") -> "ComplexInterval":
        return ComplexInterval(iv_add(self.re, other.re), iv_add(self.im, other.im))

    def __sub__(self, other: "ComplexInterval") -> "ComplexInterval":
        return ComplexInterval(iv_sub(self.re, other.re), iv_sub(self.im, other.im))

    def __mul__(self, other: "ComplexInterval") -> "ComplexInterval":
        re = iv_sub(iv_mul(self.re, other.re), iv_mul(self.im, other.im))
        im = iv_add(iv_mul(self.re, other.im), iv_mul(self.im, other.re))
        return ComplexInterval(re, im)

    def excludes_zero(self) -> bool:
        return self.re.excludes_zero() or self.im.excludes_zero()

    def mag(self) -> Mpf:
        """|z| 在整個矩形上的上界。"""
        prec = max(self.re.prec, self.im.prec)
        re_mag, im_mag = self.re.mag(), self.im.mag()
        square = mpf_add(
            mpf_mul(re_mag, re_mag, prec, round_ceiling),
            mpf_mul(im_mag, im_mag, prec, round_ceiling),
            prec,
            round_ceiling,
        )
        return mpf_sqrt(square, prec, round_ceiling)

    def mig(self) -> Mpf:
        """|z| 在整個矩形上的下界。"""
        prec = max(self.re.prec, self.im.prec)
        re_mig, im_mig = self.re.mig(), self.im.mig()
        square = mpf_add(
            mpf_mul(re_mig, re_mig, prec, round_floor),
            mpf_mul(im_mig, im_mig, prec, round_floor),
            prec,
            round_floor,
        )
        return mpf_sqrt(square, prec, round_floor)

    def widen(self, amount: Mpf) -> "ComplexInterval":
        return ComplexInterval(self.re.widen(amount), self.im.widen(amount))
