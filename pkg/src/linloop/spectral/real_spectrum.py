# src/linloop/spectral/real_spectrum.py
"""
實頻譜的線段覆蓋、奇重數實特徵值的變號見證，以及「某值不在頻譜中」的驗證。
"""

# 1. 標準庫導入
import enum
import math
from dataclasses import dataclass
from fractions import Fraction

# 2. 第三方庫導入
from mpmath.libmp import mpf_cmp, round_floor

# 3. 本專案導入
from linloop.numerics.charpoly import IntervalPoly, char_poly, horner
from linloop.numerics.dyadic import (
    DyadicInterval,
    Mpf,
    fraction_to_mpf,
    mpf_max,
    mpf_to_fraction,
    power_of_two,
)
from linloop.numerics.matrix import IntervalMatrix
from linloop.spectral.root_enclosures import ComplexDisk, RootIsolationSettings, root_enclosures


class Verification(enum.Enum):
    VERIFIED = "verified"
    NOT_VERIFIED = "not_verified"

    def __bool__(self) -> bool:
        return self is Verification.VERIFIED


@dataclass(frozen=True)
class RealSegment:
    """實軸上的閉線段 [lo, hi]，端點為二進位數。"""

    lo: Mpf
    hi: Mpf

    def __post_init__(self):
        if mpf_cmp(self.lo, self.hi) > 0:
            raise ValueError("線段端點順序錯誤")

    @classmethod
    def from_fractions(cls, lo: Fraction, hi: Fraction, prec: int = 53) -> "RealSegment":
        interval = DyadicInterval.from_fractions(lo, hi, prec)
        return cls(interval.lo, interval.hi)

    def as_interval(self, prec: int) -> DyadicInterval:
        return DyadicInterval(self.lo, self.hi, prec)

    def as_fractions(self) -> tuple[Fraction, Fraction]:
        return mpf_to_fraction(self.lo), mpf_to_fraction(self.hi)

    def contains(self, value: Fraction) -> bool:
        lo, hi = self.as_fractions()
        return lo <= value <= hi

    def __str__(self):
        lo, hi = self.as_fractions()
        return f"[{float(lo):.9g}, {float(hi):.9g}]"


@dataclass(frozen=True)
class SignChange:
    """χ 在 a、b 兩點的區間值；兩者嚴格異號時即見證 (a, b) 內有奇重數實根。"""

    a: Fraction
    b: Fraction
    value_a: DyadicInterval
    value_b: DyadicInterval

    @property
    def status(self) -> Verification:
        opposite = (self.value_a.is_negative() and self.value_b.is_positive()) or (
            self.value_a.is_positive() and self.value_b.is_negative()
        )
        return Verification.VERIFIED if opposite else Verification.NOT_VERIFIED

    @property
    def verified(self) -> bool:
        return self.status is Verification.VERIFIED


def spectrum_disks(a: IntervalMatrix, precision: int, settings: RootIsolationSettings) -> tuple[ComplexDisk, ...]:
    return root_enclosures(char_poly(a), precision, settings)


def real_spectrum_above(
    a: IntervalMatrix,
    r: int | Fraction,
    precision: int,
    settings: RootIsolationSettings = RootIsolationSettings(),
) -> list[RealSegment]:
    """
    回傳覆蓋 A 族中每個矩陣所有 ≥ r 實特徵值的線段。

    每個與實軸相交的圓盤取其實軸投影，兩端再外擴 2^(-p)，最後截在 r 之上。
    """
    threshold = fraction_to_mpf(r, precision, round_floor)
    margin = power_of_two(-precision)
    segments = []
    for disk in spectrum_disks(a, precision, settings):
        if not disk.meets_real_axis():
            continue
        shadow = disk.center_re.widen(disk.radius).widen(margin)
        if mpf_cmp(shadow.hi, threshold) < 0:
            continue
        segments.append(RealSegment(mpf_max(shadow.lo, threshold), shadow.hi))
    segments.sort(key=lambda s: s.as_fractions())
    return segments


def odd_root_witness(poly: IntervalPoly, a: Fraction, b: Fraction) -> SignChange:
    """
    在二進位點 a < b 上以區間求值 χ，兩值嚴格異號時回傳的紀錄為 VERIFIED。

    NOT_VERIFIED 只代表無法判定，並非反證。
    """
    if a >= b:
        raise ValueError(f"需要 a < b，實際為 a={a}, b={b}")
    prec = max(c.prec for c in poly)
    value_a = horner(poly, DyadicInterval.point(a, prec))
    value_b = horner(poly, DyadicInterval.point(b, prec))
    return SignChange(Fraction(a), Fraction(b), value_a, value_b)


def verify_value_not_in_spectrum(
    a: IntervalMatrix,
    c: int | Fraction,
    precision: int,
    settings: RootIsolationSettings = RootIsolationSettings(),
) -> Verification:
    """每個特徵值圓盤都嚴格排除 c 時回傳 VERIFIED。"""
    c = Fraction(c)
    for disk in spectrum_disks(a, precision, settings):
        c_re, c_im = disk.center_fraction
        if (c_re - c) ** 2 + c_im**2 <= disk.radius_fraction**2:
            return Verification.NOT_VERIFIED
    return Verification.VERIFIED


def odd_root_candidates(
    segments: list[RealSegment], r: int | Fraction, grid_exponent: int
) -> list[tuple[Fraction, Fraction]]:
    """
    依 d = 0..grid_exponent 逐層列舉候選 (a, b)。

    a、b 為 k/2^d 格點上嚴格位於線段外側的最近點，要求 a > r 且 |a|, |b| ≤ 2^grid_exponent。
    """
    r = Fraction(r)
    limit = Fraction(2**grid_exponent)
    candidates: list[tuple[Fraction, Fraction]] = []
    seen = set()
    for d in range(grid_exponent + 1):
        scale = 2**d
        for segment in segments:
            lo, hi = segment.as_fractions()
            a = Fraction(math.ceil(lo * scale) - 1, scale)
            b = Fraction(math.floor(hi * scale) + 1, scale)
            if a <= r or abs(a) > limit or abs(b) > limit:
                continue
            if (a, b) not in seen:
                seen.add((a, b))
                candidates.append((a, b))
    return candidates
