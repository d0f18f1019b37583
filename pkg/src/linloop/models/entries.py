# src/linloop/models/entries.py
"""
矩陣項目的資料來源。

每個項目都能在任意精度 p 回應一個寬度 ≤ 2^(-p)、包含真實值、且對 p 巢狀收縮的二進位區間。
字面區間項目是例外: 它代表物理上的不確定資料，寬度固定，超過精度時以 `capped(p)` 標示。
"""

# 1. 標準庫導入
from abc import ABC, abstractmethod
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction

# 2. 第三方庫導入
# (無)

# 3. 本專案導入
from linloop.errors import OracleError
from linloop.numerics.dyadic import DEFAULT_PRECISION, DyadicInterval, iv_neg


def working_precision(p: int) -> int:
    return max(p, DEFAULT_PRECISION)


def format_fraction(value: Fraction) -> str:
    """以 "p/q" (整數時為 "p") 表示有理數。"""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def is_dyadic(value: Fraction) -> bool:
    return value.denominator & (value.denominator - 1) == 0


class EntrySource(ABC):
    """單一實數項目的精化來源。"""

    @abstractmethod
    def refine(self, p: int) -> DyadicInterval:
        """回傳精度 p 的包圍區間。"""

    def capped(self, p: int) -> bool:
        """此項目在精度 p 無法達到 2^(-p) 的寬度要求。"""
        return False

    @property
    def exact(self) -> Fraction | None:
        """有理數項目的精確值；其他來源為 None。"""
        return None

    @abstractmethod
    def negated(self) -> "EntrySource":
        """代表 −x 的來源。"""

    @abstractmethod
    def to_text(self) -> str:
        """實例檔案中的項目字串。"""


@dataclass(frozen=True)
class RationalEntry(EntrySource):
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))

    def refine(self, p: int) -> DyadicInterval:
        if is_dyadic(self.value):
            return DyadicInterval.point(self.value, working_precision(p))
        return DyadicInterval.enclose_fixed(self.value, self.value, p + 1, working_precision(p))

    @property
    def exact(self) -> Fraction:
        return self.value

    def negated(self) -> "RationalEntry":
        return RationalEntry(-self.value)

    def to_text(self) -> str:
        return format_fraction(self.value)


@dataclass(frozen=True)
class IntervalEntry(EntrySource):
    """字面區間 [lo, hi]；精化時原樣回傳 (向外捨入到二進位格點)。"""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"區間項目端點順序錯誤: [{self.lo}, {self.hi}]")

    def refine(self, p: int) -> DyadicInterval:
        if is_dyadic(self.lo) and is_dyadic(self.hi):
            return DyadicInterval.from_fractions(self.lo, self.hi, working_precision(p))
        return DyadicInterval.enclose_fixed(self.lo, self.hi, p + 1, working_precision(p))

    def capped(self, p: int) -> bool:
        return self.hi - self.lo > Fraction(1, 2**p)

    def negated(self) -> "IntervalEntry":
        return IntervalEntry(-self.hi, -self.lo)

    def to_text(self) -> str:
        return f"[{format_fraction(self.lo)},{format_fraction(self.hi)}]"


@dataclass(frozen=True)
class OracleEntry(EntrySource):
    """
    以純函式 p -> (lo, hi) 提供的實數 (例如 √2、π)，僅能透過 Python API 建立。

    函式在精度 p 必須回傳寬度 ≤ 2^(-p) 的有理數區間。
    """

    oracle: Callable[[int], tuple[Fraction, Fraction]]
    label: str = "oracle"

    def _query(self, p: int) -> tuple[Fraction, Fraction]:
        try:
            lo, hi = self.oracle(p)
            lo, hi = Fraction(lo), Fraction(hi)
        except Exception as e:
            raise OracleError(f"預言機 '{self.label}' 在精度 {p} 無法回應: {e}") from e
        if lo > hi or hi - lo > Fraction(1, 2**p):
            raise OracleError(f"預言機 '{self.label}' 在精度 {p} 回傳了不合格的區間 [{lo}, {hi}]")
        return lo, hi

    def refine(self, p: int) -> DyadicInterval:
        lo, hi = self._query(p + 1)
        return DyadicInterval.enclose_fixed(lo, hi, p + 2, working_precision(p))

    def negated(self) -> "NegatedEntry":
        return NegatedEntry(self)

    def to_text(self) -> str:
        raise OracleError(f"預言機項目 '{self.label}' 無法寫入實例檔案")


@dataclass(frozen=True)
class NegatedEntry(EntrySource):
    inner: EntrySource

    def refine(self, p: int) -> DyadicInterval:
        return iv_neg(self.inner.refine(p))

    def capped(self, p: int) -> bool:
        return self.inner.capped(p)

    @property
    def exact(self) -> Fraction | None:
        value = self.inner.exact
        return None if value is None else -value

    def negated(self) -> EntrySource:
        return self.inner

    def to_text(self) -> str:
        return self.inner.negated().to_text() if not isinstance(self.inner, OracleEntry) else self.inner.to_text()


def as_entry(value: "EntrySource | int | Fraction") -> EntrySource:
    """將數值或既有來源統一轉為 EntrySource。"""
    if isinstance(value, EntrySource):
        return value
    if isinstance(value, int | Fraction):
        return RationalEntry(Fraction(value))
    raise TypeError(f"不支援的項目型別: {type(value).__name__}")
