# src/linloop/models/instance.py
"""
線性 / 仿射迴圈實例、精化 (refine) 與齊次化 (homogenise)。

線性實例 (A, B):        迴圈 while Bx ≻ 0: x ← Ax
仿射實例 (A, b, B, η):  迴圈 while Bx ≻ η: x ← Ax + b
"""

# 1. 標準庫導入
import enum
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import TypeVar

# 2. 第三方庫導入
# (無)

# 3. 本專案導入
from linloop.errors import InstanceDimensionError, PreconditionError
from linloop.models.entries import EntrySource, RationalEntry, as_entry
from linloop.numerics.dyadic import DyadicInterval, iv_neg
from linloop.numerics.matrix import IntervalMatrix, IntervalVector

T = TypeVar("T")

EntryRows = tuple[tuple[EntrySource, ...], ...]
EntryVector = tuple[EntrySource, ...]
RationalRows = list[list[Fraction]]


class LoopKind(enum.Enum):
    LINEAR = "linear"
    AFFINE = "affine"


@dataclass(frozen=True)
class RationalData:
    """全有理數實例的精確資料。"""

    kind: LoopKind
    A: RationalRows
    B: RationalRows
    b: list[Fraction] | None = None
    eta: list[Fraction] | None = None


@dataclass(frozen=True)
class RefinedInstance:
    """實例在精度 p 的區間資料。capped 表示有字面區間項目寬於 2^(-p)。"""

    kind: LoopKind
    A: IntervalMatrix
    B: IntervalMatrix
    b: IntervalVector | None
    eta: IntervalVector | None
    precision: int
    capped: bool


def _entry_rows(rows: Sequence[Sequence]) -> EntryRows:
    return tuple(tuple(as_entry(x) for x in row) for row in rows)


def _entry_vector(values: Sequence) -> EntryVector:
    return tuple(as_entry(x) for x in values)


@dataclass(frozen=True)
class LoopInstance:
    """不可變的迴圈實例；建立後可安全地在工作程序之間傳遞。"""

    kind: LoopKind
    A: EntryRows
    B: EntryRows
    b: EntryVector | None = None
    eta: EntryVector | None = None

    def __post_init__(self):
        n = len(self.A)
        if n == 0:
            raise InstanceDimensionError("狀態維度 n 必須 ≥ 1")
        if any(len(row) != n for row in self.A):
            raise InstanceDimensionError(f"A 必須是 {n}×{n} 方陣")
        if len(self.B) == 0:
            raise InstanceDimensionError("約束數 m 必須 ≥ 1")
        if any(len(row) != n for row in self.B):
            raise InstanceDimensionError(f"B 的每一列都必須有 {n} 個項目")
        if self.kind is LoopKind.AFFINE:
            if self.b is None or self.eta is None:
                raise InstanceDimensionError("仿射實例必須提供 b 與 eta")
            if len(self.b) != n:
                raise InstanceDimensionError(f"b 的長度必須是 {n}，實際為 {len(self.b)}")
            if len(self.eta) != len(self.B):
                raise InstanceDimensionError(f"eta 的長度必須是 {len(self.B)}，實際為 {len(self.eta)}")
        elif self.b is not None or self.eta is not None:
            raise InstanceDimensionError("線性實例不可提供 b 或 eta")

    # --- 建構 ---

    @classmethod
    def linear(cls, A: Sequence[Sequence], B: Sequence[Sequence]) -> "LoopInstance":
        return cls(LoopKind.LINEAR, _entry_rows(A), _entry_rows(B))

    @classmethod
    def affine(
        cls, A: Sequence[Sequence], b: Sequence, B: Sequence[Sequence], eta: Sequence
    ) -> "LoopInstance":
        return cls(LoopKind.AFFINE, _entry_rows(A), _entry_rows(B), _entry_vector(b), _entry_vector(eta))

    # --- 查詢 ---

    @property
    def n(self) -> int:
        return len(self.A)

    @property
    def m(self) -> int:
        return len(self.B)

    @property
    def is_affine(self) -> bool:
        return self.kind is LoopKind.AFFINE

    def all_entries(self) -> list[EntrySource]:
        entries = [x for row in self.A for x in row] + [x for row in self.B for x in row]
        if self.is_affine:
            entries += list(self.b) + list(self.eta)
        return entries

    @property
    def is_rational(self) -> bool:
        return all(entry.exact is not None for entry in self.all_entries())

    def rational_data(self) -> RationalData:
        """回傳精確的 Fraction 資料；有非有理數項目時拋出 PreconditionError。"""
        if not self.is_rational:
            raise PreconditionError("實例含有非有理數項目，無法取得精確資料")

        def rows(source: EntryRows) -> RationalRows:
            return [[x.exact for x in row] for row in source]

        if self.is_affine:
            return RationalData(
                self.kind, rows(self.A), rows(self.B), [x.exact for x in self.b], [x.exact for x in self.eta]
            )
        return RationalData(self.kind, rows(self.A), rows(self.B))

    # --- 精化 ---

    def refine(self, p: int) -> RefinedInstance:
        """
        在精度 p 精化每一個項目。

        Raises:
            OracleError: 某個預言機項目無法回應。
        """
        if p < 0:
            raise PreconditionError(f"精度必須 ≥ 0，實際為 {p}")

        def matrix(source: EntryRows) -> IntervalMatrix:
            return IntervalMatrix.from_rows([[x.refine(p) for x in row] for row in source])

        capped = any(entry.capped(p) for entry in self.all_entries())
        b = tuple(x.refine(p) for x in self.b) if self.is_affine else None
        eta = tuple(x.refine(p) for x in self.eta) if self.is_affine else None
        return RefinedInstance(self.kind, matrix(self.A), matrix(self.B), b, eta, p, capped)


def homogenised_blocks(
    A: Sequence[Sequence[T]],
    b: Sequence[T],
    B: Sequence[Sequence[T]],
    eta: Sequence[T],
    zero: T,
    one: T,
    negate: Callable[[T], T],
) -> tuple[list[list[T]], list[list[T]]]:
    """
    依區塊版面組出 Â = [[A, b], [0, 1]] 與 B̂ = [[B, −η], [0, 1]]。

    項目型別由呼叫端決定 (EntrySource、Fraction 或區間)。
    """
    n = len(A)
    a_hat = [[*A[i], b[i]] for i in range(n)] + [[zero] * n + [one]]
    b_hat = [[*B[j], negate(eta[j])] for j in range(len(B))] + [[zero] * n + [one]]
    return a_hat, b_hat


def homogenise(inst: LoopInstance) -> LoopInstance:
    """將仿射實例嵌入高一維的線性實例；有理數項目保持精確。"""
    if not inst.is_affine:
        raise PreconditionError("只有仿射實例可以齊次化")
    a_hat, b_hat = homogenised_blocks(
        inst.A, inst.b, inst.B, inst.eta, RationalEntry(Fraction(0)), RationalEntry(Fraction(1)), lambda x: x.negated()
    )
    return LoopInstance(LoopKind.LINEAR, _entry_rows(a_hat), _entry_rows(b_hat))


def homogenise_intervals(
    A: IntervalMatrix, b: IntervalVector, B: IntervalMatrix, eta: IntervalVector
) -> tuple[IntervalMatrix, IntervalMatrix]:
    """區間層級的齊次化，回傳 (Â, B̂)。"""
    prec = A.prec
    a_hat, b_hat = homogenised_blocks(
        A.row_list(), b, B.row_list(), eta, DyadicInterval.point(0, prec), DyadicInterval.point(1, prec), iv_neg
    )
    return IntervalMatrix.from_rows(a_hat), IntervalMatrix.from_rows(b_hat)


def constraint_values(B: RationalRows, eta: Sequence[Fraction] | None, x: Sequence[Fraction]) -> list[Fraction]:
    """回傳 Bx − η (線性實例 η 為 0)。"""
    values = [sum((row[i] * x[i] for i in range(len(x))), Fraction(0)) for row in B]
    if eta is not None:
        values = [v - e for v, e in zip(values, eta, strict=True)]
    return values


def in_open_polyhedron(B: RationalRows, eta: Sequence[Fraction] | None, x: Sequence[Fraction]) -> bool:
    """x ∈ P(B, η) = {Bx ≻ η}。"""
    return all(v > 0 for v in constraint_values(B, eta, x))


def in_closed_polyhedron(B: RationalRows, eta: Sequence[Fraction] | None, x: Sequence[Fraction]) -> bool:
    """x ∈ P̄(B, η) = {Bx ⪰ η}。"""
    return all(v >= 0 for v in constraint_values(B, eta, x))
