# src/linloop/numerics/matrix.py
"""
區間矩陣、區間向量運算與區間高斯消去。
"""

# 1. 標準庫導入
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

# 2. 第三方庫導入
from mpmath.libmp import mpf_cmp

# 3. 本專案導入
from linloop.errors import DimensionMismatchError, SingularAtThisPrecision
from linloop.numerics.dyadic import (
    DEFAULT_PRECISION,
    DyadicInterval,
    iv_add,
    iv_div,
    iv_dot,
    iv_mul,
    iv_sub,
)

IntervalVector = tuple[DyadicInterval, ...]


@dataclass(frozen=True)
class IntervalMatrix:
    """以列優先順序儲存的 rows × cols 區間矩陣。"""

    rows: int
    cols: int
    entries: tuple[DyadicInterval, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0 or len(self.entries) != self.rows * self.cols:
            raise DimensionMismatchError(
                f"項目數 {len(self.entries)} 與形狀 {self.rows}×{self.cols} 不符"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[DyadicInterval]]) -> "IntervalMatrix":
        if not rows:
            return cls(0, 0, ())
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise DimensionMismatchError("各列長度不一致")
        return cls(len(rows), width, tuple(x for row in rows for x in row))

    @classmethod
    def from_rationals(
        cls, rows: Sequence[Sequence[int | Fraction]], prec: int = DEFAULT_PRECISION
    ) -> "IntervalMatrix":
        """由有理數矩陣建立最窄的包圍區間矩陣。"""
        return cls.from_rows([[DyadicInterval.point(x, prec) for x in row] for row in rows])

    @classmethod
    def identity(cls, n: int, prec: int = DEFAULT_PRECISION) -> "IntervalMatrix":
        return cls.from_rationals([[1 if i == j else 0 for j in range(n)] for i in range(n)], prec)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def prec(self) -> int:
        return max((x.prec for x in self.entries), default=DEFAULT_PRECISION)

    def __getitem__(self, index: tuple[int, int]) -> DyadicInterval:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> IntervalVector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> IntervalVector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def row_list(self) -> list[IntervalVector]:
        return [self.row(i) for i in range(self.rows)]

    def trace(self) -> DyadicInterval:
        if not self.is_square:
            raise DimensionMismatchError(f"非方陣 {self.rows}×{self.cols} 沒有跡")
        diagonal = [self[i, i] for i in range(self.rows)]
        total = diagonal[0]
        for x in diagonal[1:]:
            total = iv_add(total, x)
        return total

    def sub_identity(self, c: int | Fraction | DyadicInterval = 1) -> "IntervalMatrix":
        """回傳 A − cI。"""
        if not self.is_square:
            raise DimensionMismatchError(f"非方陣 {self.rows}×{self.cols} 無法減去單位矩陣")
        shift = c if isinstance(c, DyadicInterval) else DyadicInterval.point(c, self.prec)
        entries = list(self.entries)
        for i in range(self.rows):
            entries[i * self.cols + i] = iv_sub(entries[i * self.cols + i], shift)
        return IntervalMatrix(self.rows, self.cols, tuple(entries))

    def add_scaled_identity(self, c: DyadicInterval) -> "IntervalMatrix":
        """回傳 A + cI。"""
        entries = list(self.entries)
        for i in range(self.rows):
            entries[i * self.cols + i] = iv_add(entries[i * self.cols + i], c)
        return IntervalMatrix(self.rows, self.cols, tuple(entries))

    def contains_rationals(self, rows: Sequence[Sequence[int | Fraction]]) -> bool:
        """每個有理數項目都落在對應的區間內。"""
        return all(self[i, j].contains(x) for i, row in enumerate(rows) for j, x in enumerate(row))

    def __matmul__(self, other: "IntervalMatrix") -> "IntervalMatrix":
        return mat_mul(self, other)

    def __str__(self):
        return "\n".join("[" + ", ".join(str(x) for x in self.row(i)) + "]" for i in range(self.rows))


def vector_from_rationals(values: Sequence[int | Fraction], prec: int = DEFAULT_PRECISION) -> IntervalVector:
    return tuple(DyadicInterval.point(x, prec) for x in values)


def mat_mul(x: IntervalMatrix, y: IntervalMatrix) -> IntervalMatrix:
    """區間矩陣乘積；每個項目都包含精確乘積的對應項目。"""
    if x.cols != y.rows:
        raise DimensionMismatchError(f"無法相乘: {x.rows}×{x.cols} 與 {y.rows}×{y.cols}")
    columns = [y.column(j) for j in range(y.cols)]
    entries = tuple(iv_dot(x.row(i), columns[j]) for i in range(x.rows) for j in range(y.cols))
    return IntervalMatrix(x.rows, y.cols, entries)


def mat_vec(x: IntervalMatrix, v: Sequence[DyadicInterval]) -> IntervalVector:
    if x.cols != len(v):
        raise DimensionMismatchError(f"無法相乘: {x.rows}×{x.cols} 與長度 {len(v)} 的向量")
    return tuple(iv_dot(x.row(i), v) for i in range(x.rows))


def dot(u: Sequence[DyadicInterval], v: Sequence[DyadicInterval]) -> DyadicInterval:
    if len(u) != len(v):
        raise DimensionMismatchError(f"向量長度不符: {len(u)} 與 {len(v)}")
    return iv_dot(u, v)


def _pivot_key(x: DyadicInterval):
    """主元排序鍵: |entry| 的下界。"""
    return x.mig()


def interval_solve(m: IntervalMatrix, rhs: Sequence[DyadicInterval]) -> IntervalVector:
    """
    以部分主元高斯消去求解 M x = rhs 的區間包圍。

    主元選擇 |entry| 下界最大者，同值時取列索引最小者；
    主元區間包含 0 時拋出 SingularAtThisPrecision。
    """
    n = m.rows
    if not m.is_square:
        raise DimensionMismatchError(f"係數矩陣必須是方陣，實際為 {m.rows}×{m.cols}")
    if len(rhs) != n:
        raise DimensionMismatchError(f"右側向量長度 {len(rhs)} 與矩陣大小 {n} 不符")

    work = [list(m.row(i)) + [rhs[i]] for i in range(n)]

    for col in range(n):
        best = col
        for candidate in range(col + 1, n):
            if mpf_cmp(_pivot_key(work[candidate][col]), _pivot_key(work[best][col])) > 0:
                best = candidate
        pivot = work[best][col]
        if pivot.contains_zero():
            raise SingularAtThisPrecision(f"第 {col} 行的主元區間 {pivot} 包含 0")
        if best != col:
            work[col], work[best] = work[best], work[col]

        for r in range(col + 1, n):
            factor = iv_div(work[r][col], pivot)
            for c in range(col + 1, n + 1):
                work[r][c] = iv_sub(work[r][c], iv_mul(factor, work[col][c]))

    solution: list[DyadicInterval | None] = [None] * n
    for r in range(n - 1, -1, -1):
        acc = work[r][n]
        for c in range(r + 1, n):
            acc = iv_sub(acc, iv_mul(work[r][c], solution[c]))
        solution[r] = iv_div(acc, work[r][r])
    return tuple(solution)
