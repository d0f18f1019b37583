# src/linloop/oracle/simulator.py
"""
以精確有理數模擬迴圈軌跡。

模擬器不做任何捨入；為了避免數值爆炸，分子或分母超過 max_bits 位元時以 BitSizeExceeded 中止。
"""

# 1. 標準庫導入
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction

# 2. 第三方庫導入
# (無)

# 3. 本專案導入
from linloop.errors import PreconditionError
from linloop.models.instance import RationalRows, in_closed_polyhedron, in_open_polyhedron

DEFAULT_MAX_BITS = 1_000_000

Vector = list[Fraction]


@dataclass(frozen=True)
class EscapedAt:
    """第 k 步 (1 ≤ k) 首次離開開多面體。"""

    k: int

    def describe(self) -> str:
        return f"escaped_at {self.k}"


@dataclass(frozen=True)
class StillInsideAfter:
    kmax: int

    def describe(self) -> str:
        return f"still_inside_after {self.kmax}"


@dataclass(frozen=True)
class BitSizeExceeded:
    """第 k 步的軌跡點位元長度超過上限，模擬中止。"""

    k: int

    def describe(self) -> str:
        return f"bit_size_exceeded {self.k}"


@dataclass(frozen=True)
class StaysInside:
    """軌跡在 steps 步內都留在閉多面體中。"""

    steps: int


@dataclass(frozen=True)
class LeftAt:
    k: int


EscapeResult = EscapedAt | StillInsideAfter | BitSizeExceeded
ClosedResult = StaysInside | LeftAt | BitSizeExceeded


def bit_size(x: Sequence[Fraction]) -> int:
    return max((max(v.numerator.bit_length(), v.denominator.bit_length()) for v in x), default=0)


def _linear_step(A: RationalRows) -> Callable[[Vector], Vector]:
    def step(x: Vector) -> Vector:
        return [sum((row[i] * x[i] for i in range(len(x))), Fraction(0)) for row in A]

    return step


def _affine_step(A: RationalRows, b: Sequence[Fraction]) -> Callable[[Vector], Vector]:
    linear = _linear_step(A)

    def step(x: Vector) -> Vector:
        return [v + s for v, s in zip(linear(x), b, strict=True)]

    return step


def _run_until_escape(
    step: Callable[[Vector], Vector], inside: Callable[[Vector], bool], x: Vector, kmax: int, max_bits: int
) -> EscapeResult:
    if kmax < 1:
        raise PreconditionError(f"kmax 必須 ≥ 1，實際為 {kmax}")
    if not inside(x):
        raise PreconditionError("起始點不在開多面體內")
    for k in range(1, kmax + 1):
        x = step(x)
        if not inside(x):
            return EscapedAt(k)
        if bit_size(x) > max_bits:
            return BitSizeExceeded(k)
    return StillInsideAfter(kmax)


def simulate_escape(
    A: RationalRows, B: RationalRows, x: Sequence[Fraction], kmax: int, max_bits: int = DEFAULT_MAX_BITS
) -> EscapeResult:
    """
    迭代 x ← Ax，回傳第一個滿足 A^k x ∉ P(B) 的 k，或 StillInsideAfter(kmax)。

    Raises:
        PreconditionError: x 不嚴格位於 P(B) 內。
    """
    x = [Fraction(v) for v in x]
    return _run_until_escape(_linear_step(A), lambda y: in_open_polyhedron(B, None, y), x, kmax, max_bits)


def simulate_escape_affine(
    A: RationalRows,
    b: Sequence[Fraction],
    B: RationalRows,
    eta: Sequence[Fraction],
    x: Sequence[Fraction],
    kmax: int,
    max_bits: int = DEFAULT_MAX_BITS,
) -> EscapeResult:
    """仿射版本: 迭代 x ← Ax + b，多面體為 P(B, η) = {Bx ≻ η}。"""
    x = [Fraction(v) for v in x]
    return _run_until_escape(_affine_step(A, b), lambda y: in_open_polyhedron(B, eta, y), x, kmax, max_bits)


def simulate_stays_closed(
    A: RationalRows,
    B: RationalRows,
    x: Sequence[Fraction],
    steps: int,
    b: Sequence[Fraction] | None = None,
    eta: Sequence[Fraction] | None = None,
    max_bits: int = DEFAULT_MAX_BITS,
) -> ClosedResult:
    """
    檢查軌跡在 steps 步內是否留在閉多面體 {Bx ⪰ η} 中 (線性實例 η = 0)。

    Raises:
        PreconditionError: 起始點不在閉多面體內。
    """
    step = _linear_step(A) if b is None else _affine_step(A, b)
    x = [Fraction(v) for v in x]
    if not in_closed_polyhedron(B, eta, x):
        raise PreconditionError("起始點不在閉多面體內")
    for k in range(1, steps + 1):
        x = step(x)
        if not in_closed_polyhedron(B, eta, x):
            return LeftAt(k)
        if bit_size(x) > max_bits:
            return BitSizeExceeded(k)
    return StaysInside(steps)
