# src/linloop/semidecision/sphere_cover.py
"""
緊緻集合上的全稱量詞驗證: 以 (特徵值線段 × 單位球面方塊) 的有限覆蓋檢查

    ∀ λ ∈ 線段, v ∈ S^{n−1}:  Av = λv  ⟹  pred(λ, v)

每個方塊若 (A − λI)v 的某個座標區間排除 0，前提即被否定；否則必須由 pred 在整個方塊上成立。
"""

# 1. 標準庫導入
import enum
import itertools
import logging
import math
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property

# 2. 第三方庫導入
from mpmath.libmp import fone, fzero, mpf_add, mpf_cmp, mpf_neg, round_ceiling

# 3. 本專案導入
from linloop.numerics.dyadic import DyadicInterval, iv_sqr, iv_sum, mpf_max, power_of_two
from linloop.numerics.matrix import IntervalMatrix, mat_vec
from linloop.spectral.real_spectrum import RealSegment


class CoverStatus(enum.Enum):
    VERIFIED = "verified"
    EXHAUSTED = "exhausted"


class PredicateValue(enum.Enum):
    """方塊上的三值判定: 全部成立、全部不成立、無法判定。"""

    HOLDS = "holds"
    FAILS = "fails"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class SphereBox:
    """n 維方塊；只有在 1 ∈ Σv_i² 時才可能與單位球面相交。"""

    coords: tuple[DyadicInterval, ...]

    @cached_property
    def norm_sq(self) -> DyadicInterval:
        return iv_sum((iv_sqr(x) for x in self.coords), self.coords[0].prec)

    def meets_sphere(self) -> bool:
        return self.norm_sq.contains(1)

    def max_width(self):
        return mpf_max(*(x.width() for x in self.coords))

    def split(self) -> list["SphereBox"]:
        """沿每個座標對分，回傳 2^n 個子方塊。"""
        halves = [x.bisect() for x in self.coords]
        return [SphereBox(tuple(choice)) for choice in itertools.product(*halves)]

    def contains(self, point: Sequence) -> bool:
        return all(x.contains(value) for x, value in zip(self.coords, point, strict=True))

    def as_fractions(self):
        return tuple(x.as_fractions() for x in self.coords)


BoxPredicate = Callable[[DyadicInterval, SphereBox], PredicateValue]


@dataclass(frozen=True)
class CoverStats:
    boxes_examined: int = 0
    max_depth: int = 0
    precision_bits: int = 0
    depth_limit: int = 0


@dataclass(frozen=True)
class BudgetedResult:
    """
    一次有預算限制的驗證結果。VERIFIED 是最終且可靠的；EXHAUSTED 可在更大預算下重試。

    witness_box / witness_lambda 為第一個使 pred 成立但前提未被否定的方塊。
    certificate 由檢查器在 VERIFIED 時填入。
    """

    status: CoverStatus
    stats: CoverStats
    witness_box: SphereBox | None = None
    witness_lambda: DyadicInterval | None = None
    certificate: object | None = None

    @property
    def verified(self) -> bool:
        return self.status is CoverStatus.VERIFIED


def initial_sphere_box(n: int, margin_exponent: int, prec: int) -> SphereBox:
    """[−1−δ, 1+δ]^n，δ = 2^(−margin_exponent)。"""
    bound = mpf_add(fone, power_of_two(-margin_exponent), prec, round_ceiling)
    side = DyadicInterval(mpf_neg(bound), bound, prec)
    return SphereBox(tuple(side for _ in range(n)))


def retained_sphere_boxes(n: int, depth: int, margin_exponent: int, prec: int) -> Iterator[SphereBox]:
    """均勻細分到指定深度後，所有可能與球面相交的方塊。"""
    level = [initial_sphere_box(n, margin_exponent, prec)]
    for _ in range(depth):
        level = [child for box in level if box.meets_sphere() for child in box.split()]
    yield from (box for box in level if box.meets_sphere())


def antecedent_refuted(a: IntervalMatrix, lam: DyadicInterval, box: SphereBox) -> bool:
    """(A − λI)v 的某個座標區間排除 0，表示方塊內沒有 λ 的特徵向量。"""
    residual = mat_vec(a.sub_identity(lam), box.coords)
    return any(r.excludes_zero() for r in residual)


def cover_verify(
    segments: Sequence[RealSegment],
    a: IntervalMatrix,
    pred: BoxPredicate,
    depth_limit: int,
    precision: int,
    margin_exponent: int = 4,
    max_boxes: int = 200000,
) -> BudgetedResult:
    """
    在每個 (線段 × 球面方塊) 上驗證蘊含式，細分深度不超過 depth_limit。

    提前回傳 EXHAUSTED 的條件:
    - 某方塊已到達 depth_limit 仍未驗證；
    - 深度 ≥ ⌈depth_limit / 2⌉ 時 pred 在未被否定的方塊上確定不成立；
    - 檢查的方塊數超過 max_boxes。
    """
    n = a.rows
    late_depth = math.ceil(depth_limit / 2)
    root = initial_sphere_box(n, margin_exponent, precision)
    stack = [(segment.as_interval(precision), root, 0) for segment in reversed(segments)]

    boxes = 0
    deepest = 0
    witness_box: SphereBox | None = None
    witness_lambda: DyadicInterval | None = None

    def result(status: CoverStatus) -> BudgetedResult:
        return BudgetedResult(
            status, CoverStats(boxes, deepest, precision, depth_limit), witness_box, witness_lambda
        )

    logging.debug(f"[cover] 開始驗證 {len(segments)} 條線段，n={n}，深度上限 {depth_limit}，精度 {precision}")

    while stack:
        lam, box, depth = stack.pop()
        boxes += 1
        deepest = max(deepest, depth)
        if boxes > max_boxes:
            logging.debug(f"[cover] 方塊數超過上限 {max_boxes}")
            return result(CoverStatus.EXHAUSTED)
        if not box.meets_sphere():
            continue
        if antecedent_refuted(a, lam, box):
            continue
        value = pred(lam, box)
        if value is PredicateValue.HOLDS:
            if witness_box is None:
                witness_box, witness_lambda = box, lam
            continue
        if depth >= depth_limit:
            logging.debug(f"[cover] 深度 {depth} 的方塊無法驗證，λ ∈ {lam}")
            return result(CoverStatus.EXHAUSTED)
        if value is PredicateValue.FAILS and depth >= late_depth:
            logging.debug(f"[cover] 深度 {depth} 的方塊上結論確定不成立，λ ∈ {lam}")
            return result(CoverStatus.EXHAUSTED)

        children = box.split()
        lambdas = list(lam.bisect()) if mpf_cmp(lam.width(), box.max_width()) > 0 else [lam]
        for child_lam in lambdas:
            for child in children:
                stack.append((child_lam, child, depth + 1))

    logging.debug(f"[cover] 驗證成功: {boxes} 個方塊，最大深度 {deepest}")
    return result(CoverStatus.VERIFIED)


def escaping_predicate(b: IntervalMatrix) -> BoxPredicate:
    """∃ j: B_j·v < 0。"""

    def pred(lam: DyadicInterval, box: SphereBox) -> PredicateValue:
        values = mat_vec(b, box.coords)
        if any(v.is_negative() for v in values):
            return PredicateValue.HOLDS
        if all(mpf_cmp(v.lo, fzero) >= 0 for v in values):
            return PredicateValue.FAILS
        return PredicateValue.UNDECIDED

    return pred


def trapped_predicate(b: IntervalMatrix) -> BoxPredicate:
    """Bv ≻ 0 或 Bv ≺ 0 (逐分量嚴格)。"""

    def pred(lam: DyadicInterval, box: SphereBox) -> PredicateValue:
        values = mat_vec(b, box.coords)
        if all(v.is_positive() for v in values) or all(v.is_negative() for v in values):
            return PredicateValue.HOLDS
        never_positive = any(mpf_cmp(v.hi, fzero) <= 0 for v in values)
        never_negative = any(mpf_cmp(v.lo, fzero) >= 0 for v in values)
        if never_positive and never_negative:
            return PredicateValue.FAILS
        return PredicateValue.UNDECIDED

    return pred
