# src/linloop/semidecision/checkers.py
"""
四個穩健性公式的半判定檢查器。

- 線性逃逸:   ∀λ ∈ σ_{≥0}(A) ∀v ∈ S^{n−1}: Av = λv ⟹ ∃j: B_j v < 0
- 線性受困:   ∃λ ∈ σ^odd_{>0}(A) ∀v ∈ S^{n−1}: Av = λv ⟹ (Bv ≻ 0 ∨ Bv ≺ 0)
- 仿射逃逸:   對齊次化後的 (Â, B̂) 以 σ_{≥1}(Â) 檢查線性逃逸公式
- 仿射受困:   (i) 1 ∉ σ(A) 且 B(A − I)^(−1) b ≺ −η；或 (ii) 以門檻 1 檢查線性受困公式

每個檢查器只會回傳 VERIFIED (可靠) 或 EXHAUSTED (本預算內無法驗證)。
"""

# 1. 標準庫導入
import dataclasses
import logging
from dataclasses import dataclass
from fractions import Fraction

# 2. 第三方庫導入
# (無)

# 3. 本專案導入
from linloop.errors import SingularAtThisPrecision
from linloop.models.instance import homogenise_intervals
from linloop.models.verdict import Certificate, Formula
from linloop.numerics.charpoly import char_poly
from linloop.numerics.dyadic import iv_add
from linloop.numerics.matrix import IntervalMatrix, IntervalVector, dot, interval_solve
from linloop.semidecision.budget import BudgetSchedule
from linloop.semidecision.sphere_cover import (
    BudgetedResult,
    CoverStats,
    CoverStatus,
    cover_verify,
    escaping_predicate,
    trapped_predicate,
)
from linloop.spectral.real_spectrum import (
    RealSegment,
    SignChange,
    odd_root_candidates,
    odd_root_witness,
    real_spectrum_above,
    verify_value_not_in_spectrum,
)


@dataclass(frozen=True)
class FixedPointCheck:
    """不動點子句的驗證結果。"""

    verified: bool
    solve_enclosure: IntervalVector | None = None
    constraint_margins: IntervalVector | None = None


def _exhausted(stats: CoverStats) -> BudgetedResult:
    return BudgetedResult(CoverStatus.EXHAUSTED, stats)


def _merge_stats(total: CoverStats, part: CoverStats) -> CoverStats:
    return CoverStats(
        total.boxes_examined + part.boxes_examined,
        max(total.max_depth, part.max_depth),
        part.precision_bits,
        part.depth_limit,
    )


# --- 單次嘗試 (亦供證書重播使用) ---


def verify_escaping_cover(
    a: IntervalMatrix,
    b: IntervalMatrix,
    threshold: int,
    depth_limit: int,
    precision: int,
    schedule: BudgetSchedule,
) -> tuple[list[RealSegment], BudgetedResult]:
    segments = real_spectrum_above(a, threshold, precision, schedule.root_isolation)
    result = cover_verify(
        segments,
        a,
        escaping_predicate(b),
        depth_limit,
        precision,
        schedule.sphere_margin_exponent,
        schedule.max_boxes,
    )
    return segments, result


def verify_eigen_clause(
    a: IntervalMatrix,
    b: IntervalMatrix,
    lo: Fraction,
    hi: Fraction,
    depth_limit: int,
    precision: int,
    schedule: BudgetSchedule,
) -> tuple[SignChange, BudgetedResult | None]:
    """
    在候選 (lo, hi) 上驗證: χ 在兩端嚴格異號，且 [lo, hi] 內每個特徵值的單位特徵向量都滿足 Bv ≻ 0 ∨ Bv ≺ 0。

    變號不成立時第二個回傳值為 None (不做覆蓋驗證)。
    """
    sign_change = odd_root_witness(char_poly(a), lo, hi)
    if not sign_change.verified:
        return sign_change, None
    segment = RealSegment.from_fractions(lo, hi, precision)
    result = cover_verify(
        [segment],
        a,
        trapped_predicate(b),
        depth_limit,
        precision,
        schedule.sphere_margin_exponent,
        schedule.max_boxes,
    )
    return sign_change, result


def verify_fixed_point_clause(
    a: IntervalMatrix,
    shift: IntervalVector,
    b: IntervalMatrix,
    eta: IntervalVector,
    precision: int,
    schedule: BudgetSchedule,
) -> FixedPointCheck:
    """1 ∉ σ(A)，s = (A − I)^(−1) shift，且每個 B_j·s + η_j 都嚴格小於 0。"""
    if not verify_value_not_in_spectrum(a, 1, precision, schedule.root_isolation):
        logging.debug("不動點子句: 無法驗證 1 不在頻譜中")
        return FixedPointCheck(False)
    try:
        solution = interval_solve(a.sub_identity(1), shift)
    except SingularAtThisPrecision as e:
        logging.debug(f"不動點子句: {e}")
        return FixedPointCheck(False)
    margins = tuple(iv_add(dot(b.row(j), solution), eta[j]) for j in range(b.rows))
    return FixedPointCheck(all(m.is_negative() for m in margins), solution, margins)


# --- 證書組裝 ---


def _segment_bounds(segments: list[RealSegment]):
    return tuple(s.as_fractions() for s in segments)


def _cover_certificate(
    formula: Formula, budget: int, segments: list[RealSegment], result: BudgetedResult
) -> Certificate:
    stats = result.stats
    return Certificate(
        formula=formula,
        budget=budget,
        precision_bits=stats.precision_bits,
        depth_limit=stats.depth_limit,
        box_count=stats.boxes_examined,
        max_depth=stats.max_depth,
        segments=_segment_bounds(segments),
    )


def _eigen_certificate(
    formula: Formula, budget: int, sign_change: SignChange, result: BudgetedResult
) -> Certificate:
    stats = result.stats
    return Certificate(
        formula=formula,
        budget=budget,
        precision_bits=stats.precision_bits,
        depth_limit=stats.depth_limit,
        box_count=stats.boxes_examined,
        max_depth=stats.max_depth,
        segments=((sign_change.a, sign_change.b),),
        sign_change=(sign_change.a, sign_change.b),
        sign_values=(sign_change.value_a.as_fractions(), sign_change.value_b.as_fractions()),
        witness_box=None if result.witness_box is None else result.witness_box.as_fractions(),
        witness_lambda=None if result.witness_lambda is None else result.witness_lambda.as_fractions(),
    )


# --- 檢查器 ---


def _escaping(
    formula: Formula, a: IntervalMatrix, b: IntervalMatrix, threshold: int, budget: int, schedule: BudgetSchedule
) -> BudgetedResult:
    precision = schedule.precision(budget)
    segments, result = verify_escaping_cover(a, b, threshold, schedule.depth(budget), precision, schedule)
    logging.debug(f"{formula.value} (β={budget}): {result.status.value}，{len(segments)} 條線段")
    if not result.verified:
        return result
    return dataclasses.replace(result, certificate=_cover_certificate(formula, budget, segments, result))


def _eigen_trapped(
    formula: Formula, a: IntervalMatrix, b: IntervalMatrix, threshold: int, budget: int, schedule: BudgetSchedule
) -> BudgetedResult:
    precision = schedule.precision(budget)
    depth_limit = schedule.depth(budget)
    segments = real_spectrum_above(a, threshold, precision, schedule.root_isolation)
    candidates = odd_root_candidates(segments, threshold, schedule.grid_exponent(budget))
    stats = CoverStats(0, 0, precision, depth_limit)
    for lo, hi in candidates:
        sign_change, result = verify_eigen_clause(a, b, lo, hi, depth_limit, precision, schedule)
        if result is None:
            continue
        stats = _merge_stats(stats, result.stats)
        if result.verified:
            logging.debug(f"{formula.value} (β={budget}): 於 ({lo}, {hi}) 驗證成功")
            certified = dataclasses.replace(result, stats=stats)
            certificate = _eigen_certificate(formula, budget, sign_change, certified)
            return dataclasses.replace(certified, certificate=certificate)
    logging.debug(f"{formula.value} (β={budget}): 嘗試 {len(candidates)} 組候選端點皆未成功")
    return _exhausted(stats)


def check_robust_escaping_linear(
    a: IntervalMatrix, b: IntervalMatrix, budget: int, schedule: BudgetSchedule = BudgetSchedule()
) -> BudgetedResult:
    return _escaping(Formula.LINEAR_ESCAPING, a, b, 0, budget, schedule)


def check_robust_trapped_linear(
    a: IntervalMatrix, b: IntervalMatrix, budget: int, schedule: BudgetSchedule = BudgetSchedule()
) -> BudgetedResult:
    return _eigen_trapped(Formula.LINEAR_TRAPPED, a, b, 0, budget, schedule)


def check_robust_escaping_affine(
    a: IntervalMatrix,
    shift: IntervalVector,
    b: IntervalMatrix,
    eta: IntervalVector,
    budget: int,
    schedule: BudgetSchedule = BudgetSchedule(),
) -> BudgetedResult:
    a_hat, b_hat = homogenise_intervals(a, shift, b, eta)
    return _escaping(Formula.AFFINE_ESCAPING, a_hat, b_hat, 1, budget, schedule)


def check_robust_trapped_affine(
    a: IntervalMatrix,
    shift: IntervalVector,
    b: IntervalMatrix,
    eta: IntervalVector,
    budget: int,
    schedule: BudgetSchedule = BudgetSchedule(),
) -> BudgetedResult:
    precision = schedule.precision(budget)
    fixed_point = verify_fixed_point_clause(a, shift, b, eta, precision, schedule)
    if fixed_point.verified:
        logging.debug(f"affine_trapped (β={budget}): 不動點子句驗證成功")
        stats = CoverStats(0, 0, precision, schedule.depth(budget))
        certificate = Certificate(
            formula=Formula.AFFINE_TRAPPED_FIXED_POINT,
            budget=budget,
            precision_bits=precision,
            depth_limit=stats.depth_limit,
            solve_enclosure=tuple(x.as_fractions() for x in fixed_point.solve_enclosure),
            fixed_point_enclosure=tuple((-x.hi_fraction, -x.lo_fraction) for x in fixed_point.solve_enclosure),
            constraint_margins=tuple(x.as_fractions() for x in fixed_point.constraint_margins),
        )
        return BudgetedResult(CoverStatus.VERIFIED, stats, certificate=certificate)
    return _eigen_trapped(Formula.AFFINE_TRAPPED_EIGEN, a, b, 1, budget, schedule)
