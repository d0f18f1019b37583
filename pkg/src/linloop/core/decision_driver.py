# src/linloop/core/decision_driver.py
"""
以遞增預算交錯執行逃逸與受困兩個半判定器，產生判定結果與證書。

對穩健實例，存在有限的預算使程序停止；邊界實例則永遠回傳 Unknown。
"""

# 1. 標準庫導入
import logging

# 2. 第三方庫導入
# (無)

# 3. 本專案導入
from linloop.errors import PreconditionError, UnsoundnessError
from linloop.models.instance import LoopInstance, RefinedInstance, homogenise_intervals
from linloop.models.verdict import Certificate, DecisionStats, Formula, Outcome, Verdict
from linloop.semidecision.budget import BudgetSchedule
from linloop.semidecision.checkers import (
    check_robust_escaping_affine,
    check_robust_escaping_linear,
    check_robust_trapped_affine,
    check_robust_trapped_linear,
    verify_eigen_clause,
    verify_escaping_cover,
    verify_fixed_point_clause,
)
from linloop.semidecision.sphere_cover import BudgetedResult


def _run_escaping(refined: RefinedInstance, budget: int, schedule: BudgetSchedule) -> BudgetedResult:
    if refined.b is None:
        return check_robust_escaping_linear(refined.A, refined.B, budget, schedule)
    return check_robust_escaping_affine(refined.A, refined.b, refined.B, refined.eta, budget, schedule)


def _run_trapped(refined: RefinedInstance, budget: int, schedule: BudgetSchedule) -> BudgetedResult:
    if refined.b is None:
        return check_robust_trapped_linear(refined.A, refined.B, budget, schedule)
    return check_robust_trapped_affine(refined.A, refined.b, refined.B, refined.eta, budget, schedule)


def decide(
    inst: LoopInstance,
    max_budget: int = 8,
    schedule: BudgetSchedule | None = None,
    cross_check: bool = True,
) -> Verdict:
    """
    對 β = 0..max_budget 依序精化實例並執行兩個檢查器，第一個 VERIFIED 即回傳。

    cross_check 為 True 時每回合都執行兩個檢查器；兩者同時驗證成功代表內部錯誤。

    Raises:
        OracleError: 精化預言機無法回應。
        UnsoundnessError: 同一回合兩個檢查器都驗證成功。
    """
    if max_budget < 0:
        raise PreconditionError(f"max_budget 必須 ≥ 0，實際為 {max_budget}")
    schedule = schedule or BudgetSchedule()

    boxes = 0
    deepest = 0
    capped = False
    precision = schedule.precision(0)

    for budget in range(max_budget + 1):
        precision = schedule.precision(budget)
        refined = inst.refine(precision)
        capped = capped or refined.capped
        logging.info(f"預算回合 β={budget}: 精度 {precision} 位元，細分深度 {schedule.depth(budget)}")

        escaping = _run_escaping(refined, budget, schedule)
        boxes += escaping.stats.boxes_examined
        deepest = max(deepest, escaping.stats.max_depth)

        trapped = None
        if cross_check or not escaping.verified:
            trapped = _run_trapped(refined, budget, schedule)
            boxes += trapped.stats.boxes_examined
            deepest = max(deepest, trapped.stats.max_depth)

        if escaping.verified and trapped is not None and trapped.verified:
            raise UnsoundnessError(f"預算 β={budget} 時逃逸與受困檢查器同時驗證成功")

        stats = DecisionStats(budget + 1, boxes, deepest, precision, capped)
        if escaping.verified:
            logging.info(f"判定為穩健逃逸 (β={budget}, 公式 {escaping.certificate.formula.value})")
            return Verdict(Outcome.ROBUST_ESCAPING, budget, escaping.certificate, stats)
        if trapped is not None and trapped.verified:
            logging.info(f"判定為穩健受困 (β={budget}, 公式 {trapped.certificate.formula.value})")
            return Verdict(Outcome.ROBUST_TRAPPED, budget, trapped.certificate, stats)

    if capped:
        logging.warning("字面區間項目限制了可達精度，結果可能受資料寬度影響")
    logging.info(f"在預算 {max_budget} 內無法判定")
    return Verdict(
        Outcome.UNKNOWN, max_budget, None, DecisionStats(max_budget + 1, boxes, deepest, precision, capped)
    )


def replay_certificate(inst: LoopInstance, certificate: Certificate, schedule: BudgetSchedule | None = None) -> bool:
    """以證書記錄的精度、深度與 (a, b) 重新執行同一項檢查，回傳是否再次驗證成功。"""
    schedule = schedule or BudgetSchedule()
    formula = certificate.formula
    affine_formula = formula in (
        Formula.AFFINE_ESCAPING,
        Formula.AFFINE_TRAPPED_EIGEN,
        Formula.AFFINE_TRAPPED_FIXED_POINT,
    )
    if inst.is_affine != affine_formula:
        raise PreconditionError(f"證書公式 {formula.value} 與實例種類 {inst.kind.value} 不符")

    refined = inst.refine(certificate.precision_bits)
    precision = certificate.precision_bits
    logging.info(f"重播證書: 公式 {formula.value}，精度 {precision}，深度上限 {certificate.depth_limit}")

    if formula is Formula.LINEAR_ESCAPING:
        _, result = verify_escaping_cover(refined.A, refined.B, 0, certificate.depth_limit, precision, schedule)
        return result.verified

    if formula is Formula.AFFINE_ESCAPING:
        a_hat, b_hat = homogenise_intervals(refined.A, refined.b, refined.B, refined.eta)
        _, result = verify_escaping_cover(a_hat, b_hat, 1, certificate.depth_limit, precision, schedule)
        return result.verified

    if formula is Formula.AFFINE_TRAPPED_FIXED_POINT:
        check = verify_fixed_point_clause(refined.A, refined.b, refined.B, refined.eta, precision, schedule)
        if not check.verified or certificate.solve_enclosure is None:
            return False
        return all(
            lo <= x.lo_fraction and x.hi_fraction <= hi
            for x, (lo, hi) in zip(check.solve_enclosure, certificate.solve_enclosure, strict=True)
        )

    if certificate.sign_change is None:
        return False
    lo, hi = certificate.sign_change
    sign_change, result = verify_eigen_clause(
        refined.A, refined.B, lo, hi, certificate.depth_limit, precision, schedule
    )
    return sign_change.verified and result is not None and result.verified
