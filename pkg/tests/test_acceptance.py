# tests/test_acceptance.py
"""
端到端驗收: 範例實例、1×1 封閉形式對照、隨機實例的停止率、模擬稽核，以及互斥與預算單調性。

完整規模的檢查標記為 slow (以 `pytest -m slow` 執行)。
"""

# 1. 標準庫導入
from fractions import Fraction

# 2. 第三方庫導入
import numpy as np
import pytest

# 3. 本專案導入
from linloop import decide
from linloop.core.decision_driver import _run_escaping, _run_trapped
from linloop.models.instance import LoopInstance, homogenise
from linloop.models.verdict import Outcome
from linloop.oracle.audits import audit_escaping, audit_trapped
from linloop.oracle.sampler import sample_instances
from linloop.oracle.scalar_oracle import ScalarAnswer, decide_1x1, is_boundary_1x1
from linloop.semidecision.budget import BudgetSchedule

HALVING_DRIFT_ESCAPING = LoopInstance.affine([[Fraction(1, 2)]], [-1], [[1]], [0])
HALVING_TRAPPED = LoopInstance.linear([[Fraction(1, 2)]], [[1]])
HALVING_BOUNDARY = LoopInstance.affine([[Fraction(1, 2)]], [0], [[1]], [0])
ROTATION = LoopInstance.linear([[0, -1], [1, 0]], [[1, 0], [0, 1]])
EXPANDING = LoopInstance.linear([[2]], [[1]])
FIXED_POINT = LoopInstance.affine([[Fraction(1, 2)]], [1], [[1]], [0])
IDENTITY_BOUNDARY = LoopInstance.linear([[1, 0], [0, 1]], [[1, 0]])


def _audit(inst: LoopInstance, verdict, escape_points: int = 100, escape_steps: int = 10_000):
    if verdict.outcome is Outcome.ROBUST_TRAPPED:
        return audit_trapped(inst, verdict, steps=200)
    return audit_escaping(inst, verdict, points=escape_points, steps=escape_steps)


def _check_monotone(inst: LoopInstance, verdict, max_budget: int):
    """在判定所用的預算與更大的預算下重跑，結果必須相同。"""
    if not verdict.decided:
        return
    for budget in {verdict.budget_used, max_budget}:
        again = decide(inst, max_budget=budget)
        assert again.outcome is verdict.outcome
        assert again.budget_used == verdict.budget_used


def _one_by_one(count: int, seed: int):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        a = Fraction(int(rng.integers(-64, 65)), 16)
        m = int(rng.integers(1, 4))
        column = [Fraction(int(k), 16) for k in rng.integers(-64, 65, size=m)]
        yield a, column


@pytest.mark.parametrize(
    ("inst", "outcome"),
    [
        (HALVING_DRIFT_ESCAPING, Outcome.ROBUST_ESCAPING),
        (HALVING_TRAPPED, Outcome.ROBUST_TRAPPED),
        (ROTATION, Outcome.ROBUST_ESCAPING),
        (EXPANDING, Outcome.ROBUST_TRAPPED),
        (FIXED_POINT, Outcome.ROBUST_TRAPPED),
    ],
)
def test_curated_robust_instances(inst, outcome):
    verdict = decide(inst, max_budget=8)
    assert verdict.outcome is outcome
    assert _audit(inst, verdict, escape_points=20, escape_steps=500).passed


@pytest.mark.slow
@pytest.mark.parametrize(
    "inst",
    [
        HALVING_BOUNDARY,
        IDENTITY_BOUNDARY,
        homogenise(HALVING_DRIFT_ESCAPING),
        homogenise(HALVING_BOUNDARY),
    ],
)
def test_boundary_instances_unknown_at_full_budget(inst):
    assert decide(inst, max_budget=8).outcome is Outcome.UNKNOWN


@pytest.mark.slow
def test_curated_robust_instances_pass_full_audits():
    for inst in (HALVING_DRIFT_ESCAPING, HALVING_TRAPPED, ROTATION, EXPANDING, FIXED_POINT):
        verdict = decide(inst, max_budget=8)
        report = _audit(inst, verdict)
        assert report.passed, report.details
        assert report.failures == 0
        _check_monotone(inst, verdict, 8)


def _scalar_agreement(count: int, seed: int, max_budget: int) -> int:
    halted = 0
    for a, column in _one_by_one(count, seed):
        inst = LoopInstance.linear([[a]], [[x] for x in column])
        verdict = decide(inst, max_budget=max_budget)
        assert verdict.decided or is_boundary_1x1(a, column), (a, column)
        if not verdict.decided:
            continue
        halted += 1
        trapped = verdict.outcome is Outcome.ROBUST_TRAPPED
        assert trapped == (decide_1x1(a, column) is ScalarAnswer.TRAPPED), (a, column)
    return halted


def test_scalar_instances_agree_with_closed_form_small():
    assert _scalar_agreement(30, seed=1, max_budget=3) > 0


@pytest.mark.slow
def test_scalar_instances_agree_with_closed_form_full():
    assert _scalar_agreement(500, seed=1, max_budget=8) > 0


def test_sampled_scalar_instances_have_closed_form():
    for inst in sample_instances(1, 1, "linear", 100, seed=1):
        data = inst.rational_data()
        assert decide_1x1(data.A[0][0], [row[0] for row in data.B]) in ScalarAnswer


@pytest.mark.slow
def test_random_instances_mostly_halt():
    corpus = []
    seed = 100
    for n in (2, 3):
        for m in (1, 2, 3):
            corpus.extend(sample_instances(n, m, "linear", 34 if n == 2 else 33, seed=seed))
            seed += 1
    corpus = corpus[:200]
    halted = 0
    for inst in corpus:
        verdict = decide(inst, max_budget=8, cross_check=True)
        if verdict.decided:
            halted += 1
            assert _audit(inst, verdict).passed
    assert halted >= 0.9 * len(corpus)


def _checker_verdicts(inst: LoopInstance, max_budget: int, schedule: BudgetSchedule) -> list[tuple[bool, bool]]:
    rounds = []
    for budget in range(max_budget + 1):
        refined = inst.refine(schedule.precision(budget))
        escaping = _run_escaping(refined, budget, schedule)
        trapped = _run_trapped(refined, budget, schedule)
        rounds.append((escaping.verified, trapped.verified))
    return rounds


def _assert_checkers_monotone(instances: list[LoopInstance], max_budget: int):
    schedule = BudgetSchedule()
    for inst in instances:
        rounds = _checker_verdicts(inst, max_budget, schedule)
        for side in (0, 1):
            flags = [r[side] for r in rounds]
            first = flags.index(True) if True in flags else len(flags)
            assert all(flags[first:]), (inst, rounds)
        assert not any(esc and trap for esc, trap in rounds), (inst, rounds)


def test_checkers_stay_verified_at_larger_budgets():
    instances = sample_instances(2, 2, "linear", 4, seed=31) + sample_instances(2, 2, "affine", 2, seed=32)
    _assert_checkers_monotone(instances, max_budget=2)


@pytest.mark.slow
def test_checkers_stay_verified_at_larger_budgets_full():
    instances = []
    for seed, (n, m) in enumerate([(2, 1), (2, 2), (2, 3), (3, 2)], start=40):
        instances.extend(sample_instances(n, m, "linear", 8, seed=seed))
    instances.extend(sample_instances(2, 2, "affine", 8, seed=50))
    _assert_checkers_monotone(instances, max_budget=3)
