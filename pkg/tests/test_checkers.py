# tests/test_checkers.py

# 1. 標準庫導入
from fractions import Fraction

# 2. 第三方庫導入
# (無)

# 3. 本專案導入
from linloop.models.verdict import Formula
from linloop.numerics.matrix import IntervalMatrix, vector_from_rationals
from linloop.semidecision.budget import BudgetSchedule
from linloop.semidecision.checkers import (
    check_robust_escaping_affine,
    check_robust_escaping_linear,
    check_robust_trapped_affine,
    check_robust_trapped_linear,
    verify_eigen_clause,
    verify_fixed_point_clause,
)


def _m(rows) -> IntervalMatrix:
    return IntervalMatrix.from_rationals([[Fraction(x) for x in row] for row in rows])


def _v(values):
    return vector_from_rationals([Fraction(x) for x in values])


def test_budget_schedule_defaults():
    schedule = BudgetSchedule()
    assert [schedule.precision(b) for b in (0, 1, 8)] == [53, 85, 309]
    assert [schedule.depth(b) for b in (0, 1, 8)] == [4, 6, 20]
    assert schedule.grid_exponent(3) == 5


def test_budget_schedule_from_config():
    schedule = BudgetSchedule.from_config({"budget": {"precision_step": 16}, "cover": {"max_boxes": 10}})
    assert schedule.precision(2) == 85
    assert schedule.max_boxes == 10
    assert schedule.depth(0) == 4


def test_trapped_linear_expanding_scalar(schedule):
    result = check_robust_trapped_linear(_m([[2]]), _m([[1]]), 0, schedule)
    assert result.verified
    certificate = result.certificate
    assert certificate.formula is Formula.LINEAR_TRAPPED
    assert certificate.sign_change == (Fraction(1), Fraction(3))
    assert certificate.precision_bits == 53
    assert certificate.witness_box is not None


def test_trapped_linear_contracting_scalar(schedule):
    result = check_robust_trapped_linear(_m([["1/2"]]), _m([[1]]), 0, schedule)
    assert result.verified
    assert result.certificate.sign_change == (Fraction(1, 4), Fraction(3, 4))


def test_escaping_linear_negative_scalar(schedule):
    result = check_robust_escaping_linear(_m([[-1]]), _m([[1]]), 0, schedule)
    assert result.verified
    assert result.certificate.formula is Formula.LINEAR_ESCAPING
    assert result.certificate.segments == ()
    assert not check_robust_trapped_linear(_m([[-1]]), _m([[1]]), 0, schedule).verified


def test_escaping_linear_rotation(schedule):
    result = check_robust_escaping_linear(_m([[0, -1], [1, 0]]), _m([[1, 0], [0, 1]]), 0, schedule)
    assert result.verified


def test_expanding_scalar_is_not_escaping(schedule):
    assert not check_robust_escaping_linear(_m([[2]]), _m([[1]]), 0, schedule).verified


def test_boundary_identity_verifies_neither(schedule):
    a, b = _m([[1, 0], [0, 1]]), _m([[1, 0]])
    assert not check_robust_escaping_linear(a, b, 0, schedule).verified
    assert not check_robust_trapped_linear(a, b, 0, schedule).verified


def test_affine_fixed_point_clause(schedule):
    result = check_robust_trapped_affine(_m([["1/2"]]), _v([1]), _m([[1]]), _v([0]), 0, schedule)
    assert result.verified
    certificate = result.certificate
    assert certificate.formula is Formula.AFFINE_TRAPPED_FIXED_POINT
    lo, hi = certificate.fixed_point_enclosure[0]
    assert lo <= 2 <= hi
    assert all(m_hi < 0 for _, m_hi in certificate.constraint_margins)


def test_affine_eigen_clause(schedule):
    result = check_robust_trapped_affine(_m([[2]]), _v([0]), _m([[1]]), _v([0]), 0, schedule)
    assert result.verified
    assert result.certificate.formula is Formula.AFFINE_TRAPPED_EIGEN
    assert result.certificate.sign_change == (Fraction(3, 2), Fraction(5, 2))


def test_affine_escaping(schedule):
    args = (_m([["1/2"]]), _v([-1]), _m([[1]]), _v([0]))
    verified = [check_robust_escaping_affine(*args, budget, schedule).verified for budget in range(3)]
    assert any(verified)
    assert not any(check_robust_trapped_affine(*args, budget, schedule).verified for budget in range(3))


def test_fixed_point_clause_needs_invertible_shift(schedule):
    check = verify_fixed_point_clause(_m([[1]]), _v([1]), _m([[1]]), _v([0]), 53, schedule)
    assert not check.verified


def test_fixed_point_clause_needs_strict_margins(schedule):
    check = verify_fixed_point_clause(_m([[2]]), _v([0]), _m([[1]]), _v([0]), 53, schedule)
    assert not check.verified
    assert check.constraint_margins is not None


def test_eigen_clause_without_sign_change_skips_cover(schedule):
    sign_change, result = verify_eigen_clause(_m([[2]]), _m([[1]]), Fraction(3), Fraction(4), 4, 53, schedule)
    assert not sign_change.verified
    assert result is None


def test_negative_scalar_escapes(schedule):
    assert check_robust_escaping_linear(_m([[-2]]), _m([[1]]), 0, schedule).verified


def test_trapped_scalar_never_verifies_escaping(schedule):
    assert not any(check_robust_escaping_linear(_m([["1/2"]]), _m([[1]]), b, schedule).verified for b in range(3))


def test_boundary_affine_instance_verifies_neither(schedule):
    args = (_m([["1/2"]]), _v([0]), _m([[1]]), _v([0]))
    assert not any(check_robust_escaping_affine(*args, b, schedule).verified for b in range(2))
    assert not any(check_robust_trapped_affine(*args, b, schedule).verified for b in range(2))


def test_negative_drift_with_threshold_escapes(schedule):
    args = (_m([["-1/2"]]), _v([0]), _m([[1]]), _v([1]))
    assert any(check_robust_escaping_affine(*args, b, schedule).verified for b in range(3))


def test_eigen_clause_accepts_finer_grid_pair(schedule):
    sign_change, result = verify_eigen_clause(
        _m([[2]]), _m([[1]]), Fraction(3, 2), Fraction(5, 2), 4, 53, schedule
    )
    assert sign_change.verified
    assert result.verified
