# tests/test_matrix.py

# 1. 標準庫導入
from fractions import Fraction

# 2. 第三方庫導入
import pytest

# 3. 本專案導入
from linloop.errors import DimensionMismatchError, SingularAtThisPrecision
from linloop.numerics.dyadic import DyadicInterval
from linloop.numerics.matrix import IntervalMatrix, interval_solve, mat_mul, mat_vec, vector_from_rationals


def test_identity_and_indexing():
    eye = IntervalMatrix.identity(3)
    assert eye.is_square
    assert eye[1, 1].contains(1)
    assert eye[0, 2].contains(0)
    assert eye.trace().contains(3)


def test_from_rows_rejects_ragged_rows():
    one = DyadicInterval.point(1)
    with pytest.raises(DimensionMismatchError):
        IntervalMatrix.from_rows([[one, one], [one]])


def test_product_contains_exact_product():
    a = [[Fraction(1, 3), 2], [-1, Fraction(1, 7)]]
    b = [[Fraction(2, 5), 0], [1, Fraction(-3, 4)]]
    product = mat_mul(IntervalMatrix.from_rationals(a), IntervalMatrix.from_rationals(b))
    exact = [[sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    assert product.contains_rationals(exact)


def test_product_shape_mismatch_raises():
    with pytest.raises(DimensionMismatchError):
        mat_mul(IntervalMatrix.identity(2), IntervalMatrix.identity(3))


def test_mat_vec_contains_exact():
    m = IntervalMatrix.from_rationals([[1, 2], [3, 4]])
    result = mat_vec(m, vector_from_rationals([Fraction(1, 3), -1]))
    assert result[0].contains(Fraction(1, 3) - 2)
    assert result[1].contains(1 - 4)


def test_sub_identity():
    m = IntervalMatrix.from_rationals([[2, 1], [0, 5]]).sub_identity(Fraction(1, 2))
    assert m.contains_rationals([[Fraction(3, 2), 1], [0, Fraction(9, 2)]])


def test_interval_solve_contains_exact_solution():
    m = IntervalMatrix.from_rationals([[2, 1], [1, 3]])
    solution = interval_solve(m, vector_from_rationals([3, 5]))
    assert solution[0].contains(Fraction(4, 5))
    assert solution[1].contains(Fraction(7, 5))


def test_interval_solve_pivots_past_zero():
    m = IntervalMatrix.from_rationals([[0, 1], [1, 0]])
    solution = interval_solve(m, vector_from_rationals([2, 3]))
    assert solution[0].contains(3)
    assert solution[1].contains(2)


def test_singular_matrix_raises_retriable_error():
    m = IntervalMatrix.from_rationals([[1, 1], [1, 1]])
    with pytest.raises(SingularAtThisPrecision):
        interval_solve(m, vector_from_rationals([1, 1]))


def test_solve_rejects_bad_shapes():
    with pytest.raises(DimensionMismatchError):
        interval_solve(IntervalMatrix.identity(2), vector_from_rationals([1, 2, 3]))


def test_identity_product_contains_operand():
    m = [[Fraction(1, 3), -2], [5, Fraction(7, 9)]]
    assert mat_mul(IntervalMatrix.identity(2), IntervalMatrix.from_rationals(m)).contains_rationals(m)


def test_matrix_vector_example():
    result = mat_vec(IntervalMatrix.from_rationals([[2, 1], [0, 3]]), vector_from_rationals([1, 1]))
    assert result[0].contains(3)
    assert result[1].contains(3)


def test_scalar_interval_product():
    x = IntervalMatrix.from_rows([[DyadicInterval.from_fractions(1, 2)]])
    y = IntervalMatrix.from_rows([[DyadicInterval.from_fractions(-1, 1)]])
    product = mat_mul(x, y)[0, 0]
    assert product.contains(-2)
    assert product.contains(2)


def test_solve_examples():
    scalar = interval_solve(IntervalMatrix.from_rationals([[Fraction(-1, 2)]]), vector_from_rationals([1]))
    assert scalar[0].contains(-2)
    identity = interval_solve(IntervalMatrix.identity(2), vector_from_rationals([3, 4]))
    assert identity[0].contains(3)
    assert identity[1].contains(4)
    with pytest.raises(SingularAtThisPrecision):
        interval_solve(IntervalMatrix.from_rationals([[0, 0], [0, 0]]), vector_from_rationals([1, 1]))


def test_higher_precision_solve_is_nested():
    rows = [[Fraction(1, 3), Fraction(2, 7)], [Fraction(-5, 11), Fraction(3, 13)]]
    rhs = [Fraction(1, 5), Fraction(-2, 9)]
    coarse = interval_solve(IntervalMatrix.from_rationals(rows, 53), vector_from_rationals(rhs, 53))
    fine = interval_solve(IntervalMatrix.from_rationals(rows, 200), vector_from_rationals(rhs, 200))
    assert all(f.subset_of(c) for f, c in zip(fine, coarse, strict=True))
