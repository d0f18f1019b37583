# src/linloop/numerics/charpoly.py
"""
區間特徵多項式 (Faddeev–LeVerrier 遞迴) 與多項式的區間求值。

多項式一律以係數元組表示，最高次項在前: (c_0, c_1, ..., c_n) 代表 c_0·λ^n + ... + c_n。
"""

# 1. 標準庫導入
from fractions import Fraction

# 2. 第三方庫導入
# (無)

# 3. 本專案導入
from linloop.errors import DimensionMismatchError
from linloop.numerics.dyadic import ComplexInterval, DyadicInterval, iv_add, iv_div, iv_mul, iv_neg
from linloop.numerics.matrix import IntervalMatrix, mat_mul

IntervalPoly = tuple[DyadicInterval, ...]


def char_poly(a: IntervalMatrix) -> IntervalPoly:
    """
    計算 det(λI − A) 的區間係數 (首一，最高次項在前)。

    遞迴: M_1 = I；c_k = −tr(A·M_k)/k；M_{k+1} = A·M_k + c_k·I。
    只會除以整數 k，因此每一步都是可靠的區間運算。
    """
    if not a.is_square:
        raise DimensionMismatchError(f"特徵多項式需要方陣，實際為 {a.rows}×{a.cols}")
    n = a.rows
    prec = a.prec
    coefficients = [DyadicInterval.point(1, prec)]
    m = IntervalMatrix.identity(n, prec)
    for k in range(1, n + 1):
        am = mat_mul(a, m)
        c_k = iv_neg(iv_div(am.trace(), DyadicInterval.point(k, prec)))
        coefficients.append(c_k)
        m = am.add_scaled_identity(c_k)
    return tuple(coefficients)


def poly_from_rationals(coefficients, prec: int) -> IntervalPoly:
    return tuple(DyadicInterval.point(Fraction(c), prec) for c in coefficients)


def horner(poly: IntervalPoly, x: DyadicInterval) -> DyadicInterval:
    """在實區間 x 上以 Horner 法求值。"""
    acc = poly[0]
    for c in poly[1:]:
        acc = iv_add(iv_mul(acc, x), c)
    return acc


def horner_complex(poly: IntervalPoly, z: ComplexInterval) -> ComplexInterval:
    """在複數矩形 z 上以 Horner 法求值。"""
    acc = ComplexInterval.real(poly[0])
    for c in poly[1:]:
        acc = acc * z + ComplexInterval.real(c)
    return acc


def taylor_shift(poly: IntervalPoly, center: ComplexInterval) -> list[ComplexInterval]:
    """
    以重複綜合除法計算 q_k = p^(k)(c)/k!，回傳 [q_0, q_1, ..., q_n]。

    展開式 p(c + w) = Σ q_k w^k 用於根排除測試與輪廓線段包圍。
    """
    work = [ComplexInterval.real(c) for c in poly]
    degree = len(poly) - 1
    result = []
    for k in range(degree + 1):
        # 對 work[0 .. degree-k] 做一次綜合除法，最後一個值是餘數
        acc = work[0]
        for i in range(1, degree - k + 1):
            acc = acc * center + work[i]
            work[i] = acc
        result.append(work[degree - k])
        # 商的係數在 work[0 .. degree-k-1]
    return result
