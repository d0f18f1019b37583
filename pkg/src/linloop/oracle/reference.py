# src/linloop/oracle/reference.py
"""
以 SymPy 進行的精確有理數參考計算，用來對照區間數值的結果。
"""

# 1. 標準庫導入
from collections.abc import Sequence
from fractions import Fraction

# 2. 第三方庫導入
import sympy

# 3. 本專案導入
from linloop.errors import PreconditionError
from linloop.models.instance import RationalRows

_LAMBDA = sympy.Symbol("lam")


def to_sympy(value: Fraction) -> sympy.Rational:
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def from_sympy(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def sympy_matrix(rows: Sequence[Sequence[Fraction]]) -> sympy.Matrix:
    return sympy.Matrix([[to_sympy(x) for x in row] for row in rows])


def exact_char_poly(A: RationalRows) -> list[Fraction]:
    """det(λI − A) 的係數，由高次到低次 (首項係數為 1)。"""
    poly = sympy_matrix(A).charpoly(_LAMBDA)
    return [from_sympy(c) for c in poly.all_coeffs()]


def exact_solve(M: RationalRows, rhs: Sequence[Fraction]) -> list[Fraction]:
    """
    解 Mx = rhs。

    Raises:
        PreconditionError: M 不是可逆方陣。
    """
    mat = sympy_matrix(M)
    if not mat.is_square or mat.rows != len(rhs):
        raise PreconditionError(f"維度不符: {mat.rows}×{mat.cols} 與長度 {len(rhs)}")
    if mat.det() == 0:
        raise PreconditionError("矩陣奇異，沒有唯一解")
    solution = mat.LUsolve(sympy.Matrix([to_sympy(x) for x in rhs]))
    return [from_sympy(x) for x in solution]


def exact_adjugate(M: RationalRows) -> RationalRows:
    adj = sympy_matrix(M).adjugate()
    return [[from_sympy(adj[i, j]) for j in range(adj.cols)] for i in range(adj.rows)]


def _evaluate(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    value = Fraction(0)
    for c in coeffs:
        value = value * x + c
    return value


def odd_roots_between(coeffs: Sequence[Fraction], lo: Fraction, hi: Fraction) -> list[tuple[Fraction, Fraction]]:
    """
    多項式在開區間 (lo, hi) 內所有奇數重數實根的隔離區間 [l, h]，l = h 表示根恰為有理數。
    """
    poly = sympy.Poly([to_sympy(c) for c in coeffs], _LAMBDA, domain=sympy.QQ)
    result = []
    for (left, right), multiplicity in poly.intervals(inf=to_sympy(lo), sup=to_sympy(hi)):
        left, right = from_sympy(left), from_sympy(right)
        if multiplicity % 2 == 1 and lo < right and left < hi:
            result.append((left, right))
    return result


def refine_simple_root(coeffs: Sequence[Fraction], lo: Fraction, hi: Fraction, bits: int) -> Fraction:
    """
    以精確二分法把隔離區間內的奇數重數根逼近到誤差 2^(-bits) 以內。

    coeffs 在 lo、hi 兩端必須異號 (或其中一端恰為根)。
    """
    square_free = sympy.Poly([to_sympy(c) for c in coeffs], _LAMBDA, domain=sympy.QQ).sqf_part()
    sf = [from_sympy(c) for c in square_free.all_coeffs()]
    f_lo = _evaluate(sf, lo)
    if f_lo == 0:
        return lo
    if _evaluate(sf, hi) == 0:
        return hi
    tolerance = Fraction(1, 2**bits)
    while hi - lo > tolerance:
        mid = (lo + hi) / 2
        f_mid = _evaluate(sf, mid)
        if f_mid == 0:
            return mid
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return (lo + hi) / 2
