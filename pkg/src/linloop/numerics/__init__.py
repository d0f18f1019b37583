# src/linloop/numerics/__init__.py
"""
有效區間數值: 二進位端點區間、複數矩形區間、區間矩陣與特徵多項式。
"""

from .charpoly import IntervalPoly, char_poly, horner, horner_complex, poly_from_rationals, taylor_shift
from .dyadic import ComplexInterval, DyadicInterval
from .matrix import IntervalMatrix, IntervalVector, interval_solve, mat_mul, mat_vec

__all__ = [
    "ComplexInterval",
    "DyadicInterval",
    "IntervalMatrix",
    "IntervalPoly",
    "IntervalVector",
    "char_poly",
    "horner",
    "horner_complex",
    "interval_solve",
    "mat_mul",
    "mat_vec",
    "poly_from_rationals",
    "taylor_shift",
]
