# tests/test_real_spectrum.py

# 1. 標準庫導入
from fractions import Fraction

# 2. 第三方庫導入
import pytest

# 3. 本專案導入
from linloop.numerics.charpoly import char_poly
from linloop.numerics.matrix import IntervalMatrix
from linloop.spectral.real_spectrum import (
    RealSegment,
    Verification,
    odd_root_candidates,
    odd_root_witness,
    real_spectrum_above,
    verify_value_not_in_spectrum,
)


def test_segments_cover_real_eigenvalues_above_threshold():
    a = IntervalMatrix.from_rationals([[2, 1], [1, 2]])
    segments = real_spectrum_above(a, 0, 53)
    assert len(segments) == 2
    assert segments[0].contains(Fraction(1))
    assert segments[1].contains(Fraction(3))

    above_two = real_spectrum_above(a, 2, 53)
    assert len(above_two) == 1
    assert above_two[0].contains(Fraction(3))
    assert above_two[0].as_fractions()[0] >= 2


def test_rotation_has_no_real_spectrum():
    assert real_spectrum_above(IntervalMatrix.from_rationals([[0, -1], [1, 0]]), 0, 53) == []


def test_negative_eigenvalue_is_below_zero_threshold():
    assert real_spectrum_above(IntervalMatrix.from_rationals([[-1]]), 0, 53) == []


def test_sign_change_witness():
    poly = char_poly(IntervalMatrix.from_rationals([[2]]))
    witness = odd_root_witness(poly, Fraction(1), Fraction(3))
    assert witness.verified
    assert witness.status is Verification.VERIFIED
    assert not odd_root_witness(poly, Fraction(3), Fraction(4)).verified


def test_double_root_has_no_sign_change():
    poly = char_poly(IntervalMatrix.from_rationals([[1, 0], [0, 1]]))
    assert not odd_root_witness(poly, Fraction(1, 2), Fraction(3, 2)).verified


def test_sign_change_requires_ordered_points():
    poly = char_poly(IntervalMatrix.from_rationals([[2]]))
    with pytest.raises(ValueError):
        odd_root_witness(poly, Fraction(3), Fraction(1))


def test_value_not_in_spectrum():
    assert verify_value_not_in_spectrum(IntervalMatrix.from_rationals([[Fraction(1, 2)]]), 1, 53)
    assert not verify_value_not_in_spectrum(IntervalMatrix.from_rationals([[1]]), 1, 53)


def test_candidates_use_coarsest_grid_first():
    segments = [RealSegment.from_fractions(Fraction(199, 100), Fraction(201, 100))]
    candidates = odd_root_candidates(segments, 1, 3)
    assert candidates[0] == (Fraction(3, 2), Fraction(5, 2))
    assert all(a > 1 for a, _ in candidates)
    assert len(candidates) == len(set(candidates))


def test_candidates_for_small_eigenvalue():
    segments = real_spectrum_above(IntervalMatrix.from_rationals([[Fraction(1, 2)]]), 0, 53)
    assert odd_root_candidates(segments, 0, 2)[0] == (Fraction(1, 4), Fraction(3, 4))


def test_candidates_respect_grid_limit():
    segments = [RealSegment.from_fractions(Fraction(99, 10), Fraction(101, 10))]
    assert odd_root_candidates(segments, 0, 2) == []
    assert odd_root_candidates(segments, 0, 4)[0] == (Fraction(9), Fraction(11))


def test_diagonal_spectrum_above_one():
    segments = real_spectrum_above(IntervalMatrix.from_rationals([[2, 0], [0, 3]]), 1, 53)
    assert len(segments) == 2
    assert segments[0].contains(Fraction(2))
    assert segments[1].contains(Fraction(3))


def test_scalar_segment_is_narrow():
    segments = real_spectrum_above(IntervalMatrix.from_rationals([[Fraction(1, 2)]]), 0, 85)
    assert len(segments) == 1
    lo, hi = segments[0].as_fractions()
    assert lo <= Fraction(1, 2) <= hi
    assert hi - lo <= Fraction(1, 2**10)


def test_sign_change_examples():
    double = char_poly(IntervalMatrix.from_rationals([[2, 0], [0, 2]]))
    assert not odd_root_witness(double, Fraction(1), Fraction(3)).verified
    quadratic = char_poly(IntervalMatrix.from_rationals([[2, 0], [0, 3]]))
    witness = odd_root_witness(quadratic, Fraction(5, 2), Fraction(7, 2))
    assert witness.verified
    assert witness.value_a.is_negative()
    assert witness.value_b.is_positive()


def test_value_not_in_spectrum_examples():
    assert not verify_value_not_in_spectrum(IntervalMatrix.from_rationals([[1, 0], [0, 2]]), 1, 53)
    assert verify_value_not_in_spectrum(IntervalMatrix.from_rationals([[0, -1], [1, 0]]), 1, 53)
