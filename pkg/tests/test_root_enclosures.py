# tests/test_root_enclosures.py

# 1. 標準庫導入
from fractions import Fraction

# 2. 第三方庫導入
import numpy as np
import pytest
from mpmath.libmp import from_man_exp

# 3. 本專案導入
from linloop.errors import RootEnclosureError
from linloop.numerics.charpoly import char_poly, poly_from_rationals
from linloop.numerics.dyadic import DyadicInterval, mpf_to_fraction
from linloop.numerics.matrix import IntervalMatrix
from linloop.spectral.root_enclosures import (
    RootIsolationSettings,
    cauchy_root_bound,
    root_enclosures,
    winding_count,
)


def _roots_covered(disks, roots) -> bool:
    return all(any(d.contains_point(re, im) for d in disks) for re, im in roots)


def test_cauchy_bound_exceeds_every_root():
    poly = poly_from_rationals([1, -4, 3], 53)
    assert mpf_to_fraction(cauchy_root_bound(poly)) >= 5


def test_leading_coefficient_containing_zero_is_rejected():
    poly = (DyadicInterval.from_fractions(-1, 1), DyadicInterval.point(1))
    with pytest.raises(RootEnclosureError):
        cauchy_root_bound(poly)


def test_two_simple_real_roots():
    disks = root_enclosures(poly_from_rationals([1, -4, 3], 53), 53)
    assert sum(d.count for d in disks) == 2
    assert len(disks) == 2
    assert _roots_covered(disks, [(Fraction(1), Fraction(0)), (Fraction(3), Fraction(0))])
    assert all(d.meets_real_axis() for d in disks)


def test_conjugate_pair_stays_off_the_real_axis():
    disks = root_enclosures(poly_from_rationals([1, 0, 1], 53), 53)
    assert sum(d.count for d in disks) == 2
    assert _roots_covered(disks, [(Fraction(0), Fraction(1)), (Fraction(0), Fraction(-1))])
    assert not any(d.meets_real_axis() for d in disks)


def test_double_root_is_one_cluster():
    disks = root_enclosures(poly_from_rationals([1, -2, 1], 53), 53)
    assert len(disks) == 1
    assert disks[0].count == 2
    assert disks[0].contains_point(Fraction(1))


def test_constant_polynomial_has_no_disks():
    assert root_enclosures(poly_from_rationals([3], 53), 53) == ()


def test_winding_count_on_rectangles():
    poly = poly_from_rationals([1, -4, 3], 53)
    around_one = (from_man_exp(1, -1), from_man_exp(3, -1), from_man_exp(-1, -1), from_man_exp(1, -1))
    around_both = (from_man_exp(0, 0), from_man_exp(4, 0), from_man_exp(-1, 0), from_man_exp(1, 0))
    empty = (from_man_exp(5, 0), from_man_exp(6, 0), from_man_exp(-1, 0), from_man_exp(1, 0))
    assert winding_count(poly, around_one) == 1
    assert winding_count(poly, around_both) == 2
    assert winding_count(poly, empty) == 0


def test_resolution_bits_follow_precision():
    settings = RootIsolationSettings()
    assert settings.resolution_bits(53) == 10
    assert settings.resolution_bits(309) == 31


@pytest.mark.slow
def test_companion_roots_are_tight_at_high_precision():
    roots = [Fraction(-1, 2), Fraction(1), Fraction(2)]
    # (λ + 1/2)(λ − 1)(λ − 2) = λ³ − 5/2 λ² + 1/2 λ + 1
    disks = root_enclosures(poly_from_rationals([1, Fraction(-5, 2), Fraction(1, 2), 1], 309), 309)
    assert sum(d.count for d in disks) == 3
    assert _roots_covered(disks, [(r, Fraction(0)) for r in roots])
    assert all(d.radius_fraction <= Fraction(1, 2**20) for d in disks)


def test_quadratic_radii_shrink_with_precision():
    disks = root_enclosures(poly_from_rationals([1, -5, 6], 117), 117)
    assert [d.count for d in disks] == [1, 1]
    assert _roots_covered(disks, [(Fraction(2), Fraction(0)), (Fraction(3), Fraction(0))])
    assert all(d.radius_fraction <= Fraction(1, 2**8) for d in disks)


def test_double_root_at_origin():
    disks = root_enclosures(poly_from_rationals([1, 0, 0], 53), 53)
    assert sum(d.count for d in disks) == 2
    assert all(d.contains_point(Fraction(0)) for d in disks)


def _companion(roots):
    """首一多項式 Π(λ − r) 的伴隨矩陣與係數。"""
    coeffs = [Fraction(1)]
    for r in roots:
        coeffs = [*coeffs, Fraction(0)]
        coeffs = [c - r * prev for c, prev in zip(coeffs, [Fraction(0), *coeffs[:-1]], strict=True)]
    n = len(roots)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = Fraction(1)
    for i in range(n):
        rows[i][n - 1] = -coeffs[n - i]
    return rows, coeffs


@pytest.mark.slow
def test_companion_matrices_with_known_roots():
    rng = np.random.default_rng(2024)
    for _ in range(50):
        degree = int(rng.integers(2, 5))
        picks = rng.choice(np.arange(-24, 25), size=degree, replace=False)
        roots = sorted(Fraction(int(k), 8) for k in picks)
        rows, coeffs = _companion(roots)
        poly = char_poly(IntervalMatrix.from_rationals(rows, 309))
        assert all(c.contains(x) for c, x in zip(poly, coeffs, strict=True))
        disks = root_enclosures(poly, 309)
        assert sum(d.count for d in disks) == degree
        assert _roots_covered(disks, [(r, Fraction(0)) for r in roots])
        assert all(d.radius_fraction <= Fraction(1, 2**20) for d in disks)
