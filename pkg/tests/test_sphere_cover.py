# tests/test_sphere_cover.py

# 1. 標準庫導入
from fractions import Fraction

# 2. 第三方庫導入
# (無)

# 3. 本專案導入
from linloop.numerics.dyadic import DyadicInterval
from linloop.numerics.matrix import IntervalMatrix
from linloop.semidecision.sphere_cover import (
    CoverStatus,
    PredicateValue,
    SphereBox,
    antecedent_refuted,
    cover_verify,
    escaping_predicate,
    initial_sphere_box,
    retained_sphere_boxes,
    trapped_predicate,
)
from linloop.spectral.real_spectrum import RealSegment


def _point_box(*coords) -> SphereBox:
    return SphereBox(tuple(DyadicInterval.point(Fraction(c)) for c in coords))


def _circle_points():
    """單位圓上的有理點 ((1 − t²)/(1 + t²), 2t/(1 + t²)) 與其鏡像。"""
    points = []
    for t in (Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(1), Fraction(7, 5)):
        x, y = (1 - t * t) / (1 + t * t), 2 * t / (1 + t * t)
        points.extend([(x, y), (-x, y), (x, -y), (-x, -y), (y, x)])
    return points


def test_initial_box_contains_sphere_with_margin():
    box = initial_sphere_box(2, 4, 53)
    assert box.contains((Fraction(1), Fraction(0)))
    assert box.contains((Fraction(17, 16), Fraction(-17, 16)))
    assert not box.contains((Fraction(9, 8), Fraction(0)))


def test_retained_boxes_cover_unit_circle():
    boxes = list(retained_sphere_boxes(2, 4, 4, 53))
    assert boxes
    assert all(box.meets_sphere() for box in boxes)
    for point in _circle_points():
        assert any(box.contains(point) for box in boxes), point


def test_retained_boxes_cover_unit_sphere_in_three_dimensions():
    boxes = list(retained_sphere_boxes(3, 3, 4, 53))
    for point in [(Fraction(1, 3), Fraction(2, 3), Fraction(2, 3)), (Fraction(-2, 7), Fraction(3, 7), Fraction(-6, 7))]:
        assert any(box.contains(point) for box in boxes)


def test_split_produces_two_to_the_n_children():
    assert len(initial_sphere_box(3, 4, 53).split()) == 8


def test_antecedent_refuted_by_wrong_eigenvalue():
    a = IntervalMatrix.from_rationals([[2, 0], [0, 3]])
    box = _point_box(1, 0)
    assert antecedent_refuted(a, DyadicInterval.point(5), box)
    assert not antecedent_refuted(a, DyadicInterval.point(2), box)


def test_escaping_predicate_values():
    pred = escaping_predicate(IntervalMatrix.from_rationals([[1, 0]]))
    lam = DyadicInterval.point(1)
    assert pred(lam, _point_box(-1, 0)) is PredicateValue.HOLDS
    assert pred(lam, _point_box(1, 0)) is PredicateValue.FAILS
    assert pred(lam, _point_box(0, 1)) is PredicateValue.FAILS


def test_trapped_predicate_values():
    pred = trapped_predicate(IntervalMatrix.from_rationals([[1, 0], [0, 1]]))
    lam = DyadicInterval.point(1)
    assert pred(lam, _point_box(Fraction(3, 5), Fraction(4, 5))) is PredicateValue.HOLDS
    assert pred(lam, _point_box(Fraction(-3, 5), Fraction(-4, 5))) is PredicateValue.HOLDS
    assert pred(lam, _point_box(Fraction(3, 5), Fraction(-4, 5))) is PredicateValue.FAILS
    straddling = SphereBox((DyadicInterval.from_fractions(-1, 1), DyadicInterval.point(1)))
    assert pred(lam, straddling) is PredicateValue.UNDECIDED


def test_cover_verifies_trapped_scalar_loop():
    a = IntervalMatrix.from_rationals([[2]])
    segment = RealSegment.from_fractions(Fraction(3, 2), Fraction(5, 2))
    result = cover_verify([segment], a, trapped_predicate(IntervalMatrix.from_rationals([[1]])), 4, 53)
    assert result.status is CoverStatus.VERIFIED
    assert result.witness_box is not None
    assert result.stats.depth_limit == 4


def test_cover_exhausts_when_conclusion_fails():
    a = IntervalMatrix.from_rationals([[2]])
    segment = RealSegment.from_fractions(Fraction(3, 2), Fraction(5, 2))
    result = cover_verify([segment], a, escaping_predicate(IntervalMatrix.from_rationals([[1]])), 4, 53)
    assert result.status is CoverStatus.EXHAUSTED
    assert not result.verified


def test_empty_segment_list_is_vacuously_verified():
    a = IntervalMatrix.from_rationals([[-1]])
    result = cover_verify([], a, escaping_predicate(IntervalMatrix.from_rationals([[1]])), 4, 53)
    assert result.verified
    assert result.stats.boxes_examined == 0


def test_cover_respects_box_limit():
    a = IntervalMatrix.from_rationals([[1, 0], [0, 1]])
    segment = RealSegment.from_fractions(Fraction(1, 2), Fraction(3, 2))
    pred = trapped_predicate(IntervalMatrix.from_rationals([[1, 0]]))
    result = cover_verify([segment], a, pred, 20, 53, max_boxes=50)
    assert result.status is CoverStatus.EXHAUSTED
    assert result.stats.boxes_examined <= 51


def test_contracting_scalar_never_satisfies_escaping_conclusion():
    a = IntervalMatrix.from_rationals([[Fraction(1, 2)]])
    segment = RealSegment.from_fractions(Fraction(1, 4), Fraction(3, 4))
    pred = escaping_predicate(IntervalMatrix.from_rationals([[1]]))
    for depth_limit in (4, 8, 12):
        assert cover_verify([segment], a, pred, depth_limit, 53).status is CoverStatus.EXHAUSTED
