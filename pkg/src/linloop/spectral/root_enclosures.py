# src/linloop/spectral/root_enclosures.py
"""
區間多項式族的複數根包圍。

流程:
1. 以 Cauchy 上界取得包含所有根的正方形 [−2^e, 2^e]²。
2. 逐層四分正方形，以中心 Taylor 展開排除不可能含根的方塊。
3. 以 networkx 將倖存方塊聚成連通叢集，並合併外擴後重疊的叢集。
4. 在每個叢集的外擴矩形上做輻角原理計數，得到每個圓盤內的根數。
"""

# 1. 標準庫導入
import functools
import logging
from dataclasses import dataclass
from fractions import Fraction

# 2. 第三方庫導入
import networkx as nx
from mpmath.libmp import (
    fone,
    from_man_exp,
    fzero,
    mpf_abs,
    mpf_add,
    mpf_cmp,
    mpf_div,
    mpf_mul,
    mpf_shift,
    mpf_sqrt,
    mpf_sub,
    round_ceiling,
    round_floor,
)

# 3. 本專案導入
from linloop.errors import RootEnclosureError
from linloop.numerics.charpoly import IntervalPoly, taylor_shift
from linloop.numerics.dyadic import ComplexInterval, DyadicInterval, Mpf, mpf_max, mpf_to_fraction

# 象限標籤: 0 = re>0, 1 = im>0, 2 = re<0, 3 = im<0
_QUARTER_STEP = {0: 0, 1: 1, 3: -1}


@dataclass(frozen=True)
class RootIsolationSettings:
    """根包圍的解析度與輪廓計數參數。"""

    resolution_offset: int = 6
    resolution_divisor: int = 12
    contour_segments: int = 8
    contour_max_depth: int = 10
    max_level_boxes: int = 20000

    def resolution_bits(self, precision: int) -> int:
        """最終方塊邊長為 2^(-t)，t = offset + p // divisor。"""
        return self.resolution_offset + precision // self.resolution_divisor


@dataclass(frozen=True)
class ComplexDisk:
    """
    一組根的圓盤包圍。

    center_re / center_im 是精確的二進位中心點 (退化區間)，radius 是上界。
    """

    center_re: DyadicInterval
    center_im: DyadicInterval
    radius: Mpf
    count: int

    @property
    def radius_fraction(self) -> Fraction:
        return mpf_to_fraction(self.radius)

    @property
    def center_fraction(self) -> tuple[Fraction, Fraction]:
        return self.center_re.lo_fraction, self.center_im.lo_fraction

    def meets_real_axis(self) -> bool:
        return mpf_cmp(mpf_abs(self.center_im.lo), self.radius) <= 0

    def contains_point(self, re: Fraction, im: Fraction = Fraction(0)) -> bool:
        """(re, im) 是否落在閉圓盤內 (精確有理數比較)。"""
        c_re, c_im = self.center_fraction
        return (re - c_re) ** 2 + (im - c_im) ** 2 <= self.radius_fraction**2

    def __str__(self):
        c_re, c_im = self.center_fraction
        radius = float(self.radius_fraction)
        return f"disk(center={float(c_re):.6g}{float(c_im):+.6g}i, radius={radius:.3g}, count={self.count})"


@dataclass(frozen=True)
class _IndexRect:
    """最終層級格點上的方塊索引矩形 (含端點)。"""

    i_lo: int
    i_hi: int
    j_lo: int
    j_hi: int

    def inflated(self) -> "_IndexRect":
        return _IndexRect(self.i_lo - 1, self.i_hi + 1, self.j_lo - 1, self.j_hi + 1)

    def overlaps(self, other: "_IndexRect") -> bool:
        return not (
            self.i_hi < other.i_lo or other.i_hi < self.i_lo or self.j_hi < other.j_lo or other.j_hi < self.j_lo
        )

    @staticmethod
    def union(rects: list["_IndexRect"]) -> "_IndexRect":
        return _IndexRect(
            min(r.i_lo for r in rects),
            max(r.i_hi for r in rects),
            min(r.j_lo for r in rects),
            max(r.j_hi for r in rects),
        )


def cauchy_root_bound(poly: IntervalPoly) -> Mpf:
    """
    回傳 R = 1 + max|a_i| / min|a_0| 的上界；族中每個多項式的根都嚴格滿足 |z| < R。
    """
    lead = poly[0]
    if lead.contains_zero():
        raise RootEnclosureError(f"首項係數區間 {lead} 包含 0")
    prec = max(c.prec for c in poly)
    tail_mag = mpf_max(fzero, *(c.mag() for c in poly[1:]))
    ratio = mpf_div(tail_mag, lead.mig(), prec, round_ceiling)
    return mpf_add(ratio, fone, prec, round_ceiling)


def _bound_exponent(bound: Mpf) -> int:
    """最小的 e ≥ 0 使 2^e ≥ bound。"""
    value = mpf_to_fraction(bound)
    exponent = 0
    while 2**exponent < value:
        exponent += 1
    return exponent


def _taylor_tail(coefficients: list[ComplexInterval], radius: Mpf, prec: int) -> Mpf:
    """Σ_{k≥1} |q_k| r^k 的上界。"""
    total = fzero
    power = fone
    for q in coefficients[1:]:
        power = mpf_mul(power, radius, prec, round_ceiling)
        total = mpf_add(total, mpf_mul(q.mag(), power, prec, round_ceiling), prec, round_ceiling)
    return total


def _box_may_contain_root(poly: IntervalPoly, center: ComplexInterval, radius: Mpf, prec: int) -> bool:
    """中心形式排除測試: min|p(c)| > Σ|q_k| r^k 時方塊內沒有根。"""
    coefficients = taylor_shift(poly, center)
    return mpf_cmp(coefficients[0].mig(), _taylor_tail(coefficients, radius, prec)) <= 0


def _segment_label(poly: IntervalPoly, start: tuple[Mpf, Mpf], end: tuple[Mpf, Mpf], prec: int) -> int | None:
    """線段影像包圍所在的座標半平面標籤；無法判定時回傳 None。"""
    mid_re = mpf_shift(mpf_add(start[0], end[0]), -1)
    mid_im = mpf_shift(mpf_add(start[1], end[1]), -1)
    half_length = mpf_shift(
        mpf_add(mpf_abs(mpf_sub(end[0], start[0])), mpf_abs(mpf_sub(end[1], start[1]))), -1
    )
    coefficients = taylor_shift(poly, ComplexInterval.exact(mid_re, mid_im, prec))
    image = coefficients[0].widen(_taylor_tail(coefficients, half_length, prec))
    if image.re.is_positive():
        return 0
    if image.im.is_positive():
        return 1
    if image.re.is_negative():
        return 2
    if image.im.is_negative():
        return 3
    return None


def _label_path(
    poly: IntervalPoly, start: tuple[Mpf, Mpf], end: tuple[Mpf, Mpf], depth: int, max_depth: int, prec: int
) -> list[int] | None:
    label = _segment_label(poly, start, end, prec)
    if label is not None:
        return [label]
    if depth >= max_depth:
        return None
    mid = (mpf_shift(mpf_add(start[0], end[0]), -1), mpf_shift(mpf_add(start[1], end[1]), -1))
    first = _label_path(poly, start, mid, depth + 1, max_depth, prec)
    if first is None:
        return None
    second = _label_path(poly, mid, end, depth + 1, max_depth, prec)
    if second is None:
        return None
    return first + second


def winding_count(
    poly: IntervalPoly,
    rectangle: tuple[Mpf, Mpf, Mpf, Mpf],
    segments: int = 8,
    max_depth: int = 10,
) -> int | None:
    """
    以輻角原理計算矩形 (re_lo, re_hi, im_lo, im_hi) 內的根數 (含重數)。

    輪廓逆時針分段，每段的影像包圍必須落在某個座標開半平面內；
    相鄰標籤差 ±1 記為 ±1/4 圈。任何一段無法判定時回傳 None。
    """
    re_lo, re_hi, im_lo, im_hi = rectangle
    prec = max(c.prec for c in poly)
    corners = [(re_lo, im_lo), (re_hi, im_lo), (re_hi, im_hi), (re_lo, im_hi)]
    labels: list[int] = []
    for index, start in enumerate(corners):
        end = corners[(index + 1) % 4]
        step_re = mpf_div(mpf_sub(end[0], start[0]), from_man_exp(segments, 0), prec, round_floor)
        step_im = mpf_div(mpf_sub(end[1], start[1]), from_man_exp(segments, 0), prec, round_floor)
        points = [start]
        for k in range(1, segments):
            points.append(
                (
                    mpf_add(start[0], mpf_mul(step_re, from_man_exp(k, 0))),
                    mpf_add(start[1], mpf_mul(step_im, from_man_exp(k, 0))),
                )
            )
        points.append(end)
        for a, b in zip(points, points[1:], strict=False):
            piece = _label_path(poly, a, b, 0, max_depth, prec)
            if piece is None:
                return None
            labels.extend(piece)

    quarters = 0
    for current, following in zip(labels, labels[1:] + labels[:1], strict=True):
        step = _QUARTER_STEP.get((following - current) % 4)
        if step is None:
            return None
        quarters += step
    if quarters % 4 != 0:
        return None
    return quarters // 4


def _cluster_boxes(boxes: set[tuple[int, int]]) -> list[_IndexRect]:
    """將倖存方塊以 8 鄰接聚類，再反覆合併外擴後重疊的叢集。"""
    graph = nx.Graph()
    graph.add_nodes_from(boxes)
    for i, j in boxes:
        for di in (-1, 0, 1):
            for dj in (-1, 0, 1):
                if (di or dj) and (i + di, j + dj) in boxes:
                    graph.add_edge((i, j), (i + di, j + dj))

    rects = []
    for component in nx.connected_components(graph):
        rects.append(
            _IndexRect(
                min(i for i, _ in component),
                max(i for i, _ in component),
                min(j for _, j in component),
                max(j for _, j in component),
            )
        )

    while True:
        merge_graph = nx.Graph()
        merge_graph.add_nodes_from(range(len(rects)))
        for a in range(len(rects)):
            for b in range(a + 1, len(rects)):
                if rects[a].inflated().overlaps(rects[b].inflated()):
                    merge_graph.add_edge(a, b)
        groups = [sorted(group) for group in nx.connected_components(merge_graph)]
        if len(groups) == len(rects):
            break
        rects = [_IndexRect.union([rects[k] for k in group]) for group in groups]

    return sorted(rects, key=lambda r: (r.i_lo, r.j_lo))


def _fallback_disk(exponent: int, degree: int, prec: int) -> list[ComplexDisk]:
    """覆蓋整個 Cauchy 正方形的單一圓盤。"""
    zero = DyadicInterval.exact(fzero, prec)
    return [ComplexDisk(zero, zero, from_man_exp(3, exponent - 1), degree)]


@functools.lru_cache(maxsize=256)
def root_enclosures(
    poly: IntervalPoly, precision: int, settings: RootIsolationSettings = RootIsolationSettings()
) -> tuple[ComplexDisk, ...]:
    """
    回傳覆蓋族中每個多項式所有複數根的圓盤，圓盤根數總和等於次數。

    Raises:
        RootEnclosureError: 首項係數區間包含 0。
    """
    degree = len(poly) - 1
    bound = cauchy_root_bound(poly)
    if degree == 0:
        return ()
    prec = max(precision, max(c.prec for c in poly))
    exponent = _bound_exponent(bound)
    target_bits = settings.resolution_bits(precision)
    final_level = exponent + 1 + target_bits

    boxes = {(0, 0)}
    for level in range(final_level + 1):
        radius = from_man_exp(3, exponent - 1 - level)
        survivors = set()
        for i, j in boxes:
            center = ComplexInterval.exact(
                from_man_exp(2 * i + 1 - 2**level, exponent - level),
                from_man_exp(2 * j + 1 - 2**level, exponent - level),
                prec,
            )
            if _box_may_contain_root(poly, center, radius, prec):
                survivors.add((i, j))
        if len(survivors) > settings.max_level_boxes:
            logging.warning(f"根包圍在第 {level} 層保留 {len(survivors)} 個方塊，退回整體圓盤")
            return tuple(_fallback_disk(exponent, degree, prec))
        if level == final_level:
            boxes = survivors
            break
        boxes = {(2 * i + di, 2 * j + dj) for i, j in survivors for di in (0, 1) for dj in (0, 1)}

    half_grid = 2 ** (final_level - 1)

    def corner(index: int) -> Mpf:
        return from_man_exp(index - half_grid, -target_bits)

    disks: list[ComplexDisk] = []
    total = 0
    for rect in _cluster_boxes(boxes):
        contour = rect.inflated()
        count = winding_count(
            poly,
            (corner(contour.i_lo), corner(contour.i_hi + 1), corner(contour.j_lo), corner(contour.j_hi + 1)),
            settings.contour_segments,
            settings.contour_max_depth,
        )
        if count is None:
            logging.debug(f"叢集 {rect} 的輻角計數失敗，退回整體圓盤")
            return tuple(_fallback_disk(exponent, degree, prec))
        if count == 0:
            continue
        re_lo, re_hi = corner(rect.i_lo), corner(rect.i_hi + 1)
        im_lo, im_hi = corner(rect.j_lo), corner(rect.j_hi + 1)
        half_w = mpf_shift(mpf_sub(re_hi, re_lo), -1)
        half_h = mpf_shift(mpf_sub(im_hi, im_lo), -1)
        radius = mpf_sqrt(mpf_add(mpf_mul(half_w, half_w), mpf_mul(half_h, half_h)), prec, round_ceiling)
        disks.append(
            ComplexDisk(
                DyadicInterval.exact(mpf_shift(mpf_add(re_lo, re_hi), -1), prec),
                DyadicInterval.exact(mpf_shift(mpf_add(im_lo, im_hi), -1), prec),
                radius,
                count,
            )
        )
        total += count

    if total != degree:
        logging.debug(f"根數總和 {total} 不等於次數 {degree}，退回整體圓盤")
        return tuple(_fallback_disk(exponent, degree, prec))
    logging.debug(f"根包圍完成 (p={precision}): {', '.join(str(d) for d in disks)}")
    return tuple(disks)
