# src/linloop/oracle/audits.py
"""
以精確模擬稽核判定結果。

- 受困: 由證書構造一個有理數見證點，檢查它嚴格位於開多面體內，且軌跡在 steps 步內留在閉多面體中。
- 逃逸: 以固定種子抽樣開多面體內的有理數點，檢查每條軌跡都在 steps 步內離開。
"""

# 1. 標準庫導入
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

# 2. 第三方庫導入
import numpy as np

# 3. 本專案導入
from linloop.errors import PreconditionError
from linloop.models.instance import LoopInstance, RationalData, constraint_values, in_open_polyhedron
from linloop.models.verdict import Certificate, Formula, Outcome, Verdict
from linloop.oracle.reference import (
    exact_adjugate,
    exact_char_poly,
    exact_solve,
    odd_roots_between,
    refine_simple_root,
)
from linloop.oracle.simulator import (
    DEFAULT_MAX_BITS,
    BitSizeExceeded,
    LeftAt,
    StillInsideAfter,
    simulate_escape,
    simulate_escape_affine,
    simulate_stays_closed,
)

MAX_WITNESS_BITS = 4096


@dataclass(frozen=True)
class AuditReport:
    passed: bool
    checked: int = 0
    failures: int = 0
    details: list[str] = field(default_factory=list)


def _witness_bits(A: list[list[Fraction]], lam_lo: Fraction, steps: int) -> int:
    """特徵向量的近似誤差沿軌跡最多放大 (‖A‖∞ / λ)^steps 倍。"""
    norm = max(sum(abs(x) for x in row) for row in A)
    ratio = max(Fraction(2), norm / lam_lo)
    growth = math.ceil(steps * math.log2(ratio))
    return min(MAX_WITNESS_BITS, 96 + growth)


def _signed(data: RationalData, v: list[Fraction]) -> list[Fraction] | None:
    """回傳 ±v 中滿足 Bv ≻ 0 的一個；兩者都不滿足時回傳 None。"""
    values = constraint_values(data.B, None, v)
    if all(x > 0 for x in values):
        return v
    if all(x < 0 for x in values):
        return [-x for x in v]
    return None


def _approximate_eigenvector(data: RationalData, lam: Fraction) -> list[Fraction] | None:
    n = len(data.A)
    shifted = [[data.A[i][j] - (lam if i == j else 0) for j in range(n)] for i in range(n)]
    adj = exact_adjugate(shifted)
    columns = [[adj[i][j] for i in range(n)] for j in range(n)]
    best = max(columns, key=lambda col: max(abs(x) for x in col))
    if all(x == 0 for x in best):
        return None
    return _signed(data, best)


def _box_midpoint(data: RationalData, certificate: Certificate) -> list[Fraction] | None:
    if certificate.witness_box is None:
        return None
    return _signed(data, [(lo + hi) / 2 for lo, hi in certificate.witness_box])


def _eigen_direction(data: RationalData, certificate: Certificate, steps: int) -> list[Fraction] | None:
    a, b = certificate.sign_change
    coeffs = exact_char_poly(data.A)
    bits = _witness_bits(data.A, a, steps)
    for lo, hi in odd_roots_between(coeffs, a, b):
        lam = refine_simple_root(coeffs, lo, hi, bits)
        v = _approximate_eigenvector(data, lam)
        if v is not None:
            logging.debug(f"見證特徵值 λ ≈ {float(lam):.12g}，精度 {bits} 位元")
            return v
    logging.warning("伴隨矩陣無法給出嚴格同號的特徵向量，改用證書中的見證方塊中點")
    return _box_midpoint(data, certificate)


def _fixed_point(data: RationalData) -> list[Fraction] | None:
    n = len(data.A)
    shifted = [[data.A[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)]
    try:
        return exact_solve(shifted, [-x for x in data.b])
    except PreconditionError:
        return None


def trapped_witness(inst: LoopInstance, certificate: Certificate, steps: int = 200) -> list[Fraction] | None:
    """
    由受困證書構造有理數起始點。

    - 不動點子句: 精確不動點 x* = −(A − I)^(−1) b。
    - 線性特徵值子句: 近似特徵向量 v (Bv ≻ 0)。
    - 仿射特徵值子句: x* + t·v，t 使初始邊際為正；1 ∈ σ(A) 時無法構造，回傳 None。
    """
    if certificate.formula.is_escaping:
        raise PreconditionError(f"{certificate.formula.value} 不是受困公式")
    data = inst.rational_data()
    if certificate.formula is Formula.AFFINE_TRAPPED_FIXED_POINT:
        return _fixed_point(data)

    v = _eigen_direction(data, certificate, steps)
    if v is None or certificate.formula is Formula.LINEAR_TRAPPED:
        return v
    x_star = _fixed_point(data)
    if x_star is None:
        return None
    deficit = min(constraint_values(data.B, data.eta, x_star))
    gain = min(constraint_values(data.B, None, v))
    t = max(Fraction(1), 2 * (abs(deficit) + 1) / gain)
    return [x + t * y for x, y in zip(x_star, v, strict=True)]


def audit_trapped(
    inst: LoopInstance, verdict: Verdict, steps: int = 200, max_bits: int = DEFAULT_MAX_BITS
) -> AuditReport:
    if verdict.outcome is not Outcome.ROBUST_TRAPPED:
        raise PreconditionError(f"判定結果為 {verdict.outcome.value}，不是 robust_trapped")
    data = inst.rational_data()
    x = trapped_witness(inst, verdict.certificate, steps)
    if x is None:
        return AuditReport(True, 0, 0, ["無法構造見證點 (1 ∈ σ(A) 或特徵向量退化)"])
    if not in_open_polyhedron(data.B, data.eta, x):
        return AuditReport(False, 1, 1, ["見證點不嚴格位於開多面體內"])
    result = simulate_stays_closed(data.A, data.B, x, steps, b=data.b, eta=data.eta, max_bits=max_bits)
    if isinstance(result, LeftAt):
        return AuditReport(False, 1, 1, [f"見證軌跡於第 {result.k} 步離開閉多面體"])
    if isinstance(result, BitSizeExceeded):
        return AuditReport(True, 1, 0, [f"見證軌跡於第 {result.k} 步超過位元上限，稽核中止"])
    return AuditReport(True, 1, 0, [f"見證軌跡在 {steps} 步內留在閉多面體中"])


def sample_interior_points(
    data: RationalData, points: int, seed: int, attempts_per_point: int = 50
) -> list[list[Fraction]]:
    """以 numpy 亂數在多個尺度的二進位格點上抽樣，只保留嚴格位於 P(B, η) 內的點。"""
    rng = np.random.default_rng(seed)
    n = len(data.A)
    found: list[list[Fraction]] = []
    for attempt in range(points * attempts_per_point):
        scale = 2 ** (attempt % 5)
        ks = rng.integers(-256, 257, size=n)
        x = [Fraction(int(k) * scale, 256) for k in ks]
        if in_open_polyhedron(data.B, data.eta, x):
            found.append(x)
            if len(found) == points:
                break
    return found


def audit_escaping(
    inst: LoopInstance,
    verdict: Verdict,
    points: int = 100,
    steps: int = 10_000,
    seed: int = 0,
    max_bits: int = DEFAULT_MAX_BITS,
) -> AuditReport:
    if verdict.outcome is not Outcome.ROBUST_ESCAPING:
        raise PreconditionError(f"判定結果為 {verdict.outcome.value}，不是 robust_escaping")
    data = inst.rational_data()
    samples = sample_interior_points(data, points, seed)
    details = []
    if len(samples) < points:
        details.append(f"只抽到 {len(samples)} 個內點 (目標 {points})")
    failures = 0
    for x in samples:
        if inst.is_affine:
            result = simulate_escape_affine(data.A, data.b, data.B, data.eta, x, steps, max_bits)
        else:
            result = simulate_escape(data.A, data.B, x, steps, max_bits)
        if isinstance(result, StillInsideAfter):
            failures += 1
            details.append(f"起點 {[str(v) for v in x]} 在 {steps} 步內沒有離開")
        elif isinstance(result, BitSizeExceeded):
            details.append(f"起點 {[str(v) for v in x]} 於第 {result.k} 步超過位元上限")
    logging.info(f"逃逸稽核: 檢查 {len(samples)} 個起點，失敗 {failures} 個")
    return AuditReport(failures == 0, len(samples), failures, details)
