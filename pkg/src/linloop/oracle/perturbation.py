# src/linloop/oracle/perturbation.py
"""
約束擾動產生器: 給定 B1·v ≥ 0 與 B2·v ≤ 0，構造任意接近 v 且使兩個不等式變為嚴格的 ṽ。
"""

# 1. 標準庫導入
from collections.abc import Sequence
from fractions import Fraction

# 2. 第三方庫導入
# (無)

# 3. 本專案導入
from linloop.errors import LinearDependenceError, PreconditionError


def _dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(u, v, strict=True)), Fraction(0))


def _norm_sq(u: Sequence[Fraction]) -> Fraction:
    return _dot(u, u)


def perturb_constraint(
    v: Sequence[Fraction], b1: Sequence[Fraction], b2: Sequence[Fraction], eps: Fraction
) -> list[Fraction]:
    """
    ṽ = v + (ε/4)·u₁/(B1·B1) − (ε/4)·u₂/(B2·B2)，
    其中 u₁ = B1 − (B1·B2)/(B2·B2)·B2，u₂ = B2 − (B1·B2)/(B1·B1)·B1。

    若短列向量使 ‖ṽ − v‖ ≥ ε，則將 ε 逐次減半直到位移嚴格小於原本的 ε。
    結果的三個性質都以精確算術驗證。

    Raises:
        LinearDependenceError: B1 與 B2 線性相依。
        PreconditionError: eps ≤ 0，或 B1·v < 0，或 B2·v > 0。
    """
    v = [Fraction(x) for x in v]
    b1 = [Fraction(x) for x in b1]
    b2 = [Fraction(x) for x in b2]
    eps = Fraction(eps)
    if eps <= 0:
        raise PreconditionError(f"eps 必須為正，實際為 {eps}")

    n11, n22, n12 = _norm_sq(b1), _norm_sq(b2), _dot(b1, b2)
    # Cauchy–Schwarz 取等號 ⟺ 線性相依
    if n11 == 0 or n22 == 0 or n12 * n12 == n11 * n22:
        raise LinearDependenceError(f"約束列 {b1} 與 {b2} 線性相依")
    if _dot(b1, v) < 0 or _dot(b2, v) > 0:
        raise PreconditionError("需要 B1·v ≥ 0 且 B2·v ≤ 0")

    u1 = [x - n12 / n22 * y for x, y in zip(b1, b2, strict=True)]
    u2 = [y - n12 / n11 * x for x, y in zip(b1, b2, strict=True)]

    step = eps
    while True:
        shift = [step / 4 * x / n11 - step / 4 * y / n22 for x, y in zip(u1, u2, strict=True)]
        if _norm_sq(shift) < eps * eps:
            break
        step /= 2

    perturbed = [x + s for x, s in zip(v, shift, strict=True)]
    assert _dot(b1, perturbed) > 0 and _dot(b2, perturbed) < 0
    return perturbed
