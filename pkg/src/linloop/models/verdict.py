# src/linloop/models/verdict.py
"""
判定結果 (Verdict) 與可重新驗證的證書 (Certificate)。

證書中的所有數值都是精確有理數，序列化時以 "p/q" 字串表示。
"""

# 1. 標準庫導入
import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

# 2. 第三方庫導入
# (無)

# 3. 本專案導入
from linloop.models.entries import format_fraction

Bounds = tuple[Fraction, Fraction]


class Formula(enum.Enum):
    """被驗證的穩健性公式。"""

    LINEAR_ESCAPING = "linear_escaping"
    LINEAR_TRAPPED = "linear_trapped"
    AFFINE_ESCAPING = "affine_escaping"
    AFFINE_TRAPPED_FIXED_POINT = "affine_trapped_fixed_point"
    AFFINE_TRAPPED_EIGEN = "affine_trapped_eigen"

    @property
    def is_escaping(self) -> bool:
        return self in (Formula.LINEAR_ESCAPING, Formula.AFFINE_ESCAPING)


class Outcome(enum.Enum):
    ROBUST_ESCAPING = "robust_escaping"
    ROBUST_TRAPPED = "robust_trapped"
    UNKNOWN = "unknown"


def _bounds_to_list(bounds: Bounds) -> list[str]:
    return [format_fraction(bounds[0]), format_fraction(bounds[1])]


def _bounds_from_list(values: list[str]) -> Bounds:
    return Fraction(values[0]), Fraction(values[1])


def _box_to_list(box: tuple[Bounds, ...] | None) -> list[list[str]] | None:
    return None if box is None else [_bounds_to_list(b) for b in box]


def _box_from_list(values: list[list[str]] | None) -> tuple[Bounds, ...] | None:
    return None if values is None else tuple(_bounds_from_list(v) for v in values)


@dataclass(frozen=True)
class Certificate:
    """
    一次成功驗證所留下的有限證據。

    - 逃逸公式: segments 為被覆蓋的特徵值線段，box_count / max_depth 為覆蓋證明的統計。
    - 特徵值型受困公式: sign_change 為 (a, b)，sign_values 為 χ(a)、χ(b) 的區間值，
      witness_box / witness_lambda 為第一個使結論成立且未能否定前提的方塊。
    - 不動點型受困公式: solve_enclosure 包含 (A − I)^(-1) b，fixed_point_enclosure 包含 x*，
      constraint_margins 為 B·s + η 的區間 (全部嚴格小於 0)。
    """

    formula: Formula
    budget: int
    precision_bits: int
    depth_limit: int = 0
    box_count: int = 0
    max_depth: int = 0
    segments: tuple[Bounds, ...] = ()
    sign_change: Bounds | None = None
    sign_values: tuple[Bounds, Bounds] | None = None
    witness_box: tuple[Bounds, ...] | None = None
    witness_lambda: Bounds | None = None
    solve_enclosure: tuple[Bounds, ...] | None = None
    fixed_point_enclosure: tuple[Bounds, ...] | None = None
    constraint_margins: tuple[Bounds, ...] | None = None

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "formula": self.formula.value,
            "budget": self.budget,
            "precision_bits": self.precision_bits,
            "depth_limit": self.depth_limit,
            "box_count": self.box_count,
            "max_depth": self.max_depth,
            "segments": _box_to_list(self.segments),
        }
        if self.sign_change is not None:
            data["sign_change"] = _bounds_to_list(self.sign_change)
        if self.sign_values is not None:
            data["sign_values"] = [_bounds_to_list(v) for v in self.sign_values]
        if self.witness_box is not None:
            data["witness_box"] = _box_to_list(self.witness_box)
        if self.witness_lambda is not None:
            data["witness_lambda"] = _bounds_to_list(self.witness_lambda)
        if self.solve_enclosure is not None:
            data["solve_enclosure"] = _box_to_list(self.solve_enclosure)
        if self.fixed_point_enclosure is not None:
            data["fixed_point_enclosure"] = _box_to_list(self.fixed_point_enclosure)
        if self.constraint_margins is not None:
            data["constraint_margins"] = _box_to_list(self.constraint_margins)
        return data

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Certificate":
        sign_change = data.get("sign_change")
        sign_values = data.get("sign_values")
        witness_lambda = data.get("witness_lambda")
        return cls(
            formula=Formula(data["formula"]),
            budget=int(data["budget"]),
            precision_bits=int(data["precision_bits"]),
            depth_limit=int(data.get("depth_limit", 0)),
            box_count=int(data.get("box_count", 0)),
            max_depth=int(data.get("max_depth", 0)),
            segments=_box_from_list(data.get("segments")) or (),
            sign_change=None if sign_change is None else _bounds_from_list(sign_change),
            sign_values=None if sign_values is None else tuple(_bounds_from_list(v) for v in sign_values),
            witness_box=_box_from_list(data.get("witness_box")),
            witness_lambda=None if witness_lambda is None else _bounds_from_list(witness_lambda),
            solve_enclosure=_box_from_list(data.get("solve_enclosure")),
            fixed_point_enclosure=_box_from_list(data.get("fixed_point_enclosure")),
            constraint_margins=_box_from_list(data.get("constraint_margins")),
        )


@dataclass(frozen=True)
class DecisionStats:
    """決策過程的統計資料，只含確定性數值以保持輸出可重現。"""

    rounds: int = 0
    boxes_examined: int = 0
    max_depth: int = 0
    precision_bits: int = 0
    precision_capped: bool = False

    def to_dict(self) -> dict[str, Any]:
        return {
            "rounds": self.rounds,
            "boxes_examined": self.boxes_examined,
            "max_depth": self.max_depth,
            "precision_bits": self.precision_bits,
            "precision_capped": self.precision_capped,
        }


@dataclass(frozen=True)
class Verdict:
    """判定結果；Unknown 不帶證書，其餘結果一定帶證書。"""

    outcome: Outcome
    budget_used: int
    certificate: Certificate | None = None
    stats: DecisionStats = field(default_factory=DecisionStats)

    def __post_init__(self):
        if (self.outcome is Outcome.UNKNOWN) != (self.certificate is None):
            raise ValueError(f"結果 {self.outcome.value} 與證書的有無不一致")

    @property
    def decided(self) -> bool:
        return self.outcome is not Outcome.UNKNOWN

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {"verdict": self.outcome.value, "budget_used": self.budget_used}
        if self.certificate is not None:
            data["certificate"] = self.certificate.to_dict()
        data["stats"] = self.stats.to_dict()
        return data
