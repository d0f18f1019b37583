# src/linloop/semidecision/budget.py
"""
預算排程: 將預算 β 對應到工作精度、細分深度、變號候選格點與根包圍解析度。
"""

# 1. 標準庫導入
from dataclasses import dataclass
from typing import Any

# 2. 第三方庫導入
# (無)

# 3. 本專案導入
from linloop.spectral.root_enclosures import RootIsolationSettings


@dataclass(frozen=True)
class BudgetSchedule:
    base_precision: int = 53
    precision_step: int = 32
    base_depth: int = 4
    depth_step: int = 2
    grid_offset: int = 2
    sphere_margin_exponent: int = 4
    max_boxes: int = 200000
    root_isolation: RootIsolationSettings = RootIsolationSettings()

    @classmethod
    def from_config(cls, config: dict[str, Any]) -> "BudgetSchedule":
        """由已合併預設值的設定字典建立排程 (使用 budget、cover、spectral 三個區段)。"""
        budget = config.get("budget", {})
        cover = config.get("cover", {})
        spectral = config.get("spectral", {})
        defaults = cls()
        isolation_defaults = RootIsolationSettings()
        return cls(
            base_precision=int(budget.get("base_precision", defaults.base_precision)),
            precision_step=int(budget.get("precision_step", defaults.precision_step)),
            base_depth=int(budget.get("base_depth", defaults.base_depth)),
            depth_step=int(budget.get("depth_step", defaults.depth_step)),
            grid_offset=int(budget.get("grid_offset", defaults.grid_offset)),
            sphere_margin_exponent=int(cover.get("sphere_margin_exponent", defaults.sphere_margin_exponent)),
            max_boxes=int(cover.get("max_boxes", defaults.max_boxes)),
            root_isolation=RootIsolationSettings(
                resolution_offset=int(spectral.get("resolution_offset", isolation_defaults.resolution_offset)),
                resolution_divisor=int(spectral.get("resolution_divisor", isolation_defaults.resolution_divisor)),
                contour_segments=int(spectral.get("contour_segments", isolation_defaults.contour_segments)),
                contour_max_depth=int(spectral.get("contour_max_depth", isolation_defaults.contour_max_depth)),
            ),
        )

    def precision(self, budget: int) -> int:
        """p(β) = 53 + 32β (預設值)。"""
        return self.base_precision + self.precision_step * budget

    def depth(self, budget: int) -> int:
        """d(β) = 4 + 2β (預設值)。"""
        return self.base_depth + self.depth_step * budget

    def grid_exponent(self, budget: int) -> int:
        """變號候選端點的格點為 k/2^d，d ≤ β + 2，且 |k/2^d| ≤ 2^(β+2)。"""
        return budget + self.grid_offset
