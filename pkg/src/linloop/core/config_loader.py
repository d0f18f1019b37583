# src/linloop/core/config_loader.py
"""
負責載入與合併分析設定 (預算排程、覆蓋驗證、根包圍、模擬稽核、平行化)。
"""

# 1. 標準庫導入
import copy
import logging
from pathlib import Path
from typing import Any

# 2. 第三方庫導入
import yaml

# 3. 本專案導入
from linloop.semidecision.budget import BudgetSchedule

DEFAULT_ANALYSIS_CONFIG: dict[str, Any] = {
    "budget": {
        "base_precision": 53,
        "precision_step": 32,
        "base_depth": 4,
        "depth_step": 2,
        "grid_offset": 2,
    },
    "cover": {
        "sphere_margin_exponent": 4,
        "max_boxes": 200000,
    },
    "spectral": {
        "resolution_offset": 6,
        "resolution_divisor": 12,
        "contour_segments": 8,
        "contour_max_depth": 10,
    },
    "decide": {
        "max_budget": 8,
        "cross_check": True,
    },
    "simulation": {
        "max_numerator_bits": 1000000,
        "trapped_steps": 200,
        "escape_steps": 10000,
        "escape_points": 100,
    },
    "parallel": {
        "max_workers": None,
    },
}


class ConfigLoader:
    """載入 YAML 設定檔，並將使用者設定遞迴合併到預設設定之上。"""

    def __init__(self, config_path: Path | None = None):
        self.config_path = config_path
        user_config: dict[str, Any] = {}
        if config_path is not None:
            user_config = self._load_yaml(config_path) or {}
        self.config = self._merge_configs(copy.deepcopy(DEFAULT_ANALYSIS_CONFIG), user_config)

    @staticmethod
    def _load_yaml(path: Path) -> dict[str, Any] | None:
        """安全地載入一個 YAML 檔案。"""
        if not path.is_file():
            logging.error(f"指定的設定檔不存在: {path}")
            return None
        try:
            with open(path, encoding="utf-8") as f:
                data = yaml.safe_load(f)
        except yaml.YAMLError as e:
            logging.error(f"解析設定檔 '{path.name}' 時發生錯誤: {e}")
            return None
        if data is not None and not isinstance(data, dict):
            logging.error(f"設定檔 '{path.name}' 的頂層必須是映射，已忽略")
            return None
        return data

    @staticmethod
    def _merge_configs(default: dict, user: dict) -> dict:
        """遞迴地合併使用者設定到預設設定中。"""
        for key, value in user.items():
            if isinstance(value, dict) and isinstance(default.get(key), dict):
                default[key] = ConfigLoader._merge_configs(default[key], value)
            else:
                default[key] = value
        return default

    def section(self, name: str) -> dict[str, Any]:
        return self.config.get(name, {})

    def override(self, dotted_key: str, value: Any):
        """以命令列旗標覆寫設定值 (例如 'decide.max_budget')；value 為 None 時不變。"""
        if value is None:
            return
        keys = dotted_key.split(".")
        node = self.config
        for key in keys[:-1]:
            node = node.setdefault(key, {})
        node[keys[-1]] = value
        logging.debug(f"命令列覆寫設定 {dotted_key} = {value}")

    def budget_schedule(self) -> BudgetSchedule:
        return BudgetSchedule.from_config(self.config)
