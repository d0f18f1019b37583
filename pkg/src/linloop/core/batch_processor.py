# src/linloop/core/batch_processor.py
"""
批次判定: 對一個目錄中的所有實例檔案執行 decide，並彙整結果。
"""

# 1. 標準庫導入
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any

# 2. 第三方庫導入
# (無)

# 3. 本專案導入
from linloop.core.decision_driver import decide
from linloop.core.parallel_manager import ParallelManager
from linloop.errors import LinloopError
from linloop.parsers.instance_parser import load_instance
from linloop.semidecision.budget import BudgetSchedule


@dataclass(frozen=True)
class BatchResult:
    """單一檔案的判定摘要；error 不為 None 時其他欄位無意義。"""

    path: str
    outcome: str | None = None
    budget_used: int | None = None
    formula: str | None = None
    boxes_examined: int = 0
    error: str | None = None

    @property
    def failed(self) -> bool:
        return self.error is not None


def _worker_decide_file(args: tuple[str, dict[str, Any]]) -> BatchResult:
    """
    [Worker] 讀取並判定單一實例檔案。
    """
    path_str, context = args
    config = context["config"]
    try:
        inst = load_instance(Path(path_str))
        verdict = decide(
            inst,
            max_budget=int(config["decide"]["max_budget"]),
            schedule=BudgetSchedule.from_config(config),
            cross_check=bool(config["decide"]["cross_check"]),
        )
    except (LinloopError, OSError) as e:
        logging.error(f"判定 {path_str} 失敗: {e}")
        return BatchResult(path_str, error=str(e))
    except Exception as e:
        logging.error(f"判定 {path_str} 時發生未預期的錯誤: {e}", exc_info=True)
        return BatchResult(path_str, error=f"{type(e).__name__}: {e}")

    formula = verdict.certificate.formula.value if verdict.certificate is not None else None
    return BatchResult(
        path_str, verdict.outcome.value, verdict.budget_used, formula, verdict.stats.boxes_examined
    )


class BatchProcessor:
    """將目錄中的實例檔案分派給 ParallelManager 並依檔名順序回傳結果。"""

    def __init__(self, config: dict[str, Any], max_workers: int | None = None):
        self.config = config
        self.parallel_manager = ParallelManager(max_workers or config.get("parallel", {}).get("max_workers"))

    @staticmethod
    def discover(directory: Path) -> list[Path]:
        """列出目錄中的所有 .json 實例檔案 (依檔名排序)。"""
        if not directory.is_dir():
            raise NotADirectoryError(f"批次輸入不是目錄: {directory}")
        return sorted(directory.glob("*.json"))

    def run(self, paths: list[Path]) -> list[BatchResult]:
        logging.info(f"========== 開始批次判定: {len(paths)} 個實例 ==========")
        results = self.parallel_manager.execute_map(
            task_func=_worker_decide_file,
            items=[str(p) for p in paths],
            global_context={"config": self.config},
        )
        failures = sum(1 for r in results if r.failed)
        logging.info(f"批次判定完成: {len(results) - failures} 個成功, {failures} 個失敗")
        return results
