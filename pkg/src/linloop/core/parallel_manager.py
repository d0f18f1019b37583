# src/linloop/core/parallel_manager.py
"""
批次判定的平行化管理器。

核心職責：
1. 封裝 ProcessPoolExecutor (spawn 啟動方式)，將實例檔案分派給工作程序。
2. 以輸入順序回傳結果，使批次輸出與排程無關。
3. 只有一個工作程序時直接在主程序中依序執行。
"""

# 1. 標準庫導入
import concurrent.futures
import logging
import multiprocessing
import os
from collections.abc import Callable
from typing import Any, TypeVar

# 2. 第三方庫導入
# (無)

# 3. 本專案導入
# (無)

T = TypeVar("T")  # 輸入項目類型
R = TypeVar("R")  # 回傳結果類型


class ParallelManager:
    """以 map 模式分派判定任務的類別。"""

    def __init__(self, max_workers: int | None = None):
        """
        Args:
            max_workers: 最大工作程序數。若為 None，則預設為 CPU 核心數。
        """
        self.max_workers = max_workers or os.cpu_count() or 1
        self.mp_context = multiprocessing.get_context("spawn")

    def execute_map(
        self,
        task_func: Callable[[tuple[T, dict[str, Any]]], R],
        items: list[T],
        global_context: dict[str, Any],
        chunksize: int = 1,
    ) -> list[R]:
        """
        對每個項目執行 task_func((item, global_context))，結果順序與 items 相同。

        Args:
            task_func: 可序列化的頂層函式；應自行攔截單一項目的錯誤並回傳錯誤結果。
            items: 要處理的項目列表 (通常是實例檔案路徑)。
            global_context: 注入到每個任務的唯讀上下文 (設定、預算上限等)。
            chunksize: 每個工作程序一次領取的任務數量。
        """
        total_items = len(items)
        if total_items == 0:
            return []

        task_args = [(item, global_context) for item in items]

        if self.max_workers == 1:
            logging.info(f"依序處理 {total_items} 個項目")
            results = []
            for i, args in enumerate(task_args):
                results.append(task_func(args))
                self._log_progress(i + 1, total_items)
            return results

        logging.info(f"啟動平行處理: {total_items} 個項目, {self.max_workers} 個工作程序 (Chunksize: {chunksize})")
        results: list[R] = []
        with concurrent.futures.ProcessPoolExecutor(
            max_workers=self.max_workers,
            mp_context=self.mp_context,
        ) as executor:
            for i, result in enumerate(executor.map(task_func, task_args, chunksize=chunksize)):
                results.append(result)
                self._log_progress(i + 1, total_items)
        return results

    @staticmethod
    def _log_progress(done: int, total: int):
        if done % 10 == 0 or done == total:
            logging.debug(f"平行進度: {done}/{total} 完成")
