# src/linloop/core/__init__.py
"""
linloop 的核心協調器套件。

此套件負責設定載入、預算迴圈判定、證書重播與批次平行處理。
"""

from .batch_processor import BatchProcessor, BatchResult
from .config_loader import ConfigLoader
from .decision_driver import decide, replay_certificate
from .parallel_manager import ParallelManager

__all__ = [
    "BatchProcessor",
    "BatchResult",
    "ConfigLoader",
    "ParallelManager",
    "decide",
    "replay_certificate",
]
