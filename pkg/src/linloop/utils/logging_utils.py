# src/linloop/utils/logging_utils.py
"""
提供與日誌記錄相關的通用工具和過濾器。
"""

# 1. 標準庫導入
import logging
import sys

# 2. 第三方庫導入
# (無)

# 3. 本專案導入
# (無)

COVER_LOG_PREFIX = "[cover]"

_LEVELS = {-1: logging.ERROR, 0: logging.WARNING, 1: logging.INFO}


class BudgetRoundFilter(logging.Filter):
    """
    攔截覆蓋驗證器逐方塊輸出的 '[cover]' 除錯訊息，除非詳細程度 ≥ 3 (-vvv)。
    """

    def __init__(self, verbosity: int = 0):
        super().__init__()
        self.verbosity = verbosity

    def filter(self, record: logging.LogRecord) -> bool:
        if self.verbosity >= 3:
            return True
        return not record.getMessage().startswith(COVER_LOG_PREFIX)


def level_for(verbosity: int) -> int:
    """-q → ERROR，預設 WARNING，-v → INFO，-vv 以上 → DEBUG。"""
    if verbosity >= 2:
        return logging.DEBUG
    return _LEVELS.get(verbosity, logging.ERROR)


def configure_logging(verbosity: int = 0):
    """設定根日誌器: 單一寫往標準錯誤的 StreamHandler，標準輸出保留給判定結果。"""
    root_logger = logging.getLogger()
    level = level_for(verbosity)
    root_logger.setLevel(level)

    for handler in list(root_logger.handlers):
        if getattr(handler, "_linloop", False):
            root_logger.removeHandler(handler)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(logging.Formatter("%(asctime)s - %(levelname)s - %(message)s"))
    console_handler.addFilter(BudgetRoundFilter(verbosity))
    console_handler._linloop = True
    root_logger.addHandler(console_handler)
