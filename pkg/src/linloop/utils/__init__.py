# src/linloop/utils/__init__.py
"""
通用工具函式套件。
"""

from .logging_utils import BudgetRoundFilter, configure_logging

__all__ = ["BudgetRoundFilter", "configure_logging"]
