# src/linloop/models/__init__.py
"""
資料模型: 項目來源、迴圈實例、判定結果與證書。
"""

from .entries import EntrySource, IntervalEntry, NegatedEntry, OracleEntry, RationalEntry
from .instance import LoopInstance, LoopKind, RationalData, RefinedInstance, homogenise
from .verdict import Certificate, DecisionStats, Formula, Outcome, Verdict

__all__ = [
    "Certificate",
    "DecisionStats",
    "EntrySource",
    "Formula",
    "IntervalEntry",
    "LoopInstance",
    "LoopKind",
    "NegatedEntry",
    "OracleEntry",
    "Outcome",
    "RationalData",
    "RationalEntry",
    "RefinedInstance",
    "Verdict",
    "homogenise",
]
