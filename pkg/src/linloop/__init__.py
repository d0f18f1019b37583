# src/linloop/__init__.py
"""
linloop: 線性 / 仿射迴圈穩健終止性的最大部分判定程序。
"""

from .core.decision_driver import decide, replay_certificate
from .models.instance import LoopInstance, LoopKind
from .models.verdict import Certificate, Outcome, Verdict
from .parsers.instance_parser import load_instance, parse_instance

__all__ = [
    "Certificate",
    "LoopInstance",
    "LoopKind",
    "Outcome",
    "Verdict",
    "decide",
    "load_instance",
    "parse_instance",
    "replay_certificate",
]
