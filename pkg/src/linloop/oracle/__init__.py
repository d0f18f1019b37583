# src/linloop/oracle/__init__.py
"""
獨立的基準真值工具: 精確模擬、1×1 判定、約束擾動、隨機抽樣與模擬稽核。
"""

from .audits import AuditReport, audit_escaping, audit_trapped, trapped_witness
from .perturbation import perturb_constraint
from .reference import exact_char_poly, exact_solve
from .sampler import sample_instances, write_samples
from .scalar_oracle import ScalarAnswer, decide_1x1, is_boundary_1x1
from .simulator import (
    BitSizeExceeded,
    EscapedAt,
    LeftAt,
    StaysInside,
    StillInsideAfter,
    simulate_escape,
    simulate_escape_affine,
    simulate_stays_closed,
)

__all__ = [
    "AuditReport",
    "BitSizeExceeded",
    "EscapedAt",
    "LeftAt",
    "ScalarAnswer",
    "StaysInside",
    "StillInsideAfter",
    "audit_escaping",
    "audit_trapped",
    "decide_1x1",
    "exact_char_poly",
    "exact_solve",
    "is_boundary_1x1",
    "perturb_constraint",
    "sample_instances",
    "simulate_escape",
    "simulate_escape_affine",
    "simulate_stays_closed",
    "trapped_witness",
    "write_samples",
]
