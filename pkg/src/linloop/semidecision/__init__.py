# src/linloop/semidecision/__init__.py
"""
穩健逃逸與穩健受困的預算化半判定器。
"""

from .budget import BudgetSchedule
from .checkers import (
    check_robust_escaping_affine,
    check_robust_escaping_linear,
    check_robust_trapped_affine,
    check_robust_trapped_linear,
)
from .sphere_cover import BudgetedResult, CoverStatus, SphereBox, cover_verify

__all__ = [
    "BudgetSchedule",
    "BudgetedResult",
    "CoverStatus",
    "SphereBox",
    "check_robust_escaping_affine",
    "check_robust_escaping_linear",
    "check_robust_trapped_affine",
    "check_robust_trapped_linear",
    "cover_verify",
]
