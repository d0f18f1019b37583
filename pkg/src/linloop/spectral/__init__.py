# src/linloop/spectral/__init__.py
"""
特徵多項式根的有效包圍與實譜分析。
"""

from .real_spectrum import (
    RealSegment,
    SignChange,
    Verification,
    odd_root_candidates,
    odd_root_witness,
    real_spectrum_above,
    verify_value_not_in_spectrum,
)
from .root_enclosures import ComplexDisk, RootIsolationSettings, cauchy_root_bound, root_enclosures, winding_count

__all__ = [
    "ComplexDisk",
    "RealSegment",
    "RootIsolationSettings",
    "SignChange",
    "Verification",
    "cauchy_root_bound",
    "odd_root_candidates",
    "odd_root_witness",
    "real_spectrum_above",
    "root_enclosures",
    "verify_value_not_in_spectrum",
    "winding_count",
]
