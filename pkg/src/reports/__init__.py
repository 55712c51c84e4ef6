"""
Reports Package
"""

from .report_generator import ReportGenerator, format_float
from .report_hasher import ReportHasher
from .reproducibility import ReproducibilityChecker

__all__ = [
    "ReportGenerator",
    "format_float",
    "ReportHasher",
    "ReproducibilityChecker",
]
