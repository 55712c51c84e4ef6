"""
Verification Package
"""

from .suite_config import SuiteConfig, load_suite_config
from .checks import CHECKS, CheckContext
from .property_suite import PropertySuite, SuiteReport

__all__ = [
    "SuiteConfig",
    "load_suite_config",
    "CHECKS",
    "CheckContext",
    "PropertySuite",
    "SuiteReport",
]
