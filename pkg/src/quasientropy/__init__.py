"""
Quasi-Entropy Package
"""

from .modular import (
    ModularSpectrum,
    alpha_via_quasientropy,
    modular_spectrum,
    moment_residuals,
    normalized_profile,
    quasi_entropy,
)
from .scalar_functions import GpFunction, TabulatedFunction, resolve_function

__all__ = [
    "ModularSpectrum",
    "alpha_via_quasientropy",
    "modular_spectrum",
    "moment_residuals",
    "normalized_profile",
    "quasi_entropy",
    "GpFunction",
    "TabulatedFunction",
    "resolve_function",
]
