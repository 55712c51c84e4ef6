"""
Algebra Package
"""

from .algebra import (
    AlgebraShape,
    AlgebraElement,
    NormalFunctional,
    PolarDecomposition,
    apply_functional,
    check_same_shape,
    classify_functional,
    block_multiply,
    opnorm,
    polar_decompose,
    support_projection,
)

__all__ = [
    "AlgebraShape",
    "AlgebraElement",
    "NormalFunctional",
    "PolarDecomposition",
    "apply_functional",
    "check_same_shape",
    "classify_functional",
    "block_multiply",
    "opnorm",
    "polar_decompose",
    "support_projection",
]
