"""
Channels Package
"""

from .kraus import (
    KrausChannel,
    apply_predual,
    chain_divergences,
    choi_matrix,
    compose,
    identity_channel,
    monotonicity_gap,
    partial_trace_channel,
    pinching_channel,
    random_channel,
    stochastic_matrix_channel,
    validate_channel,
)

__all__ = [
    "KrausChannel",
    "apply_predual",
    "chain_divergences",
    "choi_matrix",
    "compose",
    "identity_channel",
    "monotonicity_gap",
    "partial_trace_channel",
    "pinching_channel",
    "random_channel",
    "stochastic_matrix_channel",
    "validate_channel",
]
