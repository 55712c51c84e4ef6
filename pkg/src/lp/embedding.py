"""
Alpha-Embeddings and the Duality Map
omega -> p u rho^{1/p} carries the predual into L_p (p = 2/(1-alpha));
the duality map sends the alpha-coordinate to the (-alpha)-coordinate
"""

from dataclasses import dataclass
from typing import Dict

import numpy as np

from src.algebra.algebra import AlgebraElement, NormalFunctional, apply_functional
from src.algebra.matrix_functions import compact_svd
from src.utils.errors import DomainError
from .lp_space import (
    LpVector,
    conjugate_order,
    left_multiply,
    pairing,
    scaled_power_sum,
    schatten_norm,
)


def alpha_to_order(alpha: float) -> float:
    """p = 2 / (1 - alpha) for alpha in (-1, 1)"""
    alpha = float(alpha)
    if not -1.0 < alpha < 1.0:
        raise DomainError(f"alpha out of (-1,1): {alpha}")
    return 2.0 / (1.0 - alpha)


def order_to_alpha(p: float) -> float:
    return 1.0 - 2.0 / float(p)


def _spectral_map(blocks, scale_in: float, exponent: float, scale_out: float):
    """Blockwise U_s diag(scale_out * (s / scale_in) ** exponent) Vh_s"""
    mapped = []
    for b in blocks:
        u, s, vh = compact_svd(b)
        mapped.append((u * (scale_out * (s / scale_in) ** exponent)) @ vh)
    return mapped


def alpha_embed(omega: NormalFunctional, alpha: float) -> LpVector:
    """
    alpha-embedding l_alpha(omega) = p u rho^{1/p}

    Args:
        omega: normal functional with polar decomposition (u, rho)
        alpha: in (-1, 1)

    Returns:
        LpVector: element of order p = 2 / (1 - alpha)

    Example:
        1x1 block, omega = 8, alpha = 1/3 -> p = 3, X = 6
    """
    p = alpha_to_order(alpha)
    return LpVector(omega.shape, p, _spectral_map(omega.blocks, 1.0, 1.0 / p, p))


def alpha_unembed(x: LpVector, alpha: float) -> NormalFunctional:
    """Inverse of alpha_embed: W = u |x/p|^p where x/p = u |x/p|"""
    p = alpha_to_order(alpha)
    if abs(p - x.order) > 1e-9 * p:
        raise DomainError(f"order {x.order} does not match alpha={alpha} (p={p})")
    return NormalFunctional(x.shape, _spectral_map(x.blocks, x.order, x.order, 1.0))


def duality_map(x: LpVector) -> LpVector:
    """
    x -> x~ = q u |x/p|^{p-1}, an element of L_q

    0 maps to 0; the map is an involution up to the order swap.
    """
    p = x.order
    q = conjugate_order(p)
    return LpVector(x.shape, q, _spectral_map(x.blocks, p, p - 1.0, q))


@dataclass(frozen=True, eq=False)
class DualityReport:
    """Residuals of ||x~/q||_q^q = ||x/p||_p^p and Re<x, x~> = pq ||x/p||_p^p"""

    x: LpVector
    x_tilde: LpVector
    norm_defect: float
    pairing_defect: float

    @property
    def magnitude(self) -> float:
        p = self.x.order
        return p * conjugate_order(p) * scaled_power_sum(self.x)

    def to_dict(self) -> Dict:
        return {
            "p": self.x.order,
            "q": self.x_tilde.order,
            "norm_defect": self.norm_defect,
            "pairing_defect": self.pairing_defect,
        }


def duality_report(x: LpVector) -> DualityReport:
    x_tilde = duality_map(x)
    p, q = x.order, x_tilde.order
    base = scaled_power_sum(x)
    norm_defect = abs(scaled_power_sum(x_tilde) - base)
    pairing_defect = abs(pairing(x, x_tilde).real - p * q * base)
    return DualityReport(x, x_tilde, norm_defect, pairing_defect)


def norming_functional(x: LpVector) -> LpVector:
    """
    Unit vector v in L_q with Re<x/||x||_p, v> = 1: v = ||x/p||^{1-p} x~/q

    Raises:
        DomainError: for x = 0
    """
    if x.is_zero():
        raise DomainError("the zero vector has no norming functional")
    p = x.order
    q = conjugate_order(p)
    scale = (schatten_norm(x) / p) ** (1.0 - p) / q
    return duality_map(x) * scale


def normalized_duality_map(x: LpVector) -> LpVector:
    """F(x) = ||x||_p v_x: ||F(x)||_q = ||x||_p and <x, F(x)> = ||x||_p^2"""
    if x.is_zero():
        return LpVector.zeros(x.shape, conjugate_order(x.order))
    return norming_functional(x) * schatten_norm(x)


def duality_identity_residual(omega: NormalFunctional, a: AlgebraElement, alpha: float) -> float:
    """
    |<l_alpha(omega), a l_{-alpha}(omega)> - pq omega(a)| for positive omega

    Exact for hermitian a; for non-hermitian a only the real part is an identity.
    """
    if not omega.is_positive:
        raise DomainError("duality identity is stated for positive functionals")
    x = alpha_embed(omega, alpha)
    x_tilde = duality_map(x)
    p, q = x.order, x_tilde.order
    lhs = pairing(x, left_multiply(a, x_tilde))
    return float(abs(lhs - p * q * apply_functional(omega, a)))


def hermiticity_defect(x: LpVector) -> float:
    return float(max(np.max(np.abs(b - b.conj().T), initial=0.0) for b in x.blocks))
