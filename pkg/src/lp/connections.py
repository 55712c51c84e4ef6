"""
Connections and Geodesics
The +alpha and -alpha connections are flat in the embedded coordinates:
parallel transport is the identity on L_p (resp. L_q) and alpha-geodesics
are straight lines between embeddings.
"""

from src.algebra.algebra import NormalFunctional, check_same_shape
from src.utils.errors import DomainError
from .embedding import alpha_embed, alpha_unembed
from .lp_space import LpVector, are_conjugate, pairing


def parallel_transport(v: LpVector, x: LpVector, y: LpVector) -> LpVector:
    """Transport of a tangent vector v at x to y along the alpha-connection"""
    x.check_same_space(y)
    x.check_same_space(v)
    return v.with_blocks(v.blocks)


def dual_transport(w: LpVector, x: LpVector, y: LpVector) -> LpVector:
    """Transport of a cotangent vector w (order q) along the dual connection"""
    x.check_same_space(y)
    check_same_shape(w.shape, x.shape)
    if not are_conjugate(x.order, w.order):
        raise DomainError("dual transport acts on the conjugate space")
    return w.with_blocks(w.blocks)


def transport_pairing_defect(v: LpVector, w: LpVector, x: LpVector, y: LpVector) -> float:
    """|<U_{y,x} v, U*_{x,y} w> - <v, w>|; zero for dual pairs of connections"""
    moved = pairing(parallel_transport(v, x, y), dual_transport(w, y, x))
    return abs(moved - pairing(v, w))


def alpha_geodesic(
    omega_start: NormalFunctional,
    omega_end: NormalFunctional,
    alpha: float,
    t: float
) -> NormalFunctional:
    """Point at time t on the alpha-geodesic: l_alpha^{-1}((1-t) x_0 + t x_1)"""
    start = alpha_embed(omega_start, alpha)
    end = alpha_embed(omega_end, alpha)
    return alpha_unembed(start * (1.0 - t) + end * t, alpha)
