"""
Sphere Layer
The radius-p sphere of L_p: tangent-plane projection pi_x and an empirical
modulus of continuity for the duality map restricted to the sphere
"""

from typing import Dict, List, Sequence

from src.algebra.algebra import AlgebraShape
from src.divergence.estimates import on_sphere, sphere_point
from src.lp.embedding import duality_map
from src.lp.lp_space import LpVector, conjugate_order, pairing, schatten_norm
from src.utils.errors import DomainError
from src.utils.sampling import make_rng, random_lp_vector


def tangent_project(x: LpVector, y: LpVector) -> LpVector:
    """
    pi_x(y) = y - (1/pq) Re<y, x~> x, the projection onto the tangent
    plane {v : Re<v, x~> = 0} at a sphere point x

    Raises:
        DomainError: if ||x||_p differs from p by more than 1e-8
    """
    if not on_sphere(x):
        raise DomainError(f"||x||_p = {schatten_norm(x):.12g} but the sphere has radius {x.order:g}")
    x.check_same_space(y)
    p = x.order
    q = conjugate_order(p)
    return y - x * (pairing(y, duality_map(x)).real / (p * q))


def sphere_duality_modulus(
    shape: AlgebraShape,
    p: float,
    scales: Sequence[float],
    pairs: int,
    seed: int
) -> List[Dict[str, float]]:
    """
    For each scale: the largest ||x - y||_p and ||x~ - y~||_q over random
    sphere pairs whose perturbation has size `scale`
    """
    rng = make_rng(seed)
    profile = []
    for scale in scales:
        max_in, max_out = 0.0, 0.0
        for _ in range(pairs):
            x = sphere_point(random_lp_vector(shape, p, rng))
            h = random_lp_vector(shape, p, rng)
            y = sphere_point(x + h * (scale / schatten_norm(h)))
            max_in = max(max_in, schatten_norm(x - y))
            max_out = max(max_out, schatten_norm(duality_map(x) - duality_map(y)))
        profile.append({"scale": float(scale), "input_distance": max_in, "output_distance": max_out})
    return profile
