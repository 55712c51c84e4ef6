"""
Alpha-Projections
Projections of functionals onto sets given in alpha-coordinates, their
Pythagorean certificate, the normal-cone curve condition and a continuity
profile of the D_p-projection
"""

from dataclasses import dataclass
from typing import Dict, List, Sequence

from src.algebra.algebra import NormalFunctional
from src.divergence.alpha_divergence import alpha_divergence
from src.lp.embedding import alpha_embed, alpha_to_order, alpha_unembed
from src.lp.lp_space import LpVector, pairing, schatten_norm
from src.utils.errors import DomainError
from src.utils.sampling import make_rng
from .convex_sets import ConvexSetSpec
from .solver import ProjectionResult, SolverOptions, project_Dp


@dataclass
class AlphaProjection:
    """omega_m = l_alpha^{-1}(x_m) and the sampled Pythagorean gap"""

    omega_m: NormalFunctional
    result: ProjectionResult
    pythagorean_gap: float

    def to_dict(self) -> Dict:
        data = self.result.to_dict()
        data["pythagorean_gap"] = self.pythagorean_gap
        return data


def _check_order(C: ConvexSetSpec, alpha: float):
    p = alpha_to_order(alpha)
    if abs(C.order - p) > 1e-9 * p:
        raise DomainError(f"set lives in L_{C.order:g} but alpha={alpha} needs L_{p:g}")


def alpha_project(
    psi: NormalFunctional,
    C: ConvexSetSpec,
    alpha: float,
    options: SolverOptions = None,
    samples: int = 100,
    seed: int = 0
) -> AlphaProjection:
    """
    alpha-projection of psi onto l_alpha^{-1}(C)

    The gap is min over sampled sigma in C of
    S_alpha(sigma, psi) - S_alpha(omega_m, psi) - S_{-alpha}(omega_m, sigma),
    non-negative at the projection.
    """
    _check_order(C, alpha)
    result = project_Dp(alpha_embed(psi, alpha), C, options)
    omega_m = alpha_unembed(result.x_m, alpha)
    s_m = alpha_divergence(omega_m, psi, alpha).value

    rng = make_rng(seed)
    gap = float("inf")
    for x in C.anchor_points(result.x_m) + C.sample_points(samples, rng):
        sigma = alpha_unembed(x, alpha)
        value = (
            alpha_divergence(sigma, psi, alpha).value
            - s_m
            - alpha_divergence(omega_m, sigma, -alpha).value
        )
        gap = min(gap, value)
    return AlphaProjection(omega_m, result, float(gap))


def normal_cone_curve_residual(
    omega_m: NormalFunctional,
    psi: NormalFunctional,
    C: ConvexSetSpec,
    alpha: float,
    ts: Sequence[float] = (0.5, 1.0, 2.0, 5.0),
    samples: int = 100,
    seed: int = 0
) -> float:
    """
    Worst Re<x - x_m, x_t - l_{-alpha}(omega_m)> over samples x in C and t,
    with x_t = l_{-a}(omega_m) + t (l_{-a}(psi) - l_{-a}(omega_m))
    """
    _check_order(C, alpha)
    x_m = alpha_embed(omega_m, alpha)
    dual_m = alpha_embed(omega_m, -alpha)
    dual_psi = alpha_embed(psi, -alpha)
    members = C.anchor_points(x_m) + C.sample_points(samples, make_rng(seed))
    worst = -float("inf")
    for t in ts:
        x_t = dual_m + (dual_psi - dual_m) * t
        for x in members:
            worst = max(worst, pairing(x - x_m, x_t - dual_m).real)
    return float(worst)


def projection_continuity_profile(
    y: LpVector,
    C: ConvexSetSpec,
    direction: LpVector,
    scales: Sequence[float],
    options: SolverOptions = None
) -> List[float]:
    """||x_m(y + s h) - x_m(y)||_p for each scale s"""
    base = project_Dp(y, C, options).x_m
    return [
        schatten_norm(project_Dp(y + direction * s, C, options).x_m - base)
        for s in scales
    ]


def projection_norm_bound(y: LpVector, C: ConvexSetSpec, options: SolverOptions = None) -> Dict[str, float]:
    """||x_m||_p against ||y||_p; for 0 in C the projection never grows the norm"""
    if not C.contains_zero:
        raise DomainError("norm bound needs 0 in the set")
    x_m = project_Dp(y, C, options).x_m
    return {"projection_norm": schatten_norm(x_m), "input_norm": schatten_norm(y)}
