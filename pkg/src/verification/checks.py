"""
Property Checks
Named numerical checks of the toolkit's identities and inequalities.
Every check returns report rows whose residual is a violation magnitude:
a row passes when residual <= tolerance.
"""

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

import numpy as np
from scipy import linalg

from src.algebra.algebra import AlgebraShape, NormalFunctional, opnorm, polar_decompose
from src.channels.kraus import (
    choi_matrix,
    monotonicity_gap,
    random_channel,
    trace_preservation_defect,
)
from src.divergence.alpha_divergence import (
    alpha_divergence,
    classical_alpha_divergence,
    hellinger_S0,
    pythagorean_residual,
    sphere_divergence,
    symmetry_residual,
)
from src.divergence.divergence import cosine_residual, divergence_Dp, duality_symmetry_residual
from src.divergence.estimates import (
    continuity_estimate,
    divergence_neighbourhoods,
    joint_convexity_gap,
    scaling_inequality_gap,
    sphere_convexity_gap,
    sphere_point,
)
from src.lp.connections import alpha_geodesic
from src.lp.embedding import (
    alpha_embed,
    alpha_to_order,
    alpha_unembed,
    duality_identity_residual,
    duality_map,
    duality_report,
    order_to_alpha,
)
from src.lp.lp_space import conjugate_order, pairing, scaled_power_sum, schatten_norm
from src.lp.potential import (
    fenchel_young_gap,
    finite_difference_derivative,
    legendre_residual,
    potential_directional_derivative,
)
from src.projection.alpha_projection import alpha_project, projection_norm_bound
from src.projection.certificates import optimality_residuals
from src.projection.convex_sets import AffineSlice, ConeHull, ConvexSetSpec, NormBall
from src.projection.solver import ProjectionSolver, SolverOptions
from src.projection.sphere import tangent_project
from src.quasientropy.modular import alpha_via_quasientropy, moment_residuals, normalized_profile
from src.utils.sampling import (
    random_functional,
    random_hermitian_element,
    random_lp_vector,
    random_positive_functional,
    random_shape,
)
from .suite_config import SuiteConfig

WORKED_EXAMPLE_S0 = 0.422291236
PROJECTION_ORDERS = (1.5, 3.0)

CheckFunction = Callable[["CheckContext"], List[Dict]]
CHECKS: Dict[str, CheckFunction] = {}


def register(name: str):
    def decorator(func: CheckFunction) -> CheckFunction:
        CHECKS[name] = func
        return func
    return decorator


@dataclass
class CheckContext:
    """What a single check sees: its name, the run config and its own generator"""

    name: str
    config: SuiteConfig
    rng: np.random.Generator
    samples: int
    tolerance: float

    def shape(self) -> AlgebraShape:
        return random_shape(self.config.dims, self.rng)

    def solver_options(
        self,
        certificate_samples: int = 0,
        seed: Optional[int] = None,
        tolerance: Optional[float] = None
    ) -> SolverOptions:
        return SolverOptions(
            tolerance=tolerance or self.config.solver_tolerance,
            max_iter=self.config.solver_max_iter,
            certificate_samples=certificate_samples,
            seed=seed,
        )

    def seed(self) -> int:
        return int(self.rng.integers(2**31 - 1))

    def row(
        self,
        residual: float,
        p: Optional[float] = None,
        alpha: Optional[float] = None,
        samples: Optional[int] = None
    ) -> Dict:
        residual = float(residual)
        return {
            "check": self.name,
            "p": p,
            "alpha": alpha,
            "residual": residual,
            "tolerance": self.tolerance,
            "samples": self.samples if samples is None else samples,
            "pass": bool(residual <= self.tolerance),
        }

    def order_row(self, residual: float, p: float, samples: Optional[int] = None) -> Dict:
        return self.row(residual, p=float(p), alpha=order_to_alpha(p), samples=samples)

    def alpha_row(self, residual: float, alpha: float, samples: Optional[int] = None) -> Dict:
        return self.row(residual, p=alpha_to_order(alpha), alpha=float(alpha), samples=samples)


def relative(a: float, b: float) -> float:
    """|a - b| / (1 + max(|a|, |b|))"""
    return abs(a - b) / (1.0 + max(abs(a), abs(b)))


def violation(gap: float, scale: float = 0.0) -> float:
    """How far a quantity that should be >= 0 falls below zero"""
    return max(0.0, -gap) / (1.0 + abs(scale))


def _positive_pair(ctx: CheckContext, shape: AlgebraShape = None):
    shape = shape or ctx.shape()
    return (
        random_positive_functional(shape, ctx.rng),
        random_positive_functional(shape, ctx.rng),
    )


def _functional_distance(a: NormalFunctional, b: NormalFunctional) -> float:
    return (a - b).norm_1 / (1.0 + b.norm_1)


# ============= Algebra =============

@register("algebra.polar_roundtrip")
def polar_roundtrip(ctx: CheckContext) -> List[Dict]:
    worst = 0.0
    for _ in range(ctx.samples):
        omega = random_functional(ctx.shape(), ctx.rng)
        worst = max(worst, _functional_distance(polar_decompose(omega).recompose(), omega))
    return [ctx.row(worst)]


# ============= L_p =============

@register("lp.duality_identities")
def duality_identities(ctx: CheckContext) -> List[Dict]:
    rows = []
    for p in ctx.config.orders:
        worst = 0.0
        for _ in range(ctx.samples):
            report = duality_report(random_lp_vector(ctx.shape(), p, ctx.rng))
            base = scaled_power_sum(report.x)
            worst = max(
                worst,
                report.norm_defect / (1.0 + base),
                report.pairing_defect / (1.0 + report.magnitude),
            )
        rows.append(ctx.order_row(worst, p))
    return rows


@register("lp.double_duality")
def double_duality(ctx: CheckContext) -> List[Dict]:
    rows = []
    for p in ctx.config.orders:
        worst = 0.0
        for _ in range(ctx.samples):
            x = random_lp_vector(ctx.shape(), p, ctx.rng)
            back = duality_map(duality_map(x))
            worst = max(worst, schatten_norm(back - x) / (1.0 + schatten_norm(x)))
        rows.append(ctx.order_row(worst, p))
    return rows


@register("lp.legendre_derivative")
def legendre_derivative(ctx: CheckContext) -> List[Dict]:
    rows = []
    for p in ctx.config.orders:
        worst = 0.0
        for _ in range(ctx.samples):
            shape = ctx.shape()
            x = random_lp_vector(shape, p, ctx.rng)
            y = random_lp_vector(shape, p, ctx.rng)
            exact = potential_directional_derivative(x, y)
            numeric = finite_difference_derivative(x, y, h=1e-5)
            worst = max(worst, abs(numeric - exact) / max(1.0, abs(exact)))
        rows.append(ctx.order_row(worst, p))
    return rows


@register("lp.legendre_conjugacy")
def legendre_conjugacy(ctx: CheckContext) -> List[Dict]:
    rows = []
    for p in ctx.config.orders:
        worst = 0.0
        for _ in range(ctx.samples):
            x = random_lp_vector(ctx.shape(), p, ctx.rng)
            scale = p * conjugate_order(p) * scaled_power_sum(x)
            worst = max(worst, legendre_residual(x) / (1.0 + scale))
        rows.append(ctx.order_row(worst, p))
    return rows


@register("lp.fenchel_young")
def fenchel_young(ctx: CheckContext) -> List[Dict]:
    rows = []
    for p in ctx.config.orders:
        worst = 0.0
        for _ in range(ctx.samples):
            shape = ctx.shape()
            x = random_lp_vector(shape, p, ctx.rng)
            y = random_lp_vector(shape, p, ctx.rng)
            x_tilde = duality_map(x)
            scale = p * conjugate_order(p) * scaled_power_sum(x)
            worst = max(
                worst,
                violation(fenchel_young_gap(x_tilde, y), scale),
                abs(fenchel_young_gap(x_tilde, x)) / (1.0 + scale),
            )
        rows.append(ctx.order_row(worst, p))
    return rows


@register("lp.holder_inequality")
def holder_inequality(ctx: CheckContext) -> List[Dict]:
    rows = []
    for p in ctx.config.orders:
        q = conjugate_order(p)
        worst = 0.0
        for _ in range(ctx.samples):
            shape = ctx.shape()
            x = random_lp_vector(shape, p, ctx.rng)
            y = random_lp_vector(shape, q, ctx.rng)
            bound = schatten_norm(x) * schatten_norm(y)
            worst = max(worst, violation(bound - abs(pairing(x, y)), bound))
        rows.append(ctx.order_row(worst, p))
    return rows


@register("lp.embedding_roundtrip")
def embedding_roundtrip(ctx: CheckContext) -> List[Dict]:
    rows = []
    for alpha in ctx.config.alphas:
        worst = 0.0
        for _ in range(ctx.samples):
            omega = random_functional(ctx.shape(), ctx.rng)
            back = alpha_unembed(alpha_embed(omega, alpha), alpha)
            worst = max(worst, _functional_distance(back, omega))
        rows.append(ctx.alpha_row(worst, alpha))
    return rows


@register("lp.functional_identity")
def functional_identity(ctx: CheckContext) -> List[Dict]:
    rows = []
    for alpha in ctx.config.alphas:
        p = alpha_to_order(alpha)
        pq = p * conjugate_order(p)
        worst = 0.0
        for _ in range(ctx.samples):
            shape = ctx.shape()
            omega = random_positive_functional(shape, ctx.rng)
            a = random_hermitian_element(shape, ctx.rng)
            scale = pq * omega.norm_1 * opnorm(a)
            worst = max(worst, duality_identity_residual(omega, a, alpha) / (1.0 + scale))
        rows.append(ctx.alpha_row(worst, alpha))
    return rows


@register("lp.geodesic_endpoints")
def geodesic_endpoints(ctx: CheckContext) -> List[Dict]:
    rows = []
    for alpha in ctx.config.alphas:
        worst = 0.0
        for _ in range(ctx.samples):
            start, end = _positive_pair(ctx)
            worst = max(
                worst,
                _functional_distance(alpha_geodesic(start, end, alpha, 0.0), start),
                _functional_distance(alpha_geodesic(start, end, alpha, 1.0), end),
            )
        rows.append(ctx.alpha_row(worst, alpha))
    return rows


# ============= Divergences =============

@register("divergence.self_zero")
def self_zero(ctx: CheckContext) -> List[Dict]:
    rows = []
    for p in ctx.config.orders:
        worst = 0.0
        for _ in range(ctx.samples):
            x = random_lp_vector(ctx.shape(), p, ctx.rng)
            scale = p * conjugate_order(p) * scaled_power_sum(x)
            worst = max(worst, abs(divergence_Dp(x, x).value) / (1.0 + scale))
        rows.append(ctx.order_row(worst, p))
    return rows


@register("divergence.lower_bound")
def lower_bound(ctx: CheckContext) -> List[Dict]:
    rows = []
    for p in ctx.config.orders:
        worst = 0.0
        for _ in range(ctx.samples):
            shape = ctx.shape()
            x = random_lp_vector(shape, p, ctx.rng, scale=float(np.exp(ctx.rng.normal())))
            y = random_lp_vector(shape, p, ctx.rng, scale=float(np.exp(ctx.rng.normal())))
            d = divergence_Dp(x, y)
            worst = max(worst, violation(d.value - d.lower_bound, d.value))
        rows.append(ctx.order_row(worst, p))
    return rows


@register("divergence.duality_symmetry")
def duality_symmetry(ctx: CheckContext) -> List[Dict]:
    rows = []
    for p in ctx.config.orders:
        worst = 0.0
        for _ in range(ctx.samples):
            shape = ctx.shape()
            x = random_lp_vector(shape, p, ctx.rng)
            y = random_lp_vector(shape, p, ctx.rng)
            worst = max(worst, duality_symmetry_residual(x, y) / (1.0 + divergence_Dp(y, x).value))
        rows.append(ctx.order_row(worst, p))
    return rows


@register("divergence.cosine_law")
def cosine_law(ctx: CheckContext) -> List[Dict]:
    rows = []
    for p in ctx.config.orders:
        worst = 0.0
        for _ in range(ctx.samples):
            shape = ctx.shape()
            x, y, z = (random_lp_vector(shape, p, ctx.rng) for _ in range(3))
            scale = max(divergence_Dp(x, y).value, divergence_Dp(y, z).value, divergence_Dp(x, z).value)
            worst = max(worst, cosine_residual(x, y, z) / (1.0 + scale))
        rows.append(ctx.order_row(worst, p))
    return rows


@register("divergence.d2_half_norm")
def d2_half_norm(ctx: CheckContext) -> List[Dict]:
    worst = 0.0
    for _ in range(ctx.samples):
        shape = ctx.shape()
        x = random_lp_vector(shape, 2.0, ctx.rng)
        y = random_lp_vector(shape, 2.0, ctx.rng)
        worst = max(worst, relative(divergence_Dp(x, y).value, 0.5 * schatten_norm(x - y) ** 2))
    return [ctx.order_row(worst, 2.0)]


@register("divergence.worked_example")
def worked_example(ctx: CheckContext) -> List[Dict]:
    value = alpha_divergence(
        NormalFunctional.diagonal([0.5, 0.5]),
        NormalFunctional.diagonal([0.9, 0.1]),
        0.0,
    ).value
    return [ctx.alpha_row(abs(value - WORKED_EXAMPLE_S0), 0.0, samples=1)]


@register("divergence.classical_reduction")
def classical_reduction(ctx: CheckContext) -> List[Dict]:
    rows = []
    for alpha in ctx.config.alphas:
        worst = 0.0
        for _ in range(ctx.samples):
            n = int(ctx.rng.integers(2, 7))
            rho = ctx.rng.dirichlet(np.ones(n))
            nu = ctx.rng.dirichlet(np.ones(n))
            value = alpha_divergence(NormalFunctional.classical(rho), NormalFunctional.classical(nu), alpha).value
            worst = max(worst, relative(value, classical_alpha_divergence(rho, nu, alpha)))
        rows.append(ctx.alpha_row(worst, alpha))
    return rows


@register("divergence.hellinger")
def hellinger(ctx: CheckContext) -> List[Dict]:
    worst = 0.0
    for _ in range(ctx.samples):
        shape = ctx.shape()
        phi, psi = random_functional(shape, ctx.rng), random_functional(shape, ctx.rng)
        worst = max(worst, relative(alpha_divergence(phi, psi, 0.0).value, hellinger_S0(phi, psi)))
    return [ctx.alpha_row(worst, 0.0)]


@register("divergence.symmetry")
def alpha_symmetry(ctx: CheckContext) -> List[Dict]:
    rows = []
    for alpha in ctx.config.alphas:
        worst = 0.0
        for _ in range(ctx.samples):
            phi, psi = _positive_pair(ctx)
            scale = alpha_divergence(phi, psi, alpha).value
            worst = max(worst, symmetry_residual(phi, psi, alpha) / (1.0 + scale))
        rows.append(ctx.alpha_row(worst, alpha))
    return rows


@register("divergence.pythagorean")
def pythagorean(ctx: CheckContext) -> List[Dict]:
    rows = []
    for alpha in ctx.config.alphas:
        worst = 0.0
        for _ in range(ctx.samples):
            shape = ctx.shape()
            phi, psi, sigma = (random_positive_functional(shape, ctx.rng) for _ in range(3))
            scale = (
                alpha_divergence(phi, psi, alpha).value
                + alpha_divergence(psi, sigma, alpha).value
                + alpha_divergence(phi, sigma, alpha).value
            )
            worst = max(worst, pythagorean_residual(phi, psi, sigma, alpha) / (1.0 + scale))
        rows.append(ctx.alpha_row(worst, alpha))
    return rows


@register("divergence.joint_convexity")
def joint_convexity(ctx: CheckContext) -> List[Dict]:
    worst = 0.0
    for _ in range(ctx.samples):
        shape = ctx.shape()
        phi_1, psi_1, phi_2, psi_2 = (random_positive_functional(shape, ctx.rng) for _ in range(4))
        alpha = float(ctx.rng.choice(ctx.config.alphas))
        gap = joint_convexity_gap(phi_1, psi_1, phi_2, psi_2, alpha, float(ctx.rng.random()))
        worst = max(worst, violation(gap))
    return [ctx.row(worst)]


@register("divergence.scaling_inequalities")
def scaling_inequalities(ctx: CheckContext) -> List[Dict]:
    worst = 0.0
    for _ in range(ctx.samples):
        phi, psi = _positive_pair(ctx)
        alpha, beta = sorted(float(a) for a in ctx.rng.choice(ctx.config.alphas, size=2))
        gaps = scaling_inequality_gap(phi, psi, alpha, beta)
        worst = max(worst, violation(min(gaps["gap1"], gaps["gap2"])))
    return [ctx.row(worst)]


@register("divergence.neighbourhoods")
def neighbourhoods(ctx: CheckContext) -> List[Dict]:
    failures = 0
    for _ in range(ctx.samples):
        phi, psi = _positive_pair(ctx)
        alpha, beta = sorted(float(a) for a in ctx.rng.choice(ctx.config.alphas, size=2))
        s_beta = alpha_divergence(phi, psi, beta).value
        radius = max(s_beta, 1e-3) * float(np.exp(ctx.rng.uniform(-1.0, 1.0)))
        if not divergence_neighbourhoods(phi, psi, alpha, beta, radius)["consistent"]:
            failures += 1
    return [ctx.row(failures)]


def _continuity_rows(ctx: CheckContext, key: str) -> List[Dict]:
    rows = []
    for alpha in ctx.config.alphas:
        worst = 0.0
        for _ in range(ctx.samples):
            shape = ctx.shape()
            phi, psi = _positive_pair(ctx, shape)
            a = random_hermitian_element(shape, ctx.rng)
            estimate = continuity_estimate(phi, psi, a, alpha)
            worst = max(worst, violation(estimate[key] - estimate["lhs"], estimate[key]))
        rows.append(ctx.alpha_row(worst, alpha))
    return rows


@register("divergence.continuity_estimate")
def continuity(ctx: CheckContext) -> List[Dict]:
    return _continuity_rows(ctx, "bound")


@register("divergence.continuity_sharp")
def continuity_sharp(ctx: CheckContext) -> List[Dict]:
    return _continuity_rows(ctx, "sharp_bound")


# ============= Quasi-entropies =============

@register("quasientropy.pairing_vs_spectral")
def pairing_vs_spectral(ctx: CheckContext) -> List[Dict]:
    rows = []
    for alpha in ctx.config.alphas:
        worst = 0.0
        for _ in range(ctx.samples):
            phi, psi = _positive_pair(ctx)
            worst = max(
                worst,
                relative(alpha_divergence(phi, psi, alpha).value, alpha_via_quasientropy(phi, psi, alpha)),
            )
        rows.append(ctx.alpha_row(worst, alpha))
    return rows


@register("quasientropy.moments")
def moments(ctx: CheckContext) -> List[Dict]:
    rows = []
    for alpha in ctx.config.alphas:
        worst = 0.0
        for _ in range(ctx.samples):
            phi, psi = _positive_pair(ctx)
            scale = 1.0 + phi.total().real + psi.total().real
            worst = max(worst, max(moment_residuals(phi, psi, alpha).values()) / scale)
        rows.append(ctx.alpha_row(worst, alpha))
    return rows


@register("quasientropy.profile_monotone")
def profile_monotone(ctx: CheckContext) -> List[Dict]:
    worst = 0.0
    for _ in range(ctx.samples):
        phi, psi = _positive_pair(ctx)
        values = [v for _, v in normalized_profile(phi, psi, ctx.config.alphas)]
        for before, after in zip(values, values[1:]):
            worst = max(worst, violation(before - after, before))
    return [ctx.row(worst)]


# ============= Channels =============

def _monotonicity_alphas(alphas: List[float]) -> List[float]:
    ordered = sorted(alphas)
    return sorted({ordered[0], ordered[len(ordered) // 2], ordered[-1]})


@register("channels.cptp")
def cptp(ctx: CheckContext) -> List[Dict]:
    worst = 0.0
    for _ in range(ctx.samples):
        channel = random_channel(ctx.shape(), ctx.shape(), ctx.rng)
        choi = choi_matrix(channel)
        min_eig = float(linalg.eigvalsh(0.5 * (choi + choi.conj().T)).min())
        worst = max(worst, trace_preservation_defect(channel), max(0.0, -min_eig))
    return [ctx.row(worst)]


@register("channels.monotonicity")
def monotonicity(ctx: CheckContext) -> List[Dict]:
    alphas = _monotonicity_alphas(ctx.config.alphas)
    worst = {alpha: 0.0 for alpha in alphas}
    for _ in range(ctx.samples):
        in_shape, out_shape = ctx.shape(), ctx.shape()
        channel = random_channel(in_shape, out_shape, ctx.rng)
        phi, psi = _positive_pair(ctx, in_shape)
        for alpha in alphas:
            worst[alpha] = max(worst[alpha], violation(monotonicity_gap(channel, phi, psi, alpha)))
    return [ctx.alpha_row(worst[alpha], alpha) for alpha in alphas]


# ============= Projections =============

def _random_set(ctx: CheckContext, kind: str, p: float, y_shape: AlgebraShape, y) -> ConvexSetSpec:
    if kind == "cone":
        return ConeHull(tuple(random_lp_vector(y_shape, p, ctx.rng) for _ in range(2)))
    if kind == "affine":
        base = random_lp_vector(y_shape, p, ctx.rng)
        return AffineSlice(base, (random_lp_vector(y_shape, p, ctx.rng),))
    center = random_lp_vector(y_shape, p, ctx.rng)
    return NormBall(center, 0.5 * schatten_norm(y - center))


@register("projection.cone_closed_form")
def cone_closed_form(ctx: CheckContext) -> List[Dict]:
    solver = ProjectionSolver(ctx.solver_options())
    worst = 0.0
    for _ in range(ctx.samples):
        shape = ctx.shape()
        generator = random_lp_vector(shape, 2.0, ctx.rng)
        y = random_lp_vector(shape, 2.0, ctx.rng)
        t_star = max(0.0, pairing(generator, y).real / pairing(generator, generator).real)
        result = solver.solve(y, ConeHull((generator,)))
        worst = max(worst, schatten_norm(result.x_m - generator * t_star) / (1.0 + schatten_norm(y)))
    return [ctx.order_row(worst, 2.0)]


@register("projection.certificates")
def certificates(ctx: CheckContext) -> List[Dict]:
    rows = []
    kinds = ("cone", "ball", "affine")
    for p in PROJECTION_ORDERS:
        worst = 0.0
        for k in range(ctx.samples):
            shape = ctx.shape()
            y = random_lp_vector(shape, p, ctx.rng)
            C = _random_set(ctx, kinds[k % len(kinds)], p, shape, y)
            result = ProjectionSolver(ctx.solver_options()).solve(y, C)
            residuals = optimality_residuals(
                result.x_m, y, C, samples=ctx.config.certificate_samples, seed=ctx.seed()
            )
            cert = max(0.0, residuals["normal_cone"], residuals["three_point"]) / (1.0 + result.value)
            if not result.converged:
                cert = max(cert, result.kkt_residual)
            worst = max(worst, cert)
        rows.append(ctx.order_row(worst, p))
    return rows


@register("projection.uniqueness")
def uniqueness(ctx: CheckContext) -> List[Dict]:
    rows = []
    tight = min(ctx.config.solver_tolerance, 1e-10)
    for p in PROJECTION_ORDERS:
        worst = 0.0
        for _ in range(ctx.samples):
            shape = ctx.shape()
            y = random_lp_vector(shape, p, ctx.rng)
            C = _random_set(ctx, "cone", p, shape, y)
            first = ProjectionSolver(ctx.solver_options(seed=ctx.seed(), tolerance=tight)).solve(y, C).x_m
            second = ProjectionSolver(ctx.solver_options(seed=ctx.seed(), tolerance=tight)).solve(y, C).x_m
            worst = max(worst, schatten_norm(first - second) / (1.0 + schatten_norm(first)))
        rows.append(ctx.order_row(worst, p))
    return rows


@register("projection.norm_bound")
def norm_bound(ctx: CheckContext) -> List[Dict]:
    rows = []
    for p in PROJECTION_ORDERS:
        worst = 0.0
        for _ in range(ctx.samples):
            shape = ctx.shape()
            y = random_lp_vector(shape, p, ctx.rng)
            C = _random_set(ctx, "cone", p, shape, y)
            bound = projection_norm_bound(y, C, ctx.solver_options())
            worst = max(worst, violation(bound["input_norm"] - bound["projection_norm"], bound["input_norm"]))
        rows.append(ctx.order_row(worst, p))
    return rows


@register("projection.alpha_pythagorean")
def alpha_pythagorean(ctx: CheckContext) -> List[Dict]:
    rows = []
    for alpha in ctx.config.alphas:
        p = alpha_to_order(alpha)
        worst = 0.0
        for _ in range(ctx.samples):
            shape = ctx.shape()
            psi = random_positive_functional(shape, ctx.rng)
            C = ConeHull(tuple(random_lp_vector(shape, p, ctx.rng) for _ in range(2)))
            projection = alpha_project(psi, C, alpha, ctx.solver_options(), samples=50, seed=ctx.seed())
            worst = max(worst, violation(projection.pythagorean_gap, projection.result.value))
        rows.append(ctx.alpha_row(worst, alpha))
    return rows


# ============= Sphere =============

@register("sphere.tangent_projector")
def tangent_projector(ctx: CheckContext) -> List[Dict]:
    rows = []
    for p in ctx.config.orders:
        worst = 0.0
        for _ in range(ctx.samples):
            shape = ctx.shape()
            x = sphere_point(random_lp_vector(shape, p, ctx.rng))
            y = random_lp_vector(shape, p, ctx.rng)
            once = tangent_project(x, y)
            twice = tangent_project(x, once)
            worst = max(
                worst,
                schatten_norm(twice - once) / (1.0 + schatten_norm(y)),
                schatten_norm(tangent_project(x, x)) / (1.0 + p),
            )
        rows.append(ctx.order_row(worst, p))
    return rows


@register("sphere.divergence_formula")
def sphere_formula(ctx: CheckContext) -> List[Dict]:
    rows = []
    for alpha in ctx.config.alphas:
        worst = 0.0
        for _ in range(ctx.samples):
            shape = ctx.shape()
            phi = random_positive_functional(shape, ctx.rng, normalize=True)
            psi = random_positive_functional(shape, ctx.rng, normalize=True)
            worst = max(
                worst,
                relative(sphere_divergence(phi, psi, alpha), alpha_divergence(phi, psi, alpha).value),
            )
        rows.append(ctx.alpha_row(worst, alpha))
    return rows


@register("sphere.convexity_estimate")
def sphere_convexity(ctx: CheckContext) -> List[Dict]:
    rows = []
    for p in ctx.config.orders:
        worst = 0.0
        for _ in range(ctx.samples):
            shape = ctx.shape()
            x = sphere_point(random_lp_vector(shape, p, ctx.rng))
            y = sphere_point(random_lp_vector(shape, p, ctx.rng))
            worst = max(worst, violation(sphere_convexity_gap(x, y)))
        rows.append(ctx.order_row(worst, p))
    return rows
