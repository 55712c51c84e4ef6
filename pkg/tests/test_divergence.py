import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.algebra.algebra import AlgebraShape, NormalFunctional
from src.divergence import (
    alpha_divergence,
    classical_alpha_divergence,
    continuity_estimate,
    cosine_residual,
    divergence_Dp,
    divergence_neighbourhoods,
    duality_symmetry_residual,
    first_argument_convexity_gap,
    hellinger_S0,
    joint_convexity_gap,
    pythagorean_residual,
    scalar_bounds,
    scaling_inequality_gap,
    sphere_convexity_gap,
    sphere_divergence,
    sphere_point,
    symmetry_residual,
)
from src.lp.embedding import alpha_embed, alpha_to_order
from src.lp.lp_space import LpVector, schatten_norm
from src.lp.potential import potential
from src.utils.errors import DomainError
from src.utils.sampling import (
    random_functional,
    random_hermitian_element,
    random_lp_vector,
    random_positive_functional,
)

ALPHAS = [-0.6, -1 / 3, 0.0, 1 / 3, 0.6]
ORDERS = [1.5, 2.0, 3.0]
WORKED_S0 = 0.422291236


class TestScalarBounds:

    @pytest.mark.parametrize("p", [1.5, 2.0, 3.0, 7.0])
    def test_vanish_at_one(self, p):
        bounds = scalar_bounds(1.0, p)
        assert bounds["f"] == pytest.approx(0.0, abs=1e-12)
        assert bounds["g"] == pytest.approx(0.0, abs=1e-12)

    def test_at_zero(self):
        assert scalar_bounds(0.0, 2.0) == {"f": 2.0, "g": 2.0}

    @pytest.mark.parametrize("p", ORDERS)
    def test_nonnegative_and_convex_on_grid(self, p):
        t = np.linspace(0.0, 10.0, 401)
        bounds = scalar_bounds(t, p)
        for values in (bounds["f"], bounds["g"]):
            assert np.all(values >= -1e-12)
            assert np.all(np.diff(values, 2) > 0)

    def test_negative_argument(self):
        with pytest.raises(DomainError):
            scalar_bounds(-0.1, 2.0)


class TestDp:

    @pytest.mark.parametrize("p", ORDERS)
    def test_self_divergence_vanishes(self, shape, rng, p):
        x = random_lp_vector(shape, p, rng)
        assert abs(divergence_Dp(x, x).value) <= 1e-10 * (1.0 + potential(x))

    @pytest.mark.parametrize("p", ORDERS)
    def test_zero_second_argument(self, shape, rng, p):
        x = random_lp_vector(shape, p, rng)
        result = divergence_Dp(x, LpVector.zeros(shape, p))
        assert_allclose(result.value, potential(x), rtol=1e-12)
        assert result.lower_bound == 0.0

    def test_p2_is_half_squared_distance(self, shape, rng):
        x, y = random_lp_vector(shape, 2.0, rng), random_lp_vector(shape, 2.0, rng)
        assert_allclose(divergence_Dp(x, y).value, 0.5 * schatten_norm(x - y) ** 2, rtol=1e-10)

    @pytest.mark.parametrize("p", ORDERS)
    def test_lower_bound(self, shape, rng, p):
        for _ in range(50):
            x, y = random_lp_vector(shape, p, rng), random_lp_vector(shape, p, rng)
            result = divergence_Dp(x, y)
            assert result.value >= result.lower_bound - 1e-9
            assert result.lower_bound >= -1e-12

    @pytest.mark.parametrize("p", ORDERS)
    def test_cosine_law_and_duality_symmetry(self, shape, rng, p):
        x, y, z = (random_lp_vector(shape, p, rng) for _ in range(3))
        assert cosine_residual(x, x, x) <= 1e-10
        assert cosine_residual(x, y, z, include_symmetry=True) <= 1e-9
        assert duality_symmetry_residual(x, y) <= 1e-9

    @pytest.mark.parametrize("t", [0.25, 0.5, 0.75])
    def test_convex_in_first_argument(self, shape, rng, t):
        x1, x2, y = (random_lp_vector(shape, 3.0, rng) for _ in range(3))
        assert first_argument_convexity_gap(x1, x2, y, t) >= -1e-9

    def test_order_mismatch(self, qubit):
        with pytest.raises(DomainError):
            divergence_Dp(LpVector.zeros(qubit, 2.0), LpVector.zeros(qubit, 3.0))


class TestAlphaDivergence:

    def test_worked_example(self, worked_pair):
        phi, psi = worked_pair
        assert alpha_divergence(phi, psi, 0.0).value == pytest.approx(WORKED_S0, abs=1e-9)
        assert hellinger_S0(phi, psi) == pytest.approx(WORKED_S0, abs=1e-9)

    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_orthogonal_supports(self, alpha):
        p = alpha_to_order(alpha)
        q = p / (p - 1)
        value = alpha_divergence(NormalFunctional.diagonal([1, 0]), NormalFunctional.diagonal([0, 1]), alpha)
        assert value.value == pytest.approx(p + q)
        assert value.value == pytest.approx(p * q)

    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_positivity_and_equality(self, shape, rng, alpha):
        phi, psi = random_positive_functional(shape, rng), random_positive_functional(shape, rng)
        result = alpha_divergence(phi, psi, alpha)
        assert result.value >= result.lower_bound - 1e-9
        assert result.lower_bound >= -1e-12
        assert abs(alpha_divergence(phi, phi, alpha).value) <= 1e-9

    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_symmetry(self, shape, rng, alpha):
        phi, psi = random_positive_functional(shape, rng), random_positive_functional(shape, rng)
        assert symmetry_residual(phi, psi, alpha) <= 1e-9

    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_pythagorean_relation(self, shape, rng, alpha):
        phi, psi, sigma = (random_functional(shape, rng) for _ in range(3))
        assert pythagorean_residual(phi, phi, phi, alpha) <= 1e-10
        assert pythagorean_residual(phi, psi, sigma, alpha) <= 1e-9

    def test_hellinger_matches_alpha_zero(self, shape, rng):
        for omega_1, omega_2 in (
            (random_positive_functional(shape, rng), random_positive_functional(shape, rng)),
            (random_functional(shape, rng), random_functional(shape, rng)),
        ):
            assert_allclose(hellinger_S0(omega_1, omega_2), alpha_divergence(omega_1, omega_2, 0.0).value,
                            rtol=1e-10, atol=1e-10)

    def test_hellinger_orthogonal_pure_states(self):
        assert hellinger_S0(NormalFunctional.diagonal([1, 0]), NormalFunctional.diagonal([0, 1])) == pytest.approx(4.0)

    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_classical_reduction(self, rng, alpha):
        rho, nu = rng.dirichlet(np.ones(4)), rng.dirichlet(np.ones(4))
        value = alpha_divergence(NormalFunctional.classical(rho), NormalFunctional.classical(nu), alpha).value
        assert_allclose(value, classical_alpha_divergence(rho, nu, alpha), atol=1e-12)

    def test_classical_rejects_negative(self):
        with pytest.raises(DomainError):
            classical_alpha_divergence([0.5, -0.5], [0.5, 0.5], 0.0)

    def test_alpha_out_of_range(self, worked_pair):
        with pytest.raises(DomainError, match="alpha out of"):
            alpha_divergence(*worked_pair, 1.5)


class TestSphereDivergence:

    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_matches_general_formula(self, shape, rng, alpha):
        phi = random_positive_functional(shape, rng, normalize=True)
        psi = random_positive_functional(shape, rng, normalize=True)
        assert_allclose(sphere_divergence(phi, psi, alpha), alpha_divergence(phi, psi, alpha).value, atol=1e-10)
        assert sphere_divergence(phi, phi, alpha) == pytest.approx(0.0, abs=1e-10)

    def test_orthogonal_pure_states(self):
        p = alpha_to_order(0.5)
        value = sphere_divergence(NormalFunctional.diagonal([1, 0]), NormalFunctional.diagonal([0, 1]), 0.5)
        assert value == pytest.approx(p * p / (p - 1))

    def test_off_sphere(self, worked_pair):
        phi, _ = worked_pair
        with pytest.raises(DomainError):
            sphere_divergence(phi * 2.0, phi, 0.0)


class TestEstimates:

    def test_scaling_equal_parameters(self, worked_pair):
        gaps = scaling_inequality_gap(*worked_pair, 0.2, 0.2)
        assert gaps["gap1"] == pytest.approx(0.0, abs=1e-12)
        assert gaps["gap2"] == pytest.approx(0.0, abs=1e-12)

    def test_scaling_inequalities(self, shape, rng):
        for _ in range(20):
            phi, psi = random_positive_functional(shape, rng), random_positive_functional(shape, rng)
            alpha, beta = sorted(rng.uniform(-0.9, 0.9, size=2))
            gaps = scaling_inequality_gap(phi, psi, alpha, beta)
            assert gaps["gap1"] >= -1e-9
            assert gaps["gap2"] >= -1e-9

    def test_scaling_requires_order(self, worked_pair):
        with pytest.raises(DomainError):
            scaling_inequality_gap(*worked_pair, 0.5, -0.5)

    def test_scaling_requires_positive(self, qubit, rng):
        with pytest.raises(DomainError):
            scaling_inequality_gap(random_functional(qubit, rng), random_functional(qubit, rng), -0.5, 0.5)

    def test_neighbourhood_inclusions(self, shape, rng):
        for _ in range(20):
            phi, psi = random_positive_functional(shape, rng), random_positive_functional(shape, rng)
            alpha, beta = sorted(rng.uniform(-0.9, 0.9, size=2))
            radius = float(rng.uniform(0.05, 3.0))
            assert divergence_neighbourhoods(phi, psi, alpha, beta, radius)["consistent"]

    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_continuity_estimate(self, shape, rng, alpha):
        for _ in range(10):
            phi, psi = random_positive_functional(shape, rng), random_positive_functional(shape, rng)
            estimate = continuity_estimate(phi, psi, random_hermitian_element(shape, rng), alpha)
            assert estimate["lhs"] <= estimate["sharp_bound"] + 1e-9
            assert estimate["sharp_bound"] <= estimate["bound"]

    @pytest.mark.parametrize("t", [0.25, 0.5, 0.75])
    def test_joint_convexity(self, shape, rng, t):
        functionals = [random_positive_functional(shape, rng) for _ in range(4)]
        assert joint_convexity_gap(*functionals, alpha=0.3, t=t) >= -1e-9

    @pytest.mark.parametrize("p", [1.5, 2.0, 3.0, 4.0])
    def test_sphere_convexity(self, shape, rng, p):
        for _ in range(20):
            x = sphere_point(random_lp_vector(shape, p, rng))
            y = sphere_point(random_lp_vector(shape, p, rng))
            assert sphere_convexity_gap(x, y) >= -1e-10

    def test_sphere_convexity_needs_sphere_points(self, qubit, rng):
        x = sphere_point(random_lp_vector(qubit, 3.0, rng))
        with pytest.raises(DomainError):
            sphere_convexity_gap(x, x * 2.0)

    def test_sphere_point_of_zero(self, qubit):
        with pytest.raises(DomainError):
            sphere_point(LpVector.zeros(qubit, 2.0))
