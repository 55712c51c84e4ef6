import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.algebra.algebra import AlgebraShape, NormalFunctional, apply_functional
from src.algebra.matrix_functions import psd_power
from src.lp import (
    LpVector,
    alpha_embed,
    alpha_geodesic,
    alpha_to_order,
    alpha_unembed,
    bilinear_form,
    conjugate_by,
    dual_transport,
    duality_identity_residual,
    duality_map,
    duality_report,
    fenchel_young_gap,
    finite_difference_derivative,
    holder_product,
    legendre_residual,
    normalized_duality_map,
    norming_functional,
    order_to_alpha,
    pairing,
    parallel_transport,
    potential,
    potential_directional_derivative,
    schatten_norm,
)
from src.lp.connections import transport_pairing_defect
from src.lp.embedding import hermiticity_defect
from src.lp.lp_space import scaled_power_sum
from src.lp.potential import convexity_gap
from src.utils.errors import DomainError, ShapeMismatchError
from src.utils.sampling import (
    random_functional,
    random_hermitian_element,
    random_lp_vector,
    random_positive_functional,
    random_unitary_element,
)

ORDERS = [1.5, 2.0, 3.0, 4.0]
SCALAR = AlgebraShape((1,))


def scalar_vector(value, p):
    return LpVector(SCALAR, p, [np.array([[value]])])


class TestOrders:

    @pytest.mark.parametrize("alpha, p", [(0.0, 2.0), (1 / 3, 3.0), (-1 / 3, 1.5), (0.5, 4.0)])
    def test_alpha_order_correspondence(self, alpha, p):
        assert alpha_to_order(alpha) == pytest.approx(p)
        assert order_to_alpha(p) == pytest.approx(alpha)

    @pytest.mark.parametrize("alpha", [-1.0, 1.0, 1.5])
    def test_alpha_out_of_range(self, alpha):
        with pytest.raises(DomainError, match="alpha out of"):
            alpha_to_order(alpha)

    @pytest.mark.parametrize("p", [1.0, 0.5, float("inf")])
    def test_order_rejected(self, p):
        with pytest.raises(DomainError):
            LpVector.zeros(SCALAR, p)


class TestEmbedding:

    def test_scalar_closed_form(self):
        x = alpha_embed(NormalFunctional.classical([8.0]), 1 / 3)
        assert x.order == pytest.approx(3.0)
        assert_allclose(x.blocks[0], [[6.0]], rtol=1e-12)
        assert_allclose(alpha_unembed(x, 1 / 3).blocks[0], [[8.0]], rtol=1e-12)

    def test_alpha_zero_is_twice_square_root(self, shape, rng):
        omega = random_positive_functional(shape, rng)
        x = alpha_embed(omega, 0.0)
        for block, rho in zip(x.blocks, omega.blocks):
            assert_allclose(block, 2.0 * psd_power(rho, 0.5), atol=1e-10)

    def test_zero_functional(self, shape):
        assert alpha_embed(NormalFunctional.zeros(shape), 0.5).is_zero()

    @pytest.mark.parametrize("alpha", [-0.5, 0.0, 0.5])
    def test_roundtrip(self, shape, rng, alpha):
        omega = random_functional(shape, rng)
        back = alpha_unembed(alpha_embed(omega, alpha), alpha)
        for w, v in zip(omega.blocks, back.blocks):
            assert np.max(np.abs(w - v)) <= 1e-10

    def test_unembed_order_mismatch(self, qubit, rng):
        x = alpha_embed(random_functional(qubit, rng), 0.0)
        with pytest.raises(DomainError):
            alpha_unembed(x, 0.5)

    @pytest.mark.parametrize("alpha", [-0.6, 0.0, 0.6])
    def test_hermiticity_and_positivity_transport(self, shape, rng, alpha):
        hermitian = NormalFunctional(shape, random_hermitian_element(shape, rng).blocks)
        assert alpha_embed(hermitian, alpha).is_hermitian()
        assert hermiticity_defect(alpha_embed(hermitian, alpha)) <= 1e-10
        assert alpha_embed(random_positive_functional(shape, rng), alpha).is_positive()
        assert not alpha_embed(random_functional(shape, rng), alpha).is_hermitian()


class TestNormsAndPairing:

    def test_identity_norm(self, qubit):
        assert schatten_norm(LpVector(qubit, 2.0, [np.eye(2)])) == pytest.approx(np.sqrt(2.0))

    def test_p2_is_frobenius(self, shape, rng):
        x = random_lp_vector(shape, 2.0, rng)
        frobenius = np.sqrt(sum(np.sum(np.abs(b) ** 2) for b in x.blocks))
        assert_allclose(schatten_norm(x), frobenius, rtol=1e-12)

    def test_pairing_identity(self, qubit):
        eye = LpVector(qubit, 2.0, [np.eye(2)])
        assert pairing(eye, eye) == pytest.approx(2.0)

    def test_pairing_needs_conjugate_orders(self, qubit):
        with pytest.raises(DomainError):
            pairing(LpVector.zeros(qubit, 3.0), LpVector.zeros(qubit, 3.0))

    def test_pairing_shape_mismatch(self, qubit):
        with pytest.raises(ShapeMismatchError):
            pairing(LpVector.zeros(qubit, 2.0), LpVector.zeros(AlgebraShape((3,)), 2.0))

    @pytest.mark.parametrize("alpha", [-0.5, 0.0, 1 / 3])
    def test_cross_term_of_diagonal_functionals(self, alpha):
        rho, nu = np.array([0.2, 0.5, 0.3]), np.array([0.6, 0.1, 0.3])
        x = alpha_embed(NormalFunctional.diagonal(rho), alpha)
        y = alpha_embed(NormalFunctional.diagonal(nu), -alpha)
        p, q = x.order, y.order
        expected = p * q * np.sum(rho ** (1 / p) * nu ** (1 / q))
        assert_allclose(pairing(x, y).real, expected, rtol=1e-12)

    @pytest.mark.parametrize("p", ORDERS)
    def test_holder_inequality(self, shape, rng, p):
        q = p / (p - 1)
        for _ in range(50):
            x, y = random_lp_vector(shape, p, rng), random_lp_vector(shape, q, rng)
            assert abs(pairing(x, y)) <= schatten_norm(x) * schatten_norm(y) * (1 + 1e-12)

    def test_independent_of_reference_basis(self, shape, rng):
        x, y = random_lp_vector(shape, 3.0, rng), random_lp_vector(shape, 1.5, rng)
        u = random_unitary_element(shape, rng)
        assert_allclose(pairing(conjugate_by(x, u), conjugate_by(y, u)), pairing(x, y), atol=1e-10)


class TestHolderProduct:

    def test_diagonal_product(self, qubit):
        first = LpVector(qubit, 2.0, [np.diag([2.0, 0.0])])
        second = LpVector(qubit, 2.0, [np.diag([3.0, 1.0])])
        product = holder_product([first, second])
        assert product.order == pytest.approx(1.0)
        assert_allclose(product.blocks[0], np.diag([6.0, 0.0]))
        assert product.norm == pytest.approx(6.0)
        assert product.norm <= schatten_norm(first) * schatten_norm(second)

    def test_identity_factor(self, qubit, rng):
        x = random_lp_vector(qubit, 3.0, rng)
        product = holder_product([x, LpVector(qubit, 3.0, [np.eye(2)])])
        assert product.order == pytest.approx(1.5)
        assert_allclose(product.blocks[0], x.blocks[0])

    def test_trace_cyclicity(self, shape, rng):
        x, y = random_lp_vector(shape, 2.0, rng), random_lp_vector(shape, 2.0, rng)
        assert_allclose(bilinear_form(x, y), bilinear_form(y, x), atol=1e-12)
        assert_allclose(holder_product([x, y]).trace_value, bilinear_form(x, y), atol=1e-12)

    def test_exponent_sum_too_large(self, qubit):
        with pytest.raises(DomainError):
            holder_product([LpVector.zeros(qubit, 1.5), LpVector.zeros(qubit, 1.5)])


class TestDualityMap:

    @pytest.mark.parametrize("p", ORDERS)
    def test_scaled_identity(self, p):
        x = LpVector(AlgebraShape((3,)), p, [p * np.eye(3)])
        x_tilde = duality_map(x)
        assert_allclose(x_tilde.blocks[0], (p / (p - 1)) * np.eye(3), atol=1e-12)

    def test_scalar_closed_form(self):
        x_tilde = duality_map(scalar_vector(6.0, 3.0))
        assert x_tilde.order == pytest.approx(1.5)
        assert_allclose(x_tilde.blocks[0], [[6.0]], rtol=1e-12)
        assert pairing(scalar_vector(6.0, 3.0), x_tilde).real == pytest.approx(36.0)

    def test_zero_maps_to_zero(self, shape):
        assert duality_map(LpVector.zeros(shape, 3.0)).is_zero()

    @pytest.mark.parametrize("p", ORDERS)
    def test_norm_and_pairing_identities(self, shape, rng, p):
        report = duality_report(random_lp_vector(shape, p, rng))
        scale = 1.0 + report.magnitude
        assert report.norm_defect <= 1e-9 * scale
        assert report.pairing_defect <= 1e-9 * scale

    @pytest.mark.parametrize("p", ORDERS)
    def test_double_duality(self, shape, rng, p):
        x = random_lp_vector(shape, p, rng)
        back = duality_map(duality_map(x))
        assert back.order == pytest.approx(p)
        assert schatten_norm(back - x) <= 1e-9 * (1.0 + schatten_norm(x))

    def test_norming_functional_scalar(self):
        assert_allclose(norming_functional(scalar_vector(6.0, 3.0)).blocks[0], [[1.0]], rtol=1e-12)

    @pytest.mark.parametrize("p", ORDERS)
    def test_norming_functional_is_unit(self, shape, rng, p):
        x = random_lp_vector(shape, p, rng)
        v = norming_functional(x)
        assert schatten_norm(v) == pytest.approx(1.0, abs=1e-10)
        assert (pairing(x, v).real / schatten_norm(x)) == pytest.approx(1.0, abs=1e-10)

    def test_norming_functional_of_zero(self, qubit):
        with pytest.raises(DomainError):
            norming_functional(LpVector.zeros(qubit, 2.0))

    @pytest.mark.parametrize("p", [1.5, 3.0])
    def test_normalized_duality_map(self, shape, rng, p):
        x = random_lp_vector(shape, p, rng)
        f = normalized_duality_map(x)
        norm = schatten_norm(x)
        assert_allclose(schatten_norm(f), norm, rtol=1e-10)
        assert_allclose(pairing(x, f).real, norm ** 2, rtol=1e-10)

    @pytest.mark.parametrize("alpha", [-0.5, 0.0, 0.5])
    def test_duality_identity_hermitian(self, shape, rng, alpha):
        omega = random_positive_functional(shape, rng)
        a = random_hermitian_element(shape, rng)
        p = alpha_to_order(alpha)
        scale = 1.0 + p * (p / (p - 1)) * abs(apply_functional(omega, a))
        assert duality_identity_residual(omega, a, alpha) <= 1e-9 * scale

    def test_duality_identity_needs_positive(self, qubit, rng):
        with pytest.raises(DomainError):
            duality_identity_residual(random_functional(qubit, rng), random_hermitian_element(qubit, rng), 0.0)


class TestPotential:

    def test_scalar_closed_form(self):
        x = scalar_vector(6.0, 3.0)
        assert potential(x) == pytest.approx(12.0)
        assert potential(duality_map(x)) == pytest.approx(24.0)

    def test_zero(self, shape):
        assert potential(LpVector.zeros(shape, 3.0)) == 0.0

    def test_alpha_zero_closed_form(self, shape, rng):
        omega = random_positive_functional(shape, rng)
        assert_allclose(potential(alpha_embed(omega, 0.0)), 2.0 * omega.total().real, rtol=1e-10)

    def test_derivative_at_zero(self, shape, rng):
        y = random_lp_vector(shape, 3.0, rng)
        assert potential_directional_derivative(LpVector.zeros(shape, 3.0), y) == 0.0

    @pytest.mark.parametrize("p", [1.5, 2.0, 3.0])
    def test_derivative_matches_finite_difference(self, shape, rng, p):
        for _ in range(10):
            x, y = random_lp_vector(shape, p, rng), random_lp_vector(shape, p, rng)
            exact = potential_directional_derivative(x, y)
            numeric = finite_difference_derivative(x, y, h=1e-5)
            assert abs(exact - numeric) <= 1e-5 * (1.0 + abs(exact))

    @pytest.mark.parametrize("p", ORDERS)
    def test_derivative_along_itself(self, shape, rng, p):
        x = random_lp_vector(shape, p, rng)
        q = p / (p - 1)
        assert_allclose(potential_directional_derivative(x, x), p * q * scaled_power_sum(x), rtol=1e-10)

    @pytest.mark.parametrize("p", ORDERS)
    def test_legendre_and_fenchel_young(self, shape, rng, p):
        x, y = random_lp_vector(shape, p, rng), random_lp_vector(shape, p, rng)
        x_tilde = duality_map(x)
        assert legendre_residual(x) <= 1e-10 * (1.0 + potential(x_tilde))
        assert fenchel_young_gap(x_tilde, y) >= -1e-9
        assert abs(fenchel_young_gap(x_tilde, x)) <= 1e-10 * (1.0 + potential(x_tilde))

    @pytest.mark.parametrize("t", [0.25, 0.5, 0.75])
    def test_convexity(self, shape, rng, t):
        x, y = random_lp_vector(shape, 3.0, rng), random_lp_vector(shape, 3.0, rng)
        assert convexity_gap(x, y, t) >= -1e-10


class TestConnections:

    def test_transports_are_trivial(self, qubit, rng):
        x, y = random_lp_vector(qubit, 3.0, rng), random_lp_vector(qubit, 3.0, rng)
        v, w = random_lp_vector(qubit, 3.0, rng), random_lp_vector(qubit, 1.5, rng)
        moved = parallel_transport(v, x, y)
        assert_allclose(moved.blocks[0], v.blocks[0])
        assert transport_pairing_defect(v, w, x, y) <= 1e-10

    def test_dual_transport_needs_conjugate_order(self, qubit, rng):
        x = random_lp_vector(qubit, 3.0, rng)
        with pytest.raises(DomainError):
            dual_transport(x, x, x)

    @pytest.mark.parametrize("alpha", [-0.5, 0.0, 0.5])
    def test_geodesic_endpoints(self, shape, rng, alpha):
        first, second = random_functional(shape, rng), random_functional(shape, rng)
        for t, expected in ((0.0, first), (1.0, second)):
            point = alpha_geodesic(first, second, alpha, t)
            for got, want in zip(point.blocks, expected.blocks):
                assert np.max(np.abs(got - want)) <= 1e-10
