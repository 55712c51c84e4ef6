import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.algebra.algebra import AlgebraShape, NormalFunctional
from src.divergence.alpha_divergence import alpha_divergence
from src.quasientropy import (
    GpFunction,
    TabulatedFunction,
    alpha_via_quasientropy,
    modular_spectrum,
    moment_residuals,
    normalized_profile,
    quasi_entropy,
    resolve_function,
)
from src.utils.errors import DomainError, ParseError
from src.utils.sampling import random_functional, random_positive_functional

ALPHAS = [-0.6, -1 / 3, 0.0, 1 / 3, 0.6]


class TestModularSpectrum:

    def test_commuting_pair(self, worked_pair):
        spectrum = modular_spectrum(*worked_pair)
        assert spectrum.faithful
        assert_allclose(spectrum.eigenvalues, [0.5 / 0.9, 5.0], rtol=1e-10)
        assert_allclose(spectrum.weights, [0.9, 0.1], rtol=1e-10)

    def test_equal_functionals(self, shape, rng):
        psi = random_positive_functional(shape, rng)
        spectrum = modular_spectrum(psi, psi)
        assert_allclose(spectrum.eigenvalues, np.ones_like(spectrum.eigenvalues), rtol=1e-8)
        assert_allclose(spectrum.total_weight, psi.total().real, rtol=1e-10)

    def test_moments_of_non_commuting_pair(self, qubit, rng):
        phi, psi = random_positive_functional(qubit, rng), random_positive_functional(qubit, rng)
        spectrum = modular_spectrum(phi, psi)
        assert_allclose(spectrum.total_weight, psi.total().real, rtol=1e-10)
        assert_allclose(spectrum.moment(1.0), phi.total().real, rtol=1e-10)

    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_moment_residuals(self, shape, rng, alpha):
        phi, psi = random_positive_functional(shape, rng), random_positive_functional(shape, rng)
        residuals = moment_residuals(phi, psi, alpha)
        scale = 1.0 + phi.total().real + psi.total().real
        for value in residuals.values():
            assert value <= 1e-10 * scale

    def test_non_faithful_psi(self):
        phi = NormalFunctional.diagonal([0.5, 0.5])
        psi = NormalFunctional.diagonal([1.0, 0.0])
        spectrum = modular_spectrum(phi, psi)
        assert not spectrum.faithful
        assert len(spectrum.pairs) == 1
        assert_allclose(spectrum.pairs[0], (0.5, 1.0), rtol=1e-12)
        with pytest.raises(DomainError):
            modular_spectrum(phi, psi, strict=True)

    def test_requires_positive(self, qubit, rng):
        with pytest.raises(DomainError):
            modular_spectrum(random_functional(qubit, rng), random_positive_functional(qubit, rng))

    def test_to_dict(self, worked_pair):
        data = modular_spectrum(*worked_pair).to_dict()
        assert data["faithful"] is True
        assert len(data["pairs"]) == 2


class TestQuasiEntropy:

    def test_first_and_zeroth_moment(self, shape, rng):
        phi, psi = random_positive_functional(shape, rng), random_positive_functional(shape, rng)
        assert_allclose(quasi_entropy("identity", phi, psi), phi.total().real, rtol=1e-10)
        assert_allclose(quasi_entropy("one", phi, psi), psi.total().real, rtol=1e-10)

    def test_relative_entropy_on_commuting_pair(self):
        rho, nu = np.array([0.2, 0.3, 0.5]), np.array([0.4, 0.4, 0.2])
        value = quasi_entropy("t_log_t", NormalFunctional.diagonal(rho), NormalFunctional.diagonal(nu))
        assert_allclose(value, np.sum(rho * np.log(rho / nu)), rtol=1e-10)

    def test_worked_example(self, worked_pair):
        assert alpha_via_quasientropy(*worked_pair, 0.0) == pytest.approx(0.422291236, abs=1e-9)

    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_equal_functionals_vanish(self, shape, rng, alpha):
        psi = random_positive_functional(shape, rng)
        assert abs(alpha_via_quasientropy(psi, psi, alpha)) <= 1e-9

    @pytest.mark.parametrize("alpha", ALPHAS)
    @pytest.mark.parametrize("dims", [(2,), (3,), (1, 2), (2, 3)])
    def test_agrees_with_pairing_formula(self, rng, alpha, dims):
        shape = AlgebraShape(dims)
        for _ in range(5):
            phi, psi = random_positive_functional(shape, rng), random_positive_functional(shape, rng)
            spectral = alpha_via_quasientropy(phi, psi, alpha)
            pairing_based = alpha_divergence(phi, psi, alpha).value
            assert abs(spectral - pairing_based) <= 1e-9 * (1.0 + max(abs(spectral), abs(pairing_based)))

    def test_profile_non_increasing(self, shape, rng):
        phi, psi = random_positive_functional(shape, rng), random_positive_functional(shape, rng)
        profile = normalized_profile(phi, psi, ALPHAS)
        orders = [p for p, _ in profile]
        values = [v for _, v in profile]
        assert orders == sorted(orders)
        assert all(b <= a + 1e-9 for a, b in zip(values, values[1:]))


class TestScalarFunctions:

    @pytest.mark.parametrize("name, p", [("g_p:alpha=0", 2.0), ("g_p:α=0.5", 4.0), ("g_p:p=3", 3.0)])
    def test_named_gp(self, name, p):
        g = resolve_function(name)
        assert isinstance(g, GpFunction)
        assert g.p == pytest.approx(p)
        assert g(1.0) == pytest.approx(0.0, abs=1e-12)

    @pytest.mark.parametrize("name", ["cosh", "g_p:beta=1", "g_p:alpha=x"])
    def test_unknown_names(self, name):
        with pytest.raises(ParseError):
            resolve_function(name)

    def test_alpha_out_of_range_in_name(self):
        with pytest.raises(DomainError):
            resolve_function("g_p:alpha=2")

    def test_tabulated_interpolation(self):
        g = resolve_function([[0.0, 0.0], [2.0, 4.0], [1.0, 1.0]])
        assert isinstance(g, TabulatedFunction)
        assert_allclose(g(np.array([0.5, 1.5])), [0.5, 2.5])

    def test_tabulated_outside_range(self):
        with pytest.raises(DomainError):
            TabulatedFunction(((0.0, 0.0), (1.0, 1.0)))(2.0)

    @pytest.mark.parametrize("points", [((0.0, 1.0),), ((1.0, 0.0), (1.0, 2.0)), ((-1.0, 0.0), (1.0, 0.0))])
    def test_tabulated_invalid(self, points):
        with pytest.raises(DomainError):
            TabulatedFunction(points)

    def test_callable_passthrough(self, worked_pair):
        assert quasi_entropy(lambda t: np.ones_like(t), *worked_pair) == pytest.approx(1.0)
