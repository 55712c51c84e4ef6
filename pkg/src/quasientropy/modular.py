"""
Relative Modular Spectra
Spectrum of Delta(A) = rho_phi A rho_psi^{-1} and the quasi-entropies
S_g(phi, psi) = sum g(lambda) weight, an oracle independent of the pairing
formula for S_alpha
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from src.algebra.algebra import NormalFunctional, check_same_shape
from src.algebra.matrix_functions import hermitian_eigh, psd_power
from src.lp.embedding import alpha_to_order
from src.lp.lp_space import conjugate_order
from src.utils.errors import DomainError
from .scalar_functions import GpFunction, resolve_function

logger = logging.getLogger(__name__)

WEIGHT_CUTOFF = 1e-14
CLUSTER_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class ModularSpectrum:
    """(eigenvalue, weight) pairs of the relative modular operator"""

    eigenvalues: np.ndarray
    weights: np.ndarray
    faithful: bool = True

    @property
    def pairs(self) -> List[Tuple[float, float]]:
        return [(float(e), float(w)) for e, w in zip(self.eigenvalues, self.weights)]

    @property
    def total_weight(self) -> float:
        return float(np.sum(self.weights))

    def moment(self, power: float) -> float:
        """sum eigenvalue^power * weight (0^0 counted as 1)"""
        values = np.where(self.eigenvalues > 0, self.eigenvalues, 0.0) ** power
        return float(np.sum(values * self.weights))

    def to_dict(self) -> Dict:
        return {"pairs": [list(pair) for pair in self.pairs], "faithful": self.faithful}


def _merge_clusters(eigenvalues: np.ndarray, weights: np.ndarray):
    order = np.argsort(eigenvalues)
    eigenvalues, weights = eigenvalues[order], weights[order]
    merged_e, merged_w = [], []
    start = 0
    for k in range(1, len(eigenvalues) + 1):
        if k == len(eigenvalues) or (
            eigenvalues[k] - eigenvalues[start] > CLUSTER_TOL * max(abs(eigenvalues[start]), 1e-300)
        ):
            w = weights[start:k]
            total = float(np.sum(w))
            merged_e.append(float(np.dot(eigenvalues[start:k], w) / total) if total > 0 else float(eigenvalues[start]))
            merged_w.append(total)
            start = k
    return np.array(merged_e), np.array(merged_w)


def modular_spectrum(
    phi: NormalFunctional,
    psi: NormalFunctional,
    strict: bool = False
) -> ModularSpectrum:
    """
    All pairs (lambda_i / mu_j, mu_j |<e_i, f_j>|^2) across blocks

    Args:
        phi: positive functional with rho = sum lambda_i e_i e_i*
        psi: positive functional with nu = sum mu_j f_j f_j*
        strict: raise instead of restricting to the support of psi

    Returns:
        ModularSpectrum: merged pairs with weights above 1e-14
    """
    check_same_shape(phi.shape, psi.shape)
    if not (phi.is_positive and psi.is_positive):
        raise DomainError("modular spectrum needs positive functionals")

    eigenvalues, weights = [], []
    faithful = True
    for rho, nu in zip(phi.blocks, psi.blocks):
        lam, e_vecs = hermitian_eigh(rho)
        mu, f_vecs = hermitian_eigh(nu)
        lam = np.clip(lam, 0.0, None)
        support = mu > 0.0
        if not np.all(support):
            faithful = False
        overlap = np.abs(e_vecs.conj().T @ f_vecs) ** 2  # [i, j] = |<e_i, f_j>|^2
        for j in np.flatnonzero(support):
            eigenvalues.append(lam / mu[j])
            weights.append(mu[j] * overlap[:, j])

    if not faithful:
        if strict:
            raise DomainError("psi is not faithful")
        logger.warning("psi is not faithful; spectrum restricted to its support")

    if not eigenvalues:
        return ModularSpectrum(np.zeros(0), np.zeros(0), faithful)
    eigenvalues = np.concatenate(eigenvalues)
    weights = np.concatenate(weights)
    keep = weights > WEIGHT_CUTOFF
    merged_e, merged_w = _merge_clusters(eigenvalues[keep], weights[keep])
    return ModularSpectrum(merged_e, merged_w, faithful)


def quasi_entropy(g, phi: NormalFunctional, psi: NormalFunctional, strict: bool = False) -> float:
    """S_g(phi, psi) = sum over pairs of g(eigenvalue) * weight"""
    function = resolve_function(g)
    spectrum = modular_spectrum(phi, psi, strict=strict)
    if spectrum.weights.size == 0:
        return 0.0
    return float(np.sum(function(spectrum.eigenvalues) * spectrum.weights))


def alpha_via_quasientropy(
    phi: NormalFunctional,
    psi: NormalFunctional,
    alpha: float,
    strict: bool = False
) -> float:
    """S_alpha as the quasi-entropy of g_p, p = 2/(1-alpha)"""
    return quasi_entropy(GpFunction.from_alpha(alpha), phi, psi, strict=strict)


def moment_residuals(phi: NormalFunctional, psi: NormalFunctional, alpha: float) -> Dict[str, float]:
    """
    Residuals of sum w = psi(1), sum e w = phi(1) and
    sum e^{1/p} w = Re Tr(rho^{1/p} nu^{1/q})
    """
    p = alpha_to_order(alpha)
    q = conjugate_order(p)
    spectrum = modular_spectrum(phi, psi)
    cross = sum(
        np.trace(psd_power(rho, 1.0 / p) @ psd_power(nu, 1.0 / q)).real
        for rho, nu in zip(phi.blocks, psi.blocks)
    )
    return {
        "zeroth": abs(spectrum.total_weight - psi.total().real),
        "first": abs(spectrum.moment(1.0) - phi.total().real),
        "cross": abs(spectrum.moment(1.0 / p) - cross),
    }


def normalized_profile(
    phi: NormalFunctional,
    psi: NormalFunctional,
    alphas: Sequence[float]
) -> List[Tuple[float, float]]:
    """(p, (1/p) S_{g_p}(phi, psi)) for each alpha, ordered by p"""
    spectrum = modular_spectrum(phi, psi)
    profile = []
    for alpha in alphas:
        g = GpFunction.from_alpha(alpha)
        value = float(np.sum(g(spectrum.eigenvalues) * spectrum.weights)) if spectrum.weights.size else 0.0
        profile.append((g.p, value / g.p))
    return sorted(profile)
