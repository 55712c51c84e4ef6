"""
Matrix Functions
Spectral helpers shared by every block-wise computation: compact SVD,
fractional powers of PSD matrices, support projections
"""

from typing import Optional, Tuple

import numpy as np
from scipy import linalg

# Relative eigenvalue / singular value cut-off deciding support membership
CLIP_TOL = 1e-12


def compact_svd(
    matrix: np.ndarray,
    clip: float = CLIP_TOL
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Singular value decomposition restricted to the numerical support

    Args:
        matrix: square or rectangular complex matrix
        clip: singular values below clip * s_max are dropped

    Returns:
        tuple: (U_s, s, Vh_s) with matrix ~= U_s @ diag(s) @ Vh_s
    """
    u, s, vh = linalg.svd(np.asarray(matrix, dtype=complex), full_matrices=False)
    if s.size == 0 or s[0] <= 0.0:
        return u[:, :0], s[:0], vh[:0, :]
    keep = s > clip * s[0]
    return u[:, keep], s[keep], vh[keep, :]


def hermitian_eigh(
    matrix: np.ndarray,
    clip: float = CLIP_TOL
) -> Tuple[np.ndarray, np.ndarray]:
    """Eigen-decomposition of the hermitian part, tiny eigenvalues snapped to 0"""
    herm = 0.5 * (matrix + matrix.conj().T)
    evals, evecs = linalg.eigh(herm)
    scale = np.max(np.abs(evals)) if evals.size else 0.0
    evals = np.where(np.abs(evals) <= clip * scale, 0.0, evals)
    return evals, evecs


def psd_power(matrix: np.ndarray, power: float, clip: float = CLIP_TOL) -> np.ndarray:
    """
    Principal power of a PSD matrix on its support, zero on the kernel

    Args:
        matrix: positive semidefinite matrix
        power: real exponent (negative exponents invert on the support)
        clip: relative eigenvalue cut-off

    Returns:
        np.ndarray: matrix ** power
    """
    evals, evecs = hermitian_eigh(matrix, clip)
    evals = np.clip(evals, 0.0, None)
    powered = np.zeros_like(evals)
    support = evals > 0.0
    powered[support] = evals[support] ** power
    return (evecs * powered) @ evecs.conj().T


def support_of(matrix: np.ndarray, clip: float = CLIP_TOL) -> np.ndarray:
    """Orthogonal projection onto the range of a PSD matrix"""
    evals, evecs = hermitian_eigh(matrix, clip)
    cols = evecs[:, evals > 0.0]
    return cols @ cols.conj().T


def magnitude(blocks) -> float:
    """Largest entry modulus over a collection of matrices; 0 for all-zero input"""
    return max((float(np.max(np.abs(b), initial=0.0)) for b in blocks), default=0.0)


def is_hermitian(matrix: np.ndarray, tol: float = 1e-10, scale: Optional[float] = None) -> bool:
    """Hermitian up to tol relative to scale (default: the matrix's own magnitude)"""
    if scale is None:
        scale = magnitude([matrix])
    return bool(np.max(np.abs(matrix - matrix.conj().T), initial=0.0) <= tol * scale)


def is_psd(matrix: np.ndarray, tol: float = 1e-10, scale: Optional[float] = None) -> bool:
    if scale is None:
        scale = magnitude([matrix])
    if not is_hermitian(matrix, tol, scale):
        return False
    if matrix.size == 0:
        return True
    evals = linalg.eigvalsh(0.5 * (matrix + matrix.conj().T))
    return bool(evals.min() >= -tol * scale)
