"""
Seeded Samplers
Random functionals, elements and L_p vectors for property checks.
Every sampler takes an explicit seed (int) or numpy Generator.
"""

import hashlib
from typing import Sequence, Union

import numpy as np
from scipy.stats import unitary_group

from src.algebra.algebra import AlgebraElement, AlgebraShape, NormalFunctional
from src.lp.lp_space import LpVector
from src.utils.errors import DomainError

SeedLike = Union[int, np.random.Generator, np.random.SeedSequence]


def validate_seed(seed: SeedLike) -> SeedLike:
    if seed is None:
        raise DomainError("samplers require an explicit seed")
    if isinstance(seed, (int, np.integer)) and seed < 0:
        raise DomainError(f"seed must be a non-negative integer, got {seed}")
    return seed


def make_rng(seed: SeedLike) -> np.random.Generator:
    return np.random.default_rng(validate_seed(seed))


def check_rng(seed: int, check_name: str) -> np.random.Generator:
    """
    Generator derived from (seed, check name)

    Results of a check do not depend on which other checks ran before it.
    """
    digest = hashlib.sha256(check_name.encode("utf-8")).hexdigest()
    seed = int(validate_seed(seed))
    return np.random.default_rng(np.random.SeedSequence([seed, int(digest[:8], 16)]))


def complex_gaussian(rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    return (rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))) / np.sqrt(2.0)


def random_blocks(shape: AlgebraShape, seed: SeedLike):
    rng = make_rng(seed)
    return [complex_gaussian(rng, n, n) for n in shape.block_dims]


def random_functional(shape: AlgebraShape, seed: SeedLike) -> NormalFunctional:
    """General (non-hermitian) functional with complex Gaussian densities"""
    return NormalFunctional(shape, random_blocks(shape, seed))


def random_positive_functional(
    shape: AlgebraShape,
    seed: SeedLike,
    normalize: bool = False,
    floor: float = 0.05,
    rank: int = None,
) -> NormalFunctional:
    """
    Positive functional with densities G*G (+ floor * I)

    Args:
        shape: algebra shape
        seed: int or Generator
        normalize: scale to unit trace
        floor: identity admixture keeping singular values away from zero
        rank: columns of G (defaults to full rank)

    Returns:
        NormalFunctional: positive functional
    """
    rng = make_rng(seed)
    blocks = []
    for n in shape.block_dims:
        g = complex_gaussian(rng, rank or n, n)
        w = g.conj().T @ g
        w = w + floor * (np.trace(w).real / n) * np.eye(n)
        blocks.append(0.5 * (w + w.conj().T))
    omega = NormalFunctional(shape, blocks)
    if normalize:
        omega = omega * (1.0 / omega.total().real)
    return omega


def random_hermitian_element(shape: AlgebraShape, seed: SeedLike) -> AlgebraElement:
    blocks = [0.5 * (b + b.conj().T) for b in random_blocks(shape, seed)]
    return AlgebraElement(shape, blocks)


def random_unitary_element(shape: AlgebraShape, seed: SeedLike) -> AlgebraElement:
    """Haar-random unitary in every block"""
    rng = make_rng(seed)
    blocks = []
    for n in shape.block_dims:
        if n == 1:
            blocks.append(np.exp(2j * np.pi * rng.random()) * np.ones((1, 1)))
        else:
            blocks.append(unitary_group.rvs(n, random_state=rng))
    return AlgebraElement(shape, blocks)


def random_shape(choices: Sequence[Sequence[int]], seed: SeedLike) -> AlgebraShape:
    rng = make_rng(seed)
    return AlgebraShape(tuple(choices[int(rng.integers(len(choices)))]))


def random_lp_vector(shape: AlgebraShape, order: float, seed: SeedLike, scale: float = 1.0) -> LpVector:
    """General element of L_p with complex Gaussian blocks"""
    return LpVector(shape, order, [scale * b for b in random_blocks(shape, seed)])
