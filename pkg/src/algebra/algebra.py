"""
Finite-Dimensional Algebras
Direct sums of full matrix blocks, their elements, normal functionals
(one density matrix per block) and polar decompositions of functionals
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from src.utils.errors import DomainError, ShapeMismatchError
from .matrix_functions import compact_svd, is_hermitian, is_psd, magnitude, support_of


def _as_blocks(shape: "AlgebraShape", blocks: Iterable) -> Tuple[np.ndarray, ...]:
    arrays = tuple(np.array(b, dtype=complex) for b in blocks)
    if len(arrays) != shape.num_blocks:
        raise ShapeMismatchError(
            f"expected {shape.num_blocks} blocks, got {len(arrays)}"
        )
    for n, arr in zip(shape.block_dims, arrays):
        if arr.shape != (n, n):
            raise ShapeMismatchError(f"block of shape {arr.shape} where ({n}, {n}) was expected")
    return arrays


@dataclass(frozen=True)
class AlgebraShape:
    """Block structure [n_1, ..., n_k] of the algebra M_{n_1} + ... + M_{n_k}"""

    block_dims: Tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(n) for n in self.block_dims)
        if len(dims) < 1:
            raise DomainError("an algebra needs at least one block")
        if any(n < 1 for n in dims):
            raise DomainError(f"block dimensions must be positive, got {list(dims)}")
        object.__setattr__(self, "block_dims", dims)

    @property
    def num_blocks(self) -> int:
        return len(self.block_dims)

    @property
    def total_dim(self) -> int:
        return sum(self.block_dims)

    @property
    def offsets(self) -> List[int]:
        """Start index of each block inside the block-diagonal embedding"""
        return list(np.cumsum((0,) + self.block_dims[:-1]))

    def zero_blocks(self) -> List[np.ndarray]:
        return [np.zeros((n, n), dtype=complex) for n in self.block_dims]

    def identity_blocks(self) -> List[np.ndarray]:
        return [np.eye(n, dtype=complex) for n in self.block_dims]

    def is_commutative(self) -> bool:
        return all(n == 1 for n in self.block_dims)

    def to_dict(self) -> Dict:
        return {"blocks": list(self.block_dims)}


def check_same_shape(first: AlgebraShape, second: AlgebraShape):
    if first != second:
        raise ShapeMismatchError(
            f"shape mismatch: {list(first.block_dims)} vs {list(second.block_dims)}"
        )


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    """Element a of the algebra, one n_i x n_i block per summand"""

    shape: AlgebraShape
    blocks: Tuple[np.ndarray, ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", _as_blocks(self.shape, self.blocks))

    @classmethod
    def identity(cls, shape: AlgebraShape) -> "AlgebraElement":
        return cls(shape, shape.identity_blocks())

    @classmethod
    def zeros(cls, shape: AlgebraShape) -> "AlgebraElement":
        return cls(shape, shape.zero_blocks())

    def adjoint(self) -> "AlgebraElement":
        return AlgebraElement(self.shape, [b.conj().T for b in self.blocks])

    def __matmul__(self, other: "AlgebraElement") -> "AlgebraElement":
        check_same_shape(self.shape, other.shape)
        return AlgebraElement(self.shape, [a @ b for a, b in zip(self.blocks, other.blocks)])

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        check_same_shape(self.shape, other.shape)
        return AlgebraElement(self.shape, [a + b for a, b in zip(self.blocks, other.blocks)])

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        check_same_shape(self.shape, other.shape)
        return AlgebraElement(self.shape, [a - b for a, b in zip(self.blocks, other.blocks)])

    def __mul__(self, scalar: complex) -> "AlgebraElement":
        return AlgebraElement(self.shape, [scalar * b for b in self.blocks])

    __rmul__ = __mul__

    def is_hermitian(self, tol: float = 1e-10) -> bool:
        scale = magnitude(self.blocks)
        return all(is_hermitian(b, tol, scale) for b in self.blocks)


@dataclass(frozen=True, eq=False)
class NormalFunctional:
    """
    Normal functional omega(a) = sum_i Tr(W_i a_i), stored through its
    densities W_i
    """

    shape: AlgebraShape
    blocks: Tuple[np.ndarray, ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", _as_blocks(self.shape, self.blocks))

    @classmethod
    def zeros(cls, shape: AlgebraShape) -> "NormalFunctional":
        return cls(shape, shape.zero_blocks())

    @classmethod
    def diagonal(cls, values: Sequence[float]) -> "NormalFunctional":
        """Functional on a single block with diagonal density"""
        values = np.asarray(values, dtype=complex)
        return cls(AlgebraShape((len(values),)), [np.diag(values)])

    @classmethod
    def classical(cls, values: Sequence[float]) -> "NormalFunctional":
        """Functional on the commutative algebra C^n (all blocks 1x1)"""
        shape = AlgebraShape(tuple(1 for _ in values))
        return cls(shape, [np.array([[v]], dtype=complex) for v in values])

    @cached_property
    def is_hermitian(self) -> bool:
        scale = magnitude(self.blocks)
        return all(is_hermitian(b, scale=scale) for b in self.blocks)

    @cached_property
    def is_positive(self) -> bool:
        scale = magnitude(self.blocks)
        return all(is_psd(b, scale=scale) for b in self.blocks)

    @cached_property
    def norm_1(self) -> float:
        """Trace norm: sum of singular values of all densities"""
        return float(sum(np.sum(np.linalg.svd(b, compute_uv=False)) for b in self.blocks))

    def total(self) -> complex:
        """omega(1)"""
        return complex(sum(np.trace(b) for b in self.blocks))

    def __add__(self, other: "NormalFunctional") -> "NormalFunctional":
        check_same_shape(self.shape, other.shape)
        return NormalFunctional(self.shape, [a + b for a, b in zip(self.blocks, other.blocks)])

    def __sub__(self, other: "NormalFunctional") -> "NormalFunctional":
        check_same_shape(self.shape, other.shape)
        return NormalFunctional(self.shape, [a - b for a, b in zip(self.blocks, other.blocks)])

    def __mul__(self, scalar: complex) -> "NormalFunctional":
        return NormalFunctional(self.shape, [scalar * b for b in self.blocks])

    __rmul__ = __mul__

    def normalized(self) -> "NormalFunctional":
        norm = self.norm_1
        if norm == 0.0:
            raise DomainError("cannot normalize the zero functional")
        return self * (1.0 / norm)


@dataclass(frozen=True, eq=False)
class PolarDecomposition:
    """omega(a) = rho(a u): W = u rho blockwise, u*u = support(rho)"""

    u: AlgebraElement
    rho: NormalFunctional
    support: AlgebraElement

    def recompose(self) -> NormalFunctional:
        return NormalFunctional(
            self.rho.shape,
            [u @ r for u, r in zip(self.u.blocks, self.rho.blocks)]
        )


def apply_functional(omega: NormalFunctional, a: AlgebraElement) -> complex:
    """Evaluate omega(a) = sum_i Tr(W_i a_i)"""
    check_same_shape(omega.shape, a.shape)
    # Tr(W a) = sum_jk W[j,k] a[k,j]
    return complex(sum(np.sum(w * b.T) for w, b in zip(omega.blocks, a.blocks)))


def block_multiply(a: AlgebraElement, blocks: Sequence[np.ndarray]) -> List[np.ndarray]:
    """Left multiplication a_i @ X_i of matching block lists"""
    if len(blocks) != a.shape.num_blocks:
        raise ShapeMismatchError(f"expected {a.shape.num_blocks} blocks, got {len(blocks)}")
    return [m @ np.asarray(b, dtype=complex) for m, b in zip(a.blocks, blocks)]


def opnorm(a: AlgebraElement) -> float:
    """Operator norm: largest singular value over all blocks"""
    return float(max(np.linalg.norm(b, 2) for b in a.blocks))


def polar_decompose(omega: NormalFunctional) -> PolarDecomposition:
    """
    Polar decomposition W = u rho of every density

    rho = (W*W)^{1/2} and u is the partial isometry with u*u = support(rho);
    both come from the compact SVD W = U S Vh, so u vanishes on ker rho.

    Args:
        omega: any normal functional

    Returns:
        PolarDecomposition: (u, rho, support)
    """
    us, rhos, supports = [], [], []
    for w in omega.blocks:
        left, s, vh = compact_svd(w)
        v = vh.conj().T
        rhos.append((v * s) @ vh)
        us.append(left @ vh)
        supports.append(v @ vh)
    shape = omega.shape
    return PolarDecomposition(
        u=AlgebraElement(shape, us),
        rho=NormalFunctional(shape, rhos),
        support=AlgebraElement(shape, supports),
    )


def support_projection(rho: NormalFunctional) -> AlgebraElement:
    """Orthogonal projection onto the range of each (positive) density"""
    if not rho.is_positive:
        raise DomainError("support projection needs a positive functional")
    return AlgebraElement(rho.shape, [support_of(b) for b in rho.blocks])


def classify_functional(omega: NormalFunctional) -> Dict:
    """
    Classify a functional

    Returns:
        dict: {"hermitian": bool, "positive": bool, "norm_1": float}
    """
    return {
        "hermitian": omega.is_hermitian,
        "positive": omega.is_positive,
        "norm_1": omega.norm_1,
    }
