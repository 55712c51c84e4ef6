"""
Non-Commutative L_p Spaces
Elements of L_p(M, phi) in canonical representation (one matrix per block
plus the order p), Schatten norms, the pairing between L_p and L_q and
Hoelder products
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from scipy import linalg

from src.algebra.algebra import AlgebraElement, AlgebraShape, block_multiply, check_same_shape
from src.algebra.matrix_functions import is_hermitian, is_psd, magnitude
from src.utils.errors import DomainError, ShapeMismatchError

MIN_ORDER = 1.0 + 1e-6
MAX_ORDER = 1e6
ORDER_TOL = 1e-12


def conjugate_order(p: float) -> float:
    """q with 1/p + 1/q = 1"""
    return p / (p - 1.0)


def validate_order(p: float) -> float:
    p = float(p)
    if not np.isfinite(p) or p < MIN_ORDER or p > MAX_ORDER:
        raise DomainError(f"order p={p} outside [{MIN_ORDER}, {MAX_ORDER:g}]")
    return p


def same_order(p: float, r: float) -> bool:
    return abs(p - r) <= ORDER_TOL * max(1.0, abs(p))


def are_conjugate(p: float, q: float) -> bool:
    return abs(1.0 / p + 1.0 / q - 1.0) <= ORDER_TOL


@dataclass(frozen=True, eq=False)
class LpVector:
    """Element X of L_p: per-block complex matrices and the order p in (1, inf)"""

    shape: AlgebraShape
    order: float
    blocks: Tuple[np.ndarray, ...]

    def __post_init__(self):
        object.__setattr__(self, "order", validate_order(self.order))
        arrays = tuple(np.array(b, dtype=complex) for b in self.blocks)
        if len(arrays) != self.shape.num_blocks:
            raise ShapeMismatchError(f"expected {self.shape.num_blocks} blocks, got {len(arrays)}")
        for n, arr in zip(self.shape.block_dims, arrays):
            if arr.shape != (n, n):
                raise ShapeMismatchError(f"block of shape {arr.shape} where ({n}, {n}) was expected")
        object.__setattr__(self, "blocks", arrays)

    @classmethod
    def zeros(cls, shape: AlgebraShape, order: float) -> "LpVector":
        return cls(shape, order, shape.zero_blocks())

    @property
    def conjugate(self) -> float:
        return conjugate_order(self.order)

    def with_blocks(self, blocks: Iterable[np.ndarray]) -> "LpVector":
        return LpVector(self.shape, self.order, list(blocks))

    def is_zero(self) -> bool:
        return all(not np.any(b) for b in self.blocks)

    def _check(self, other: "LpVector"):
        check_same_shape(self.shape, other.shape)
        if not same_order(self.order, other.order):
            raise ShapeMismatchError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: "LpVector") -> "LpVector":
        self._check(other)
        return self.with_blocks(a + b for a, b in zip(self.blocks, other.blocks))

    def __sub__(self, other: "LpVector") -> "LpVector":
        self._check(other)
        return self.with_blocks(a - b for a, b in zip(self.blocks, other.blocks))

    def __mul__(self, scalar: complex) -> "LpVector":
        return self.with_blocks(scalar * b for b in self.blocks)

    __rmul__ = __mul__

    def __truediv__(self, scalar: complex) -> "LpVector":
        return self.with_blocks(b / scalar for b in self.blocks)

    def __neg__(self) -> "LpVector":
        return self.with_blocks(-b for b in self.blocks)

    def adjoint_blocks(self) -> List[np.ndarray]:
        return [b.conj().T for b in self.blocks]

    def is_hermitian(self, tol: float = 1e-10) -> bool:
        scale = magnitude(self.blocks)
        return all(is_hermitian(b, tol, scale) for b in self.blocks)

    def is_positive(self, tol: float = 1e-10) -> bool:
        scale = magnitude(self.blocks)
        return all(is_psd(b, tol, scale) for b in self.blocks)

    def check_same_space(self, other: "LpVector"):
        self._check(other)


def singular_values(x: LpVector) -> np.ndarray:
    """All singular values of all blocks, concatenated"""
    return np.concatenate([linalg.svdvals(b) for b in x.blocks])


def schatten_norm(x: LpVector, order: Optional[float] = None) -> float:
    """
    Schatten norm (sum of singular values ** p) ** (1/p) across all blocks

    Args:
        x: element of L_p
        order: exponent to use instead of x.order (any value >= 1)

    Returns:
        float: the norm
    """
    p = x.order if order is None else float(order)
    s = singular_values(x)
    top = s.max(initial=0.0)
    if top == 0.0:
        return 0.0
    return float(top * np.sum((s / top) ** p) ** (1.0 / p))


def scaled_power_sum(x: LpVector) -> float:
    """||x/p||_p^p, the quantity every potential and duality identity is built on"""
    p = x.order
    return float(np.sum((singular_values(x) / p) ** p))


def pairing(x: LpVector, y: LpVector) -> complex:
    """
    Sesquilinear duality <x, y> = sum_i Tr(x_i* y_i) between L_p and L_q

    Args:
        x: element of L_p (conjugate-linear slot)
        y: element of L_q, 1/p + 1/q = 1

    Returns:
        complex: the pairing value
    """
    check_same_shape(x.shape, y.shape)
    if not are_conjugate(x.order, y.order):
        raise DomainError(f"orders {x.order} and {y.order} are not conjugate")
    return complex(sum(np.vdot(a, b) for a, b in zip(x.blocks, y.blocks)))


def bilinear_form(x: LpVector, y: LpVector) -> complex:
    """[x, y] = sum_i Tr(x_i y_i)"""
    check_same_shape(x.shape, y.shape)
    return complex(sum(np.sum(a * b.T) for a, b in zip(x.blocks, y.blocks)))


@dataclass(frozen=True, eq=False)
class HolderProduct:
    """Blockwise product of factors in L_{p_1}, ..., L_{p_n}; lands in L_r"""

    shape: AlgebraShape
    order: float
    blocks: Tuple[np.ndarray, ...]

    @property
    def trace_value(self) -> complex:
        """The L_1 value [T_1 ... T_n] = sum_i Tr(product)"""
        return complex(sum(np.trace(b) for b in self.blocks))

    @property
    def norm(self) -> float:
        s = np.concatenate([linalg.svdvals(b) for b in self.blocks])
        top = s.max(initial=0.0)
        if top == 0.0:
            return 0.0
        return float(top * np.sum((s / top) ** self.order) ** (1.0 / self.order))

    def as_lp_vector(self) -> LpVector:
        return LpVector(self.shape, self.order, list(self.blocks))


def holder_product(factors: Sequence[LpVector]) -> HolderProduct:
    """
    Multiply factors blockwise; the order r satisfies 1/r = sum 1/p_k

    Raises:
        DomainError: when sum 1/p_k > 1 (no L_r with r >= 1)
    """
    if not factors:
        raise DomainError("holder_product needs at least one factor")
    shape = factors[0].shape
    for f in factors[1:]:
        check_same_shape(shape, f.shape)
    inverse = sum(1.0 / f.order for f in factors)
    if inverse > 1.0 + ORDER_TOL:
        raise DomainError(f"sum of 1/p_k = {inverse:.6g} exceeds 1")
    products = []
    for i in range(shape.num_blocks):
        block = factors[0].blocks[i]
        for f in factors[1:]:
            block = block @ f.blocks[i]
        products.append(block)
    return HolderProduct(shape, 1.0 / inverse, tuple(products))


def left_multiply(a: AlgebraElement, x: LpVector) -> LpVector:
    """a . x, the left module action of M on L_p"""
    check_same_shape(a.shape, x.shape)
    return x.with_blocks(block_multiply(a, x.blocks))


def conjugate_by(x: LpVector, unitary: AlgebraElement) -> LpVector:
    """Blockwise U x U*, a change of the reference basis"""
    check_same_shape(unitary.shape, x.shape)
    return x.with_blocks(u @ b @ u.conj().T for u, b in zip(unitary.blocks, x.blocks))
