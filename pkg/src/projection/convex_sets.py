"""
Convex Sets in L_p
Cone hulls, affine slices and Schatten-norm balls, each with a finite real
parameterization the projection solver optimizes over
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property
from typing import List, Sequence, Tuple

import numpy as np
from scipy import optimize

from src.algebra.algebra import AlgebraShape
from src.algebra.matrix_functions import compact_svd
from src.lp.lp_space import LpVector, pairing, schatten_norm, same_order
from src.utils.errors import DomainError, ShapeMismatchError
from src.utils.sampling import complex_gaussian

MEMBERSHIP_TOL = 1e-6


def _flatten(x: LpVector) -> np.ndarray:
    """Complex blocks -> real vector [Re, Im], Frobenius-isometric"""
    flat = np.concatenate([b.ravel() for b in x.blocks])
    return np.concatenate([flat.real, flat.imag])


def _unflatten(vector: np.ndarray, template: LpVector) -> LpVector:
    half = vector.size // 2
    flat = vector[:half] + 1j * vector[half:]
    blocks, start = [], 0
    for n in template.shape.block_dims:
        blocks.append(flat[start:start + n * n].reshape(n, n))
        start += n * n
    return template.with_blocks(blocks)


def _check_members(reference: LpVector, members: Sequence[LpVector], label: str):
    for m in members:
        if m.shape != reference.shape or not same_order(m.order, reference.order):
            raise ShapeMismatchError(f"{label} do not share shape and order")


def project_onto_lp_ball(values: np.ndarray, radius: float, p: float) -> np.ndarray:
    """
    Euclidean projection of non-negative values onto {w >= 0 : sum w^p <= r^p}

    Solves w_i + lam p w_i^{p-1} = s_i per coordinate and picks lam with
    sum w_i^p = r^p by nested bracketing.
    """
    s = np.asarray(values, dtype=float)
    if np.sum(s ** p) <= radius ** p:
        return s.copy()

    def coordinates(lam: float) -> np.ndarray:
        w = np.zeros_like(s)
        for i, si in enumerate(s):
            if si <= 0.0:
                continue
            w[i] = optimize.brentq(lambda v: v + lam * p * v ** (p - 1.0) - si, 0.0, si, xtol=1e-15)
        return w

    def excess(lam: float) -> float:
        return float(np.sum(coordinates(lam) ** p) - radius ** p)

    upper = 1.0
    while excess(upper) > 0.0:
        upper *= 2.0
    lam = optimize.brentq(excess, 0.0, upper, xtol=1e-15, rtol=1e-14)
    return coordinates(lam)


class ConvexSetSpec(ABC):
    """Convex subset of L_p described by a real parameter vector theta"""

    variant: str = ""

    @property
    @abstractmethod
    def reference(self) -> LpVector:
        """Any member; fixes shape and order"""

    @property
    def shape(self) -> AlgebraShape:
        return self.reference.shape

    @property
    def order(self) -> float:
        return self.reference.order

    @abstractmethod
    def initial_parameters(self) -> np.ndarray:
        ...

    @abstractmethod
    def point(self, theta: np.ndarray) -> LpVector:
        ...

    @abstractmethod
    def project_parameters(self, theta: np.ndarray) -> np.ndarray:
        ...

    @abstractmethod
    def parameter_gradient(self, gradient: LpVector) -> np.ndarray:
        """Chain rule: d/dtheta_i of f(x(theta)) given the L_q gradient of f"""

    @abstractmethod
    def contains(self, x: LpVector, tol: float = MEMBERSHIP_TOL) -> bool:
        ...

    @abstractmethod
    def sample_points(self, count: int, rng: np.random.Generator) -> List[LpVector]:
        ...

    @abstractmethod
    def anchor_points(self, x_m: LpVector) -> List[LpVector]:
        """Deterministic members near x_m that sharpen sampled certificates"""

    @cached_property
    def contains_zero(self) -> bool:
        return self.contains(LpVector.zeros(self.shape, self.order))


@dataclass(frozen=True, eq=False)
class ConeHull(ConvexSetSpec):
    """{sum t_i g_i : t_i >= 0}"""

    generators: Tuple[LpVector, ...]
    variant = "cone"

    def __post_init__(self):
        if not self.generators:
            raise DomainError("a cone hull needs at least one generator")
        object.__setattr__(self, "generators", tuple(self.generators))
        _check_members(self.generators[0], self.generators, "generators")

    @property
    def reference(self) -> LpVector:
        return self.generators[0]

    def initial_parameters(self) -> np.ndarray:
        m = len(self.generators)
        return np.full(m, 1.0 / m)

    def point(self, theta: np.ndarray) -> LpVector:
        x = self.generators[0] * float(theta[0])
        for t, g in zip(theta[1:], self.generators[1:]):
            x = x + g * float(t)
        return x

    def project_parameters(self, theta: np.ndarray) -> np.ndarray:
        return np.maximum(theta, 0.0)

    def parameter_gradient(self, gradient: LpVector) -> np.ndarray:
        return np.array([pairing(g, gradient).real for g in self.generators])

    def _basis(self) -> np.ndarray:
        return np.column_stack([_flatten(g) for g in self.generators])

    def contains(self, x: LpVector, tol: float = MEMBERSHIP_TOL) -> bool:
        _check_members(self.reference, [x], "point and generators")
        _, residual = optimize.nnls(self._basis(), _flatten(x))
        return residual <= tol * (1.0 + np.linalg.norm(_flatten(x)))

    def sample_points(self, count: int, rng: np.random.Generator) -> List[LpVector]:
        m = len(self.generators)
        points = []
        for _ in range(count):
            weights = rng.dirichlet(np.ones(m)) * rng.gamma(m)
            points.append(self.point(weights))
        return points

    def anchor_points(self, x_m: LpVector) -> List[LpVector]:
        return [x_m * 0.0, x_m * 2.0] + [x_m + g for g in self.generators]


@dataclass(frozen=True, eq=False)
class AffineSlice(ConvexSetSpec):
    """{base + sum t_i d_i : t_i real}"""

    base: LpVector
    directions: Tuple[LpVector, ...]
    variant = "affine"

    def __post_init__(self):
        object.__setattr__(self, "directions", tuple(self.directions))
        _check_members(self.base, self.directions, "base and directions")

    @property
    def reference(self) -> LpVector:
        return self.base

    def initial_parameters(self) -> np.ndarray:
        return np.zeros(len(self.directions))

    def point(self, theta: np.ndarray) -> LpVector:
        x = self.base
        for t, d in zip(theta, self.directions):
            x = x + d * float(t)
        return x

    def project_parameters(self, theta: np.ndarray) -> np.ndarray:
        return np.asarray(theta, dtype=float).copy()

    def parameter_gradient(self, gradient: LpVector) -> np.ndarray:
        return np.array([pairing(d, gradient).real for d in self.directions])

    def contains(self, x: LpVector, tol: float = MEMBERSHIP_TOL) -> bool:
        _check_members(self.reference, [x], "point and slice")
        target = _flatten(x - self.base)
        if not self.directions:
            return np.linalg.norm(target) <= tol * (1.0 + np.linalg.norm(_flatten(x)))
        basis = np.column_stack([_flatten(d) for d in self.directions])
        coeffs, *_ = np.linalg.lstsq(basis, target, rcond=None)
        residual = np.linalg.norm(basis @ coeffs - target)
        return residual <= tol * (1.0 + np.linalg.norm(_flatten(x)))

    def sample_points(self, count: int, rng: np.random.Generator) -> List[LpVector]:
        return [self.point(rng.standard_normal(len(self.directions))) for _ in range(count)]

    def anchor_points(self, x_m: LpVector) -> List[LpVector]:
        anchors = [self.base]
        for d in self.directions:
            anchors.extend([x_m + d, x_m - d])
        return anchors


@dataclass(frozen=True, eq=False)
class NormBall(ConvexSetSpec):
    """{x : ||x - center||_p <= radius}, parameterized by x itself"""

    center: LpVector
    radius: float
    variant = "ball"

    def __post_init__(self):
        if not self.radius > 0:
            raise DomainError("ball radius must be positive")

    @property
    def reference(self) -> LpVector:
        return self.center

    def initial_parameters(self) -> np.ndarray:
        return _flatten(self.center)

    def point(self, theta: np.ndarray) -> LpVector:
        return _unflatten(theta, self.center)

    def project_point(self, x: LpVector) -> LpVector:
        """Frobenius-nearest point of the Schatten-p ball (exact, not radial)"""
        p = self.order
        offset = x - self.center
        blocks_svd = [compact_svd(b) for b in offset.blocks]
        s = np.concatenate([svd[1] for svd in blocks_svd]) if blocks_svd else np.zeros(0)
        w = project_onto_lp_ball(s, self.radius, p)
        blocks, start = [], 0
        for (u, sv, vh), b in zip(blocks_svd, offset.blocks):
            k = sv.size
            if k == 0:
                blocks.append(np.zeros_like(b))
            else:
                blocks.append((u * w[start:start + k]) @ vh)
            start += k
        return self.center + offset.with_blocks(blocks)

    def project_parameters(self, theta: np.ndarray) -> np.ndarray:
        return _flatten(self.project_point(self.point(theta)))

    def parameter_gradient(self, gradient: LpVector) -> np.ndarray:
        return _flatten(gradient)

    def contains(self, x: LpVector, tol: float = MEMBERSHIP_TOL) -> bool:
        _check_members(self.reference, [x], "point and ball")
        return schatten_norm(x - self.center) <= self.radius * (1.0 + tol)

    def _random_direction(self, rng: np.random.Generator) -> LpVector:
        d = self.center.with_blocks(complex_gaussian(rng, n, n) for n in self.shape.block_dims)
        return d * (1.0 / schatten_norm(d))

    def sample_points(self, count: int, rng: np.random.Generator) -> List[LpVector]:
        return [
            self.center + self._random_direction(rng) * (self.radius * rng.random())
            for _ in range(count)
        ]

    def anchor_points(self, x_m: LpVector) -> List[LpVector]:
        anchors = [self.center]
        offset = x_m - self.center
        norm = schatten_norm(offset)
        if norm > 0:
            anchors.append(self.center - offset * (self.radius / norm))
        return anchors
