"""
D_p-Projection Solver
Minimizes x -> D_p(x, y) over a ConvexSetSpec with spectral projected
gradient steps and nonmonotone Armijo backtracking on the set's
parameterization
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Optional

import numpy as np

from src.divergence.divergence import divergence_Dp
from src.lp.embedding import duality_map
from src.lp.lp_space import LpVector, schatten_norm
from src.utils.errors import DomainError
from src.utils.sampling import make_rng
from .certificates import optimality_residuals
from .convex_sets import ConvexSetSpec

logger = logging.getLogger(__name__)


@dataclass
class SolverOptions:
    """Stopping rule and reproducibility knobs"""

    tolerance: float = 1e-8
    max_iter: int = 10_000
    seed: Optional[int] = None
    certificate_samples: int = 200
    armijo: float = 1e-4
    shrink: float = 0.5
    memory: int = 10

    def __post_init__(self):
        if not self.tolerance > 0:
            raise DomainError("solver tolerance must be positive")
        if self.max_iter < 1:
            raise DomainError("max_iter must be at least 1")
        if self.memory < 1:
            raise DomainError("line search memory must be at least 1")
        if self.seed is not None and self.seed < 0:
            raise DomainError(f"seed must be a non-negative integer, got {self.seed}")


@dataclass
class ProjectionResult:
    """Outcome of a D_p-projection"""

    x_m: LpVector
    value: float
    kkt_residual: float
    three_point_worst: float
    iterations: int
    converged: bool
    parameters: np.ndarray = field(repr=False, default=None)

    def to_dict(self) -> Dict:
        return {
            "value": self.value,
            "kkt_residual": self.kkt_residual,
            "three_point_worst": self.three_point_worst,
            "iterations": self.iterations,
            "converged": self.converged,
            "x_m_norm": schatten_norm(self.x_m),
        }


class ProjectionSolver:
    """Spectral projected gradient for the D_p-projection onto C"""

    def __init__(self, options: SolverOptions = None):
        self.options = options or SolverOptions()

    def _start(self, C: ConvexSetSpec) -> np.ndarray:
        theta = C.initial_parameters()
        if self.options.seed is not None:
            rng = make_rng(self.options.seed)
            theta = theta + 0.1 * (1.0 + np.abs(theta)) * rng.standard_normal(theta.shape)
        return C.project_parameters(theta)

    def solve(self, y: LpVector, C: ConvexSetSpec) -> ProjectionResult:
        """
        Project y onto C

        Args:
            y: element of L_p with C's shape and order
            C: convex set

        Returns:
            ProjectionResult: final iterate; converged when the projected
            gradient step is below tolerance
        """
        C.reference.check_same_space(y)
        opts = self.options
        y_tilde = duality_map(y)

        def objective(theta: np.ndarray) -> float:
            return divergence_Dp(C.point(theta), y).value

        def gradient(theta: np.ndarray) -> np.ndarray:
            x = C.point(theta)
            return C.parameter_gradient(duality_map(x) - y_tilde)

        def kkt(theta: np.ndarray, grad: np.ndarray) -> float:
            return float(np.linalg.norm(theta - C.project_parameters(theta - grad)))

        theta = self._start(C)
        f = objective(theta)
        grad = gradient(theta)
        step = 1.0 / max(np.linalg.norm(grad), 1e-12)
        residual = kkt(theta, grad)
        history = deque([f], maxlen=opts.memory)
        iterations = 0

        while residual > opts.tolerance and iterations < opts.max_iter:
            iterations += 1
            direction = C.project_parameters(theta - step * grad) - theta
            slope = float(np.dot(grad, direction))
            # nonmonotone reference: worst of the last `memory` accepted values
            f_ref = max(history)
            noise = 1e-10 * (1.0 + abs(f))
            t = 1.0
            accepted = False
            while t >= 1e-12:
                candidate = theta + t * direction
                f_new = objective(candidate)
                grad_new = gradient(candidate)
                if f_new <= f_ref + opts.armijo * t * slope:
                    accepted = True
                    break
                # approximate Wolfe: objective differences are below roundoff,
                # the directional derivative is not
                if f_new <= f + noise and float(np.dot(grad_new, direction)) <= (1.0 - 2.0 * opts.armijo) * abs(slope):
                    accepted = True
                    break
                t *= opts.shrink
            if not accepted:
                logger.debug("line search stalled at iteration %d", iterations)
                break
            s = candidate - theta
            change = grad_new - grad
            curvature = float(np.dot(s, change))
            if curvature > 0:
                step = float(np.dot(s, s)) / curvature
            else:
                step = 1.0 / max(np.linalg.norm(grad_new), 1e-12)
            step = min(max(step, 1e-12), 1e12)
            theta, f, grad = candidate, f_new, grad_new
            history.append(f)
            residual = kkt(theta, grad)

        converged = residual <= opts.tolerance
        if not converged:
            logger.warning(
                "projection stopped after %d iterations with kkt residual %.3e",
                iterations, residual,
            )

        x_m = C.point(theta)
        three_point = float("nan")
        if opts.certificate_samples > 0:
            three_point = optimality_residuals(
                x_m, y, C,
                samples=opts.certificate_samples,
                seed=0 if opts.seed is None else opts.seed,
            )["three_point"]

        return ProjectionResult(
            x_m=x_m,
            value=max(0.0, f),
            kkt_residual=residual,
            three_point_worst=three_point,
            iterations=iterations,
            converged=converged,
            parameters=theta,
        )


def project_Dp(y: LpVector, C: ConvexSetSpec, options: SolverOptions = None) -> ProjectionResult:
    """Functional entry point around ProjectionSolver"""
    return ProjectionSolver(options).solve(y, C)
