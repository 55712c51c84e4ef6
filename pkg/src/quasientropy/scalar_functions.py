"""
Scalar Functions for Quasi-Entropies
Named built-ins ("g_p:alpha=...", "t_log_t", "identity", "one") and
tabulated user functions (piecewise-linear interpolation)
"""

from dataclasses import dataclass
from typing import Callable, Sequence, Tuple, Union

import numpy as np

from src.lp.embedding import alpha_to_order
from src.lp.lp_space import conjugate_order, validate_order
from src.utils.errors import DomainError, ParseError

ScalarFunction = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class GpFunction:
    """g_p(t) = p + q t - pq t^{1/p}"""

    p: float

    @classmethod
    def from_alpha(cls, alpha: float) -> "GpFunction":
        return cls(alpha_to_order(alpha))

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        q = conjugate_order(self.p)
        return self.p + q * t - self.p * q * t ** (1.0 / self.p)


def t_log_t(t):
    t = np.asarray(t, dtype=float)
    out = np.zeros_like(t)
    positive = t > 0
    out[positive] = t[positive] * np.log(t[positive])
    return out


def identity(t):
    return np.asarray(t, dtype=float)


def one(t):
    return np.ones_like(np.asarray(t, dtype=float))


@dataclass(frozen=True)
class TabulatedFunction:
    """Piecewise-linear function through user points; undefined outside their range"""

    points: Tuple[Tuple[float, float], ...]

    def __post_init__(self):
        pts = tuple(sorted((float(x), float(y)) for x, y in self.points))
        if len(pts) < 2:
            raise DomainError("a tabulated function needs at least two points")
        xs = [x for x, _ in pts]
        if len(set(xs)) != len(xs):
            raise DomainError("tabulated abscissae must be distinct")
        if xs[0] < 0:
            raise DomainError("tabulated functions live on [0, inf)")
        object.__setattr__(self, "points", pts)

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        xs = np.array([x for x, _ in self.points])
        ys = np.array([y for _, y in self.points])
        if np.any(t < xs[0] - 1e-12) or np.any(t > xs[-1] + 1e-12):
            raise DomainError(
                f"argument outside the tabulated range [{xs[0]}, {xs[-1]}]"
            )
        return np.interp(t, xs, ys)


BUILTINS = {
    "t_log_t": t_log_t,
    "identity": identity,
    "one": one,
}


def parse_function_name(name: str) -> ScalarFunction:
    """
    Resolve a named built-in

    Accepted forms: "g_p:alpha=0.5", "g_p:α=0.5", "g_p:p=3", "t_log_t",
    "identity", "one"
    """
    name = name.strip()
    if name in BUILTINS:
        return BUILTINS[name]
    if name.startswith("g_p:"):
        key, _, raw = name[4:].partition("=")
        try:
            value = float(raw)
        except ValueError as e:
            raise ParseError(f"bad parameter in '{name}'") from e
        key = key.strip()
        if key in ("alpha", "α"):
            return GpFunction.from_alpha(value)
        if key == "p":
            return GpFunction(validate_order(value))
        raise ParseError(f"unknown g_p parameter '{key}'")
    raise ParseError(f"unknown scalar function '{name}'")


def resolve_function(
    function: Union[str, ScalarFunction, Sequence[Sequence[float]]]
) -> ScalarFunction:
    """Accept a name, a callable or a list of (t, g(t)) points"""
    if isinstance(function, str):
        return parse_function_name(function)
    if callable(function):
        return function
    return TabulatedFunction(tuple(tuple(pt) for pt in function))
