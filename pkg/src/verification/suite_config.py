"""
Suite Configuration
Validated settings for a property-verification run
"""

from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from src.algebra.algebra import AlgebraShape
from src.config.settings import get_settings
from src.utils.errors import ParseError
from src.utils.file_utils import FileUtils

DEFAULT_DIMS = [[2], [3], [1, 2], [2, 2], [4], [2, 3], [1, 2, 3], [6]]
DEFAULT_ALPHAS = [-0.6, -1.0 / 3.0, 0.0, 1.0 / 3.0, 0.6]
DEFAULT_ORDERS = [1.5, 2.0, 3.0, 4.0]

DEFAULT_SAMPLES: Dict[str, int] = {
    "algebra.polar_roundtrip": 100,
    "channels.cptp": 50,
    "channels.monotonicity": 200,
    "divergence.classical_reduction": 200,
    "divergence.continuity_estimate": 500,
    "divergence.continuity_sharp": 500,
    "divergence.cosine_law": 200,
    "divergence.d2_half_norm": 200,
    "divergence.duality_symmetry": 200,
    "divergence.hellinger": 200,
    "divergence.joint_convexity": 300,
    "divergence.lower_bound": 1000,
    "divergence.neighbourhoods": 300,
    "divergence.pythagorean": 300,
    "divergence.scaling_inequalities": 300,
    "divergence.self_zero": 200,
    "divergence.symmetry": 100,
    "divergence.worked_example": 1,
    "lp.double_duality": 500,
    "lp.duality_identities": 500,
    "lp.embedding_roundtrip": 100,
    "lp.fenchel_young": 100,
    "lp.functional_identity": 100,
    "lp.geodesic_endpoints": 50,
    "lp.holder_inequality": 200,
    "lp.legendre_conjugacy": 100,
    "lp.legendre_derivative": 100,
    "projection.alpha_pythagorean": 1,
    "projection.certificates": 3,
    "projection.cone_closed_form": 10,
    "projection.norm_bound": 2,
    "projection.uniqueness": 2,
    "quasientropy.moments": 50,
    "quasientropy.pairing_vs_spectral": 50,
    "quasientropy.profile_monotone": 50,
    "sphere.convexity_estimate": 2500,
    "sphere.divergence_formula": 100,
    "sphere.tangent_projector": 100,
}

DEFAULT_TOLERANCES: Dict[str, float] = {
    "algebra.polar_roundtrip": 1e-10,
    "channels.cptp": 1e-10,
    "channels.monotonicity": 1e-9,
    "divergence.classical_reduction": 1e-12,
    "divergence.continuity_estimate": 1e-10,
    "divergence.continuity_sharp": 1e-10,
    "divergence.cosine_law": 1e-10,
    "divergence.d2_half_norm": 1e-10,
    "divergence.duality_symmetry": 1e-10,
    "divergence.hellinger": 1e-10,
    "divergence.joint_convexity": 1e-9,
    "divergence.lower_bound": 1e-9,
    "divergence.neighbourhoods": 0.5,
    "divergence.pythagorean": 1e-10,
    "divergence.scaling_inequalities": 1e-9,
    "divergence.self_zero": 1e-12,
    "divergence.symmetry": 1e-10,
    "divergence.worked_example": 5e-7,
    "lp.double_duality": 1e-9,
    "lp.duality_identities": 1e-9,
    "lp.embedding_roundtrip": 1e-9,
    "lp.fenchel_young": 1e-10,
    "lp.functional_identity": 1e-9,
    "lp.geodesic_endpoints": 1e-9,
    "lp.holder_inequality": 1e-10,
    "lp.legendre_conjugacy": 1e-10,
    "lp.legendre_derivative": 1e-5,
    "projection.alpha_pythagorean": 1e-6,
    "projection.certificates": 1e-6,
    "projection.cone_closed_form": 1e-8,
    "projection.norm_bound": 1e-6,
    "projection.uniqueness": 1e-6,
    "quasientropy.moments": 1e-9,
    "quasientropy.pairing_vs_spectral": 1e-9,
    "quasientropy.profile_monotone": 1e-9,
    "sphere.convexity_estimate": 1e-9,
    "sphere.divergence_formula": 1e-10,
    "sphere.tangent_projector": 1e-10,
}


class SuiteConfig(BaseModel):
    """Everything a verify run depends on; two runs with equal configs produce equal reports"""

    seed: int = Field(default_factory=lambda: get_settings().seed, ge=0)
    dims: List[List[int]] = Field(default_factory=lambda: [list(d) for d in DEFAULT_DIMS])
    alphas: List[float] = Field(default_factory=lambda: list(DEFAULT_ALPHAS))
    orders: List[float] = Field(default_factory=lambda: list(DEFAULT_ORDERS))
    sample_counts: Dict[str, int] = Field(default_factory=dict)
    tolerances: Dict[str, float] = Field(default_factory=dict)
    tolerance_override: Optional[float] = None
    checks: Optional[List[str]] = None
    workers: int = 1
    solver_tolerance: float = Field(default_factory=lambda: get_settings().solver_tol)
    solver_max_iter: int = Field(default_factory=lambda: get_settings().solver_max_iter)
    certificate_samples: int = Field(default_factory=lambda: get_settings().certificate_samples)
    output: Optional[str] = None
    format: Literal["json", "csv"] = "json"

    @field_validator("alphas")
    @classmethod
    def alphas_in_range(cls, value: List[float]) -> List[float]:
        if not value:
            raise ValueError("at least one alpha is required")
        for alpha in value:
            if not -1.0 < alpha < 1.0:
                raise ValueError(f"alpha out of (-1,1): {alpha}")
        return value

    @field_validator("orders")
    @classmethod
    def orders_above_one(cls, value: List[float]) -> List[float]:
        if not value:
            raise ValueError("at least one order is required")
        for p in value:
            if not p > 1.0:
                raise ValueError(f"order must exceed 1: {p}")
        return value

    @field_validator("dims")
    @classmethod
    def dims_positive(cls, value: List[List[int]]) -> List[List[int]]:
        if not value:
            raise ValueError("at least one algebra shape is required")
        for dims in value:
            if not dims or any(n < 1 for n in dims):
                raise ValueError(f"block dimensions must be positive: {dims}")
        return value

    @field_validator("tolerances")
    @classmethod
    def tolerances_positive(cls, value: Dict[str, float]) -> Dict[str, float]:
        for name, tol in value.items():
            if not tol > 0:
                raise ValueError(f"tolerance for {name} must be positive")
        return value

    @field_validator("sample_counts")
    @classmethod
    def samples_positive(cls, value: Dict[str, int]) -> Dict[str, int]:
        for name, count in value.items():
            if count < 1:
                raise ValueError(f"sample count for {name} must be at least 1")
        return value

    @model_validator(mode="after")
    def positive_scalars(self) -> "SuiteConfig":
        if self.tolerance_override is not None and not self.tolerance_override > 0:
            raise ValueError("tolerance override must be positive")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")
        if not self.solver_tolerance > 0:
            raise ValueError("solver tolerance must be positive")
        return self

    @property
    def shapes(self) -> List[AlgebraShape]:
        return [AlgebraShape(tuple(d)) for d in self.dims]

    def samples_for(self, check: str) -> int:
        return self.sample_counts.get(check, DEFAULT_SAMPLES.get(check, 100))

    def tolerance_for(self, check: str) -> float:
        if self.tolerance_override is not None:
            return self.tolerance_override
        return self.tolerances.get(check, DEFAULT_TOLERANCES.get(check, 1e-9))

    def hashable_dict(self) -> Dict:
        """Fields that determine report contents (output location excluded)"""
        return self.model_dump(exclude={"output", "format", "workers"})


def load_suite_config(path: Optional[str] = None, **overrides) -> SuiteConfig:
    """
    Build a SuiteConfig from an optional JSON file plus keyword overrides

    Raises:
        ParseError: on malformed JSON or failed validation
    """
    data = FileUtils.load_json(path) if path else {}
    if not isinstance(data, dict):
        raise ParseError("suite config must be a JSON object")
    data.update({k: v for k, v in overrides.items() if v is not None})
    try:
        return SuiteConfig.model_validate(data)
    except ValueError as e:
        raise ParseError(f"invalid suite config: {e}") from e
