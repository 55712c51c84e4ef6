"""
JSON Codec
Pydantic schemas for the file formats: algebra shapes, matrices as
row-major lists of [re, im] pairs, functionals, L_p vectors, convex sets
and channels
"""

from typing import Any, Dict, List, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from src.algebra.algebra import AlgebraShape, NormalFunctional
from src.channels.kraus import KrausChannel
from src.lp.lp_space import LpVector
from src.projection.convex_sets import AffineSlice, ConeHull, ConvexSetSpec, NormBall
from .errors import DomainError, ParseError
from .file_utils import FileUtils

Pair = Tuple[float, float]


class AlgebraModel(BaseModel):
    blocks: List[int]

    @field_validator("blocks")
    @classmethod
    def positive_blocks(cls, value: List[int]) -> List[int]:
        if not value or any(n < 1 for n in value):
            raise ValueError("block dimensions must be a non-empty list of positive integers")
        return value

    def to_shape(self) -> AlgebraShape:
        return AlgebraShape(tuple(self.blocks))


class FunctionalModel(BaseModel):
    algebra: AlgebraModel
    blocks: List[List[Pair]]


class LpVectorModel(BaseModel):
    algebra: AlgebraModel
    p: float
    blocks: List[List[Pair]]


class ConvexSetModel(BaseModel):
    variant: Literal["cone", "affine", "ball"]
    generators: Optional[List[LpVectorModel]] = None
    base: Optional[LpVectorModel] = None
    directions: Optional[List[LpVectorModel]] = None
    center: Optional[LpVectorModel] = None
    radius: Optional[float] = None


class ChannelModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    in_shape: AlgebraModel = Field(alias="in")
    out_shape: AlgebraModel = Field(alias="out")
    kraus: List[List[Pair]]


# ============= Matrices =============

def decode_matrix(pairs: List[Pair], rows: int, cols: int) -> np.ndarray:
    if len(pairs) != rows * cols:
        raise ParseError(f"matrix has {len(pairs)} entries, expected {rows}x{cols}")
    arr = np.asarray(pairs, dtype=float).reshape(rows, cols, 2)
    return arr[..., 0] + 1j * arr[..., 1]


def encode_matrix(matrix: np.ndarray) -> List[List[float]]:
    flat = np.asarray(matrix, dtype=complex).ravel()
    return [[float(z.real), float(z.imag)] for z in flat]


def _blocks(shape: AlgebraShape, raw: List[List[Pair]]) -> List[np.ndarray]:
    if len(raw) != shape.num_blocks:
        raise ParseError(f"{len(raw)} blocks given for an algebra with {shape.num_blocks}")
    return [decode_matrix(b, n, n) for b, n in zip(raw, shape.block_dims)]


def _validate(model_cls, data: Dict[str, Any]):
    try:
        return model_cls.model_validate(data)
    except ValidationError as e:
        raise ParseError(f"invalid {model_cls.__name__}: {e}") from e


# ============= Decoders =============

def functional_from_dict(data: Dict[str, Any]) -> NormalFunctional:
    model = _validate(FunctionalModel, data)
    shape = model.algebra.to_shape()
    return NormalFunctional(shape, _blocks(shape, model.blocks))


def lp_vector_from_model(model: LpVectorModel) -> LpVector:
    shape = model.algebra.to_shape()
    return LpVector(shape, model.p, _blocks(shape, model.blocks))


def lp_vector_from_dict(data: Dict[str, Any]) -> LpVector:
    return lp_vector_from_model(_validate(LpVectorModel, data))


def convex_set_from_dict(data: Dict[str, Any]) -> ConvexSetSpec:
    model = _validate(ConvexSetModel, data)
    if model.variant == "cone":
        if not model.generators:
            raise ParseError("cone needs 'generators'")
        return ConeHull(tuple(lp_vector_from_model(g) for g in model.generators))
    if model.variant == "affine":
        if model.base is None:
            raise ParseError("affine slice needs 'base'")
        directions = tuple(lp_vector_from_model(d) for d in model.directions or [])
        return AffineSlice(lp_vector_from_model(model.base), directions)
    if model.center is None or model.radius is None:
        raise ParseError("ball needs 'center' and 'radius'")
    return NormBall(lp_vector_from_model(model.center), model.radius)


def channel_from_dict(data: Dict[str, Any]) -> KrausChannel:
    model = _validate(ChannelModel, data)
    in_shape, out_shape = model.in_shape.to_shape(), model.out_shape.to_shape()
    ops = [decode_matrix(k, out_shape.total_dim, in_shape.total_dim) for k in model.kraus]
    return KrausChannel(in_shape, out_shape, ops)


# ============= Encoders =============

def functional_to_dict(omega: NormalFunctional) -> Dict[str, Any]:
    return {
        "algebra": omega.shape.to_dict(),
        "blocks": [encode_matrix(b) for b in omega.blocks],
    }


def lp_vector_to_dict(x: LpVector) -> Dict[str, Any]:
    return {
        "algebra": x.shape.to_dict(),
        "p": x.order,
        "blocks": [encode_matrix(b) for b in x.blocks],
    }


def convex_set_to_dict(C: ConvexSetSpec) -> Dict[str, Any]:
    if isinstance(C, ConeHull):
        return {"variant": "cone", "generators": [lp_vector_to_dict(g) for g in C.generators]}
    if isinstance(C, AffineSlice):
        return {
            "variant": "affine",
            "base": lp_vector_to_dict(C.base),
            "directions": [lp_vector_to_dict(d) for d in C.directions],
        }
    if isinstance(C, NormBall):
        return {"variant": "ball", "center": lp_vector_to_dict(C.center), "radius": C.radius}
    raise DomainError(f"unknown convex set {type(C).__name__}")


# ============= Files =============

def load_functional(path: str) -> NormalFunctional:
    return functional_from_dict(FileUtils.load_json(path))


def load_lp_vector(path: str) -> LpVector:
    return lp_vector_from_dict(FileUtils.load_json(path))


def load_convex_set(path: str) -> ConvexSetSpec:
    return convex_set_from_dict(FileUtils.load_json(path))


def load_channel(path: str) -> KrausChannel:
    return channel_from_dict(FileUtils.load_json(path))
