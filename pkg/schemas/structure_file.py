"""
Structure file schema: one JSON document per structure.
"""

from enum import Enum
from typing import List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

# Polynomials are strings in the parser grammar; bare integers are accepted too.
Polynomial = Union[int, str]


def _as_text(values):
    return [str(value) for value in values]


class StructureKind(str, Enum):
    """What a structure file describes."""
    LIE_ALGEBRA = "lie_algebra"
    ALGEBROID = "algebroid"
    JACOBI = "jacobi"
    GLB_PAIR = "glb_pair"
    YB_DATA = "yb_data"


class RingSpec(BaseModel):
    """Coefficient ring declaration."""
    model_config = ConfigDict(extra='forbid')

    vars: List[str] = Field(default_factory=list)
    time_extended: bool = False


class BracketEntry(BaseModel):
    """[e_i, e_j] = sum_k coeffs[k-1] e_k."""
    model_config = ConfigDict(extra='forbid')

    i: int = Field(ge=1)
    j: int = Field(ge=1)
    coeffs: List[Polynomial]

    @field_validator('coeffs')
    @classmethod
    def coeffs_as_text(cls, value):
        return _as_text(value)

    @model_validator(mode='after')
    def distinct_indices(self):
        if self.i == self.j:
            raise ValueError(f"bracket entry ({self.i}, {self.j}) repeats an index")
        return self


class MultivectorEntry(BaseModel):
    """coeff * e_{indices[0]} ^ e_{indices[1]} ^ ..."""
    model_config = ConfigDict(extra='forbid')

    indices: List[int]
    coeff: Polynomial

    @field_validator('coeff')
    @classmethod
    def coeff_as_text(cls, value):
        return str(value)

    @field_validator('indices')
    @classmethod
    def positive_indices(cls, value):
        if any(index < 1 for index in value):
            raise ValueError(f"indices must be >= 1, got {value}")
        if len(set(value)) != len(value):
            raise ValueError(f"indices repeat: {value}")
        return value


class DualSpec(BaseModel):
    """Anchor and bracket of the dual algebroid, in the dual frame."""
    model_config = ConfigDict(extra='forbid')

    anchor: Optional[List[List[Polynomial]]] = None
    bracket: List[BracketEntry] = Field(default_factory=list)

    @field_validator('anchor')
    @classmethod
    def anchor_as_text(cls, value):
        return None if value is None else [_as_text(row) for row in value]


class StructureFile(BaseModel):
    """A Lie algebra, algebroid, Jacobi pair, generalized Lie bialgebroid or
    Yang-Baxter solution, with polynomial entries over the declared ring."""
    model_config = ConfigDict(extra='forbid')

    kind: StructureKind
    name: Optional[str] = None
    description: Optional[str] = None
    ring: RingSpec = Field(default_factory=RingSpec)
    rank: Optional[int] = Field(default=None, ge=0)
    anchor: Optional[List[List[Polynomial]]] = None
    bracket: List[BracketEntry] = Field(default_factory=list)
    cocycle_form: Optional[List[Polynomial]] = None
    cocycle_vector: Optional[List[Polynomial]] = None
    bivector: Optional[List[MultivectorEntry]] = None
    vector: Optional[List[Polynomial]] = None
    dual: Optional[DualSpec] = None

    @field_validator('cocycle_form', 'cocycle_vector', 'vector')
    @classmethod
    def components_as_text(cls, value):
        return None if value is None else _as_text(value)

    @field_validator('anchor')
    @classmethod
    def anchor_as_text(cls, value):
        return None if value is None else [_as_text(row) for row in value]

    @model_validator(mode='after')
    def kind_fields(self):
        kind = self.kind
        point_kinds = (StructureKind.LIE_ALGEBRA, StructureKind.YB_DATA)
        if kind in point_kinds and self.ring.vars:
            raise ValueError(f"{kind.value} files live over a point; ring.vars must be empty")
        if kind in point_kinds and self.anchor is not None:
            raise ValueError(f"{kind.value} files have no anchor")

        if kind == StructureKind.JACOBI:
            self._require('bivector', 'vector')
            width = len(self.ring.vars) + (1 if self.ring.time_extended else 0)
            if self.rank is not None and self.rank != width:
                raise ValueError(f"jacobi rank must equal the number of directions ({width})")
            if len(self.vector) != width:
                raise ValueError(f"vector has {len(self.vector)} components, expected {width}")
            self._check_entries(self.bivector, width, 2, 'bivector')
            return self

        self._require('rank')
        if kind in (StructureKind.ALGEBROID, StructureKind.GLB_PAIR):
            self._require('anchor')
        if kind == StructureKind.GLB_PAIR:
            self._require('dual', 'cocycle_form', 'cocycle_vector')
        if kind == StructureKind.YB_DATA:
            self._require('bivector', 'vector')

        for entry in self.bracket + (self.dual.bracket if self.dual else []):
            if entry.i > self.rank or entry.j > self.rank:
                raise ValueError(f"bracket entry ({entry.i}, {entry.j}) outside 1..{self.rank}")
            if len(entry.coeffs) != self.rank:
                raise ValueError(
                    f"bracket ({entry.i}, {entry.j}) has {len(entry.coeffs)} coefficients, "
                    f"expected {self.rank}"
                )
        for label in ('cocycle_form', 'cocycle_vector', 'vector'):
            values = getattr(self, label)
            if values is not None and len(values) != self.rank:
                raise ValueError(f"{label} has {len(values)} components, expected rank {self.rank}")
        if self.bivector is not None:
            self._check_entries(self.bivector, self.rank, 2, 'bivector')
        return self

    def _require(self, *names: str) -> None:
        missing = [name for name in names if getattr(self, name) is None]
        if missing:
            raise ValueError(f"{self.kind.value} files need: {', '.join(missing)}")

    @staticmethod
    def _check_entries(entries: List[MultivectorEntry], rank: int, degree: int, label: str) -> None:
        for entry in entries:
            if len(entry.indices) != degree:
                raise ValueError(f"{label} entry {entry.indices} does not have degree {degree}")
            if any(index > rank for index in entry.indices):
                raise ValueError(f"{label} entry {entry.indices} outside 1..{rank}")
