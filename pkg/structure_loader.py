"""
Structure file loading and writing.

Reads a JSON structure file, validates it against the schema and turns it into
the library objects (Algebroid, JacobiStructure, YangBaxterData, GLBPair).
Writes the built-in examples back out in the same format.
"""

import json
import logging
from contextlib import contextmanager
from pathlib import Path
from typing import List, Optional, Sequence, Union

from algebra.errors import AlgebroidError, ParseError, StructureFileError
from algebra.exterior import MultiForm, Multivector
from algebra.polynomial_parser import parse_scalar
from algebra.scalar_ring import RingContext, Scalar
from algebroids.algebroid import Algebroid
from algebroids.jacobi_pair import JacobiStructure
from bialgebroids.glb import GLBPair
from bialgebroids.lie_bialgebras import BUILTIN_EXAMPLES, YangBaxterData
from schemas.structure_file import (
    BracketEntry,
    MultivectorEntry,
    RingSpec,
    StructureFile,
    StructureKind,
)

logger = logging.getLogger(__name__)

EXAMPLE_NAMES = ('contact_r3',) + tuple(BUILTIN_EXAMPLES)


def load_structure(path: Union[str, Path]) -> StructureFile:
    """Read and schema-validate a structure file.

    Raises:
        FileNotFoundError: No such file
        json.JSONDecodeError: Not JSON
        pydantic.ValidationError: Schema violation, with the offending field
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Structure file not found: {path}")
    with open(path, 'r') as f:
        document = json.load(f)
    structure = StructureFile.model_validate(document)
    logger.debug(f"Loaded {structure.kind.value} structure {structure.name or path.name}")
    return structure


def write_structure(structure: StructureFile, path: Union[str, Path]) -> None:
    with open(path, 'w') as f:
        f.write(structure_to_json(structure))
        f.write('\n')


def structure_to_json(structure: StructureFile) -> str:
    return json.dumps(structure.model_dump(mode='json', exclude_none=True), indent=2)


# Parsing entries


def build_ring(spec: RingSpec) -> RingContext:
    try:
        return RingContext(spec.vars, time_extended=spec.time_extended)
    except ValueError as e:
        raise StructureFileError(f"ring: {e}") from e


def parse_entry(text: str, ctx: RingContext, where: str) -> Scalar:
    """parse_scalar with the location of the entry in the message."""
    try:
        return parse_scalar(text, ctx)
    except ParseError as e:
        raise type(e)(f"{where}: {e}") from e


def parse_components(values: Sequence[str], ctx: RingContext, where: str) -> List[Scalar]:
    return [parse_entry(text, ctx, f"{where}[{k}]") for k, text in enumerate(values)]


def _anchor(rows: Optional[Sequence[Sequence[str]]], ctx: RingContext, where: str):
    if rows is None:
        return None
    return [parse_components(row, ctx, f"{where}[{i}]") for i, row in enumerate(rows)]


def _structure(entries: Sequence[BracketEntry], ctx: RingContext, where: str):
    return {
        (entry.i, entry.j): parse_components(entry.coeffs, ctx, f"{where}[{n}].coeffs")
        for n, entry in enumerate(entries)
    }


def _multivector(entries: Sequence[MultivectorEntry], ctx: RingContext, rank: int,
                 degree: int, where: str) -> Multivector:
    records = [(entry.indices, parse_entry(entry.coeff, ctx, f"{where}[{n}].coeff"))
               for n, entry in enumerate(entries)]
    return Multivector.from_entries(ctx, rank, degree, records)


@contextmanager
def _domain(where: str):
    """Re-raise library validation errors as StructureFileError."""
    try:
        yield
    except (ParseError, StructureFileError):
        raise
    except (AlgebroidError, ValueError) as e:
        raise StructureFileError(f"{where}: {e}") from e


# Builders


def build_algebroid(structure: StructureFile) -> Algebroid:
    """The algebroid (or Lie algebra) of a lie_algebra, algebroid, glb_pair or yb_data file."""
    if structure.kind == StructureKind.JACOBI:
        raise StructureFileError("jacobi files describe a Jacobi pair, not an algebroid")
    ctx = build_ring(structure.ring)
    with _domain('algebroid'):
        return Algebroid(ctx, structure.rank,
                         _anchor(structure.anchor, ctx, 'anchor'),
                         _structure(structure.bracket, ctx, 'bracket'),
                         name=structure.name)


def build_dual(structure: StructureFile) -> Algebroid:
    if structure.dual is None:
        raise StructureFileError("no dual algebroid declared")
    ctx = build_ring(structure.ring)
    with _domain('dual'):
        return Algebroid(ctx, structure.rank,
                         _anchor(structure.dual.anchor, ctx, 'dual.anchor'),
                         _structure(structure.dual.bracket, ctx, 'dual.bracket'),
                         name=f"{structure.name or 'A'}*")


def build_cocycle_form(structure: StructureFile, algebroid: Algebroid) -> MultiForm:
    """phi0 from ``cocycle_form``, or zero when absent."""
    if structure.cocycle_form is None:
        return algebroid.zero_form()
    components = parse_components(structure.cocycle_form, algebroid.ctx, 'cocycle_form')
    return MultiForm.from_components(algebroid.ctx, components)


def build_bivector(structure: StructureFile, algebroid: Algebroid) -> Multivector:
    if structure.bivector is None:
        raise StructureFileError(f"{structure.kind.value} file has no bivector")
    with _domain('bivector'):
        return _multivector(structure.bivector, algebroid.ctx, algebroid.rank, 2, 'bivector')


def build_jacobi(structure: StructureFile) -> JacobiStructure:
    if structure.kind != StructureKind.JACOBI:
        raise StructureFileError(f"expected a jacobi file, got {structure.kind.value}")
    ctx = build_ring(structure.ring)
    rank = len(ctx.directions)
    with _domain('jacobi'):
        bivector = _multivector(structure.bivector, ctx, rank, 2, 'bivector')
        vector = Multivector.from_components(ctx, parse_components(structure.vector, ctx, 'vector'))
        return JacobiStructure(ctx, bivector, vector, name=structure.name)


def build_yb_data(structure: StructureFile) -> YangBaxterData:
    if structure.kind != StructureKind.YB_DATA:
        raise StructureFileError(f"expected a yb_data file, got {structure.kind.value}")
    algebra = build_algebroid(structure)
    with _domain('yb_data'):
        r = _multivector(structure.bivector, algebra.ctx, algebra.rank, 2, 'bivector')
        xbar0 = Multivector.from_components(
            algebra.ctx, parse_components(structure.vector, algebra.ctx, 'vector')
        )
        return YangBaxterData(algebra, r, xbar0, name=structure.name)


def build_glb_pair(structure: StructureFile) -> GLBPair:
    if structure.kind != StructureKind.GLB_PAIR:
        raise StructureFileError(f"expected a glb_pair file, got {structure.kind.value}")
    algebroid = build_algebroid(structure)
    dual = build_dual(structure)
    phi0 = build_cocycle_form(structure, algebroid)
    x0 = Multivector.from_components(
        algebroid.ctx, parse_components(structure.cocycle_vector, algebroid.ctx, 'cocycle_vector')
    )
    with _domain('glb_pair'):
        return GLBPair(algebroid, dual, phi0, x0, name=structure.name)


# Writers


def _ring_spec(ctx: RingContext) -> RingSpec:
    return RingSpec(vars=list(ctx.variables), time_extended=ctx.time_extended)


def _texts(values: Sequence[Scalar]) -> List[str]:
    return [value.format() for value in values]


def _bracket_entries(algebroid: Algebroid) -> List[BracketEntry]:
    return [BracketEntry(i=i, j=j, coeffs=_texts(value.components()))
            for (i, j), value in sorted(algebroid.structure_functions().items())]


def _entries(element: Multivector) -> List[MultivectorEntry]:
    return [MultivectorEntry(**entry) for entry in element.to_entries()]


def jacobi_to_file(structure: JacobiStructure) -> StructureFile:
    return StructureFile(
        kind=StructureKind.JACOBI,
        name=structure.name,
        ring=_ring_spec(structure.ctx),
        bivector=_entries(structure.bivector),
        vector=_texts(structure.vector.components()),
    )


def yb_data_to_file(data: YangBaxterData) -> StructureFile:
    return StructureFile(
        kind=StructureKind.YB_DATA,
        name=data.name,
        rank=data.rank,
        bracket=_bracket_entries(data.algebra),
        bivector=_entries(data.r),
        vector=_texts(data.xbar0.components()),
    )


def algebroid_to_file(algebroid: Algebroid, phi0: Optional[MultiForm] = None,
                      bivector: Optional[Multivector] = None,
                      name: Optional[str] = None) -> StructureFile:
    """An algebroid file; point-base algebroids are written as lie_algebra files."""
    point = algebroid.is_point_base()
    return StructureFile(
        kind=StructureKind.LIE_ALGEBRA if point else StructureKind.ALGEBROID,
        name=name or algebroid.name,
        ring=_ring_spec(algebroid.ctx),
        rank=algebroid.rank,
        anchor=None if point else [_texts(row) for row in algebroid.anchor_rows],
        bracket=_bracket_entries(algebroid),
        cocycle_form=None if phi0 is None else _texts(phi0.components()),
        bivector=None if bivector is None else _entries(bivector),
    )


def glb_pair_to_file(p: GLBPair) -> StructureFile:
    dual = algebroid_to_file(p.dual)
    return StructureFile(
        kind=StructureKind.GLB_PAIR,
        name=p.label,
        ring=_ring_spec(p.ctx),
        rank=p.rank,
        anchor=[_texts(row) for row in p.algebroid.anchor_rows],
        bracket=_bracket_entries(p.algebroid),
        cocycle_form=_texts(p.phi0.components()),
        cocycle_vector=_texts(p.x0.components()),
        dual={'anchor': [_texts(row) for row in p.dual.anchor_rows], 'bracket': dual.bracket},
    )


def emit_example(name: str) -> StructureFile:
    """The built-in example ``name`` as a structure file.

    Raises:
        StructureFileError: Unknown example name
    """
    if name == 'contact_r3':
        return jacobi_to_file(JacobiStructure.contact_r3())
    if name not in BUILTIN_EXAMPLES:
        raise StructureFileError(
            f"Unknown example '{name}' (available: {', '.join(EXAMPLE_NAMES)})"
        )
    return yb_data_to_file(BUILTIN_EXAMPLES[name]())
