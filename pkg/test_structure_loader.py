import json

import pytest
from pydantic import ValidationError

from algebra.errors import StructureFileError, UnknownVariableError
from algebra.exterior import MultiForm, Multivector
from algebroids.algebroid import Algebroid
from algebroids.jacobi_pair import JacobiStructure
from bialgebroids.glb import check_glb
from bialgebroids.lie_bialgebras import BUILTIN_EXAMPLES
from schemas.structure_file import StructureFile, StructureKind
from structure_loader import (
    EXAMPLE_NAMES,
    build_algebroid,
    build_bivector,
    build_cocycle_form,
    build_dual,
    build_glb_pair,
    build_jacobi,
    build_yb_data,
    emit_example,
    load_structure,
    structure_to_json,
    write_structure,
)

SHIPPED = {
    'broken.json': StructureKind.JACOBI,
    'contact_r3.json': StructureKind.JACOBI,
    'gl2.json': StructureKind.YB_DATA,
    'heisenberg.json': StructureKind.YB_DATA,
    'lie_bialgebra_2d.json': StructureKind.GLB_PAIR,
    'plane_tangent.json': StructureKind.ALGEBROID,
    'su2_u2.json': StructureKind.YB_DATA,
}


def write_document(tmp_path, document, name='structure.json'):
    path = tmp_path / name
    path.write_text(json.dumps(document))
    return path


def lie_algebra_document(**overrides):
    document = {
        'kind': 'lie_algebra',
        'rank': 3,
        'bracket': [{'i': 1, 'j': 2, 'coeffs': ['0', '0', '1']}],
    }
    document.update(overrides)
    return document


@pytest.mark.parametrize('filename, kind', sorted(SHIPPED.items()))
def test_shipped_structures_validate(structures_dir, filename, kind):
    structure = load_structure(structures_dir / filename)
    assert structure.kind == kind


def test_contact_file_is_the_builtin_contact_structure(structures_dir, contact):
    structure = build_jacobi(load_structure(structures_dir / 'contact_r3.json'))
    assert structure.ctx == contact.ctx
    assert structure.bivector == contact.bivector
    assert structure.vector == contact.vector


@pytest.mark.parametrize('name', ['heisenberg', 'su2_u2', 'gl2'])
def test_yb_files_match_the_builtin_data(structures_dir, name):
    expected = BUILTIN_EXAMPLES[name]()
    data = build_yb_data(load_structure(structures_dir / f'{name}.json'))
    assert data.algebra.same_structure(expected.algebra)
    assert data.r == expected.r
    assert data.xbar0 == expected.xbar0


def test_lie_bialgebra_file(structures_dir):
    p = build_glb_pair(load_structure(structures_dir / 'lie_bialgebra_2d.json'))
    assert p.rank == 2
    assert p.phi0.is_zero()
    assert p.x0.is_zero()
    assert p.dual.generator_bracket(1, 2) == p.dual.generator(2)
    assert check_glb(p).passed


def test_plane_tangent_file(structures_dir):
    structure = load_structure(structures_dir / 'plane_tangent.json')
    algebroid = build_algebroid(structure)
    assert algebroid.same_structure(Algebroid.tangent(algebroid.ctx))
    assert build_cocycle_form(structure, algebroid) == MultiForm.basis(algebroid.ctx, 2, 1)
    x = algebroid.ctx.var('x')
    assert build_bivector(structure, algebroid) == Multivector.basis(algebroid.ctx, 2, 1, 2) * x


def test_missing_cocycle_form_reads_as_zero():
    structure = StructureFile.model_validate(lie_algebra_document())
    algebroid = build_algebroid(structure)
    assert build_cocycle_form(structure, algebroid).is_zero()


def test_reversed_bracket_entry_is_negated():
    structure = StructureFile.model_validate(
        lie_algebra_document(bracket=[{'i': 2, 'j': 1, 'coeffs': [0, 0, 1]}])
    )
    algebroid = build_algebroid(structure)
    assert algebroid.generator_bracket(1, 2) == -algebroid.generator(3)


def test_integer_entries_are_read_as_text():
    structure = StructureFile.model_validate(
        lie_algebra_document(bracket=[{'i': 1, 'j': 2, 'coeffs': [0, 0, 1]}])
    )
    assert structure.bracket[0].coeffs == ['0', '0', '1']


@pytest.mark.parametrize('name', EXAMPLE_NAMES)
def test_emitted_examples_load_back(tmp_path, name):
    path = tmp_path / f'{name}.json'
    write_structure(emit_example(name), path)
    structure = load_structure(path)
    if name == 'contact_r3':
        loaded = build_jacobi(structure)
        expected = JacobiStructure.contact_r3()
        assert loaded.bivector == expected.bivector
        assert loaded.vector == expected.vector
    else:
        loaded = build_yb_data(structure)
        expected = BUILTIN_EXAMPLES[name]()
        assert loaded.algebra.same_structure(expected.algebra)
        assert loaded.r == expected.r
        assert loaded.xbar0 == expected.xbar0


def test_emitted_json_leaves_out_absent_fields():
    document = json.loads(structure_to_json(emit_example('heisenberg')))
    assert document['kind'] == 'yb_data'
    assert 'dual' not in document
    assert 'anchor' not in document


def test_unknown_example():
    with pytest.raises(StructureFileError, match='Unknown example'):
        emit_example('sl3')


def test_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_structure(tmp_path / 'absent.json')


def test_file_that_is_not_json(tmp_path):
    path = tmp_path / 'notes.json'
    path.write_text('kind: jacobi')
    with pytest.raises(json.JSONDecodeError):
        load_structure(path)


@pytest.mark.parametrize('document', [
    lie_algebra_document(bracket=[{'i': 1, 'j': 1, 'coeffs': ['0', '0', '1']}]),
    lie_algebra_document(bracket=[{'i': 1, 'j': 4, 'coeffs': ['0', '0', '1']}]),
    lie_algebra_document(bracket=[{'i': 1, 'j': 2, 'coeffs': ['0', '1']}]),
    lie_algebra_document(ring={'vars': ['x']}),
    lie_algebra_document(anchor=[[], [], []]),
    lie_algebra_document(rank=None),
    lie_algebra_document(colour='blue'),
    {'kind': 'glb_pair', 'rank': 1, 'anchor': [[]], 'cocycle_form': ['0'], 'cocycle_vector': ['0']},
    {'kind': 'jacobi', 'ring': {'vars': ['x', 'y']}, 'bivector': [], 'vector': ['0']},
    {'kind': 'jacobi', 'ring': {'vars': ['x', 'y']},
     'bivector': [{'indices': [1, 2, 2], 'coeff': '1'}], 'vector': ['0', '0']},
    {'kind': 'yb_data', 'rank': 2, 'bivector': [{'indices': [1, 3], 'coeff': '1'}],
     'vector': ['0', '0']},
    {'kind': 'manifold'},
])
def test_schema_violations(tmp_path, document):
    with pytest.raises(ValidationError):
        load_structure(write_document(tmp_path, document))


def test_parse_errors_name_the_entry():
    structure = StructureFile.model_validate({
        'kind': 'jacobi',
        'ring': {'vars': ['x', 'y']},
        'bivector': [{'indices': [1, 2], 'coeff': 'x + w'}],
        'vector': ['0', '0'],
    })
    with pytest.raises(UnknownVariableError) as excinfo:
        build_jacobi(structure)
    assert 'bivector[0].coeff' in str(excinfo.value)


def test_reserved_ring_variable():
    structure = StructureFile.model_validate(
        {'kind': 'algebroid', 'ring': {'vars': ['t']}, 'rank': 1, 'anchor': [['1']]}
    )
    with pytest.raises(StructureFileError, match='ring'):
        build_algebroid(structure)


def test_anchor_of_the_wrong_width():
    structure = StructureFile.model_validate(
        {'kind': 'algebroid', 'ring': {'vars': ['x', 'y']}, 'rank': 1, 'anchor': [['1']]}
    )
    with pytest.raises(StructureFileError, match='algebroid'):
        build_algebroid(structure)


def test_builders_reject_the_wrong_kind(structures_dir):
    contact = load_structure(structures_dir / 'contact_r3.json')
    heisenberg = load_structure(structures_dir / 'heisenberg.json')
    with pytest.raises(StructureFileError):
        build_algebroid(contact)
    with pytest.raises(StructureFileError):
        build_yb_data(contact)
    with pytest.raises(StructureFileError):
        build_jacobi(heisenberg)
    with pytest.raises(StructureFileError):
        build_glb_pair(heisenberg)
    with pytest.raises(StructureFileError):
        build_dual(heisenberg)


def test_bivector_is_required_when_asked_for():
    structure = StructureFile.model_validate(lie_algebra_document())
    with pytest.raises(StructureFileError):
        build_bivector(structure, build_algebroid(structure))


def test_entries_with_surrounding_whitespace(contact):
    structure = StructureFile.model_validate({
        'kind': 'jacobi',
        'ring': {'vars': ['x', 'y', 'z']},
        'bivector': [{'indices': [1, 2], 'coeff': '1 '}, {'indices': [2, 3], 'coeff': ' -y '}],
        'vector': ['0', '0 ', '1\n'],
    })
    loaded = build_jacobi(structure)
    assert loaded.bivector == contact.bivector
    assert loaded.vector == contact.vector
