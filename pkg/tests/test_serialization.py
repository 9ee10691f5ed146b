"""Structure files: reading, writing and canonical formatting."""

import json

import pytest

from src.fixtures import FIXTURE_NAMES
from src.modules import gaussian_pair_module
from src.serialization import (
    MODULE_KIND,
    RING_KIND,
    format_file,
    format_text,
    load_structure,
    parse_text,
    same_structure,
    to_document,
)
from src.utils import InputError, ParseError, ValidationError, dumps_json

DUAL_NUMBERS = {
    'kind': RING_KIND,
    'name': 'GF(2)[eps]',
    'group': {'type': 'cyclic', 'n': 2},
    'basis': [{'name': '1', 'order': 2, 'degree': '0'},
              {'name': 'eps', 'order': 2, 'degree': '1'}],
    'one': {'1': 1},
    'mul': [['1', '1', {'1': 1}], ['1', 'eps', {'eps': 1}], ['eps', '1', {'eps': 1}]],
}


def z12i_reversed() -> dict:
    """Z12[i] with its basis listed back to front."""
    return {
        'kind': MODULE_KIND,
        'name': 'Z12[i]',
        'ring': {
            'kind': RING_KIND,
            'name': 'Z12',
            'group': {'type': 'cyclic', 'n': 2},
            'basis': [{'name': '1', 'order': 12, 'degree': '0'}],
            'one': {'1': 1},
            'mul': [['1', '1', {'1': 1}]],
        },
        'basis': [{'name': 'i', 'order': 12, 'degree': '1'},
                  {'name': '1', 'order': 12, 'degree': '0'}],
        'action': [['1', 'i', {'i': 1}], ['1', '1', {'1': 1}]],
    }


# ============================================================================
# ROUND TRIPS
# ============================================================================

@pytest.mark.parametrize('name', FIXTURE_NAMES)
def test_fixture_documents_reload_to_the_same_structure(name, fixture_of):
    fixture = fixture_of(name)
    document = to_document(fixture.structure, fixture.named)
    loaded = parse_text(dumps_json(document))
    assert to_document(loaded.structure, loaded.submodules) == document
    if fixture.module is not None:
        assert set(loaded.submodules) == set(fixture.named)
        for key, sub in fixture.named.items():
            assert loaded.submodules[key].size() == sub.size()


def test_same_structure_ignores_basis_order():
    reordered = parse_text(json.dumps(z12i_reversed())).module
    assert same_structure(reordered, gaussian_pair_module(12))
    assert not same_structure(reordered, gaussian_pair_module(6))


# ============================================================================
# FMT
# ============================================================================

def test_format_puts_the_basis_in_canonical_order():
    formatted = format_text(json.dumps(z12i_reversed()))
    assert formatted == dumps_json(to_document(gaussian_pair_module(12)))
    assert [b['name'] for b in json.loads(formatted)['basis']] == ['1', 'i']


def test_format_is_idempotent():
    once = format_text(json.dumps(DUAL_NUMBERS, indent=4))
    assert format_text(once) == once


def test_format_file_keeps_a_ring_reference(write_json):
    write_json('z12.json', z12i_reversed()['ring'])
    document = z12i_reversed()
    document['ring'] = 'z12.json'
    path = write_json('module.json', document)
    formatted = format_file(path, in_place=True)
    assert json.loads(formatted)['ring'] == 'z12.json'
    assert path.read_text(encoding='utf-8') == formatted
    assert load_structure(path).module.size == 144


# ============================================================================
# ERRORS
# ============================================================================

def test_parse_error_reports_line_and_column():
    with pytest.raises(ParseError) as info:
        parse_text('{\n  "kind": }')
    assert (info.value.line, info.value.column) == (2, 11)
    assert str(info.value).startswith('line 2, column 11')


@pytest.mark.parametrize('change', [
    lambda d: d.update(colour='red'),
    lambda d: d.pop('mul'),
    lambda d: d.update(kind='lattice'),
    lambda d: d['basis'].append({'name': 'eps', 'order': 2, 'degree': '1'}),
    lambda d: d['basis'][1].update(degree='7'),
    lambda d: d['mul'].append(['eps', 'eps', {'zeta': 1}]),
    lambda d: d['mul'].append(['1', '1', {'1': 1}]),
    lambda d: d.update(one={'1': True}),
], ids=['unknown-field', 'missing-field', 'unknown-kind', 'duplicate-basis', 'bad-degree',
        'unknown-target', 'duplicate-entry', 'bool-coefficient'])
def test_malformed_ring_documents_rejected(change):
    document = json.loads(json.dumps(DUAL_NUMBERS))
    change(document)
    with pytest.raises(InputError):
        parse_text(json.dumps(document))


def test_axiom_violations_rejected():
    document = json.loads(json.dumps(DUAL_NUMBERS))
    # eps*eps = eps has degree 1, not 1 + 1 = 0
    document['mul'].append(['eps', 'eps', {'eps': 1}])
    with pytest.raises(ValidationError):
        parse_text(json.dumps(document))


def test_zero_ring_document_rejected():
    document = {'kind': RING_KIND, 'name': '0', 'group': {'type': 'cyclic', 'n': 2},
                'basis': [], 'one': {}, 'mul': []}
    with pytest.raises(ValidationError):
        parse_text(json.dumps(document))


def test_top_level_must_be_an_object():
    with pytest.raises(InputError):
        parse_text('[1, 2, 3]')


def test_missing_files(tmp_path, write_json):
    with pytest.raises(InputError):
        load_structure(tmp_path / 'absent.json')
    document = z12i_reversed()
    document['ring'] = 'absent.json'
    with pytest.raises(InputError):
        load_structure(write_json('module.json', document))


def test_declared_submodules(write_json):
    document = z12i_reversed()
    document['submodules'] = {'<6>': [{'1': 6}, {'i': 6}], '<3>': ['3', '3i']}
    loaded = load_structure(write_json('module.json', document))
    assert loaded.submodules['<6>'].size() == 4
    assert loaded.submodules['<3>'].size() == 16
    document['submodules'] = {'bad': ['1+i']}
    with pytest.raises(InputError):
        load_structure(write_json('bad.json', document))
