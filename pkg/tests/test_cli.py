"""Command-line entry point: exit codes and output modes."""

import json

import pytest

from src.cli import main
from src.modules import gaussian_pair_module
from src.serialization import to_document
from src.utils import dumps_json


@pytest.fixture
def z12i_file(write_json):
    return str(write_json('z12i.json', to_document(gaussian_pair_module(12))))


def run_json(capsys, *argv) -> tuple:
    code = main([*argv, '--format', 'json', '--no-save-log'])
    return code, json.loads(capsys.readouterr().out)


def test_check_json_is_one_document(capsys, z12i_file):
    code, document = run_json(capsys, 'check', z12i_file, '--predicates', 'is_faithful_module,is_graded_uniform')
    assert code == 0
    assert document['kind'] == 'finite_graded_module'
    verdicts = {r['name']: r['verdict'] for r in document['reports']}
    assert verdicts['is_faithful_module'] == 'holds'
    assert set(verdicts) == {'is_faithful_module', 'is_graded_uniform'}


def test_check_table_mode(capsys, z12i_file):
    assert main(['check', z12i_file, '--quiet', '--no-save-log']) == 0
    assert 'is_multiplication_module' in capsys.readouterr().out


def test_submodules_lists_the_lattice(capsys, z12i_file):
    code, document = run_json(capsys, 'submodules', z12i_file)
    assert code == 0
    assert document['counts']['submodules'] == 36
    assert len(document['submodules']) == 36
    code, primes = run_json(capsys, 'submodules', z12i_file, '--primes')
    assert code == 0
    assert all(row['prime'] for row in primes['submodules'])
    assert len(primes['submodules']) == primes['counts']['primes']


def test_lattice_cap_exit_code(capsys, z12i_file):
    code, document = run_json(capsys, 'submodules', z12i_file, '--cap-lattice', '3')
    assert code == 3
    assert document['verdict'] == 'aborted_cap'


def test_verify_single_example(capsys):
    code, document = run_json(capsys, 'verify-paper', '--example', 'm2_z4')
    assert code == 0
    assert document['stats']['mismatches'] == 0
    assert {row['fixture'] for row in document['checks']} == {'m2_z4'}


def test_fuzz_small_suite(capsys, write_json):
    suite = write_json('suite.json', ['nondegenerate_implies_weak', 'weak_not_nondegenerate'])
    code, document = run_json(capsys, 'fuzz', '--seed', '3', '--count', '1', '--module-count', '0',
                              '--suite', str(suite), '--no-replays')
    assert code == 0
    assert document['stats']['passed']
    assert [row['implication'] for row in document['implications']] == \
        ['nondegenerate_implies_weak', 'weak_not_nondegenerate']


def test_fmt_prints_and_rewrites(capsys, write_json, z12i_file):
    assert main(['fmt', z12i_file, '--no-save-log']) == 0
    assert capsys.readouterr().out == dumps_json(to_document(gaussian_pair_module(12)))
    canonical = to_document(gaussian_pair_module(4))
    messy = write_json('messy.json', json.dumps(canonical, indent=8))
    assert main(['fmt', str(messy), '--in-place', '--no-save-log']) == 0
    assert messy.read_text(encoding='utf-8') == dumps_json(canonical)


# ============================================================================
# ERRORS
# ============================================================================

def test_malformed_json_is_an_input_error(capsys, write_json):
    broken = write_json('broken.json', '{"kind": ')
    assert main(['check', str(broken), '--no-save-log']) == 2
    assert capsys.readouterr().err.startswith('error: line 1')


def test_missing_file_and_unknown_example(capsys, tmp_path):
    assert main(['fmt', str(tmp_path / 'absent.json'), '--no-save-log']) == 2
    assert main(['verify-paper', '--example', 'nope', '--quiet', '--no-save-log']) == 2
    assert 'unknown fixture' in capsys.readouterr().err


def test_unknown_predicate(capsys, z12i_file):
    assert main(['check', z12i_file, '--predicates', 'is_weak', '--quiet', '--no-save-log']) == 2


def test_submodules_needs_a_module(capsys, write_json):
    ring = to_document(gaussian_pair_module(6).ring)
    assert main(['submodules', str(write_json('ring.json', ring)), '--quiet', '--no-save-log']) == 2


@pytest.mark.parametrize('argv', [
    ['check'],
    ['fuzz', '--colour'],
    ['fuzz', '--count', '-1'],
    ['check', 'x.json', '--cap-elements', '0'],
    ['frobnicate'],
])
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2
