"""Instance generators and the implication-suite runner."""

import json

import pytest

from src.fixtures import module_fixtures, ring_fixtures
from src.harness import (
    DEFAULT_SUITE,
    FACTS,
    MISSING,
    NON_IMPLICATION,
    PASSED,
    THEOREM,
    UNEXERCISED,
    VIOLATED,
    GeneratorParams,
    Implication,
    build_pool,
    generate_graded_module,
    generate_graded_ring,
    load_suite,
    run_implication_suite,
)
from src.modules import validate_module
from src.rings import validate_ring
from src.serialization import to_document
from src.utils import InputError, ParseError

SMALL = GeneratorParams(seed=7)


# ============================================================================
# GENERATORS
# ============================================================================

@pytest.mark.parametrize('index', range(6))
def test_ring_stream_is_reproducible(index):
    first = generate_graded_ring(SMALL, index)
    again = generate_graded_ring(GeneratorParams(seed=7), index)
    assert to_document(first) == to_document(again)
    assert first.name.startswith(f"ring#{index}:")
    if first.backend == 'finite':
        assert validate_ring(first).valid


@pytest.mark.parametrize('index', range(4))
def test_module_stream_is_reproducible(index):
    first = generate_graded_module(SMALL, index=index)
    again = generate_graded_module(GeneratorParams(seed=7), index=index)
    assert to_document(first) == to_document(again)
    assert validate_module(first).valid


@pytest.mark.parametrize('kwargs', [
    {'seed': -1},
    {'max_group_order': 1},
    {'max_basis': 1},
    {'primes': (2, 4)},
    {'primes': ()},
    {'ring_weights': (('octonions', 1),)},
    {'module_weights': (('regular', 0),)},
    {'ring_weights': (('trivial', -1), ('quadratic', 2))},
])
def test_generator_params_rejected(kwargs):
    with pytest.raises(InputError):
        GeneratorParams(**kwargs)


def test_pool_starts_with_the_fixtures():
    rings, modules = build_pool(SMALL, 2, 1)
    fixtures = ring_fixtures()
    assert [r.label for r in rings[:len(fixtures)]] == [f"fixture:{fx.name}" for fx in fixtures]
    assert [r.label for r in rings[len(fixtures):]] == ['ring#0', 'ring#1']
    assert len(modules) == len(module_fixtures()) + 1
    assert modules[-1].origin == 'generated' and modules[-1].index == 0


# ============================================================================
# SUITES
# ============================================================================

def test_default_suite_shape():
    names = [i.name for i in DEFAULT_SUITE]
    assert len(names) == len(set(names))
    assert sum(i.expected == THEOREM for i in DEFAULT_SUITE) == 47
    assert sum(i.expected == NON_IMPLICATION for i in DEFAULT_SUITE) == 13
    for implication in DEFAULT_SUITE:
        for fact in implication.hypothesis + (implication.conclusion,):
            assert fact in FACTS, f"{implication.name} uses unknown fact {fact}"


@pytest.mark.parametrize('area,required', [
    ('ring', {'nondegenerate_implies_weak', 'first_strong_implies_weak',
              'strong_iff_second_strong_faithful', 'weakly_crossed_implies_first_strong',
              'invertible_weak_domain_implies_weakly_crossed', 'invertible_identity_projection_linear',
              'weak_domain_ideal_avoidance', 'unit_search_matches_full_scan'}),
    ('module', {'essential_implies_semi_essential', 'semi_essential_characterization',
                'semi_essential_upward_closed', 'colon_condition_meet_semi_essential',
                'colon_condition_meet_is_prime', 'prime_colon_is_prime_ideal',
                'semi_uniform_ring_multiplication_module'}),
    ('morphism', {'isomorphism_preserves_semi_essential', 'epimorphism_preimage_semi_essential',
                  'prime_correspondence_under_projection'}),
])
def test_default_suite_covers_each_area(area, required):
    theorems = {i.name for i in DEFAULT_SUITE if i.expected == THEOREM}
    assert required <= theorems


def test_load_suite_formats(write_json):
    assert load_suite() == DEFAULT_SUITE
    wrapped = load_suite(str(write_json('a.json', {'implications': ['weak_not_nondegenerate']})))
    bare = load_suite(str(write_json('b.json', ['nondegenerate_implies_weak', 'weak_not_nondegenerate'])))
    assert [i.name for i in wrapped] == ['weak_not_nondegenerate']
    assert [i.name for i in bare] == ['nondegenerate_implies_weak', 'weak_not_nondegenerate']


def test_load_suite_errors(tmp_path, write_json):
    with pytest.raises(InputError):
        load_suite(str(tmp_path / 'absent.json'))
    with pytest.raises(ParseError):
        load_suite(str(write_json('broken.json', '{"implications": [')))
    with pytest.raises(InputError):
        load_suite(str(write_json('empty.json', {'implications': []})))
    with pytest.raises(InputError):
        load_suite(str(write_json('scalar.json', '"weak"')))
    with pytest.raises(InputError):
        load_suite(str(write_json('unknown.json', ['weak_implies_everything'])))


# ============================================================================
# RUNNER
# ============================================================================

def test_small_run(quiet_logger, limits):
    suite = load_suite('default')
    suite = [i for i in suite if i.name in ('nondegenerate_implies_weak', 'weak_not_nondegenerate')]
    table, stats = run_implication_suite(SMALL, suite, quiet_logger, ring_count=2, module_count=0,
                                         limits=limits, replay_dir=None)
    assert list(table['implication']) == ['nondegenerate_implies_weak', 'weak_not_nondegenerate']
    assert set(table['status']) <= {PASSED, VIOLATED, MISSING}
    rows = table.set_index('implication')
    assert rows.loc['nondegenerate_implies_weak', 'status'] == PASSED
    # the dual numbers over GF(2) are weak but degenerate
    assert rows.loc['weak_not_nondegenerate', 'refuted'] >= 1
    assert rows.loc['weak_not_nondegenerate', 'status'] == PASSED
    assert stats['rings'] == len(ring_fixtures()) + 2
    assert stats['modules'] == len(module_fixtures())
    assert (stats['theorems'], stats['non_implications']) == (1, 1)
    assert stats['violations'] == 0 and stats['passed']
    assert stats['replays'] == []
    assert 'Implication suite passed' in quiet_logger.get_logs()[-1]


def test_violations_write_replays(quiet_logger, limits, tmp_path):
    false_theorem = Implication('weak_implies_nondegenerate', 'ring', ('weak',), 'nondegenerate',
                                THEOREM, "weak gradings are non-degenerate")
    table, stats = run_implication_suite(SMALL, [false_theorem], quiet_logger, ring_count=0,
                                         module_count=0, limits=limits, replay_dir=tmp_path)
    assert table.loc[0, 'status'] == VIOLATED
    assert stats['violations'] == 1 and not stats['passed']
    assert stats['replays']
    replay = json.loads(open(stats['replays'][0], encoding='utf-8').read())
    assert replay['implication'] == 'weak_implies_nondegenerate'
    assert replay['origin'] == 'fixture'
    assert replay['structure']['kind'] in ('finite_graded_ring', 'monomial_ring')


def test_colon_condition_theorem_reaches_an_applicable_pair(quiet_logger, limits):
    suite = [i for i in DEFAULT_SUITE if i.name == 'colon_condition_meet_semi_essential']
    table, stats = run_implication_suite(SMALL, suite, quiet_logger, ring_count=0, module_count=0,
                                         limits=limits, replay_dir=None)
    row = table.iloc[0]
    assert row['applicable'] >= 1
    assert row['confirmed'] == row['applicable']
    assert row['status'] == PASSED
    assert stats['unexercised'] == []


def test_theorem_with_unsatisfiable_hypothesis_is_unexercised(quiet_logger, limits):
    # K[x] with R_e = K is never weakly graded
    never = Implication('field_identity_and_weak_implies_strong', 'ring',
                        ('polynomial_identity_field', 'weak'), 'strong', THEOREM,
                        "no ring satisfies the hypothesis")
    table, stats = run_implication_suite(SMALL, [never], quiet_logger, ring_count=0, module_count=0,
                                         limits=limits, replay_dir=None)
    assert table.loc[0, 'applicable'] == 0
    assert table.loc[0, 'status'] == UNEXERCISED
    assert stats['unexercised'] == ['field_identity_and_weak_implies_strong']
    assert stats['violations'] == 0 and stats['passed']
    assert any('! field_identity_and_weak_implies_strong' in line for line in quiet_logger.get_logs())


def test_runner_rejects_bad_arguments(quiet_logger):
    with pytest.raises(InputError):
        run_implication_suite(SMALL, [], quiet_logger, ring_count=0, module_count=0)
    with pytest.raises(InputError):
        run_implication_suite(SMALL, list(DEFAULT_SUITE), quiet_logger, ring_count=-1, module_count=0)
