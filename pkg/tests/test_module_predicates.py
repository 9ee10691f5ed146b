"""Prime, essential and semi-essential submodules; uniform and semi-uniform modules."""

import pytest

from src.module_predicates import (
    colon_condition,
    enumerate_graded_prime_submodules,
    is_faithful_module,
    is_graded_essential,
    is_graded_prime_submodule,
    is_graded_semi_essential,
    is_graded_semi_uniform,
    is_graded_uniform,
    is_multiplication_module,
    lattice_counts,
    nonzero_primes,
    run_module_predicates,
    semi_essential_transfer_checks,
    submodule_table,
)
from src.modules import enumerate_graded_submodules, identity_hom, quotient_module, right_multiplication_hom
from src.rings import quadratic_ring
from src.utils import InputError, Limits


@pytest.mark.parametrize('name', ['z12i', 'z36i', 'z36i_k3', 'z5i'])
def test_module_fixture_expectations(name, fixture_of, limits):
    fixture = fixture_of(name)
    for expectation in fixture.expectations:
        assert expectation.check(fixture, limits) == expectation.expected, expectation.label


# ============================================================================
# SUBMODULE PREDICATES
# ============================================================================

def test_semi_essential_but_not_essential(fixture_of):
    fx = fixture_of('z12i')
    six = fx.named['<6>']
    assert is_graded_semi_essential(fx.module, six).holds
    report = is_graded_essential(fx.module, six)
    assert report.fails
    assert report.witness['element'] == '4'


@pytest.mark.parametrize('key', ['<2>', '<3>', '<4>', '<6>'])
def test_evaluation_modes_agree(key, fixture_of):
    fx = fixture_of('z12i')
    sub = fx.named[key]
    assert (is_graded_essential(fx.module, sub).verdict
            == is_graded_essential(fx.module, sub, mode='lattice').verdict)
    assert (is_graded_semi_essential(fx.module, sub).verdict
            == is_graded_semi_essential(fx.module, sub, mode='characterization').verdict)


def test_semi_essential_witness_names_the_missed_prime(fixture_of):
    fx = fixture_of('z12i')
    report = is_graded_semi_essential(fx.module, fx.named['<4>'])
    assert report.fails
    assert report.witness['missed_prime'] == fx.named['<3>'].describe()


def test_prime_submodules(fixture_of):
    fx = fixture_of('z12i')
    primes = enumerate_graded_prime_submodules(fx.module)
    assert fx.named['<2>'] in primes and fx.named['<3>'] in primes
    assert fx.named['<6>'] not in primes
    witness = is_graded_prime_submodule(fx.module, fx.named['<6>']).witness
    assert (witness['r'], witness['m']) == ('2', '3')


def test_over_a_field_only_the_whole_module_is_semi_essential(fixture_of):
    fx = fixture_of('z5i')
    nonzero = [s for s in enumerate_graded_submodules(fx.module) if not s.is_zero()]
    semi_essential = [s for s in nonzero if is_graded_semi_essential(fx.module, s).holds]
    assert semi_essential == [fx.named['M']]
    primes = nonzero_primes(fx.module)
    assert primes == [s for s in nonzero if not s.is_whole()]
    # (0 : m) = 0 for every m != 0, so the colon condition holds on every submodule
    assert all(colon_condition(fx.module, k, p) is None for k in nonzero for p in primes)


def test_preconditions_rejected(fixture_of):
    fx = fixture_of('z12i')
    zero = fx.module.zero_submodule()
    with pytest.raises(InputError):
        is_graded_essential(fx.module, zero)
    with pytest.raises(InputError):
        is_graded_semi_essential(fx.module, zero)
    with pytest.raises(InputError):
        is_graded_semi_essential(fx.module, fx.named['<6>'], mode='approximate')
    with pytest.raises(InputError):
        is_graded_prime_submodule(fx.module, fx.module.whole())


# ============================================================================
# MODULE PREDICATES
# ============================================================================

def test_module_level_verdicts(fixture_of):
    module = fixture_of('z12i').module
    assert is_faithful_module(module).holds
    assert is_multiplication_module(module).fails
    assert is_graded_uniform(module).fails
    assert is_graded_semi_uniform(fixture_of('z36i').module).holds


def test_regular_module_of_a_field_is_uniform():
    from src.modules import regular_module
    module = regular_module(quadratic_ring(3, -1, 'i'))
    assert is_graded_uniform(module).holds
    assert is_multiplication_module(module).holds


def test_lattice_tables(fixture_of):
    module = fixture_of('z12i').module
    rows = submodule_table(module)
    assert len(rows) == 36
    assert rows[0]['size'] == 1 and rows[0]['essential'] == ''
    assert lattice_counts(module)['submodules'] == 36
    assert lattice_counts(module)['module_size'] == 144


def test_lattice_cap_aborts_module_predicates(fixture_of):
    report = is_graded_uniform(fixture_of('z36i').module, Limits(lattice=5))
    assert report.aborted
    assert report.stats['cap'] == 'lattice'


def test_run_module_predicates(fixture_of):
    module = fixture_of('z12i').module
    names = [r.name for r in run_module_predicates(module)]
    assert names[-1] == 'module_strongness_class'
    with pytest.raises(InputError):
        run_module_predicates(module, ['is_graded_flat'])


# ============================================================================
# TRANSFER ALONG HOMOMORPHISMS
# ============================================================================

def test_identity_transfers_semi_essential_submodules(fixture_of):
    fx = fixture_of('z12i')
    report = semi_essential_transfer_checks(identity_hom(fx.module), fx.named['<6>'])
    assert report.holds
    entries = {e['statement']: e for e in report.value}
    assert entries['isomorphism_image']['hypothesis']
    assert entries['isomorphism_image']['conclusion']


def test_transfer_along_a_projection(fixture_of):
    fx = fixture_of('z12i')
    projection = quotient_module(fx.module, fx.named['<6>']).projection
    report = semi_essential_transfer_checks(projection, fx.named['<2>'])
    assert report.decided
    assert not report.value[0]['hypothesis']


def test_transfer_needs_a_graded_map():
    ring = quadratic_ring(6, -1, 'i')
    with pytest.raises(InputError):
        semi_essential_transfer_checks(right_multiplication_hom(ring, 'i'), ring.whole())
