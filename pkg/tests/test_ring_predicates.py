"""Ring predicates on the registry rings and on small generated families."""

import pytest
from hypothesis import given, settings, strategies as st

from src.fixtures import ring_fixtures
from src.groups import MONOID_NOT_SUBGROUP, cyclic
from src.ring_predicates import (
    CROSSED,
    DEGENERATE,
    FIRST_STRONG,
    NONDEGENERATE,
    SECOND_STRONG,
    STRONG,
    WEAKLY_CROSSED,
    crossed_class,
    degeneracy_class,
    enumerate_graded_ideals,
    enumerate_graded_primes_ring,
    has_no_zero_divisors,
    identity_component_linear_report,
    is_graded_simple,
    is_invertible_graded,
    is_semi_uniform_ring,
    is_weak,
    run_ring_predicates,
    strongness_class,
    support_class,
    zero_divisor_witness,
)
from src.periodic import EventuallyPeriodicSet
from src.rings import FiniteGradedRing, MonomialGradedRing, cyclic_ring, integers_group, quadratic_ring
from src.utils import InputError, Limits

RING_FIXTURES = [f.name for f in ring_fixtures()]


@pytest.mark.parametrize('name', RING_FIXTURES)
def test_ring_fixture_expectations(name, fixture_of, limits):
    fixture = fixture_of(name)
    for expectation in fixture.expectations:
        assert expectation.check(fixture, limits) == expectation.expected, expectation.label


# ============================================================================
# CLASSES AND WITNESSES
# ============================================================================

def test_first_strong_matrix_ring(fixture_of):
    report = strongness_class(fixture_of('m2_z4').ring)
    assert report.outcome == FIRST_STRONG
    assert report.witness['pair'] == ['1', '3']
    assert report.stats == {STRONG: False, FIRST_STRONG: True, SECOND_STRONG: True}


def test_polynomial_ring_over_z(fixture_of):
    ring = fixture_of('kx_z').ring
    assert is_weak(ring).witness['degree'] == '-1'
    assert strongness_class(ring).outcome == SECOND_STRONG
    assert support_class(ring) == MONOID_NOT_SUBGROUP
    assert is_semi_uniform_ring(ring).verdict == 'not_applicable'


class MislabelledMonomialRing(MonomialGradedRing):
    """K[x] over Z whose exponent sets also put the constant 1 in degree 1."""

    def exponent_set(self, g):
        base = super().exponent_set(g)
        return base | EventuallyPeriodicSet.from_finite([0]) if g == 1 else base


def test_identity_projection_checks_on_polynomials(fixture_of):
    report = identity_component_linear_report(fixture_of('kx_z').ring)
    assert report.holds
    assert all(report.value.values())
    assert report.value['surjective'] and report.value['non_injective_iff_nontrivial']


def test_identity_projection_catches_overlapping_exponent_sets():
    ring = MislabelledMonomialRing(3, integers_group(), 1)
    assert is_invertible_graded(ring).holds
    report = identity_component_linear_report(ring)
    assert report.fails
    assert report.witness['failed_checks'] == ['other_components_in_kernel', 'sum_quotient_cardinality',
                                               'projection_kernels']


def test_dual_numbers_are_weak_but_degenerate(fixture_of):
    ring = fixture_of('dual_z2').ring
    assert is_weak(ring).holds
    report = degeneracy_class(ring)
    assert report.outcome == DEGENERATE
    assert report.witness['element'] == 'eps'


def test_dihedral_matrix_ring_is_nondegenerate(fixture_of):
    assert degeneracy_class(fixture_of('m4_d10').ring).outcome == NONDEGENERATE


def test_finite_field_quadratic_extension(fixture_of):
    ring = fixture_of('gf9_z2').ring
    assert strongness_class(ring).outcome == STRONG
    assert crossed_class(ring).outcome == CROSSED
    assert is_invertible_graded(ring).holds
    assert is_graded_simple(ring).holds
    assert zero_divisor_witness(ring).fails


def test_zero_divisor_witness_in_z6():
    report = zero_divisor_witness(cyclic_ring(6, cyclic(2)))
    assert report.holds
    assert (report.witness['left'], report.witness['right']) == ('2', '3')
    assert report.witness['stage'] == 'homogeneous_pair'


def test_trivial_grading_is_weakly_crossed():
    report = crossed_class(cyclic_ring(5, cyclic(2)))
    assert report.outcome == WEAKLY_CROSSED
    assert report.witness['degree'] == '1'


def test_zero_ring_support_predicates_do_not_raise():
    ring = FiniteGradedRing(cyclic(2), [], [], [], {}, [])
    assert run_ring_predicates(ring, ['support_class'])[0].verdict == 'not_applicable'
    assert strongness_class(ring).verdict == 'not_applicable'
    report = is_graded_simple(ring)
    assert report.verdict == 'fails'
    assert report.witness == {'kind': 'zero_ring'}


def test_ideal_lattice_of_z12():
    ring = cyclic_ring(12, cyclic(2))
    ideals = enumerate_graded_ideals(ring)
    assert sorted(i.size() for i in ideals) == [1, 2, 3, 4, 6, 12]
    primes = enumerate_graded_primes_ring(ring)
    assert sorted(p.size() for p in primes) == [4, 6]


def test_semi_uniform_ring_witness(fixture_of):
    report = is_semi_uniform_ring(fixture_of('trivial_z12').ring)
    assert report.fails
    assert (report.witness['ideal'], report.witness['missed_prime']) == ('<4>', '<3>')
    assert is_semi_uniform_ring(fixture_of('trivial_z36').ring).holds


# ============================================================================
# CAPS AND ERRORS
# ============================================================================

def test_caps_turn_into_aborted_verdicts(fixture_of):
    report = is_graded_simple(fixture_of('m2_z4').ring, Limits(elements=1))
    assert report.aborted
    assert report.stats['cap'] == 'component'
    assert has_no_zero_divisors(fixture_of('m2_z4').ring, Limits(elements=1)) is None


def test_unknown_predicate_rejected(fixture_of):
    with pytest.raises(InputError):
        run_ring_predicates(fixture_of('dual_z2').ring, ['is_weak', 'is_pretty'])


def test_run_all_predicates_in_registry_order(fixture_of):
    reports = run_ring_predicates(fixture_of('gf9_z2').ring)
    assert [r.name for r in reports][:3] == ['support', 'support_class', 'is_commutative']
    assert not any(r.aborted for r in reports)


# ============================================================================
# GENERATED FAMILIES
# ============================================================================

@settings(max_examples=25, deadline=None)
@given(n=st.integers(2, 7), c=st.integers(0, 6))
def test_quadratic_rings_keep_the_class_chain(n, c):
    ring = quadratic_ring(n, c)
    strong = strongness_class(ring)
    crossed = crossed_class(ring)
    # Z_2 is its own inverse set, so every Z_2-grading is weak
    assert is_weak(ring).holds
    assert strong.stats[STRONG] <= strong.stats[FIRST_STRONG] <= strong.stats[SECOND_STRONG]
    if crossed.stats[CROSSED]:
        assert strong.stats[STRONG]
    assert crossed.stats[CROSSED] == (c % n in {u for u in range(n) if any(u * v % n == 1 for v in range(n))})
