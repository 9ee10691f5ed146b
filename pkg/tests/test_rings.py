"""Finite graded rings, monomial rings and their constructors."""

import pytest
from hypothesis import given, settings, strategies as st

from src.groups import IntegerGroup, cyclic, dihedral
from src.periodic import EventuallyPeriodicSet
from src.rings import (
    FiniteGradedRing,
    cyclic_ring,
    direct_sum,
    group_algebra,
    matrix_ring,
    monomial_ring,
    quadratic_ring,
    validate_ring,
)
from src.utils import InputError, ValidationError


# ============================================================================
# VALIDATION
# ============================================================================

@pytest.mark.parametrize('ring', [
    quadratic_ring(6, -1, 'i'),
    quadratic_ring(2, 0, 'eps'),
    matrix_ring(cyclic(4), (0, 2), 2),
    matrix_ring(dihedral(5), (0, 1, 2, 6), 2),
    group_algebra(cyclic(2), cyclic(2), [0, 1], 3),
    direct_sum(cyclic_ring(2, cyclic(2)), cyclic_ring(3, cyclic(2))),
], ids=lambda r: r.name)
def test_constructors_build_valid_rings(ring):
    report = validate_ring(ring)
    assert report.valid, report.violations


def test_grading_violation_reported():
    # x*x = x breaks deg(x*x) = deg(x) + deg(x) in Z_2
    ring = FiniteGradedRing(cyclic(2), ['1', 'x'], [2, 2], [0, 1],
                            {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {1: 1}}, [1, 0])
    report = validate_ring(ring)
    assert not report.valid
    assert {v['kind'] for v in report.violations} == {'grading'}
    with pytest.raises(ValidationError):
        report.raise_if_invalid()


def test_unit_violation_reported():
    ring = FiniteGradedRing(cyclic(2), ['1', 'x'], [2, 2], [0, 1],
                            {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}}, [0, 1])
    kinds = {v['kind'] for v in validate_ring(ring).violations}
    assert 'unit' in kinds


def test_zero_ring_rejected():
    ring = FiniteGradedRing(cyclic(2), [], [], [], {}, [])
    report = validate_ring(ring)
    assert not report.valid
    assert [v['kind'] for v in report.violations] == ['unit']
    with pytest.raises(ValidationError):
        report.raise_if_invalid()


def test_structure_constant_out_of_range():
    with pytest.raises(InputError):
        FiniteGradedRing(cyclic(2), ['1'], [2], [0], {(0, 3): {0: 1}}, [1])
    with pytest.raises(InputError):
        FiniteGradedRing(cyclic(2), ['1'], [2], [0], {(0, 0): {0: 1}}, [1, 0])


def test_group_algebra_needs_a_homomorphism():
    with pytest.raises(InputError):
        group_algebra(cyclic(3), cyclic(2), [0, 1, 1], 2)


def test_matrix_ring_subalgebra_must_be_closed():
    with pytest.raises(InputError):
        matrix_ring(cyclic(3), (0, 1, 2), 2, kept=[(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)])
    with pytest.raises(InputError):
        matrix_ring(cyclic(2), (0, 1), 2, kept=[(0, 0), (0, 1)])


# ============================================================================
# ARITHMETIC AND COMPONENTS
# ============================================================================

def test_gaussian_arithmetic():
    ring = quadratic_ring(6, -1, 'i')
    i = ring.parse('i')
    assert ring.mul(i, i) == ring.parse('5')
    assert ring.power(ring.parse('1+i'), 2) == ring.parse('2i')
    assert ring.is_commutative()
    assert ring.size == 36


def test_matrix_components():
    ring = matrix_ring(cyclic(4), (0, 2), 2)
    assert ring.support() == [0, 2]
    assert ring.space.names == ['e11', 'e12', 'e21', 'e22']
    assert ring.product_equals_component(2, 2)
    assert ring.product_equals_component(0, 2)
    assert not ring.product_equals_component(1, 3)
    assert not ring.is_commutative()


def test_component_products_over_z():
    ring = matrix_ring(IntegerGroup(), (0, 1), 2)
    assert ring.support() == [0, -1, 1]
    assert ring.degree_window() == [0, -1, 1, -2, 2]
    assert ring.component(5).is_zero()
    assert ring.component_product(1, 1).is_zero()


def test_ideal_generated():
    ring = matrix_ring(cyclic(4), (0, 2), 2)
    assert ring.ideal_generated([ring.parse('e11')]).is_whole()
    left = ring.ideal_generated([ring.parse('e11')], sided='left')
    assert left.size() == 4
    with pytest.raises(InputError):
        ring.ideal_generated([ring.parse('e11+e12')])
    with pytest.raises(InputError):
        ring.ideal_generated([ring.parse('e11')], sided='middle')


quadratic_params = st.tuples(st.integers(2, 6), st.integers(0, 5))


@settings(max_examples=30, deadline=None)
@given(params=quadratic_params)
def test_homogeneous_unit_search_matches_full_scan(params):
    n, c = params
    ring = quadratic_ring(n, c)
    units = ring.full_inverse_search()
    for g in ring.group.elements():
        found = ring.homogeneous_unit_search(g)
        homogeneous = [u for u in units if ring.space.degree_of(u) == g]
        assert (found is not None) == bool(homogeneous)
        if found is not None:
            u, v = found
            assert ring.mul(u, v) == ring.one == ring.mul(v, u)


# ============================================================================
# MONOMIAL RINGS
# ============================================================================

def test_monomial_components_over_cyclic_group():
    ring = monomial_ring(2, cyclic(3), 1)
    assert ring.component(1) == EventuallyPeriodicSet.arithmetic(1, 3)
    assert ring.component(0) == EventuallyPeriodicSet.arithmetic(0, 3)
    assert not ring.product_equals_component(1, 2)
    assert ring.product_equals_component(0, 1)
    assert ring.support() == [0, 1, 2]


def test_monomial_components_over_z():
    ring = monomial_ring(2, IntegerGroup(), 1)
    assert ring.component(3) == EventuallyPeriodicSet.from_finite([3])
    assert ring.component(-1).is_empty()
    assert not ring.in_support(-1)
    assert ring.support() == EventuallyPeriodicSet.naturals()
    assert ring.homogeneous_unit_search(0) == (ring.one, ring.one)
    assert ring.homogeneous_unit_search(1) is None


def test_monomial_arithmetic():
    ring = monomial_ring(2, cyclic(2), 1)
    one_plus_x = ring.poly([1, 1])
    assert ring.mul(one_plus_x, one_plus_x) == ring.poly([1, 0, 1])
    assert ring.add(one_plus_x, one_plus_x) == ()
    assert ring.decompose(ring.poly([1, 1, 1])) == {0: ring.poly([1, 0, 1]), 1: ring.monomial(1)}
    assert ring.render(ring.poly([1, 0, 1])) == '1+x^2'


def test_monomial_ring_rejects_bad_parameters():
    with pytest.raises(InputError):
        monomial_ring(4, cyclic(2), 1)
    with pytest.raises(InputError):
        monomial_ring(2, IntegerGroup(), -1)
    with pytest.raises(InputError):
        monomial_ring(2, dihedral(3), 1)
