"""Graded additive groups and their subgroups."""

import pytest
from hypothesis import given, settings, strategies as st

from src.additive import (
    GradedSpace,
    GradedSubgroup,
    close_plain,
    coordinate_table,
    cyclic_decomposition,
    span,
)
from src.groups import cyclic
from src.utils import CapExceeded, InputError, Limits


@pytest.fixture
def space() -> GradedSpace:
    # Z4 ⊕ Z4·x with deg x = 1 in Z_2
    return GradedSpace(cyclic(2), ['1', 'x'], [4, 4], [0, 1])


elements = st.tuples(st.integers(0, 3), st.integers(0, 3))


# ============================================================================
# ARITHMETIC AND GRADING
# ============================================================================

@settings(max_examples=50, deadline=None)
@given(x=elements, y=elements)
def test_arithmetic_is_componentwise_mod_orders(x, y):
    space = GradedSpace(cyclic(2), ['1', 'x'], [4, 4], [0, 1])
    total = space.add(x, y)
    assert space.sub(total, y) == x
    assert space.add(x, space.neg(x)) == space.zero
    assert space.scale(4, x) == space.zero
    parts = space.decompose(total)
    rebuilt = space.zero
    for part in parts.values():
        assert space.is_homogeneous(part)
        rebuilt = space.add(rebuilt, part)
    assert rebuilt == total


def test_decompose_and_degree(space):
    assert space.size == 16
    assert space.decompose((2, 3)) == {0: (2, 0), 1: (0, 3)}
    assert space.degree_of((2, 0)) == 0
    assert space.degree_of((0, 1)) == 1
    assert space.degree_of((2, 3)) is None
    assert space.degree_of(space.zero) is None
    assert space.order_of((2, 0)) == 2
    assert space.order_of((1, 2)) == 4


def test_text_forms(space):
    assert space.render((2, 3)) == '2+3x'
    assert space.render((0, 1)) == 'x'
    assert space.render(space.zero) == '0'
    assert space.parse_element('2+3x') == (2, 3)
    assert space.parse_element('1-x') == (1, 3)
    assert space.parse_element({'x': 5}) == (0, 1)
    assert space.parse_element([6, 1]) == (2, 1)
    with pytest.raises(InputError):
        space.parse_element('y')
    with pytest.raises(InputError):
        space.parse_element({'x': 1.5})


def test_malformed_spaces_rejected():
    with pytest.raises(InputError):
        GradedSpace(cyclic(2), ['1', '1'], [2, 2], [0, 0])
    with pytest.raises(InputError):
        GradedSpace(cyclic(2), ['1'], [1], [0])
    with pytest.raises(InputError):
        GradedSpace(cyclic(2), ['1'], [2], [3])


# ============================================================================
# SUBGROUPS
# ============================================================================

def test_span(space):
    assert span(space, [(2, 0)]) == frozenset({(0, 0), (2, 0)})
    assert len(span(space, [(1, 1)])) == 4


def test_graded_subgroup_from_mixed_generator(space):
    sub = GradedSubgroup.from_generators(space, [(2, 1)])
    assert sub.size() == 8
    assert (2, 0) in sub and (0, 3) in sub
    assert (1, 0) not in sub
    assert sub.degrees() == [0, 1]


def test_lattice_operations(space):
    first = GradedSubgroup.from_generators(space, [(2, 0)])
    second = GradedSubgroup.from_generators(space, [(0, 2)])
    joined = first + second
    assert joined.size() == 4
    assert joined.describe() == '<2, 2x>'
    assert (first & second).is_zero()
    assert first <= joined and not joined <= first
    assert GradedSubgroup.whole(space).is_whole()
    assert len(joined.elements()) == 4


def test_closure_respects_element_cap(space):
    with pytest.raises(CapExceeded):
        GradedSubgroup.from_generators(space, [(1, 1)], Limits(elements=3))


def test_plain_subgroup_need_not_be_graded(space):
    diagonal = close_plain(space, [(1, 1)], [])
    assert diagonal.size() == 4
    assert not diagonal.is_graded()
    with pytest.raises(InputError):
        diagonal.to_graded()


def test_cyclic_decomposition():
    space = GradedSpace(cyclic(1), ['a', 'b'], [4, 2], [0, 0])
    whole = span(space, [(1, 0), (0, 1)])
    basis = cyclic_decomposition(space, whole)
    assert sorted(order for _, order in basis) == [2, 4]
    table = coordinate_table(space, basis)
    assert len(table) == 8
    assert set(table) == whole
