"""Tests for the grading groups."""

import pytest
from hypothesis import given, settings, strategies as st

from src.groups import (
    MONOID_NOT_SUBGROUP,
    NOT_MONOID,
    SUBGROUP,
    IntegerGroup,
    classify_subset,
    cyclic,
    dihedral,
    direct_product,
    group_from_descriptor,
    group_product,
    subgroup_closure,
)
from src.periodic import EventuallyPeriodicSet
from src.utils import InputError


def small_groups():
    return st.one_of(
        st.integers(1, 8).map(cyclic),
        st.integers(1, 6).map(dihedral),
        st.tuples(st.integers(1, 3), st.integers(1, 3)).map(
            lambda nm: direct_product(cyclic(nm[0]), cyclic(nm[1]))),
    )


# ============================================================================
# GROUP AXIOMS
# ============================================================================

@settings(max_examples=40, deadline=None)
@given(group=small_groups(), data=st.data())
def test_group_axioms(group, data):
    elements = st.integers(0, group.order - 1)
    g, h, k = data.draw(elements), data.draw(elements), data.draw(elements)
    assert group.mul(group.mul(g, h), k) == group.mul(g, group.mul(h, k))
    assert group.mul(group.identity, g) == g == group.mul(g, group.identity)
    assert group.mul(g, group.inv(g)) == group.identity


@settings(max_examples=30, deadline=None)
@given(group=small_groups())
def test_descriptor_rebuilds_the_same_group(group):
    assert group_from_descriptor(group.descriptor()) == group


@settings(max_examples=30, deadline=None)
@given(group=small_groups(), data=st.data())
def test_labels_parse_back(group, data):
    g = data.draw(st.integers(0, group.order - 1))
    assert group.parse(group.label(g)) == g


# ============================================================================
# DIHEDRAL GROUPS
# ============================================================================

def test_dihedral_relations():
    d10 = dihedral(5)
    a, b = d10.element(1), d10.element(0, 1)
    assert d10.order == 10
    assert d10.power(a, 5) == d10.identity
    assert d10.mul(b, b) == d10.identity
    # ba = a^-1 b
    assert d10.mul(b, a) == d10.mul(d10.inv(a), b)
    assert not d10.is_abelian()


def test_dihedral_labels():
    d10 = dihedral(5)
    assert d10.label(d10.element(4, 1)) == 'a^4 b'
    assert d10.label(d10.element(1, 1)) == 'a b'
    assert d10.label(d10.identity) == 'e'
    assert d10.parse('a^4 b') == d10.element(4, 1)
    assert d10.parse('a^4b') == d10.element(4, 1)
    assert d10.inv(d10.element(1, 1)) == d10.element(1, 1)


def test_group_product_checks_its_arguments():
    z6 = cyclic(6)
    assert group_product(z6, 4, 5) == 3
    with pytest.raises(InputError):
        group_product(z6, 6, 1)


def test_unknown_dihedral_label_rejected():
    with pytest.raises(InputError):
        dihedral(5).parse('c^2')


def test_direct_product_labels():
    group = direct_product(cyclic(2), cyclic(3))
    assert group.order == 6
    assert group.is_abelian()
    assert group.label(group.mul(group.parse('(1,2)'), group.parse('(1,2)'))) == '(0,1)'


def test_constructors_reject_bad_orders():
    with pytest.raises(InputError):
        cyclic(0)
    with pytest.raises(InputError):
        dihedral(0)
    with pytest.raises(InputError):
        group_from_descriptor({'kind': 'cyclic'})


# ============================================================================
# THE INTEGERS
# ============================================================================

def test_integer_group():
    z = IntegerGroup()
    assert z.mul(3, -5) == -2
    assert z.inv(4) == -4
    assert z.parse('-3') == -3
    assert sorted([2, -1, 1, 0, -2], key=z.sort_key) == [0, -1, 1, -2, 2]
    with pytest.raises(InputError):
        z.parse('x')
    with pytest.raises(InputError):
        z.elements()


# ============================================================================
# SUBSETS
# ============================================================================

def test_subgroup_closure():
    assert subgroup_closure(cyclic(6), [2]) == frozenset({0, 2, 4})
    assert subgroup_closure(dihedral(5), [dihedral(5).element(1)]) == frozenset(range(5))


def test_classify_subset():
    z4 = cyclic(4)
    assert classify_subset(z4, [0, 2]) == SUBGROUP
    assert classify_subset(z4, [0, 1]) == NOT_MONOID
    assert classify_subset(z4, [1, 3]) == NOT_MONOID
    assert classify_subset(IntegerGroup(), [0]) == SUBGROUP
    assert classify_subset(IntegerGroup(), [0, 1]) == NOT_MONOID
    evens = EventuallyPeriodicSet.arithmetic(0, 2)
    assert classify_subset(IntegerGroup(), evens) == MONOID_NOT_SUBGROUP
    assert classify_subset(IntegerGroup(), EventuallyPeriodicSet.arithmetic(1, 2)) == NOT_MONOID


def test_classify_subset_rejects_empty():
    with pytest.raises(InputError):
        classify_subset(cyclic(3), [])
