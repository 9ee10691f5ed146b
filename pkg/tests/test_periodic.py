"""Eventually periodic sets checked against brute force on a finite window."""

import pytest
from hypothesis import given, settings, strategies as st

from src.config import PERIODIC_ORACLE_WINDOW
from src.periodic import EventuallyPeriodicSet

WINDOW = PERIODIC_ORACLE_WINDOW


@st.composite
def periodic_sets(draw):
    threshold = draw(st.integers(0, 8))
    period = draw(st.integers(1, 6))
    residues = draw(st.sets(st.integers(0, period - 1)))
    exceptional = draw(st.sets(st.integers(0, max(threshold - 1, 0)))) if threshold else set()
    return EventuallyPeriodicSet.make(threshold, period, residues, exceptional)


def members(s: EventuallyPeriodicSet, bound: int = WINDOW) -> set:
    return set(s.elements_below(bound))


# ============================================================================
# SET ALGEBRA ORACLE
# ============================================================================

@settings(max_examples=60, deadline=None)
@given(a=periodic_sets(), b=periodic_sets())
def test_boolean_operations_match_brute_force(a, b):
    assert members(a | b) == members(a) | members(b)
    assert members(a & b) == members(a) & members(b)
    assert members(a.difference(b)) == members(a) - members(b)
    assert members(a.complement()) == set(range(WINDOW)) - members(a)


@settings(max_examples=60, deadline=None)
@given(a=periodic_sets(), b=periodic_sets())
def test_sumset_matches_brute_force(a, b):
    # every sum below WINDOW comes from summands below WINDOW
    expected = {x + y for x in members(a) for y in members(b) if x + y < WINDOW}
    assert members(a + b) == expected


@settings(max_examples=40, deadline=None)
@given(a=periodic_sets(), k=st.integers(0, 10))
def test_shift(a, k):
    assert members(a.shift(k)) == {j + k for j in members(a) if j + k < WINDOW}


@settings(max_examples=40, deadline=None)
@given(a=periodic_sets(), b=periodic_sets())
def test_equality_is_set_equality(a, b):
    assert (a == b) == (members(a) == members(b))
    assert a.issubset(a | b)


# ============================================================================
# CANONICAL FORM
# ============================================================================

def test_period_and_threshold_are_minimized():
    s = EventuallyPeriodicSet.make(5, 4, {0, 2}, {0, 2, 4})
    assert (s.threshold, s.period, s.residues, s.exceptional) == (0, 2, frozenset({0}), frozenset())


def test_named_constructors():
    assert EventuallyPeriodicSet.empty().is_empty()
    assert EventuallyPeriodicSet.naturals().min() == 0
    finite = EventuallyPeriodicSet.from_finite([7, 2])
    assert finite.is_finite() and finite.min() == 2
    assert members(finite) == {2, 7}
    assert EventuallyPeriodicSet.arithmetic(3, 0) == EventuallyPeriodicSet.from_finite([3])
    assert EventuallyPeriodicSet.arithmetic(3, 3).min() == 3


def test_describe():
    assert EventuallyPeriodicSet.arithmetic(3, 3).describe() == '{3,6,9,12,...}'
    assert EventuallyPeriodicSet.from_finite([1, 4]).describe() == '{1,4}'
    assert EventuallyPeriodicSet.empty().describe() == '{}'


def test_exponent_sets_of_a_cyclic_grading():
    # x of degree 1 in Z_3: R_1 R_2 is spanned by x^j with j >= 3
    r1 = EventuallyPeriodicSet.arithmetic(1, 3)
    r2 = EventuallyPeriodicSet.arithmetic(2, 3)
    product = r1 + r2
    assert 0 not in product
    assert product == EventuallyPeriodicSet.arithmetic(3, 3)


def test_invalid_description_rejected():
    with pytest.raises(ValueError):
        EventuallyPeriodicSet.make(0, 0, ())
    with pytest.raises(ValueError):
        EventuallyPeriodicSet.make(-1, 2, ())
