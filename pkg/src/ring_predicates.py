"""
Ring Predicates
===============
Decision procedures, with witnesses, for the ring-level properties of a
G-graded ring: weak, faithful / non-degenerate, regular, the strong classes,
crossed products, invertible gradings, zero divisors, graded simplicity,
the identity-component projection, components as R_e-modules, graded prime
ideals and semi-uniform rings.

Each predicate returns a PropertyReport. Universal statements over Z are
decided on the ring's degree window, outside of which every component is
zero; for the monomial backend exponent-set arithmetic replaces element
enumeration.
"""

from math import gcd
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from src.additive import Element, GradedSubgroup
from src.groups import NOT_MONOID, classify_subset
from src.periodic import EventuallyPeriodicSet
from src.reports import (PropertyReport, cap_guarded, fails, holds, not_applicable)
from src.rings import FiniteGradedRing
from src.utils import ConsistencyError, InputError, Limits, cached_on, resolve_limits

STRONG = 'strong'
FIRST_STRONG = 'first_strong'
SECOND_STRONG = 'second_strong'
CROSSED = 'crossed'
WEAKLY_CROSSED = 'weakly_crossed'
FAITHFUL = 'faithful'
NONDEGENERATE = 'nondegenerate_not_faithful'
DEGENERATE = 'degenerate'
NONE = 'none'


def is_monomial(ring) -> bool:
    return getattr(ring, 'backend', '') == 'monomial'


def _deg(ring, g: int) -> str:
    return ring.label(g)


# ============================================================================
# SUPPORT
# ============================================================================

def support(ring):
    """
    supp(R, G).

    Returns:
        Sorted list of degrees, or an EventuallyPeriodicSet of degrees for a
        monomial ring over Z
    """
    return ring.support()


def support_report(ring) -> PropertyReport:
    supp = ring.support()
    if isinstance(supp, EventuallyPeriodicSet):
        return holds('support', supp.describe(), stats={'infinite': not supp.is_finite()})
    return holds('support', [_deg(ring, g) for g in supp], stats={'size': len(supp)})


def support_class(ring) -> str:
    """classify_subset applied to the support."""
    return classify_subset(ring.group, ring.support())


def support_in_window(ring) -> List[int]:
    return [g for g in ring.degree_window() if ring.in_support(g)]


# ============================================================================
# WEAK GRADINGS
# ============================================================================

def is_weak(ring, limits: Optional[Limits] = None) -> PropertyReport:
    """R_g = 0 ⇒ R_{g^-1} = 0 for every g, i.e. the support is closed under inverses."""
    for g in ring.degree_window():
        inverse = ring.group.inv(g)
        if not ring.in_support(g) and ring.in_support(inverse):
            return fails('is_weak', witness={'degree': _deg(ring, g), 'inverse_degree': _deg(ring, inverse)})
    return holds('is_weak')


# ============================================================================
# FAITHFUL / NON-DEGENERATE
# ============================================================================

def _annihilator_witness(ring: FiniteGradedRing, g: int, h: int,
                         limits: Limits) -> Optional[Tuple[Element, str]]:
    """First nonzero a ∈ R_g with a·R_h = 0 or R_h·a = 0."""
    elements = ring.component_elements(g, limits, nonzero=True)
    if not elements:
        return None
    idx_h = ring.space.indices(h)
    if not idx_h:
        return elements[0], 'both'
    arr = ring.space.to_array(elements)
    orders = ring.space.orders_array
    left = np.einsum('ai,ijk->ajk', arr, ring.tensor[:, idx_h, :]) % orders
    right = np.einsum('ai,jik->ajk', arr, ring.tensor[idx_h, :, :]) % orders
    left_zero = ~left.reshape(len(elements), -1).any(axis=1)
    right_zero = ~right.reshape(len(elements), -1).any(axis=1)
    for a in range(len(elements)):
        if left_zero[a] or right_zero[a]:
            side = 'both' if left_zero[a] and right_zero[a] else ('left' if left_zero[a] else 'right')
            return elements[a], side
    return None


@cap_guarded('degeneracy_class')
def degeneracy_class(ring, limits: Optional[Limits] = None) -> PropertyReport:
    """
    faithful: no nonzero homogeneous a kills any component from either side;
    non-degenerate: no nonzero a ∈ R_g kills R_{g^-1}.
    """
    limits = resolve_limits(limits)
    name = 'degeneracy_class'
    group = ring.group

    if is_monomial(ring):
        # K[x] is a domain: a·R_h = 0 exactly when R_h = 0
        weak = is_weak(ring)
        if not weak.holds:
            g = group.inv(group.parse(weak.witness['degree']))
            a = ring.monomial(ring.exponent_set(g).min())
            return holds(name, DEGENERATE, witness={'element': ring.render(a), 'degree': _deg(ring, g),
                                                    'annihilated_degree': _deg(ring, group.inv(g))})
        gap = [h for h in ring.degree_window() if not ring.in_support(h)]
        if gap:
            return holds(name, NONDEGENERATE, witness={'element': '1', 'degree': _deg(ring, group.identity),
                                                       'annihilated_degree': _deg(ring, gap[0])})
        return holds(name, FAITHFUL)

    supp = ring.support()
    for g in supp:
        found = _annihilator_witness(ring, g, group.inv(g), limits)
        if found:
            a, side = found
            return holds(name, DEGENERATE, witness={
                'element': ring.render(a), 'degree': _deg(ring, g),
                'annihilated_degree': _deg(ring, group.inv(g)), 'side': side})
    for g in supp:
        for h in ring.degree_window():
            found = _annihilator_witness(ring, g, h, limits)
            if found:
                a, side = found
                return holds(name, NONDEGENERATE, witness={
                    'element': ring.render(a), 'degree': _deg(ring, g),
                    'annihilated_degree': _deg(ring, h), 'side': side})
    return holds(name, FAITHFUL)


# ============================================================================
# REGULAR GRADINGS
# ============================================================================

@cap_guarded('is_regular')
def is_regular(ring, limits: Optional[Limits] = None) -> PropertyReport:
    """Every nonzero homogeneous a ∈ R_g lies in {a·x·a : x ∈ R_{g^-1}}."""
    limits = resolve_limits(limits)
    if is_monomial(ring):
        # x·f·x has lowest exponent >= 2
        return fails('is_regular', witness={'element': 'x', 'degree': _deg(ring, ring.phi(1))})

    checked = 0
    for g in ring.support():
        inverse = ring.group.inv(g)
        middles = ring.component_elements(inverse, limits)
        elements = ring.component_elements(g, limits, nonzero=True)
        limits.check_pairs(len(elements) * len(middles))
        mid_arr = ring.space.to_array(middles)
        basis = ring.basis()
        for a in elements:
            # x ↦ a x a is additive: rows are a e_j a
            sandwich = np.array([ring.mul(ring.mul(a, b), a) for b in basis], dtype=np.int64)
            products = (mid_arr @ sandwich) % ring.space.orders_array
            checked += len(middles)
            if not (products == np.array(a)).all(axis=1).any():
                return fails('is_regular', witness={'element': ring.render(a), 'degree': _deg(ring, g)},
                             stats={'products_checked': checked})
    return holds('is_regular', stats={'products_checked': checked})


# ============================================================================
# STRONG GRADINGS
# ============================================================================

def _products_equal(ring, g: int, h: int, limits: Limits) -> bool:
    if is_monomial(ring):
        return ring.product_equals_component(g, h)
    return ring.product_equals_component(g, h, limits)


def _one_in_product(ring, g: int, limits: Limits) -> bool:
    inverse = ring.group.inv(g)
    if is_monomial(ring):
        return ring.component_product(g, inverse).contains(0)
    return ring.component_product(g, inverse, limits).contains(ring.one)


def _strong_failure(ring, limits: Limits) -> Optional[Tuple[int, int]]:
    """First (g, h) with R_g R_h != R_gh; inverse pairs are tried first."""
    group = ring.group
    if not group.is_finite:
        if ring.is_zero_ring():
            return None
        gap = [g for g in ring.degree_window() if not ring.in_support(g)]
        # R_g R_{g^-1} = 0 while 1 ∈ R_e
        return (gap[0], group.inv(gap[0])) if gap else None
    elements = group.elements()
    pairs = [(g, group.inv(g)) for g in elements]
    pairs += [(g, h) for g in elements for h in elements if group.mul(g, h) != group.identity]
    for g, h in pairs:
        if not _products_equal(ring, g, h, limits):
            return g, h
    return None


def _first_strong_failure(ring, limits: Limits) -> Optional[int]:
    for g in support_in_window(ring):
        if not _one_in_product(ring, g, limits):
            return g
    return None


def _second_strong_failure(ring, limits: Limits) -> Optional[Dict]:
    group = ring.group
    klass = support_class(ring)
    if klass == NOT_MONOID:
        return {'support_class': klass}
    if is_monomial(ring) and not group.is_finite:
        # E_{aγ} + E_{bγ} = {a + b} = E_{(a+b)γ}
        return None
    supp = support_in_window(ring)
    for g in supp:
        for h in supp:
            if not _products_equal(ring, g, h, limits):
                return {'pair': [_deg(ring, g), _deg(ring, h)]}
    return None


@cap_guarded('strongness_class')
def strongness_class(ring, limits: Optional[Limits] = None) -> PropertyReport:
    """
    Strongest of strong / first_strong / second_strong / none.

    The witness shows why the next stronger class fails; stats carry the
    three individual tests.
    """
    limits = resolve_limits(limits)
    if ring.is_zero_ring():
        return not_applicable('strongness_class', 'the zero ring has empty support')
    strong = _strong_failure(ring, limits)
    first = _first_strong_failure(ring, limits)
    second = _second_strong_failure(ring, limits)
    tests = {STRONG: strong is None, FIRST_STRONG: first is None, SECOND_STRONG: second is None}
    if (tests[STRONG] and not tests[FIRST_STRONG]) or (tests[FIRST_STRONG] and not tests[SECOND_STRONG]):
        raise ConsistencyError(f"strong class chain broken on {ring.name}: {tests}")

    if tests[STRONG]:
        return holds('strongness_class', STRONG, stats=tests)
    strong_witness = {'pair': [_deg(ring, strong[0]), _deg(ring, strong[1])]}
    if tests[FIRST_STRONG]:
        return holds('strongness_class', FIRST_STRONG, witness=strong_witness, stats=tests)
    first_witness = {'degree': _deg(ring, first)}
    if tests[SECOND_STRONG]:
        return holds('strongness_class', SECOND_STRONG, witness=first_witness, stats=tests)
    return holds('strongness_class', NONE, witness=second, stats=tests)


# ============================================================================
# CROSSED PRODUCTS
# ============================================================================

def _unit_in(ring, g: int, limits: Limits):
    return ring.homogeneous_unit_search(g, limits)


@cap_guarded('crossed_class')
def crossed_class(ring, limits: Optional[Limits] = None) -> PropertyReport:
    """crossed: every R_g has a unit; weakly_crossed: every supported R_g has one."""
    limits = resolve_limits(limits)
    group = ring.group
    window = ring.degree_window()

    weak_gap = None
    if is_monomial(ring) and not group.is_finite:
        if ring.gamma != 0:
            weak_gap = ring.gamma
    else:
        for g in support_in_window(ring):
            if _unit_in(ring, g, limits) is None:
                weak_gap = g
                break

    crossed_gap = weak_gap
    if crossed_gap is None:
        for g in window:
            if not ring.in_support(g) and not ring.is_zero_ring():
                crossed_gap = g
                break

    tests = {CROSSED: crossed_gap is None, WEAKLY_CROSSED: weak_gap is None}
    if tests[CROSSED]:
        return holds('crossed_class', CROSSED, stats=tests)
    if tests[WEAKLY_CROSSED]:
        return holds('crossed_class', WEAKLY_CROSSED, witness={'degree': _deg(ring, crossed_gap)}, stats=tests)
    return holds('crossed_class', NONE, witness={'degree': _deg(ring, weak_gap)}, stats=tests)


# ============================================================================
# INVERTIBLE GRADINGS
# ============================================================================

@cap_guarded('is_invertible_graded')
def is_invertible_graded(ring, limits: Optional[Limits] = None) -> PropertyReport:
    """R_e is a field: commutative, no zero divisors, every nonzero element invertible in R_e."""
    limits = resolve_limits(limits)
    name = 'is_invertible_graded'
    e = ring.group.identity

    if is_monomial(ring):
        exponents = ring.exponent_set(e)
        positive = exponents.difference(EventuallyPeriodicSet.from_finite([0]))
        if positive.is_empty():
            return holds(name, witness={'identity_component': 'GF(%d)' % ring.q})
        return fails(name, witness={'kind': 'not_invertible',
                                    'element': ring.render(ring.monomial(positive.min()))})

    if ring.is_zero_ring():
        return fails(name, witness={'kind': 'zero_ring'})

    idx = ring.space.indices(e)
    basis = ring.basis()
    for i in idx:
        for j in idx:
            if j > i and ring.mul(basis[i], basis[j]) != ring.mul(basis[j], basis[i]):
                return fails(name, witness={'kind': 'noncommuting', 'left': ring.space.names[i],
                                            'right': ring.space.names[j]})

    elements = ring.component_elements(e, limits)
    limits.check_pairs(len(elements) ** 2)
    arr = ring.space.to_array(elements)
    one = np.array(ring.one, dtype=np.int64)
    nonzero = arr.any(axis=1)
    for x in elements:
        if not any(x):
            continue
        products = ring.left_products(x, arr)
        killed = np.flatnonzero(~products.any(axis=1) & nonzero)
        if killed.size:
            y = elements[int(killed[0])]
            return fails(name, witness={'kind': 'zero_divisor', 'left': ring.render(x), 'right': ring.render(y)})
        if not (products == one).all(axis=1).any():
            return fails(name, witness={'kind': 'not_invertible', 'element': ring.render(x)})
    return holds(name, stats={'identity_component_size': len(elements)})


# ============================================================================
# ZERO DIVISORS
# ============================================================================

@cap_guarded('has_zero_divisors')
def zero_divisor_witness(ring, limits: Optional[Limits] = None) -> PropertyReport:
    """
    Search for nonzero x, y with xy = 0.

    Homogeneous squares come first, then homogeneous pairs, then a full scan;
    "fails" (no zero divisors) is only reported after the full scan.
    """
    limits = resolve_limits(limits)
    name = 'has_zero_divisors'
    if is_monomial(ring):
        return fails(name, stats={'reason': 'polynomial ring over a field is a domain'})

    def found(x, y, stage):
        return holds(name, witness={'left': ring.render(x), 'right': ring.render(y), 'stage': stage})

    supp = ring.support()
    for g in supp:
        for x in ring.component_elements(g, limits, nonzero=True):
            if not any(ring.mul(x, x)):
                return found(x, x, 'homogeneous_square')

    for g in supp:
        left = ring.component_elements(g, limits, nonzero=True)
        for h in supp:
            right = ring.component_elements(h, limits, nonzero=True)
            limits.check_pairs(len(left) * len(right))
            arr = ring.space.to_array(right)
            for x in left:
                killed = np.flatnonzero(~ring.left_products(x, arr).any(axis=1))
                if killed.size:
                    return found(x, right[int(killed[0])], 'homogeneous_pair')

    elements = ring.space.all_elements(limits)
    limits.check_pairs(len(elements) ** 2)
    arr = ring.space.to_array(elements)
    nonzero = arr.any(axis=1)
    for x in elements:
        if not any(x):
            continue
        killed = np.flatnonzero(~ring.left_products(x, arr).any(axis=1) & nonzero)
        if killed.size:
            return found(x, elements[int(killed[0])], 'full_scan')
    return fails(name, stats={'elements_scanned': len(elements)})


def has_no_zero_divisors(ring, limits: Optional[Limits] = None) -> Optional[bool]:
    """True / False, or None when the scan was aborted."""
    report = zero_divisor_witness(ring, limits)
    return None if report.aborted else report.fails


# ============================================================================
# GRADED SIMPLICITY AND IDEAL LATTICES
# ============================================================================

def _line(ring, x: Element) -> List[Element]:
    """Multiples k·x with k a unit modulo the order of x; they generate the same ideal."""
    order = ring.space.order_of(x)
    return [ring.space.scale(k, x) for k in range(1, order) if gcd(k, order) == 1]


@cap_guarded('is_graded_simple')
def is_graded_simple(ring, limits: Optional[Limits] = None) -> PropertyReport:
    """Every nonzero homogeneous a generates R as a two-sided ideal."""
    limits = resolve_limits(limits)
    name = 'is_graded_simple'
    if is_monomial(ring):
        return fails(name, witness={'element': 'x', 'ideal': '(x)'})
    if ring.is_zero_ring():
        return fails(name, witness={'kind': 'zero_ring'})

    covered = set()
    homogeneous = ring.space.homogeneous_elements(limits)
    if not homogeneous:
        return holds(name, vacuous=True)
    for g, a in homogeneous:
        if a in covered:
            continue
        ideal = ring.ideal_generated([a], 'two', limits)
        if ring.one not in ideal:
            return fails(name, witness={'element': ring.render(a), 'degree': _deg(ring, g),
                                        'ideal': ideal.describe(), 'ideal_size': ideal.size()})
        covered.update(_line(ring, a))
    return holds(name, stats={'homogeneous_elements': len(homogeneous)})


def enumerate_graded_ideals(ring: FiniteGradedRing, limits: Optional[Limits] = None) -> List[GradedSubgroup]:
    """
    Every graded two-sided ideal, in canonical order.

    Each graded ideal is a sum of principal ideals of homogeneous elements,
    so the join closure of those principal ideals together with 0 is the
    whole lattice.
    """
    limits = resolve_limits(limits)

    def compute():
        principal = []
        seen = set()
        covered = set()
        for _, a in ring.space.homogeneous_elements(limits):
            if a in covered:
                continue
            ideal = ring.ideal_generated([a], 'two', limits)
            covered.update(_line(ring, a))
            if ideal not in seen:
                seen.add(ideal)
                principal.append(ideal)
        lattice = {GradedSubgroup.zero(ring.space, 'two_sided_ideal')}
        for ideal in principal:
            for existing in list(lattice):
                lattice.add(existing.sum(ideal, limits))
                limits.check_lattice(len(lattice))
        return sorted(lattice, key=lambda i: i.sort_key())

    if is_monomial(ring):
        raise InputError("the ideal lattice of K[x] is infinite")
    return cached_on(ring, ('ideals', limits), compute)


def is_graded_prime_ideal(ring: FiniteGradedRing, ideal: GradedSubgroup,
                          limits: Optional[Limits] = None) -> PropertyReport:
    """Proper graded B with ab ∈ B ⇒ a ∈ B or b ∈ B on homogeneous a, b."""
    limits = resolve_limits(limits)
    name = 'is_graded_prime_ideal'
    if ideal.is_whole():
        return fails(name, witness={'reason': 'not proper'})
    outside = [(g, x) for g, x in ring.space.homogeneous_elements(limits) if x not in ideal]
    by_degree: Dict[int, List[Element]] = {}
    for g, x in outside:
        by_degree.setdefault(g, []).append(x)
    limits.check_pairs(len(outside) ** 2)
    for g, a in outside:
        for h, others in by_degree.items():
            target = ideal.part(ring.group.mul(g, h))
            products = ring.left_products(a, ring.space.to_array(others))
            for idx, row in enumerate(products):
                if ring.space.row(row) in target:
                    return fails(name, witness={'left': ring.render(a), 'right': ring.render(others[idx])})
    return holds(name)


def enumerate_graded_primes_ring(ring: FiniteGradedRing, limits: Optional[Limits] = None) -> List[GradedSubgroup]:
    """Graded prime ideals (zero included when it is prime), canonical order."""
    limits = resolve_limits(limits)
    return cached_on(ring, ('primes', limits), lambda: [
        ideal for ideal in enumerate_graded_ideals(ring, limits)
        if is_graded_prime_ideal(ring, ideal, limits).holds])


@cap_guarded('is_semi_essential_ideal')
def is_semi_essential_ideal(ring: FiniteGradedRing, ideal: GradedSubgroup,
                            limits: Optional[Limits] = None) -> PropertyReport:
    """I meets every nonzero graded prime ideal nontrivially."""
    limits = resolve_limits(limits)
    name = 'is_semi_essential_ideal'
    if ideal.is_zero():
        raise InputError("semi-essential ideals must be nonzero")
    primes = [b for b in enumerate_graded_primes_ring(ring, limits) if not b.is_zero()]
    for prime in primes:
        if (ideal & prime).is_zero():
            return fails(name, witness={'ideal': ideal.describe(), 'missed_prime': prime.describe()})
    return holds(name, vacuous=not primes, stats={'nonzero_primes': len(primes)})


@cap_guarded('is_semi_uniform_ring')
def is_semi_uniform_ring(ring, limits: Optional[Limits] = None) -> PropertyReport:
    """Every nonzero graded ideal is graded semi-essential."""
    limits = resolve_limits(limits)
    name = 'is_semi_uniform_ring'
    if is_monomial(ring):
        return not_applicable(name, 'the ideal lattice of K[x] is infinite')
    ideals = [i for i in enumerate_graded_ideals(ring, limits) if not i.is_zero()]
    vacuous = True
    for ideal in ideals:
        report = is_semi_essential_ideal(ring, ideal, limits)
        if report.aborted:
            return report
        vacuous = vacuous and report.vacuous
        if report.fails:
            return fails(name, witness=report.witness, stats={'ideals': len(ideals)})
    return holds(name, vacuous=vacuous, stats={'ideals': len(ideals)})


# ============================================================================
# THE IDENTITY COMPONENT AS A FIELD
# ============================================================================

@cap_guarded('identity_component_linear')
def identity_component_linear_report(ring, limits: Optional[Limits] = None) -> PropertyReport:
    """
    Linear-algebra facts about T(x) = x_e when R_e is a field.

    Checks T additive and R_e-compatible, Ker T ∩ R_e = 0, R_g ⊆ Ker T for
    g != e, T onto R_e, T non-injective iff some R_g != 0 with g != e, R_g
    closed under R_e scalars, |R_g + R_h| / |R_g| = |R_h| with the canonical
    map R_h -> (R_g + R_h)/R_g bijective, and Ker T_g = R_g where
    T_g(x) = x - x_g.
    """
    limits = resolve_limits(limits)
    name = 'identity_component_linear'
    if not is_invertible_graded(ring, limits).holds:
        return not_applicable(name, 'identity component is not a field')
    group = ring.group
    e = group.identity
    window = ring.degree_window()
    nontrivial = any(g != e and ring.in_support(g) for g in window)

    if is_monomial(ring):
        return _monomial_linear_report(ring, name, window, nontrivial)

    space = ring.space
    basis = ring.basis()
    identity_elements = ring.component_elements(e, limits)

    def project(x: Element, keep: int) -> Element:
        return space.decompose(x).get(keep, space.zero)

    checks: Dict[str, bool] = {}
    checks['additive'] = all(project(space.add(basis[i], basis[j]), e) ==
                             space.add(project(basis[i], e), project(basis[j], e))
                             for i in range(len(basis)) for j in range(len(basis)))
    checks['identity_scalar_compatible'] = all(project(ring.mul(r, b), e) == ring.mul(r, project(b, e))
                                               for r in identity_elements for b in basis)
    checks['kernel_meets_identity_trivially'] = all(project(x, e) == x for x in identity_elements)
    checks['other_components_in_kernel'] = all(not any(project(b, e)) for i, b in enumerate(basis)
                                               if space.degrees[i] != e)
    checks['surjective'] = {project(x, e) for x in identity_elements} == set(identity_elements)
    kernel_size = ring.size // space.component_size(e)
    checks['non_injective_iff_nontrivial'] = (kernel_size > 1) == nontrivial
    checks['components_are_subspaces'] = all(
        space.degree_of(ring.mul(r, b)) in (None, space.degrees[i])
        for r in identity_elements for i, b in enumerate(basis))

    sizes_ok = True
    for g in window:
        for h in window:
            if g == h:
                continue
            total = ring.component(g, limits).sum(ring.component(h, limits), limits).size()
            sizes_ok &= total // max(space.component_size(g), 1) == space.component_size(h)
            # x ↦ x + R_g is injective on R_h because R_g ∩ R_h = 0
            sizes_ok &= (ring.component(g, limits) & ring.component(h, limits)).is_zero()
    checks['sum_quotient_cardinality'] = sizes_ok

    everything = space.all_elements(limits)
    checks['projection_kernels'] = all(
        {x for x in everything if space.sub(x, project(x, g)) == space.zero}
        == set(space.component_elements(g, limits))
        for g in window)
    return _linear_verdict(name, checks, {'degrees_checked': len(window),
                                          'kernel_size': kernel_size})


def _monomial_linear_report(ring, name: str, window: List[int], nontrivial: bool) -> PropertyReport:
    """
    The same checks on K[x], read off the exponent sets E_g = {j : φ(j) = g}.

    T keeps the x^j with j ∈ E_e and drops the rest, so every check becomes a
    statement about the sets: R_e = K is E_e = {0}, Ker T is spanned by the
    x^j with j ∉ E_e, R_e·R_g ⊆ R_g is E_e + E_g ⊆ E_g, and Ker T_g = R_g
    needs E_g to hold exactly the exponents of degree g.
    """
    e = ring.group.identity
    exponent_sets = {g: ring.exponent_set(g) for g in window}
    identity_set = exponent_sets[e]
    # one full period of φ past every threshold
    bound = max(s.threshold + s.period for s in exponent_sets.values())
    bound += ring.group.order if ring.group.is_finite else 0

    def exact(g: int) -> bool:
        return all(exponent_sets[g].contains(j) == (ring.phi(j) == g) for j in range(bound))

    others = [g for g in window if g != e]
    checks = {
        'kernel_meets_identity_trivially': all(ring.phi(j) == e for j in range(bound)
                                               if identity_set.contains(j)),
        'other_components_in_kernel': all((exponent_sets[g] & identity_set).is_empty() for g in others),
        'surjective': identity_set == EventuallyPeriodicSet.from_finite([0]),
        'non_injective_iff_nontrivial': (not identity_set.complement().is_empty()) == nontrivial,
        'components_are_subspaces': all(identity_set.sumset(exponent_sets[g]).issubset(exponent_sets[g])
                                        for g in window),
        'sum_quotient_cardinality': all((exponent_sets[g] & exponent_sets[h]).is_empty()
                                        for g in window for h in window if g != h),
        'projection_kernels': all(exact(g) for g in window),
    }
    return _linear_verdict(name, checks, {'degrees_checked': len(window), 'exponents_checked': bound})


def _linear_verdict(name: str, checks: Dict[str, bool], stats: Dict) -> PropertyReport:
    failed = [k for k, ok in checks.items() if not ok]
    if failed:
        return fails(name, checks, witness={'failed_checks': failed}, stats=stats)
    return holds(name, checks, stats=stats)


# ============================================================================
# COMPONENTS AS R_e-MODULES
# ============================================================================

@cap_guarded('component_as_Re_module')
def component_as_Re_module_report(ring, g: int, limits: Optional[Limits] = None) -> PropertyReport:
    """
    Whether R_g = R_e·r for some r (cyclic) and whether R_g has no proper
    nonzero R_e-submodule (simple). Verdict tracks cyclicity; value holds both.
    """
    limits = resolve_limits(limits)
    name = 'component_as_Re_module'
    e = ring.group.identity
    g = ring.group.check(g)

    if not ring.in_support(g):
        return holds(name, {'zero': True, 'cyclic': True, 'simple': True},
                     witness={'degree': _deg(ring, g)}, vacuous=True)

    if is_monomial(ring):
        exponents = ring.exponent_set(g)
        start = exponents.min()
        identity_exps = ring.exponent_set(e)
        cyclic = exponents == identity_exps.shift(start)
        field = identity_exps == EventuallyPeriodicSet.from_finite([0])
        simple = cyclic and field
        witness = {'degree': _deg(ring, g), 'generator': ring.render(ring.monomial(start))}
        if cyclic and not simple:
            step = identity_exps.difference(EventuallyPeriodicSet.from_finite([0])).min()
            witness['proper_submodule_generator'] = ring.render(ring.monomial(start + step))
        value = {'zero': False, 'cyclic': cyclic, 'simple': simple}
        return holds(name, value, witness) if cyclic else fails(name, value, witness)

    identity_arr = ring.space.to_array(ring.component_elements(e, limits))
    elements = ring.component_elements(g, limits, nonzero=True)
    full = ring.space.component_size(g)
    limits.check_pairs(len(elements) * len(identity_arr))
    orbit_sizes = []
    for r in elements:
        orbit = ring.right_products(identity_arr, r)
        orbit_sizes.append(len({tuple(row) for row in orbit.tolist()}))
    generator = next((r for r, size in zip(elements, orbit_sizes) if size == full), None)
    small = next((r for r, size in zip(elements, orbit_sizes) if size != full), None)
    value = {'zero': False, 'cyclic': generator is not None, 'simple': small is None}
    witness = {'degree': _deg(ring, g)}
    if generator is not None:
        witness['generator'] = ring.render(generator)
    if small is not None:
        witness['proper_submodule_generator'] = ring.render(small)
    return holds(name, value, witness) if generator is not None else fails(name, value, witness)


@cap_guarded('component_unit_generator')
def component_unit_generator_report(ring, g: int, limits: Optional[Limits] = None) -> PropertyReport:
    """A unit r ∈ R_g with R_g = R_e·r = r·R_e (so R_g ≅ R_e as left R_e-modules)."""
    limits = resolve_limits(limits)
    name = 'component_unit_generator'
    e = ring.group.identity
    if not ring.in_support(g):
        return holds(name, witness={'degree': _deg(ring, g)}, vacuous=True)
    found = ring.homogeneous_unit_search(g, limits)
    if found is None:
        return fails(name, witness={'degree': _deg(ring, g), 'reason': 'no unit in component'})
    unit, inverse = found
    witness = {'degree': _deg(ring, g), 'unit': ring.render(unit), 'inverse': ring.render(inverse)}
    if is_monomial(ring):
        return holds(name, witness=witness)
    identity_arr = ring.space.to_array(ring.component_elements(e, limits))
    full = ring.space.component_size(g)
    left = {tuple(row) for row in ring.right_products(identity_arr, unit).tolist()}
    right = {tuple(row) for row in ring.left_products(unit, identity_arr).tolist()}
    if len(left) == full and len(right) == full:
        return holds(name, witness=witness)
    return fails(name, witness={**witness, 'left_orbit': len(left), 'right_orbit': len(right)})


# ============================================================================
# REGISTRY
# ============================================================================

def commutativity_report(ring) -> PropertyReport:
    return holds('is_commutative') if ring.is_commutative() else fails('is_commutative')


def support_class_report(ring) -> PropertyReport:
    if ring.is_zero_ring():
        return not_applicable('support_class', 'the zero ring has empty support')
    return holds('support_class', support_class(ring))


RING_PREDICATES: Dict[str, Callable[..., PropertyReport]] = {
    'support': lambda ring, limits=None: support_report(ring),
    'support_class': lambda ring, limits=None: support_class_report(ring),
    'is_commutative': lambda ring, limits=None: commutativity_report(ring),
    'is_weak': is_weak,
    'degeneracy_class': degeneracy_class,
    'is_regular': is_regular,
    'strongness_class': strongness_class,
    'crossed_class': crossed_class,
    'is_invertible_graded': is_invertible_graded,
    'has_zero_divisors': zero_divisor_witness,
    'is_graded_simple': is_graded_simple,
    'identity_component_linear': identity_component_linear_report,
    'is_semi_uniform_ring': is_semi_uniform_ring,
}


def run_ring_predicates(ring, names: Optional[List[str]] = None,
                        limits: Optional[Limits] = None) -> List[PropertyReport]:
    """Evaluate the named predicates (all by default) in registry order."""
    names = names or list(RING_PREDICATES)
    unknown = [n for n in names if n not in RING_PREDICATES]
    if unknown:
        raise InputError(f"unknown ring predicate(s): {', '.join(unknown)}")
    return [RING_PREDICATES[n](ring, limits) for n in names]
