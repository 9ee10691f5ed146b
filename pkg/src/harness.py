"""
Implication Harness
===================
Seeded generators of valid graded rings and modules, and the runner that
checks the implications between the predicates over a pool of generated
and registry instances.

A theorem entry must never see its hypothesis hold while its conclusion
fails; each violation is written to a replay file and the run goes on. A
non-implication entry must collect at least one counterexample. A theorem
whose hypothesis holds on no subject is reported as unexercised rather than
passed. Registry fixtures are always part of the pool.
"""

import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np
import pandas as pd

from src import config
from src.additive import GradedSubgroup
from src.fixtures import module_fixtures, ring_fixtures
from src.groups import SUBGROUP, FiniteGroup, cyclic, dihedral, direct_product, trivial_group
from src.module_predicates import (colon_condition, colon_ideal_is_prime,
                                   enumerate_graded_prime_submodules, is_faithful_module,
                                   is_graded_essential, is_graded_prime_submodule,
                                   is_graded_semi_essential, is_graded_semi_uniform,
                                   is_graded_uniform, is_multiplication_module, nonzero_primes,
                                   semi_essential_transfer_checks)
from src.modules import (FiniteGradedModule, GradedModuleHom, angle_submodule, colon,
                         column_module, cyclic_submodule, enumerate_graded_submodules,
                         gaussian_pair_module, identity_hom, module_strongness_class,
                         quotient_module, regular_module, restrict_to_submodule,
                         right_multiplication_hom, validate_module)
from src.reports import PropertyReport
from src.ring_predicates import (CROSSED, DEGENERATE, FAITHFUL, FIRST_STRONG, SECOND_STRONG,
                                 STRONG, WEAKLY_CROSSED, component_as_Re_module_report,
                                 component_unit_generator_report, crossed_class, degeneracy_class,
                                 identity_component_linear_report, is_graded_simple,
                                 is_invertible_graded, is_monomial, is_regular,
                                 is_semi_essential_ideal, is_semi_uniform_ring, is_weak,
                                 strongness_class, support_class, support_in_window,
                                 zero_divisor_witness)
from src.rings import (cyclic_ring, direct_sum, group_algebra, integers_group, matrix_ring,
                       monomial_ring, quadratic_ring, validate_ring)
from src.serialization import to_document
from src.utils import (CapExceeded, ConsistencyError, InputError, Limits, Logger, ParseError,
                       cached_on, format_percentage, resolve_limits, save_json)

THEOREM = 'theorem'
NON_IMPLICATION = 'non_implication'

RING_STREAM = 0
MODULE_STREAM = 1

# Entry statuses in the suite report
PASSED = 'passed'
VIOLATED = 'violated'
MISSING = 'missing_counterexample'
UNEXERCISED = 'unexercised'    # theorem whose hypothesis held on no subject


# ============================================================================
# GENERATOR PARAMETERS
# ============================================================================

@dataclass(frozen=True)
class GeneratorParams:
    """
    Everything that determines the generated instance stream.

    Instance `index` of a stream is drawn from its own generator seeded with
    (seed, stream, index), so any single instance can be regenerated alone.
    """
    seed: int = config.DEFAULT_SEED
    max_group_order: int = config.GENERATOR_MAX_GROUP_ORDER
    primes: Tuple[int, ...] = config.GENERATOR_PRIMES
    max_basis: int = config.GENERATOR_MAX_BASIS
    ring_weights: Tuple[Tuple[str, float], ...] = tuple(config.RING_FAMILY_WEIGHTS.items())
    module_weights: Tuple[Tuple[str, float], ...] = tuple(config.MODULE_FAMILY_WEIGHTS.items())

    def __post_init__(self):
        if self.seed < 0:
            raise InputError("seed must be a non-negative integer")
        if self.max_group_order < 2:
            raise InputError("max group order must be at least 2")
        if self.max_basis < 2:
            raise InputError("max basis size must be at least 2")
        if not self.primes or any(p < 2 or any(p % d == 0 for d in range(2, p)) for p in self.primes):
            raise InputError(f"coefficient primes must be primes, got {self.primes}")
        for weights, families in ((self.ring_weights, RING_FAMILIES), (self.module_weights, MODULE_FAMILIES)):
            unknown = [n for n, _ in weights if n not in families]
            if unknown:
                raise InputError(f"unknown generator families: {', '.join(unknown)}")
            if sum(w for _, w in weights) <= 0 or any(w < 0 for _, w in weights):
                raise InputError("family weights must be non-negative with a positive sum")

    def rng(self, stream: int, index: int) -> np.random.Generator:
        return np.random.default_rng([self.seed, stream, index])


def _pick(rng: np.random.Generator, options: List) -> Any:
    return options[int(rng.integers(len(options)))]


def _pick_family(rng: np.random.Generator, weights: Tuple[Tuple[str, float], ...]) -> str:
    names = [n for n, w in weights if w > 0]
    p = np.array([w for _, w in weights if w > 0], dtype=float)
    return names[int(rng.choice(len(names), p=p / p.sum()))]


# ============================================================================
# GROUPS
# ============================================================================

@lru_cache(maxsize=None)
def _grading_groups(max_order: int) -> Tuple[FiniteGroup, ...]:
    groups = [cyclic(n) for n in range(1, max_order + 1)]
    groups += [dihedral(k) for k in range(3, max_order // 2 + 1)]
    if max_order >= 4:
        groups.append(direct_product(cyclic(2), cyclic(2)))
    return tuple(groups)


@lru_cache(maxsize=None)
def _algebra_sources() -> Tuple[FiniteGroup, ...]:
    return tuple([cyclic(n) for n in range(1, 7)]
                 + [dihedral(3), direct_product(cyclic(2), cyclic(2))])


def _quotient_maps(source: FiniteGroup) -> List[Tuple[FiniteGroup, List[int]]]:
    """Homomorphisms H -> G onto small groups, as (G, image of every element of H)."""
    elements = source.elements()
    maps = [(source, list(elements)), (trivial_group(), [0] * source.order)]
    kind = source.descriptor().get('type')
    if kind == 'cyclic':
        n = source.order
        maps += [(cyclic(m), [h % m for h in elements]) for m in range(2, n) if n % m == 0]
    elif kind == 'dihedral':
        # a^i b^j sits at index i + n*j
        maps.append((cyclic(2), [h // source.n for h in elements]))
    elif kind == 'product' and source.order == 4:
        maps += [(cyclic(2), [h // 2 for h in elements]),
                 (cyclic(2), [h % 2 for h in elements]),
                 (cyclic(2), [(h // 2 + h % 2) % 2 for h in elements])]
    return maps


# ============================================================================
# RING FAMILIES
# ============================================================================

def _group_algebra(rng, params: GeneratorParams, name: str):
    q = _pick(rng, list(params.primes))
    sources = [h for h in _algebra_sources()
               if h.order <= params.max_basis and q ** h.order <= config.GENERATOR_MAX_RING_SIZE]
    source = _pick(rng, sources)
    grading, projection = _pick(rng, _quotient_maps(source))
    return group_algebra(source, grading, projection, q, name=name)


def _good_grading(rng, params: GeneratorParams, name: str, group: Optional[FiniteGroup] = None):
    q = _pick(rng, list(params.primes))
    sizes = [n for n in range(1, 4)
             if n * n <= params.max_basis and q ** (n * n) <= config.GENERATOR_MAX_RING_SIZE]
    n = _pick(rng, sizes)
    group = group or _pick(rng, list(_grading_groups(params.max_group_order)))
    degrees = [int(rng.integers(group.order)) for _ in range(n)]
    kept = None
    if n > 1 and rng.random() < 0.5:
        # Units above a preorder on the indices form a subalgebra
        levels = rng.integers(0, n, size=n)
        kept = [(i, j) for i in range(n) for j in range(n) if levels[i] <= levels[j]]
    return matrix_ring(group, degrees, q, kept, name=name)


def _quadratic(rng, params: GeneratorParams, name: str):
    n = int(rng.integers(2, 13))
    return quadratic_ring(n, int(rng.integers(n)), name=name)


def _monomial(rng, params: GeneratorParams, name: str):
    q = _pick(rng, list(params.primes))
    if rng.random() < 0.3:
        return monomial_ring(q, integers_group(), int(rng.integers(0, 4)), name=name)
    m = int(rng.integers(1, params.max_group_order + 1))
    return monomial_ring(q, cyclic(m), int(rng.integers(m)), name=name)


def _trivial(rng, params: GeneratorParams, name: str):
    n = int(rng.integers(2, 13))
    return cyclic_ring(n, _pick(rng, list(_grading_groups(params.max_group_order))), name=name)


def _summand(rng, group: FiniteGroup):
    choice = int(rng.integers(3 if group == cyclic(2) else 2))
    if choice == 0:
        return cyclic_ring(int(rng.integers(2, 7)), group)
    if choice == 1:
        size = int(rng.integers(1, 3))
        return matrix_ring(group, [int(rng.integers(group.order)) for _ in range(size)], 2)
    n = int(rng.integers(2, 7))
    return quadratic_ring(n, int(rng.integers(n)))


def _direct_sum(rng, params: GeneratorParams, name: str):
    group = _pick(rng, list(_grading_groups(min(params.max_group_order, 4))))
    return direct_sum(_summand(rng, group), _summand(rng, group), name=name)


RING_FAMILIES: Dict[str, Callable] = {
    'group_algebra': _group_algebra,
    'good_grading': _good_grading,
    'quadratic': _quadratic,
    'monomial': _monomial,
    'trivial': _trivial,
    'direct_sum': _direct_sum,
}


def _draw_ring(rng, params: GeneratorParams, name: str, exclude: Tuple[str, ...] = ()):
    weights = tuple((n, w) for n, w in params.ring_weights if n not in exclude)
    family = _pick_family(rng, weights)
    ring = RING_FAMILIES[family](rng, params, f"{name}:{family}")
    if ring.backend == 'finite':
        report = validate_ring(ring)
        if not report.valid:
            raise ConsistencyError(f"generated ring {ring.name} failed validation: {report.violations}")
    return ring


def generate_graded_ring(params: GeneratorParams, index: int):
    """
    Instance `index` of the ring stream.

    Args:
        params: Generator parameters
        index: Position in the stream

    Returns:
        A FiniteGradedRing or MonomialGradedRing that passes validation
    """
    return _draw_ring(params.rng(RING_STREAM, index), params, f"ring#{index}")


# ============================================================================
# MODULE FAMILIES
# ============================================================================

def _module_ring(rng, params: GeneratorParams, ring=None):
    """A finite ring small enough to act on itself."""
    if ring is not None and ring.backend == 'finite' and ring.size <= config.GENERATOR_MAX_MODULE_SIZE:
        return ring
    for attempt in range(8):
        candidate = _draw_ring(rng, params, f"base{attempt}", exclude=('monomial',))
        if candidate.size <= config.GENERATOR_MAX_MODULE_SIZE:
            return candidate
    return quadratic_ring(6, 5)


def _regular(rng, params, ring, name):
    return regular_module(_module_ring(rng, params, ring), name)


def _column(rng, params, ring, name):
    if ring is None or getattr(ring, 'matrix_units', None) is None:
        ring = _good_grading(rng, params, 'base:good_grading')
    return column_module(ring, int(rng.integers(ring.group.order)), name)


def _gaussian_pair(rng, params, ring, name):
    return gaussian_pair_module(int(rng.integers(2, 37)), name=name)


def _base_module(rng, params, ring) -> FiniteGradedModule:
    if rng.random() < 0.5:
        return regular_module(_module_ring(rng, params, ring))
    return gaussian_pair_module(int(rng.integers(2, 37)))


def _proper_submodule(rng, module: FiniteGradedModule) -> Optional[GradedSubgroup]:
    """First proper cyclic submodule among a few random homogeneous elements."""
    elements = module.space.homogeneous_elements()
    if not elements:
        return None
    for idx in rng.permutation(len(elements))[:8]:
        sub = cyclic_submodule(module, elements[int(idx)][1])
        if not sub.is_whole():
            return sub
    return None


def _quotient(rng, params, ring, name):
    base = _base_module(rng, params, ring)
    sub = _proper_submodule(rng, base)
    return quotient_module(base, sub, name=name) if sub is not None else base


def _restriction(rng, params, ring, name):
    base = _base_module(rng, params, ring)
    sub = _proper_submodule(rng, base)
    return restrict_to_submodule(base, sub, name=name) if sub is not None else base


MODULE_FAMILIES: Dict[str, Callable] = {
    'regular': _regular,
    'column': _column,
    'gaussian_pair': _gaussian_pair,
    'quotient': _quotient,
    'restriction': _restriction,
}


def generate_graded_module(params: GeneratorParams, ring=None, index: int = 0) -> FiniteGradedModule:
    """
    Instance `index` of the module stream.

    Args:
        params: Generator parameters
        ring: Ring to build on where the family allows it; drawn otherwise
        index: Position in the stream

    Returns:
        A FiniteGradedModule that passes validation
    """
    rng = params.rng(MODULE_STREAM, index)
    family = _pick_family(rng, params.module_weights)
    module = MODULE_FAMILIES[family](rng, params, ring, f"module#{index}:{family}")
    report = validate_module(module)
    if not report.valid:
        raise ConsistencyError(f"generated module {module.name} failed validation: {report.violations}")
    return module


# ============================================================================
# INSTANCES AND SUBJECTS
# ============================================================================

@dataclass
class Instance:
    """One ring or module in the pool."""
    label: str
    origin: str
    index: Optional[int]
    ring: Any
    module: Optional[FiniteGradedModule] = None
    named: Dict[str, GradedSubgroup] = field(default_factory=dict)

    @property
    def structure(self) -> Any:
        return self.module if self.module is not None else self.ring


@dataclass
class Subject:
    """What one implication is evaluated on: an instance plus the chosen parts."""
    instance: Instance
    key: str
    first: Optional[GradedSubgroup] = None
    second: Optional[GradedSubgroup] = None
    hom: Optional[GradedModuleHom] = None

    @property
    def ring(self):
        return self.instance.ring

    @property
    def module(self) -> Optional[FiniteGradedModule]:
        return self.instance.module


@dataclass(frozen=True)
class Implication:
    name: str
    scope: str
    hypothesis: Tuple[str, ...]
    conclusion: str
    expected: str
    statement: str


def _submodule_sample(instance: Instance, limits: Limits) -> List[GradedSubgroup]:
    """Named submodules first, then the first nonzero ones in lattice order."""
    module = instance.module
    picked = list(instance.named.values())
    budget = len(picked) + config.SUITE_SUBMODULES
    for sub in enumerate_graded_submodules(module, limits):
        if len(picked) >= budget:
            break
        if not sub.is_zero() and sub not in picked:
            picked.append(sub)
    return picked


def _subjects(instance: Instance, scope: str, limits: Limits) -> List[Subject]:
    label = instance.label
    if scope == 'ring':
        return [Subject(instance, label)]
    if scope == 'ring_map':
        return _ring_map_subjects(instance, limits)
    module = instance.module
    if scope == 'module':
        return [Subject(instance, label)]
    subs = _submodule_sample(instance, limits)
    head = subs[:config.SUITE_PAIR_SUBMODULES]
    if scope == 'submodule':
        return [Subject(instance, f"{label} K={k.describe()}", first=k) for k in subs]
    if scope == 'pair':
        return [Subject(instance, f"{label} K={k.describe()} L={l.describe()}", first=k, second=l)
                for k in head for l in head]
    primes = nonzero_primes(module, limits)[:config.SUITE_PRIMES]
    if scope == 'prime':
        return [Subject(instance, f"{label} P={p.describe()}", first=p)
                for p in enumerate_graded_prime_submodules(module, limits)]
    if scope == 'submodule_prime':
        return [Subject(instance, f"{label} K={k.describe()} P={p.describe()}", first=k, second=p)
                for k in head for p in primes]
    if scope == 'quotient':
        proper = [s for s in subs if not s.is_whole()][:config.SUITE_QUOTIENTS]
        return [Subject(instance, f"{label} T={t.describe()}", first=t) for t in proper]
    if scope == 'transfer':
        homs = [identity_hom(module)]
        homs += [quotient_module(module, p, limits).projection for p in primes[:config.SUITE_QUOTIENTS]]
        return [Subject(instance, f"{label} f{i} K={k.describe()}", first=k, hom=hom)
                for i, hom in enumerate(homs) for k in subs[:config.SUITE_QUOTIENTS + 1]]
    raise InputError(f"unknown implication scope {scope!r}")


def _ring_map_subjects(instance: Instance, limits: Limits) -> List[Subject]:
    """Right multiplications m ↦ m·u on the regular module of a small finite ring."""
    ring = instance.ring
    if ring.backend != 'finite' or ring.size > config.SUITE_MAP_RING_SIZE:
        return []
    module = cached_on(ring, 'suite_regular_module', lambda: regular_module(ring))
    e = ring.group.identity
    multipliers = ring.component_elements(e, limits, nonzero=True)[:config.SUITE_RING_MAPS]
    for g in support_in_window(ring):
        if g == e:
            continue
        found = ring.homogeneous_unit_search(g, limits)
        if found is not None:
            multipliers.append(found[0])
        if len(multipliers) >= 2 * config.SUITE_RING_MAPS:
            break
    return [Subject(instance, f"{instance.label} (·{ring.render(u)})",
                    hom=right_multiplication_hom(ring, u, module)) for u in multipliers]


# ============================================================================
# RING FACTS
# ============================================================================

def _ring_report(ring, predicate: Callable, limits: Limits, *args) -> PropertyReport:
    key = ('suite', predicate.__name__, args, limits)
    return cached_on(ring, key, lambda: predicate(ring, *args, limits))


def _class_test(report: PropertyReport, key: str) -> Optional[bool]:
    return bool(report.stats[key]) if report.decided else None


def _degeneracy(ring, limits: Limits) -> Optional[str]:
    report = _ring_report(ring, degeneracy_class, limits)
    return report.value if report.decided else None


def _nondegenerate(s: Subject, limits: Limits) -> Optional[bool]:
    value = _degeneracy(s.ring, limits)
    return None if value is None else value != DEGENERATE


def _faithful(s: Subject, limits: Limits) -> Optional[bool]:
    value = _degeneracy(s.ring, limits)
    return None if value is None else value == FAITHFUL


def _strongness(key: str) -> Callable:
    return lambda s, limits: _class_test(_ring_report(s.ring, strongness_class, limits), key)


def _crossed(key: str) -> Callable:
    return lambda s, limits: _class_test(_ring_report(s.ring, crossed_class, limits), key)


def _domain(s: Subject, limits: Limits) -> Optional[bool]:
    report = _ring_report(s.ring, zero_divisor_witness, limits)
    return report.fails if report.decided else None


def _support_subgroup(s: Subject, limits: Limits) -> bool:
    return support_class(s.ring) == SUBGROUP


def _abelian_support(s: Subject, limits: Limits) -> bool:
    ring = s.ring
    if support_class(ring) != SUBGROUP:
        return False
    return not ring.group.is_finite or ring.group.commutes_on(list(ring.support()))


def _components(s: Subject, limits: Limits, predicate: Callable) -> List[PropertyReport]:
    return [_ring_report(s.ring, predicate, limits, g) for g in support_in_window(s.ring)]


def _components_cyclic_simple(s: Subject, limits: Limits) -> Optional[bool]:
    reports = _components(s, limits, component_as_Re_module_report)
    if any(not r.decided for r in reports):
        return None
    return all(r.value['cyclic'] and r.value['simple'] for r in reports)


def _components_unit_generated(s: Subject, limits: Limits) -> Optional[bool]:
    reports = _components(s, limits, component_unit_generator_report)
    if any(not r.decided for r in reports):
        return None
    return all(r.holds for r in reports)


def _two_sided_inverse_in(ring, u, candidates: List, limits: Limits) -> bool:
    if not candidates:
        return False
    arr = ring.space.to_array(candidates)
    limits.check_pairs(len(candidates))
    one = np.array(ring.one)
    hits = np.flatnonzero((ring.left_products(u, arr) == one).all(axis=1))
    return any(ring.mul(candidates[int(i)], u) == ring.one for i in hits)


def _homogeneous_units(s: Subject, limits: Limits) -> bool:
    """Every nonzero homogeneous element is a unit."""
    ring = s.ring
    if is_monomial(ring):
        return False
    for g in ring.support():
        inverses = ring.component_elements(ring.group.inv(g), limits, nonzero=True)
        for u in ring.component_elements(g, limits, nonzero=True):
            if not _two_sided_inverse_in(ring, u, inverses, limits):
                return False
    return True


def _identity_division_ring(s: Subject, limits: Limits) -> Optional[bool]:
    ring = s.ring
    if is_monomial(ring):
        report = _ring_report(ring, is_invertible_graded, limits)
        return report.holds if report.decided else None
    e = ring.group.identity
    elements = ring.component_elements(e, limits, nonzero=True)
    return all(_two_sided_inverse_in(ring, u, elements, limits) for u in elements)


def _plain_simple(s: Subject, limits: Limits) -> bool:
    """No two-sided ideal strictly between 0 and R, graded or not."""
    ring = s.ring
    if is_monomial(ring):
        return False
    return all(ring.plain_ideal_generated([x], 'two', limits).size() == ring.size
               for x in ring.space.all_elements(limits) if any(x))


def _ideal_avoidance(s: Subject, limits: Limits) -> Optional[bool]:
    """A nonzero ideal meeting R_e only in 0 contains no nonzero homogeneous element."""
    ring = s.ring
    if is_monomial(ring):
        return None
    identity_part = set(ring.component_elements(ring.group.identity, limits, nonzero=True))
    samples = [x for x in ring.space.all_elements(limits) if any(x)][:config.SUITE_IDEAL_SAMPLES]
    for x in samples:
        ideal = ring.plain_ideal_generated([x], 'two', limits)
        if ideal.elements & identity_part:
            continue
        if any(any(y) and ring.space.is_homogeneous(y) for y in ideal.elements):
            return False
    return True


def _oracle_sized(s: Subject, limits: Limits) -> bool:
    return s.ring.backend == 'finite' and s.ring.size <= config.ORACLE_RING_SIZE


def _unit_search_agrees(s: Subject, limits: Limits) -> bool:
    """Homogeneous unit search matches a scan of all units of R."""
    ring = s.ring
    units = ring.full_inverse_search(limits)
    for g in ring.degree_window():
        restricted = ring.homogeneous_unit_search(g, limits) is not None
        unrestricted = any(ring.space.degree_of(u) == g for u in units)
        if restricted != unrestricted:
            return False
    return True


def _polynomial_identity_field(s: Subject, limits: Limits) -> Optional[bool]:
    """K[x] with R_e = K."""
    if not is_monomial(s.ring):
        return False
    report = _ring_report(s.ring, is_invertible_graded, limits)
    return report.holds if report.decided else None


def _neither_weak_nor_strong(s: Subject, limits: Limits) -> Optional[bool]:
    weak = _ring_report(s.ring, is_weak, limits)
    strong = _class_test(_ring_report(s.ring, strongness_class, limits), STRONG)
    if not weak.decided or strong is None:
        return None
    return weak.fails and not strong


def _iff(first: Callable, *rest: Callable) -> Callable:
    """first ⟺ (conjunction of rest), three-valued."""
    def fact(s: Subject, limits: Limits) -> Optional[bool]:
        values = [_as_bool(f(s, limits)) for f in (first,) + rest]
        if None in values:
            return None
        return values[0] == all(values[1:])
    return fact


def _as_bool(value: Any) -> Optional[bool]:
    if isinstance(value, PropertyReport):
        return value.holds if value.decided else None
    return value


def _report_fact(predicate: Callable) -> Callable:
    return lambda s, limits: _ring_report(s.ring, predicate, limits)


# ============================================================================
# MODULE FACTS
# ============================================================================

def _module_report(module: FiniteGradedModule, predicate: Callable, limits: Limits,
                   *args) -> PropertyReport:
    key = ('suite', predicate.__name__, args, limits)
    return cached_on(module, key, lambda: predicate(module, *args, limits))


def _semi_essential_of(module: FiniteGradedModule, sub: GradedSubgroup,
                       limits: Limits) -> Optional[bool]:
    """Zero is never semi-essential."""
    if sub.is_zero():
        return False
    report = _module_report(module, is_graded_semi_essential, limits, sub)
    return report.holds if report.decided else None


def _module_fact(predicate: Callable) -> Callable:
    return lambda s, limits: _module_report(s.module, predicate, limits)


def _module_first_strong(s: Subject, limits: Limits) -> Optional[bool]:
    report = _module_report(s.module, module_strongness_class, limits)
    return report.value in ('strong', 'first_strong') if report.decided else None


def _components_translate(s: Subject, limits: Limits) -> bool:
    """u·M_e = M_g with |u·M_e| = |M_e| for a unit u of every supported degree g."""
    ring, module = s.ring, s.module
    identity_part = module.component_elements(ring.group.identity, limits)
    for g in support_in_window(ring):
        found = ring.homogeneous_unit_search(g, limits)
        if found is None:
            return False
        image = {module.act(found[0], m) for m in identity_part}
        if not len(image) == len(identity_part) == module.space.component_size(g):
            return False
    return True


def _hereditary_semi_uniform(s: Subject, limits: Limits) -> Optional[bool]:
    """Every nonzero rM with r ∈ R_e is semi-uniform as a module of its own."""
    module = s.module
    e = module.ring.group.identity
    for r in module.ring.component_elements(e, limits, nonzero=True)[:config.HEREDITARY_SUBMODULE_LIMIT]:
        sub = angle_submodule(module, r, limits=limits)
        if sub.is_zero():
            continue
        restricted = cached_on(module, ('suite_restricted', sub, limits),
                               lambda: restrict_to_submodule(module, sub, limits))
        report = is_graded_semi_uniform(restricted, limits)
        if not report.decided:
            return None
        if report.fails:
            return False
    return True


def _essential(s: Subject, limits: Limits) -> PropertyReport:
    return _module_report(s.module, is_graded_essential, limits, s.first)


def _semi_essential(s: Subject, limits: Limits) -> Optional[bool]:
    return _semi_essential_of(s.module, s.first, limits)


def _essential_modes_agree(s: Subject, limits: Limits) -> Optional[bool]:
    cyclic_mode = is_graded_essential(s.module, s.first, limits, mode='cyclic')
    lattice_mode = is_graded_essential(s.module, s.first, limits, mode='lattice')
    if not (cyclic_mode.decided and lattice_mode.decided):
        return None
    return cyclic_mode.verdict == lattice_mode.verdict


def _semi_essential_modes_agree(s: Subject, limits: Limits) -> Optional[bool]:
    definition = is_graded_semi_essential(s.module, s.first, limits, mode='definition')
    characterization = is_graded_semi_essential(s.module, s.first, limits, mode='characterization')
    if not (definition.decided and characterization.decided):
        return None
    return definition.verdict == characterization.verdict


def _colon_semi_essential_ideal(s: Subject, limits: Limits) -> Optional[bool]:
    """(K : M) is a nonzero semi-essential ideal of R."""
    ideal = colon(s.module, s.first, limits)
    if ideal.is_zero():
        return False
    report = is_semi_essential_ideal(s.ring, ideal, limits)
    return report.holds if report.decided else None


def _first_within_second(s: Subject, limits: Limits) -> bool:
    return s.first <= s.second


def _first_semi_essential(s: Subject, limits: Limits) -> Optional[bool]:
    return _semi_essential_of(s.module, s.first, limits)


def _second_semi_essential(s: Subject, limits: Limits) -> Optional[bool]:
    return _semi_essential_of(s.module, s.second, limits)


def _both_semi_essential(s: Subject, limits: Limits) -> Optional[bool]:
    values = [_first_semi_essential(s, limits), _second_semi_essential(s, limits)]
    if False in values:
        return False
    return None if None in values else True


def _meet_semi_essential(s: Subject, limits: Limits) -> Optional[bool]:
    return _semi_essential_of(s.module, s.first & s.second, limits)


def _first_essential(s: Subject, limits: Limits) -> Optional[bool]:
    report = _module_report(s.module, is_graded_essential, limits, s.first)
    return report.holds if report.decided else None


def _colon_condition_first(s: Subject, limits: Limits) -> bool:
    """(K ∩ P : m) = Ann(M) for every homogeneous m ∉ K ∩ P and every nonzero graded prime P."""
    return all(colon_condition(s.module, s.first, p, limits) is None
               for p in nonzero_primes(s.module, limits))


def _colon_condition(s: Subject, limits: Limits) -> bool:
    return colon_condition(s.module, s.first, s.second, limits) is None


def _meet_is_prime(s: Subject, limits: Limits) -> PropertyReport:
    return is_graded_prime_submodule(s.module, s.first & s.second, limits)


def _colon_ideal_prime(s: Subject, limits: Limits) -> PropertyReport:
    return colon_ideal_is_prime(s.module, s.first, limits)


def _prime_correspondence(s: Subject, limits: Limits) -> bool:
    """Graded primes of M/T are exactly the images of graded primes of M containing T."""
    module, t = s.module, s.first
    quotient = cached_on(module, ('suite_quotient', t, limits), lambda: quotient_module(module, t, limits))
    pi = quotient.projection
    primes = enumerate_graded_prime_submodules(module, limits)
    quotient_primes = enumerate_graded_prime_submodules(quotient, limits)
    if any(pi.preimage(q, limits) not in primes for q in quotient_primes):
        return False
    if any(pi.image(p, limits) not in quotient_primes for p in primes if t <= p):
        return False
    return all(pi.preimage(pi.image(l, limits), limits) == l
               for l in enumerate_graded_submodules(module, limits) if t <= l)


def _transfer(statement: str, part: str) -> Callable:
    def fact(s: Subject, limits: Limits) -> Optional[bool]:
        report = cached_on(s.hom, ('suite_transfer', s.first, limits),
                           lambda: semi_essential_transfer_checks(s.hom, s.first, limits))
        if not report.decided or report.value is None:
            return None
        entry = next(e for e in report.value if e['statement'] == statement)
        return entry[part]
    return fact


def _map_isomorphism(s: Subject, limits: Limits) -> bool:
    return s.hom.is_isomorphism(limits)


def _onto(s: Subject, g: int, limits: Limits) -> bool:
    ring = s.ring
    return s.hom.image_of_component(g, limits).elements == frozenset(ring.component_elements(g, limits))


def _onto_identity_iff_onto_components(s: Subject, limits: Limits) -> bool:
    identity_onto = _onto(s, s.ring.group.identity, limits)
    return identity_onto == all(_onto(s, g, limits) for g in s.ring.support())


def _grade_fixing_iff_identity_onto(s: Subject, limits: Limits) -> bool:
    return s.hom.is_grade_fixing() == _onto(s, s.ring.group.identity, limits)


FACTS: Dict[str, Callable[[Subject, Limits], Any]] = {
    # rings
    'weak': _report_fact(is_weak),
    'nondegenerate': _nondegenerate,
    'faithful': _faithful,
    'regular': _report_fact(is_regular),
    'strong': _strongness(STRONG),
    'first_strong': _strongness(FIRST_STRONG),
    'second_strong': _strongness(SECOND_STRONG),
    'crossed': _crossed(CROSSED),
    'weakly_crossed': _crossed(WEAKLY_CROSSED),
    'invertible': _report_fact(is_invertible_graded),
    'domain': _domain,
    'commutative': lambda s, limits: s.ring.is_commutative(),
    'support_subgroup': _support_subgroup,
    'abelian_support_subgroup': _abelian_support,
    'group_abelian': lambda s, limits: s.ring.group.is_abelian(),
    'graded_simple': _report_fact(is_graded_simple),
    'components_cyclic_simple': _components_cyclic_simple,
    'components_unit_generated': _components_unit_generated,
    'homogeneous_units': _homogeneous_units,
    'identity_linear': _report_fact(identity_component_linear_report),
    'identity_division_ring': _identity_division_ring,
    'plain_simple': _plain_simple,
    'ideal_avoidance': _ideal_avoidance,
    'oracle_sized': _oracle_sized,
    'unit_search_agrees': _unit_search_agrees,
    'polynomial_identity_field': _polynomial_identity_field,
    'neither_weak_nor_strong': _neither_weak_nor_strong,
    'weak_iff_nondegenerate': _iff(_report_fact(is_weak), _nondegenerate),
    'weak_iff_support_subgroup': _iff(_report_fact(is_weak), _support_subgroup),
    'first_iff_second_and_nondegenerate': _iff(_strongness(FIRST_STRONG), _strongness(SECOND_STRONG),
                                               _nondegenerate),
    'strong_iff_second_and_faithful': _iff(_strongness(STRONG), _strongness(SECOND_STRONG), _faithful),
    'ring_semi_uniform': _report_fact(is_semi_uniform_ring),
    # modules
    'semi_uniform': _module_fact(is_graded_semi_uniform),
    'uniform': _module_fact(is_graded_uniform),
    'multiplication': _module_fact(is_multiplication_module),
    'faithful_module': _module_fact(is_faithful_module),
    'module_first_strong': _module_first_strong,
    'components_translate': _components_translate,
    'hereditary_semi_uniform': _hereditary_semi_uniform,
    # submodules
    'essential': _essential,
    'semi_essential': _semi_essential,
    'essential_modes_agree': _essential_modes_agree,
    'semi_essential_modes_agree': _semi_essential_modes_agree,
    'colon_semi_essential_ideal': _colon_semi_essential_ideal,
    # pairs
    'first_within_second': _first_within_second,
    'first_semi_essential': _first_semi_essential,
    'second_semi_essential': _second_semi_essential,
    'both_semi_essential': _both_semi_essential,
    'meet_semi_essential': _meet_semi_essential,
    'first_essential': _first_essential,
    'colon_condition_first': _colon_condition_first,
    'colon_condition': _colon_condition,
    'meet_is_prime': _meet_is_prime,
    # primes, quotients, maps
    'colon_ideal_prime': _colon_ideal_prime,
    'prime_correspondence': _prime_correspondence,
    'map_isomorphism': _map_isomorphism,
    'onto_identity_iff_onto_components': _onto_identity_iff_onto_components,
    'grade_fixing_iff_identity_onto': _grade_fixing_iff_identity_onto,
}
for _statement in ('isomorphism_image', 'epimorphism_preimage', 'prime_quotient_rigidity'):
    FACTS[f"transfer_{_statement}_hypothesis"] = _transfer(_statement, 'hypothesis')
    FACTS[f"transfer_{_statement}_conclusion"] = _transfer(_statement, 'conclusion')


class FactBook:
    """
    Memoized three-valued facts per subject.

    A fact is True, False or None (undecided: a cap was hit or the
    predicate does not apply to the backend).
    """

    def __init__(self, limits: Limits):
        self.limits = limits
        self._values: Dict[Tuple[str, str], Optional[bool]] = {}
        self._vacuous = set()

    def value(self, subject: Subject, fact: str) -> Optional[bool]:
        key = (subject.key, fact)
        if key not in self._values:
            self._values[key] = self._compute(subject, fact)
        return self._values[key]

    def vacuous(self, subject: Subject, fact: str) -> bool:
        return (subject.key, fact) in self._vacuous

    def _compute(self, subject: Subject, fact: str) -> Optional[bool]:
        try:
            result = FACTS[fact](subject, self.limits)
        except CapExceeded:
            return None
        if isinstance(result, PropertyReport):
            if not result.decided:
                return None
            if result.vacuous:
                self._vacuous.add((subject.key, fact))
            return result.holds
        return None if result is None else bool(result)


# ============================================================================
# THE DEFAULT SUITE
# ============================================================================

def _theorem(name: str, scope: str, hypothesis: Tuple[str, ...], conclusion: str,
             statement: str) -> Implication:
    return Implication(name, scope, hypothesis, conclusion, THEOREM, statement)


def _non_implication(name: str, scope: str, hypothesis: Tuple[str, ...], conclusion: str,
                     statement: str) -> Implication:
    return Implication(name, scope, hypothesis, conclusion, NON_IMPLICATION, statement)


DEFAULT_SUITE: List[Implication] = [
    # ring gradings
    _theorem('faithful_implies_weak', 'ring', ('faithful',), 'weak',
             "a faithful grading is weak"),
    _theorem('nondegenerate_implies_weak', 'ring', ('nondegenerate',), 'weak',
             "a non-degenerate grading is weak"),
    _theorem('regular_implies_nondegenerate', 'ring', ('regular',), 'nondegenerate',
             "a regular grading is non-degenerate"),
    _theorem('domain_weak_iff_nondegenerate', 'ring', ('domain',), 'weak_iff_nondegenerate',
             "over a domain, weak and non-degenerate coincide"),
    _theorem('domain_weak_iff_support_subgroup', 'ring', ('domain',), 'weak_iff_support_subgroup',
             "over a domain, the grading is weak iff the support is a subgroup"),
    _theorem('support_subgroup_implies_weak', 'ring', ('support_subgroup',), 'weak',
             "a grading whose support is a subgroup is weak"),
    _theorem('first_strong_implies_weak', 'ring', ('first_strong',), 'weak',
             "first strong gradings are weak"),
    _theorem('second_strong_weak_implies_first_strong', 'ring', ('second_strong', 'weak'),
             'first_strong', "a weak second strong grading is first strong"),
    _theorem('first_strong_iff_second_strong_nondegenerate', 'ring', (),
             'first_iff_second_and_nondegenerate',
             "first strong iff second strong and non-degenerate"),
    _theorem('strong_iff_second_strong_faithful', 'ring', (), 'strong_iff_second_and_faithful',
             "strong iff second strong and faithful"),
    _theorem('weakly_crossed_implies_first_strong', 'ring', ('weakly_crossed',), 'first_strong',
             "a weakly crossed product is first strong"),
    _theorem('weakly_crossed_implies_weak', 'ring', ('weakly_crossed',), 'weak',
             "a weakly crossed product is weak"),
    _theorem('weakly_crossed_implies_support_subgroup', 'ring', ('weakly_crossed',),
             'support_subgroup', "the support of a weakly crossed product is a subgroup"),
    _theorem('weakly_crossed_implies_second_strong', 'ring', ('weakly_crossed',), 'second_strong',
             "a weakly crossed product is second strong"),
    _theorem('weakly_crossed_implies_nondegenerate', 'ring', ('weakly_crossed',), 'nondegenerate',
             "a weakly crossed product is non-degenerate"),
    _theorem('weakly_crossed_components_unit_generated', 'ring', ('weakly_crossed',),
             'components_unit_generated',
             "in a weakly crossed product each supported R_g = R_e u = u R_e for a unit u"),
    _theorem('invertible_weak_domain_implies_first_strong', 'ring', ('invertible', 'weak', 'domain'),
             'first_strong', "an invertible weak grading of a domain is first strong"),
    _theorem('invertible_weak_domain_implies_graded_simple', 'ring', ('invertible', 'weak', 'domain'),
             'graded_simple', "an invertible weak grading of a domain is graded simple"),
    _theorem('invertible_weak_domain_components_simple', 'ring', ('invertible', 'weak', 'domain'),
             'components_cyclic_simple',
             "an invertible weak grading of a domain has cyclic simple components over R_e"),
    _theorem('invertible_weak_domain_implies_weakly_crossed', 'ring', ('invertible', 'weak', 'domain'),
             'weakly_crossed', "an invertible weak grading of a domain is weakly crossed"),
    _theorem('invertible_weak_domain_homogeneous_units', 'ring', ('invertible', 'weak', 'domain'),
             'homogeneous_units',
             "an invertible weak grading of a domain has only units as nonzero homogeneous elements"),
    _theorem('commutative_weak_domain_abelian_support', 'ring', ('domain', 'commutative', 'weak'),
             'abelian_support_subgroup',
             "a weak grading of a commutative domain has an abelian subgroup as support"),
    _theorem('faithful_commutative_domain_abelian_group', 'ring', ('faithful', 'commutative', 'domain'),
             'group_abelian', "a faithful grading of a commutative domain is by an abelian group"),
    _theorem('weak_domain_division_identity_simple', 'ring',
             ('weak', 'domain', 'identity_division_ring'), 'plain_simple',
             "a weak grading of a domain with R_e a division ring makes R simple"),
    _theorem('weak_domain_ideal_avoidance', 'ring', ('weak', 'domain'), 'ideal_avoidance',
             "in a weak grading of a domain an ideal missing R_e has no homogeneous elements"),
    _theorem('invertible_identity_projection_linear', 'ring', ('invertible',), 'identity_linear',
             "with R_e a field, x ↦ x_e is R_e-linear with kernel the other components"),
    _theorem('polynomial_identity_field_neither_weak_nor_strong', 'ring',
             ('polynomial_identity_field',), 'neither_weak_nor_strong',
             "K[x] graded with R_e = K is neither weak nor strong"),
    _theorem('unit_search_matches_full_scan', 'ring', ('oracle_sized',), 'unit_search_agrees',
             "homogeneous unit search agrees with a scan of all units"),
    # maps into the ring
    _theorem('weakly_crossed_identity_onto_iff_components_onto', 'ring_map', ('weakly_crossed',),
             'onto_identity_iff_onto_components',
             "for weakly crossed R, f(M_e) = R_e iff f(M_g) = R_g for all supported g"),
    _theorem('weakly_crossed_isomorphism_grade_fixing', 'ring_map',
             ('weakly_crossed', 'map_isomorphism'), 'grade_fixing_iff_identity_onto',
             "for weakly crossed R, an isomorphism onto R is grade fixing iff f(M_e) = R_e"),
    # modules
    _theorem('essential_implies_semi_essential', 'submodule', ('essential',), 'semi_essential',
             "graded essential submodules are graded semi-essential"),
    _theorem('essential_cyclic_test_matches_lattice', 'submodule', (), 'essential_modes_agree',
             "the cyclic essential test agrees with the lattice scan"),
    _theorem('semi_essential_characterization', 'submodule', (), 'semi_essential_modes_agree',
             "semi-essential iff some rm ≠ 0 in K for homogeneous m in each nonzero prime"),
    _theorem('semi_essential_upward_closed', 'pair', ('first_within_second', 'first_semi_essential'),
             'second_semi_essential', "a submodule containing a semi-essential one is semi-essential"),
    _theorem('meet_semi_essential_implies_both', 'pair', ('meet_semi_essential',),
             'both_semi_essential', "if K ∩ L is semi-essential so are K and L"),
    _theorem('essential_meets_semi_essential', 'pair', ('first_essential', 'second_semi_essential'),
             'meet_semi_essential', "an essential and a semi-essential submodule meet semi-essentially"),
    _theorem('colon_condition_meet_semi_essential', 'pair',
             ('commutative', 'colon_condition_first', 'first_semi_essential', 'second_semi_essential'),
             'meet_semi_essential',
             "under the colon condition on K, K ∩ L is semi-essential when K and L are"),
    _theorem('colon_condition_meet_is_prime', 'submodule_prime', ('commutative', 'colon_condition'),
             'meet_is_prime', "under the colon condition, K ∩ P is a graded prime"),
    _theorem('multiplication_faithful_colon_semi_essential', 'submodule',
             ('commutative', 'multiplication', 'faithful_module', 'colon_semi_essential_ideal'),
             'semi_essential',
             "in a faithful multiplication module, K is semi-essential when (K : M) is"),
    _theorem('semi_uniform_ring_multiplication_module', 'module',
             ('commutative', 'ring_semi_uniform', 'multiplication', 'faithful_module'), 'semi_uniform',
             "a faithful multiplication module over a semi-uniform ring is semi-uniform"),
    _theorem('prime_colon_is_prime_ideal', 'prime', (), 'colon_ideal_prime',
             "(P : M) is a graded prime ideal for a graded prime P"),
    _theorem('isomorphism_preserves_semi_essential', 'transfer',
             ('transfer_isomorphism_image_hypothesis',), 'transfer_isomorphism_image_conclusion',
             "a graded isomorphism carries semi-essential submodules to semi-essential ones"),
    _theorem('epimorphism_preimage_semi_essential', 'transfer',
             ('transfer_epimorphism_preimage_hypothesis',), 'transfer_epimorphism_preimage_conclusion',
             "with kernel in the graded radical of 0, preimages of semi-essential images are semi-essential"),
    _theorem('prime_quotient_rigidity', 'transfer',
             ('transfer_prime_quotient_rigidity_hypothesis',),
             'transfer_prime_quotient_rigidity_conclusion',
             "with a prime kernel T, every prime P ⊇ T missing K equals T"),
    _theorem('first_strong_ring_first_strong_module', 'module', ('first_strong',), 'module_first_strong',
             "modules over a first strong ring are first strongly graded"),
    _theorem('weakly_crossed_components_translate', 'module', ('commutative', 'weakly_crossed'),
             'components_translate', "over a commutative weakly crossed ring, M_g ≅ M_e for supported g"),
    _theorem('prime_correspondence_under_projection', 'quotient', (), 'prime_correspondence',
             "graded primes of M/T correspond to graded primes of M containing T"),
    # non-implications
    _non_implication('weak_not_nondegenerate', 'ring', ('weak',), 'nondegenerate',
                     "weak gradings may be degenerate"),
    _non_implication('weak_not_first_strong', 'ring', ('weak',), 'first_strong',
                     "weak gradings need not be first strong"),
    _non_implication('weak_not_second_strong', 'ring', ('weak',), 'second_strong',
                     "weak gradings need not be second strong"),
    _non_implication('second_strong_not_weak', 'ring', ('second_strong',), 'weak',
                     "second strong gradings need not be weak"),
    _non_implication('nondegenerate_not_weakly_crossed', 'ring', ('nondegenerate',), 'weakly_crossed',
                     "non-degenerate gradings need not be weakly crossed"),
    _non_implication('weak_not_weakly_crossed', 'ring', ('weak',), 'weakly_crossed',
                     "weak gradings need not be weakly crossed"),
    _non_implication('strong_not_invertible', 'ring', ('strong',), 'invertible',
                     "strong gradings need not be invertible"),
    _non_implication('invertible_not_strong', 'ring', ('invertible',), 'strong',
                     "invertible gradings need not be strong"),
    _non_implication('semi_essential_not_essential', 'submodule', ('semi_essential',), 'essential',
                     "semi-essential submodules need not be essential"),
    _non_implication('semi_essential_not_downward_closed', 'pair',
                     ('first_within_second', 'second_semi_essential'), 'first_semi_essential',
                     "a submodule of a semi-essential submodule need not be semi-essential"),
    _non_implication('semi_essential_meet_not_semi_essential', 'pair', ('both_semi_essential',),
                     'meet_semi_essential', "two semi-essential submodules may meet in zero"),
    _non_implication('semi_uniform_not_uniform', 'module', ('semi_uniform',), 'uniform',
                     "semi-uniform modules need not be uniform"),
    _non_implication('semi_uniform_not_hereditary', 'module', ('semi_uniform',),
                     'hereditary_semi_uniform', "submodules rM of a semi-uniform module need not be semi-uniform"),
]

RING_SCOPES = ('ring', 'ring_map')


def load_suite(source: str = 'default') -> List[Implication]:
    """
    The default suite, or the entries named in a JSON suite file.

    A suite file is {"implications": [name, ...]} or a bare list of names.

    Raises:
        InputError: Missing file, empty list or unknown names
        ParseError: The file is not valid JSON
    """
    if source == 'default':
        return list(DEFAULT_SUITE)
    path = Path(source)
    if not path.is_file():
        raise InputError(f"suite file not found: {source}")
    try:
        document = json.loads(path.read_text(encoding='utf-8'))
    except json.JSONDecodeError as exc:
        raise ParseError(f"suite file is not valid JSON: {exc.msg}", exc.lineno, exc.colno) from exc
    names = document.get('implications') if isinstance(document, dict) else document
    if not isinstance(names, list) or not names:
        raise InputError("a suite file lists implication names under 'implications'")
    by_name = {i.name: i for i in DEFAULT_SUITE}
    unknown = [n for n in names if n not in by_name]
    if unknown:
        raise InputError(f"unknown implications: {', '.join(map(str, unknown))}")
    return [by_name[n] for n in names]


# ============================================================================
# RUNNER
# ============================================================================

@dataclass
class Tally:
    subjects: int = 0
    applicable: int = 0
    confirmed: int = 0
    vacuous: int = 0
    undecided: int = 0
    refuted: List[Subject] = field(default_factory=list)


def _evaluate(implication: Implication, subjects: List[Subject], book: FactBook) -> Tally:
    tally = Tally(subjects=len(subjects))
    for subject in subjects:
        values = []
        for fact in implication.hypothesis:
            values.append(book.value(subject, fact))
            if values[-1] is False:
                break
        if False in values:
            continue
        if None in values:
            tally.undecided += 1
            continue
        tally.applicable += 1
        conclusion = book.value(subject, implication.conclusion)
        if conclusion is None:
            tally.undecided += 1
        elif conclusion:
            tally.confirmed += 1
            tally.vacuous += book.vacuous(subject, implication.conclusion)
        else:
            tally.refuted.append(subject)
    return tally


def build_pool(params: GeneratorParams, ring_count: int, module_count: int
               ) -> Tuple[List[Instance], List[Instance]]:
    """Registry fixtures followed by the generated rings and modules."""
    rings = [Instance(f"fixture:{fx.name}", 'fixture', None, fx.ring) for fx in ring_fixtures()]
    rings += [Instance(f"ring#{i}", 'generated', i, generate_graded_ring(params, i))
              for i in range(ring_count)]
    modules = [Instance(f"fixture:{fx.name}", 'fixture', None, fx.module.ring, fx.module, dict(fx.named))
               for fx in module_fixtures()]
    for i in range(module_count):
        module = generate_graded_module(params, None, i)
        modules.append(Instance(f"module#{i}", 'generated', i, module.ring, module))
    return rings, modules


def _write_replay(implication: Implication, subject: Subject, params: GeneratorParams,
                  replay_dir: Path) -> Path:
    instance = subject.instance
    document = {
        'implication': implication.name,
        'statement': implication.statement,
        'seed': params.seed,
        'origin': instance.origin,
        'index': instance.index,
        'instance': instance.label,
        'subject': subject.key,
        'structure': to_document(instance.structure, instance.named),
    }
    slug = re.sub(r'[^A-Za-z0-9]+', '_', f"{implication.name}_{instance.label}").strip('_')
    return save_json(document, replay_dir / f"{slug}.json")


def run_implication_suite(params: GeneratorParams, suite: List[Implication], logger: Logger,
                          ring_count: int = config.DEFAULT_RING_COUNT,
                          module_count: int = config.DEFAULT_MODULE_COUNT,
                          limits: Optional[Limits] = None,
                          replay_dir: Optional[Path] = config.REPLAY_DIR
                          ) -> Tuple[pd.DataFrame, Dict]:
    """
    Evaluate every implication over the instance pool.

    Args:
        params: Generator parameters
        suite: Implications to check (non-empty)
        logger: Logger instance
        ring_count: Generated rings added to the ring fixtures
        module_count: Generated modules added to the module fixtures
        limits: Enumeration caps
        replay_dir: Where violation replays go; None skips writing them

    Returns:
        (one row per implication, run statistics)
    """
    if not suite:
        raise InputError("the implication suite is empty")
    if ring_count < 0 or module_count < 0:
        raise InputError("instance counts must be non-negative")
    limits = resolve_limits(limits)

    logger.banner("IMPLICATION SUITE")
    logger.log(f"Seed: {params.seed} | generated rings: {ring_count} | "
               f"generated modules: {module_count} | entries: {len(suite)}")

    logger.step(1, "Building the instance pool...")
    rings, modules = build_pool(params, ring_count, module_count)
    logger.mark('ok', f"{len(rings)} rings and {len(modules)} modules (fixtures included)")

    logger.step(2, "Evaluating implications...")
    book = FactBook(limits)
    subjects: Dict[str, List[Subject]] = {}
    skipped: Dict[str, List[str]] = {}
    rows, replays = [], []
    for implication in suite:
        scope = implication.scope
        if scope not in subjects:
            pool = rings if scope in RING_SCOPES else modules
            subjects[scope], skipped[scope] = [], []
            for instance in pool:
                try:
                    subjects[scope].extend(_subjects(instance, scope, limits))
                except CapExceeded:
                    skipped[scope].append(instance.label)
            if skipped[scope]:
                logger.mark('warn', f"{scope}: {len(skipped[scope])} instance(s) skipped at the caps", indent=2)

        tally = _evaluate(implication, subjects[scope], book)
        theorem = implication.expected == THEOREM
        if theorem and tally.refuted:
            status = VIOLATED
        elif theorem:
            status = PASSED if tally.applicable else UNEXERCISED
        else:
            status = PASSED if tally.refuted else MISSING
        first = tally.refuted[0].key if tally.refuted else None

        if theorem and tally.refuted:
            logger.mark('fail', f"{implication.name}: {len(tally.refuted)} violation(s), first {first}",
                        indent=2)
            if replay_dir is not None:
                for subject in tally.refuted[:config.SUITE_MAX_REPLAYS]:
                    path = _write_replay(implication, subject, params, replay_dir)
                    replays.append(str(path))
                    logger.log(f"    replay: {path}")
        elif status == UNEXERCISED:
            logger.mark('warn', f"{implication.name}: hypothesis held on none of {tally.subjects} subject(s)",
                        indent=2)
        elif theorem:
            logger.mark('ok', f"{implication.name}: {tally.confirmed}/{tally.applicable} confirmed"
                              f" ({tally.undecided} undecided)", indent=2)
        elif tally.refuted:
            logger.mark('ok', f"{implication.name}: {len(tally.refuted)} counterexample(s), first {first}",
                        indent=2)
        else:
            logger.mark('fail', f"{implication.name}: no counterexample in the pool", indent=2)

        rows.append({
            'implication': implication.name,
            'kind': implication.expected,
            'scope': scope,
            'hypothesis': ' & '.join(implication.hypothesis) or '(none)',
            'conclusion': implication.conclusion,
            'subjects': tally.subjects,
            'applicable': tally.applicable,
            'confirmed': tally.confirmed,
            'vacuous': tally.vacuous,
            'refuted': len(tally.refuted),
            'undecided': tally.undecided,
            'status': status,
            'first_refutation': first,
            'statement': implication.statement,
        })

    table = pd.DataFrame(rows)
    violations = int((table['status'] == VIOLATED).sum())
    missing = int((table['status'] == MISSING).sum())
    stats = {
        'seed': params.seed,
        'rings': len(rings),
        'modules': len(modules),
        'implications': len(suite),
        'theorems': int((table['kind'] == THEOREM).sum()),
        'non_implications': int((table['kind'] == NON_IMPLICATION).sum()),
        'violations': violations,
        'missing_counterexamples': missing,
        'unexercised': list(table.loc[table['status'] == UNEXERCISED, 'implication']),
        'undecided': int(table['undecided'].sum()),
        'skipped_instances': {k: v for k, v in skipped.items() if v},
        'replays': replays,
        'passed': violations == 0 and missing == 0,
    }

    logger.step(3, "Summary")
    passed = int((table['status'] == PASSED).sum())
    logger.log(f"  Entries passed: {passed}/{len(suite)} ({format_percentage(passed, len(suite))})")
    logger.log(f"  Theorem violations: {violations}")
    logger.log(f"  Non-implications without a counterexample: {missing}")
    logger.log(f"  Theorems never exercised: {len(stats['unexercised'])}")
    logger.log(f"  Undecided evaluations: {stats['undecided']}")
    logger.mark('ok' if stats['passed'] else 'fail',
                f"Implication suite {'passed' if stats['passed'] else 'FAILED'}")
    return table, stats
