"""
Fixtures
========
Registry of the worked examples every engine is checked against: graded
matrix rings, monomial rings, quadratic extensions and the Gaussian-pair
modules, each with a table of expected verdicts.

Infinite rings are replaced by finite analogs (GF(3)[i] for C, Z_6[i] for
Z[i], Z_N acting on a module of exponent N for Z); an analog only pins the
verdicts that survive the change of ring.
"""

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

import pandas as pd

from src import config
from src.additive import GradedSubgroup
from src.groups import MONOID_NOT_SUBGROUP, NOT_MONOID, cyclic, dihedral
from src.module_predicates import (colon_condition, enumerate_graded_prime_submodules,
                                   is_graded_essential, is_graded_prime_submodule,
                                   is_graded_semi_essential, is_graded_semi_uniform, is_graded_uniform,
                                   nonzero_primes)
from src.modules import (FiniteGradedModule, angle_submodule, enumerate_graded_submodules,
                         gaussian_pair_module, restrict_to_submodule, submodule_generated,
                         validate_module)
from src.ring_predicates import (CROSSED, DEGENERATE, FIRST_STRONG, NONDEGENERATE, NONE,
                                 SECOND_STRONG, STRONG, WEAKLY_CROSSED, component_as_Re_module_report,
                                 component_unit_generator_report, crossed_class, degeneracy_class,
                                 identity_component_linear_report, is_graded_simple,
                                 is_invertible_graded, is_regular, is_semi_uniform_ring, is_weak,
                                 strongness_class, support_class, zero_divisor_witness)
from src.rings import (cyclic_ring, integers_group, matrix_ring, monomial_ring, quadratic_ring,
                       validate_ring)
from src.utils import CapExceeded, InputError, Limits, Logger, format_percentage, resolve_limits

# Provenance of an expected value
PUBLISHED = 'published'   # stated for the original example
DERIVED = 'derived'       # recomputed by hand for the finite analog or the exact witness
TRIVIAL = 'trivial'       # follows from the definitions

PROVENANCES = (PUBLISHED, DERIVED, TRIVIAL)

Check = Callable[['Fixture', Limits], Any]


# ============================================================================
# DATA TYPES
# ============================================================================

@dataclass(frozen=True)
class Expectation:
    """One expected outcome: `check(fixture, limits)` must equal `expected`."""
    label: str
    check: Check
    expected: Any
    provenance: str

    def __post_init__(self):
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")


@dataclass
class Fixture:
    """
    A constructed example with its expectation table.

    `named` holds the submodules the expectations refer to by name
    (e.g. "<6>"); `notes` records how a finite analog was obtained.
    """
    name: str
    ring: Any
    module: Optional[FiniteGradedModule] = None
    named: Dict[str, GradedSubgroup] = field(default_factory=dict)
    expectations: List[Expectation] = field(default_factory=list)
    notes: str = ''

    @property
    def structure(self):
        return self.module if self.module is not None else self.ring

    @property
    def kind(self) -> str:
        return 'module' if self.module is not None else 'ring'

    def expect(self, label: str, check: Check, expected: Any, provenance: str) -> 'Fixture':
        self.expectations.append(Expectation(label, check, expected, provenance))
        return self


# ============================================================================
# CHECK BUILDERS
# ============================================================================

def ring_outcome(predicate) -> Check:
    """Class value when the predicate sets one, else its verdict."""
    return lambda fx, limits: predicate(fx.ring, limits).outcome


def ring_witness(predicate, key: str) -> Check:
    return lambda fx, limits: predicate(fx.ring, limits).witness.get(key)


def ring_stat(predicate, key: str) -> Check:
    return lambda fx, limits: predicate(fx.ring, limits).stats.get(key)


def component_witness(predicate, g: int, key: str) -> Check:
    return lambda fx, limits: predicate(fx.ring, g, limits).witness.get(key)


def submodule_verdict(predicate, key: str) -> Check:
    return lambda fx, limits: predicate(fx.module, fx.named[key], limits).verdict


def submodule_witness(predicate, key: str, fields: Tuple[str, ...]) -> Check:
    def check(fx, limits):
        witness = predicate(fx.module, fx.named[key], limits).witness
        values = tuple(witness.get(f) for f in fields)
        return values[0] if len(values) == 1 else values
    return check


def module_verdict(predicate) -> Check:
    return lambda fx, limits: predicate(fx.module, limits).verdict


def meet_is_zero(first: str, second: str) -> Check:
    return lambda fx, limits: (fx.named[first] & fx.named[second]).is_zero()


def lattice_size() -> Check:
    return lambda fx, limits: len(enumerate_graded_submodules(fx.module, limits))


def primes_include(*keys: str) -> Check:
    def check(fx, limits):
        primes = enumerate_graded_prime_submodules(fx.module, limits)
        return all(fx.named[k] in primes for k in keys)
    return check


# ============================================================================
# RING FIXTURES
# ============================================================================

def _m2_z4() -> Fixture:
    ring = matrix_ring(cyclic(4), (0, 2), config.MATRIX_FIELD_ORDER, name='M2(K) over Z4')
    return (Fixture('m2_z4', ring)
            .expect('is_weak', ring_outcome(is_weak), 'holds', PUBLISHED)
            .expect('strongness_class', ring_outcome(strongness_class), FIRST_STRONG, PUBLISHED)
            .expect('strong test', ring_stat(strongness_class, STRONG), False, PUBLISHED)
            .expect('strong failure pair', ring_witness(strongness_class, 'pair'), ['1', '3'], PUBLISHED)
            .expect('crossed_class', ring_outcome(crossed_class), WEAKLY_CROSSED, PUBLISHED)
            .expect('unit in R_2', component_witness(component_unit_generator_report, 2, 'unit'),
                    'e12+e21', PUBLISHED)
            .expect('R_2 generator over R_0', component_witness(component_as_Re_module_report, 2, 'generator'),
                    'e12+e21', DERIVED)
            .expect('degeneracy_class', ring_outcome(degeneracy_class), NONDEGENERATE, DERIVED)
            .expect('is_regular', ring_outcome(is_regular), 'holds', DERIVED)
            .expect('is_graded_simple', ring_outcome(is_graded_simple), 'holds', DERIVED)
            .expect('zero divisor pair', lambda fx, limits: (
                zero_divisor_witness(fx.ring, limits).witness.get('left'),
                zero_divisor_witness(fx.ring, limits).witness.get('right')), ('e12', 'e12'), TRIVIAL)
            .expect('is_invertible_graded', ring_outcome(is_invertible_graded), 'fails', TRIVIAL))


def _kx_z() -> Fixture:
    ring = monomial_ring(config.MONOMIAL_FIELD_ORDER, integers_group(), 1, name='K[x] over Z')
    return (Fixture('kx_z', ring)
            .expect('strongness_class', ring_outcome(strongness_class), SECOND_STRONG, PUBLISHED)
            .expect('first strong failure degree', ring_witness(strongness_class, 'degree'), '1', DERIVED)
            .expect('is_weak', ring_outcome(is_weak), 'fails', PUBLISHED)
            .expect('weak failure degree', ring_witness(is_weak, 'degree'), '-1', PUBLISHED)
            .expect('crossed_class', ring_outcome(crossed_class), NONE, PUBLISHED)
            .expect('unit in R_1', lambda fx, limits: component_unit_generator_report(fx.ring, 1, limits).verdict,
                    'fails', PUBLISHED)
            .expect('is_invertible_graded', ring_outcome(is_invertible_graded), 'holds', PUBLISHED)
            .expect('support_class', lambda fx, limits: support_class(fx.ring), MONOID_NOT_SUBGROUP, DERIVED)
            .expect('degeneracy_class', ring_outcome(degeneracy_class), DEGENERATE, DERIVED)
            .expect('is_graded_simple', ring_outcome(is_graded_simple), 'fails', TRIVIAL))


# Entries of each component in the D10 example, 1-based matrix positions
D10_COMPONENTS: Dict[str, List[Tuple[int, int]]] = {
    'e': [(1, 1), (2, 2), (3, 3), (4, 4)],
    'a': [(1, 2), (2, 3)],
    'a^2': [(1, 3)],
    'a^3': [(3, 1)],
    'a^4': [(2, 1), (3, 2)],
    'b': [(2, 4), (4, 2)],
    'a b': [(1, 4), (4, 1)],
    'a^2 b': [],
    'a^3 b': [],
    'a^4 b': [(3, 4), (4, 3)],
}


def _component_table_matches(fx: Fixture, limits: Limits) -> bool:
    ring = fx.ring
    for label, cells in D10_COMPONENTS.items():
        g = ring.group.parse(label)
        names = {ring.space.names[k] for k in ring.space.indices(g)}
        if names != {f"e{i}{j}" for i, j in cells}:
            return False
    return True


def _e41_kills_a4b(fx: Fixture, limits: Limits) -> bool:
    ring = fx.ring
    x = ring.parse('e41')
    g = ring.group.parse('a^4 b')
    return all(not any(ring.mul(x, y)) for y in ring.component_elements(g, limits))


def _m4_d10() -> Fixture:
    group = dihedral(5)
    degrees = (group.identity, group.element(1), group.element(2), group.element(1, 1))
    ring = matrix_ring(group, degrees, config.MATRIX_FIELD_ORDER, name='M4(K) over D10')
    fixture = Fixture('m4_d10', ring, notes=(
        "With ba = a^-1 b the element ab is an involution, so (ab)^-1 = ab and not a^4 b. "
        "e41 annihilates R_{a^4 b} from the left, but e41*e14 = e44 != 0 with e14 in R_{ab}; "
        "the grading is non-degenerate. Degeneracy is exhibited by dual_z2 instead."))
    return (fixture
            .expect('is_weak', ring_outcome(is_weak), 'holds', PUBLISHED)
            .expect('component table', _component_table_matches, True, PUBLISHED)
            .expect('e41 * R_{a^4 b} = 0', _e41_kills_a4b, True, PUBLISHED)
            .expect('(ab)^-1', lambda fx, limits: fx.ring.group.label(
                fx.ring.group.inv(fx.ring.group.parse('a b'))), 'a b', DERIVED)
            .expect('degeneracy_class', ring_outcome(degeneracy_class), NONDEGENERATE, DERIVED)
            .expect('support_class', lambda fx, limits: support_class(fx.ring), NOT_MONOID, DERIVED))


def _m3_z7() -> Fixture:
    ring = matrix_ring(cyclic(7), (0, 1, 2), config.MATRIX_FIELD_ORDER, name='M3(K) over Z7')
    return (Fixture('m3_z7', ring)
            .expect('support', lambda fx, limits: fx.ring.support(), [0, 1, 2, 5, 6], PUBLISHED)
            .expect('is_weak', ring_outcome(is_weak), 'holds', PUBLISHED)
            .expect('support_class', lambda fx, limits: support_class(fx.ring), NOT_MONOID, PUBLISHED)
            .expect('strongness_class', ring_outcome(strongness_class), NONE, PUBLISHED)
            .expect('strong failure pair', lambda fx, limits: fx.ring.product_equals_component(3, 4, limits),
                    False, PUBLISHED))


def _kx_z3() -> Fixture:
    ring = monomial_ring(config.MONOMIAL_FIELD_ORDER, cyclic(3), 1, name='K[x] over Z3')
    return (Fixture('kx_z3', ring)
            .expect('is_weak', ring_outcome(is_weak), 'holds', PUBLISHED)
            .expect('second strong test', ring_stat(strongness_class, SECOND_STRONG), False, PUBLISHED)
            .expect('1 in R_1 R_2', lambda fx, limits: fx.ring.component_product(1, 2).contains(0),
                    False, PUBLISHED)
            .expect('strongness_class', ring_outcome(strongness_class), NONE, DERIVED)
            .expect('second strong failure pair', ring_witness(strongness_class, 'pair'), ['1', '2'], DERIVED)
            .expect('is_regular', ring_outcome(is_regular), 'fails', DERIVED))


def _gf9_z2() -> Fixture:
    ring = quadratic_ring(3, -1, 'i', name='GF(9) = GF(3)[i]')
    fixture = Fixture('gf9_z2', ring, notes=(
        "Finite analog of C = R + iR: -1 is a non-residue mod 3, so GF(3)[i] is a field "
        "with R_0 = GF(3) and R_1 = iGF(3)."))
    return (fixture
            .expect('is_invertible_graded', ring_outcome(is_invertible_graded), 'holds', PUBLISHED)
            .expect('first strong test', ring_stat(strongness_class, FIRST_STRONG), True, PUBLISHED)
            .expect('weakly crossed test', ring_stat(crossed_class, WEAKLY_CROSSED), True, PUBLISHED)
            .expect('is_graded_simple', ring_outcome(is_graded_simple), 'holds', PUBLISHED)
            .expect('strongness_class', ring_outcome(strongness_class), STRONG, DERIVED)
            .expect('crossed_class', ring_outcome(crossed_class), CROSSED, DERIVED)
            .expect('identity_component_linear', lambda fx, limits: identity_component_linear_report(
                fx.ring, limits).verdict, 'holds', DERIVED)
            .expect('|R_0 + R_1| / |R_0|', lambda fx, limits: fx.ring.size // fx.ring.space.component_size(0),
                    3, DERIVED)
            .expect('R_1 generator over R_0', component_witness(component_as_Re_module_report, 1, 'generator'),
                    'i', DERIVED)
            .expect('has_zero_divisors', ring_outcome(zero_divisor_witness), 'fails', TRIVIAL))


def _z6i() -> Fixture:
    ring = quadratic_ring(6, -1, 'i', name='Z6[i]')
    fixture = Fixture('z6i', ring, notes=(
        "Finite analog of Z[i] = Z + iZ; Z6 has zero divisors, so only the strong and "
        "invertible verdicts carry over."))
    return (fixture
            .expect('strongness_class', ring_outcome(strongness_class), STRONG, PUBLISHED)
            .expect('is_invertible_graded', ring_outcome(is_invertible_graded), 'fails', PUBLISHED)
            .expect('invertibility witness', lambda fx, limits: (
                is_invertible_graded(fx.ring, limits).witness.get('kind'),
                is_invertible_graded(fx.ring, limits).witness.get('left'),
                is_invertible_graded(fx.ring, limits).witness.get('right')),
                ('zero_divisor', '2', '3'), DERIVED)
            .expect('is_weak', ring_outcome(is_weak), 'holds', TRIVIAL))


def _m2_z() -> Fixture:
    ring = matrix_ring(integers_group(), (0, 1), config.MATRIX_FIELD_ORDER, name='M2(K) over Z')
    return (Fixture('m2_z', ring)
            .expect('support', lambda fx, limits: fx.ring.support(), [0, -1, 1], PUBLISHED)
            .expect('degeneracy_class', ring_outcome(degeneracy_class), NONDEGENERATE, PUBLISHED)
            .expect('crossed_class', ring_outcome(crossed_class), NONE, PUBLISHED)
            .expect('unit in R_1', lambda fx, limits: component_unit_generator_report(fx.ring, 1, limits).verdict,
                    'fails', PUBLISHED)
            .expect('is_weak', ring_outcome(is_weak), 'holds', DERIVED))


def _m3_z2() -> Fixture:
    ring = matrix_ring(cyclic(2), (0, 1, 0), config.MATRIX_FIELD_ORDER, name='M3(K) over Z2')
    return (Fixture('m3_z2', ring)
            .expect('R_0 entries', lambda fx, limits: sorted(
                fx.ring.space.names[k] for k in fx.ring.space.indices(0)),
                ['e11', 'e13', 'e22', 'e31', 'e33'], PUBLISHED)
            .expect('is_weak', ring_outcome(is_weak), 'holds', PUBLISHED)
            .expect('crossed_class', ring_outcome(crossed_class), NONE, PUBLISHED)
            .expect('crossed failure degree', ring_witness(crossed_class, 'degree'), '1', PUBLISHED))


def _dual_z2() -> Fixture:
    ring = quadratic_ring(2, 0, 'eps', name='GF(2)[eps]')
    fixture = Fixture('dual_z2', ring, notes="Dual numbers eps^2 = 0 with deg eps = 1: weak and degenerate.")
    return (fixture
            .expect('is_weak', ring_outcome(is_weak), 'holds', DERIVED)
            .expect('degeneracy_class', ring_outcome(degeneracy_class), DEGENERATE, DERIVED)
            .expect('degenerate element', ring_witness(degeneracy_class, 'element'), 'eps', DERIVED))


def _trivial(n: int, name: str, label: str) -> Fixture:
    ring = cyclic_ring(n, cyclic(2), name=label)
    fixture = (Fixture(name, ring)
               .expect('is_weak', ring_outcome(is_weak), 'holds', TRIVIAL)
               .expect('crossed_class', ring_outcome(crossed_class), WEAKLY_CROSSED, TRIVIAL)
               .expect('strongness_class', ring_outcome(strongness_class), FIRST_STRONG, TRIVIAL))
    prime_field = all(n % p for p in range(2, n))
    fixture.expect('is_invertible_graded', ring_outcome(is_invertible_graded),
                   'holds' if prime_field else 'fails', TRIVIAL)
    return fixture


def _trivial_gf5() -> Fixture:
    return _trivial(5, 'trivial_gf5', 'GF(5)')


def _trivial_z6() -> Fixture:
    return _trivial(6, 'trivial_z6', 'Z6')


def _trivial_z12() -> Fixture:
    return (_trivial(12, 'trivial_z12', 'Z12')
            .expect('is_semi_uniform_ring', ring_outcome(is_semi_uniform_ring), 'fails', DERIVED)
            .expect('semi-uniform failure', lambda fx, limits: (
                is_semi_uniform_ring(fx.ring, limits).witness.get('ideal'),
                is_semi_uniform_ring(fx.ring, limits).witness.get('missed_prime')), ('<4>', '<3>'), DERIVED))


def _trivial_z36() -> Fixture:
    return (_trivial(36, 'trivial_z36', 'Z36')
            .expect('is_semi_uniform_ring', ring_outcome(is_semi_uniform_ring), 'holds', DERIVED))


# ============================================================================
# MODULE FIXTURES
# ============================================================================

def _angles(module: FiniteGradedModule, *values: int) -> Dict[str, GradedSubgroup]:
    return {f"<{v}>": angle_submodule(module, str(v)) for v in values}


def _z12i() -> Fixture:
    module = gaussian_pair_module(12)
    fixture = Fixture('z12i', module.ring, module, _angles(module, 2, 3, 4, 6), notes=(
        "Z acts on Z12[i] through Z12, trivially graded by Z2."))
    missed = submodule_witness(is_graded_semi_essential, '<4>', ('missed_prime',))
    return (fixture
            .expect('<6> semi-essential', submodule_verdict(is_graded_semi_essential, '<6>'), 'holds', PUBLISHED)
            .expect('<6> essential', submodule_verdict(is_graded_essential, '<6>'), 'fails', PUBLISHED)
            .expect('<6> essential witness', submodule_witness(is_graded_essential, '<6>', ('element',)),
                    '4', DERIVED)
            .expect('<4> semi-essential', submodule_verdict(is_graded_semi_essential, '<4>'), 'fails', PUBLISHED)
            .expect('<4> misses <3>', lambda fx, limits: missed(fx, limits) == fx.named['<3>'].describe(),
                    True, PUBLISHED)
            .expect('<3> prime', submodule_verdict(is_graded_prime_submodule, '<3>'), 'holds', PUBLISHED)
            .expect('<4> inside <2>', lambda fx, limits: fx.named['<4>'] <= fx.named['<2>'], True, PUBLISHED)
            .expect('<2> semi-essential', submodule_verdict(is_graded_semi_essential, '<2>'), 'holds', PUBLISHED)
            .expect('<6> prime', submodule_verdict(is_graded_prime_submodule, '<6>'), 'fails', DERIVED)
            .expect('<6> prime witness', submodule_witness(is_graded_prime_submodule, '<6>', ('r', 'm')),
                    ('2', '3'), DERIVED)
            .expect('graded submodules', lattice_size(), 36, DERIVED))


def _z36i_module() -> FiniteGradedModule:
    return gaussian_pair_module(36)


def _z36i() -> Fixture:
    module = _z36i_module()
    fixture = Fixture('z36i', module.ring, module, _angles(module, 2, 3, 12, 18), notes=(
        "Besides <2> and <3> the enumeration finds further graded primes, mixed ones such "
        "as Z36 + 2iZ36 among them; the semi-essential verdicts hold against the full list."))
    return (fixture
            .expect('<12> semi-essential', submodule_verdict(is_graded_semi_essential, '<12>'), 'holds', PUBLISHED)
            .expect('<18> semi-essential', submodule_verdict(is_graded_semi_essential, '<18>'), 'holds', PUBLISHED)
            .expect('<12> meet <18> = 0', meet_is_zero('<12>', '<18>'), True, PUBLISHED)
            .expect('is_graded_semi_uniform', module_verdict(is_graded_semi_uniform), 'holds', PUBLISHED)
            .expect('is_graded_uniform', module_verdict(is_graded_uniform), 'fails', PUBLISHED)
            .expect('primes include <2>, <3>', primes_include('<2>', '<3>'), True, PUBLISHED)
            .expect('more than two graded primes', lambda fx, limits: len(
                enumerate_graded_prime_submodules(fx.module, limits)) > 2, True, DERIVED)
            .expect('graded submodules', lattice_size(), 81, DERIVED))


def _z36i_k3() -> Fixture:
    ambient = _z36i_module()
    restricted = restrict_to_submodule(ambient, angle_submodule(ambient, '3'), name='<3> in Z36[i]')
    inclusion = restricted.inclusion
    # Submodules of K named as in the ambient module, pulled back along K -> M
    named = {key: inclusion.preimage(sub) for key, sub in _angles(ambient, 6, 9, 12).items()}
    fixture = Fixture('z36i_k3', restricted.ring, restricted, named, notes=(
        "K = <3> of Z36[i] as a module of its own, isomorphic to Z12[i]."))
    return (fixture
            .expect('is_graded_semi_uniform', module_verdict(is_graded_semi_uniform), 'fails', PUBLISHED)
            .expect('<6> prime in K', submodule_verdict(is_graded_prime_submodule, '<6>'), 'holds', PUBLISHED)
            .expect('<9> prime in K', submodule_verdict(is_graded_prime_submodule, '<9>'), 'holds', PUBLISHED)
            .expect('<12> meet <9> = 0', meet_is_zero('<12>', '<9>'), True, PUBLISHED)
            .expect('<12> semi-essential in K', submodule_verdict(is_graded_semi_essential, '<12>'),
                    'fails', PUBLISHED))


def _z5i() -> Fixture:
    module = gaussian_pair_module(5)
    named = {
        'Z5': submodule_generated(module, [{'1': 1}]),
        'iZ5': submodule_generated(module, [{'i': 1}]),
        'M': angle_submodule(module, '1'),
    }
    fixture = Fixture('z5i', module.ring, module, named, notes=(
        "Z5[i] over the field Z5: every proper graded submodule is prime, so the colon "
        "condition holds on M and M is the only semi-essential submodule."))
    return (fixture
            .expect('graded submodules', lattice_size(), 4, DERIVED)
            .expect('primes include Z5, iZ5', primes_include('Z5', 'iZ5'), True, DERIVED)
            .expect('Z5 meet iZ5 = 0', meet_is_zero('Z5', 'iZ5'), True, TRIVIAL)
            .expect('Z5 semi-essential', submodule_verdict(is_graded_semi_essential, 'Z5'), 'fails', DERIVED)
            .expect('M semi-essential', submodule_verdict(is_graded_semi_essential, 'M'), 'holds', DERIVED)
            .expect('colon condition on M', lambda fx, limits: all(
                colon_condition(fx.module, fx.named['M'], p, limits) is None
                for p in nonzero_primes(fx.module, limits)), True, DERIVED))


# ============================================================================
# REGISTRY
# ============================================================================

REGISTRY: Dict[str, Callable[[], Fixture]] = {
    'm2_z4': _m2_z4,
    'kx_z': _kx_z,
    'm4_d10': _m4_d10,
    'm3_z7': _m3_z7,
    'kx_z3': _kx_z3,
    'gf9_z2': _gf9_z2,
    'z6i': _z6i,
    'm2_z': _m2_z,
    'm3_z2': _m3_z2,
    'dual_z2': _dual_z2,
    'z12i': _z12i,
    'z36i': _z36i,
    'z36i_k3': _z36i_k3,
    'z5i': _z5i,
    'trivial_gf5': _trivial_gf5,
    'trivial_z6': _trivial_z6,
    'trivial_z12': _trivial_z12,
    'trivial_z36': _trivial_z36,
}

FIXTURE_NAMES = list(REGISTRY)


def build_fixture(name: str) -> Fixture:
    """
    Construct a registered fixture and validate its structure.

    Args:
        name: Registry key

    Returns:
        The fixture with its expectation table

    Raises:
        InputError: unknown name
        ValidationError: the constructed ring or module breaks an axiom
    """
    if name not in REGISTRY:
        raise InputError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}")
    fixture = REGISTRY[name]()
    if getattr(fixture.ring, 'backend', '') == 'finite':
        validate_ring(fixture.ring).raise_if_invalid()
    if fixture.module is not None:
        validate_module(fixture.module).raise_if_invalid()
    return fixture


def ring_fixtures() -> List[Fixture]:
    """Every fixture whose subject is a ring."""
    return [f for f in (build_fixture(n) for n in FIXTURE_NAMES) if f.module is None]


def module_fixtures() -> List[Fixture]:
    """Every fixture whose subject is a module."""
    return [f for f in (build_fixture(n) for n in FIXTURE_NAMES) if f.module is not None]


# ============================================================================
# VERIFICATION PIPELINE
# ============================================================================

def _render(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return '(' + ', '.join(str(v) for v in value) + ')'
    return str(value)


def verify_fixture(fixture: Fixture, logger: Logger,
                   limits: Optional[Limits] = None) -> List[Dict[str, Any]]:
    """
    Evaluate one fixture's expectation table.

    Args:
        fixture: Built fixture
        logger: Logger instance
        limits: Enumeration caps

    Returns:
        One row per expectation
    """
    limits = resolve_limits(limits)
    rows = []
    for expectation in fixture.expectations:
        try:
            computed = expectation.check(fixture, limits)
            status = 'ok' if computed == expectation.expected else 'mismatch'
        except CapExceeded as exc:
            computed = f"aborted_cap ({exc})"
            status = 'aborted'
        logger.mark('ok' if status == 'ok' else 'fail',
                    f"{expectation.label}: expected {_render(expectation.expected)}, "
                    f"computed {_render(computed)} [{expectation.provenance}]", indent=2)
        rows.append({
            'fixture': fixture.name,
            'check': expectation.label,
            'provenance': expectation.provenance,
            'expected': _render(expectation.expected),
            'computed': _render(computed),
            'status': status,
        })
    return rows


def verify_fixtures(logger: Logger, names: Optional[List[str]] = None,
                    limits: Optional[Limits] = None) -> Tuple[pd.DataFrame, Dict]:
    """
    Build and check every requested fixture.

    Args:
        logger: Logger instance
        names: Fixture names (all registered by default)
        limits: Enumeration caps

    Returns:
        Tuple of (verdict table, statistics dictionary)
    """
    names = names or FIXTURE_NAMES
    unknown = [n for n in names if n not in REGISTRY]
    if unknown:
        raise InputError(f"unknown fixture(s): {', '.join(unknown)}")

    logger.banner("FIXTURE VERIFICATION")

    rows: List[Dict[str, Any]] = []
    for step, name in enumerate(names, 1):
        fixture = build_fixture(name)
        logger.step(step, f"{name} ({fixture.structure.name}, {fixture.kind})")
        rows.extend(verify_fixture(fixture, logger, limits))
        if fixture.notes:
            logger.log(f"  note: {fixture.notes}")
        if name == 'z36i':
            primes = enumerate_graded_prime_submodules(fixture.module, resolve_limits(limits))
            logger.log(f"  graded primes ({len(primes)}): " + ', '.join(p.describe() for p in primes))

    columns = ['fixture', 'check', 'provenance', 'expected', 'computed', 'status']
    table = pd.DataFrame(rows, columns=columns)
    stats = {
        'fixtures': len(names),
        'checks': len(table),
        'passed': int((table['status'] == 'ok').sum()),
        'mismatches': int((table['status'] == 'mismatch').sum()),
        'aborted': int((table['status'] == 'aborted').sum()),
    }
    logger.log("")
    logger.log(f"Checks passed: {stats['passed']:,} / {stats['checks']:,} "
               f"({format_percentage(stats['passed'], stats['checks'])})")
    if stats['mismatches'] or stats['aborted']:
        logger.mark('fail', f"{stats['mismatches']} mismatch(es), {stats['aborted']} aborted")
    else:
        logger.mark('ok', "Every expectation matched")
    return table, stats
