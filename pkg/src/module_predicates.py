"""
Module Predicates
=================
Graded prime, essential, semi-essential, uniform, semi-uniform,
multiplication and faithful tests for finite graded modules, the graded
radical, and instance-level checks of how semi-essential submodules move
along graded homomorphisms.

Prime lists and lattices are cached on the module instance, so repeated
predicates over one module enumerate once.
"""

from typing import Dict, List, Optional

from src.additive import GradedSubgroup
from src.modules import (FiniteGradedModule, GradedModuleHom, annihilator, colon, colon_of_element,
                         cyclic_submodule, enumerate_graded_submodules, ideal_times_module,
                         module_strongness_class)
from src.reports import PropertyReport, cap_guarded, fails, holds
from src.ring_predicates import is_graded_prime_ideal
from src.utils import InputError, Limits, cached_on, resolve_limits

ESSENTIAL_MODES = ('cyclic', 'lattice')
SEMI_ESSENTIAL_MODES = ('definition', 'characterization')


def _require_nonzero(submodule: GradedSubgroup, what: str):
    if submodule.is_zero():
        raise InputError(f"{what} needs a nonzero submodule")


# ============================================================================
# GRADED PRIME SUBMODULES
# ============================================================================

def _prime_violation(module: FiniteGradedModule, prime: GradedSubgroup, limits: Limits) -> Optional[Dict]:
    """First (r, m) in h(R) x h(M) with rm ∈ P, m ∉ P and r ∉ (P:M)."""
    ring, space = module.ring, module.space
    quotient_ideal = colon(module, prime, limits)
    outside: Dict[int, List] = {}
    for h, m in space.homogeneous_elements(limits):
        if m not in prime:
            outside.setdefault(h, []).append(m)
    total = sum(len(v) for v in outside.values())
    ring_elements = [(g, r) for g, r in ring.space.homogeneous_elements(limits) if r not in quotient_ideal]
    limits.check_pairs(len(ring_elements) * total)
    arrays = {h: space.to_array(ms) for h, ms in outside.items()}
    for g, r in ring_elements:
        matrix = module.action_matrix(r)
        for h in space.basis_degrees():
            if h not in arrays:
                continue
            target = prime.part(module.group.mul(g, h))
            products = (arrays[h] @ matrix) % space.orders_array
            for idx, row in enumerate(products):
                if space.row(row) in target:
                    return {'r': ring.render(r), 'm': module.render(outside[h][idx]),
                            'product': module.render(space.row(row))}
    return None


@cap_guarded('is_graded_prime_submodule')
def is_graded_prime_submodule(module: FiniteGradedModule, prime: GradedSubgroup,
                              limits: Optional[Limits] = None) -> PropertyReport:
    """
    P proper with rm ∈ P ⇒ m ∈ P or r ∈ (P:M), for r ∈ h(R) and m ∈ h(M).

    Args:
        module: Ambient module
        prime: Candidate graded submodule
        limits: Enumeration caps

    Returns:
        PropertyReport with the violating (r, m) on failure
    """
    limits = resolve_limits(limits)
    if prime.is_whole():
        raise InputError("graded prime submodules must be proper")
    violation = _prime_violation(module, prime, limits)
    if violation:
        return fails('is_graded_prime_submodule', witness={'submodule': prime.describe(), **violation})
    return holds('is_graded_prime_submodule', witness={'submodule': prime.describe()})


def enumerate_graded_prime_submodules(module: FiniteGradedModule,
                                      limits: Optional[Limits] = None) -> List[GradedSubgroup]:
    """Every graded prime submodule (zero included when prime), canonical order."""
    limits = resolve_limits(limits)

    def compute():
        return [n for n in enumerate_graded_submodules(module, limits)
                if not n.is_whole() and _prime_violation(module, n, limits) is None]

    return cached_on(module, ('primes', limits), compute)


def nonzero_primes(module: FiniteGradedModule, limits: Optional[Limits] = None) -> List[GradedSubgroup]:
    return [p for p in enumerate_graded_prime_submodules(module, limits) if not p.is_zero()]


def graded_radical(module: FiniteGradedModule, submodule: GradedSubgroup,
                   limits: Optional[Limits] = None) -> GradedSubgroup:
    """Intersection of the graded primes containing N; M when there are none."""
    limits = resolve_limits(limits)
    result = module.whole(limits)
    for prime in enumerate_graded_prime_submodules(module, limits):
        if submodule <= prime:
            result = result & prime
    return result


# ============================================================================
# ESSENTIAL AND SEMI-ESSENTIAL SUBMODULES
# ============================================================================

@cap_guarded('is_graded_essential')
def is_graded_essential(module: FiniteGradedModule, submodule: GradedSubgroup,
                        limits: Optional[Limits] = None, mode: str = 'cyclic') -> PropertyReport:
    """
    K meets every nonzero graded submodule.

    'cyclic' quantifies over Rx for nonzero homogeneous x, which suffices since
    every nonzero graded N contains one; 'lattice' walks the whole lattice.
    """
    limits = resolve_limits(limits)
    name = 'is_graded_essential'
    if mode not in ESSENTIAL_MODES:
        raise InputError(f"mode must be one of {ESSENTIAL_MODES}")
    _require_nonzero(submodule, name)

    if mode == 'lattice':
        for other in enumerate_graded_submodules(module, limits):
            if not other.is_zero() and (submodule & other).is_zero():
                return fails(name, witness={'submodule': submodule.describe(),
                                            'disjoint_submodule': other.describe()})
        return holds(name, witness={'submodule': submodule.describe()})

    for _, x in module.space.homogeneous_elements(limits):
        if x in submodule:
            continue
        generated = cyclic_submodule(module, x, limits)
        if (submodule & generated).is_zero():
            return fails(name, witness={'submodule': submodule.describe(), 'element': module.render(x),
                                        'disjoint_submodule': generated.describe()})
    return holds(name, witness={'submodule': submodule.describe()})


@cap_guarded('is_graded_semi_essential')
def is_graded_semi_essential(module: FiniteGradedModule, submodule: GradedSubgroup,
                             limits: Optional[Limits] = None, mode: str = 'definition') -> PropertyReport:
    """
    K meets every nonzero graded prime submodule.

    'characterization' instead searches, per prime P, for r ∈ h(R) and
    m ∈ h(M) with m ∈ P and 0 != rm ∈ K. Both modes flag the verdict as
    vacuous when M has no nonzero graded prime.
    """
    limits = resolve_limits(limits)
    name = 'is_graded_semi_essential'
    if mode not in SEMI_ESSENTIAL_MODES:
        raise InputError(f"mode must be one of {SEMI_ESSENTIAL_MODES}")
    _require_nonzero(submodule, name)
    primes = nonzero_primes(module, limits)
    stats = {'nonzero_primes': len(primes), 'mode': mode}

    for prime in primes:
        if mode == 'definition':
            if (submodule & prime).is_zero():
                return fails(name, witness={'submodule': submodule.describe(),
                                            'missed_prime': prime.describe()}, stats=stats)
        elif _characterization_pair(module, submodule, prime) is None:
            return fails(name, witness={'submodule': submodule.describe(),
                                        'missed_prime': prime.describe()}, stats=stats)
    return holds(name, witness={'submodule': submodule.describe()}, stats=stats, vacuous=not primes)


def _characterization_pair(module: FiniteGradedModule, submodule: GradedSubgroup,
                           prime: GradedSubgroup) -> Optional[Dict]:
    ring = module.ring
    for _, m in prime.homogeneous_elements():
        for _, r in ring.space.homogeneous_elements():
            product = module.act(r, m)
            if any(product) and product in submodule:
                return {'r': ring.render(r), 'm': module.render(m)}
    return None


# ============================================================================
# UNIFORM AND SEMI-UNIFORM MODULES
# ============================================================================

@cap_guarded('is_graded_uniform')
def is_graded_uniform(module: FiniteGradedModule, limits: Optional[Limits] = None) -> PropertyReport:
    """Every nonzero graded submodule is graded essential."""
    limits = resolve_limits(limits)
    submodules = [n for n in enumerate_graded_submodules(module, limits) if not n.is_zero()]
    for sub in submodules:
        report = is_graded_essential(module, sub, limits)
        if report.aborted:
            return report
        if report.fails:
            return fails('is_graded_uniform', witness=report.witness, stats={'submodules': len(submodules)})
    return holds('is_graded_uniform', stats={'submodules': len(submodules)}, vacuous=not submodules)


@cap_guarded('is_graded_semi_uniform')
def is_graded_semi_uniform(module: FiniteGradedModule, limits: Optional[Limits] = None) -> PropertyReport:
    """Every nonzero graded submodule is graded semi-essential."""
    limits = resolve_limits(limits)
    submodules = [n for n in enumerate_graded_submodules(module, limits) if not n.is_zero()]
    vacuous = True
    for sub in submodules:
        report = is_graded_semi_essential(module, sub, limits)
        if report.aborted:
            return report
        vacuous = vacuous and report.vacuous
        if report.fails:
            return fails('is_graded_semi_uniform', witness=report.witness,
                         stats={'submodules': len(submodules)})
    return holds('is_graded_semi_uniform', stats={'submodules': len(submodules)}, vacuous=vacuous)


# ============================================================================
# MULTIPLICATION AND FAITHFUL MODULES
# ============================================================================

@cap_guarded('is_multiplication_module')
def is_multiplication_module(module: FiniteGradedModule, limits: Optional[Limits] = None) -> PropertyReport:
    """Every graded submodule N equals (N:M)M."""
    limits = resolve_limits(limits)
    submodules = enumerate_graded_submodules(module, limits)
    for sub in submodules:
        product = ideal_times_module(module, colon(module, sub, limits), limits)
        if product != sub:
            return fails('is_multiplication_module',
                         witness={'submodule': sub.describe(), 'colon_times_module': product.describe()})
    return holds('is_multiplication_module', stats={'submodules': len(submodules)})


@cap_guarded('is_faithful_module')
def is_faithful_module(module: FiniteGradedModule, limits: Optional[Limits] = None) -> PropertyReport:
    """Ann(M) = 0."""
    ann = annihilator(module, None, limits)
    if ann.is_zero():
        return holds('is_faithful_module')
    r = next(x for _, x in ann.homogeneous_elements())
    return fails('is_faithful_module', witness={'annihilating_element': module.ring.render(r),
                                                'annihilator': ann.describe()})


def colon_ideal_is_prime(module: FiniteGradedModule, prime: GradedSubgroup,
                         limits: Optional[Limits] = None) -> PropertyReport:
    """(P:M) as a graded prime ideal of R."""
    return is_graded_prime_ideal(module.ring, colon(module, prime, limits), limits)


# ============================================================================
# COLON CONDITION
# ============================================================================

def colon_condition(module: FiniteGradedModule, submodule: GradedSubgroup, prime: GradedSubgroup,
                    limits: Optional[Limits] = None) -> Optional[str]:
    """
    Check (K ∩ P : m) = Ann(M) for every m ∈ h(M) outside K ∩ P.

    Returns:
        None when the condition holds, else the first offending m rendered
    """
    limits = resolve_limits(limits)
    meet = submodule & prime
    ann = annihilator(module, None, limits)
    for _, m in module.space.homogeneous_elements(limits):
        if m in meet:
            continue
        if colon_of_element(module, meet, m, limits) != ann:
            return module.render(m)
    return None


# ============================================================================
# SEMI-ESSENTIAL SUBMODULES ALONG HOMOMORPHISMS
# ============================================================================

def _semi_essential(module: FiniteGradedModule, submodule, limits: Limits) -> Optional[bool]:
    """Three-valued semi-essential test; zero submodules are never semi-essential."""
    if submodule.is_zero():
        return False
    report = is_graded_semi_essential(module, submodule, limits)
    return None if report.aborted else report.holds


def _entry(name: str, hypothesis: bool, conclusion: Optional[bool], **detail) -> Dict:
    return {
        'statement': name,
        'hypothesis': hypothesis,
        'conclusion': conclusion if hypothesis else None,
        'respected': (not hypothesis) or bool(conclusion),
        **detail,
    }


@cap_guarded('semi_essential_transfer')
def semi_essential_transfer_checks(hom: GradedModuleHom, submodule: GradedSubgroup,
                                   limits: Optional[Limits] = None) -> PropertyReport:
    """
    Evaluate three transfer statements on one instance f: M -> M', K ⊆ M.

    - isomorphism_image: f iso and K semi-essential ⇒ f(K) semi-essential in M'.
    - epimorphism_preimage: f epi, Ker f ⊆ Grad_M(0) and f(K) semi-essential
      in M' ⇒ f^-1(f(K)) semi-essential in M.
    - prime_quotient_rigidity: with T = Ker f a nonzero graded prime, f epi,
      K nonzero and f(K) ≅ (K+T)/T semi-essential in M', every graded prime
      P ⊇ T with K ∩ P = 0 equals T.

    The verdict holds when every entry is respected; `value` lists the entries.
    """
    limits = resolve_limits(limits)
    name = 'semi_essential_transfer'
    if not hom.is_graded():
        raise InputError("transfer checks need a graded homomorphism")
    source, target = hom.source, hom.target
    image = hom.image(submodule, limits)
    epi = hom.is_epi(limits)
    kernel = hom.kernel(limits)
    entries = []

    iso = epi and kernel.is_zero()
    k_semi = _semi_essential(source, submodule, limits)
    hypothesis = iso and bool(k_semi)
    entries.append(_entry('isomorphism_image', hypothesis,
                          _semi_essential(target, image, limits) if hypothesis else None))

    radical_zero = _radical_of_zero(source, limits)
    image_semi = _semi_essential(target, image, limits)
    hypothesis = epi and kernel <= radical_zero and bool(image_semi)
    pulled = hom.preimage(image, limits) if hypothesis else None
    entries.append(_entry('epimorphism_preimage', hypothesis,
                          _semi_essential(source, pulled, limits) if hypothesis else None))

    primes = enumerate_graded_prime_submodules(source, limits)
    kernel_prime = not kernel.is_zero() and kernel in primes
    rivals = [p for p in primes if kernel <= p and (submodule & p).is_zero()] if kernel_prime else []
    hypothesis = (epi and kernel_prime and not submodule.is_zero() and bool(image_semi) and bool(rivals))
    conclusion = all(p == kernel for p in rivals) if hypothesis else None
    entries.append(_entry('prime_quotient_rigidity', hypothesis, conclusion,
                          rivals=[p.describe() for p in rivals]))

    undecided = any(e['hypothesis'] and e['conclusion'] is None for e in entries)
    if undecided or None in (k_semi, image_semi):
        return PropertyReport(name, 'aborted_cap', entries, {}, {'reason': 'semi-essential test aborted'})
    broken = [e['statement'] for e in entries if not e['respected']]
    if broken:
        return fails(name, entries, witness={'broken': broken, 'submodule': submodule.describe()})
    return holds(name, entries, witness={'submodule': submodule.describe()})


def _radical_of_zero(module: FiniteGradedModule, limits: Limits) -> GradedSubgroup:
    return graded_radical(module, module.zero_submodule(), limits)


# ============================================================================
# REGISTRY
# ============================================================================

MODULE_PREDICATES = {
    'is_graded_uniform': is_graded_uniform,
    'is_graded_semi_uniform': is_graded_semi_uniform,
    'is_multiplication_module': is_multiplication_module,
    'is_faithful_module': is_faithful_module,
}


def run_module_predicates(module: FiniteGradedModule, names: Optional[List[str]] = None,
                          limits: Optional[Limits] = None) -> List[PropertyReport]:
    """Evaluate the named module-level predicates (all by default)."""
    registry = {**MODULE_PREDICATES, 'module_strongness_class': module_strongness_class}
    names = names or list(registry)
    unknown = [n for n in names if n not in registry]
    if unknown:
        raise InputError(f"unknown module predicate(s): {', '.join(unknown)}")
    return [registry[n](module, limits) for n in names]


def submodule_table(module: FiniteGradedModule, limits: Optional[Limits] = None) -> List[Dict]:
    """One row per graded submodule: size, primality, essential and semi-essential verdicts."""
    limits = resolve_limits(limits)
    primes = set(enumerate_graded_prime_submodules(module, limits))
    rows = []
    for sub in enumerate_graded_submodules(module, limits):
        row = {'submodule': sub.describe(), 'size': sub.size(), 'prime': sub in primes}
        if sub.is_zero():
            row.update({'essential': '', 'semi_essential': ''})
        else:
            row['essential'] = is_graded_essential(module, sub, limits).verdict
            row['semi_essential'] = is_graded_semi_essential(module, sub, limits).verdict
        rows.append(row)
    return rows


def lattice_counts(module: FiniteGradedModule, limits: Optional[Limits] = None) -> Dict[str, int]:
    lattice = enumerate_graded_submodules(module, limits)
    primes = enumerate_graded_prime_submodules(module, limits)
    return {'submodules': len(lattice), 'primes': len(primes),
            'module_size': module.size}
