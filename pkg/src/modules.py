"""
Graded Modules
==============
Finite G-graded modules over finite graded rings: the action tensor, module
validation, graded submodule generation and lattice enumeration, colon and
annihilator ideals, quotients, restrictions and graded homomorphisms.

Submodules reuse GradedSubgroup (role "submodule"); ideals computed here
live on the ring's space (role "two_sided_ideal").
"""

from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src.additive import (Element, GradedSpace, GradedSubgroup, PlainSubgroup, close_graded,
                          close_plain, coordinate_table, cyclic_decomposition, span)
from src.groups import SUBGROUP, classify_subset, cyclic, sort_degrees
from src.reports import PropertyReport, ValidationReport, cap_guarded, holds
from src.rings import MAX_LISTED_VIOLATIONS, FiniteGradedRing, cyclic_ring
from src.utils import InputError, Limits, cached_on, resolve_limits

SUBMODULE = 'submodule'
HOM_KINDS = ('plain', 'graded', 'grade_fixing')


# ============================================================================
# FINITE GRADED MODULE
# ============================================================================

class FiniteGradedModule:
    """
    Finite graded left module given by the action of the ring basis.

    Args:
        ring: FiniteGradedRing acting on the left
        names: Module basis names
        orders: Additive order of each module basis vector
        degrees: Degree of each module basis vector
        action: (ring basis i, module basis j) -> {k: c}, the product e_i·m_j
        name: Display name
    """

    def __init__(self, ring: FiniteGradedRing, names: Sequence[str], orders: Sequence[int],
                 degrees: Sequence[int], action: Dict[Tuple[int, int], Dict[int, int]],
                 name: str = 'M'):
        if getattr(ring, 'backend', '') != 'finite':
            raise InputError("graded modules are built over finite graded rings")
        self.ring = ring
        self.group = ring.group
        self.space = GradedSpace(ring.group, names, orders, degrees)
        self.name = name
        # Set when the module is R acting on itself; grade fixing maps need it
        self.regular_of: Optional[FiniteGradedRing] = None

        n_ring, n = ring.dim, self.space.dim
        tensor = np.zeros((n_ring, n, n), dtype=np.int64)
        for (i, j), row in action.items():
            if not (0 <= i < n_ring and 0 <= j < n):
                raise InputError(f"action index ({i}, {j}) out of range")
            for k, c in row.items():
                if not 0 <= k < n:
                    raise InputError(f"action target {k} out of range")
                tensor[i, j, k] = (tensor[i, j, k] + c) % self.space.orders[k]
        self.tensor = tensor
        self._terms = [[[(int(k), int(tensor[i, j, k])) for k in np.flatnonzero(tensor[i, j])]
                        for j in range(n)] for i in range(n_ring)]

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def size(self) -> int:
        return self.space.size

    @property
    def zero(self) -> Element:
        return self.space.zero

    def is_zero_module(self) -> bool:
        return self.dim == 0

    def basis(self) -> List[Element]:
        return [self.space.basis_vector(j) for j in range(self.dim)]

    def parse(self, value) -> Element:
        return self.space.parse_element(value)

    def render(self, m: Element) -> str:
        return self.space.render(m)

    def label(self, g: int) -> str:
        return self.group.label(g)

    # ------------------------------------------------------------------
    # Action
    # ------------------------------------------------------------------

    def act(self, r: Element, m: Element) -> Element:
        """r·m."""
        out = [0] * self.dim
        ms = [(j, b) for j, b in enumerate(m) if b]
        for i, a in enumerate(r):
            if not a:
                continue
            row = self._terms[i]
            for j, b in ms:
                for k, c in row[j]:
                    out[k] += a * b * c
        return self.space.reduce(out)

    def action_matrix(self, r: Element) -> np.ndarray:
        """Row j is r·m_j."""
        return np.einsum('i,ijk->jk', np.array(r, dtype=np.int64), self.tensor) % self.space.orders_array

    def operators(self):
        return [(lambda m, b=b: self.act(b, m)) for b in self.ring.basis()]

    # ------------------------------------------------------------------
    # Grading
    # ------------------------------------------------------------------

    def support(self) -> List[int]:
        return self.space.basis_degrees()

    def component_elements(self, h: int, limits: Optional[Limits] = None,
                           nonzero: bool = False) -> List[Element]:
        elements = self.space.component_elements(h, limits)
        return [x for x in elements if any(x)] if nonzero else elements

    def whole(self, limits: Optional[Limits] = None) -> GradedSubgroup:
        return GradedSubgroup.whole(self.space, limits, SUBMODULE)

    def zero_submodule(self) -> GradedSubgroup:
        return GradedSubgroup.zero(self.space, SUBMODULE)

    def __repr__(self) -> str:
        return f"FiniteGradedModule({self.name}, dim={self.dim}, ring={self.ring.name})"


# ============================================================================
# VALIDATION
# ============================================================================

def validate_module(module: FiniteGradedModule) -> ValidationReport:
    """
    Check R_g M_h ⊆ M_gh, order consistency, (e_i e_l)m = e_i(e_l m) and 1·m = m.

    Args:
        module: Module to check

    Returns:
        ValidationReport listing every violation found
    """
    report = ValidationReport(module.name)
    ring, space, tensor = module.ring, module.space, module.tensor
    group = module.group
    names, ring_names = space.names, ring.space.names
    orders = space.orders_array
    ring_orders = ring.space.orders_array

    def listed(kind: str) -> bool:
        return sum(1 for v in report.violations if v['kind'] == kind) < MAX_LISTED_VIOLATIONS

    for i, j, k in np.argwhere(tensor != 0):
        expected = group.mul(ring.space.degrees[i], space.degrees[j])
        if space.degrees[k] != expected and listed('grading'):
            report.add('grading', f"{ring_names[i]}*{names[j]} has a {names[k]} term of degree "
                                  f"{group.label(space.degrees[k])}, expected {group.label(expected)}",
                       pair=[ring_names[i], names[j]])

    ring_bad = (ring_orders[:, None, None] * tensor) % orders[None, None, :]
    module_bad = (orders[None, :, None] * tensor) % orders[None, None, :]
    for i, j, k in np.argwhere((ring_bad != 0) | (module_bad != 0)):
        if listed('order'):
            report.add('order', f"coefficient of {names[k]} in {ring_names[i]}*{names[j]} "
                                f"is not killed by the additive orders", pair=[ring_names[i], names[j]])

    left = np.einsum('ilp,pjk->iljk', ring.tensor, tensor) % orders
    right = np.einsum('ljq,iqk->iljk', tensor, tensor) % orders
    for i, l, j in {tuple(int(v) for v in t[:3]) for t in np.argwhere(left != right)}:
        if listed('associativity'):
            report.add('associativity', f"({ring_names[i]}*{ring_names[l]})*{names[j]} != "
                                        f"{ring_names[i]}*({ring_names[l]}*{names[j]})",
                       triple=[ring_names[i], ring_names[l], names[j]])

    one = np.array(ring.one, dtype=np.int64)
    if not np.array_equal(np.einsum('p,pjk->jk', one, tensor) % orders,
                          np.eye(space.dim, dtype=np.int64)):
        report.add('unit', "1*m_j != m_j for some basis vector")

    report.checked = {'basis': space.dim, 'pairs': ring.dim * space.dim,
                      'triples': ring.dim ** 2 * space.dim}
    return report


# ============================================================================
# CONSTRUCTORS
# ============================================================================

def regular_module(ring: FiniteGradedRing, name: Optional[str] = None) -> FiniteGradedModule:
    """R as a left graded module over itself."""
    action: Dict[Tuple[int, int], Dict[int, int]] = {}
    for i, j, k in np.argwhere(ring.tensor != 0):
        action.setdefault((int(i), int(j)), {})[int(k)] = int(ring.tensor[i, j, k])
    module = FiniteGradedModule(ring, ring.space.names, ring.space.orders, ring.space.degrees,
                                action, name or f"{ring.name} (regular)")
    module.regular_of = ring
    return module


def wrapped_integers(n: int) -> FiniteGradedRing:
    """Z acting on a module of exponent n, replaced by Z_n trivially graded by Z_2."""
    return cyclic_ring(n, cyclic(2), name=f"Z{n}")


def gaussian_pair_module(n: int, ring: Optional[FiniteGradedRing] = None,
                         name: Optional[str] = None) -> FiniteGradedModule:
    """Z_n[i] = Z_n ⊕ iZ_n with the scalar action of wrapped Z, graded by Z_2."""
    ring = ring or wrapped_integers(n)
    return FiniteGradedModule(ring, ['1', 'i'], [n, n], [0, 1],
                              {(0, 0): {0: 1}, (0, 1): {1: 1}}, name or f"Z{n}[i]")


def column_module(ring: FiniteGradedRing, shift: Optional[int] = None,
                  name: Optional[str] = None) -> FiniteGradedModule:
    """
    Column vectors GF(q)^n over a good-graded matrix (sub)algebra.

    With deg e_ij = d_i^-1 d_j, giving c_i degree d_i^-1·t makes e_ij c_j = c_i
    homogeneous for any shift t.
    """
    units = getattr(ring, 'matrix_units', None)
    if units is None:
        raise InputError("column modules need a matrix ring")
    group = ring.group
    shift = group.identity if shift is None else group.check(shift)
    d = ring.degree_tuple
    n = len(d)
    degrees = [group.mul(group.inv(d[i]), shift) for i in range(n)]
    action = {(u, j): {i: 1} for u, (i, j) in enumerate(units)}
    q = ring.space.orders[0]
    return FiniteGradedModule(ring, [f"c{i + 1}" for i in range(n)], [q] * n, degrees, action,
                              name or f"GF({q})^{n}")


# ============================================================================
# SUBMODULES
# ============================================================================

def _elements(module: FiniteGradedModule, values: Iterable) -> List[Element]:
    return [v if isinstance(v, tuple) else module.parse(v) for v in values]


def submodule_generated(module: FiniteGradedModule, generators: Iterable,
                        limits: Optional[Limits] = None) -> GradedSubgroup:
    """
    Smallest submodule containing homogeneous generators; graded because they are.

    Args:
        module: Ambient module
        generators: Homogeneous elements (tuples or parseable values)
        limits: Enumeration caps

    Returns:
        The submodule
    """
    generators = _elements(module, generators)
    for x in generators:
        if not module.space.is_homogeneous(x):
            raise InputError(f"{module.render(x)} is not homogeneous")
    return close_graded(module.space, generators, module.operators(), limits, SUBMODULE)


def plain_submodule_generated(module: FiniteGradedModule, generators: Iterable,
                              limits: Optional[Limits] = None) -> PlainSubgroup:
    """Submodule generated by arbitrary elements; need not be graded."""
    return close_plain(module.space, _elements(module, generators), module.operators(), limits, SUBMODULE)


def is_graded_check(submodule) -> bool:
    """Whether N = ⊕ (N ∩ M_g)."""
    if isinstance(submodule, GradedSubgroup):
        return True
    return submodule.is_graded()


def is_submodule(module: FiniteGradedModule, candidate: GradedSubgroup) -> bool:
    """Closure of an additive subgroup under the ring basis action."""
    return all(op(x) in candidate for x in candidate.generators() for op in module.operators())


def angle_submodule(module: FiniteGradedModule, r, elementwise: bool = False,
                    limits: Optional[Limits] = None) -> GradedSubgroup:
    """
    ⟨r⟩: the submodule generated by r·m_j over every module basis vector.

    With elementwise=True only r·b_0 is used, b_0 the first basis vector of
    identity degree.
    """
    ring = module.ring
    r = r if isinstance(r, tuple) else ring.parse(r)
    if not ring.space.is_homogeneous(r):
        raise InputError(f"{ring.render(r)} is not homogeneous")
    if elementwise:
        idx = module.space.indices(module.group.identity)
        if not idx:
            raise InputError("module has no basis vector of identity degree")
        basis = [module.space.basis_vector(idx[0])]
    else:
        basis = module.basis()
    return submodule_generated(module, [module.act(r, b) for b in basis], limits)


def cyclic_submodule(module: FiniteGradedModule, x: Element,
                     limits: Optional[Limits] = None) -> GradedSubgroup:
    """Rx for homogeneous x."""
    return submodule_generated(module, [x], limits)


def ideal_times_module(module: FiniteGradedModule, ideal: GradedSubgroup,
                       limits: Optional[Limits] = None) -> GradedSubgroup:
    """IM, spanned by r·m_j over additive generators r of I."""
    products = [module.act(r, b) for r in ideal.generators() for b in module.basis()]
    return submodule_generated(module, products, limits)


def _unit_multiples(space: GradedSpace, x: Element) -> List[Element]:
    order = space.order_of(x)
    return [space.scale(k, x) for k in range(1, order) if gcd(k, order) == 1]


def enumerate_graded_submodules(module: FiniteGradedModule,
                                limits: Optional[Limits] = None) -> List[GradedSubgroup]:
    """
    The whole graded submodule lattice in canonical order.

    Every graded submodule is a sum of cyclic homogeneous ones, so the join
    closure of {Rx : x ∈ h(M)} together with 0 is complete.
    """
    limits = resolve_limits(limits)

    def compute():
        cyclics: List[GradedSubgroup] = []
        seen = set()
        covered = set()
        for _, x in module.space.homogeneous_elements(limits):
            if x in covered:
                continue
            covered.update(_unit_multiples(module.space, x))
            sub = cyclic_submodule(module, x, limits)
            if sub not in seen:
                seen.add(sub)
                cyclics.append(sub)
        lattice = {module.zero_submodule()}
        for sub in cyclics:
            for existing in list(lattice):
                lattice.add(existing.sum(sub, limits))
                limits.check_lattice(len(lattice))
        return sorted(lattice, key=lambda n: n.sort_key())

    return cached_on(module, ('submodules', limits), compute)


# ============================================================================
# COLON AND ANNIHILATOR IDEALS
# ============================================================================

def _ideal_by_degree(module: FiniteGradedModule, keep, limits: Optional[Limits]) -> GradedSubgroup:
    """Collect r ∈ R_g, degree by degree, for which keep(g, r_array) marks True."""
    ring = module.ring
    parts = {}
    for g in ring.space.basis_degrees():
        elements = ring.component_elements(g, limits)
        mask = keep(g, ring.space.to_array(elements))
        parts[g] = frozenset(x for x, ok in zip(elements, mask) if ok)
    return GradedSubgroup(ring.space, parts, 'two_sided_ideal')


def colon(module: FiniteGradedModule, submodule: GradedSubgroup,
          limits: Optional[Limits] = None) -> GradedSubgroup:
    """(N :_R M) = {r : rM ⊆ N}; graded, so it is computed one degree at a time."""
    limits = resolve_limits(limits)
    space = module.space

    def keep(g, arr):
        products = np.einsum('ai,ijk->ajk', arr, module.tensor) % space.orders_array
        return [all(space.row(row) in submodule.part(module.group.mul(g, space.degrees[j]))
                    for j, row in enumerate(rows)) for rows in products]

    return _ideal_by_degree(module, keep, limits)


def annihilator(module: FiniteGradedModule, submodule: Optional[GradedSubgroup] = None,
                limits: Optional[Limits] = None) -> GradedSubgroup:
    """Ann(N) = {r : rN = 0}; Ann(M) when no submodule is given."""
    limits = resolve_limits(limits)
    generators = (submodule.generators() if submodule is not None else module.basis())
    orders = module.space.orders_array

    def keep(g, arr):
        mask = np.ones(len(arr), dtype=bool)
        for n in generators:
            products = np.einsum('ai,j,ijk->ak', arr, np.array(n, dtype=np.int64), module.tensor) % orders
            mask &= ~products.any(axis=1)
        return mask.tolist()

    return _ideal_by_degree(module, keep, limits)


def colon_of_element(module: FiniteGradedModule, submodule: GradedSubgroup, m: Element,
                     limits: Optional[Limits] = None) -> GradedSubgroup:
    """(N :_R m) = {r : rm ∈ N} for homogeneous m."""
    limits = resolve_limits(limits)
    m = m if isinstance(m, tuple) else module.parse(m)
    if not module.space.is_homogeneous(m):
        raise InputError(f"{module.render(m)} is not homogeneous")
    h = module.space.degree_of(m)
    orders = module.space.orders_array

    def keep(g, arr):
        if h is None:
            return [True] * len(arr)
        products = np.einsum('ai,j,ijk->ak', arr, np.array(m, dtype=np.int64), module.tensor) % orders
        target = submodule.part(module.group.mul(g, h))
        return [module.space.row(row) in target for row in products]

    return _ideal_by_degree(module, keep, limits)


# ============================================================================
# GRADED HOMOMORPHISMS
# ============================================================================

class GradedModuleHom:
    """
    R-linear map given by the images of the source basis.

    Args:
        source: Domain module
        target: Codomain module (a regular module when the codomain is R)
        images: Target coordinates of f(m_j) for every source basis vector
        kind: 'plain', 'graded' (f(M_g) ⊆ M'_g) or 'grade_fixing' (target = R, f(M_g) ⊆ R_g)
        name: Display name
    """

    def __init__(self, source: FiniteGradedModule, target: FiniteGradedModule,
                 images: Sequence, kind: str = 'plain', name: str = 'f'):
        if kind not in HOM_KINDS:
            raise InputError(f"hom kind must be one of {HOM_KINDS}, got {kind!r}")
        if source.ring is not target.ring:
            raise InputError("source and target must be modules over the same ring")
        if len(images) != source.dim:
            raise InputError(f"a hom needs {source.dim} basis images, got {len(images)}")
        self.source = source
        self.target = target
        self.kind = kind
        self.name = name
        self.images: List[Element] = [target.space.reduce(v) if isinstance(v, (tuple, list))
                                      else target.parse(v) for v in images]
        self.matrix = target.space.to_array(self.images).reshape(source.dim, target.dim)

    def apply(self, m: Element) -> Element:
        return self.target.space.row(self.apply_array(self.source.space.to_array([m]))[0])

    def apply_array(self, arr: np.ndarray) -> np.ndarray:
        return (arr @ self.matrix) % self.target.space.orders_array

    def validate(self) -> ValidationReport:
        """Additivity against the orders, R-linearity on basis pairs, and the declared kind."""
        report = ValidationReport(self.name)
        source, target = self.source, self.target
        for j, (image, order) in enumerate(zip(self.images, source.space.orders)):
            if any(target.space.scale(order, image)):
                report.add('order', f"{order}*f({source.space.names[j]}) != 0")
        ring_basis = source.ring.basis()
        for i, r in enumerate(ring_basis):
            for j, m in enumerate(source.basis()):
                if self.apply(source.act(r, m)) != target.act(r, self.images[j]):
                    report.add('linearity', f"f({source.ring.space.names[i]}*{source.space.names[j]}) "
                                            f"!= {source.ring.space.names[i]}*f({source.space.names[j]})")
        if self.kind in ('graded', 'grade_fixing') and not self.is_graded():
            report.add('grading', "some f(M_g) is not contained in the degree-g component")
        if self.kind == 'grade_fixing' and target.regular_of is None:
            report.add('grading', "grade fixing maps take values in the ring")
        report.checked = {'basis_pairs': len(ring_basis) * source.dim}
        return report

    def is_graded(self) -> bool:
        return all(not any(image) or self.target.space.degree_of(image) == self.source.space.degrees[j]
                   for j, image in enumerate(self.images))

    def is_grade_fixing(self) -> bool:
        """f(M_g) ⊆ R_g for every g."""
        return self.target.regular_of is not None and self.is_graded()

    def image(self, submodule: GradedSubgroup, limits: Optional[Limits] = None):
        """f(N): graded when f is graded, a plain submodule otherwise."""
        images = [self.apply(x) for x in submodule.generators()]
        if self.is_graded():
            return submodule_generated(self.target, images, limits)
        return plain_submodule_generated(self.target, images, limits)

    def preimage(self, submodule, limits: Optional[Limits] = None):
        """f^-1(L), computed degree by degree when f is graded."""
        limits = resolve_limits(limits)
        source = self.source
        if self.is_graded():
            parts = {}
            for h in source.space.basis_degrees():
                elements = source.component_elements(h, limits)
                mapped = self.apply_array(source.space.to_array(elements))
                parts[h] = frozenset(x for x, row in zip(elements, mapped)
                                     if submodule.contains(self.target.space.row(row)))
            return GradedSubgroup(source.space, parts, SUBMODULE)
        elements = source.space.all_elements(limits)
        mapped = self.apply_array(source.space.to_array(elements))
        kept = frozenset(x for x, row in zip(elements, mapped)
                         if submodule.contains(self.target.space.row(row)))
        plain = PlainSubgroup(source.space, kept, SUBMODULE)
        return plain.to_graded() if plain.is_graded() else plain

    def kernel(self, limits: Optional[Limits] = None):
        return self.preimage(self.target.zero_submodule(), limits)

    def is_epi(self, limits: Optional[Limits] = None) -> bool:
        return self.image(self.source.whole(limits), limits).size() == self.target.size

    def is_mono(self, limits: Optional[Limits] = None) -> bool:
        return self.kernel(limits).is_zero()

    def is_isomorphism(self, limits: Optional[Limits] = None) -> bool:
        return self.is_mono(limits) and self.is_epi(limits)

    def image_of_component(self, g: int, limits: Optional[Limits] = None) -> PlainSubgroup:
        """f(M_g) as an additive subgroup of the target."""
        images = [self.images[j] for j in self.source.space.indices(g)]
        return PlainSubgroup(self.target.space, span(self.target.space, images, limits))

    def __repr__(self) -> str:
        return f"GradedModuleHom({self.name}: {self.source.name} -> {self.target.name}, {self.kind})"


def identity_hom(module: FiniteGradedModule) -> GradedModuleHom:
    return GradedModuleHom(module, module, module.basis(), 'graded', 'id')


def right_multiplication_hom(ring: FiniteGradedRing, u: Element,
                             module: Optional[FiniteGradedModule] = None) -> GradedModuleHom:
    """m ↦ m·u on the regular module; left R-linear, and graded only when u has degree e."""
    module = module or regular_module(ring)
    u = u if isinstance(u, tuple) else ring.parse(u)
    images = [ring.mul(b, u) for b in ring.basis()]
    return GradedModuleHom(module, module, images, 'plain', f"(·{ring.render(u)})")


# ============================================================================
# QUOTIENTS AND RESTRICTIONS
# ============================================================================

def _rebased(module: FiniteGradedModule, pieces: Dict[int, Tuple[frozenset, frozenset]],
             brackets: str, limits: Limits):
    """
    Basis, action and coordinate map for ⊕_h A_h / N_h given per-degree (A_h, N_h).

    Returns:
        (names, orders, degrees, representatives, coords) with coords mapping
        an element of ⊕ A_h to its coordinates on the new basis
    """
    space = module.space
    names, orders, degrees, reps = [], [], [], []
    tables = {}
    for h, (whole, modulo) in pieces.items():
        basis = cyclic_decomposition(space, whole, modulo, limits)
        tables[h] = (len(names), coordinate_table(space, basis, modulo))
        for rep, order in basis:
            names.append(f"{brackets[0]}{module.render(rep)}{brackets[1]}")
            orders.append(order)
            degrees.append(h)
            reps.append(rep)

    def coords(x: Element) -> List[int]:
        vec = [0] * len(names)
        for h, piece in space.decompose(x).items():
            start, table = tables[h]
            for offset, c in enumerate(table[piece]):
                vec[start + offset] = c
        return vec

    return names, orders, degrees, reps, coords


def _induced_action(module: FiniteGradedModule, reps: List[Element], coords):
    action: Dict[Tuple[int, int], Dict[int, int]] = {}
    for i, r in enumerate(module.ring.basis()):
        for j, rep in enumerate(reps):
            row = {k: c for k, c in enumerate(coords(module.act(r, rep))) if c}
            if row:
                action[(i, j)] = row
    return action


def quotient_module(module: FiniteGradedModule, submodule: GradedSubgroup,
                    limits: Optional[Limits] = None, name: Optional[str] = None) -> FiniteGradedModule:
    """
    M/N with (M/N)_g = (M_g + N)/N.

    The result carries `projection`, the canonical graded epimorphism M -> M/N.
    """
    limits = resolve_limits(limits)
    pieces = {h: (frozenset(module.component_elements(h, limits)), submodule.part(h))
              for h in module.space.basis_degrees()}
    names, orders, degrees, reps, coords = _rebased(module, pieces, '[]', limits)
    quotient = FiniteGradedModule(module.ring, names, orders, degrees,
                                  _induced_action(module, reps, coords),
                                  name or f"{module.name}/{submodule.describe()}")
    quotient.projection = GradedModuleHom(module, quotient, [tuple(coords(b)) for b in module.basis()],
                                          'graded', 'pi')
    return quotient


def restrict_to_submodule(module: FiniteGradedModule, submodule: GradedSubgroup,
                          limits: Optional[Limits] = None, name: Optional[str] = None) -> FiniteGradedModule:
    """
    K as a module of its own, basis from the cyclic decomposition of each K_g.

    The result carries `inclusion`, the graded monomorphism K -> M.
    """
    limits = resolve_limits(limits)
    zero = frozenset({module.zero})
    pieces = {h: (submodule.part(h), zero) for h in submodule.degrees()}
    names, orders, degrees, reps, coords = _rebased(module, pieces, '()', limits)
    restricted = FiniteGradedModule(module.ring, names, orders, degrees,
                                    _induced_action(module, reps, coords),
                                    name or f"{submodule.describe()} in {module.name}")
    restricted.inclusion = GradedModuleHom(restricted, module, reps, 'graded', 'incl')
    return restricted


# ============================================================================
# STRONGLY GRADED MODULES
# ============================================================================

def _product_fills(module: FiniteGradedModule, g: int, h: int, limits: Limits) -> bool:
    """R_g M_h == M_gh."""
    ring = module.ring
    products = [module.act(ring.space.basis_vector(i), module.space.basis_vector(j))
                for i in ring.space.indices(g) for j in module.space.indices(h)]
    generated = GradedSubgroup.from_generators(module.space, products, limits)
    return generated.size() == module.space.component_size(module.group.mul(g, h))


@cap_guarded('module_strongness_class')
def module_strongness_class(module: FiniteGradedModule, limits: Optional[Limits] = None) -> PropertyReport:
    """
    strong: R_g M_h = M_gh for all g, h; first_strong: supp(R) is a subgroup
    and the equality holds for g ∈ supp(R); none otherwise.
    """
    limits = resolve_limits(limits)
    ring, group = module.ring, module.group
    name = 'module_strongness_class'
    module_degrees = module.support()
    ring_support = ring.support()

    def h_candidates(g):
        if group.is_finite:
            return group.elements()
        return sort_degrees(group, set(module_degrees) | {group.mul(group.inv(g), d) for d in module_degrees})

    def first_failure(degrees):
        for g in degrees:
            for h in h_candidates(g):
                if not _product_fills(module, g, h, limits):
                    return g, h
        return None

    if module.is_zero_module():
        strong_gap = None
    elif group.is_finite:
        strong_gap = first_failure(group.elements())
    else:
        # R_g = 0 for some g while every M_d needs R_g M_{g^-1 d} = M_d
        g = next(k for k in range(1, max(ring_support, default=0) + 2) if k not in ring_support)
        strong_gap = (g, group.mul(group.inv(g), module_degrees[0]))

    subgroup = classify_subset(group, ring_support) == SUBGROUP
    first_gap = first_failure(ring_support) if subgroup else None
    tests = {'strong': strong_gap is None, 'first_strong': subgroup and first_gap is None}

    if tests['strong']:
        return holds(name, 'strong', stats=tests)
    witness = {'pair': [group.label(strong_gap[0]), group.label(strong_gap[1])]}
    if tests['first_strong']:
        return holds(name, 'first_strong', witness=witness, stats=tests)
    if not subgroup:
        return holds(name, 'none', witness={'ring_support_class': classify_subset(group, ring_support)},
                     stats=tests)
    return holds(name, 'none', witness={'pair': [group.label(first_gap[0]), group.label(first_gap[1])]},
                 stats=tests)
