"""
Graded Rings
============
Two exact backends for G-graded rings:

- FiniteGradedRing: additive group ⊕ Z_{n_i}·e_i with homogeneous basis
  and structure constants e_i·e_j = Σ c_ijk e_k.
- MonomialGradedRing: K[x] over GF(q) with deg(x^j) = γ^j, components
  described by eventually periodic exponent sets.

Constructors for the ring families used by the fixtures and the generator
live at the bottom of the module.
"""

from itertools import product
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src.additive import (Element, GradedSpace, GradedSubgroup, PlainSubgroup, close_graded,
                          close_plain)
from src.groups import FiniteGroup, IntegerGroup, cyclic, sort_degrees, trivial_group
from src.periodic import EventuallyPeriodicSet
from src.reports import ValidationReport
from src.utils import InputError, Limits, resolve_limits

SIDES = ('left', 'right', 'two')
IDEAL_ROLES = {'left': 'left_ideal', 'right': 'right_ideal', 'two': 'two_sided_ideal'}

# Violations listed per kind before the report stops collecting
MAX_LISTED_VIOLATIONS = 20


# ============================================================================
# FINITE GRADED RING
# ============================================================================

class FiniteGradedRing:
    """
    Finite G-graded ring given by structure constants on a homogeneous basis.

    Args:
        group: Grading group (finite, or IntegerGroup with finite support)
        names: Basis names
        orders: Additive order of each basis vector
        degrees: Degree of each basis vector
        mul: (i, j) -> {k: c}, the product e_i·e_j
        one: Coordinates of the identity element
        name: Display name
    """

    backend = 'finite'

    def __init__(self, group, names: Sequence[str], orders: Sequence[int], degrees: Sequence[int],
                 mul: Dict[Tuple[int, int], Dict[int, int]], one: Sequence[int], name: str = 'R'):
        self.group = group
        self.space = GradedSpace(group, names, orders, degrees)
        self.name = name
        n = self.space.dim
        if len(one) != n:
            raise InputError(f"identity needs {n} coordinates")

        tensor = np.zeros((n, n, n), dtype=np.int64)
        for (i, j), row in mul.items():
            if not (0 <= i < n and 0 <= j < n):
                raise InputError(f"structure constant index ({i}, {j}) out of range")
            for k, c in row.items():
                if not 0 <= k < n:
                    raise InputError(f"structure constant target {k} out of range")
                tensor[i, j, k] = (tensor[i, j, k] + c) % self.space.orders[k]
        self.tensor = tensor
        self.one: Element = self.space.reduce(one)
        self._terms: List[List[List[Tuple[int, int]]]] = [
            [[(int(k), int(tensor[i, j, k])) for k in np.flatnonzero(tensor[i, j])]
             for j in range(n)] for i in range(n)]

    # ------------------------------------------------------------------
    # Basic data
    # ------------------------------------------------------------------

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def size(self) -> int:
        return self.space.size

    @property
    def zero(self) -> Element:
        return self.space.zero

    def is_zero_ring(self) -> bool:
        return not any(self.one)

    def basis(self) -> List[Element]:
        return [self.space.basis_vector(i) for i in range(self.dim)]

    def parse(self, value) -> Element:
        return self.space.parse_element(value)

    def render(self, x: Element) -> str:
        return self.space.render(x)

    def label(self, g: int) -> str:
        return self.group.label(g)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def add(self, x: Element, y: Element) -> Element:
        return self.space.add(x, y)

    def neg(self, x: Element) -> Element:
        return self.space.neg(x)

    def sub(self, x: Element, y: Element) -> Element:
        return self.space.sub(x, y)

    def mul(self, x: Element, y: Element) -> Element:
        out = [0] * self.dim
        ys = [(j, b) for j, b in enumerate(y) if b]
        for i, a in enumerate(x):
            if not a:
                continue
            row = self._terms[i]
            for j, b in ys:
                for k, c in row[j]:
                    out[k] += a * b * c
        return self.space.reduce(out)

    def power(self, x: Element, k: int) -> Element:
        result = self.one
        for _ in range(k):
            result = self.mul(result, x)
        return result

    def left_matrix(self, x: Element) -> np.ndarray:
        """Row j is x·e_j."""
        return np.einsum('i,ijk->jk', np.array(x, dtype=np.int64), self.tensor) % self.space.orders_array

    def right_matrix(self, x: Element) -> np.ndarray:
        """Row i is e_i·x."""
        return np.einsum('j,ijk->ik', np.array(x, dtype=np.int64), self.tensor) % self.space.orders_array

    def left_products(self, x: Element, others: np.ndarray) -> np.ndarray:
        """x·v for every row v of `others`."""
        return (others @ self.left_matrix(x)) % self.space.orders_array

    def right_products(self, others: np.ndarray, x: Element) -> np.ndarray:
        """v·x for every row v of `others`."""
        return (others @ self.right_matrix(x)) % self.space.orders_array

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.tensor, self.tensor.transpose(1, 0, 2)))

    # ------------------------------------------------------------------
    # Grading
    # ------------------------------------------------------------------

    def decompose(self, x: Element) -> Dict[int, Element]:
        return self.space.decompose(x)

    def support(self) -> List[int]:
        """Degrees with a nonzero component; every basis vector is nonzero."""
        return self.space.basis_degrees()

    def in_support(self, g: int) -> bool:
        return bool(self.space.indices(g))

    def degree_window(self) -> List[int]:
        """
        Degrees every universal check ranges over.

        All of G for a finite group. Over Z, R_g = 0 off the basis degrees D,
        so D ∪ −D ∪ (D+D) ∪ {0} holds every degree where a statement can
        change truth value.
        """
        if self.group.is_finite:
            return self.group.elements()
        basis = set(self.space.degrees)
        window = basis | {-g for g in basis} | {g + h for g in basis for h in basis} | {0}
        return sort_degrees(self.group, window)

    def component(self, g: int, limits: Optional[Limits] = None) -> GradedSubgroup:
        """R_g as a graded subgroup (zero when no basis vector has degree g)."""
        if not self.in_support(g):
            return GradedSubgroup.zero(self.space)
        return GradedSubgroup(self.space, {g: frozenset(self.space.component_elements(g, limits))})

    def component_elements(self, g: int, limits: Optional[Limits] = None,
                           nonzero: bool = False) -> List[Element]:
        elements = self.space.component_elements(g, limits)
        return [x for x in elements if any(x)] if nonzero else elements

    def component_product(self, g: int, h: int, limits: Optional[Limits] = None) -> GradedSubgroup:
        """Additive subgroup generated by R_g·R_h: the span of the basis products."""
        products = [self.mul(self.space.basis_vector(i), self.space.basis_vector(j))
                    for i in self.space.indices(g) for j in self.space.indices(h)]
        return GradedSubgroup.from_generators(self.space, products, limits)

    def product_equals_component(self, g: int, h: int, limits: Optional[Limits] = None) -> bool:
        """R_g R_h == R_{gh}; the product is always contained in the component."""
        return self.component_product(g, h, limits).size() == self.space.component_size(self.group.mul(g, h))

    # ------------------------------------------------------------------
    # Ideals
    # ------------------------------------------------------------------

    def side_operators(self, sided: str):
        if sided not in SIDES:
            raise InputError(f"sided must be one of {SIDES}, got {sided!r}")
        ops = []
        basis = self.basis()
        if sided in ('left', 'two'):
            ops.extend((lambda x, b=b: self.mul(b, x)) for b in basis)
        if sided in ('right', 'two'):
            ops.extend((lambda x, b=b: self.mul(x, b)) for b in basis)
        return ops

    def ideal_generated(self, generators: Iterable[Element], sided: str = 'two',
                        limits: Optional[Limits] = None) -> GradedSubgroup:
        """
        Smallest graded ideal of the given side containing homogeneous generators.

        Args:
            generators: Homogeneous ring elements
            sided: 'left', 'right' or 'two'
            limits: Enumeration caps

        Returns:
            The ideal as a graded subgroup
        """
        generators = list(generators)
        for x in generators:
            if not self.space.is_homogeneous(x):
                raise InputError(f"{self.render(x)} is not homogeneous")
        return close_graded(self.space, generators, self.side_operators(sided),
                            limits, IDEAL_ROLES[sided])

    def plain_ideal_generated(self, generators: Iterable[Element], sided: str = 'two',
                              limits: Optional[Limits] = None) -> PlainSubgroup:
        """Ideal generated by arbitrary elements; need not be graded."""
        return close_plain(self.space, generators, self.side_operators(sided),
                           limits, IDEAL_ROLES[sided])

    def whole(self, limits: Optional[Limits] = None) -> GradedSubgroup:
        return GradedSubgroup.whole(self.space, limits, 'two_sided_ideal')

    # ------------------------------------------------------------------
    # Units
    # ------------------------------------------------------------------

    def homogeneous_unit_search(self, g: int, limits: Optional[Limits] = None
                                ) -> Optional[Tuple[Element, Element]]:
        """
        First u ∈ R_g (canonical order) with a two-sided inverse v.

        Only R_{g^-1} is searched for v: the inverse of a homogeneous unit is
        homogeneous of the inverse degree.
        """
        limits = resolve_limits(limits)
        if self.is_zero_ring():
            return self.zero, self.zero
        candidates = self.component_elements(g, limits, nonzero=True)
        inverses = self.component_elements(self.group.inv(g), limits, nonzero=True)
        limits.check_pairs(len(candidates) * len(inverses))
        if not candidates or not inverses:
            return None
        inv_array = self.space.to_array(inverses)
        one = np.array(self.one, dtype=np.int64)
        for u in candidates:
            hits = np.flatnonzero((self.left_products(u, inv_array) == one).all(axis=1))
            for idx in hits:
                v = inverses[int(idx)]
                if self.mul(v, u) == self.one:
                    return u, v
        return None

    def full_inverse_search(self, limits: Optional[Limits] = None) -> Dict[Element, Element]:
        """Every unit of R with its inverse, by an unrestricted scan."""
        limits = resolve_limits(limits)
        elements = self.space.all_elements(limits)
        limits.check_pairs(len(elements) ** 2)
        array = self.space.to_array(elements)
        one = np.array(self.one, dtype=np.int64)
        units: Dict[Element, Element] = {}
        for x in elements:
            if x in units:
                continue
            for idx in np.flatnonzero((self.left_products(x, array) == one).all(axis=1)):
                y = elements[int(idx)]
                if self.mul(y, x) == self.one:
                    units[x] = y
                    units[y] = x
                    break
        return units

    def __repr__(self) -> str:
        return f"FiniteGradedRing({self.name}, dim={self.dim}, group={self.group.name})"


# ============================================================================
# VALIDATION
# ============================================================================

def validate_ring(ring: FiniteGradedRing) -> ValidationReport:
    """
    Check grading compatibility, order consistency, associativity and the unit.

    Args:
        ring: Ring to check

    Returns:
        ValidationReport listing every violation found
    """
    report = ValidationReport(ring.name)
    space, group, tensor = ring.space, ring.group, ring.tensor
    n = space.dim
    orders = space.orders_array
    names = space.names

    def listed(kind: str) -> bool:
        return sum(1 for v in report.violations if v['kind'] == kind) < MAX_LISTED_VIOLATIONS

    if n == 0 or int(np.prod(orders)) == 1:
        report.add('unit', "1 = 0: the zero ring is not a ring with identity here")
        report.checked = {'basis': n, 'pairs': 0, 'triples': 0}
        return report

    for i, j, k in np.argwhere(tensor != 0):
        expected = group.mul(space.degrees[i], space.degrees[j])
        if space.degrees[k] != expected and listed('grading'):
            report.add('grading',
                       f"{names[i]}*{names[j]} has a {names[k]} term of degree "
                       f"{group.label(space.degrees[k])}, expected {group.label(expected)}",
                       pair=[names[i], names[j]])

    # n_i e_i = 0 must force n_i (e_i e_j) = 0, and likewise on the right
    left_bad = (orders[:, None, None] * tensor) % orders[None, None, :]
    right_bad = (orders[None, :, None] * tensor) % orders[None, None, :]
    for i, j, k in np.argwhere((left_bad != 0) | (right_bad != 0)):
        if listed('order'):
            report.add('order', f"coefficient of {names[k]} in {names[i]}*{names[j]} "
                                f"is not killed by the additive orders", pair=[names[i], names[j]])

    left = np.einsum('ijl,lkm->ijkm', tensor, tensor) % orders
    right = np.einsum('jkl,ilm->ijkm', tensor, tensor) % orders
    for i, j, k in {tuple(int(v) for v in t[:3]) for t in np.argwhere(left != right)}:
        if listed('associativity'):
            report.add('associativity', f"({names[i]}*{names[j]})*{names[k]} != "
                                        f"{names[i]}*({names[j]}*{names[k]})",
                       triple=[names[i], names[j], names[k]])

    degrees = set(space.decompose(ring.one))
    if degrees - {group.identity}:
        report.add('unit', "identity element is not homogeneous of the identity degree")
    one = np.array(ring.one, dtype=np.int64)
    identity = np.eye(n, dtype=np.int64)
    if not np.array_equal(np.einsum('j,jim->im', one, tensor) % orders, identity):
        report.add('unit', "1*e_i != e_i for some basis vector")
    if not np.array_equal(np.einsum('j,ijm->im', one, tensor) % orders, identity):
        report.add('unit', "e_i*1 != e_i for some basis vector")

    report.checked = {'basis': n, 'pairs': n * n, 'triples': n ** 3}
    return report


# ============================================================================
# MONOMIAL RINGS K[x]
# ============================================================================

Polynomial = Tuple[int, ...]


class MonomialGradedRing:
    """
    K[x] over GF(q) graded by Z or Z_n with deg(x) = γ.

    The component of degree g is spanned by the monomials x^j with
    φ(j) = g, φ(j) = jγ; its exponent set is eventually periodic.
    """

    backend = 'monomial'

    def __init__(self, q: int, group, gamma: int, name: str = 'K[x]'):
        if q < 2 or any(q % p == 0 for p in range(2, int(q ** 0.5) + 1)):
            raise InputError(f"coefficient field order must be prime, got {q}")
        if group.is_finite:
            if group.descriptor().get('type') != 'cyclic':
                raise InputError("monomial rings are graded by Z or a cyclic group")
            gamma = group.check(gamma)
        else:
            gamma = group.check(gamma)
            if gamma < 0:
                raise InputError("generator degree over Z must be >= 0")
        self.q = q
        self.group = group
        self.gamma = gamma
        self.name = name

    # ------------------------------------------------------------------
    # Grading
    # ------------------------------------------------------------------

    def phi(self, j: int) -> int:
        return self.group.power(self.gamma, j) if self.group.is_finite else j * self.gamma

    def exponent_set(self, g: int) -> EventuallyPeriodicSet:
        """{j >= 0 : φ(j) = g}."""
        g = self.group.check(g)
        if not self.group.is_finite:
            if self.gamma == 0:
                return EventuallyPeriodicSet.naturals() if g == 0 else EventuallyPeriodicSet.empty()
            if g >= 0 and g % self.gamma == 0:
                return EventuallyPeriodicSet.from_finite([g // self.gamma])
            return EventuallyPeriodicSet.empty()
        n = self.group.order
        step = n // gcd(self.gamma, n)
        for j in range(step):
            if self.phi(j) == g:
                return EventuallyPeriodicSet.arithmetic(j, step)
        return EventuallyPeriodicSet.empty()

    def component(self, g: int) -> EventuallyPeriodicSet:
        return self.exponent_set(g)

    def component_product(self, g: int, h: int) -> EventuallyPeriodicSet:
        """Exponent set of R_g R_h: the sumset, since K is a field."""
        return self.exponent_set(g) + self.exponent_set(h)

    def product_equals_component(self, g: int, h: int) -> bool:
        return self.component_product(g, h) == self.exponent_set(self.group.mul(g, h))

    def in_support(self, g: int) -> bool:
        return not self.exponent_set(g).is_empty()

    def support(self):
        """Finite list of degrees for Z_n; the periodic set γℕ of degrees over Z."""
        if self.group.is_finite:
            return sort_degrees(self.group, {self.phi(j) for j in range(self.group.order)})
        return EventuallyPeriodicSet.arithmetic(0, self.gamma)

    def degree_window(self) -> List[int]:
        if self.group.is_finite:
            return self.group.elements()
        window = {k * self.gamma for k in range(-2, 3)} | {-1, 0, 1}
        return sort_degrees(self.group, window)

    def is_commutative(self) -> bool:
        return True

    def is_zero_ring(self) -> bool:
        return False

    # ------------------------------------------------------------------
    # Polynomial arithmetic
    # ------------------------------------------------------------------

    def poly(self, coeffs: Iterable[int]) -> Polynomial:
        out = [c % self.q for c in coeffs]
        while out and out[-1] == 0:
            out.pop()
        return tuple(out)

    def monomial(self, j: int, c: int = 1) -> Polynomial:
        return self.poly([0] * j + [c])

    @property
    def one(self) -> Polynomial:
        return (1,)

    def add(self, p: Polynomial, r: Polynomial) -> Polynomial:
        size = max(len(p), len(r))
        return self.poly((p[i] if i < len(p) else 0) + (r[i] if i < len(r) else 0) for i in range(size))

    def mul(self, p: Polynomial, r: Polynomial) -> Polynomial:
        if not p or not r:
            return ()
        return self.poly(np.convolve(np.array(p, dtype=np.int64), np.array(r, dtype=np.int64)).tolist())

    def decompose(self, p: Polynomial) -> Dict[int, Polynomial]:
        parts: Dict[int, List[int]] = {}
        for j, c in enumerate(p):
            if c:
                parts.setdefault(self.phi(j), [0] * len(p))[j] = c
        return {g: self.poly(v) for g, v in parts.items()}

    def render(self, p: Polynomial) -> str:
        terms = []
        for j, c in enumerate(p):
            if not c:
                continue
            mono = '' if j == 0 else ('x' if j == 1 else f"x^{j}")
            coeff = '' if (c == 1 and j) else str(c)
            terms.append(f"{coeff}{mono}")
        return '+'.join(terms) if terms else '0'

    def homogeneous_unit_search(self, g: int, limits: Optional[Limits] = None
                                ) -> Optional[Tuple[Polynomial, Polynomial]]:
        """Units of K[x] are the nonzero constants, all of degree e."""
        return (self.one, self.one) if g == self.group.identity else None

    def label(self, g: int) -> str:
        return self.group.label(g)

    def __repr__(self) -> str:
        return f"MonomialGradedRing(GF({self.q})[x], {self.group.name}, deg x = {self.gamma})"


# ============================================================================
# CONSTRUCTORS
# ============================================================================

def cyclic_ring(n: int, group=None, name: Optional[str] = None) -> FiniteGradedRing:
    """Z_n trivially graded by `group` (the trivial group by default)."""
    group = group or trivial_group()
    return FiniteGradedRing(group, ['1'], [n], [group.identity], {(0, 0): {0: 1}}, [1],
                            name or f"Z{n}")


def quadratic_ring(n: int, c: int, var: str = 'x', name: Optional[str] = None) -> FiniteGradedRing:
    """Z_n[x]/(x² − c) graded by Z_2 with deg x = 1."""
    group = cyclic(2)
    mul = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {0: c % n}}
    return FiniteGradedRing(group, ['1', var], [n, n], [0, 1], mul, [1, 0],
                            name or f"Z{n}[{var}]")


def matrix_ring(group, degree_tuple: Sequence[int], q: int,
                kept: Optional[Iterable[Tuple[int, int]]] = None,
                name: Optional[str] = None) -> FiniteGradedRing:
    """
    Good grading of M_n(GF(q)): deg e_ij = d_i^-1 d_j.

    Args:
        group: Grading group
        degree_tuple: d_1..d_n
        q: Prime field order
        kept: Matrix units (0-based) spanning a subalgebra; all of them when omitted.
            Must contain the diagonal and be closed under e_ij e_jl = e_il.
        name: Display name

    Returns:
        The graded (sub)algebra
    """
    n = len(degree_tuple)
    units = sorted(kept) if kept is not None else [(i, j) for i in range(n) for j in range(n)]
    unit_set = set(units)
    if any((i, i) not in unit_set for i in range(n)):
        raise InputError("kept matrix units must contain the diagonal")
    index = {u: k for k, u in enumerate(units)}
    names = [f"e{i + 1}{j + 1}" if n < 10 else f"e{i + 1},{j + 1}" for i, j in units]
    degrees = [group.mul(group.inv(degree_tuple[i]), degree_tuple[j]) for i, j in units]
    mul: Dict[Tuple[int, int], Dict[int, int]] = {}
    for (i, j), (k, l) in product(units, units):
        if j == k:
            if (i, l) not in unit_set:
                raise InputError("kept matrix units are not closed under multiplication")
            mul[(index[(i, j)], index[(k, l)])] = {index[(i, l)]: 1}
    one = [1 if i == j else 0 for i, j in units]
    ring = FiniteGradedRing(group, names, [q] * len(units), degrees, mul, one,
                            name or f"M{n}(GF({q}))")
    # Column modules need the matrix shape behind the basis
    ring.matrix_units = units
    ring.degree_tuple = tuple(group.check(d) for d in degree_tuple)
    return ring


def group_algebra(source: FiniteGroup, group, projection: Sequence[int], q: int,
                  name: Optional[str] = None) -> FiniteGradedRing:
    """
    GF(q)[H] graded by G through a homomorphism H -> G.

    Args:
        source: The group H whose algebra is built
        group: Grading group G
        projection: Image in G of every element of H
        q: Prime field order
    """
    order = source.order
    for a, b in product(range(order), range(order)):
        if projection[source.mul(a, b)] != group.mul(projection[a], projection[b]):
            raise InputError("projection is not a group homomorphism")
    names = [f"u{h}" for h in range(order)]
    mul = {(a, b): {source.mul(a, b): 1} for a in range(order) for b in range(order)}
    one = [1 if h == source.identity else 0 for h in range(order)]
    return FiniteGradedRing(group, names, [q] * order, list(projection), mul, one,
                            name or f"GF({q})[{source.name}]")


def direct_sum(first: FiniteGradedRing, second: FiniteGradedRing,
               name: Optional[str] = None) -> FiniteGradedRing:
    """R ⊕ S over the same group with componentwise product."""
    if first.group != second.group:
        raise InputError("direct sums need a common grading group")
    clash = set(first.space.names) & set(second.space.names)
    left = [f"{n}.1" if clash else n for n in first.space.names]
    right = [f"{n}.2" if clash else n for n in second.space.names]
    offset = first.dim
    mul: Dict[Tuple[int, int], Dict[int, int]] = {}
    for ring, shift in ((first, 0), (second, offset)):
        for i, j, k in np.argwhere(ring.tensor != 0):
            mul.setdefault((int(i) + shift, int(j) + shift), {})[int(k) + shift] = int(ring.tensor[i, j, k])
    return FiniteGradedRing(first.group, left + right,
                            list(first.space.orders) + list(second.space.orders),
                            list(first.space.degrees) + list(second.space.degrees),
                            mul, list(first.one) + list(second.one),
                            name or f"{first.name}+{second.name}")


def monomial_ring(q: int, group, gamma: int, name: Optional[str] = None) -> MonomialGradedRing:
    return MonomialGradedRing(q, group, gamma, name or f"GF({q})[x]")


def integers_group() -> IntegerGroup:
    return IntegerGroup()
