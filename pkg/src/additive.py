"""
Graded Additive Groups
======================
The additive side shared by rings and modules: a finite direct sum of
cyclic groups Z_{n_i}, each basis vector carrying a degree, together with
exact subgroup arithmetic (closure, sums, intersections, cyclic
decompositions).

Elements are tuples of canonical residues. Subgroups are materialized, per
degree when they are graded, and every closure counts against
`Limits.elements`.
"""

import re
from itertools import product
from math import prod
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src.groups import sort_degrees
from src.utils import InputError, Limits, resolve_limits

Element = Tuple[int, ...]
Operator = Callable[[Element], Element]

_TERM = re.compile(r'^(-?\d+)?\s*\*?\s*(.*)$')


# ============================================================================
# GRADED SPACE
# ============================================================================

class GradedSpace:
    """
    ⊕ Z_{n_i}·b_i with deg(b_i) in a grading group.

    Args:
        group: FiniteGroup or IntegerGroup the degrees live in
        names: Basis vector names (unique)
        orders: Additive orders n_i >= 2
        degrees: Degree of every basis vector
    """

    def __init__(self, group, names: Sequence[str], orders: Sequence[int], degrees: Sequence[int]):
        if not (len(names) == len(orders) == len(degrees)):
            raise InputError("basis names, orders and degrees differ in length")
        if len(set(names)) != len(names):
            raise InputError("basis names must be unique")
        for name, order in zip(names, orders):
            if not isinstance(order, (int, np.integer)) or order < 2:
                raise InputError(f"basis vector {name!r} needs additive order >= 2, got {order!r}")

        self.group = group
        self.names: List[str] = [str(n) for n in names]
        self.orders: Tuple[int, ...] = tuple(int(o) for o in orders)
        self.degrees: Tuple[int, ...] = tuple(group.check(d) for d in degrees)
        self.dim = len(self.names)
        self.orders_array = np.array(self.orders, dtype=np.int64)
        self.zero: Element = (0,) * self.dim

        self._name_index = {name: i for i, name in enumerate(self.names)}
        self._by_degree: Dict[int, List[int]] = {}
        for i, g in enumerate(self.degrees):
            self._by_degree.setdefault(g, []).append(i)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def reduce(self, coords: Iterable[int]) -> Element:
        return tuple(int(c) % n for c, n in zip(coords, self.orders))

    def add(self, x: Element, y: Element) -> Element:
        return tuple((a + b) % n for a, b, n in zip(x, y, self.orders))

    def sub(self, x: Element, y: Element) -> Element:
        return tuple((a - b) % n for a, b, n in zip(x, y, self.orders))

    def neg(self, x: Element) -> Element:
        return tuple((-a) % n for a, n in zip(x, self.orders))

    def scale(self, k: int, x: Element) -> Element:
        return tuple((k * a) % n for a, n in zip(x, self.orders))

    def basis_vector(self, i: int) -> Element:
        vec = [0] * self.dim
        vec[i] = 1
        return tuple(vec)

    def order_of(self, x: Element) -> int:
        k, acc = 1, x
        while any(acc):
            acc = self.add(acc, x)
            k += 1
        return k

    @property
    def size(self) -> int:
        return prod(self.orders)

    # ------------------------------------------------------------------
    # Grading
    # ------------------------------------------------------------------

    def indices(self, g: int) -> List[int]:
        return self._by_degree.get(g, [])

    def basis_degrees(self) -> List[int]:
        """Degrees carrying at least one basis vector, in canonical order."""
        return sort_degrees(self.group, self._by_degree)

    def decompose(self, x: Element) -> Dict[int, Element]:
        """Nonzero homogeneous parts of x keyed by degree."""
        parts: Dict[int, Element] = {}
        for g, idx in self._by_degree.items():
            if any(x[i] for i in idx):
                vec = [0] * self.dim
                for i in idx:
                    vec[i] = x[i]
                parts[g] = tuple(vec)
        return parts

    def degree_of(self, x: Element) -> Optional[int]:
        """Degree of a nonzero homogeneous element; None for zero or mixed elements."""
        parts = self.decompose(x)
        if len(parts) != 1:
            return None
        return next(iter(parts))

    def is_homogeneous(self, x: Element) -> bool:
        return len(self.decompose(x)) <= 1

    def component_size(self, g: int) -> int:
        return prod(self.orders[i] for i in self.indices(g))

    def component_elements(self, g: int, limits: Optional[Limits] = None) -> List[Element]:
        """All elements of degree g (zero included) in canonical order."""
        limits = resolve_limits(limits)
        idx = self.indices(g)
        limits.check_elements(self.component_size(g), 'component')
        elements = []
        for values in product(*(range(self.orders[i]) for i in idx)):
            vec = [0] * self.dim
            for i, v in zip(idx, values):
                vec[i] = v
            elements.append(tuple(vec))
        return sorted(elements, key=self.element_key)

    def all_elements(self, limits: Optional[Limits] = None) -> List[Element]:
        limits = resolve_limits(limits)
        limits.check_elements(self.size, 'elements')
        return sorted(product(*(range(n) for n in self.orders)), key=self.element_key)

    def homogeneous_elements(self, limits: Optional[Limits] = None,
                             nonzero: bool = True) -> List[Tuple[int, Element]]:
        """(degree, element) pairs over every basis degree, canonical order."""
        out = []
        for g in self.basis_degrees():
            for x in self.component_elements(g, limits):
                if nonzero and not any(x):
                    continue
                out.append((g, x))
        return out

    # ------------------------------------------------------------------
    # Ordering and arrays
    # ------------------------------------------------------------------

    @staticmethod
    def element_key(x: Element) -> Tuple[int, ...]:
        """Canonical order: first coordinate varies fastest."""
        return tuple(reversed(x))

    def to_array(self, elements: Sequence[Element]) -> np.ndarray:
        if not elements:
            return np.zeros((0, self.dim), dtype=np.int64)
        return np.array(elements, dtype=np.int64).reshape(len(elements), self.dim)

    def row(self, arr_row: np.ndarray) -> Element:
        return tuple(int(v) for v in arr_row)

    # ------------------------------------------------------------------
    # Text form
    # ------------------------------------------------------------------

    def render(self, x: Element) -> str:
        terms = []
        for i, c in enumerate(x):
            if not c:
                continue
            name = self.names[i]
            if name == '1':
                terms.append(str(c))
            elif c == 1:
                terms.append(name)
            elif name[:1].isalpha():
                terms.append(f"{c}{name}")
            else:
                terms.append(f"{c}*{name}")
        return '+'.join(terms) if terms else '0'

    def parse_element(self, value) -> Element:
        """
        Accept {name: coeff}, a coordinate list, or text such as "2+3i".

        Args:
            value: Element in one of the accepted forms

        Returns:
            Canonical coordinate tuple
        """
        if isinstance(value, dict):
            vec = [0] * self.dim
            for name, coeff in value.items():
                if name not in self._name_index:
                    raise InputError(f"unknown basis name {name!r}")
                if not isinstance(coeff, int) or isinstance(coeff, bool):
                    raise InputError(f"coefficient of {name!r} must be an integer")
                vec[self._name_index[name]] += coeff
            return self.reduce(vec)
        if isinstance(value, (list, tuple)):
            if len(value) != self.dim:
                raise InputError(f"coordinate vector needs {self.dim} entries")
            return self.reduce(value)
        if isinstance(value, int) and not isinstance(value, bool):
            value = str(value)
        if isinstance(value, str):
            return self._parse_text(value)
        raise InputError(f"cannot read an element from {value!r}")

    def _parse_text(self, text: str) -> Element:
        vec = [0] * self.dim
        body = text.replace(' ', '').replace('-', '+-')
        for term in filter(None, body.split('+')):
            match = _TERM.match(term)
            coeff_text, name = match.group(1), match.group(2)
            coeff = 1 if coeff_text is None else int(coeff_text)
            if name.startswith('-'):
                name, coeff = name[1:], -coeff
            name = name or '1'
            if name not in self._name_index:
                raise InputError(f"unknown basis name {name!r} in {text!r}")
            vec[self._name_index[name]] += coeff
        return self.reduce(vec)

    def basis_dicts(self) -> List[Dict]:
        return [{'name': n, 'order': o, 'degree': self.group.label(g)}
                for n, o, g in zip(self.names, self.orders, self.degrees)]

    def element_dict(self, x: Element) -> Dict[str, int]:
        return {self.names[i]: c for i, c in enumerate(x) if c}


# ============================================================================
# SUBGROUP CLOSURE
# ============================================================================

def extend(space: GradedSpace, elements: FrozenSet[Element], x: Element,
           limits: Limits, what: str = 'elements') -> FrozenSet[Element]:
    """
    Subgroup generated by `elements` (already a subgroup) and x.

    Adds one coset of `elements` per multiple of x until the multiples
    re-enter the subgroup.
    """
    if x in elements:
        return elements
    grown = set(elements)
    shift = x
    while shift not in elements:
        grown.update(space.add(e, shift) for e in elements)
        limits.check_elements(len(grown), what)
        shift = space.add(shift, x)
    return frozenset(grown)


def span(space: GradedSpace, generators: Iterable[Element],
         limits: Optional[Limits] = None) -> FrozenSet[Element]:
    """Additive subgroup generated by `generators`."""
    limits = resolve_limits(limits)
    elements = frozenset({space.zero})
    for x in generators:
        elements = extend(space, elements, x, limits)
    return elements


def greedy_generators(space: GradedSpace, elements: FrozenSet[Element]) -> List[Element]:
    """Canonical small generating set: scan in canonical order, keep what is new."""
    limits = Limits(elements=max(len(elements), 1))
    current = frozenset({space.zero})
    gens = []
    for x in sorted(elements, key=space.element_key):
        if x not in current:
            gens.append(x)
            current = extend(space, current, x, limits)
            if len(current) == len(elements):
                break
    return gens


# ============================================================================
# GRADED SUBGROUPS
# ============================================================================

class GradedSubgroup:
    """
    Graded additive subgroup N = ⊕_g N_g, stored as one materialized set per degree.

    The role tag records what the subgroup was built as (additive,
    left_ideal, right_ideal, two_sided_ideal, submodule); it takes no part
    in equality.
    """

    def __init__(self, space: GradedSpace, parts: Dict[int, FrozenSet[Element]],
                 role: str = 'additive'):
        self.space = space
        self.parts: Dict[int, FrozenSet[Element]] = {
            g: frozenset(p) for g, p in parts.items() if len(p) > 1}
        self.role = role

    @classmethod
    def zero(cls, space: GradedSpace, role: str = 'additive') -> 'GradedSubgroup':
        return cls(space, {}, role)

    @classmethod
    def whole(cls, space: GradedSpace, limits: Optional[Limits] = None,
              role: str = 'additive') -> 'GradedSubgroup':
        return cls(space, {g: frozenset(space.component_elements(g, limits))
                           for g in space.basis_degrees()}, role)

    @classmethod
    def from_generators(cls, space: GradedSpace, generators: Iterable[Element],
                        limits: Optional[Limits] = None, role: str = 'additive') -> 'GradedSubgroup':
        """Additive span of the homogeneous parts of `generators`."""
        return close_graded(space, generators, [], limits, role)

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    def part(self, g: int) -> FrozenSet[Element]:
        return self.parts.get(g, frozenset({self.space.zero}))

    def degrees(self) -> List[int]:
        return sort_degrees(self.space.group, self.parts)

    def size(self) -> int:
        return prod(len(p) for p in self.parts.values())

    def is_zero(self) -> bool:
        return not self.parts

    def contains(self, x: Element) -> bool:
        return all(part in self.part(g) for g, part in self.space.decompose(x).items())

    __contains__ = contains

    def issubset(self, other: 'GradedSubgroup') -> bool:
        return all(p <= other.part(g) for g, p in self.parts.items())

    __le__ = issubset

    def is_whole(self) -> bool:
        return all(len(self.part(g)) == self.space.component_size(g)
                   for g in self.space.basis_degrees())

    # ------------------------------------------------------------------
    # Lattice operations
    # ------------------------------------------------------------------

    def sum(self, other: 'GradedSubgroup', limits: Optional[Limits] = None) -> 'GradedSubgroup':
        limits = resolve_limits(limits)
        parts = dict(self.parts)
        for g, p in other.parts.items():
            current = parts.get(g, frozenset({self.space.zero}))
            for x in greedy_generators(self.space, p):
                current = extend(self.space, current, x, limits)
            parts[g] = current
        return GradedSubgroup(self.space, parts, self.role)

    def intersection(self, other: 'GradedSubgroup') -> 'GradedSubgroup':
        return GradedSubgroup(self.space, {g: p & other.part(g) for g, p in self.parts.items()},
                              self.role)

    def __add__(self, other: 'GradedSubgroup') -> 'GradedSubgroup':
        return self.sum(other)

    def __and__(self, other: 'GradedSubgroup') -> 'GradedSubgroup':
        return self.intersection(other)

    # ------------------------------------------------------------------
    # Generators and materialization
    # ------------------------------------------------------------------

    def generators(self) -> List[Element]:
        """Canonical generators, degree by degree."""
        gens = []
        for g in self.degrees():
            gens.extend(greedy_generators(self.space, self.parts[g]))
        return gens

    def homogeneous_elements(self, nonzero: bool = True) -> List[Tuple[int, Element]]:
        out = []
        for g in self.degrees():
            for x in sorted(self.parts[g], key=self.space.element_key):
                if nonzero and not any(x):
                    continue
                out.append((g, x))
        return out

    def elements(self, limits: Optional[Limits] = None) -> List[Element]:
        """Every element of the subgroup (sums of one element per degree)."""
        limits = resolve_limits(limits)
        limits.check_elements(self.size(), 'elements')
        out = [self.space.zero]
        for g in self.degrees():
            out = [self.space.add(x, y) for x in out for y in self.parts[g]]
        return sorted(out, key=self.space.element_key)

    def sort_key(self):
        degree_rank = {g: r for r, g in enumerate(sort_degrees(self.space.group, self.space.degrees))}
        return (self.size(), tuple((degree_rank.get(self.space.degree_of(x), -1), self.space.element_key(x))
                                   for x in self.generators()))

    def describe(self) -> str:
        gens = self.generators()
        if not gens:
            return '0'
        return '<' + ', '.join(self.space.render(x) for x in gens) + '>'

    def to_dict(self) -> Dict:
        return {
            'generators': [self.space.element_dict(x) for x in self.generators()],
            'size': self.size(),
            'role': self.role,
        }

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, GradedSubgroup) and self.space is other.space
                and self.parts == other.parts)

    def __hash__(self) -> int:
        return hash(frozenset(self.parts.items()))

    def __repr__(self) -> str:
        return f"GradedSubgroup({self.describe()}, size={self.size()})"


class PlainSubgroup:
    """Additive subgroup with no grading assumption, materialized as one set."""

    def __init__(self, space: GradedSpace, elements: FrozenSet[Element], role: str = 'additive'):
        self.space = space
        self.elements = frozenset(elements)
        self.role = role

    def size(self) -> int:
        return len(self.elements)

    def is_zero(self) -> bool:
        return len(self.elements) == 1

    def contains(self, x: Element) -> bool:
        return x in self.elements

    __contains__ = contains

    def issubset(self, other) -> bool:
        return all(other.contains(x) for x in self.elements)

    def is_graded(self) -> bool:
        """Whether every member's homogeneous parts are members."""
        return all(part in self.elements
                   for x in self.elements for part in self.space.decompose(x).values())

    def homogeneous_part(self, g: int) -> FrozenSet[Element]:
        """N ∩ M_g."""
        return frozenset(x for x in self.elements
                         if not any(x) or self.space.degree_of(x) == g)

    def to_graded(self) -> GradedSubgroup:
        if not self.is_graded():
            raise InputError("subgroup is not graded")
        return GradedSubgroup(self.space, {g: self.homogeneous_part(g)
                                           for g in self.space.basis_degrees()}, self.role)

    def generators(self) -> List[Element]:
        return greedy_generators(self.space, self.elements)

    def describe(self) -> str:
        gens = self.generators()
        return '<' + ', '.join(self.space.render(x) for x in gens) + '>' if gens else '0'

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PlainSubgroup) and self.space is other.space \
            and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)


def close_graded(space: GradedSpace, generators: Iterable[Element], operators: Sequence[Operator],
                 limits: Optional[Limits] = None, role: str = 'additive') -> GradedSubgroup:
    """
    Smallest graded subgroup containing the homogeneous parts of `generators`
    and closed under every operator.

    Operators must be additive; they are applied to each newly added
    generator, which is enough because a subgroup is the span of its
    generators.
    """
    limits = resolve_limits(limits)
    parts: Dict[int, FrozenSet[Element]] = {}
    queue: List[Element] = []
    materialized = 0

    def admit(x: Element):
        nonlocal materialized
        for g, piece in space.decompose(x).items():
            current = parts.get(g, frozenset({space.zero}))
            if piece in current:
                continue
            grown = extend(space, current, piece, limits)
            materialized += len(grown) - len(current)
            limits.check_elements(materialized, 'closure')
            parts[g] = grown
            queue.append(piece)

    for x in generators:
        admit(x)
    while queue:
        x = queue.pop()
        for op in operators:
            admit(op(x))
    return GradedSubgroup(space, parts, role)


def close_plain(space: GradedSpace, generators: Iterable[Element], operators: Sequence[Operator],
                limits: Optional[Limits] = None, role: str = 'additive') -> PlainSubgroup:
    """Same closure without splitting into homogeneous parts."""
    limits = resolve_limits(limits)
    elements = frozenset({space.zero})
    queue: List[Element] = []

    def admit(x: Element):
        nonlocal elements
        if x not in elements:
            elements = extend(space, elements, x, limits, 'closure')
            queue.append(x)

    for x in generators:
        admit(x)
    while queue:
        x = queue.pop()
        for op in operators:
            admit(op(x))
    return PlainSubgroup(space, elements, role)


# ============================================================================
# CYCLIC DECOMPOSITION
# ============================================================================

def _order_modulo(space: GradedSpace, x: Element, subgroup: FrozenSet[Element]) -> int:
    k, acc = 1, x
    while acc not in subgroup:
        acc = space.add(acc, x)
        k += 1
    return k


def cyclic_decomposition(space: GradedSpace, group: FrozenSet[Element],
                         modulo: Optional[FrozenSet[Element]] = None,
                         limits: Optional[Limits] = None) -> List[Tuple[Element, int]]:
    """
    Split A/N into a direct sum of cyclic groups.

    Repeatedly takes the element of largest order modulo what is already
    spanned and lifts it to a representative of exactly that order modulo N;
    such a lift exists at every step, which makes the sum direct.

    Args:
        space: Ambient space
        group: The subgroup A, materialized
        modulo: Subgroup N ⊆ A (zero when omitted)
        limits: Enumeration caps

    Returns:
        (representative, order) pairs with A/N = ⊕ <rep + N>
    """
    limits = resolve_limits(limits)
    modulo = modulo if modulo is not None else frozenset({space.zero})
    spanned = modulo
    candidates = sorted(group, key=space.element_key)
    basis: List[Tuple[Element, int]] = []
    while len(spanned) < len(group):
        best, best_order = None, 0
        for y in candidates:
            if y in spanned:
                continue
            order = _order_modulo(space, y, spanned)
            if order > best_order:
                best, best_order = y, order
        lift = best
        for s in sorted(spanned, key=space.element_key):
            z = space.sub(best, s)
            if _order_modulo(space, z, modulo) == best_order:
                lift = z
                break
        basis.append((lift, best_order))
        spanned = extend(space, spanned, lift, limits)
    return basis


def coordinate_table(space: GradedSpace, basis: Sequence[Tuple[Element, int]],
                     modulo: Optional[FrozenSet[Element]] = None) -> Dict[Element, Tuple[int, ...]]:
    """Map every element of ⊕<rep> + N to its coefficients on the decomposition."""
    modulo = modulo if modulo is not None else frozenset({space.zero})
    table: Dict[Element, Tuple[int, ...]] = {}
    for coeffs in product(*(range(order) for _, order in basis)):
        rep = space.zero
        for c, (x, _) in zip(coeffs, basis):
            rep = space.add(rep, space.scale(c, x))
        for n in modulo:
            table[space.add(rep, n)] = coeffs
    return table
