"""
Grading Groups
==============
Finite groups given by a multiplication table, plus the integer group used
for Z-gradings. Group elements are plain ints in both backends: table
indices for finite groups, the integers themselves for Z.
"""

import re
from collections import deque
from itertools import product
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence

import numpy as np

from src import config
from src.utils import CapExceeded, InputError

# Subset classes returned by classify_subset
SUBGROUP = 'subgroup'
MONOID_NOT_SUBGROUP = 'monoid_not_subgroup'
NOT_MONOID = 'not_monoid'


# ============================================================================
# FINITE GROUPS
# ============================================================================

class FiniteGroup:
    """
    Group given by its full multiplication table.

    Elements are the indices 0..n-1; `labels[i]` is the printable name of
    element i. The table is checked for closure, associativity, identity and
    inverses on construction.
    """

    is_finite = True

    def __init__(self, labels: Sequence[str], table: Any,
                 descriptor: Optional[Dict[str, Any]] = None):
        """
        Build and validate a table group.

        Args:
            labels: Unique element labels
            table: n x n array, table[g][h] = index of g*h
            descriptor: Serializable description; defaults to a raw table
        """
        labels = [str(label) for label in labels]
        n = len(labels)
        if n == 0:
            raise InputError("a group needs at least one element")
        if n > config.CAP_GROUP_ORDER:
            raise InputError(f"group order {n} exceeds the configured cap {config.CAP_GROUP_ORDER}")
        if len(set(labels)) != n:
            raise InputError("group element labels must be unique")

        try:
            table = np.asarray(table, dtype=np.int64)
        except (TypeError, ValueError) as exc:
            raise InputError(f"group table is not an integer matrix: {exc}") from exc
        if table.shape != (n, n):
            raise InputError(f"group table must be {n}x{n}, got {table.shape}")
        if table.min() < 0 or table.max() >= n:
            raise InputError("group table entry out of range")

        # (xy)z == x(yz) on all triples at once
        idx = np.arange(n)
        left = table[table[:, :, None], idx[None, None, :]]
        right = table[idx[:, None, None], table[None, :, :]]
        if not np.array_equal(left, right):
            x, y, z = (int(v) for v in np.argwhere(left != right)[0])
            raise InputError(f"group table is not associative at ({labels[x]}, {labels[y]}, {labels[z]})")

        identities = [e for e in range(n)
                      if np.array_equal(table[e], idx) and np.array_equal(table[:, e], idx)]
        if not identities:
            raise InputError("group table has no identity element")
        identity = identities[0]

        inverses = np.full(n, -1, dtype=np.int64)
        for g in range(n):
            hits = np.flatnonzero((table[g] == identity) & (table[:, g] == identity))
            if hits.size == 0:
                raise InputError(f"element {labels[g]} has no inverse")
            inverses[g] = hits[0]

        self.labels: List[str] = labels
        self.table = table
        self.identity: int = identity
        self.inverses = inverses
        self._index: Dict[str, int] = {label: i for i, label in enumerate(labels)}
        self._descriptor = descriptor or {
            'type': 'table', 'elements': labels, 'table': table.tolist()}

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.labels)

    def elements(self) -> List[int]:
        return list(range(self.order))

    def contains(self, g: Any) -> bool:
        return isinstance(g, (int, np.integer)) and 0 <= int(g) < self.order

    def check(self, g: Any) -> int:
        if not self.contains(g):
            raise InputError(f"{g!r} is not an element of {self.name}")
        return int(g)

    def mul(self, g: int, h: int) -> int:
        return int(self.table[g, h])

    def inv(self, g: int) -> int:
        return int(self.inverses[g])

    def power(self, g: int, k: int) -> int:
        result = self.identity
        base = g if k >= 0 else self.inv(g)
        for _ in range(abs(k)):
            result = self.mul(result, base)
        return result

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def commutes_on(self, subset: Iterable[int]) -> bool:
        """Whether every pair of elements from `subset` commutes."""
        items = sorted(set(subset))
        return all(self.mul(g, h) == self.mul(h, g) for g in items for h in items)

    # ------------------------------------------------------------------
    # Labels
    # ------------------------------------------------------------------

    def label(self, g: int) -> str:
        return self.labels[g]

    def parse(self, text: Any) -> int:
        """Resolve a label (or an element index given as an int)."""
        if isinstance(text, (int, np.integer)) and not isinstance(text, bool):
            return self.check(int(text))
        key = str(text).strip()
        if key in self._index:
            return self._index[key]
        raise InputError(f"unknown element {text!r} of {self.name}")

    def sort_key(self, g: int):
        return (g,)

    @property
    def name(self) -> str:
        kind = self._descriptor.get('type')
        if kind == 'cyclic':
            return f"Z{self.order}"
        if kind == 'dihedral':
            return f"D{self.order}"
        if kind == 'product':
            return 'x'.join(factor_name(f) for f in self._descriptor['factors'])
        return f"G{self.order}"

    def descriptor(self) -> Dict[str, Any]:
        return dict(self._descriptor)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, FiniteGroup) and self.labels == other.labels
                and np.array_equal(self.table, other.table))

    def __hash__(self) -> int:
        return hash((tuple(self.labels), self.table.tobytes()))

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name})"


class DihedralGroup(FiniteGroup):
    """D_{2n} = <a, b : a^n = b^2 = e, ba = a^-1 b>, element a^i b^j at index i + n*j."""

    _PATTERN = re.compile(r'^(?:a(?:\^?(\d+))?)?\s*\*?\s*(b)?$')

    def __init__(self, n: int):
        if n < 1:
            raise InputError("dihedral parameter n must be positive")
        self.n = n
        size = 2 * n
        table = np.zeros((size, size), dtype=np.int64)
        for i, j, k, l in product(range(n), range(2), range(n), range(2)):
            # (a^i b^j)(a^k b^l) = a^(i + (-1)^j k) b^(j+l)
            exponent = (i + (k if j == 0 else -k)) % n
            table[i + n * j, k + n * l] = exponent + n * ((j + l) % 2)
        labels = [dihedral_label(i, j) for j in range(2) for i in range(n)]
        super().__init__(labels, table, {'type': 'dihedral', 'n': n})

    def element(self, i: int, j: int = 0) -> int:
        return (i % self.n) + self.n * (j % 2)

    def parse(self, text: Any) -> int:
        if isinstance(text, (int, np.integer)) and not isinstance(text, bool):
            return self.check(int(text))
        key = str(text).strip().replace(' ', '')
        if key in ('e', '1', ''):
            return self.identity
        match = self._PATTERN.match(key)
        if match is None or not key:
            raise InputError(f"unknown element {text!r} of {self.name}")
        has_a = key.startswith('a')
        i = int(match.group(1)) if match.group(1) else (1 if has_a else 0)
        j = 1 if match.group(2) else 0
        return self.element(i, j)


def dihedral_label(i: int, j: int) -> str:
    """Normal-form label a^i b^j."""
    if i == 0 and j == 0:
        return 'e'
    parts = []
    if i == 1:
        parts.append('a')
    elif i > 1:
        parts.append(f'a^{i}')
    if j:
        parts.append('b')
    return ' '.join(parts)


def factor_name(descriptor: Dict[str, Any]) -> str:
    kind = descriptor.get('type')
    if kind == 'cyclic':
        return f"Z{descriptor['n']}"
    if kind == 'dihedral':
        return f"D{2 * descriptor['n']}"
    if kind == 'integers':
        return 'Z'
    return 'G'


# ============================================================================
# THE INTEGER GROUP
# ============================================================================

class IntegerGroup:
    """(Z, +). Only attached to gradings with finitely describable support."""

    is_finite = False
    identity = 0
    order = None
    name = 'Z'

    def contains(self, g: Any) -> bool:
        return isinstance(g, (int, np.integer)) and not isinstance(g, bool)

    def check(self, g: Any) -> int:
        if not self.contains(g):
            raise InputError(f"{g!r} is not an integer")
        return int(g)

    def mul(self, g: int, h: int) -> int:
        return g + h

    def inv(self, g: int) -> int:
        return -g

    def power(self, g: int, k: int) -> int:
        return g * k

    def elements(self) -> List[int]:
        raise InputError("the integer group cannot be enumerated")

    def is_abelian(self) -> bool:
        return True

    def commutes_on(self, subset: Iterable[int]) -> bool:
        return True

    def label(self, g: int) -> str:
        return str(g)

    def parse(self, text: Any) -> int:
        if isinstance(text, bool):
            raise InputError(f"{text!r} is not an integer degree")
        try:
            return int(str(text).strip().replace('−', '-'))
        except ValueError as exc:
            raise InputError(f"{text!r} is not an integer degree") from exc

    def sort_key(self, g: int):
        return (abs(g), g)

    def descriptor(self) -> Dict[str, Any]:
        return {'type': 'integers'}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntegerGroup)

    def __hash__(self) -> int:
        return hash('IntegerGroup')

    def __repr__(self) -> str:
        return 'IntegerGroup()'


# ============================================================================
# CONSTRUCTORS
# ============================================================================

def cyclic(n: int) -> FiniteGroup:
    """Z_n with labels "0".."n-1"."""
    if n < 1:
        raise InputError("cyclic group order must be positive")
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    return FiniteGroup([str(i) for i in range(n)], table, {'type': 'cyclic', 'n': n})


def trivial_group() -> FiniteGroup:
    return cyclic(1)


def dihedral(n: int) -> DihedralGroup:
    """Dihedral group of order 2n."""
    return DihedralGroup(n)


def direct_product(first: FiniteGroup, second: FiniteGroup) -> FiniteGroup:
    """G x H with element (g, h) at index g*|H| + h and label "(g,h)"."""
    if not (first.is_finite and second.is_finite):
        raise InputError("direct products are only formed of finite groups")
    m, n = first.order, second.order
    table = np.zeros((m * n, m * n), dtype=np.int64)
    for g1, h1, g2, h2 in product(range(m), range(n), range(m), range(n)):
        table[g1 * n + h1, g2 * n + h2] = first.mul(g1, g2) * n + second.mul(h1, h2)
    labels = [f"({first.label(g)},{second.label(h)})" for g in range(m) for h in range(n)]
    descriptor = {'type': 'product', 'factors': [first.descriptor(), second.descriptor()]}
    return FiniteGroup(labels, table, descriptor)


def from_table(labels: Sequence[str], table: Any) -> FiniteGroup:
    return FiniteGroup(labels, table)


def group_from_descriptor(descriptor: Dict[str, Any]):
    """Build a group from its serialized descriptor."""
    if not isinstance(descriptor, dict) or 'type' not in descriptor:
        raise InputError("group descriptor must be an object with a 'type'")
    kind = descriptor['type']
    if kind == 'cyclic':
        return cyclic(_positive(descriptor, 'n'))
    if kind == 'dihedral':
        return dihedral(_positive(descriptor, 'n'))
    if kind == 'integers':
        return IntegerGroup()
    if kind == 'table':
        if 'elements' not in descriptor or 'table' not in descriptor:
            raise InputError("table group needs 'elements' and 'table'")
        return from_table(descriptor['elements'], descriptor['table'])
    if kind == 'product':
        factors = descriptor.get('factors')
        if not isinstance(factors, list) or len(factors) < 2:
            raise InputError("product group needs at least two 'factors'")
        group = group_from_descriptor(factors[0])
        for factor in factors[1:]:
            group = direct_product(group, group_from_descriptor(factor))
        return group
    raise InputError(f"unknown group type {kind!r}")


def _positive(descriptor: Dict[str, Any], key: str) -> int:
    value = descriptor.get(key)
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise InputError(f"group parameter {key!r} must be a positive integer")
    return value


# ============================================================================
# OPERATIONS
# ============================================================================

def group_product(group, g: Any, h: Any) -> int:
    """Checked product g*h."""
    return group.mul(group.check(g), group.check(h))


def subgroup_closure(group, subset: Iterable[int]) -> FrozenSet[int]:
    """
    Smallest subgroup containing `subset`, by breadth-first products.

    Args:
        group: FiniteGroup or IntegerGroup
        subset: Generating elements

    Returns:
        The subgroup as a frozenset of elements
    """
    gens = {group.check(g) for g in subset}
    if not group.is_finite:
        if gens <= {0}:
            return frozenset({0})
        # every nonzero integer generates an infinite subgroup
        raise CapExceeded('subgroup_closure', config.CAP_GROUP_ORDER)

    seen = {group.identity}
    queue = deque([group.identity])
    gens |= {group.inv(g) for g in gens}
    while queue:
        x = queue.popleft()
        for g in gens:
            y = group.mul(x, g)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def classify_subset(group, subset) -> str:
    """
    Classify a subset as subgroup, monoid but not subgroup, or not a monoid.

    Args:
        group: FiniteGroup or IntegerGroup
        subset: Finite collection of elements, or an EventuallyPeriodicSet
            describing a subset of the naturals inside Z

    Returns:
        One of SUBGROUP, MONOID_NOT_SUBGROUP, NOT_MONOID
    """
    from src.periodic import EventuallyPeriodicSet

    if isinstance(subset, EventuallyPeriodicSet):
        if group.is_finite:
            raise InputError("periodic subsets only describe subsets of Z")
        if subset.is_empty():
            raise InputError("classify_subset needs a nonempty subset")
        if not subset.contains(0) or not (subset + subset).issubset(subset):
            return NOT_MONOID
        # a nonnegative set is inverse-closed only when it is {0}
        return SUBGROUP if subset == EventuallyPeriodicSet.from_finite([0]) else MONOID_NOT_SUBGROUP

    items = {group.check(g) for g in subset}
    if not items:
        raise InputError("classify_subset needs a nonempty subset")
    if group.identity not in items:
        return NOT_MONOID
    if not group.is_finite:
        # a finite set of integers with a nonzero member is never closed under +
        return SUBGROUP if items == {0} else NOT_MONOID
    if any(group.mul(g, h) not in items for g in items for h in items):
        return NOT_MONOID
    if any(group.inv(g) not in items for g in items):
        return MONOID_NOT_SUBGROUP
    return SUBGROUP


def sort_degrees(group, degrees: Iterable[int]) -> List[int]:
    """Degrees in canonical order: index order for tables, (|g|, g) for Z."""
    return sorted(set(degrees), key=group.sort_key)
