"""
Eventually Periodic Sets
========================
Subsets of the naturals that are periodic from some threshold on. They are
the exponent sets of monomial-ring components, so every component question
about K[x] reduces to arithmetic on these sets.
"""

from dataclasses import dataclass
from math import gcd
from typing import Callable, FrozenSet, Iterable, List, Optional

import numpy as np


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _divisors(n: int) -> List[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


# ============================================================================
# EVENTUALLY PERIODIC SET
# ============================================================================

@dataclass(frozen=True)
class EventuallyPeriodicSet:
    """
    S ⊆ ℕ with j ∈ S ⟺ (j < threshold ? j ∈ exceptional : j mod period ∈ residues).

    Instances are always canonical (minimal period, then minimal threshold),
    so dataclass equality is set equality. Build through `make` or one of
    the named constructors.
    """
    threshold: int
    period: int
    residues: FrozenSet[int]
    exceptional: FrozenSet[int]

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def make(cls, threshold: int, period: int, residues: Iterable[int],
             exceptional: Iterable[int] = ()) -> 'EventuallyPeriodicSet':
        """Canonicalize an arbitrary (threshold, period, residues, exceptional) description."""
        if threshold < 0 or period < 1:
            raise ValueError("threshold must be >= 0 and period >= 1")
        residues = {r % period for r in residues}
        exceptional = {j for j in exceptional if 0 <= j < threshold}

        for d in _divisors(period):
            if all(((r + d) % period in residues) == (r in residues) for r in range(period)):
                residues = {r % d for r in residues}
                period = d
                break

        while threshold > 0:
            j = threshold - 1
            if ((j % period) in residues) != (j in exceptional):
                break
            exceptional.discard(j)
            threshold = j

        return cls(threshold, period, frozenset(residues), frozenset(exceptional))

    @classmethod
    def empty(cls) -> 'EventuallyPeriodicSet':
        return cls.make(0, 1, ())

    @classmethod
    def naturals(cls) -> 'EventuallyPeriodicSet':
        return cls.make(0, 1, (0,))

    @classmethod
    def from_finite(cls, values: Iterable[int]) -> 'EventuallyPeriodicSet':
        values = [v for v in values if v >= 0]
        threshold = max(values) + 1 if values else 0
        return cls.make(threshold, 1, (), values)

    @classmethod
    def arithmetic(cls, start: int, step: int) -> 'EventuallyPeriodicSet':
        """{start + k*step : k >= 0}."""
        if step == 0:
            return cls.from_finite([start])
        return cls.make(start, step, (start,), ())

    @classmethod
    def from_predicate(cls, threshold: int, period: int,
                       member: Callable[[int], bool]) -> 'EventuallyPeriodicSet':
        """Sample `member` on [0, threshold + period) assuming the stated periodicity."""
        exceptional = [j for j in range(threshold) if member(j)]
        residues = [j % period for j in range(threshold, threshold + period) if member(j)]
        return cls.make(threshold, period, residues, exceptional)

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    def contains(self, j: int) -> bool:
        if j < 0:
            return False
        if j < self.threshold:
            return j in self.exceptional
        return (j % self.period) in self.residues

    __contains__ = contains

    def is_empty(self) -> bool:
        return not self.residues and not self.exceptional

    def is_finite(self) -> bool:
        return not self.residues

    def min(self) -> Optional[int]:
        if self.exceptional:
            return min(self.exceptional)
        if not self.residues:
            return None
        return min(self.threshold + ((r - self.threshold) % self.period) for r in self.residues)

    def elements_below(self, bound: int) -> List[int]:
        return [j for j in range(max(bound, 0)) if self.contains(j)]

    def membership_vector(self, bound: int) -> np.ndarray:
        """Boolean mask of membership on [0, bound)."""
        return np.array([self.contains(j) for j in range(bound)], dtype=bool)

    def issubset(self, other: 'EventuallyPeriodicSet') -> bool:
        return (self & other) == self

    # ------------------------------------------------------------------
    # Set algebra
    # ------------------------------------------------------------------

    def _combine(self, other: 'EventuallyPeriodicSet',
                 op: Callable[[bool, bool], bool]) -> 'EventuallyPeriodicSet':
        threshold = max(self.threshold, other.threshold)
        period = lcm(self.period, other.period)
        return EventuallyPeriodicSet.from_predicate(
            threshold, period, lambda j: op(self.contains(j), other.contains(j)))

    def union(self, other: 'EventuallyPeriodicSet') -> 'EventuallyPeriodicSet':
        return self._combine(other, lambda a, b: a or b)

    def intersection(self, other: 'EventuallyPeriodicSet') -> 'EventuallyPeriodicSet':
        return self._combine(other, lambda a, b: a and b)

    def difference(self, other: 'EventuallyPeriodicSet') -> 'EventuallyPeriodicSet':
        return self._combine(other, lambda a, b: a and not b)

    def complement(self) -> 'EventuallyPeriodicSet':
        return EventuallyPeriodicSet.naturals().difference(self)

    def sumset(self, other: 'EventuallyPeriodicSet') -> 'EventuallyPeriodicSet':
        """
        {a + b : a ∈ self, b ∈ other}.

        Past T_A + T_B + 2·lcm(P_A, P_B) membership repeats with period
        lcm(P_A, P_B), so a brute-force pass over one more period is exact.
        """
        if self.is_empty() or other.is_empty():
            return EventuallyPeriodicSet.empty()
        period = lcm(self.period, other.period)
        threshold = self.threshold + other.threshold + 2 * period
        bound = threshold + period
        left = np.flatnonzero(self.membership_vector(bound))
        right = np.flatnonzero(other.membership_vector(bound))
        sums = (left[:, None] + right[None, :]).ravel()
        hits = set(int(s) for s in sums[sums < bound])
        return EventuallyPeriodicSet.from_predicate(threshold, period, hits.__contains__)

    def shift(self, k: int) -> 'EventuallyPeriodicSet':
        """{j + k : j ∈ self} for k >= 0."""
        return self.sumset(EventuallyPeriodicSet.from_finite([k]))

    __or__ = union
    __and__ = intersection
    __add__ = sumset

    # ------------------------------------------------------------------
    # Display and serialization
    # ------------------------------------------------------------------

    def describe(self, terms: int = 4) -> str:
        """Readable form such as "{3,6,9,...}"."""
        if self.is_empty():
            return '{}'
        if self.is_finite():
            return '{' + ','.join(str(j) for j in sorted(self.exceptional)) + '}'
        shown = []
        j = 0
        while len(shown) < terms + len(self.exceptional):
            if self.contains(j):
                shown.append(j)
            j += 1
        return '{' + ','.join(str(v) for v in shown) + ',...}'

    def to_dict(self) -> dict:
        return {
            'threshold': self.threshold,
            'period': self.period,
            'residues': sorted(self.residues),
            'exceptional': sorted(self.exceptional),
        }

    def __repr__(self) -> str:
        return f"EventuallyPeriodicSet({self.describe()})"
