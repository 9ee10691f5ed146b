"""
Reports
=======
Verdict records produced by every predicate and validator, with their
table (pandas) and JSON renderings.
"""

from dataclasses import dataclass, field
from functools import wraps
from typing import Any, Callable, Dict, List, Optional

import pandas as pd

from src.utils import CapExceeded, ValidationError

HOLDS = 'holds'
FAILS = 'fails'
ABORTED = 'aborted_cap'
NOT_APPLICABLE = 'not_applicable'

VERDICTS = (HOLDS, FAILS, ABORTED, NOT_APPLICABLE)


# ============================================================================
# PROPERTY REPORT
# ============================================================================

@dataclass
class PropertyReport:
    """
    Outcome of one predicate.

    `value` carries class-valued answers (e.g. "first_strong"); `witness`
    is a JSON-ready certificate; `vacuous` marks verdicts that hold only
    because the quantifier ranged over nothing.
    """
    name: str
    verdict: str
    value: Any = None
    witness: Dict[str, Any] = field(default_factory=dict)
    stats: Dict[str, Any] = field(default_factory=dict)
    vacuous: bool = False

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS

    @property
    def fails(self) -> bool:
        return self.verdict == FAILS

    @property
    def aborted(self) -> bool:
        return self.verdict == ABORTED

    @property
    def decided(self) -> bool:
        return self.verdict in (HOLDS, FAILS)

    @property
    def outcome(self) -> Any:
        """The value when one is set, else the verdict."""
        return self.value if self.value is not None else self.verdict

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'verdict': self.verdict,
            'value': self.value,
            'witness': self.witness,
            'stats': self.stats,
            'vacuous': self.vacuous,
        }

    def to_row(self) -> Dict[str, Any]:
        witness = '; '.join(f"{k}={v}" for k, v in self.witness.items())
        return {
            'predicate': self.name,
            'verdict': self.verdict,
            'value': '' if self.value is None else str(self.value),
            'witness': witness,
            'vacuous': 'yes' if self.vacuous else '',
        }


def holds(name: str, value: Any = None, witness: Optional[Dict] = None,
          stats: Optional[Dict] = None, vacuous: bool = False) -> PropertyReport:
    return PropertyReport(name, HOLDS, value, witness or {}, stats or {}, vacuous)


def fails(name: str, value: Any = None, witness: Optional[Dict] = None,
          stats: Optional[Dict] = None) -> PropertyReport:
    return PropertyReport(name, FAILS, value, witness or {}, stats or {})


def not_applicable(name: str, reason: str) -> PropertyReport:
    return PropertyReport(name, NOT_APPLICABLE, None, {'reason': reason})


def aborted(name: str, error: CapExceeded) -> PropertyReport:
    return PropertyReport(name, ABORTED, None, {}, error.as_stats())


def cap_guarded(name: str) -> Callable:
    """Turn a CapExceeded escaping the predicate into an aborted_cap report."""
    def decorator(func: Callable[..., PropertyReport]) -> Callable[..., PropertyReport]:
        @wraps(func)
        def wrapper(*args, **kwargs) -> PropertyReport:
            try:
                return func(*args, **kwargs)
            except CapExceeded as exc:
                return aborted(name, exc)
        return wrapper
    return decorator


# ============================================================================
# VALIDATION REPORT
# ============================================================================

@dataclass
class ValidationReport:
    """Axiom check of a ring or module: empty violation list means valid."""
    subject: str
    violations: List[Dict[str, Any]] = field(default_factory=list)
    checked: Dict[str, int] = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return not self.violations

    def add(self, kind: str, detail: str, **extra):
        self.violations.append({'kind': kind, 'detail': detail, **extra})

    def raise_if_invalid(self):
        if self.violations:
            first = self.violations[0]
            raise ValidationError(
                f"{self.subject} is invalid: {first['kind']}: {first['detail']}"
                + (f" (+{len(self.violations) - 1} more)" if len(self.violations) > 1 else ''),
                self.violations)

    def to_dict(self) -> Dict[str, Any]:
        return {'subject': self.subject, 'valid': self.valid,
                'violations': self.violations, 'checked': self.checked}


# ============================================================================
# RENDERING
# ============================================================================

def reports_frame(reports: List[PropertyReport]) -> pd.DataFrame:
    """One row per report, in the given order."""
    columns = ['predicate', 'verdict', 'value', 'witness', 'vacuous']
    return pd.DataFrame([r.to_row() for r in reports], columns=columns)


def render_frame(frame: pd.DataFrame) -> str:
    if frame.empty:
        return '(no rows)'
    return frame.to_string(index=False)

