"""
Utility Functions
=================
Common utilities for logging, error types, enumeration limits and
report formatting.
"""

import json
from collections import Counter
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from src import config
from src.config import LOGS_DIR, LOG_BANNER_WIDTH, LOG_DATE_FORMAT, LOG_FILE_PREFIX, LOG_FILE_STAMP


# ============================================================================
# LOGGING UTILITIES
# ============================================================================

class Logger:
    """
    Run log of one command: timestamped lines kept in memory, echoed to the
    console unless the run is quiet, written under logs/ on request.

    Pipelines lay out their output with `banner` and `step`, and report
    outcomes with `mark`, whose ✓ / ✗ / ! lines `tally` counts until the
    next `clear`.
    """

    MARKS = {'ok': '✓', 'fail': '✗', 'warn': '!'}

    def __init__(self, print_to_console: bool = True):
        self.buffer: List[str] = []
        self.print_to_console = print_to_console
        self._marks: Counter = Counter()

    def log(self, message: str):
        stamp = datetime.now().strftime(LOG_DATE_FORMAT)
        self.buffer.append(f"[{stamp}] {message}")
        if self.print_to_console:
            print(message)

    def banner(self, title: str, leading_blank: bool = False):
        rule = "=" * LOG_BANNER_WIDTH
        self.log(("\n" if leading_blank else "") + rule)
        self.log(title)
        self.log(rule)

    def step(self, number: int, text: str):
        self.log(f"\nSTEP {number}: {text}")

    def mark(self, kind: str, message: str, indent: int = 0):
        """
        Log an outcome line prefixed with its marker.

        Args:
            kind: 'ok', 'fail' or 'warn'
            message: Text after the marker
            indent: Leading spaces, for lines nested under a step
        """
        if kind not in self.MARKS:
            raise ValueError(f"unknown log mark {kind!r}")
        self._marks[kind] += 1
        self.log(f"{' ' * indent}{self.MARKS[kind]} {message}")

    def tally(self) -> Dict[str, int]:
        return {kind: self._marks[kind] for kind in self.MARKS}

    def save(self, log_dir: Path = LOGS_DIR, prefix: str = LOG_FILE_PREFIX) -> Path:
        """Write the buffer to {log_dir}/{prefix}_{stamp}.log and return that path."""
        log_dir.mkdir(exist_ok=True, parents=True)
        log_file = log_dir / f"{prefix}_{datetime.now().strftime(LOG_FILE_STAMP)}.log"
        log_file.write_text('\n'.join(self.buffer), encoding='utf-8')
        if self.print_to_console:
            print(f"\n✓ Logs saved to {log_file}")
        return log_file

    def get_logs(self) -> List[str]:
        return list(self.buffer)

    def clear(self):
        self.buffer.clear()
        self._marks.clear()


# ============================================================================
# ERROR TYPES
# ============================================================================

class GradedError(Exception):
    """Base class for every error raised by the kernel."""


class InputError(GradedError):
    """Malformed input, unknown names, or a violated precondition."""


class ParseError(InputError):
    """A structure file could not be decoded."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class ValidationError(InputError):
    """A structure decoded fine but breaks a ring or module axiom."""

    def __init__(self, message: str, violations: Optional[List[Dict[str, Any]]] = None):
        self.violations = violations or []
        super().__init__(message)


class CapExceeded(GradedError):
    """An enumeration grew past its configured cap."""

    def __init__(self, cap_name: str, limit: int, reached: Optional[int] = None):
        self.cap_name = cap_name
        self.limit = limit
        self.reached = reached
        detail = f" (reached {reached:,})" if reached is not None else " (unbounded)"
        super().__init__(f"{cap_name} cap {limit:,} exceeded{detail}")

    def as_stats(self) -> Dict[str, Any]:
        return {'cap': self.cap_name, 'limit': self.limit, 'reached': self.reached}


class ConsistencyError(GradedError):
    """An implication the engines assert internally did not hold."""


# ============================================================================
# ENUMERATION LIMITS
# ============================================================================

@dataclass(frozen=True)
class Limits:
    """
    Caps handed to every enumeration.

    Defaults are read from the configuration at construction time, so a
    `.env` override or a CLI flag applies uniformly.
    """
    elements: int = field(default_factory=lambda: config.CAP_ELEMENTS)
    lattice: int = field(default_factory=lambda: config.CAP_LATTICE)
    pairs: int = field(default_factory=lambda: config.CAP_PAIRS)

    def check_elements(self, count: int, what: str = 'elements'):
        if count > self.elements:
            raise CapExceeded(what, self.elements, count)

    def check_pairs(self, count: int):
        if count > self.pairs:
            raise CapExceeded('pairs', self.pairs, count)

    def check_lattice(self, count: int):
        if count > self.lattice:
            raise CapExceeded('lattice', self.lattice, count)


def resolve_limits(limits: Optional[Limits]) -> Limits:
    """Return the given limits or fresh defaults."""
    return limits if limits is not None else Limits()


# ============================================================================
# FILE OPERATIONS
# ============================================================================

def save_json(document: Any, output_file: Path) -> Path:
    """
    Save a JSON document with stable formatting.

    Args:
        document: JSON-serialisable object
        output_file: Destination path

    Returns:
        The destination path
    """
    output_file.parent.mkdir(exist_ok=True, parents=True)
    with open(output_file, 'w', encoding='utf-8') as f:
        f.write(dumps_json(document))
    return output_file


def dumps_json(document: Any) -> str:
    """Serialise with the layout every output file uses."""
    return json.dumps(document, indent=2, ensure_ascii=False) + '\n'


# ============================================================================
# FORMATTING UTILITIES
# ============================================================================

def format_percentage(value: float, total: float, decimals: int = 2) -> str:
    """Format as percentage."""
    if total == 0:
        return "0.00%"
    return f"{(value / total * 100):.{decimals}f}%"


# ============================================================================
# PER-INSTANCE CACHES
# ============================================================================

def cached_on(owner: Any, key: Any, compute: Callable[[], Any]) -> Any:
    """
    Memoize an expensive derived value on the structure it belongs to.

    Args:
        owner: Ring or module instance
        key: Hashable cache key (include the Limits in it)
        compute: Zero-argument function producing the value

    Returns:
        The cached value
    """
    cache = owner.__dict__.setdefault('_analysis_cache', {})
    if key not in cache:
        cache[key] = compute()
    return cache[key]
