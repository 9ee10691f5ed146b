"""
Graded Rings and Modules
========================
Exact, enumeration-based checks of group-graded rings and modules.

Modules:
- config: Configuration constants
- utils: Logging, error types, enumeration limits
- groups: Finite and infinite cyclic grading groups
- periodic: Eventually periodic subsets of the naturals
- additive: Graded additive groups and subgroup closure
- rings: Finite and monomial graded rings
- ring_predicates: Gradings classified (weak, strong, crossed, ...)
- modules: Graded modules, submodules, quotients and homomorphisms
- module_predicates: Prime, essential and semi-essential submodules
- fixtures: Registry of worked examples with expected verdicts
- harness: Seeded generators and the implication suite
- serialization: Structure files and their canonical form
- cli: Command-line interface
"""

__version__ = "1.0.0"

# Import key classes and functions for easier access
from src.utils import Logger
from src.rings import FiniteGradedRing, MonomialGradedRing
from src.modules import FiniteGradedModule
from src.fixtures import build_fixture, verify_fixtures
from src.harness import GeneratorParams, run_implication_suite

__all__ = [
    'Logger',
    'FiniteGradedRing',
    'MonomialGradedRing',
    'FiniteGradedModule',
    'build_fixture',
    'verify_fixtures',
    'GeneratorParams',
    'run_implication_suite',
]
