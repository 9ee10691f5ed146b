"""
Configuration Constants
=======================
All configuration parameters for the graded-structures kernel.
Caps, fuzz defaults and output locations live here so that every command
and every predicate reads the same numbers.
"""

import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# ============================================================================
# PROJECT STRUCTURE
# ============================================================================

# Base directories
PROJECT_ROOT = Path(__file__).parent.parent
LOGS_DIR = Path(os.getenv('GRADED_LOGS_DIR', PROJECT_ROOT / 'logs'))
REPORTS_DIR = Path(os.getenv('GRADED_REPORTS_DIR', PROJECT_ROOT / 'reports'))
REPLAY_DIR = REPORTS_DIR / 'replays'

# Ensure all directories exist
for directory in [LOGS_DIR, REPORTS_DIR, REPLAY_DIR]:
    directory.mkdir(exist_ok=True, parents=True)

# ============================================================================
# ENUMERATION CAPS
# ============================================================================

# Largest element set any closure or scan may materialize
CAP_ELEMENTS = int(os.getenv('GRADED_CAP_ELEMENTS', 100_000))

# Largest submodule / ideal lattice enumerated before giving up
CAP_LATTICE = int(os.getenv('GRADED_CAP_LATTICE', 10_000))

# Largest element-pair scan (zero divisors, units, regularity)
CAP_PAIRS = int(os.getenv('GRADED_CAP_PAIRS', 25_000_000))

# Largest group accepted by the table constructors
CAP_GROUP_ORDER = int(os.getenv('GRADED_CAP_GROUP_ORDER', 64))

# Rings up to this size are cross-checked against a full inverse scan
ORACLE_RING_SIZE = int(os.getenv('GRADED_ORACLE_RING_SIZE', 5_000))

# Window on which periodic-set operations are compared with brute force
PERIODIC_ORACLE_WINDOW = 200

# ============================================================================
# FIXTURE SETTINGS
# ============================================================================

# Coefficient field GF(q) used by the matrix fixtures
MATRIX_FIELD_ORDER = int(os.getenv('GRADED_MATRIX_FIELD_ORDER', 2))

# Coefficient field of the monomial fixtures
MONOMIAL_FIELD_ORDER = 2

# ============================================================================
# FUZZ DEFAULTS
# ============================================================================

DEFAULT_SEED = int(os.getenv('GRADED_DEFAULT_SEED', 20240611))
DEFAULT_RING_COUNT = 200
DEFAULT_MODULE_COUNT = 60

# Generated structures stay below these sizes so exhaustive checks stay cheap
GENERATOR_MAX_GROUP_ORDER = 8
GENERATOR_MAX_BASIS = 9
GENERATOR_MAX_RING_SIZE = 2_048
GENERATOR_MAX_MODULE_SIZE = 1_296
GENERATOR_PRIMES = (2, 3)

# Relative weights of the ring families
RING_FAMILY_WEIGHTS = {
    'group_algebra': 3,
    'good_grading': 4,
    'quadratic': 3,
    'monomial': 2,
    'trivial': 2,
    'direct_sum': 1,
}

# Relative weights of the module families
MODULE_FAMILY_WEIGHTS = {
    'regular': 3,
    'column': 2,
    'gaussian_pair': 3,
    'quotient': 1,
    'restriction': 1,
}

# Submodules rM (r in R_e) inspected per module when testing inheritance
HEREDITARY_SUBMODULE_LIMIT = 12

# Per-instance sampling of the implication suite
SUITE_SUBMODULES = 8        # nonzero submodules beyond the named ones
SUITE_PAIR_SUBMODULES = 5   # submodules combined into ordered pairs
SUITE_PRIMES = 4            # nonzero primes paired with submodules
SUITE_QUOTIENTS = 2         # quotients and projections per module
SUITE_RING_MAPS = 4         # right multiplications by elements of R_e
SUITE_MAP_RING_SIZE = 1_296
SUITE_IDEAL_SAMPLES = 32    # principal ideals tried by the avoidance check
SUITE_MAX_REPLAYS = 5       # replay files written per violated entry

# ============================================================================
# CLI EXIT CODES
# ============================================================================

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT_ERROR = 2
EXIT_ABORTED_CAP = 3

# ============================================================================
# LOGGING SETTINGS
# ============================================================================

LOG_DATE_FORMAT = '%Y-%m-%d %H:%M:%S'
LOG_FILE_STAMP = '%Y%m%d_%H%M%S'
LOG_BANNER_WIDTH = 80
LOG_FILE_PREFIX = 'graded_run'
VERIFY_LOG_PREFIX = 'verify_paper'
FUZZ_LOG_PREFIX = 'fuzz_log'
