"""
Command Line Interface
======================
The five commands of the graded-structures tool:

- check: run ring or module predicates on a structure file
- submodules: enumerate the graded submodule lattice and its primes
- verify-paper: check the fixture registry against its expected verdicts
- fuzz: run the implication suite over generated and fixture instances
- fmt: print a structure file in canonical form

Exit codes: 0 success, 1 verify / fuzz mismatch, 2 input error,
3 a cap was hit.
"""

import argparse
import json
import sys
from datetime import datetime
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

import pandas as pd

from src import config
from src.fixtures import verify_fixtures
from src.harness import GeneratorParams, load_suite, run_implication_suite
from src.module_predicates import MODULE_PREDICATES, lattice_counts, submodule_table
from src.modules import module_strongness_class
from src.reports import ABORTED, PropertyReport, aborted, render_frame, reports_frame
from src.ring_predicates import RING_PREDICATES
from src.serialization import format_file, load_structure
from src.utils import CapExceeded, GradedError, InputError, Limits, Logger, dumps_json, save_json

FORMATS = ('table', 'json')


# ============================================================================
# ARGUMENTS
# ============================================================================

def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from exc
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _count(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from exc
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument('--format', choices=FORMATS, default='table',
                        help='Output as a table or as one JSON document')
    shared.add_argument('--cap-elements', type=_positive_int, default=None,
                        help=f'Largest element set to materialize (default {config.CAP_ELEMENTS:,})')
    shared.add_argument('--cap-lattice', type=_positive_int, default=None,
                        help=f'Largest lattice to enumerate (default {config.CAP_LATTICE:,})')
    shared.add_argument('--quiet', action='store_true', help='Do not print log lines')
    shared.add_argument('--no-save-log', action='store_true', help='Do not write a log file')

    parser = argparse.ArgumentParser(
        prog='graded', description='Exact checks on group-graded rings and modules')
    commands = parser.add_subparsers(dest='command', required=True)

    check = commands.add_parser('check', parents=[shared], help='Run predicates on a structure file')
    check.add_argument('file', help='Ring or module JSON file')
    check.add_argument('--predicates', default=None,
                       help='Comma-separated predicate names (default: all that apply)')

    submodules = commands.add_parser('submodules', parents=[shared],
                                     help='Enumerate graded submodules of a module file')
    submodules.add_argument('file', help='Module JSON file')
    submodules.add_argument('--primes', action='store_true', help='Only list graded prime submodules')
    submodules.add_argument('--output', default=None, help='Also save the JSON report here')

    verify = commands.add_parser('verify-paper', parents=[shared],
                                 help='Check the fixture registry')
    verify.add_argument('--example', action='append', default=None,
                        help='Fixture name (repeatable; default: all)')

    fuzz = commands.add_parser('fuzz', parents=[shared], help='Run the implication suite')
    fuzz.add_argument('--seed', type=_count, default=config.DEFAULT_SEED)
    fuzz.add_argument('--count', type=_count, default=config.DEFAULT_RING_COUNT,
                      help='Generated rings added to the fixtures')
    fuzz.add_argument('--module-count', type=_count, default=config.DEFAULT_MODULE_COUNT,
                      help='Generated modules added to the fixtures')
    fuzz.add_argument('--suite', default='default', help="'default' or a JSON file of entry names")
    fuzz.add_argument('--output', default=None, help='Also save the JSON report here')
    fuzz.add_argument('--no-replays', action='store_true', help='Do not write violation replays')

    fmt = commands.add_parser('fmt', parents=[shared], help='Print a structure file canonically')
    fmt.add_argument('file', help='Ring or module JSON file')
    fmt.add_argument('--in-place', action='store_true', help='Rewrite the file instead of printing')
    return parser


def limits_from(args: argparse.Namespace) -> Limits:
    overrides = {'elements': args.cap_elements, 'lattice': args.cap_lattice}
    return Limits(**{k: v for k, v in overrides.items() if v is not None})


def _output_path(name: str) -> Path:
    path = Path(name)
    return path if path.is_absolute() else config.REPORTS_DIR / path


def _emit(document: Any, table: Optional[pd.DataFrame], fmt: str):
    """Print the command result: the JSON document, or the table."""
    if fmt == 'json':
        sys.stdout.write(dumps_json(document))
    else:
        print(render_frame(table))


# ============================================================================
# COMMANDS
# ============================================================================

def _guarded(name: str, run: Callable[[], PropertyReport]) -> PropertyReport:
    try:
        return run()
    except CapExceeded as exc:
        return aborted(name, exc)


def cmd_check(args: argparse.Namespace, logger: Logger, limits: Limits) -> int:
    """Run the requested predicates (all applicable by default) on one structure."""
    loaded = load_structure(Path(args.file))
    structure = loaded.structure
    if loaded.is_module:
        registry = {**MODULE_PREDICATES, 'module_strongness_class': module_strongness_class}
    else:
        registry = dict(RING_PREDICATES)
    names = [n.strip() for n in args.predicates.split(',') if n.strip()] if args.predicates else list(registry)
    unknown = [n for n in names if n not in registry]
    if unknown:
        raise InputError(f"unknown predicate(s) for a {loaded.kind}: {', '.join(unknown)}")

    logger.log(f"Structure: {structure.name} ({loaded.kind})")
    logger.step(1, f"Running {len(names)} predicate(s)...")
    reports = []
    for name in names:
        report = _guarded(name, lambda: registry[name](structure, limits))
        reports.append(report)
        logger.mark('fail' if report.aborted else 'ok', f"{name}: {report.verdict}", indent=2)

    document = {'structure': structure.name, 'kind': loaded.kind,
                'reports': [r.to_dict() for r in reports]}
    _emit(document, reports_frame(reports), args.format)
    capped = [r.name for r in reports if r.verdict == ABORTED]
    if capped:
        logger.mark('fail', f"{len(capped)} predicate(s) stopped at a cap: {', '.join(capped)}")
        return config.EXIT_ABORTED_CAP
    return config.EXIT_OK


def cmd_submodules(args: argparse.Namespace, logger: Logger, limits: Limits) -> int:
    """Lattice, prime sublist and per-submodule essential / semi-essential verdicts."""
    loaded = load_structure(Path(args.file))
    if not loaded.is_module:
        raise InputError("submodules needs a module file")
    module = loaded.module
    logger.log(f"Module: {module.name} (order {module.size:,})")

    logger.step(1, "Enumerating graded submodules...")
    try:
        rows = submodule_table(module, limits)
        counts = lattice_counts(module, limits)
    except CapExceeded as exc:
        logger.mark('fail', f"Enumeration stopped: {exc}")
        document = {'module': module.name, 'verdict': ABORTED, 'stats': exc.as_stats()}
        _emit(document, pd.DataFrame([{'module': module.name, 'verdict': ABORTED, 'cap': str(exc)}]),
              args.format)
        return config.EXIT_ABORTED_CAP
    logger.mark('ok', f"{counts['submodules']} submodules, {counts['primes']} graded primes")

    names = {sub.describe(): key for key, sub in loaded.submodules.items()}
    for row in rows:
        row['name'] = names.get(row['submodule'], '')
    if args.primes:
        rows = [row for row in rows if row['prime']]

    columns = ['submodule', 'name', 'size', 'prime', 'essential', 'semi_essential']
    table = pd.DataFrame(rows, columns=columns)
    document = {'module': module.name, 'counts': counts, 'submodules': table.to_dict('records')}
    if args.output:
        path = save_json(document, _output_path(args.output))
        logger.mark('ok', f"Saved report to {path}")
    _emit(document, table, args.format)
    return config.EXIT_OK


def cmd_verify_paper(args: argparse.Namespace, logger: Logger, limits: Limits) -> int:
    """Registry verdicts against the expected table; 1 on any mismatch."""
    table, stats = verify_fixtures(logger, args.example, limits)
    document = {'stats': stats, 'checks': table.to_dict('records')}
    _emit(document, table, args.format)
    if stats['mismatches']:
        return config.EXIT_MISMATCH
    if stats['aborted']:
        return config.EXIT_ABORTED_CAP
    return config.EXIT_OK


def cmd_fuzz(args: argparse.Namespace, logger: Logger, limits: Limits) -> int:
    """Implication suite; 1 on a theorem violation or a missing counterexample."""
    params = GeneratorParams(seed=args.seed)
    suite = load_suite(args.suite)
    replay_dir = None if args.no_replays else config.REPLAY_DIR
    table, stats = run_implication_suite(params, suite, logger, args.count, args.module_count,
                                         limits, replay_dir)
    document = {'stats': stats, 'implications': json.loads(table.to_json(orient='records'))}
    if args.output:
        path = save_json(document, _output_path(args.output))
        logger.mark('ok', f"Saved report to {path}")
    shown = table[['implication', 'kind', 'applicable', 'confirmed', 'refuted', 'undecided', 'status']]
    _emit(document, shown, args.format)
    return config.EXIT_OK if stats['passed'] else config.EXIT_MISMATCH


def cmd_fmt(args: argparse.Namespace, logger: Logger, limits: Limits) -> int:
    formatted = format_file(Path(args.file), in_place=args.in_place)
    if args.in_place:
        logger.mark('ok', f"Rewrote {args.file}")
    else:
        sys.stdout.write(formatted)
    return config.EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace, Logger, Limits], int]] = {
    'check': cmd_check,
    'submodules': cmd_submodules,
    'verify-paper': cmd_verify_paper,
    'fuzz': cmd_fuzz,
    'fmt': cmd_fmt,
}

LOG_PREFIXES = {
    'verify-paper': config.VERIFY_LOG_PREFIX,
    'fuzz': config.FUZZ_LOG_PREFIX,
}


# ============================================================================
# ENTRY POINT
# ============================================================================

def main(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments, run one command and return its exit code.

    Log lines go to the console only in table mode without --quiet, so a
    JSON run prints exactly one document.
    """
    args = build_parser().parse_args(argv)
    console = not (args.quiet or args.format == 'json' or args.command == 'fmt')
    logger = Logger(print_to_console=console)
    start_time = datetime.now()

    logger.banner(f"GRADED {args.command.upper()}")
    logger.log(f"Started at: {start_time.strftime(config.LOG_DATE_FORMAT)}")
    logger.log("")

    try:
        limits = limits_from(args)
        code = COMMANDS[args.command](args, logger, limits)
    except InputError as e:
        logger.mark('fail', f"ERROR: {e}")
        print(f"error: {e}", file=sys.stderr)
        code = config.EXIT_INPUT_ERROR
    except CapExceeded as e:
        logger.mark('fail', f"ERROR: {e}")
        print(f"error: {e}", file=sys.stderr)
        code = config.EXIT_ABORTED_CAP
    except GradedError as e:
        logger.mark('fail', f"ERROR: {e}")
        if not args.no_save_log:
            logger.save(prefix=LOG_PREFIXES.get(args.command, config.LOG_FILE_PREFIX))
        raise

    duration = (datetime.now() - start_time).total_seconds()
    logger.banner("EXECUTION SUMMARY", leading_blank=True)
    logger.log(f"Total Duration: {duration:.2f} seconds")
    marks = logger.tally()
    logger.log(f"Outcome lines: {marks['ok']} ✓, {marks['fail']} ✗, {marks['warn']} !")
    logger.log(f"Exit code: {code}")
    if not args.no_save_log:
        logger.save(prefix=LOG_PREFIXES.get(args.command, config.LOG_FILE_PREFIX))
    return code
