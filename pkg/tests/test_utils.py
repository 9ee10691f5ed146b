"""Logger, error types, caps and property reports."""

import json

import pytest

from src.reports import (
    ABORTED,
    HOLDS,
    PropertyReport,
    ValidationReport,
    aborted,
    cap_guarded,
    fails,
    holds,
    not_applicable,
    reports_frame,
)
from src.utils import (
    CapExceeded,
    Limits,
    Logger,
    ParseError,
    ValidationError,
    cached_on,
    dumps_json,
    format_percentage,
    save_json,
)


def test_logger_buffers_and_saves(tmp_path):
    logger = Logger(print_to_console=False)
    logger.log("STEP 1: Loading")
    logger.log("✓ done")
    assert len(logger.get_logs()) == 2
    assert logger.get_logs()[0].endswith("STEP 1: Loading")
    path = logger.save(tmp_path, prefix='unit')
    assert path.name.startswith('unit_')
    assert path.read_text(encoding='utf-8').count('\n') == 1
    logger.clear()
    assert logger.get_logs() == []


def test_logger_layout_and_marks():
    logger = Logger(print_to_console=False)
    logger.banner("FIXTURE VERIFICATION")
    logger.step(2, "z12i")
    logger.mark('ok', "matched", indent=2)
    logger.mark('fail', "mismatch")
    logger.mark('ok', "matched again")
    lines = [line.split('] ', 1)[1] for line in logger.get_logs()]
    assert lines == ["=" * 80, "FIXTURE VERIFICATION", "=" * 80, "\nSTEP 2: z12i",
                     "  ✓ matched", "✗ mismatch", "✓ matched again"]
    assert logger.tally() == {'ok': 2, 'fail': 1, 'warn': 0}
    with pytest.raises(ValueError):
        logger.mark('maybe', "unknown marker")
    logger.clear()
    assert logger.tally() == {'ok': 0, 'fail': 0, 'warn': 0}


def test_parse_error_carries_position():
    err = ParseError("unexpected token", 3, 7)
    assert (err.line, err.column) == (3, 7)
    assert str(err) == "line 3, column 7: unexpected token"
    assert str(ParseError("bad bytes")) == "bad bytes"


def test_cap_exceeded():
    err = CapExceeded('lattice', 10, 11)
    assert err.as_stats() == {'cap': 'lattice', 'limit': 10, 'reached': 11}
    assert 'lattice cap 10 exceeded' in str(err)
    with pytest.raises(CapExceeded):
        Limits(elements=5).check_elements(6)
    Limits(elements=5).check_elements(5)


def test_json_helpers(tmp_path):
    document = {'b': [1, 2], 'a': 'α'}
    text = dumps_json(document)
    assert text.endswith('\n') and 'α' in text
    path = save_json(document, tmp_path / 'nested' / 'out.json')
    assert json.loads(path.read_text(encoding='utf-8')) == document


def test_format_percentage():
    assert format_percentage(1, 4) == '25.00%'
    assert format_percentage(0, 0) == '0.00%'


def test_cached_on_computes_once():
    class Owner:
        pass

    calls = []
    owner = Owner()
    for _ in range(3):
        value = cached_on(owner, 'key', lambda: calls.append(1) or 42)
    assert value == 42 and len(calls) == 1


# ============================================================================
# REPORTS
# ============================================================================

def test_report_helpers():
    report = holds('is_weak', 'strong', witness={'degree': '1'})
    assert report.holds and report.decided and report.outcome == 'strong'
    assert fails('is_weak').outcome == 'fails'
    skipped = not_applicable('is_semi_uniform_ring', 'infinite lattice')
    assert not skipped.decided and skipped.witness['reason'] == 'infinite lattice'
    with pytest.raises(ValueError):
        PropertyReport('x', 'maybe')


def test_cap_guarded_turns_caps_into_aborted_reports():
    @cap_guarded('capped_check')
    def capped_check():
        raise CapExceeded('elements', 1, 2)

    report = capped_check()
    assert report.verdict == ABORTED
    assert report.stats == {'cap': 'elements', 'limit': 1, 'reached': 2}
    assert aborted('capped_check', CapExceeded('pairs', 3)).stats['reached'] is None


def test_reports_frame():
    frame = reports_frame([holds('a'), fails('b', witness={'degree': '-1'})])
    assert frame['verdict'].tolist() == [HOLDS, 'fails']
    assert frame['witness'].tolist() == ['', 'degree=-1']


def test_validation_report():
    report = ValidationReport('R')
    assert report.valid
    report.add('unit', '1*e_i != e_i')
    report.add('grading', 'x*x has the wrong degree')
    with pytest.raises(ValidationError) as info:
        report.raise_if_invalid()
    assert '(+1 more)' in str(info.value)
    assert len(info.value.violations) == 2
    assert report.to_dict()['valid'] is False
