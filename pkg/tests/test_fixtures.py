"""The example registry and its verification pipeline."""

import pytest

from src.fixtures import (
    FIXTURE_NAMES,
    PROVENANCES,
    build_fixture,
    module_fixtures,
    ring_fixtures,
    verify_fixtures,
)
from src.utils import InputError, Limits


def test_registry_covers_rings_and_modules():
    assert {f.name for f in module_fixtures()} == {'z12i', 'z36i', 'z36i_k3', 'z5i'}
    rings = ring_fixtures()
    assert len(rings) + 4 == len(FIXTURE_NAMES)
    assert all(f.kind == 'ring' for f in rings)


@pytest.mark.parametrize('name', FIXTURE_NAMES)
def test_every_fixture_builds_with_expectations(name):
    fixture = build_fixture(name)
    assert fixture.expectations
    assert all(e.provenance in PROVENANCES for e in fixture.expectations)
    assert fixture.structure is (fixture.module if fixture.module is not None else fixture.ring)


def test_unknown_fixture_rejected(quiet_logger):
    with pytest.raises(InputError):
        build_fixture('nope')
    with pytest.raises(InputError):
        verify_fixtures(quiet_logger, ['m2_z4', 'nope'])


def test_verify_selected_fixtures(quiet_logger):
    table, stats = verify_fixtures(quiet_logger, ['m2_z4', 'dual_z2', 'z12i'])
    assert stats['fixtures'] == 3
    assert stats['mismatches'] == 0
    assert stats['aborted'] == 0
    assert stats['passed'] == stats['checks'] == len(table)
    assert list(table.columns) == ['fixture', 'check', 'provenance', 'expected', 'computed', 'status']
    assert any('✓ Every expectation matched' in line for line in quiet_logger.get_logs())


def test_verify_full_registry(quiet_logger):
    table, stats = verify_fixtures(quiet_logger)
    mismatched = table[table['status'] != 'ok']
    assert mismatched.empty, mismatched.to_string()
    assert stats['fixtures'] == len(FIXTURE_NAMES)


def test_tight_caps_are_reported_as_aborted(quiet_logger):
    table, stats = verify_fixtures(quiet_logger, ['z12i'], Limits(lattice=3))
    assert stats['aborted'] > 0
    assert (table.loc[table['status'] == 'aborted', 'computed'].str.startswith('aborted_cap')).all()
