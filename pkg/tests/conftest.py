"""
Shared Test Fixtures
====================
Registry fixtures are built once per session; the caps stay at their
configured defaults unless a test narrows them.
"""

import json
from pathlib import Path

import pytest

from src.fixtures import build_fixture
from src.utils import Limits, Logger


@pytest.fixture
def limits() -> Limits:
    return Limits()


@pytest.fixture
def quiet_logger() -> Logger:
    return Logger(print_to_console=False)


@pytest.fixture(scope='session')
def fixture_of():
    """Memoized build_fixture, so each registry entry is constructed once."""
    built = {}

    def get(name: str):
        if name not in built:
            built[name] = build_fixture(name)
        return built[name]

    return get


@pytest.fixture
def write_json(tmp_path: Path):
    """Write a JSON document (or raw text) under tmp_path and return the path."""
    def write(name: str, document) -> Path:
        path = tmp_path / name
        text = document if isinstance(document, str) else json.dumps(document, indent=2)
        path.write_text(text, encoding='utf-8')
        return path

    return write
