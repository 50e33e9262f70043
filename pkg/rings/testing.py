"""Helpers for tests that need the bundled ring-spec fixtures."""
from pathlib import Path

from rings.services.parser import parse_ring_spec

FIXTURES_DIR = Path(__file__).resolve().parent / "fixtures"


def fixture_path(name):
    return FIXTURES_DIR / f"{name}.ring"


def fixture_text(name):
    return fixture_path(name).read_text(encoding="utf-8")


def fixture_spec(name, field=None):
    return parse_ring_spec(fixture_text(name), field=field)
