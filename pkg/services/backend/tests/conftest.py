"""
Shared pytest configuration and fixtures for all tests
"""
import json
import os
import sys
from pathlib import Path

import pytest

# Add the backend directory to Python path for imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from core.config import Settings, reset_settings, use_settings  # noqa: E402

GOLDEN_DIR = Path(__file__).parent / "golden"


def pytest_addoption(parser):
    parser.addoption(
        "--regold",
        action="store_true",
        default=False,
        help="Rewrite golden files from the current output instead of comparing",
    )


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch):
    """Start every test from defaults, ignoring HDS_* variables of the caller"""
    for key in list(os.environ):
        if key.startswith("HDS_"):
            monkeypatch.delenv(key, raising=False)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def settings(tmp_path):
    """Deterministic single-threaded settings with the cache off"""
    return use_settings(Settings(
        cache_dir=tmp_path / "cache",
        use_cache=False,
        threads=1,
        seed=0,
        clique_budget=60.0,
    ))


@pytest.fixture
def golden(request):
    """
    Compare a JSON-serialisable value with tests/golden/<name>.json.

    With --regold the file is rewritten and the comparison always passes.
    """
    regold = request.config.getoption("--regold")

    def check(name: str, value):
        path = GOLDEN_DIR / f"{name}.json"
        text = json.dumps(value, sort_keys=True, indent=2) + "\n"
        if regold:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text)
            return
        assert path.exists(), f"missing golden file {path.name}; run with --regold"
        assert json.loads(path.read_text()) == json.loads(text)

    return check
