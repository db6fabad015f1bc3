"""
Shared fixtures for the command-line tests.
"""

import json
import shutil
import tempfile
from io import StringIO
from pathlib import Path

import pandas as pd
import pytest

from src.main.cli import main


# ========================================================================================
# TEMPORARY DIRECTORY FIXTURES
# ========================================================================================

@pytest.fixture
def temp_dir():
    """
    Temporary folder for config and output files, removed after the test.
    """
    temp_path = tempfile.mkdtemp()
    yield temp_path
    shutil.rmtree(temp_path, ignore_errors=True)


# ========================================================================================
# CLI RUNNERS
# ========================================================================================

@pytest.fixture
def run_cli(capsys):
    """
    Run the CLI and return (exit code, stdout).

    Usage: code, out = run_cli("solve", "--beta", "0.3")
    """
    def _run(*argv):
        code = main([str(a) for a in argv])
        return code, capsys.readouterr().out
    return _run


@pytest.fixture
def run_json(run_cli):
    """
    Run a JSON-emitting subcommand that must succeed and return the parsed document.
    """
    def _run(*argv):
        code, out = run_cli(*argv)
        assert code == 0, out
        return json.loads(out)
    return _run


@pytest.fixture
def run_csv(run_cli):
    """
    Run ``sweep`` and return (raw CSV text, DataFrame).
    """
    def _run(*argv):
        code, out = run_cli("sweep", *argv)
        assert code == 0
        return out, pd.read_csv(StringIO(out))
    return _run


# ========================================================================================
# GOLDEN FILES
# ========================================================================================

GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture
def golden_csv(run_cli):
    """
    Stored oracle-engine CSV of a preset sweep. A missing file is generated
    from the oracle engine on first use and kept from then on.
    """
    def _load(preset):
        path = GOLDEN_DIR / f"{preset}.csv"
        if not path.exists():
            code, out = run_cli("sweep", "--preset", preset, "--engine", "oracle")
            assert code == 0
            GOLDEN_DIR.mkdir(exist_ok=True)
            with open(path, "w", encoding="utf-8", newline="") as f:
                f.write(out)
        with open(path, encoding="utf-8", newline="") as f:
            return f.read()
    return _load


# ========================================================================================
# CONFIG FIXTURES
# ========================================================================================

@pytest.fixture
def write_config(temp_dir):
    """
    Write a config file with the given name and content and return its path.
    """
    def _write(name, content):
        path = f"{temp_dir}/{name}"
        with open(path, "w", encoding="utf-8") as f:
            f.write(content)
        return path
    return _write
