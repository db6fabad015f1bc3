"""
Shared pytest fixtures for the file IO test suite.
"""

import shutil
import tempfile
from pathlib import Path
from unittest.mock import MagicMock

import numpy as np
import pandas as pd
import pytest

from src.main.file_io import FileIOInterface


# ========================================================================================
# TEMPORARY DIRECTORY FIXTURES
# ========================================================================================

@pytest.fixture
def temp_dir():
    """
    Creates a temporary folder for testing, removed after the test.
    """
    temp_path = tempfile.mkdtemp()
    yield temp_path
    shutil.rmtree(temp_path, ignore_errors=True)


# ========================================================================================
# SAMPLE DATA FIXTURES
# ========================================================================================

@pytest.fixture
def sweep_frame():
    """A small sweep table with a failed row."""
    return pd.DataFrame({
        "deltap": [-1.0, 0.0, 1.0],
        "abs_phi1": [0.5, 1.0 / 3.0, np.nan],
        "status": ["ok", "ok", "error"],
        "message": ["", "", "Common denominator N vanishes"],
    })


@pytest.fixture
def solve_document():
    """A nested result document with a non-finite entry."""
    return {
        "command": "solve",
        "parameters": {"beta": 0.1, "nu_fsr": 250.0},
        "derived": {"g": 10.0, "cooperativity": float("inf")},
        "warnings": [],
    }


# ========================================================================================
# MOCK FIXTURES
# ========================================================================================

@pytest.fixture
def mock_file_context():
    """
    Reusable mock file object with context manager support.
    """
    mock_file = MagicMock()
    mock_file.read.return_value = b"beta=0.5\n"
    mock_file.__enter__ = MagicMock(return_value=mock_file)
    mock_file.__exit__ = MagicMock(return_value=None)
    yield mock_file
    mock_file.reset_mock()


@pytest.fixture
def mock_upath(mock_file_context):
    """Mock UPath for a run configuration file."""
    mock_upath = MagicMock()
    mock_upath.path = "/runs/antinode-third.cfg"
    mock_upath.suffix = ".cfg"
    mock_upath.exists.return_value = True
    mock_fs = MagicMock()
    mock_fs.open.return_value.__enter__.return_value = mock_file_context
    mock_upath.fs = mock_fs
    return mock_upath


@pytest.fixture
def mock_instantiate(mocker):
    """
    Replace FileIOInterface._instantiate with a mock returning a mock BaseFileIO.

    Usage:
        def test_something(mock_instantiate):
            mock_instantiate['fileio']._fread.return_value = "data"
    """
    mock_instantiate_patch = mocker.patch.object(FileIOInterface, "_instantiate")
    mock_fileio = MagicMock()
    mock_fileio._fexists.return_value = True
    mock_fileio._fread.return_value = "default test data"
    mock_fileio._fwrite.return_value = None
    mock_instantiate_patch.return_value = mock_fileio
    return {"mock": mock_instantiate_patch, "fileio": mock_fileio}


# ========================================================================================
# PARAMETRIZED FIXTURES
# ========================================================================================

@pytest.fixture
def path_for(temp_dir):
    """Path of a file named ``name`` in the temporary folder."""
    def _path(name):
        return str(Path(temp_dir) / name)
    return _path
