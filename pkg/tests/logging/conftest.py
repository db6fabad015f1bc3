"""
Shared pytest fixtures for the LoggingManager tests.

Configurations are written to real YAML files in a temporary folder so the
manager reads them through the same file IO layer the command line uses.
"""

import shutil
import tempfile

import pytest
import yaml

from src.main.logging import LoggingManager


# ========================================================================================
# TEMPORARY DIRECTORY FIXTURES
# ========================================================================================

@pytest.fixture
def temp_dir():
    """
    Creates a temporary folder for config and log files, removed after the test.
    """
    temp_path = tempfile.mkdtemp()
    yield temp_path
    shutil.rmtree(temp_path, ignore_errors=True)


# ========================================================================================
# CONFIGURATION FIXTURES
# ========================================================================================

@pytest.fixture
def log_file(temp_dir):
    return f"{temp_dir}/solver.log"


@pytest.fixture
def default_config(log_file):
    """
    Minimal config: a DEBUG file handler and a WARNING console handler.
    """
    return {
        'formats': {
            'simple': '{level} | {extra[logger_name]} | {message}'
        },
        'handlers': {
            "handler_file": {
                'sink': log_file,
                'format': 'simple',
                'level': 'DEBUG'
            },
            "handler_console": {
                'sink': 'sys.stderr',
                'format': 'simple',
                'level': 'WARNING'
            },
        },
        'loggers': {
            "cascaded": [
                {'handler': 'handler_file', 'level': 'DEBUG'},
                {'handler': 'handler_console', 'level': 'INFO'}
            ],
            "cli": [
                {'handler': 'handler_file', 'level': 'WARNING'}
            ]
        }
    }


@pytest.fixture
def write_yaml(temp_dir):
    """
    Write ``data`` as YAML (or a raw string as is) and return the path.
    """
    def _write(data, name="logging.yaml"):
        path = f"{temp_dir}/{name}"
        with open(path, "w", encoding="utf-8") as f:
            f.write(data if isinstance(data, str) else yaml.safe_dump(data))
        return path
    return _write


# ========================================================================================
# COMPONENT FIXTURES
# ========================================================================================

@pytest.fixture
def logging_manager(write_yaml, default_config):
    """
    LoggingManager configured from ``default_config``.
    """
    manager = LoggingManager(write_yaml(default_config))
    yield manager
    manager.cleanup()


@pytest.fixture
def read_log(log_file, logging_manager):
    """
    Flush the sinks and return the log file lines.
    """
    def _read():
        logging_manager.cleanup()
        with open(log_file, encoding="utf-8") as f:
            return f.read().splitlines()
    return _read
