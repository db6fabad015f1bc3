"""
Integration tests against the local filesystem.
"""

import math
import os

import numpy as np
import pandas as pd
import pytest

from src.main.cli import parse_config
from src.main.core import ConfigError
from src.main.file_io import CSVFileIO, FileIOInterface

pytestmark = pytest.mark.integration


class TestFileIOIntegrationFormats:
    """Write-read cycles of the formats the command line produces and consumes."""

    def test_sweep_table(self, path_for, sweep_frame):
        path = path_for("sweeps/antinode-third.csv")
        FileIOInterface.fwrite(path, sweep_frame)
        with open(path, encoding="utf-8") as f:
            assert f.read() == CSVFileIO.render(sweep_frame)
        frame = FileIOInterface.fread(path)
        assert frame["deltap"].tolist() == [-1.0, 0.0, 1.0]
        assert frame["abs_phi1"][1] == pytest.approx(1.0 / 3.0, rel=1e-15)
        assert np.isnan(frame["abs_phi1"][2])

    def test_solve_document(self, path_for, solve_document):
        path = path_for("solve.json")
        FileIOInterface.fwrite(path, solve_document)
        document = FileIOInterface.fread(path)
        assert document["derived"] == {"g": 10.0, "cooperativity": None}
        assert document["parameters"] == solve_document["parameters"]

    @pytest.mark.parametrize("name", ["run.yaml", "run.yml"])
    def test_yaml_mapping(self, path_for, name):
        path = path_for(name)
        FileIOInterface.fwrite(path, {"beta": 0.5, "geometry": "ring"})
        assert FileIOInterface.fread(path) == {"beta": 0.5, "geometry": "ring"}

    def test_key_value_config(self, path_for):
        path = path_for("run.cfg")
        FileIOInterface.fwrite(path, {"beta": 0.5, "nu-fsr": 50})
        assert FileIOInterface.fread(path) == [(1, "beta", "0.5"), (2, "nu-fsr", "50")]

    def test_saved_run_config_loads(self, path_for):
        path = path_for("saved/run.cfg")
        FileIOInterface.fwrite(path, {"beta": 0.25, "alpha0": "-pi/2", "nu-fsr": 50, "lossless": "yes"})
        assert parse_config(path) == {
            "beta": 0.25,
            "alpha0": pytest.approx(-math.pi / 2),
            "nu_fsr": 50.0,
            "lossless": True,
        }

    @pytest.mark.parametrize("entry", [{"be#ta": 1}, {"beta": "0.5 # third"}, {"a=b": 1}, {" ": 1}, {"beta": "0.5\nnu-fsr=1"}])
    def test_key_value_rejects_unreadable_entries(self, path_for, entry):
        with pytest.raises(ValueError, match="key=value"):
            FileIOInterface.fwrite(path_for("bad.cfg"), entry)

    def test_key_value_requires_mapping(self, path_for):
        with pytest.raises(TypeError, match="dict"):
            FileIOInterface.fwrite(path_for("bad.cfg"), ["beta=0.5"])

    def test_text(self, path_for):
        path = path_for("notes.txt")
        FileIOInterface.fwrite(path, "beta=0.5\nalpha0=pi/2\n")
        assert FileIOInterface.fread(path) == "beta=0.5\nalpha0=pi/2\n"

    def test_unicode_text(self, path_for):
        path = path_for("notes.log")
        FileIOInterface.fwrite(path, "Δ0 = 0, γ = 1")
        assert FileIOInterface.fread(path) == "Δ0 = 0, γ = 1"

    def test_identical_frames_give_identical_bytes(self, path_for, sweep_frame):
        first, second = path_for("a.csv"), path_for("b.csv")
        FileIOInterface.fwrite(first, sweep_frame)
        FileIOInterface.fwrite(second, sweep_frame.copy())
        assert FileIOInterface.fread(first, raw_bytes=True) == FileIOInterface.fread(second, raw_bytes=True)


class TestFileIOIntegrationErrorHandling:
    """Errors surfaced to the caller."""

    def test_fexists(self, path_for):
        path = path_for("run.cfg")
        assert FileIOInterface.fexists(path) is False
        FileIOInterface.fwrite(path, {"beta": 0.5})
        assert FileIOInterface.fexists(path) is True

    def test_read_nonexistent_file(self, path_for):
        with pytest.raises(FileNotFoundError):
            FileIOInterface.fread(path_for("missing.json"), max_attempts=1)

    def test_unsupported_extension(self, path_for):
        with pytest.raises(ValueError, match="Unsupported file format"):
            FileIOInterface.fwrite(path_for("sweep.parquet"), pd.DataFrame())

    def test_wrong_data_type(self, path_for):
        with pytest.raises(TypeError):
            FileIOInterface.fwrite(path_for("sweep.csv"), {"beta": [0.1]})
        assert not os.path.exists(path_for("sweep.csv"))

    def test_malformed_config(self, path_for):
        path = path_for("run.conf")
        with open(path, "w", encoding="utf-8") as f:
            f.write("beta 0.5\n")
        with pytest.raises(ConfigError):
            FileIOInterface.fread(path)

    def test_empty_yaml(self, path_for):
        path = path_for("empty.yaml")
        with open(path, "w", encoding="utf-8"):
            pass
        assert FileIOInterface.fread(path) is None
