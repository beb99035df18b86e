# Tests for Configuration
"""Tests for orthochroma/config.py"""

import os
from pathlib import Path

import pytest

from orthochroma.config import ConfigurationError, Settings, get_project_root, load_settings


class TestLoadSettings:
    """Tests for environment-driven settings."""

    def test_defaults(self):
        settings = load_settings(environ={})
        assert settings == Settings()
        assert settings.threads == 1
        assert settings.solver_cap == 64
        assert settings.runs_dir == Path("data/runs")

    def test_reads_variables(self):
        settings = load_settings(environ={
            "ORTHOCHROMA_THREADS": "4",
            "ORTHOCHROMA_SOLVER_CAP": "30",
            "ORTHOCHROMA_RUNS_DIR": "/tmp/runs",
        })
        assert settings.threads == 4
        assert settings.solver_cap == 30
        assert settings.runs_dir == Path("/tmp/runs")

    def test_empty_variable_ignored(self):
        assert load_settings(environ={"ORTHOCHROMA_THREADS": ""}).threads == 1

    @pytest.mark.parametrize("value", ["many", "0", "-2"])
    def test_invalid_threads(self, value):
        with pytest.raises(ConfigurationError, match="ORTHOCHROMA_THREADS"):
            load_settings(environ={"ORTHOCHROMA_THREADS": value})

    def test_env_file(self, tmp_path, monkeypatch):
        environ = {k: v for k, v in os.environ.items() if not k.startswith("ORTHOCHROMA_")}
        monkeypatch.setattr(os, "environ", environ)
        env_file = tmp_path / ".env"
        env_file.write_text("ORTHOCHROMA_SOLVER_CAP=12\n")
        assert load_settings(env_file=env_file).solver_cap == 12

    def test_missing_env_file(self, tmp_path, monkeypatch):
        monkeypatch.setattr(os, "environ", {})
        assert load_settings(env_file=tmp_path / "absent.env").threads == 1

    def test_project_root(self):
        assert (get_project_root() / "orthochroma" / "config.py").exists()


class TestClampWorkers:
    """Tests for the worker cap."""

    def test_clamp(self):
        settings = Settings(threads=3)
        assert settings.clamp_workers(8) == 3
        assert settings.clamp_workers(2) == 2
        assert settings.clamp_workers(0) == 1
