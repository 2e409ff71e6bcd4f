# tests/test_config.py

"""
Tests for engine and run configuration.
"""

import json

import pydantic
import pytest

from moykr.config import Command, Config, OutputFormat, PivotOrder, RunConfig
from moykr.exceptions import ConfigurationError, ValidationError

SETTINGS_ERRORS = (ValidationError, pydantic.ValidationError)


def test_defaults():
    config = Config()
    assert config.default_level == 2
    assert config.default_crossings == 2
    assert config.pivot_order == PivotOrder.LEFTMOST
    assert config.check_invariants is True
    assert config.verify_max_level == 6
    assert config.verify_max_crossings == 9
    assert config.normal_form_max_crossings == 12
    assert config.scale_max_level == 11
    assert config.ring_max_level == 12


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("MOYKR_VERIFY_MAX_LEVEL", "4")
    monkeypatch.setenv("MOYKR_PIVOT_ORDER", "rightmost")
    config = Config()
    assert config.verify_max_level == 4
    assert config.pivot_order == PivotOrder.RIGHTMOST


def test_keyword_beats_environment(monkeypatch):
    monkeypatch.setenv("MOYKR_DEFAULT_LEVEL", "5")
    assert Config(default_level=3).default_level == 3


def test_validation():
    with pytest.raises(SETTINGS_ERRORS):
        Config(default_level=1)
    with pytest.raises(SETTINGS_ERRORS):
        Config(verify_max_crossings=0)
    with pytest.raises(SETTINGS_ERRORS):
        Config(log_level="chatty")
    assert Config(log_level="debug").log_level == "DEBUG"


def test_file_round_trip(tmp_path):
    path = tmp_path / "moykr.json"
    Config(verify_max_level=4, pivot_order=PivotOrder.RIGHTMOST).save_to_file(path)
    data = json.loads(path.read_text())
    assert data["pivot_order"] == "rightmost"
    loaded = Config.from_file(path)
    assert loaded.verify_max_level == 4
    assert loaded.pivot_order == PivotOrder.RIGHTMOST


def test_file_errors(tmp_path):
    with pytest.raises(ConfigurationError):
        Config.from_file(tmp_path / "missing.json")
    yaml_path = tmp_path / "moykr.yaml"
    yaml_path.write_text("verify_max_level: 3")
    with pytest.raises(ConfigurationError):
        Config.from_file(yaml_path)
    broken = tmp_path / "broken.json"
    broken.write_text("{")
    with pytest.raises(ConfigurationError):
        Config.from_file(broken)


def test_run_config_defaults_to_hopf():
    run = RunConfig(command=Command.KR)
    assert run.n == 2
    assert run.k == 2
    assert run.output_format == OutputFormat.TEXT
    assert run.params() == {"n": 2, "k": 2}


def test_run_config_exactly_one_input():
    with pytest.raises(SETTINGS_ERRORS):
        RunConfig(command=Command.JONES, k=3, braid="w=2: 1 1 1")
    run = RunConfig(command=Command.JONES, braid="w=2: 1 1 1")
    assert run.k is None
    assert run.params() == {"n": 2, "braid": "w=2: 1 1 1"}


def test_run_config_ranges():
    run = RunConfig(command=Command.TABLE, n_range="2..5", k_range="1..3")
    assert run.n_range == (2, 5)
    assert run.k_range == (1, 3)
    assert run.params() == {"n": 2, "n_range": "2..5", "k_range": "1..3"}
    with pytest.raises(SETTINGS_ERRORS):
        RunConfig(command=Command.TABLE, n_range="1..3")
    with pytest.raises(SETTINGS_ERRORS):
        RunConfig(command=Command.TABLE, k_range="3..1")


def test_run_config_rejects_bad_level():
    with pytest.raises(SETTINGS_ERRORS):
        RunConfig(command=Command.KR, n=1)
