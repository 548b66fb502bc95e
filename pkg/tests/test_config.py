"""
Tests for the layered configuration and the timing log
"""
import json

import pytest
from pydantic import ValidationError

from src.core.config_manager import ConfigManager
from src.core.errors import DomainError
from src.models.run_config import RunConfig, Tolerances
from src.utils.timing import get_timing_summary, log_step_end, log_step_start, reset_timing, save_timing_log


def test_defaults(config_dir):
    config = ConfigManager().build_run_config()
    assert config == RunConfig()
    assert config.output_format == "csv"
    assert config.enumeration_cap == 14
    assert config.tolerances.residual == 1e-10
    assert config.tolerances.vieta(10) == pytest.approx(1e-5)


def test_file_then_env_then_cli(config_dir, monkeypatch):
    config_dir.mkdir(parents=True)
    (config_dir / "config.json").write_text(
        json.dumps({"enumeration_cap": 12, "output_format": "json", "tolerances": {"residual": 1e-8}}),
        encoding="utf-8",
    )
    config = ConfigManager().build_run_config()
    assert config.enumeration_cap == 12
    assert config.output_format == "json"
    assert config.tolerances.residual == 1e-8

    monkeypatch.setenv("PASCALIAN_CAP", "14")
    monkeypatch.setenv("PASCALIAN_TOL_RESIDUAL", "1e-9")
    config = ConfigManager().build_run_config()
    assert config.enumeration_cap == 14
    assert config.tolerances.residual == 1e-9

    config = ConfigManager().build_run_config(enumeration_cap=16, residual=1e-7, output_format=None)
    assert config.enumeration_cap == 16
    assert config.tolerances.residual == 1e-7
    assert config.output_format == "json"


@pytest.mark.parametrize("overrides", [
    {"output_format": "xml"},
    {"enumeration_cap": 0},
    {"residual": -1.0},
    {"boundary_samples": 4},
    {"unknown_key": 1},
])
def test_invalid_values_raise_domain_error(config_dir, overrides):
    with pytest.raises(DomainError):
        ConfigManager().build_run_config(**overrides)


def test_bad_environment_values(config_dir, monkeypatch):
    monkeypatch.setenv("PASCALIAN_CAP", "many")
    with pytest.raises(DomainError):
        ConfigManager().build_run_config()
    monkeypatch.delenv("PASCALIAN_CAP")
    monkeypatch.setenv("PASCALIAN_TOL_IMAG", "tiny")
    with pytest.raises(DomainError):
        ConfigManager().build_run_config()


def test_save_and_reload(config_dir):
    manager = ConfigManager()
    manager.set("enumeration_cap", 18)
    manager.save()
    assert json.loads((config_dir / "config.json").read_text(encoding="utf-8")) == {"enumeration_cap": 18}
    assert ConfigManager().get("enumeration_cap") == 18


def test_broken_config_file_is_ignored(config_dir):
    config_dir.mkdir(parents=True)
    (config_dir / "config.json").write_text("{not json", encoding="utf-8")
    assert ConfigManager().load() == {}


def test_tolerances_are_frozen():
    tolerances = Tolerances()
    with pytest.raises(ValidationError):
        tolerances.residual = 1.0


def test_meta_block():
    meta = RunConfig(command="roots").meta()
    assert meta["command"] == "roots"
    assert set(meta["tolerances"]) == set(Tolerances.model_fields)


def test_timing_log(tmp_path):
    reset_timing()
    start = log_step_start("recursions")
    assert log_step_end("recursions", start) >= 0.0
    summary = get_timing_summary()
    assert summary["recursions"]["count"] == 1
    path = save_timing_log(tmp_path)
    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["statistics"]["recursions"]["count"] == 1
    reset_timing()
    assert get_timing_summary() == {}


def test_unmatched_step_end_returns_zero():
    reset_timing()
    assert log_step_end("never-started") == 0.0
