"""Tests for the settings file."""

import pytest

from horosvm.config import LoggingSettings, Settings, load_settings
from horosvm.core.optim import OptimMethod
from horosvm.model.classifier import DEFAULT_C, DEFAULT_RESTARTS


def test_defaults_without_file():
    settings = load_settings()
    assert settings.train.c == DEFAULT_C
    assert settings.train.restarts == DEFAULT_RESTARTS
    assert settings.logging.level == "INFO"
    assert settings.optim.method == OptimMethod.CG


def test_repo_settings_file(repo_root):
    settings = load_settings(repo_root / "config" / "horosvm.yaml")
    assert settings.optim.max_iters == 2000
    assert settings.train.downsample_ratio is None


def test_partial_file(tmp_path):
    path = tmp_path / "s.yaml"
    path.write_text("train:\n  c: 5\noptim:\n  method: gd\n")
    settings = load_settings(path)
    assert settings.train.c == 5.0
    assert settings.train.restarts == DEFAULT_RESTARTS
    assert settings.optim.method == OptimMethod.GD


def test_empty_file(tmp_path):
    path = tmp_path / "s.yaml"
    path.write_text("")
    assert load_settings(path) == Settings()


def test_not_a_mapping(tmp_path):
    path = tmp_path / "s.yaml"
    path.write_text("- 1\n- 2\n")
    with pytest.raises(ValueError):
        load_settings(path)


def test_log_level():
    assert LoggingSettings(level="debug").level == "DEBUG"
    with pytest.raises(ValueError):
        LoggingSettings(level="chatty")


def test_missing_file(tmp_path):
    with pytest.raises(OSError):
        load_settings(tmp_path / "absent.yaml")


def test_train_config_overrides():
    settings = Settings()
    cfg = settings.train_config(c=3.0, restarts=None, seed=11)
    assert cfg.c == 3.0
    assert cfg.restarts == DEFAULT_RESTARTS
    assert cfg.seed == 11
    assert cfg.optim == settings.optim


def test_dict_round_trip():
    settings = Settings()
    assert Settings.from_dict(settings.to_dict()) == settings
