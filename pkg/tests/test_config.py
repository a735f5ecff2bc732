"""Tests for settings: defaults, the YAML file and environment overrides."""

from pathlib import Path

import pytest
import yaml

from nabelian.config import (
    Settings,
    find_config_file,
    load_settings,
    load_yaml_config,
    should_skip_config,
)


@pytest.fixture
def settings_file(tmp_path):
    """A settings file with one bad key."""
    path = tmp_path / "nabelian.yaml"
    config = {
        "nabelian": {
            "seed": 7,
            "cap": 12,
            "log_level": "info",
            "samples": "many",
            "colors": {"verdicts": {"PASS": {"fg": "blue"}}},
            "unknown": 1,
        }
    }
    path.write_text(yaml.safe_dump(config), encoding="utf-8")
    return path


def test_defaults():
    settings = load_settings()
    assert settings == Settings()
    assert settings.cap is None
    assert (settings.seed, settings.samples, settings.pair_samples) == (42, 200, 100)
    assert settings.degree_cap == 20
    assert settings.source is None


@pytest.mark.config
def test_load_yaml_config(tmp_path):
    with pytest.raises(ValueError, match="not found"):
        load_yaml_config(tmp_path / "missing.yaml")
    empty = tmp_path / "empty.yaml"
    empty.write_text("", encoding="utf-8")
    assert load_yaml_config(empty) == {}
    listing = tmp_path / "list.yaml"
    listing.write_text("- 1\n- 2\n", encoding="utf-8")
    with pytest.raises(ValueError):
        load_yaml_config(listing)
    broken = tmp_path / "broken.yaml"
    broken.write_text("nabelian: [1, 2\n", encoding="utf-8")
    with pytest.raises(yaml.YAMLError):
        load_yaml_config(broken)


@pytest.mark.config
def test_explicit_settings_file(settings_file):
    settings = load_settings(settings_file)
    assert settings.seed == 7
    assert settings.cap == 12
    assert settings.log_level == "INFO"
    # "many" is not an integer, the default stays
    assert settings.samples == 200
    assert settings.colors == {"verdicts": {"PASS": {"fg": "blue"}}}
    assert settings.source == str(settings_file)


@pytest.mark.config
def test_environment_overrides_the_file(settings_file, monkeypatch):
    monkeypatch.setenv("NABELIAN_SEED", "9")
    monkeypatch.setenv("NABELIAN_LOG_LEVEL", "debug")
    settings = load_settings(settings_file)
    assert settings.seed == 9
    assert settings.cap == 12
    assert settings.log_level == "DEBUG"


@pytest.mark.config
def test_skip_flag_ignores_the_env_path(settings_file, monkeypatch):
    monkeypatch.setenv("NABELIAN_CONFIG", str(settings_file))
    assert should_skip_config()
    assert load_settings().seed == 42
    monkeypatch.delenv("NABELIAN_SKIP_CONFIG")
    assert load_settings().seed == 7


@pytest.mark.config
def test_section_must_be_a_mapping(tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text("nabelian: 3\n", encoding="utf-8")
    with pytest.raises(ValueError):
        load_settings(path)


@pytest.mark.env_vars
def test_invalid_integer_variables_are_ignored(monkeypatch):
    monkeypatch.setenv("NABELIAN_SAMPLES", "lots")
    monkeypatch.setenv("NABELIAN_CAP", "x")
    settings = load_settings()
    assert settings.samples == 200
    assert settings.cap is None
    monkeypatch.setenv("NABELIAN_CAP", "8")
    assert load_settings().cap == 8


def test_find_config_file_priority(tmp_path, monkeypatch):
    explicit = tmp_path / "explicit.yaml"
    monkeypatch.setenv("NABELIAN_CONFIG", str(tmp_path / "env.yaml"))
    # explicit and env paths are returned even when missing
    assert find_config_file(explicit) == explicit
    assert find_config_file() == Path(str(tmp_path / "env.yaml"))


def test_replace_skips_none():
    settings = Settings(cap=5).replace(cap=None, seed=3)
    assert settings.cap == 5
    assert settings.seed == 3
