"""Settings for nabelian: defaults, an optional YAML file, then the environment.

Copyright (c) 2026 The nabelian developers
SPDX-License-Identifier: MIT
See LICENSE for details.

A settings file looks like::

    nabelian:
      seed: 7
      samples: 50
      cap: 12
      log_level: INFO
      colors:
        verdicts:
          PASS: {fg: green}
"""

import dataclasses
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml
from yaml import safe_load

from .log import get_logger

logger = get_logger(__name__)

__all__ = [
    "Settings",
    "should_skip_config",
    "find_config_file",
    "load_yaml_config",
    "load_settings",
]

_TRUTHY = ("1", "true", "yes")
_INT_ENV = {
    "NABELIAN_CAP": "cap",
    "NABELIAN_SEED": "seed",
    "NABELIAN_SAMPLES": "samples",
    "NABELIAN_DEGREE_CAP": "degree_cap",
}


@dataclass(frozen=True)
class Settings:
    degree_cap: int = 20
    cap: Optional[int] = None
    seed: int = 42
    samples: int = 200
    pair_samples: int = 100
    max_vertex_dim: int = 2
    log_level: str = "WARNING"
    colors: Optional[Dict[str, Any]] = None
    source: Optional[str] = None

    def replace(self, **changes: Any) -> "Settings":
        """Copy with the non-None ``changes`` applied; used for CLI flags."""
        return dataclasses.replace(self, **{k: v for k, v in changes.items() if v is not None})


def should_skip_config() -> bool:
    return os.environ.get("NABELIAN_SKIP_CONFIG", "").lower() in _TRUTHY


def find_config_file(explicit_path: Optional[Union[str, Path]] = None) -> Optional[Path]:
    """
    Find the settings file according to priority:
    1. explicit_path (argument)
    2. NABELIAN_CONFIG env var
    3. ~/.config/nabelian/config.yaml (%APPDATA%/nabelian/config.yaml on Windows)
    4. ./nabelian.yaml
    An explicit or env path is returned even when missing so the caller can report it.
    """
    if explicit_path:
        return Path(explicit_path).expanduser()
    env_path = os.environ.get("NABELIAN_CONFIG")
    if env_path:
        return Path(env_path).expanduser()
    candidates = []
    if sys.platform.startswith("win"):
        appdata = os.environ.get("APPDATA")
        if appdata:
            candidates.append(Path(appdata) / "nabelian" / "config.yaml")
    else:
        candidates.append(Path.home() / ".config" / "nabelian" / "config.yaml")
    candidates.append(Path.cwd() / "nabelian.yaml")
    for candidate in candidates:
        if candidate.exists():
            return candidate
    return None


def load_yaml_config(config_path: Union[str, Path]) -> Dict[str, Any]:
    """
    Read a YAML settings file.

    Raises:
        ValueError: the file does not exist
        yaml.YAMLError: the YAML is malformed
    """
    try:
        with open(config_path, "r", encoding="utf-8") as f:
            config = safe_load(f)
    except FileNotFoundError as exc:
        raise ValueError(f"Configuration file not found: {config_path}") from exc
    except yaml.YAMLError as exc:
        raise yaml.YAMLError(f"Invalid YAML format in {config_path}: {exc}")
    if config is None:
        return {}
    if not isinstance(config, dict):
        raise ValueError(f"Configuration file {config_path} must contain a mapping")
    return config


def _from_file(values: Dict[str, Any], section: Dict[str, Any]) -> None:
    fields = {f.name: f for f in dataclasses.fields(Settings)}
    for key, value in section.items():
        if key not in fields or key == "source":
            logger.debug("ignoring unknown settings key %r", key)
            continue
        if key == "log_level":
            values[key] = str(value).upper()
        elif key == "colors":
            if isinstance(value, dict):
                values[key] = value
            else:
                logger.warning("ignoring colors setting: expected a mapping")
        elif key == "cap" and value is None:
            values[key] = None
        elif isinstance(value, int) and not isinstance(value, bool):
            values[key] = value
        else:
            logger.warning("ignoring settings key %r: %r is not an integer", key, value)


def load_settings(explicit: Optional[Union[str, Path]] = None) -> Settings:
    """Defaults, then the ``nabelian:`` section of the settings file, then the environment."""
    values: Dict[str, Any] = {}
    source = None
    if explicit is not None or not should_skip_config():
        path = find_config_file(explicit)
        if path is not None:
            data = load_yaml_config(path)
            section = data.get("nabelian", {}) or {}
            if not isinstance(section, dict):
                raise ValueError(f"'nabelian' in {path} must be a mapping")
            _from_file(values, section)
            source = str(path)
    for env, key in _INT_ENV.items():
        raw = os.environ.get(env)
        if raw is None:
            continue
        try:
            values[key] = int(raw)
        except ValueError:
            logger.warning("ignoring %s=%r: not an integer", env, raw)
    level = os.environ.get("NABELIAN_LOG_LEVEL")
    if level:
        values["log_level"] = level.upper()
    return Settings(source=source, **values)
