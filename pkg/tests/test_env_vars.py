"""
Environment variables test module

This module verifies the behavior of the NABELIAN_* environment variables.
"""

import io
import json
import logging
import os
from unittest import mock

import pytest

from nabelian.cli import run
from nabelian.config import load_settings
from nabelian.log import ColoredFormatter, colors_disabled


def record(level=logging.WARNING):
    return logging.LogRecord("nabelian", level, __file__, 1, "msg", None, None)


@pytest.mark.env_vars
def test_level_format():
    """NABELIAN_LEVEL_FORMAT sets the level name width; 0 leaves names alone"""
    with mock.patch.dict(os.environ, {"NABELIAN_LEVEL_FORMAT": "0"}):
        plain = ColoredFormatter(fmt="%(levelname)s", use_color=False)
        assert plain.format(record()) == "WARNING"

    with mock.patch.dict(os.environ, {"NABELIAN_LEVEL_FORMAT": "8"}):
        wide = ColoredFormatter(fmt="%(levelname)s", use_color=False)
        assert wide.format(record(logging.ERROR)) == "ERROR   "

    # Invalid values fall back to 5
    with mock.patch.dict(os.environ, {"NABELIAN_LEVEL_FORMAT": "invalid"}):
        assert ColoredFormatter(fmt="%(levelname)s", use_color=False).level_width == 5


@pytest.mark.env_vars
@pytest.mark.parametrize("value,disabled", [("1", True), ("true", True), ("YES", True), ("0", False)])
def test_disable_color(value, disabled):
    with mock.patch.dict(os.environ, {"NABELIAN_DISABLE_COLOR": value}, clear=True):
        assert colors_disabled() is disabled


@pytest.mark.env_vars
def test_numeric_settings_from_the_environment(monkeypatch):
    monkeypatch.setenv("NABELIAN_SEED", "11")
    monkeypatch.setenv("NABELIAN_SAMPLES", "5")
    monkeypatch.setenv("NABELIAN_DEGREE_CAP", "12")
    settings = load_settings()
    assert (settings.seed, settings.samples, settings.degree_cap) == (11, 5, 12)


@pytest.mark.env_vars
@pytest.mark.cli
def test_cap_variable_reaches_the_verdict(monkeypatch):
    monkeypatch.setenv("NABELIAN_CAP", "3")
    out = io.StringIO()
    assert run(["detect", "a2_hereditary", "--no-color"], stdout=out) == 0
    data = json.loads(out.getvalue())
    assert data["verdict"]["result"] == "NotNAbelianUpTo(3)"

    # the command line flag wins over the environment
    out = io.StringIO()
    run(["detect", "a2_hereditary", "--cap", "4", "--no-color"], stdout=out)
    assert json.loads(out.getvalue())["verdict"]["result"] == "NotNAbelianUpTo(4)"
