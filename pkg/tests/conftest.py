"""
Test configuration for Pytest.

Copyright (c) 2026 The nabelian developers
SPDX-License-Identifier: MIT
See LICENSE for details.
"""

import logging
import os

import pytest

from nabelian.corpus import load_corpus


def pytest_configure(config):
    """Register custom markers."""
    config.addinivalue_line("markers", "slow: long-running sampled checks over the whole corpus")
    config.addinivalue_line("markers", "config: settings file tests")
    config.addinivalue_line("markers", "env_vars: environment variable tests")
    config.addinivalue_line("markers", "cli: command line tests")
    config.addinivalue_line("markers", "corpus: tests against the bundled algebras")


def is_ci_environment():
    """Check if we're running in a CI environment."""
    # GitHub Actions sets this environment variable
    return os.environ.get("GITHUB_ACTIONS") == "true"


def pytest_collection_modifyitems(config, items):
    """Skip slow tests in CI unless RUN_SLOW_TESTS is set."""
    if not is_ci_environment():
        return
    run_slow = os.environ.get("RUN_SLOW_TESTS", "").lower() in ("1", "true", "yes")
    for item in items:
        if "slow" in item.keywords and not run_slow:
            item.add_marker(pytest.mark.skip(reason="slow tests are disabled in CI"))


@pytest.fixture(autouse=True)
def isolated_environment(monkeypatch):
    """No user settings file and no NABELIAN_* variables leak into a test."""
    for key in list(os.environ):
        if key.startswith("NABELIAN_"):
            monkeypatch.delenv(key, raising=False)
    monkeypatch.setenv("NABELIAN_SKIP_CONFIG", "1")
    yield
    logger = logging.getLogger("nabelian")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    logger.setLevel(logging.NOTSET)
    logger.propagate = True


@pytest.fixture
def corpus_algebra():
    """Factory: the algebra of a bundled corpus entry."""

    def build(name):
        return load_corpus(name).parse().algebra

    return build


@pytest.fixture
def a3_radical_square_zero(corpus_algebra):
    """1 -a-> 2 -b-> 3 with ab = 0, the Auslander algebra of A2."""
    return corpus_algebra("auslander_a2")


@pytest.fixture
def a2(corpus_algebra):
    """The path algebra of 1 -a-> 2."""
    return corpus_algebra("a2_hereditary")
