"""Tests for the colored console logging."""

import io
import logging

import pytest

from nabelian.log import (
    ColoredFormatter,
    ColorManager,
    Colors,
    ConsoleHandler,
    colors_disabled,
    get_logger,
    setup_logging,
)


def make_record(level=logging.WARNING, msg="careful", name="nabelian.test"):
    return logging.LogRecord(name, level, __file__, 1, msg, None, None)


@pytest.fixture(autouse=True)
def no_color_env(monkeypatch):
    monkeypatch.delenv("NO_COLOR", raising=False)


def test_level_names_are_padded():
    formatter = ColoredFormatter(fmt="%(levelname)s|%(message)s", use_color=False)
    assert formatter.format(make_record()) == "WARN |careful"
    assert formatter.format(make_record(logging.INFO)) == "INFO |careful"


def test_colors_and_verdict_tokens():
    manager = ColorManager()
    assert Colors.get_color("bg_red") == Colors.BG_RED
    assert Colors.get_color("nope") == ""
    assert manager.colorize_message("r2 PASS", logging.INFO) == (
        "r2 " + Colors.GREEN + Colors.BOLD + "PASS" + Colors.RESET
    )
    colored = ColoredFormatter(fmt="%(message)s", use_color=True).format(make_record(msg="x FATAL"))
    assert Colors.BG_RED in colored


def test_no_color_disables_colors(monkeypatch):
    assert not colors_disabled()
    monkeypatch.setenv("NO_COLOR", "")
    assert colors_disabled()
    formatter = ColoredFormatter(fmt="%(levelname)s %(message)s", use_color=True)
    assert "\033[" not in formatter.format(make_record(msg="r2 FAIL"))


def test_color_manager_from_a_dict():
    manager = ColorManager({"verdicts": {"PASS": {"fg": "blue"}}})
    assert manager.get_verdict_color("PASS") == {"fg": "blue"}
    # a custom config replaces the defaults
    assert manager.get_level_color("DEBUG") == {}


def test_color_manager_with_a_missing_file(tmp_path):
    manager = ColorManager(tmp_path / "missing.yaml")
    assert manager.get_level_color("DEBUG") == {"fg": "blue"}
    assert manager.get_verdict_color("FAIL")["fg"] == "yellow"


def test_handler_on_a_stringio_is_plain():
    stream = io.StringIO()
    handler = ConsoleHandler(stream)
    assert not handler.formatter.use_color
    handler.emit(make_record(msg="r2 FAIL"))
    text = stream.getvalue()
    assert "r2 FAIL" in text
    assert "\033[" not in text


def test_setup_logging_replaces_its_handler():
    stream = io.StringIO()
    setup_logging(level="info", stream=stream)
    logger = setup_logging(level="info", stream=stream)
    consoles = [h for h in logger.handlers if isinstance(h, ConsoleHandler)]
    assert len(consoles) == 1
    assert logger.level == logging.INFO
    get_logger("higher").info("selftest done")
    get_logger("higher").debug("hidden")
    assert "selftest done" in stream.getvalue()
    assert "hidden" not in stream.getvalue()


def test_get_logger_names():
    assert get_logger().name == "nabelian"
    assert get_logger("cli").name == "nabelian.cli"
    assert get_logger("nabelian.report").name == "nabelian.report"


def test_library_modules_log_in_the_namespace():
    import nabelian.config
    import nabelian.higher

    assert nabelian.higher.logger is get_logger("higher")
    assert nabelian.config.logger is get_logger("nabelian.config")
