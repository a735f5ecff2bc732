"""Colored console logging for nabelian.

Copyright (c) 2026 The nabelian developers
SPDX-License-Identifier: MIT
See LICENSE for details.

Library modules log through ``get_logger(__name__)`` and never configure
handlers themselves. The command line front end calls
:func:`setup_logging`, which puts a single :class:`ConsoleHandler` on the
``nabelian`` logger. Reports go to stdout; logs always go to stderr.
"""

import copy
import logging
import os
import re
import sys
from logging import Formatter, LogRecord, StreamHandler
from pathlib import Path
from typing import Any, Dict, Optional, TextIO, Union

from yaml import YAMLError, safe_load

# --- colorama for Windows terminals ---
try:
    import colorama

    colorama.init()
except ImportError:
    pass

__all__ = [
    "Colors",
    "ColorManager",
    "ColoredFormatter",
    "ConsoleHandler",
    "get_logger",
    "setup_logging",
    "colors_disabled",
]

ROOT_LOGGER = "nabelian"
DEFAULT_FORMAT = "%(asctime)s %(levelname)s | %(name)s | %(message)s"
_TRUTHY = ("1", "true", "yes")
_VERDICT = re.compile(r"\b(PASS|FAIL|FATAL)\b")


def colors_disabled() -> bool:
    """NABELIAN_DISABLE_COLOR (1, true, yes) or NO_COLOR with any value."""
    disable = os.environ.get("NABELIAN_DISABLE_COLOR", "").lower() in _TRUTHY
    return disable or "NO_COLOR" in os.environ


def _level_width() -> int:
    try:
        return int(os.environ.get("NABELIAN_LEVEL_FORMAT", "5"))
    except ValueError:
        return 5


class Colors:
    """ANSI escape sequences"""

    RESET = "\033[0m"
    BOLD = "\033[1m"
    DIM = "\033[2m"
    UNDERLINE = "\033[4m"

    BLACK = "\033[30m"
    RED = "\033[31m"
    GREEN = "\033[32m"
    YELLOW = "\033[33m"
    BLUE = "\033[34m"
    MAGENTA = "\033[35m"
    CYAN = "\033[36m"
    WHITE = "\033[37m"

    BG_BLACK = "\033[40m"
    BG_RED = "\033[41m"
    BG_GREEN = "\033[42m"
    BG_YELLOW = "\033[43m"
    BG_BLUE = "\033[44m"
    BG_MAGENTA = "\033[45m"
    BG_CYAN = "\033[46m"
    BG_WHITE = "\033[47m"

    BRIGHT_RED = "\033[91m"
    BRIGHT_GREEN = "\033[92m"
    BRIGHT_YELLOW = "\033[93m"
    BG_BRIGHT_RED = "\033[101m"

    @classmethod
    def get_color(cls, name: str) -> str:
        """ANSI sequence for a name like ``red`` or ``bg_yellow``; unknown names give ''."""
        if not name:
            return ""
        if name.startswith("bg_"):
            name = f"BG_{name[3:].upper()}"
        else:
            name = name.upper()
        return getattr(cls, name, "")


class ColorManager:
    """Color settings for levels, log elements and verdict tokens."""

    def __init__(self, config: Optional[Union[str, Path, Dict[str, Any]]] = None):
        self.config_path: Optional[Union[str, Path]] = None
        self._config: Optional[Dict[str, Any]] = None
        if isinstance(config, dict):
            self.config = config
        else:
            self.config_path = config
            self._config = self._load_config()

    @property
    def config(self) -> Dict[str, Any]:
        if self._config is None:
            self._config = self._load_default_config()
        return self._config

    @config.setter
    def config(self, value: Dict[str, Any]) -> None:
        self._config = copy.deepcopy(value)

    def _load_default_config(self) -> Dict[str, Any]:
        return {
            "levels": {
                "DEBUG": {"fg": "blue"},
                "INFO": {"fg": "white"},
                "WARNING": {"fg": "black", "bg": "yellow"},
                "ERROR": {"fg": "black", "bg": "red"},
                "CRITICAL": {"fg": "black", "bg": "bright_red", "style": "bold"},
            },
            "elements": {
                "timestamp": {"fg": "white"},
                "name": {"fg": "cyan"},
                "message": {
                    "DEBUG": {"fg": "blue"},
                    "WARNING": {"fg": "yellow"},
                    "ERROR": {"fg": "red"},
                    "CRITICAL": {"fg": "red", "style": "bold"},
                },
            },
            "verdicts": {
                "PASS": {"fg": "green", "style": "bold"},
                "FAIL": {"fg": "yellow", "style": "bold"},
                "FATAL": {"fg": "white", "bg": "red", "style": "bold"},
            },
        }

    def _load_config(self) -> Dict[str, Any]:
        """The colors file replaces the defaults; an unreadable file keeps them."""
        default_config = self._load_default_config()
        if self.config_path:
            try:
                with open(self.config_path, "r", encoding="utf-8") as f:
                    config = safe_load(f)
                if isinstance(config, dict) and config:
                    return config
            except (FileNotFoundError, YAMLError, TypeError, OSError):
                return default_config
        return default_config

    def _section(self, name: str) -> Dict[str, Any]:
        value = self.config.get(name, {})
        return value if isinstance(value, dict) else {}

    def get_level_color(self, level: Union[int, str]) -> Dict[str, Any]:
        name = logging.getLevelName(level) if isinstance(level, int) else level
        return self._section("levels").get(name, {})

    def get_message_color(self, level: Union[int, str]) -> Dict[str, Any]:
        name = logging.getLevelName(level) if isinstance(level, int) else level
        message = self._section("elements").get("message", {})
        return message.get(name, {}) if isinstance(message, dict) else {}

    def get_element_color(self, element: str) -> Dict[str, Any]:
        return self._section("elements").get(element, {})

    def get_verdict_color(self, token: str) -> Dict[str, Any]:
        return self._section("verdicts").get(token, {})

    def apply_color(self, text: str, config: Dict[str, Any]) -> str:
        if not config:
            return text
        codes = []
        if "fg" in config:
            codes.append(Colors.get_color(config["fg"]))
        if "bg" in config:
            codes.append(Colors.get_color(f"bg_{config['bg']}"))
        if "style" in config:
            codes.append(Colors.get_color(config["style"]))
        return "".join(codes) + text + Colors.RESET

    def colorize_level(self, levelname: str, levelno: int) -> str:
        return self.apply_color(levelname, self.get_level_color(levelno))

    def colorize_message(self, message: str, level: int) -> str:
        """Verdict tokens get their own colors; the rest follows the level."""
        base = self.get_message_color(level)
        pieces = []
        pos = 0
        for match in _VERDICT.finditer(message):
            pieces.append(self.apply_color(message[pos : match.start()], base))
            pieces.append(self.apply_color(match.group(1), self.get_verdict_color(match.group(1))))
            pos = match.end()
        pieces.append(self.apply_color(message[pos:], base))
        return "".join(p for p in pieces if p)


class ColoredFormatter(Formatter):
    """Formatter with fixed-width, colored level names.

    Environment Variables:
        - NABELIAN_DISABLE_COLOR: disable colors (1, true, yes)
        - NO_COLOR: disable colors (any value)
        - NABELIAN_LEVEL_FORMAT: width of level names, default 5; WARNING
          is shown as WARN, 0 leaves names untouched
    """

    def __init__(
        self,
        fmt: Optional[str] = None,
        datefmt: Optional[str] = None,
        style: str = "%",
        validate: bool = True,
        color_config: Optional[Union[str, Path, Dict[str, Any]]] = None,
        use_color: bool = True,
    ):
        super().__init__(fmt or DEFAULT_FORMAT, datefmt, style, validate)  # type: ignore[arg-type]
        self.color_manager = ColorManager(color_config)
        self.use_color = use_color and not colors_disabled()
        self.level_width = _level_width()

    def format(self, record: LogRecord) -> str:
        record = logging.makeLogRecord(record.__dict__)
        levelno = record.levelno
        if self.level_width > 0:
            name = "WARN" if record.levelname == "WARNING" else record.levelname
            record.levelname = name[: self.level_width].ljust(self.level_width)
        if self.use_color:
            record.levelname = self.color_manager.colorize_level(record.levelname, levelno)
            record.name = self.color_manager.apply_color(
                record.name, self.color_manager.get_element_color("name")
            )
            record.msg = self.color_manager.colorize_message(record.getMessage(), levelno)
            record.args = None
        return super().format(record)


class ConsoleHandler(StreamHandler):
    """StreamHandler that writes colored records to stderr by default.

    Colors are used only for sys.stderr and sys.stdout, and never when
    NABELIAN_DISABLE_COLOR or NO_COLOR is set.
    """

    def __init__(
        self,
        stream: Optional[TextIO] = None,
        color_config: Optional[Union[str, Path, Dict[str, Any]]] = None,
        use_color: bool = True,
    ):
        if stream is None:
            stream = sys.stderr
        super().__init__(stream)
        use_color = use_color and (stream is sys.stderr or stream is sys.stdout)
        self.setFormatter(ColoredFormatter(color_config=color_config, use_color=use_color))

    def emit(self, record: LogRecord) -> None:
        try:
            msg = self.format(record)
            self.stream.write(msg + self.terminator)
            self.flush()
        except (ValueError, TypeError, IOError):
            self.handleError(record)


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """A logger inside the ``nabelian`` namespace."""
    if not name or name == ROOT_LOGGER:
        return logging.getLogger(ROOT_LOGGER)
    if name.startswith(ROOT_LOGGER + "."):
        return logging.getLogger(name)
    return logging.getLogger(f"{ROOT_LOGGER}.{name}")


def _resolve_level(level: Optional[Union[int, str]]) -> int:
    if level is None:
        level = os.environ.get("NABELIAN_LOG_LEVEL", "WARNING")
    if isinstance(level, int):
        return level
    value = logging.getLevelName(str(level).upper())
    return value if isinstance(value, int) else logging.WARNING


def setup_logging(
    level: Optional[Union[int, str]] = None,
    use_color: bool = True,
    color_config: Optional[Union[str, Path, Dict[str, Any]]] = None,
    stream: Optional[TextIO] = None,
) -> logging.Logger:
    """Install one ConsoleHandler on the ``nabelian`` logger; calling again replaces it."""
    logger = logging.getLogger(ROOT_LOGGER)
    for handler in list(logger.handlers):
        if isinstance(handler, ConsoleHandler):
            logger.removeHandler(handler)
    handler = ConsoleHandler(stream, color_config=color_config, use_color=use_color)
    logger.addHandler(handler)
    logger.setLevel(_resolve_level(level))
    logger.propagate = False
    return logger
