"""
Logging setup for the benchmark harness.

Library modules only call ``logging.getLogger("entrosense.<area>")`` and pass
run context (family, sweep, threshold, ...) through ``extra``. The handlers
installed here render that context as sorted ``key=value`` pairs after the
message, so a log line carries the same fields on the console and in the
rotating file.
"""

import logging
import os
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Any, Dict

from runtime_paths import resolve_runtime_paths

LOG_LEVEL_ENV = "ENTROSENSE_LOG_LEVEL"
LOG_FILE_NAME = "entrosense.log"
LOG_FILE_MAX_BYTES = 10 * 1024 * 1024
LOG_FILE_BACKUPS = 5

_RECORD_ATTRIBUTES = frozenset(vars(logging.makeLogRecord({}))) | {"message", "asctime"}


def _format_context_value(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def record_context(record: logging.LogRecord) -> Dict[str, Any]:
    """Fields a caller attached through ``extra``."""
    return {
        key: value
        for key, value in vars(record).items()
        if key not in _RECORD_ATTRIBUTES and not key.startswith("_")
    }


class ContextFormatter(logging.Formatter):
    def format(self, record: logging.LogRecord) -> str:
        line = super().format(record)
        context = record_context(record)
        if not context:
            return line
        pairs = " ".join(
            f"{key}={_format_context_value(context[key])}" for key in sorted(context)
        )
        return f"{line} [{pairs}]"


def console_level() -> int:
    """Console threshold from ``ENTROSENSE_LOG_LEVEL``; unknown names fall back to INFO."""
    name = (os.getenv(LOG_LEVEL_ENV) or "").strip().upper()
    level = logging.getLevelName(name) if name else logging.INFO
    return level if isinstance(level, int) else logging.INFO


def get_log_file() -> Path:
    return resolve_runtime_paths().logs_dir / LOG_FILE_NAME


def build_rotating_file_handler() -> RotatingFileHandler | None:
    log_file = get_log_file()
    try:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        handler = RotatingFileHandler(
            log_file, maxBytes=LOG_FILE_MAX_BYTES, backupCount=LOG_FILE_BACKUPS
        )
    except OSError:
        return None
    handler.setLevel(logging.DEBUG)
    handler.setFormatter(ContextFormatter("%(asctime)s %(levelname)s %(name)s: %(message)s"))
    return handler


def _build_console_handler() -> logging.StreamHandler:
    # stderr keeps stdout free for report tables
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(console_level())
    console_handler.setFormatter(
        ContextFormatter("%(asctime)s %(levelname)-7s %(message)s", datefmt="%H:%M:%S")
    )
    return console_handler


def setup_logger(name: str = "entrosense") -> logging.Logger:
    logger = logging.getLogger(name)
    if logger.hasHandlers():
        return logger

    logger.setLevel(min(logging.INFO, console_level()))
    logger.addHandler(_build_console_handler())

    file_handler = build_rotating_file_handler()
    if file_handler is not None:
        logger.addHandler(file_handler)
    else:
        logger.warning(
            "File logging disabled because the log directory is not writable.",
            extra={"log_file": str(get_log_file())},
        )

    return logger
