"""Logging configuration for the phase-deficit toolkit.

Console output goes to stderr so that command results printed on stdout
stay machine readable. A rotating file handler is attached only when a
log file is configured.
"""

import logging.config
from typing import Any

LOGGER_NAMES = ("deficit", "deficit.oracle", "deficit.audit", "deficit.sweep", "qstate")


def build_logging_dict(level: str = "INFO", log_file: str | None = None) -> dict[str, Any]:
    handlers: dict[str, Any] = {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "default",
            "stream": "ext://sys.stderr",
        },
    }
    active = ["console"]
    if log_file:
        handlers["run_file"] = {
            "()": "app.logging_setup.rotating_handler_factory",
            "filename": log_file,
            "max_bytes": 5_000_000,
            "backupCount": 3,
        }
        handlers["run_file"]["formatter"] = "detailed"
        active.append("run_file")

    loggers = {
        name: {"level": level, "handlers": active, "propagate": False} for name in LOGGER_NAMES
    }

    return {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "default": {
                "format": "%(asctime)s | %(levelname)s | %(name)s | %(message)s",
                "datefmt": "%Y-%m-%d %H:%M:%S",
            },
            "detailed": {
                "format": (
                    "%(asctime)s | %(levelname)s | %(name)s | %(funcName)s:%(lineno)d | %(message)s"
                ),
                "datefmt": "%Y-%m-%d %H:%M:%S",
            },
        },
        "handlers": handlers,
        "loggers": loggers,
        "root": {"level": "WARNING", "handlers": ["console"]},
    }


def setup_logging(level: str = "INFO", log_file: str | None = None) -> None:
    """Set up logging configuration for the toolkit."""
    logging.config.dictConfig(build_logging_dict(level.upper(), log_file))
