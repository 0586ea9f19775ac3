from __future__ import annotations

import logging
from logging.config import dictConfig


def configure_logging(level: str = "WARNING") -> None:
    """Send diagnostics to stderr; stdout carries structured results only."""

    dictConfig(
        {
            "version": 1,
            "disable_existing_loggers": False,
            "formatters": {
                "standard": {
                    "format": "%(asctime)s [%(levelname)s] %(name)s - %(message)s",
                }
            },
            "handlers": {
                "default": {
                    "class": "logging.StreamHandler",
                    "formatter": "standard",
                    "stream": "ext://sys.stderr",
                }
            },
            "loggers": {
                "": {"handlers": ["default"], "level": level.upper()},
            },
        }
    )


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)
