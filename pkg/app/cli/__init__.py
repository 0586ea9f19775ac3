from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from app.core.config import get_settings
from app.core.errors import WideSupportError
from app.core.logging import configure_logging, get_logger
from app.services import InputRepository

from .commands import register_all

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INPUT_ERROR = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wide-supports",
        description="Thick supports, wide subcategories and their Grothendieck groups over Z and finite posets.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    register_all(subparsers)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Execute one command; 0 on success, 1 on verification failure, 2 on input error."""

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT_ERROR
    try:
        return args.handler(args, InputRepository())
    except WideSupportError as exc:
        logger.debug("command %s failed", args.command, exc_info=True)
        print(f"error: {_with_source(args, exc)}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def _with_source(args: argparse.Namespace, exc: WideSupportError) -> str:
    # loader errors already lead with the path; errors raised after loading do not
    message = str(exc)
    inputs = [Path(value) for name in ("source", "matrix", "other") if (value := getattr(args, name, None))]
    if not inputs or any(str(path) in message for path in inputs):
        return message
    return f"{inputs[0]}: {message}"


def main() -> None:
    try:
        settings = get_settings()
    except WideSupportError as exc:
        print(f"error: {exc}", file=sys.stderr)
        sys.exit(EXIT_INPUT_ERROR)
    configure_logging(settings.log_level)
    sys.exit(run())


__all__ = ["EXIT_INPUT_ERROR", "EXIT_OK", "EXIT_VERIFICATION_FAILED", "build_parser", "main", "run"]
