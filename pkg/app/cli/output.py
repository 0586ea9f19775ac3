from __future__ import annotations

import sys

from pydantic import BaseModel


def emit(document: BaseModel) -> None:
    """Structured results go to stdout, one JSON document per command."""

    sys.stdout.write(document.model_dump_json(indent=2))
    sys.stdout.write("\n")
