from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Callable, TypeVar

from pydantic import BaseModel, ValidationError

from app.core.errors import InputError
from app.core.logging import get_logger
from app.models import ChainMap, FgAbGroup, FinPoset, IntMatrix, PerfectComplex
from app.schemas.request import ChainMapPayload, ComplexPayload, MatrixPayload, ModulePayload, PosetPayload

from . import zmodules

logger = get_logger(__name__)

PayloadT = TypeVar("PayloadT", bound=BaseModel)
ResultT = TypeVar("ResultT")


class InputRepository:
    """Loads input documents; every failure becomes an InputError naming file and location."""

    def __init__(self, base_dir: str | Path = ".") -> None:
        self.base_dir = Path(base_dir)

    def load_matrix(self, path: str | Path) -> IntMatrix:
        return self._load(path, MatrixPayload, lambda payload: payload.to_matrix())

    def load_module(self, path: str | Path) -> FgAbGroup:
        return self._load(path, ModulePayload, lambda payload: zmodules.from_presentation(*payload.to_presentation()))

    def load_complex(self, path: str | Path) -> PerfectComplex:
        return self._load(path, ComplexPayload, lambda payload: payload.to_complex())

    def load_chain_map(self, path: str | Path) -> ChainMap:
        return self._load(path, ChainMapPayload, lambda payload: payload.to_chain_map())

    def load_poset(self, path: str | Path) -> FinPoset:
        return self._load(path, PosetPayload, lambda payload: payload.to_poset())

    def _load(
        self, path: str | Path, schema: type[PayloadT], build: Callable[[PayloadT], ResultT]
    ) -> ResultT:
        resolved = self.base_dir / path
        raw = _read_json(resolved)
        try:
            payload = schema.model_validate(raw)
        except ValidationError as exc:
            raise InputError(f"{resolved}: {_describe(exc)}") from exc
        try:
            return build(payload)
        except (InputError, ValueError) as exc:
            raise InputError(f"{resolved}: {exc}") from exc


def _read_json(path: Path) -> Any:
    logger.debug("reading %s", path)
    try:
        with path.open("r", encoding="utf-8") as handle:
            return json.load(handle)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    except OSError as exc:
        raise InputError(f"{path}: cannot read file: {exc.strerror or exc}") from exc


def _describe(exc: ValidationError) -> str:
    first = exc.errors()[0]
    location = ".".join(str(part) for part in first["loc"]) or "<root>"
    extra = len(exc.errors()) - 1
    suffix = f" (and {extra} more)" if extra else ""
    return f"at {location}: {first['msg']}{suffix}"
