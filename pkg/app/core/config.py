from __future__ import annotations

import logging
import os
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from app.core.errors import InputError

load_dotenv()


class Settings(BaseModel):
    model_config = ConfigDict(frozen=True)

    log_level: str = "WARNING"
    verify_workers: int = Field(default=1, ge=1)
    witness_limit: int = Field(default=10, ge=0)
    max_enumeration_points: int = Field(default=16, ge=0)

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.strip().upper()
        if level not in logging.getLevelNamesMapping():
            raise ValueError(f"unknown log level {value!r}")
        return level


@lru_cache
def get_settings() -> Settings:
    raw = {
        "log_level": os.getenv("WIDESUPP_LOG_LEVEL"),
        "verify_workers": os.getenv("WIDESUPP_VERIFY_WORKERS"),
        "witness_limit": os.getenv("WIDESUPP_WITNESS_LIMIT"),
        "max_enumeration_points": os.getenv("WIDESUPP_MAX_ENUMERATION_POINTS"),
    }
    try:
        return Settings(**{key: value for key, value in raw.items() if value is not None})
    except ValidationError as exc:
        raise InputError(f"invalid environment configuration: {exc}") from exc
