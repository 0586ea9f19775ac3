from __future__ import annotations

from enum import StrEnum

from app.core.errors import InputError


class TruncationMode(StrEnum):
    ABOVE = "above"
    BELOW = "below"


class SuiteName(StrEnum):
    """Verification suites exposed by ``verify --suite``."""

    SNF = "snf"
    HOMOLOGY = "homology"
    EULER = "euler"
    K0_ISO = "k0-iso"
    SES = "ses"
    EXT_VANISH = "ext-vanish"
    HOVEY = "hovey"
    KS = "ks"
    LOCAL = "local"
    SPLIT = "split"
    ALL = "all"

    @classmethod
    def from_raw(cls, raw: str) -> "SuiteName":
        value = raw.strip().lower()
        for member in cls:
            if value == member.value:
                return member
        aliases = {
            "k0": cls.K0_ISO,
            "k0_iso": cls.K0_ISO,
            "ext_vanish": cls.EXT_VANISH,
            "ext": cls.EXT_VANISH,
            "krull-schmidt": cls.KS,
        }
        if value in aliases:
            return aliases[value]
        raise InputError(f"unknown verification suite: {raw}")
