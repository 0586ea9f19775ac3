from __future__ import annotations

from dataclasses import dataclass

from .spectrum import ThickSupport


@dataclass(frozen=True)
class WideSubcat:
    """ξ(A): the modules whose support lies in A. Equal exactly when the supports are."""

    support: ThickSupport


@dataclass(frozen=True)
class ThickSubcat:
    """ζ(A): the perfect complexes whose support lies in A."""

    support: ThickSupport
