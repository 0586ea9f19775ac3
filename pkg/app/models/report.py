from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SuiteTally:
    suite: str
    trials: int
    failures: int


@dataclass(frozen=True)
class VerifyReport:
    suite: str
    trials: int
    failures: int
    seed: int
    failure_witnesses: tuple[str, ...]
    wall_time_ms: int
    breakdown: tuple[SuiteTally, ...] = ()

    @property
    def passed(self) -> bool:
        return self.failures == 0
