from __future__ import annotations

from dataclasses import dataclass

from app.core.errors import InputError

from .matrix import IntMatrix


@dataclass(frozen=True)
class FgAbGroup:
    """Finitely generated abelian group ℤ^r ⊕ ℤ/d₁ ⊕ … ⊕ ℤ/d_k in canonical form.

    Invariant factors satisfy d₁ | d₂ | … | d_k with every dᵢ ≥ 2, so two values
    are isomorphic exactly when they compare equal.
    """

    free_rank: int = 0
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise InputError(f"free_rank must be nonnegative, got {self.free_rank}")
        factors = self.invariant_factors
        if any(d < 2 for d in factors):
            raise InputError(f"invariant factors must be at least 2, got {list(factors)}")
        for smaller, larger in zip(factors, factors[1:]):
            if larger % smaller:
                raise InputError(f"invariant factors {list(factors)} do not form a divisibility chain")

    @property
    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    @property
    def is_torsion(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | None:
        """Cardinality, or None for infinite groups."""

        if self.free_rank:
            return None
        total = 1
        for d in self.invariant_factors:
            total *= d
        return total

    @property
    def generator_count(self) -> int:
        return self.free_rank + len(self.invariant_factors)

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.invariant_factors]
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class SNFResult:
    """Smith form D = U·A·V with unimodular U and V."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> list[int]:
        return self.D.diagonal_entries()

    @property
    def rank(self) -> int:
        return sum(1 for value in self.diagonal if value)
