from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from app.core.errors import InputError

from .matrix import IntMatrix


@dataclass(frozen=True)
class PerfectComplex:
    """Bounded complex of finitely generated free ℤ-modules, homologically graded.

    ``ranks[i]`` is the rank in degree ``bottom_degree + i``; ``differentials[i]``
    is d_n for n = bottom_degree + i + 1, a matrix of shape rank(n−1) × rank(n).
    """

    bottom_degree: int = 0
    ranks: tuple[int, ...] = ()
    differentials: tuple[IntMatrix, ...] = ()

    def __post_init__(self) -> None:
        if any(r < 0 for r in self.ranks):
            raise InputError(f"ranks must be nonnegative, got {list(self.ranks)}")
        expected = max(len(self.ranks) - 1, 0)
        if len(self.differentials) != expected:
            raise InputError(
                f"a complex with {len(self.ranks)} degrees needs {expected} differentials, "
                f"got {len(self.differentials)}"
            )
        for n in range(self.bottom_degree + 1, self.top_degree + 1):
            d = self.differential(n)
            if d.shape != (self.rank(n - 1), self.rank(n)):
                raise InputError(
                    f"d_{n} has shape {d.rows}x{d.cols}, expected {self.rank(n - 1)}x{self.rank(n)}"
                )
        for n in range(self.bottom_degree + 1, self.top_degree):
            if not (self.differential(n) @ self.differential(n + 1)).is_zero:
                raise InputError(f"d_{n} ∘ d_{n + 1} is not zero")

    @property
    def top_degree(self) -> int:
        return self.bottom_degree + len(self.ranks) - 1

    @property
    def degrees(self) -> range:
        return range(self.bottom_degree, self.top_degree + 1)

    @property
    def is_zero(self) -> bool:
        return not any(self.ranks)

    def rank(self, n: int) -> int:
        if n < self.bottom_degree or n > self.top_degree:
            return 0
        return self.ranks[n - self.bottom_degree]

    def differential(self, n: int) -> IntMatrix:
        """d_n : C_n → C_{n−1}; zero outside the stored range."""

        if self.bottom_degree < n <= self.top_degree:
            return self.differentials[n - self.bottom_degree - 1]
        return IntMatrix.zeros(self.rank(n - 1), self.rank(n))

    def nonzero_degrees(self) -> list[int]:
        return [n for n in self.degrees if self.rank(n)]

    def trimmed(self) -> "PerfectComplex":
        """Drop zero-rank degrees at both ends; the zero complex becomes empty."""

        live = self.nonzero_degrees()
        if not live:
            return PerfectComplex(0, (), ())
        low, high = live[0], live[-1]
        return PerfectComplex(
            low,
            tuple(self.rank(n) for n in range(low, high + 1)),
            tuple(self.differential(n) for n in range(low + 1, high + 1)),
        )


@dataclass(frozen=True)
class ChainMap:
    """Degreewise matrices f_n : X_n → Y_n commuting with the differentials."""

    source: PerfectComplex
    target: PerfectComplex
    components: tuple[tuple[int, IntMatrix], ...] = ()

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for n, matrix in self.components:
            if n in seen:
                raise InputError(f"duplicate component for degree {n}")
            seen.add(n)
            if matrix.shape != (self.target.rank(n), self.source.rank(n)):
                raise InputError(
                    f"f_{n} has shape {matrix.rows}x{matrix.cols}, "
                    f"expected {self.target.rank(n)}x{self.source.rank(n)}"
                )
        for n in self.degree_span():
            left = self.component(n - 1) @ self.source.differential(n)
            right = self.target.differential(n) @ self.component(n)
            if left != right:
                raise InputError(f"chain map square at degree {n} does not commute")

    @classmethod
    def from_mapping(
        cls, source: PerfectComplex, target: PerfectComplex, components: Mapping[int, IntMatrix]
    ) -> "ChainMap":
        return cls(source, target, tuple(sorted(components.items())))

    def degree_span(self) -> range:
        ends = [c for c in (self.source, self.target) if c.ranks]
        if not ends:
            return range(0)
        low = min(c.bottom_degree for c in ends)
        high = max(c.top_degree for c in ends)
        return range(low, high + 2)

    def component(self, n: int) -> IntMatrix:
        for degree, matrix in self.components:
            if degree == n:
                return matrix
        return IntMatrix.zeros(self.target.rank(n), self.source.rank(n))

    def __iter__(self) -> Iterator[tuple[int, IntMatrix]]:
        return iter(self.components)
