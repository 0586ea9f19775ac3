from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence, TypeAlias

from sympy import isprime

from app.core.errors import InputError

GENERIC_POINT = 0


@dataclass(frozen=True)
class ZSpec:
    """Spec ℤ: the generic point (0), encoded as 0, and one closed point per rational prime."""

    def has_point(self, point: object) -> bool:
        if isinstance(point, bool) or not isinstance(point, int):
            return False
        return point == GENERIC_POINT or (point >= 2 and isprime(point))

    def __str__(self) -> str:
        return "Spec Z"


ZSPEC = ZSpec()


@dataclass(frozen=True)
class FinPoset:
    """Finite spectrum model.

    ``order`` holds the pairs (p, q) with p ⤳ q, i.e. q ∈ V(p); the relation is
    reflexive, antisymmetric and transitive.
    """

    points: tuple[str, ...]
    order: frozenset[tuple[str, str]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if len(set(self.points)) != len(self.points):
            raise InputError(f"duplicate point names in {list(self.points)}")
        known = set(self.points)
        for lower, upper in self.order:
            if lower not in known or upper not in known:
                raise InputError(f"relation ({lower}, {upper}) mentions an unknown point")
        for p in self.points:
            if (p, p) not in self.order:
                raise InputError(f"specialization relation is not reflexive at {p}")
        for p, q in self.order:
            if p != q and (q, p) in self.order:
                raise InputError(f"specialization relation is not antisymmetric: {p} and {q}")
        for p, q in self.order:
            for r in self.points:
                if (q, r) in self.order and (p, r) not in self.order:
                    raise InputError(f"specialization relation is not transitive: {p} -> {q} -> {r}")

    @classmethod
    def from_covers(cls, points: Sequence[str], covers: Iterable[Sequence[str]]) -> "FinPoset":
        """Build the reflexive-transitive closure of the given [lower, upper] pairs."""

        names = tuple(points)
        index = {name: i for i, name in enumerate(names)}
        reach = [[i == j for j in range(len(names))] for i in range(len(names))]
        for pair in covers:
            if len(pair) != 2:
                raise InputError(f"cover {list(pair)} must be a [lower, upper] pair")
            lower, upper = pair
            if lower not in index or upper not in index:
                raise InputError(f"cover ({lower}, {upper}) mentions an unknown point")
            reach[index[lower]][index[upper]] = True
        for k in range(len(names)):
            for i in range(len(names)):
                if reach[i][k]:
                    for j in range(len(names)):
                        if reach[k][j]:
                            reach[i][j] = True
        for i in range(len(names)):
            for j in range(i + 1, len(names)):
                if reach[i][j] and reach[j][i]:
                    raise InputError(f"covers contain a cycle through {names[i]} and {names[j]}")
        order = frozenset(
            (names[i], names[j]) for i in range(len(names)) for j in range(len(names)) if reach[i][j]
        )
        return cls(names, order)

    @classmethod
    def antichain(cls, points: Sequence[str]) -> "FinPoset":
        return cls.from_covers(points, [])

    @classmethod
    def chain(cls, points: Sequence[str]) -> "FinPoset":
        return cls.from_covers(points, list(zip(points, points[1:])))

    @cached_property
    def _up_sets(self) -> dict[str, frozenset[str]]:
        ups: dict[str, set[str]] = {p: set() for p in self.points}
        for lower, upper in self.order:
            ups[lower].add(upper)
        return {p: frozenset(values) for p, values in ups.items()}

    @cached_property
    def _positions(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.points)}

    def has_point(self, point: object) -> bool:
        return point in self._positions

    def position(self, point: str) -> int:
        return self._positions[point]

    def up_set(self, point: str) -> frozenset[str]:
        return self._up_sets[point]

    def leq(self, lower: str, upper: str) -> bool:
        return (lower, upper) in self.order

    def sort_points(self, points: Iterable[str]) -> list[str]:
        return sorted(points, key=self.position)

    def __len__(self) -> int:
        return len(self.points)

    def __str__(self) -> str:
        return f"poset on {len(self.points)} points"


SpectrumModel: TypeAlias = ZSpec | FinPoset


@dataclass(frozen=True)
class ThickSupport:
    """A specialization-closed subset of a spectrum model.

    Over Spec ℤ a support is either the whole spectrum (``full``) or a finite set of
    closed points (rational primes); over a finite poset it is an up-closed set of points.
    """

    model: SpectrumModel
    points: frozenset = frozenset()
    full: bool = False

    def __post_init__(self) -> None:
        if isinstance(self.model, ZSpec):
            if self.full and self.points:
                raise InputError("the full support over Spec Z carries no explicit primes")
            for p in self.points:
                if not isinstance(p, int) or p < 2 or not isprime(p):
                    raise InputError(f"{p} is not a rational prime")
            return
        if self.full:
            raise InputError("finite spectrum supports list their points explicitly")
        for p in self.points:
            if not self.model.has_point(p):
                raise InputError(f"unknown point {p!r}")
        for p in self.points:
            missing = self.model.up_set(p) - self.points
            if missing:
                raise InputError(
                    f"subset is not specialization closed: {p} specializes to {sorted(missing)}"
                )

    @classmethod
    def full_spectrum(cls) -> "ThickSupport":
        return cls(ZSPEC, frozenset(), True)

    @classmethod
    def primes(cls, *primes: int) -> "ThickSupport":
        return cls(ZSPEC, frozenset(primes))

    @classmethod
    def of(cls, model: SpectrumModel, points: Iterable) -> "ThickSupport":
        return cls(model, frozenset(points))

    @property
    def is_empty(self) -> bool:
        return not self.full and not self.points

    @property
    def over_integers(self) -> bool:
        return isinstance(self.model, ZSpec)

    def __contains__(self, point: object) -> bool:
        if self.full:
            return ZSPEC.has_point(point)
        return point in self.points

    def sorted_points(self) -> list:
        if isinstance(self.model, FinPoset):
            return self.model.sort_points(self.points)
        return sorted(self.points)

    def __str__(self) -> str:
        if self.full:
            return "full"
        return "{" + ",".join(str(p) for p in self.sorted_points()) + "}"


@dataclass(frozen=True)
class SupportDecomposition:
    """A thick decomposition A = ⋃ Aᵢ into pairwise disjoint nonempty parts."""

    support: ThickSupport
    parts: tuple[ThickSupport, ...] = ()

    def __post_init__(self) -> None:
        for part in self.parts:
            if part.model != self.support.model:
                raise InputError("decomposition parts must live in the model of the decomposed support")
            if part.is_empty:
                raise InputError("decomposition parts must be nonempty")

    def __len__(self) -> int:
        return len(self.parts)

    def part_sets(self) -> frozenset[frozenset]:
        """Order-free view used to compare decompositions."""

        return frozenset(part.points if not part.full else frozenset({"full"}) for part in self.parts)
