"""Seeded random instances for the verification suites.

Every trial draws from ``Generator(PCG64(SeedSequence([seed, trial_index])))``, so
a trial depends on nothing but the run seed and its own index. Drawn numbers are
converted to Python ints before they reach exact arithmetic.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Sequence

from numpy.random import PCG64, Generator, SeedSequence

from app.models import ChainMap, FgAbGroup, FinPoset, IntMatrix, PerfectComplex, ThickSupport

from . import complexes, zmodules
from .smith import kernel_basis
from .spectra import enumerate_thick_supports

SMALL_PRIMES = (2, 3, 5, 7)
MAX_COMPLEX_LENGTH = 5
MAX_COMPLEX_RANK = 4
ENTRY_BOUND = 9
POSET_COVER_PROBABILITY = 0.3


def trial_rng(seed: int, index: int) -> Generator:
    return Generator(PCG64(SeedSequence([seed, index])))


class InstanceSampler:
    def __init__(self, rng: Generator) -> None:
        self.rng = rng

    @classmethod
    def for_trial(cls, seed: int, index: int) -> "InstanceSampler":
        return cls(trial_rng(seed, index))

    def integer(self, low: int, high: int) -> int:
        """Uniform on the closed range [low, high]."""

        return int(self.rng.integers(low, high + 1))

    def chance(self, probability: float) -> bool:
        return bool(self.rng.random() < probability)

    def choice(self, options: Sequence):
        return options[self.integer(0, len(options) - 1)]

    def subset(self, items: Sequence) -> list:
        return [item for item in items if self.chance(0.5)]

    def shuffled(self, items: Sequence) -> list:
        order = [int(i) for i in self.rng.permutation(len(items))]
        return [items[i] for i in order]

    # matrices

    def matrix(self, rows: int, cols: int, bound: int = ENTRY_BOUND) -> IntMatrix:
        return IntMatrix(rows, cols, tuple(self.integer(-bound, bound) for _ in range(rows * cols)))

    def sized_matrix(self, max_rows: int, max_cols: int, bound: int = ENTRY_BOUND) -> IntMatrix:
        return self.matrix(self.integer(1, max_rows), self.integer(1, max_cols), bound)

    def unimodular(self, size: int, steps: int | None = None) -> tuple[IntMatrix, IntMatrix]:
        """A product P of elementary operations together with P⁻¹."""

        p = IntMatrix.identity(size).to_rows()
        p_inv = IntMatrix.identity(size).to_rows()
        if size == 0:
            return IntMatrix.identity(0), IntMatrix.identity(0)
        for _ in range(steps if steps is not None else 2 * size):
            i, j = self.integer(0, size - 1), self.integer(0, size - 1)
            kind = self.integer(0, 3)
            if i != j and kind <= 1:
                c = self.choice((-2, -1, 1, 2))
                p[i] = [a + c * b for a, b in zip(p[i], p[j])]
                for row in p_inv:
                    row[j] -= c * row[i]
            elif i != j and kind == 2:
                p[i], p[j] = p[j], p[i]
                for row in p_inv:
                    row[i], row[j] = row[j], row[i]
            else:
                p[i] = [-a for a in p[i]]
                for row in p_inv:
                    row[i] = -row[i]
        return IntMatrix.from_rows(p, cols=size), IntMatrix.from_rows(p_inv, cols=size)

    # modules

    def module(self, max_rank: int = 2, max_factors: int = 4) -> FgAbGroup:
        rank = self.integer(0, max_rank)
        orders = [self.choice(SMALL_PRIMES) ** self.integer(1, 3) for _ in range(self.integer(0, max_factors))]
        return zmodules.from_cyclics(rank, orders)

    def torsion_module(self, max_factors: int = 4) -> FgAbGroup:
        return self.module(max_rank=0, max_factors=max_factors)

    def z_support(self, full_probability: float = 0.25) -> ThickSupport:
        if self.chance(full_probability):
            return ThickSupport.full_spectrum()
        return ThickSupport.primes(*self.subset(SMALL_PRIMES))

    def admissible_support(self, base: ThickSupport) -> ThickSupport:
        """A random support containing ``base``."""

        if base.full or self.chance(0.2):
            return ThickSupport.full_spectrum()
        return ThickSupport.primes(*base.points, *self.subset(SMALL_PRIMES))

    def extension(self) -> tuple[FgAbGroup, FgAbGroup, FgAbGroup]:
        kind = self.integer(0, 2)
        if kind == 0:
            return zmodules.cyclic_extension(self.choice(SMALL_PRIMES), self.integer(1, 3), self.integer(1, 3))
        if kind == 1:
            return zmodules.split_extension(self.module(), self.module())
        return zmodules.multiplication_extension(self.integer(1, 12))

    # complexes

    def complex(self, torsion_only: bool = False) -> PerfectComplex:
        if not torsion_only and self.chance(0.5):
            return self._kernel_chain_complex()
        return self._scrambled_sum(torsion_only)

    def torsion_complex(self) -> PerfectComplex:
        """Complex whose homology is finite in every degree."""

        return self._scrambled_sum(torsion_only=True)

    def _kernel_chain_complex(self) -> PerfectComplex:
        # d_{n+1} factors through a basis of ker d_n, so d² = 0 by construction
        bottom = self.integer(-2, 2)
        ranks = [self.integer(0, MAX_COMPLEX_RANK) for _ in range(self.integer(1, MAX_COMPLEX_LENGTH))]
        differentials: list[IntMatrix] = []
        previous = IntMatrix.zeros(0, ranks[0])
        for index in range(1, len(ranks)):
            kernel = kernel_basis(previous)
            d = kernel @ self.matrix(kernel.cols, ranks[index], bound=3)
            differentials.append(d)
            previous = d
        return PerfectComplex(bottom, tuple(ranks), tuple(differentials))

    def _scrambled_sum(self, torsion_only: bool) -> PerfectComplex:
        bottom = self.integer(-2, 2)
        top = bottom + self.integer(0, MAX_COMPLEX_LENGTH - 1)
        total = complexes.zero_complex(bottom)
        for _ in range(self.integer(1, 3)):
            piece = self._piece(bottom, top, torsion_only)
            candidate = complexes.direct_sum(total, piece)
            if max(candidate.ranks, default=0) <= MAX_COMPLEX_RANK:
                total = candidate
        bases = {n: self.unimodular(total.rank(n)) for n in total.degrees}
        return complexes.change_of_basis(total, bases).trimmed()

    def _piece(self, bottom: int, top: int, torsion_only: bool) -> PerfectComplex:
        if top > bottom and self.chance(0.3):
            degree = self.integer(bottom, top - 1)
            size = self.integer(1, 2)
            contractible = PerfectComplex(0, (size, size), (IntMatrix.identity(size),))
            return complexes.shift(contractible, degree)
        module = self.torsion_module(max_factors=2) if torsion_only else self.module(max_rank=1, max_factors=2)
        resolution = complexes.from_module(module)
        return complexes.shift(resolution, self.integer(bottom, max(bottom, top - 1)))

    # chain maps

    def chain_map(self, torsion_only: bool = False) -> ChainMap:
        draw = self.torsion_complex if torsion_only else self.complex
        kind = self.integer(0, 5)
        if kind == 0:
            return self.null_homotopic_map(draw(), draw())
        if kind == 1:
            return complexes.scalar_map(draw(), self.integer(-3, 3))
        if kind == 2:
            source = draw()
            return complexes.add_maps(
                complexes.scalar_map(source, self.integer(-3, 3)),
                self.null_homotopic_map(source, source),
            )
        if kind == 3:
            first, second = draw(), draw()
            if self.chance(0.5):
                return complexes.inclusion_into_sum(first, second)
            return complexes.projection_from_sum(first, second)
        source = draw()
        k = self.integer(source.bottom_degree - 1, source.top_degree + 1)
        if kind == 4:
            return complexes.truncation_inclusion(source, k)
        return complexes.truncation_projection(source, k)

    def null_homotopic_map(self, source: PerfectComplex, target: PerfectComplex) -> ChainMap:
        homotopy = {
            n: self.matrix(target.rank(n + 1), source.rank(n), bound=2) for n in source.degrees
        }
        return complexes.null_homotopic_map(source, target, homotopy)

    # posets

    def poset(self, max_points: int = 10, cover_probability: float = POSET_COVER_PROBABILITY) -> FinPoset:
        """Random labels; covers only go forward along a random linear order, so no cycles."""

        size = self.integer(1, max_points)
        labels = self.shuffled([f"p{i}" for i in range(size)])
        covers = [
            (labels[i], labels[j])
            for i in range(size)
            for j in range(i + 1, size)
            if self.chance(cover_probability)
        ]
        return FinPoset.from_covers(labels, covers)

    def relabeling(self, model: FinPoset) -> dict[str, str]:
        fresh = self.shuffled([f"q{i}" for i in range(len(model))])
        return dict(zip(model.points, fresh))


def primary_groups(p: int, max_exponent: int = 4, max_summands: int = 3) -> list[FgAbGroup]:
    """Every p-primary group with at most ``max_summands`` cyclic summands of exponent ≤ ``max_exponent``."""

    groups = []
    for count in range(1, max_summands + 1):
        for exponents in combinations_with_replacement(range(1, max_exponent + 1), count):
            groups.append(zmodules.from_cyclics(0, [p**e for e in exponents]))
    return groups


@lru_cache(maxsize=None)
def labeled_posets(size: int) -> tuple[FinPoset, ...]:
    """Every partial order on the points a, b, c, … (first ``size`` letters), each once.

    A poset on n+1 points restricts to a unique poset on the first n, and the new
    point is fixed by its strict down-set D and up-set U: D down-closed, U up-closed,
    disjoint, with every element of D below every element of U.
    """

    if size == 0:
        return (FinPoset(()),)
    new = chr(ord("a") + size - 1)
    found: list[FinPoset] = []
    for base in labeled_posets(size - 1):
        up_sets = [s.points for s in enumerate_thick_supports(base)] if base.points else [frozenset()]
        everything = frozenset(base.points)
        for above in up_sets:
            for complement in up_sets:
                below = everything - complement
                if not above <= complement:
                    continue
                if any(not base.leq(d, u) for d in below for u in above):
                    continue
                order = set(base.order) | {(new, new)}
                order |= {(d, new) for d in below} | {(new, u) for u in above}
                found.append(FinPoset((*base.points, new), frozenset(order)))
    return tuple(found)
