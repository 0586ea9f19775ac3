from __future__ import annotations

from typing import Mapping, Sequence

from app.core.errors import InputError
from app.models import ChainMap, FgAbGroup, IntMatrix, PerfectComplex, ThickSupport

from . import zmodules
from .smith import smith_decomposition
from .spectra import support_union


def zero_complex(bottom_degree: int = 0) -> PerfectComplex:
    return PerfectComplex(bottom_degree, (), ())


def build_complex(bottom_degree: int, differentials: Mapping[int, IntMatrix], ranks: Sequence[int]) -> PerfectComplex:
    """Assemble a complex from d_n keyed by degree; missing differentials are zero."""

    top = bottom_degree + len(ranks) - 1
    return PerfectComplex(
        bottom_degree,
        tuple(ranks),
        tuple(
            differentials.get(n, IntMatrix.zeros(ranks[n - 1 - bottom_degree], ranks[n - bottom_degree]))
            for n in range(bottom_degree + 1, top + 1)
        ),
    )


def homology(complex_: PerfectComplex, n: int) -> FgAbGroup:
    """H_n = ker d_n / im d_{n+1}, computed in a Smith basis of ker d_n."""

    rank = complex_.rank(n)
    if rank == 0:
        return zmodules.ZERO
    outgoing = smith_decomposition(complex_.differential(n))
    kernel_dim = rank - outgoing.rank
    incoming = complex_.differential(n + 1)
    # the image lies in ker d_n, whose basis is the last kernel_dim columns of V
    coordinates = (outgoing.V_inverse @ incoming).select_rows(range(outgoing.rank, rank))
    return zmodules.from_presentation(coordinates.transpose(), kernel_dim)


def homology_groups(complex_: PerfectComplex) -> dict[int, FgAbGroup]:
    return {n: homology(complex_, n) for n in complex_.degrees}


def euler_characteristic(complex_: PerfectComplex) -> int:
    return sum((-1) ** (n % 2) * complex_.rank(n) for n in complex_.degrees)


def from_module(module: FgAbGroup) -> PerfectComplex:
    """M[0] as the two-term free resolution 0 → ℤᵐ → ℤⁿ → 0 in degrees 1, 0."""

    relations, generators = zmodules.canonical_presentation(module)
    if relations.rows == 0:
        return PerfectComplex(0, (generators,), ())
    return PerfectComplex(0, (generators, relations.rows), (relations.transpose(),))


def shift(complex_: PerfectComplex, k: int) -> PerfectComplex:
    sign = -1 if k % 2 else 1
    return PerfectComplex(
        complex_.bottom_degree + k,
        complex_.ranks,
        tuple(d.scaled(sign) for d in complex_.differentials),
    )


def direct_sum(first: PerfectComplex, second: PerfectComplex) -> PerfectComplex:
    span = _span(first, second)
    if span is None:
        return zero_complex(first.bottom_degree)
    low, high = span
    return PerfectComplex(
        low,
        tuple(first.rank(n) + second.rank(n) for n in range(low, high + 1)),
        tuple(
            IntMatrix.block_diagonal(first.differential(n), second.differential(n))
            for n in range(low + 1, high + 1)
        ),
    )


def cone(chain_map: ChainMap) -> PerfectComplex:
    """cone_n = X_{n−1} ⊕ Y_n with differential [[−d_X, 0], [f, d_Y]]."""

    source, target = chain_map.source, chain_map.target
    span = _span(shift(source, 1), target)
    if span is None:
        return zero_complex(target.bottom_degree)
    low, high = span
    ranks = tuple(source.rank(n - 1) + target.rank(n) for n in range(low, high + 1))
    differentials = []
    for n in range(low + 1, high + 1):
        differentials.append(
            IntMatrix.blocks(
                [
                    [-source.differential(n - 1), IntMatrix.zeros(source.rank(n - 2), target.rank(n))],
                    [chain_map.component(n - 1), target.differential(n)],
                ]
            )
        )
    return PerfectComplex(low, ranks, tuple(differentials))


def truncate_above(complex_: PerfectComplex, k: int) -> PerfectComplex:
    """Subcomplex with C_n for n > k, ker d_k in degree k and nothing below."""

    if k <= complex_.bottom_degree:
        return complex_
    if k > complex_.top_degree:
        return zero_complex(k)
    data = smith_decomposition(complex_.differential(k))
    rank = complex_.rank(k)
    kernel_dim = rank - data.rank
    into_kernel = (data.V_inverse @ complex_.differential(k + 1)).select_rows(range(data.rank, rank))
    higher = [complex_.differential(n) for n in range(k + 2, complex_.top_degree + 1)]
    ranks = (kernel_dim, *(complex_.rank(n) for n in range(k + 1, complex_.top_degree + 1)))
    if len(ranks) == 1:
        return PerfectComplex(k, ranks, ())
    return PerfectComplex(k, ranks, (into_kernel, *higher))


def truncate_below(complex_: PerfectComplex, k: int) -> PerfectComplex:
    """Quotient X / truncate_above(X, k+1): C_n for n ≤ k and im d_{k+1} in degree k+1."""

    if k >= complex_.top_degree:
        return complex_
    if k + 1 <= complex_.bottom_degree:
        return zero_complex(k + 1)
    incoming = complex_.differential(k + 1)
    data = smith_decomposition(incoming)
    image_map = (incoming @ data.result.V).select_columns(range(data.rank))
    low = complex_.bottom_degree
    ranks = (*(complex_.rank(n) for n in range(low, k + 1)), data.rank)
    lower = [complex_.differential(n) for n in range(low + 1, k + 1)]
    return PerfectComplex(low, ranks, (*lower, image_map))


def truncation_inclusion(complex_: PerfectComplex, k: int) -> ChainMap:
    """The inclusion truncate_above(X, k) → X."""

    sub = truncate_above(complex_, k)
    components: dict[int, IntMatrix] = {}
    for n in sub.degrees:
        if n == k and k > complex_.bottom_degree:
            data = smith_decomposition(complex_.differential(k))
            components[n] = data.result.V.select_columns(range(data.rank, complex_.rank(k)))
        else:
            components[n] = IntMatrix.identity(complex_.rank(n))
    return ChainMap.from_mapping(sub, complex_, components)


def truncation_projection(complex_: PerfectComplex, k: int) -> ChainMap:
    """The quotient map X → truncate_below(X, k)."""

    quotient = truncate_below(complex_, k)
    components: dict[int, IntMatrix] = {}
    for n in quotient.degrees:
        if n == k + 1 and k < complex_.top_degree:
            data = smith_decomposition(complex_.differential(k + 1))
            components[n] = data.V_inverse.select_rows(range(data.rank))
        else:
            components[n] = IntMatrix.identity(complex_.rank(n))
    return ChainMap.from_mapping(complex_, quotient, components)


def support(complex_: PerfectComplex) -> ThickSupport:
    """Supp(X) as the union of the supports of the homology groups."""

    total = ThickSupport.primes()
    for group in homology_groups(complex_).values():
        total = support_union(total, zmodules.support(group))
    return total


def change_of_basis(complex_: PerfectComplex, bases: Mapping[int, tuple[IntMatrix, IntMatrix]]) -> PerfectComplex:
    """Isomorphic complex d'_n = P_{n−1}·d_n·P_n⁻¹ for unimodular pairs (P_n, P_n⁻¹)."""

    def forward(n: int) -> IntMatrix:
        return bases[n][0] if n in bases else IntMatrix.identity(complex_.rank(n))

    def backward(n: int) -> IntMatrix:
        return bases[n][1] if n in bases else IntMatrix.identity(complex_.rank(n))

    for n, (p, p_inv) in bases.items():
        if p.shape != (complex_.rank(n), complex_.rank(n)) or p @ p_inv != IntMatrix.identity(complex_.rank(n)):
            raise InputError(f"basis change in degree {n} is not an invertible pair of the right size")
    return PerfectComplex(
        complex_.bottom_degree,
        complex_.ranks,
        tuple(
            forward(n - 1) @ complex_.differential(n) @ backward(n)
            for n in range(complex_.bottom_degree + 1, complex_.top_degree + 1)
        ),
    )


def identity_map(complex_: PerfectComplex) -> ChainMap:
    return scalar_map(complex_, 1)


def scalar_map(complex_: PerfectComplex, factor: int) -> ChainMap:
    return ChainMap.from_mapping(
        complex_,
        complex_,
        {n: IntMatrix.identity(complex_.rank(n)).scaled(factor) for n in complex_.degrees},
    )


def zero_map(source: PerfectComplex, target: PerfectComplex) -> ChainMap:
    return ChainMap(source, target, ())


def add_maps(first: ChainMap, second: ChainMap) -> ChainMap:
    if first.source != second.source or first.target != second.target:
        raise InputError("chain maps with different endpoints cannot be added")
    degrees = {n for n, _ in first} | {n for n, _ in second}
    return ChainMap.from_mapping(
        first.source,
        first.target,
        {n: first.component(n) + second.component(n) for n in degrees},
    )


def compose(second: ChainMap, first: ChainMap) -> ChainMap:
    """second ∘ first."""

    if first.target != second.source:
        raise InputError("chain maps are not composable")
    degrees = set(first.source.degrees) | set(second.target.degrees)
    return ChainMap.from_mapping(
        first.source,
        second.target,
        {n: second.component(n) @ first.component(n) for n in degrees},
    )


def null_homotopic_map(
    source: PerfectComplex, target: PerfectComplex, homotopy: Mapping[int, IntMatrix]
) -> ChainMap:
    """f_n = d^Y_{n+1}·h_n + h_{n−1}·d^X_n for h_n : X_n → Y_{n+1}; always a chain map."""

    def h(n: int) -> IntMatrix:
        return homotopy.get(n, IntMatrix.zeros(target.rank(n + 1), source.rank(n)))

    for n, matrix in homotopy.items():
        if matrix.shape != (target.rank(n + 1), source.rank(n)):
            raise InputError(f"homotopy component h_{n} has the wrong shape")
    degrees = set(source.degrees) & set(target.degrees)
    return ChainMap.from_mapping(
        source,
        target,
        {n: target.differential(n + 1) @ h(n) + h(n - 1) @ source.differential(n) for n in degrees},
    )


def inclusion_into_sum(first: PerfectComplex, second: PerfectComplex) -> ChainMap:
    """X → X ⊕ Y onto the first summand."""

    total = direct_sum(first, second)
    components = {
        n: IntMatrix.blocks(
            [[IntMatrix.identity(first.rank(n))], [IntMatrix.zeros(second.rank(n), first.rank(n))]]
        )
        for n in first.degrees
    }
    return ChainMap.from_mapping(first, total, components)


def projection_from_sum(first: PerfectComplex, second: PerfectComplex) -> ChainMap:
    """X ⊕ Y → Y onto the second summand."""

    total = direct_sum(first, second)
    components = {
        n: IntMatrix.blocks(
            [[IntMatrix.zeros(second.rank(n), first.rank(n)), IntMatrix.identity(second.rank(n))]]
        )
        for n in second.degrees
    }
    return ChainMap.from_mapping(total, second, components)


def _span(first: PerfectComplex, second: PerfectComplex) -> tuple[int, int] | None:
    live = [c for c in (first, second) if c.ranks]
    if not live:
        return None
    return min(c.bottom_degree for c in live), max(c.top_degree for c in live)
