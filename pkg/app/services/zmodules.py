"""Finitely generated abelian groups: canonical forms, supports, lengths, Hom and Ext¹."""

from __future__ import annotations

from math import gcd
from typing import Iterable

from sympy import factorint, isprime, multiplicity

from app.core.errors import DomainError, InputError
from app.models import FgAbGroup, IntMatrix, ThickSupport

from .smith import smith_normal_form

ZERO = FgAbGroup()
Z = FgAbGroup(free_rank=1)


def cyclic(order: int) -> FgAbGroup:
    """ℤ/order, with ℤ/0 read as ℤ."""

    if order == 0:
        return Z
    return from_cyclics(0, [order])


def from_cyclics(free_rank: int, orders: Iterable[int]) -> FgAbGroup:
    """Canonical form of ℤ^free_rank ⊕ ⨁ ℤ/nᵢ, regrouping prime powers into a divisibility chain."""

    exponents: dict[int, list[int]] = {}
    for order in orders:
        order = abs(int(order))
        if order == 0:
            raise InputError("finite cyclic orders must be nonzero; pass free summands as free_rank")
        for p, e in factorint(order).items():
            exponents.setdefault(int(p), []).append(int(e))
    length = max((len(values) for values in exponents.values()), default=0)
    factors = [1] * length
    for p, values in exponents.items():
        # largest exponents go to the last (largest) invariant factors
        for offset, e in enumerate(sorted(values, reverse=True)):
            factors[length - 1 - offset] *= p**e
    return FgAbGroup(free_rank=free_rank, invariant_factors=tuple(factors))


def elementary_divisors(module: FgAbGroup) -> list[tuple[int, int]]:
    """Prime-power summands (p, e) of the torsion part, sorted by prime then exponent."""

    divisors = [
        (int(p), int(e)) for d in module.invariant_factors for p, e in factorint(d).items()
    ]
    return sorted(divisors)


def from_presentation(relations: IntMatrix, generators: int) -> FgAbGroup:
    """Cokernel of the relations: rows are relations among ``generators`` generators."""

    if generators < 0:
        raise InputError(f"generator count must be nonnegative, got {generators}")
    if relations.cols != generators:
        raise InputError(
            f"relations have {relations.cols} columns but the presentation has {generators} generators"
        )
    diagonal = smith_normal_form(relations).diagonal
    nonzero = [d for d in diagonal if d]
    return FgAbGroup(
        free_rank=generators - len(nonzero),
        invariant_factors=tuple(d for d in nonzero if d > 1),
    )


def canonical_presentation(module: FgAbGroup) -> tuple[IntMatrix, int]:
    """Torsion generators first, one relation dᵢ·eᵢ = 0 per invariant factor."""

    generators = module.generator_count
    relations = IntMatrix.diagonal(
        list(module.invariant_factors), len(module.invariant_factors), generators
    )
    return relations, generators


def direct_sum(first: FgAbGroup, second: FgAbGroup) -> FgAbGroup:
    return from_cyclics(
        first.free_rank + second.free_rank,
        [*first.invariant_factors, *second.invariant_factors],
    )


def direct_sum_all(modules: Iterable[FgAbGroup]) -> FgAbGroup:
    total = ZERO
    for module in modules:
        total = direct_sum(total, module)
    return total


def support(module: FgAbGroup) -> ThickSupport:
    """Supp(M) ⊆ Spec ℤ: everything once M has a free summand, else the primes of its torsion."""

    if module.free_rank:
        return ThickSupport.full_spectrum()
    primes = {p for p, _ in elementary_divisors(module)}
    return ThickSupport.primes(*primes)


def p_length(module: FgAbGroup, p: int) -> int:
    """Length of the localization at (p); only finite for torsion groups."""

    _check_prime(p)
    if module.free_rank:
        raise DomainError(f"{module} has free rank {module.free_rank}; its length at ({p}) is infinite")
    return sum(int(multiplicity(p, d)) for d in module.invariant_factors)


def hom(source: FgAbGroup, target: FgAbGroup) -> FgAbGroup:
    free = 0
    orders: list[int] = []
    for a in _cyclic_orders(source):
        for b in _cyclic_orders(target):
            if a == 0 and b == 0:
                free += 1
            elif a == 0:
                orders.append(b)
            elif b == 0:
                continue
            else:
                orders.append(gcd(a, b))
    return from_cyclics(free, orders)


def ext1(source: FgAbGroup, target: FgAbGroup) -> FgAbGroup:
    """Ext¹_ℤ(source, target); higher Ext groups vanish because ℤ is hereditary."""

    orders: list[int] = []
    for a in _cyclic_orders(source):
        if a == 0:
            continue
        for b in _cyclic_orders(target):
            orders.append(a if b == 0 else gcd(a, b))
    return from_cyclics(0, orders)


def primary_component(module: FgAbGroup, p: int) -> FgAbGroup:
    _check_prime(p)
    return from_cyclics(0, [p**e for q, e in elementary_divisors(module) if q == p])


def split_by_support(module: FgAbGroup) -> list[tuple[ThickSupport, FgAbGroup]]:
    """Split M into summands with pairwise disjoint indecomposable supports.

    A free summand puts the generic point in the support, which is then indecomposable,
    so M stays in one piece; otherwise M splits into its primary components.
    """

    if module.is_zero:
        return []
    if module.free_rank:
        return [(ThickSupport.full_spectrum(), module)]
    primes = sorted({p for p, _ in elementary_divisors(module)})
    return [(ThickSupport.primes(p), primary_component(module, p)) for p in primes]


def cyclic_extension(p: int, a: int, b: int) -> tuple[FgAbGroup, FgAbGroup, FgAbGroup]:
    """0 → ℤ/pᵃ → ℤ/pᵃ⁺ᵇ → ℤ/pᵇ → 0, a non-split extension for a, b ≥ 1."""

    _check_prime(p)
    if a < 0 or b < 0:
        raise InputError("extension exponents must be nonnegative")
    return cyclic(p**a), cyclic(p ** (a + b)), cyclic(p**b)


def split_extension(first: FgAbGroup, third: FgAbGroup) -> tuple[FgAbGroup, FgAbGroup, FgAbGroup]:
    return first, direct_sum(first, third), third


def multiplication_extension(n: int) -> tuple[FgAbGroup, FgAbGroup, FgAbGroup]:
    """0 → ℤ –·n→ ℤ → ℤ/n → 0."""

    if n < 1:
        raise InputError(f"multiplier must be positive, got {n}")
    return Z, Z, cyclic(n)


def _cyclic_orders(module: FgAbGroup) -> list[int]:
    return [0] * module.free_rank + list(module.invariant_factors)


def _check_prime(p: int) -> None:
    if not isprime(p):
        raise InputError(f"{p} is not a prime")
