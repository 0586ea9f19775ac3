"""Grothendieck-group classes over supports of Spec ℤ.

K₀ of the wide subcategory on a support is read through its universal Euler
characteristic: the free rank over the full spectrum, and one p-length per
prime over a finite set of primes.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from app.core.errors import DomainError, InputError
from app.models import ChainMap, FgAbGroup, K0Class, PerfectComplex, SupportDecomposition, ThickSupport

from . import complexes, zmodules
from .spectra import is_subsupport


def zero_class(support: ThickSupport) -> K0Class:
    _check_integral(support)
    if support.full:
        return K0Class.zero_full()
    return K0Class.zero_over(tuple(sorted(support.points)))


def class_of_module(module: FgAbGroup, support: ThickSupport) -> K0Class:
    _check_integral(support)
    _check_module_inside(module, support)
    if support.full:
        return K0Class(True, (), (module.free_rank,))
    primes = tuple(sorted(support.points))
    return K0Class(False, primes, tuple(zmodules.p_length(module, p) for p in primes))


def class_of_complex(complex_: PerfectComplex, support: ThickSupport) -> K0Class:
    """Σ (−1)ⁿ [H_n(X)] in K₀ of the wide subcategory on the support."""

    _check_integral(support)
    groups = complexes.homology_groups(complex_)
    for n, group in groups.items():
        if not is_subsupport(zmodules.support(group), support):
            raise DomainError(f"H_{n} = {group} is not supported in {support}: {_escapee(group, support)}")
    total = zero_class(support)
    for n, group in groups.items():
        term = class_of_module(group, support)
        total = total - term if n % 2 else total + term
    return total


def check_triangle_additivity(chain_map: ChainMap, support: ThickSupport) -> bool:
    """[cone f] = [Y] − [X] for the triangle X → Y → cone f → ΣX."""

    source = class_of_complex(chain_map.source, support)
    target = class_of_complex(chain_map.target, support)
    return class_of_complex(complexes.cone(chain_map), support) == target - source


def check_truncation_identity(complex_: PerfectComplex, support: ThickSupport) -> bool:
    """[X] = Σ (−1)ⁿ [H_n(X)[0]], each term computed through the resolution of H_n(X)."""

    expected = class_of_complex(complex_, support)
    total = zero_class(support)
    for n, group in complexes.homology_groups(complex_).items():
        term = class_of_complex(complexes.from_module(group), support)
        total = total - term if n % 2 else total + term
    return total == expected


def check_truncation_triangle(complex_: PerfectComplex, k: int, support: ThickSupport) -> bool:
    """Additivity along X_{≥k} → X → X_{≤k−1}.

    The cone of the kernel-subcomplex inclusion and the quotient truncation must
    carry the same class, and the classes of the two truncations must add up to [X].
    """

    inclusion = complexes.truncation_inclusion(complex_, k)
    if not check_triangle_additivity(inclusion, support):
        return False
    upper = class_of_complex(complexes.truncate_above(complex_, k), support)
    lower = class_of_complex(complexes.truncate_below(complex_, k - 1), support)
    if class_of_complex(complexes.cone(inclusion), support) != lower:
        return False
    return upper + lower == class_of_complex(complex_, support)


def check_ses_additivity(
    first: FgAbGroup, middle: FgAbGroup, last: FgAbGroup, support: ThickSupport
) -> bool:
    """[B] = [A] + [C] for an extension 0 → A → B → C → 0."""

    return class_of_module(middle, support) == class_of_module(first, support) + class_of_module(
        last, support
    )


def decompose_class(klass: K0Class, decomposition: SupportDecomposition | Sequence[ThickSupport]) -> list[K0Class]:
    """Restrict a class to each part of a decomposition of its support."""

    parts = decomposition.parts if isinstance(decomposition, SupportDecomposition) else tuple(decomposition)
    if klass.full:
        if len(parts) != 1 or not parts[0].full:
            raise InputError("the full spectrum is indecomposable; its class has a single part")
        return [klass]
    coords = dict(zip(klass.primes, klass.coords))
    covered: set[int] = set()
    pieces: list[K0Class] = []
    for part in parts:
        _check_integral(part)
        if part.full or not part.points <= coords.keys():
            raise InputError(f"part {part} is not contained in the support of the class")
        if covered & part.points:
            raise InputError(f"part {part} overlaps an earlier part")
        covered |= part.points
        primes = tuple(sorted(part.points))
        pieces.append(K0Class(False, primes, tuple(coords[p] for p in primes)))
    if covered != coords.keys():
        raise InputError("the parts do not cover the support of the class")
    return pieces


def concat_classes(classes: Iterable[K0Class]) -> K0Class:
    """Reassemble classes over disjoint finite sets of primes."""

    coords: dict[int, int] = {}
    for klass in classes:
        if klass.full:
            raise InputError("classes over the full spectrum cannot be concatenated")
        for p, c in zip(klass.primes, klass.coords):
            if p in coords:
                raise InputError(f"prime {p} appears in more than one class")
            coords[p] = c
    primes = tuple(sorted(coords))
    return K0Class(False, primes, tuple(coords[p] for p in primes))


def _check_integral(support: ThickSupport) -> None:
    if not support.over_integers:
        raise InputError("Grothendieck-group classes are defined over Spec Z supports only")


def _check_module_inside(module: FgAbGroup, support: ThickSupport) -> None:
    if not is_subsupport(zmodules.support(module), support):
        raise DomainError(f"{module} is not supported in {support}: {_escapee(module, support)}")


def _escapee(module: FgAbGroup, support: ThickSupport) -> str:
    if module.free_rank:
        return "the generic point (0) lies in its support"
    outside = sorted(p for p, _ in zmodules.elementary_divisors(module) if p not in support)
    return f"prime {outside[0]} lies outside"
