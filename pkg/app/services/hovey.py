"""Wide and thick subcategories classified by thick supports.

Subcategories are represented by their supports; membership is decided by
comparing supports, never by listing objects.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from app.core.errors import DomainError, InputError
from app.models import FgAbGroup, PerfectComplex, ThickSubcat, ThickSupport, WideSubcat

from . import complexes, zmodules
from .spectra import are_disjoint, is_subsupport, ks_decompose, support_union


def xi(support: ThickSupport) -> WideSubcat:
    return WideSubcat(support)


def zeta(support: ThickSupport) -> ThickSubcat:
    return ThickSubcat(support)


def f(wide: WideSubcat) -> ThickSubcat:
    """Complexes whose homology lies in the wide subcategory; f(ξ(S)) = ζ(S)."""

    return ThickSubcat(wide.support)


def xi_contains(wide: WideSubcat, module: FgAbGroup) -> bool:
    return is_subsupport(zmodules.support(module), _integral(wide.support))


def zeta_contains(thick: ThickSubcat, complex_: PerfectComplex) -> bool:
    return is_subsupport(complexes.support(complex_), _integral(thick.support))


def f_contains(wide: WideSubcat, complex_: PerfectComplex) -> bool:
    return all(xi_contains(wide, complexes.homology(complex_, n)) for n in complex_.degrees)


def check_diagram_commutes(support: ThickSupport, complex_: PerfectComplex) -> bool:
    """ζ(S) and f(ξ(S)) agree on the complex; False signals a defect."""

    return zeta_contains(zeta(support), complex_) == f_contains(xi(support), complex_)


def wide_support_of(modules: Iterable[FgAbGroup]) -> WideSubcat:
    """Smallest ξ(S) containing every given module."""

    total = ThickSupport.primes()
    for module in modules:
        total = support_union(total, zmodules.support(module))
    return WideSubcat(total)


def decompose_wide(wide: WideSubcat) -> list[WideSubcat]:
    support = wide.support
    return [WideSubcat(part) for part in ks_decompose(support.model, support).parts]


def decompose_thick(thick: ThickSubcat) -> list[ThickSubcat]:
    support = thick.support
    return [ThickSubcat(part) for part in ks_decompose(support.model, support).parts]


def split_object(wide: WideSubcat, module: FgAbGroup) -> list[tuple[WideSubcat, FgAbGroup]]:
    """Split M along the indecomposable components of W.

    Each support-split piece of M goes to the unique component containing its
    support; components without a piece are dropped.
    """

    if not xi_contains(wide, module):
        raise DomainError(f"{module} does not belong to the wide subcategory on {wide.support}")
    components = decompose_wide(wide)
    assigned: dict[int, list[FgAbGroup]] = {}
    for piece_support, piece in zmodules.split_by_support(module):
        owners = [i for i, component in enumerate(components) if is_subsupport(piece_support, component.support)]
        if len(owners) != 1:
            raise DomainError(f"piece {piece} is not owned by exactly one component of {wide.support}")
        assigned.setdefault(owners[0], []).append(piece)
    return [(components[i], zmodules.direct_sum_all(assigned[i])) for i in sorted(assigned)]


def coproduct(parts: Sequence[WideSubcat]) -> WideSubcat:
    """W₁ ∐ … ∐ W_k for subcategories with pairwise disjoint supports."""

    if not parts:
        return WideSubcat(ThickSupport.primes())
    total = ThickSupport(parts[0].support.model, frozenset())
    for i, part in enumerate(parts):
        support = part.support
        for other in parts[:i]:
            if not are_disjoint(support, other.support):
                raise DomainError(f"supports {other.support} and {support} are not disjoint")
        total = support_union(total, support)
    return WideSubcat(total)


def check_coproduct_closure(
    first: WideSubcat, second: WideSubcat, first_member: FgAbGroup, second_member: FgAbGroup
) -> bool:
    """Hom and Ext¹ vanish across disjoint components, and the sum lies in their coproduct."""

    if not (xi_contains(first, first_member) and xi_contains(second, second_member)):
        raise DomainError("each module must belong to its own component")
    for source, target in ((first_member, second_member), (second_member, first_member)):
        if not zmodules.hom(source, target).is_zero or not zmodules.ext1(source, target).is_zero:
            return False
    return xi_contains(coproduct([first, second]), zmodules.direct_sum(first_member, second_member))


def _integral(support: ThickSupport) -> ThickSupport:
    if not support.over_integers:
        raise InputError("subcategories are classified over Spec Z supports")
    return support
