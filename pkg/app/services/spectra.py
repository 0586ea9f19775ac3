from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from app.core.config import get_settings
from app.core.errors import InputError, ResourceError
from app.core.logging import get_logger
from app.models import (
    GENERIC_POINT,
    FinPoset,
    SpectrumModel,
    SupportDecomposition,
    ThickSupport,
    ZSpec,
)

logger = get_logger(__name__)

EXHAUSTIVE_POINT_LIMIT = 10
PARTITION_POINT_LIMIT = 8


class _UnionFind:
    """Union-find over 0..size-1 with path compression."""

    def __init__(self, size: int) -> None:
        self.parents = list(range(size))

    def find(self, elem: int) -> int:
        root = elem
        while root != self.parents[root]:
            root = self.parents[root]
        while elem != root:
            self.parents[elem], elem = root, self.parents[elem]
        return root

    def union(self, a: int, b: int) -> None:
        root_a, root_b = self.find(a), self.find(b)
        if root_a != root_b:
            # keep the smaller index as root so components come out in input order
            low, high = sorted((root_a, root_b))
            self.parents[high] = low

    def components(self) -> list[list[int]]:
        groups: dict[int, list[int]] = {}
        for i in range(len(self.parents)):
            groups.setdefault(self.find(i), []).append(i)
        return [groups[root] for root in sorted(groups)]


def v_of(model: SpectrumModel, point: object) -> ThickSupport:
    """V(p): the closed set of points specializing from p."""

    if isinstance(model, ZSpec):
        if not model.has_point(point):
            raise InputError(f"{point!r} is not a point of Spec Z")
        if point == GENERIC_POINT:
            return ThickSupport.full_spectrum()
        return ThickSupport.primes(point)  # type: ignore[arg-type]
    if not model.has_point(point):
        raise InputError(f"unknown point {point!r}")
    return ThickSupport(model, model.up_set(point))  # type: ignore[arg-type]


def is_thick_support(model: SpectrumModel, subset: Iterable) -> bool:
    points = set(subset)
    if isinstance(model, ZSpec):
        # V(0) is the whole, infinite spectrum; finite sets of closed points are thick
        return all(model.has_point(p) and p != GENERIC_POINT for p in points)
    if not all(model.has_point(p) for p in points):
        return False
    return all(model.up_set(p) <= points for p in points)


def minimal_points(model: SpectrumModel, support: ThickSupport) -> set:
    _check_model(model, support)
    if support.full:
        return {GENERIC_POINT}
    if isinstance(model, ZSpec):
        return set(support.points)
    return {
        p
        for p in support.points
        if not any(q != p and model.leq(q, p) for q in support.points)
    }


def maximal_points(model: SpectrumModel) -> set:
    if isinstance(model, ZSpec):
        raise InputError("Spec Z has infinitely many maximal points")
    return {p for p in model.points if model.up_set(p) == {p}}


def maximal_support(model: FinPoset) -> ThickSupport:
    """The support on the maximal points; it decomposes whenever the model is not local."""

    return ThickSupport(model, frozenset(maximal_points(model)))


def ks_decompose(model: SpectrumModel, support: ThickSupport) -> SupportDecomposition:
    """Split a support along the connected components of its minimal-point graph.

    Vertices are the minimal points pᵢ, edges join pᵢ and pⱼ when V(pᵢ) ∩ V(pⱼ) ≠ ∅,
    and each component contributes the union of the V(pᵢ) it contains.
    """

    _check_model(model, support)
    if support.is_empty:
        return SupportDecomposition(support, ())
    if isinstance(model, ZSpec):
        if support.full:
            return SupportDecomposition(support, (support,))
        parts = tuple(ThickSupport.primes(p) for p in sorted(support.points))
        return SupportDecomposition(support, parts)

    minimal = model.sort_points(minimal_points(model, support))
    ups = [model.up_set(p) for p in minimal]
    forest = _UnionFind(len(minimal))
    for i in range(len(minimal)):
        for j in range(i + 1, len(minimal)):
            if ups[i] & ups[j]:
                forest.union(i, j)
    parts = tuple(
        ThickSupport(model, frozenset().union(*(ups[i] for i in component)))
        for component in forest.components()
    )
    return SupportDecomposition(support, parts)


def is_indecomposable(model: SpectrumModel, support: ThickSupport) -> bool:
    return not support.is_empty and len(ks_decompose(model, support)) == 1


def is_indecomposable_exhaustive(model: SpectrumModel, support: ThickSupport) -> bool:
    """Brute-force check: no pair of disjoint nonempty thick supports covers the support."""

    _check_model(model, support)
    if support.is_empty:
        return False
    if isinstance(model, ZSpec):
        # anything thick containing the generic point is the full spectrum
        return support.full or len(support.points) == 1
    if len(model) > EXHAUSTIVE_POINT_LIMIT:
        raise ResourceError(
            f"exhaustive search is limited to {EXHAUSTIVE_POINT_LIMIT} points, model has {len(model)}"
        )
    for candidate in _sub_up_sets(model, support.points):
        if candidate and candidate != support.points and is_thick_support(model, support.points - candidate):
            return False
    return True


def is_local(model: SpectrumModel) -> bool:
    if isinstance(model, ZSpec):
        return False
    if not model.points:
        raise InputError("an empty spectrum has no maximal point")
    return len(maximal_points(model)) == 1


def support_union(first: ThickSupport, second: ThickSupport) -> ThickSupport:
    _check_same_model(first, second)
    if first.full or second.full:
        return ThickSupport.full_spectrum()
    return ThickSupport(first.model, first.points | second.points)


def support_intersect(first: ThickSupport, second: ThickSupport) -> ThickSupport:
    _check_same_model(first, second)
    if first.full:
        return second
    if second.full:
        return first
    return ThickSupport(first.model, first.points & second.points)


def is_subsupport(inner: ThickSupport, outer: ThickSupport) -> bool:
    _check_same_model(inner, outer)
    if outer.full:
        return True
    if inner.full:
        return False
    return inner.points <= outer.points


def are_disjoint(first: ThickSupport, second: ThickSupport) -> bool:
    return support_intersect(first, second).is_empty


def enumerate_thick_supports(model: FinPoset) -> list[ThickSupport]:
    """All up-closed subsets of a finite model, each exactly once."""

    if not isinstance(model, FinPoset):
        raise InputError("only finite spectrum models can be enumerated")
    limit = get_settings().max_enumeration_points
    if len(model) > limit:
        raise ResourceError(f"enumeration is limited to {limit} points, model has {len(model)}")
    supports = [ThickSupport(model, points) for points in _sub_up_sets(model, frozenset(model.points))]
    logger.debug("enumerated %d thick supports on %d points", len(supports), len(model))
    return supports


def krull_schmidt_partitions(model: FinPoset, support: ThickSupport) -> list[SupportDecomposition]:
    """Every partition of the support into disjoint nonempty indecomposable thick supports.

    Indecomposability is decided by exhaustive search, independently of the graph construction.
    """

    _check_model(model, support)
    if len(model) > PARTITION_POINT_LIMIT:
        raise ResourceError(
            f"partition search is limited to {PARTITION_POINT_LIMIT} points, model has {len(model)}"
        )
    candidates = [points for points in _indecomposable_up_sets(model) if points <= support.points]

    found: list[SupportDecomposition] = []

    def extend(remaining: frozenset, chosen: list[frozenset]) -> None:
        if not remaining:
            parts = tuple(ThickSupport(model, points) for points in chosen)
            found.append(SupportDecomposition(support, parts))
            return
        anchor = model.sort_points(remaining)[0]
        for points in candidates:
            if anchor in points and points <= remaining and is_thick_support(model, remaining - points):
                extend(remaining - points, [*chosen, points])

    extend(support.points, [])
    return found


def relabel(model: FinPoset, mapping: Mapping[str, str]) -> FinPoset:
    """Transport the model along a bijection of point names."""

    if set(mapping) != set(model.points) or len(set(mapping.values())) != len(model.points):
        raise InputError("relabeling must be a bijection on the points of the model")
    return FinPoset(
        tuple(mapping[p] for p in model.points),
        frozenset((mapping[p], mapping[q]) for p, q in model.order),
    )


def relabel_support(support: ThickSupport, target: FinPoset, mapping: Mapping[str, str]) -> ThickSupport:
    return ThickSupport(target, frozenset(mapping[p] for p in support.points))


def parse_support(model: SpectrumModel, text: str) -> ThickSupport:
    """Read ``full``, ``none`` (or nothing) or a comma list of points."""

    value = text.strip()
    if value.lower() == "full":
        if isinstance(model, ZSpec):
            return ThickSupport.full_spectrum()
        return ThickSupport(model, frozenset(model.points))
    if value.lower() in ("", "none"):
        return ThickSupport(model, frozenset())
    names = [item.strip() for item in value.split(",") if item.strip()]
    if isinstance(model, FinPoset):
        return ThickSupport(model, frozenset(names))
    try:
        primes = [int(name) for name in names]
    except ValueError as exc:
        raise InputError(f"support over Spec Z must list primes, got {text!r}") from exc
    return ThickSupport.primes(*primes)


@lru_cache(maxsize=64)
def _indecomposable_up_sets(model: FinPoset) -> tuple[frozenset, ...]:
    return tuple(
        points
        for points in _sub_up_sets(model, frozenset(model.points))
        if points and is_indecomposable_exhaustive(model, ThickSupport(model, points))
    )


def _sub_up_sets(model: FinPoset, within: frozenset) -> Iterator[frozenset]:
    # Maximal points first: strict successors of a point always have smaller up-sets.
    ordered = sorted(within, key=lambda p: (len(model.up_set(p)), model.position(p)))
    strict_ups = {p: model.up_set(p) - {p} for p in ordered}

    def walk(index: int, chosen: frozenset) -> Iterator[frozenset]:
        if index == len(ordered):
            yield chosen
            return
        point = ordered[index]
        yield from walk(index + 1, chosen)
        if strict_ups[point] <= chosen:
            yield from walk(index + 1, chosen | {point})

    yield from walk(0, frozenset())


def _check_model(model: SpectrumModel, support: ThickSupport) -> None:
    if support.model != model:
        raise InputError(f"support {support} does not belong to {model}")


def _check_same_model(first: ThickSupport, second: ThickSupport) -> None:
    if first.model != second.model:
        raise InputError(f"supports {first} and {second} live in different spectrum models")
