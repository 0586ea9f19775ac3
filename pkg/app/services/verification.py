"""Seeded verification suites and the runner that turns them into reports.

Randomized suites run one independent trial per index, each with its own
generator derived from (seed, index). Exhaustive suites walk a fixed case list
and ignore the requested trial count.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, repeat
from math import gcd
from typing import Callable

from app.core.config import get_settings
from app.core.errors import InputError, WideSupportError
from app.core.logging import get_logger
from app.models import (
    ZSPEC,
    FgAbGroup,
    FinPoset,
    IntMatrix,
    PerfectComplex,
    SuiteName,
    SuiteTally,
    ThickSupport,
    VerifyReport,
)

from . import complexes, hovey, ktheory, zmodules
from .instances import SMALL_PRIMES, InstanceSampler, labeled_posets, primary_groups
from .smith import determinant, smith_normal_form
from .spectra import (
    are_disjoint,
    enumerate_thick_supports,
    is_indecomposable,
    is_indecomposable_exhaustive,
    is_local,
    is_thick_support,
    krull_schmidt_partitions,
    ks_decompose,
    maximal_support,
    relabel,
    relabel_support,
    support_union,
)

logger = get_logger(__name__)

LOCAL_MAX_POINTS = 5
UNIQUENESS_MAX_POINTS = 8


@dataclass(frozen=True)
class Suite:
    name: SuiteName
    check: Callable[..., str | None]
    case_count: Callable[[], int] | None = None

    @property
    def exhaustive(self) -> bool:
        return self.case_count is not None


# snf


def _snf_soundness(matrix: IntMatrix) -> str | None:
    result = smith_normal_form(matrix)
    if result.U @ matrix @ result.V != result.D:
        return "D != U*A*V"
    if abs(determinant(result.U)) != 1 or abs(determinant(result.V)) != 1:
        return "U or V is not unimodular"
    for i in range(result.D.rows):
        for j in range(result.D.cols):
            if i != j and result.D[i, j]:
                return "D is not diagonal"
    diagonal = result.diagonal
    rank = result.rank
    if any(d <= 0 for d in diagonal[:rank]) or any(diagonal[rank:]):
        return f"diagonal {diagonal} is not positive entries followed by zeros"
    if any(later % earlier for earlier, later in zip(diagonal[:rank], diagonal[1:rank])):
        return f"diagonal {diagonal} breaks the divisibility chain"
    return None


def _snf_oracle(matrix: IntMatrix) -> str | None:
    """d₁⋯d_k must equal the gcd of all k×k minors."""

    diagonal = smith_normal_form(matrix).diagonal
    product = 1
    for k in range(1, min(matrix.shape) + 1):
        product *= diagonal[k - 1]
        minors = [
            determinant(matrix.select_rows(rows).select_columns(cols))
            for rows in combinations(range(matrix.rows), k)
            for cols in combinations(range(matrix.cols), k)
        ]
        if gcd(*minors) != abs(product):
            return f"determinantal divisor of order {k} is {gcd(*minors)}, Smith form gives {product}"
    return None


def check_snf(sampler: InstanceSampler) -> str | None:
    matrix = sampler.sized_matrix(8, 8, bound=30)
    problem = _snf_soundness(matrix)
    if problem:
        return f"{problem} for {matrix}"
    small = sampler.sized_matrix(4, 4, bound=6)
    problem = _snf_oracle(small)
    if problem:
        return f"{problem} for {small}"
    return None


# homology


def _window(*items: PerfectComplex) -> range:
    live = [c for c in items if c.ranks]
    if not live:
        return range(0)
    return range(min(c.bottom_degree for c in live) - 1, max(c.top_degree for c in live) + 2)


def check_homology(sampler: InstanceSampler) -> str | None:
    x = sampler.complex()
    k = sampler.integer(x.bottom_degree - 1, x.top_degree + 1)
    above = complexes.truncate_above(x, k)
    below = complexes.truncate_below(x, k)
    for n in _window(x):
        h = complexes.homology(x, n)
        if complexes.homology(above, n) != (h if n >= k else zmodules.ZERO):
            return f"truncate_above at {k} changes H_{n} of {x}"
        if complexes.homology(below, n) != (h if n <= k else zmodules.ZERO):
            return f"truncate_below at {k} changes H_{n} of {x}"

    y = sampler.complex()
    total = complexes.direct_sum(x, y)
    for n in _window(x, y):
        expected = zmodules.direct_sum(complexes.homology(x, n), complexes.homology(y, n))
        if complexes.homology(total, n) != expected:
            return f"H_{n} is not additive on {x} and {y}"

    s = sampler.integer(-2, 2)
    shifted = complexes.shift(x, s)
    for n in _window(x):
        if complexes.homology(shifted, n + s) != complexes.homology(x, n):
            return f"shift by {s} moves H_{n} of {x} incorrectly"

    identity_cone = complexes.cone(complexes.identity_map(x))
    if any(not complexes.homology(identity_cone, n).is_zero for n in identity_cone.degrees):
        return f"cone of the identity on {x} is not acyclic"
    return None


# euler


def _alternating_length(complex_: PerfectComplex, p: int) -> int:
    return sum(
        (-1) ** (n % 2) * zmodules.p_length(group, p)
        for n, group in complexes.homology_groups(complex_).items()
    )


def check_euler(sampler: InstanceSampler) -> str | None:
    x = sampler.complex()
    by_ranks = complexes.euler_characteristic(x)
    by_homology = sum(
        (-1) ** (n % 2) * group.free_rank for n, group in complexes.homology_groups(x).items()
    )
    if by_ranks != by_homology:
        return f"rank Euler characteristic {by_ranks} != homology Euler characteristic {by_homology} for {x}"

    f = sampler.chain_map(torsion_only=True)
    c = complexes.cone(f)
    for p in SMALL_PRIMES:
        lhs = _alternating_length(c, p)
        rhs = _alternating_length(f.target, p) - _alternating_length(f.source, p)
        if lhs != rhs:
            return f"{p}-length of the cone is {lhs}, expected {rhs}"
    return None


# k0-iso


def _example_classes(sampler: InstanceSampler) -> str | None:
    three = ThickSupport.primes(2, 3, 5)
    for index, p in enumerate((2, 3, 5)):
        expected = tuple(1 if i == index else 0 for i in range(3))
        if ktheory.class_of_module(zmodules.cyclic(p), three).coords != expected:
            return f"class of Z/{p} over {{2,3,5}} is not a standard basis vector"
    full = ThickSupport.full_spectrum()
    for rank in range(6):
        module = zmodules.direct_sum(FgAbGroup(free_rank=rank), sampler.torsion_module())
        if ktheory.class_of_module(module, full).coords != (rank,):
            return f"class of {module} over the full spectrum is not {rank}"
    return None


def check_k0_iso(sampler: InstanceSampler) -> str | None:
    problem = _example_classes(sampler)
    if problem:
        return problem

    module = sampler.module()
    support = sampler.admissible_support(zmodules.support(module))
    if ktheory.class_of_complex(complexes.from_module(module), support) != ktheory.class_of_module(module, support):
        return f"class of the resolution of {module} differs from its class over {support}"

    x = sampler.complex()
    around_x = sampler.admissible_support(complexes.support(x))
    if not ktheory.check_truncation_identity(x, around_x):
        return f"[X] != sum of (-1)^n [H_n(X)] for {x} over {around_x}"
    k = sampler.integer(x.bottom_degree - 1, x.top_degree + 1)
    if not ktheory.check_truncation_triangle(x, k, around_x):
        return f"truncation triangle at {k} is not additive for {x}"
    if ktheory.class_of_complex(complexes.shift(x, 1), around_x) != -ktheory.class_of_complex(x, around_x):
        return f"[shift(X, 1)] != -[X] for {x}"
    acyclic = complexes.cone(complexes.identity_map(sampler.complex()))
    if ktheory.class_of_complex(complexes.direct_sum(x, acyclic), around_x) != ktheory.class_of_complex(x, around_x):
        return f"adding an acyclic summand changes the class of {x}"

    f = sampler.chain_map()
    ends = support_union(complexes.support(f.source), complexes.support(f.target))
    if not ktheory.check_triangle_additivity(f, sampler.admissible_support(ends)):
        return f"triangle on a chain map {f.source} -> {f.target} is not additive"
    return None


# ses


def check_ses(sampler: InstanceSampler) -> str | None:
    first, middle, last = sampler.extension()
    around = support_union(zmodules.support(first), zmodules.support(last))
    support = sampler.admissible_support(support_union(around, zmodules.support(middle)))
    if not ktheory.check_ses_additivity(first, middle, last, support):
        return f"0 -> {first} -> {middle} -> {last} -> 0 is not additive over {support}"

    modules = [sampler.module() for _ in range(3)]
    common = ThickSupport.primes()
    for module in modules:
        common = support_union(common, zmodules.support(module))
    common = sampler.admissible_support(common)
    a, b, c = (ktheory.class_of_module(module, common) for module in modules)
    zero = ktheory.zero_class(common)
    if (a + b) + c != a + (b + c) or a + b != b + a or a + (-a) != zero or a + zero != a:
        return f"group laws fail for classes of {', '.join(map(str, modules))}"
    return None


# ext-vanish


@lru_cache(maxsize=1)
def _ext_vanish_cases() -> tuple[tuple[FgAbGroup, FgAbGroup], ...]:
    groups = {p: primary_groups(p) for p in SMALL_PRIMES}
    return tuple(
        (first, second)
        for p in SMALL_PRIMES
        for q in SMALL_PRIMES
        if p != q
        for first in groups[p]
        for second in groups[q]
    )


def check_ext_vanish(index: int) -> str | None:
    first, second = _ext_vanish_cases()[index]
    if not zmodules.hom(first, second).is_zero:
        return f"Hom({first}, {second}) != 0"
    if not zmodules.ext1(first, second).is_zero:
        return f"Ext1({first}, {second}) != 0"
    return None


# hovey


def _module_in(sampler: InstanceSampler, support: ThickSupport) -> FgAbGroup:
    if support.full:
        return sampler.module()
    primes = sorted(support.points)
    if not primes:
        return zmodules.ZERO
    orders = [sampler.choice(primes) ** sampler.integer(1, 3) for _ in range(sampler.integer(0, 4))]
    return zmodules.from_cyclics(0, orders)


def check_hovey(sampler: InstanceSampler) -> str | None:
    support = sampler.z_support()
    x = sampler.complex(torsion_only=sampler.chance(0.5))
    if not hovey.check_diagram_commutes(support, x):
        return f"zeta and f disagree on {x} over {support}"

    bigger = sampler.admissible_support(support)
    module = sampler.module()
    if hovey.xi_contains(hovey.xi(support), module) and not hovey.xi_contains(hovey.xi(bigger), module):
        return f"xi is not monotone: {module} leaves when {support} grows to {bigger}"
    if hovey.zeta_contains(hovey.zeta(support), x) and not hovey.zeta_contains(hovey.zeta(bigger), x):
        return f"zeta is not monotone on {x}"
    if hovey.f_contains(hovey.xi(support), x) and not hovey.f_contains(hovey.xi(bigger), x):
        return f"f is not monotone on {x}"

    parts = [w.support for w in hovey.decompose_wide(hovey.xi(support))]
    if parts != list(ks_decompose(ZSPEC, support).parts):
        return f"decompose_wide disagrees with ks_decompose on {support}"
    member = _module_in(sampler, support)
    pieces = hovey.split_object(hovey.xi(support), member)
    if zmodules.direct_sum_all(piece for _, piece in pieces) != member:
        return f"split pieces of {member} do not reassemble"
    covered = ThickSupport.primes()
    for _, piece in pieces:
        covered = support_union(covered, zmodules.support(piece))
    if covered != zmodules.support(member):
        return f"split pieces of {member} do not cover its support"

    primes = sampler.shuffled(list(SMALL_PRIMES))
    cut = sampler.integer(1, len(primes) - 1)
    left, right = ThickSupport.primes(*primes[:cut]), ThickSupport.primes(*primes[cut:])
    if not hovey.check_coproduct_closure(
        hovey.xi(left), hovey.xi(right), _module_in(sampler, left), _module_in(sampler, right)
    ):
        return f"coproduct closure fails for {left} and {right}"

    singletons = [ThickSupport.primes(p) for p in sorted(sampler.subset(SMALL_PRIMES))]
    joined = hovey.coproduct([hovey.xi(s) for s in singletons])
    if [w.support for w in hovey.decompose_wide(joined)] != singletons:
        return f"coproduct of {', '.join(map(str, singletons))} does not decompose back"
    return None


# ks


def _check_decomposition(model: FinPoset, support: ThickSupport) -> str | None:
    parts = ks_decompose(model, support).parts
    if frozenset().union(*(part.points for part in parts)) != support.points:
        return f"parts of {support} do not cover it"
    for i, part in enumerate(parts):
        if not is_thick_support(model, part.points):
            return f"part {part} of {support} is not up-closed"
        if not is_indecomposable_exhaustive(model, part):
            return f"part {part} of {support} decomposes further"
        if any(not are_disjoint(part, other) for other in parts[:i]):
            return f"parts of {support} overlap"
    if is_indecomposable(model, support) != is_indecomposable_exhaustive(model, support):
        return f"graph and exhaustive indecomposability disagree on {support}"
    return None


def check_ks(sampler: InstanceSampler) -> str | None:
    model = sampler.poset()
    mapping = sampler.relabeling(model)
    image = relabel(model, mapping)
    for support in enumerate_thick_supports(model):
        problem = _check_decomposition(model, support)
        if problem:
            return f"{problem} in {sorted(model.order)}"
        decomposition = ks_decompose(model, support)
        if len(model) <= UNIQUENESS_MAX_POINTS:
            partitions = krull_schmidt_partitions(model, support)
            if [p.part_sets() for p in partitions] != [decomposition.part_sets()]:
                return f"{support} has {len(partitions)} Krull-Schmidt partitions in {sorted(model.order)}"
        moved = ks_decompose(image, relabel_support(support, image, mapping))
        expected = frozenset(frozenset(mapping[p] for p in part.points) for part in decomposition.parts)
        if moved.part_sets() != expected:
            return f"relabeling does not commute with decomposing {support}"
    return None


# local


@lru_cache(maxsize=1)
def _local_cases() -> tuple[FinPoset, ...]:
    return tuple(model for size in range(1, LOCAL_MAX_POINTS + 1) for model in labeled_posets(size))


def check_local(index: int) -> str | None:
    model = _local_cases()[index]
    every_indecomposable = all(
        is_indecomposable_exhaustive(model, support)
        for support in enumerate_thick_supports(model)
        if not support.is_empty
    )
    if is_local(model) != every_indecomposable:
        return f"is_local is {is_local(model)} but indecomposability is {every_indecomposable} on {sorted(model.order)}"
    if not is_local(model) and len(ks_decompose(model, maximal_support(model))) < 2:
        return f"maximal points of a non-local model do not decompose: {sorted(model.order)}"
    return None


# split


def check_split(sampler: InstanceSampler) -> str | None:
    module = sampler.module()
    pieces = zmodules.split_by_support(module)
    for i, (support, _) in enumerate(pieces):
        if not is_indecomposable(ZSPEC, support):
            return f"piece support {support} of {module} is decomposable"
        if any(not are_disjoint(support, other) for other, _ in pieces[:i]):
            return f"piece supports of {module} overlap"
    if zmodules.direct_sum_all(piece for _, piece in pieces) != module:
        return f"pieces of {module} do not reassemble"

    support = sampler.admissible_support(zmodules.support(module))
    assigned = {w.support: piece for w, piece in hovey.split_object(hovey.xi(support), module)}
    if zmodules.direct_sum_all(assigned.values()) != module:
        return f"split_object pieces of {module} over {support} do not reassemble"
    if support.full:
        return None
    decomposition = ks_decompose(ZSPEC, support)
    per_part = [
        ktheory.class_of_module(assigned.get(part, zmodules.ZERO), part) for part in decomposition.parts
    ]
    klass = ktheory.class_of_module(module, support)
    if ktheory.concat_classes(per_part) != klass or ktheory.decompose_class(klass, decomposition) != per_part:
        return f"class of {module} over {support} is not the concatenation of its pieces"
    return None


SUITES: dict[SuiteName, Suite] = {
    SuiteName.SNF: Suite(SuiteName.SNF, check_snf),
    SuiteName.HOMOLOGY: Suite(SuiteName.HOMOLOGY, check_homology),
    SuiteName.EULER: Suite(SuiteName.EULER, check_euler),
    SuiteName.K0_ISO: Suite(SuiteName.K0_ISO, check_k0_iso),
    SuiteName.SES: Suite(SuiteName.SES, check_ses),
    SuiteName.EXT_VANISH: Suite(SuiteName.EXT_VANISH, check_ext_vanish, lambda: len(_ext_vanish_cases())),
    SuiteName.HOVEY: Suite(SuiteName.HOVEY, check_hovey),
    SuiteName.KS: Suite(SuiteName.KS, check_ks),
    SuiteName.LOCAL: Suite(SuiteName.LOCAL, check_local, lambda: len(_local_cases())),
    SuiteName.SPLIT: Suite(SuiteName.SPLIT, check_split),
}


def run_trial(suite: str, seed: int, index: int) -> str | None:
    """One trial in isolation; module level so worker processes can pickle it."""

    entry = SUITES[SuiteName(suite)]
    try:
        if entry.exhaustive:
            return entry.check(index)
        return entry.check(InstanceSampler.for_trial(seed, index))
    except WideSupportError as exc:
        return f"raised {type(exc).__name__}: {exc}"


class VerificationRunner:
    def __init__(self, workers: int | None = None, witness_limit: int | None = None) -> None:
        settings = get_settings()
        self.workers = workers if workers is not None else settings.verify_workers
        self.witness_limit = witness_limit if witness_limit is not None else settings.witness_limit
        if self.workers < 1:
            raise InputError(f"worker count must be positive, got {self.workers}")

    def run(self, suite: SuiteName | str, trials: int, seed: int) -> VerifyReport:
        name = suite if isinstance(suite, SuiteName) else SuiteName.from_raw(suite)
        if trials < 0:
            raise InputError(f"trial count must be nonnegative, got {trials}")
        if not 0 <= seed < 2**64:
            raise InputError(f"seed must be a 64-bit unsigned integer, got {seed}")

        started = time.perf_counter()
        members = [m for m in SuiteName if m is not SuiteName.ALL] if name is SuiteName.ALL else [name]
        tallies: list[SuiteTally] = []
        witnesses: list[str] = []
        for member in members:
            count, failed = self._execute(member, trials, seed)
            tallies.append(SuiteTally(member.value, count, len(failed)))
            witnesses.extend(failed)
        elapsed = int((time.perf_counter() - started) * 1000)

        return VerifyReport(
            suite=name.value,
            trials=sum(t.trials for t in tallies),
            failures=sum(t.failures for t in tallies),
            seed=seed,
            failure_witnesses=tuple(witnesses[: self.witness_limit]),
            wall_time_ms=elapsed,
            breakdown=tuple(tallies) if name is SuiteName.ALL else (),
        )

    def _execute(self, suite: SuiteName, trials: int, seed: int) -> tuple[int, list[str]]:
        entry = SUITES[suite]
        count = entry.case_count() if entry.case_count is not None else trials
        logger.info("running suite %s: %d trials, seed %d", suite.value, count, seed)
        if self.workers > 1 and count > 1:
            chunk = max(1, count // (self.workers * 4))
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                outcomes = list(
                    pool.map(run_trial, repeat(suite.value), repeat(seed), range(count), chunksize=chunk)
                )
        else:
            outcomes = [run_trial(suite.value, seed, index) for index in range(count)]

        failed: list[str] = []
        for index, outcome in enumerate(outcomes):
            if outcome is not None:
                logger.warning("suite %s trial %d failed: %s", suite.value, index, outcome)
                failed.append(f"{suite.value} #{index}: {outcome}")
        logger.info("suite %s finished: %d/%d failures", suite.value, len(failed), count)
        return count, failed
