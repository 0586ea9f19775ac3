import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.core.config import get_settings
from app.core.errors import InputError, ResourceError
from app.models import ZSPEC, FinPoset, ThickSupport
from app.services.instances import InstanceSampler, labeled_posets
from app.services.spectra import (
    enumerate_thick_supports,
    is_indecomposable,
    is_indecomposable_exhaustive,
    is_local,
    is_thick_support,
    krull_schmidt_partitions,
    ks_decompose,
    maximal_points,
    maximal_support,
    minimal_points,
    parse_support,
    relabel,
    relabel_support,
    support_intersect,
    support_union,
    v_of,
)


def _build_vee() -> FinPoset:
    return FinPoset.from_covers(["a", "b", "m"], [["a", "m"], ["b", "m"]])


def _build_all(model: FinPoset) -> ThickSupport:
    return ThickSupport(model, frozenset(model.points))


def test_v_of_points():
    vee = _build_vee()

    assert v_of(ZSPEC, 5) == ThickSupport.primes(5)
    assert v_of(ZSPEC, 0) == ThickSupport.full_spectrum()
    assert v_of(vee, "a").points == {"a", "m"}

    with pytest.raises(InputError):
        v_of(vee, "z")
    with pytest.raises(InputError):
        v_of(ZSPEC, 4)


def test_booleans_are_not_points_of_spec_z():
    assert not ZSPEC.has_point(False)
    assert not ZSPEC.has_point(True)
    assert not is_thick_support(ZSPEC, {False})

    with pytest.raises(InputError):
        v_of(ZSPEC, False)


def test_is_thick_support():
    chain = FinPoset.chain(["a", "m"])

    assert is_thick_support(chain, {"m"})
    assert not is_thick_support(chain, {"a"})
    assert is_thick_support(_build_vee(), {"a", "m"})
    assert not is_thick_support(chain, {"zz"})
    assert is_thick_support(ZSPEC, {2, 3})


def test_minimal_points():
    vee = _build_vee()

    assert minimal_points(ZSPEC, ThickSupport.full_spectrum()) == {0}
    assert minimal_points(ZSPEC, ThickSupport.primes(2, 3, 5)) == {2, 3, 5}
    assert minimal_points(vee, _build_all(vee)) == {"a", "b"}


def test_ks_decompose_over_integers():
    decomposition = ks_decompose(ZSPEC, ThickSupport.primes(5, 2, 3))

    assert decomposition.parts == (
        ThickSupport.primes(2),
        ThickSupport.primes(3),
        ThickSupport.primes(5),
    )
    assert ks_decompose(ZSPEC, ThickSupport.full_spectrum()).parts == (ThickSupport.full_spectrum(),)
    assert ks_decompose(ZSPEC, ThickSupport.primes()).parts == ()


def test_ks_decompose_over_posets():
    vee = _build_vee()
    antichain = FinPoset.antichain(["x", "y", "z"])

    assert len(ks_decompose(vee, _build_all(vee))) == 1
    assert [part.points for part in ks_decompose(antichain, _build_all(antichain)).parts] == [
        {"x"},
        {"y"},
        {"z"},
    ]


def test_ks_decompose_rejects_foreign_support():
    with pytest.raises(InputError):
        ks_decompose(_build_vee(), ThickSupport.primes(2))


def test_indecomposability():
    chain = FinPoset.chain(["a", "b", "c"])

    assert is_indecomposable(ZSPEC, ThickSupport.primes(7))
    assert not is_indecomposable(ZSPEC, ThickSupport.primes(2, 3))
    assert not is_indecomposable(ZSPEC, ThickSupport.primes())
    assert is_indecomposable(chain, _build_all(chain))
    assert is_indecomposable_exhaustive(chain, _build_all(chain))
    assert not is_indecomposable_exhaustive(FinPoset.antichain(["x", "y"]), _build_all(FinPoset.antichain(["x", "y"])))


def test_is_local():
    assert is_local(_build_vee())
    assert not is_local(FinPoset.antichain(["a", "b"]))
    assert not is_local(ZSPEC)

    with pytest.raises(InputError):
        is_local(FinPoset(()))


def test_maximal_support_splits_when_not_local():
    antichain = FinPoset.antichain(["a", "b"])

    assert maximal_points(antichain) == {"a", "b"}
    assert len(ks_decompose(antichain, maximal_support(antichain))) == 2
    with pytest.raises(InputError):
        maximal_points(ZSPEC)


def test_union_and_intersection():
    vee = _build_vee()
    left = ThickSupport(vee, frozenset({"a", "m"}))
    right = ThickSupport(vee, frozenset({"b", "m"}))

    assert support_union(left, right) == _build_all(vee)
    assert support_intersect(left, right).points == {"m"}
    assert support_union(ThickSupport.primes(2), ThickSupport.full_spectrum()).full
    assert support_intersect(ThickSupport.primes(2, 3), ThickSupport.full_spectrum()) == ThickSupport.primes(2, 3)

    with pytest.raises(InputError):
        support_union(left, ThickSupport.primes(2))


def test_enumerate_thick_supports():
    chain = FinPoset.chain(["a", "b"])

    assert len(enumerate_thick_supports(FinPoset.antichain(["a", "b"]))) == 4
    assert {s.points for s in enumerate_thick_supports(chain)} == {
        frozenset(),
        frozenset({"b"}),
        frozenset({"a", "b"}),
    }
    assert enumerate_thick_supports(FinPoset(())) == [ThickSupport(FinPoset(()), frozenset())]


def test_enumerate_respects_configured_limit(monkeypatch):
    monkeypatch.setenv("WIDESUPP_MAX_ENUMERATION_POINTS", "3")
    get_settings.cache_clear()
    try:
        with pytest.raises(ResourceError):
            enumerate_thick_supports(FinPoset.chain(["a", "b", "c", "d"]))
    finally:
        get_settings.cache_clear()


def test_krull_schmidt_partition_is_unique():
    antichain = FinPoset.antichain(["a", "b", "c"])

    partitions = krull_schmidt_partitions(antichain, _build_all(antichain))

    assert len(partitions) == 1
    assert partitions[0].part_sets() == ks_decompose(antichain, _build_all(antichain)).part_sets()


def test_decomposition_survives_relabeling():
    vee = _build_vee()
    mapping = {"a": "q2", "b": "q0", "m": "q1"}
    renamed = relabel(vee, mapping)

    support = ThickSupport(vee, frozenset({"a", "m"}))
    moved = relabel_support(support, renamed, mapping)

    assert moved.points == {"q2", "q1"}
    assert len(ks_decompose(renamed, moved)) == len(ks_decompose(vee, support))

    with pytest.raises(InputError):
        relabel(vee, {"a": "x", "b": "x", "m": "y"})


def test_covers_with_a_cycle_are_rejected():
    with pytest.raises(InputError):
        FinPoset.from_covers(["a", "b"], [["a", "b"], ["b", "a"]])


def test_parse_support():
    vee = _build_vee()

    assert parse_support(ZSPEC, "full") == ThickSupport.full_spectrum()
    assert parse_support(ZSPEC, "2, 3") == ThickSupport.primes(2, 3)
    assert parse_support(ZSPEC, "none").is_empty
    assert parse_support(vee, "full") == _build_all(vee)
    assert parse_support(vee, "m").points == {"m"}

    with pytest.raises(InputError):
        parse_support(vee, "a")
    with pytest.raises(InputError):
        parse_support(ZSPEC, "two")
    with pytest.raises(InputError):
        parse_support(ZSPEC, "4")


SMALL_MODELS = labeled_posets(3) + tuple(InstanceSampler.for_trial(31, index).poset() for index in range(6))


@st.composite
def _supports_on_one_model(draw, count: int = 3):
    model = draw(st.sampled_from(SMALL_MODELS))
    supports = enumerate_thick_supports(model)
    return model, [draw(st.sampled_from(supports)) for _ in range(count)]


def test_union_and_intersection_stay_thick_on_every_small_poset():
    for model in labeled_posets(3):
        supports = enumerate_thick_supports(model)
        for first in supports:
            for second in supports:
                assert is_thick_support(model, support_union(first, second).points)
                assert is_thick_support(model, support_intersect(first, second).points)


@given(_supports_on_one_model())
@settings(max_examples=150, deadline=None)
def test_support_lattice_laws(drawn):
    _, (a, b, c) = drawn

    assert support_union(a, b) == support_union(b, a)
    assert support_intersect(a, b) == support_intersect(b, a)
    assert support_union(support_union(a, b), c) == support_union(a, support_union(b, c))
    assert support_intersect(support_intersect(a, b), c) == support_intersect(a, support_intersect(b, c))
    assert support_union(a, support_intersect(a, b)) == a
    assert support_intersect(a, support_union(a, b)) == a


@given(_supports_on_one_model(count=1))
@settings(max_examples=150, deadline=None)
def test_minimal_points_cover_the_support(drawn):
    model, (support,) = drawn
    minimal = minimal_points(model, support)

    assert minimal <= support.points
    assert all(any(model.leq(m, p) for m in minimal) for p in support.points)
    assert all(not model.leq(q, m) for m in minimal for q in support.points if q != m)
