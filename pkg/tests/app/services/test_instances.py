from app.models import IntMatrix
from app.services import complexes, trial_rng
from app.services.instances import (
    MAX_COMPLEX_LENGTH,
    MAX_COMPLEX_RANK,
    InstanceSampler,
    labeled_posets,
    primary_groups,
)
from app.services.spectra import is_thick_support


def test_trial_generators_depend_only_on_seed_and_index():
    first = trial_rng(42, 3).integers(0, 10**9, size=5).tolist()
    again = trial_rng(42, 3).integers(0, 10**9, size=5).tolist()
    other = trial_rng(42, 4).integers(0, 10**9, size=5).tolist()

    assert first == again
    assert first != other


def test_sampler_draws_are_python_ints():
    sampler = InstanceSampler.for_trial(1, 0)

    value = sampler.integer(-5, 5)
    matrix = sampler.matrix(2, 3)

    assert type(value) is int
    assert -5 <= value <= 5
    assert all(type(entry) is int for entry in matrix.entries)


def test_unimodular_pairs_are_inverse():
    sampler = InstanceSampler.for_trial(7, 0)

    for size in range(5):
        p, p_inv = sampler.unimodular(size)
        assert p @ p_inv == IntMatrix.identity(size)
        assert p_inv @ p == IntMatrix.identity(size)


def test_sampled_complexes_respect_bounds():
    for index in range(30):
        sampler = InstanceSampler.for_trial(2024, index)
        complex_ = sampler.complex()
        assert len(complex_.ranks) <= MAX_COMPLEX_LENGTH
        assert max(complex_.ranks, default=0) <= MAX_COMPLEX_RANK

        torsion = sampler.torsion_complex()
        assert all(group.is_torsion for group in complexes.homology_groups(torsion).values())


def test_sampled_chain_maps_are_valid():
    for index in range(30):
        chain_map = InstanceSampler.for_trial(99, index).chain_map()
        complexes.cone(chain_map)


def test_sampled_posets_are_acyclic_and_relabel():
    for index in range(20):
        sampler = InstanceSampler.for_trial(5, index)
        model = sampler.poset()
        mapping = sampler.relabeling(model)

        assert 1 <= len(model) <= 10
        assert sorted(mapping.values()) == sorted(f"q{i}" for i in range(len(model)))


def test_admissible_support_contains_its_base():
    sampler = InstanceSampler.for_trial(8, 0)

    for _ in range(20):
        base = sampler.z_support()
        grown = sampler.admissible_support(base)
        assert grown.full or base.points <= grown.points
        assert not base.full or grown.full


def test_primary_group_catalogue():
    groups = primary_groups(2)

    assert len(groups) == 34
    assert len(set(groups)) == 34
    assert all(group.is_torsion and group.order % 2 == 0 for group in groups)


def test_labeled_poset_counts():
    assert [len(labeled_posets(size)) for size in range(5)] == [1, 1, 3, 19, 219]


def test_labeled_posets_are_distinct_orders():
    models = labeled_posets(3)

    assert len({model.order for model in models}) == len(models)
    assert all(model.points == ("a", "b", "c") for model in models)
    assert all(is_thick_support(model, model.points) for model in models)
