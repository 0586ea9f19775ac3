import pytest

from app.core.errors import InputError
from app.models import ChainMap, IntMatrix, PerfectComplex, ThickSupport
from app.services import complexes, zmodules
from app.services.instances import InstanceSampler


def _build_two_term() -> PerfectComplex:
    # ℤ --·2--> ℤ in degrees 1 → 0
    return PerfectComplex(0, (1, 1), (IntMatrix.from_rows([[2]]),))


def _build_z() -> PerfectComplex:
    return PerfectComplex(0, (1,), ())


def _build_times_two() -> ChainMap:
    return ChainMap.from_mapping(_build_z(), _build_z(), {0: IntMatrix.from_rows([[2]])})


def test_homology_of_two_term_complex():
    complex_ = _build_two_term()

    assert complexes.homology(complex_, 0) == zmodules.cyclic(2)
    assert complexes.homology(complex_, 1).is_zero
    assert complexes.homology(complex_, 7).is_zero


def test_homology_with_zero_differentials():
    complex_ = complexes.build_complex(0, {}, [2, 3])

    assert complexes.homology_groups(complex_) == {0: zmodules.from_cyclics(2, []), 1: zmodules.from_cyclics(3, [])}


def test_identity_differential_is_acyclic():
    complex_ = PerfectComplex(0, (1, 1), (IntMatrix.identity(1),))

    assert all(group.is_zero for group in complexes.homology_groups(complex_).values())
    assert complexes.support(complex_).is_empty


def test_nonzero_square_is_rejected():
    with pytest.raises(InputError):
        PerfectComplex(0, (1, 1, 1), (IntMatrix.from_rows([[1]]), IntMatrix.from_rows([[1]])))


def test_from_module_resolutions():
    assert complexes.from_module(zmodules.cyclic(2)) == _build_two_term()
    assert complexes.from_module(zmodules.from_cyclics(2, [])) == PerfectComplex(0, (2,), ())

    mixed = complexes.from_module(zmodules.from_cyclics(1, [3]))
    assert mixed.ranks == (2, 1)
    assert mixed.differentials == (IntMatrix.from_rows([[3], [0]]),)
    assert complexes.homology(mixed, 0) == zmodules.from_cyclics(1, [3])


def test_shift():
    complex_ = _build_two_term()

    assert complexes.shift(complex_, 0) == complex_
    assert complexes.shift(complexes.shift(complex_, 1), -1) == complex_
    assert complexes.shift(_build_z(), 1).bottom_degree == 1
    assert complexes.homology(complexes.shift(complex_, 3), 3) == zmodules.cyclic(2)


def test_cone_of_identity_is_acyclic():
    cone = complexes.cone(complexes.identity_map(_build_two_term()))

    assert all(group.is_zero for group in complexes.homology_groups(cone).values())


def test_cone_of_map_to_zero_is_the_shift():
    complex_ = _build_two_term()

    assert complexes.cone(complexes.zero_map(complex_, complexes.zero_complex())) == complexes.shift(complex_, 1)


def test_cone_of_multiplication_by_two():
    cone = complexes.cone(_build_times_two())

    assert cone == _build_two_term()
    assert complexes.homology(cone, 0) == zmodules.cyclic(2)


def test_direct_sum_with_zero_and_additivity():
    first = _build_two_term()
    second = complexes.shift(complexes.from_module(zmodules.cyclic(9)), 1)
    total = complexes.direct_sum(first, second)

    assert complexes.direct_sum(first, complexes.zero_complex()) == first
    for n in total.degrees:
        assert complexes.homology(total, n) == zmodules.direct_sum(
            complexes.homology(first, n), complexes.homology(second, n)
        )


def test_truncate_above():
    split = complexes.build_complex(0, {}, [1, 1])

    assert complexes.truncate_above(split, 1) == PerfectComplex(1, (1,), ())
    assert complexes.truncate_above(_build_two_term(), 1).is_zero
    assert complexes.truncate_above(_build_two_term(), 0) == _build_two_term()
    assert complexes.truncate_above(_build_two_term(), 5).is_zero


def test_truncate_below():
    complex_ = _build_two_term()

    assert complexes.truncate_below(complex_, 0) == complex_
    assert complexes.truncate_below(complex_, 1) == complex_
    assert complexes.truncate_below(complex_, -2).is_zero


def test_truncations_keep_homology_on_their_side():
    for index in range(15):
        complex_ = InstanceSampler.for_trial(11, index).complex()
        for k in range(complex_.bottom_degree, complex_.top_degree + 1):
            upper = complexes.truncate_above(complex_, k)
            lower = complexes.truncate_below(complex_, k)
            for n in complex_.degrees:
                if n >= k:
                    assert complexes.homology(upper, n) == complexes.homology(complex_, n)
                else:
                    assert complexes.homology(upper, n).is_zero
                if n <= k:
                    assert complexes.homology(lower, n) == complexes.homology(complex_, n)
                else:
                    assert complexes.homology(lower, n).is_zero
            complexes.truncation_inclusion(complex_, k)
            complexes.truncation_projection(complex_, k)


def test_support_of_complexes():
    assert complexes.support(complexes.from_module(zmodules.cyclic(6))) == ThickSupport.primes(2, 3)
    assert complexes.support(_build_z()).full
    assert complexes.support(complexes.zero_complex()).is_empty


def test_euler_characteristic():
    assert complexes.euler_characteristic(_build_two_term()) == 0
    assert complexes.euler_characteristic(complexes.build_complex(0, {}, [2, 3, 1])) == 0
    assert complexes.euler_characteristic(complexes.build_complex(1, {}, [2])) == -2


def test_trimmed_drops_zero_end_degrees():
    padded = complexes.build_complex(-1, {1: IntMatrix.from_rows([[2]])}, [0, 1, 1, 0])

    trimmed = padded.trimmed()

    assert padded.nonzero_degrees() == [0, 1]
    assert trimmed == _build_two_term()
    assert complexes.homology_groups(trimmed) == {
        n: group for n, group in complexes.homology_groups(padded).items() if n in trimmed.degrees
    }
    assert complexes.build_complex(3, {}, [0, 0]).trimmed() == complexes.zero_complex()


def test_sampled_complexes_are_trimmed():
    for index in range(20):
        complex_ = InstanceSampler.for_trial(17, index).torsion_complex()
        if complex_.ranks:
            assert complex_.ranks[0] and complex_.ranks[-1]


def test_change_of_basis_preserves_homology():
    sampler = InstanceSampler.for_trial(3, 0)
    complex_ = complexes.from_module(zmodules.from_cyclics(1, [4, 6]))
    bases = {n: sampler.unimodular(complex_.rank(n)) for n in complex_.degrees}

    moved = complexes.change_of_basis(complex_, bases)

    assert complexes.homology_groups(moved) == complexes.homology_groups(complex_)

    with pytest.raises(InputError):
        complexes.change_of_basis(complex_, {0: (IntMatrix.identity(3).scaled(2), IntMatrix.identity(3))})


def test_chain_map_arithmetic():
    complex_ = _build_two_term()
    product = complexes.compose(complexes.scalar_map(complex_, 2), complexes.scalar_map(complex_, 3))
    total = complexes.add_maps(complexes.scalar_map(complex_, 2), complexes.scalar_map(complex_, 3))

    assert product.component(0) == IntMatrix.from_rows([[6]])
    assert total.component(1) == IntMatrix.from_rows([[5]])


def test_non_commuting_square_is_rejected():
    with pytest.raises(InputError):
        ChainMap.from_mapping(
            _build_two_term(),
            _build_two_term(),
            {0: IntMatrix.from_rows([[1]]), 1: IntMatrix.from_rows([[2]])},
        )


def test_null_homotopic_map_is_a_chain_map():
    complex_ = _build_two_term()

    chain_map = complexes.null_homotopic_map(complex_, complex_, {0: IntMatrix.from_rows([[1]])})

    assert chain_map.component(0) == IntMatrix.from_rows([[2]])
    assert chain_map.component(1) == IntMatrix.from_rows([[2]])


def test_sum_inclusion_and_projection():
    first, second = _build_two_term(), complexes.from_module(zmodules.cyclic(3))

    inclusion = complexes.inclusion_into_sum(first, second)
    projection = complexes.projection_from_sum(first, second)

    assert inclusion.target == projection.source == complexes.direct_sum(first, second)
    assert complexes.compose(projection, inclusion).component(0).is_zero
