import pytest

from golodkit.certificates import SerreGapWitness
from golodkit.criteria import golod3, replay
from golodkit.ideals import ideal_product, maximal_ideal
from golodkit.koszul import betti_table
from golodkit.linalg import FieldSpec, QQ
from golodkit.poincare import (
    IncompleteResolutionError,
    TruncatedSeries,
    binomial_series,
    poincare_coefficients,
    resolve_residue_field,
    serre_bound,
    serre_compare,
    series_inverse,
    series_product,
    standard_monomials,
)
from golodkit.rings import RingContext, minimalize
from golodkit.rng import SplitMix64, random_ideal

XYZ = RingContext(("x", "y", "z"))
GF2 = FieldSpec.prime(2)
GF101 = FieldSpec.prime(101)


def I(*rows, ctx=XYZ):
    return minimalize(list(rows), ctx)


CI3 = I((2, 0, 0), (0, 2, 0), (0, 0, 2))
MSQ = ideal_product(maximal_ideal(XYZ), maximal_ideal(XYZ))


def test_series_arithmetic():
    a = TruncatedSeries((1, 1))
    sq = series_product(a, a, 4)
    assert sq.coefficients == (1, 2, 1, 0, 0)
    inv = series_inverse(TruncatedSeries((1, -1)), 5)
    assert inv.coefficients == (1, 1, 1, 1, 1, 1)
    with pytest.raises(ValueError):
        series_inverse(TruncatedSeries((2, 0)), 3)
    assert binomial_series(3, 5).coefficients == (1, 3, 3, 1, 0, 0)


def test_serre_bound_pinned():
    assert serre_bound(3, {1: 6, 2: 8, 3: 3}, 5).coefficients == (1, 3, 9, 27, 81, 243)
    assert serre_bound(3, {1: 3, 2: 3, 3: 1}, 3).coefficients == (1, 3, 6, 13)
    assert serre_bound(3, {1: 0, 2: 0, 3: 0}, 4).coefficients == (1, 3, 3, 1, 0)
    # list input and dict input agree
    assert (
        serre_bound(3, (0, 6, 8, 3), 5).coefficients
        == serre_bound(3, {1: 6, 2: 8, 3: 3}, 5).coefficients
    )


def test_standard_monomials():
    assert standard_monomials(CI3, 0) == [(0, 0, 0)]
    assert standard_monomials(CI3, 3) == [(1, 1, 1)]
    assert standard_monomials(CI3, 4) == []
    assert len(standard_monomials(MSQ, 1)) == 3
    assert standard_monomials(MSQ, 2) == []
    with pytest.raises(ValueError):
        standard_monomials(I((0, 0, 0)), 1)


def test_resolution_of_msq_is_linear():
    steps = resolve_residue_field(MSQ, 4)
    assert [len(s.generator_degrees) for s in steps] == [1, 3, 9, 27, 81]
    assert all(s.complete for s in steps)
    # linear growth: every generator of step i sits in degree i
    for i, s in enumerate(steps):
        assert all(d == i for d in s.generator_degrees)
    assert poincare_coefficients(steps).coefficients == (1, 3, 9, 27, 81)


def test_resolution_complete_intersection():
    steps = resolve_residue_field(CI3, 4)
    assert [len(s.generator_degrees) for s in steps] == [1, 3, 6, 10, 15]
    assert all(s.complete for s in steps)


def test_resolution_field_choice_matches():
    for field in (GF2, GF101):
        steps = resolve_residue_field(CI3, 3, field=field)
        assert [len(s.generator_degrees) for s in steps] == [1, 3, 6, 10]


def test_resolution_polynomial_ring():
    steps = resolve_residue_field(minimalize([], RingContext(("x",))), 3)
    assert [len(s.generator_degrees) for s in steps] == [1, 1, 0, 0]


def test_resolution_guards():
    with pytest.raises(ValueError):
        resolve_residue_field(I((1, 0, 0)), 2)
    with pytest.raises(ValueError):
        resolve_residue_field(CI3, -1)
    with pytest.raises(ValueError):
        resolve_residue_field(CI3, 4, d_max=2)


def test_incomplete_steps_raise_on_coefficient_extraction():
    # non-Artinian quotient capped far too early leaves the flag unset
    ideal = minimalize([(2, 0), (1, 1)], RingContext(("x", "y")))
    steps = resolve_residue_field(ideal, 3, d_max=3)
    assert not all(s.complete for s in steps)
    with pytest.raises(IncompleteResolutionError):
        poincare_coefficients(steps)


def test_serre_compare_msq_equality():
    rep = serre_compare(MSQ, 5)
    assert rep.left.coefficients == (1, 3, 9, 27, 81, 243)
    assert rep.right.coefficients == (1, 3, 9, 27, 81, 243)
    assert rep.gap_index is None
    assert rep.witness is None
    assert rep.equal_up_to == 5
    assert all(rep.left_complete)


def test_serre_compare_ci_gap():
    rep = serre_compare(CI3, 3)
    assert rep.left.coefficients == (1, 3, 6, 10)
    assert rep.right.coefficients == (1, 3, 6, 13)
    assert rep.gap_index == 3
    w = rep.witness
    assert isinstance(w, SerreGapWitness)
    assert (w.index, w.left, w.right) == (3, 10, 13)
    assert replay(w, CI3)
    assert not replay(SerreGapWitness(3, 10, 14, "q"), CI3)


def test_serre_compare_requires_m_squared():
    with pytest.raises(ValueError):
        serre_compare(I((1, 0, 0)), 2)


def test_serre_compare_single_variable_golod():
    ideal = minimalize([(2,)], RingContext(("x",)))
    rep = serre_compare(ideal, 6)
    assert rep.left.coefficients == rep.right.coefficients == (1, 1, 1, 1, 1, 1, 1)
    assert rep.equal_up_to == 6


def test_serre_inequality_random():
    rng = SplitMix64(60601)
    for _ in range(30):
        ideal = random_ideal(rng, XYZ, 1, 4, 3, force_m2=True)
        rep = serre_compare(ideal, 4)
        for i in range(5):
            if rep.left_complete[i]:
                assert rep.left[i] <= rep.right[i]
        # a certified gap must mean not Golod, decisively checked in 3 vars
        if rep.witness is not None:
            assert golod3(ideal).status == "not_golod"


def test_serre_compare_golod_three_vars_equality():
    rng = SplitMix64(8088)
    seen = 0
    while seen < 10:
        ideal = random_ideal(rng, XYZ, 1, 4, 3, force_m2=True)
        if golod3(ideal).status != "golod":
            continue
        seen += 1
        rep = serre_compare(ideal, 4)
        assert rep.gap_index is None, ideal


def test_betti_one_equals_variable_count():
    rng = SplitMix64(24601)
    for _ in range(20):
        ideal = random_ideal(rng, XYZ, 1, 4, 3, force_m2=True)
        steps = resolve_residue_field(ideal, 1)
        assert len(steps[1].generator_degrees) == 3


def test_koszul_totals_feed_the_bound():
    totals = betti_table(MSQ).totals
    rep = serre_compare(MSQ, 4)
    assert rep.koszul_totals == totals
