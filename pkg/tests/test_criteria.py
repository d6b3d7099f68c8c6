import pytest

from golodkit.certificates import (
    Cond1Violation,
    Cond2Violation,
    SerreGapWitness,
    kind,
)
from golodkit.criteria import (
    GolodVerdict,
    check_condition1,
    check_condition2,
    golod3,
    nec_all,
    replay,
    verdict,
)
from golodkit.ideals import ideal_product, maximal_ideal
from golodkit.koszul import products_trivial
from golodkit.rings import RingContext, minimalize
from golodkit.rng import SplitMix64, random_ideal

XYZ = RingContext(("x", "y", "z"))
XYZW = RingContext(("x", "y", "z", "w"))


def I(*rows, ctx=XYZ):
    return minimalize(list(rows), ctx)


EX1 = I((2, 0, 0), (0, 4, 0), (0, 0, 4), (1, 0, 2), (0, 1, 1), (1, 2, 0))


def test_golod3_closed_example_not_golod():
    v = golod3(EX1)
    assert v.status == "not_golod"
    cond2 = [c for c in v.certificates if kind(c) == "cond2"]
    assert any(c.product == (1, 0, 1) for c in cond2)
    assert all(replay(c, EX1) for c in v.certificates)


def test_golod3_small_example_not_golod():
    ideal = I((2, 0, 0), (0, 1, 1))
    v = golod3(ideal)
    assert v.status == "not_golod"
    assert all(replay(c, ideal) for c in v.certificates)


def test_golod3_golod_example():
    msq = ideal_product(maximal_ideal(XYZ), maximal_ideal(XYZ))
    v = golod3(msq)
    assert v.status == "golod"
    assert v.certificates == ()


def test_golod3_guards():
    with pytest.raises(ValueError):
        golod3(minimalize([(1, 0), (0, 2)], RingContext(("x", "y"))))
    with pytest.raises(ValueError):
        golod3(I((1, 0, 0)))
    assert golod3(minimalize([], XYZ)).status == "golod"


def test_condition_checks_validate_splits():
    ideal = I((2, 0, 0), (0, 1, 1))
    with pytest.raises(ValueError):
        check_condition1(ideal, (0, 1), (1, 2))
    with pytest.raises(ValueError):
        check_condition1(ideal, (), (0, 1, 2))
    with pytest.raises(ValueError):
        check_condition1(ideal, (0,), (1,))
    with pytest.raises(ValueError):
        check_condition2(ideal, (0,), (1,), 1)
    with pytest.raises(ValueError):
        check_condition2(ideal, (0, 1), (2,), 2)


def test_condition1_vacuous_when_t_empty():
    ideal = I((2, 0, 0), (0, 1, 1))
    assert check_condition1(ideal, (0, 1, 2), ()) is None


def test_remark_product_condition1_witness():
    # (x^2, y^2, z^2, w^2) * (x, y, z, w): xy and zw multiply outside the ideal
    sq = minimalize([(2, 0, 0, 0), (0, 2, 0, 0), (0, 0, 2, 0), (0, 0, 0, 2)], XYZW)
    ideal = ideal_product(sq, maximal_ideal(XYZW))
    viol = check_condition1(ideal, (0, 1), (2, 3))
    assert viol is not None
    assert viol.f == (1, 1, 0, 0)
    assert viol.g == (0, 0, 1, 1)
    assert viol.product == (1, 1, 1, 1)
    assert replay(viol, ideal)


def test_nec_all_requires_m_squared():
    with pytest.raises(ValueError):
        nec_all(I((1, 0, 0)))


def test_nec_all_matches_golod3_on_random_ideals():
    rng = SplitMix64(31337)
    for _ in range(60):
        ideal = random_ideal(rng, XYZ, 1, 4, 3, force_m2=True)
        certs = nec_all(ideal)
        assert golod3(ideal).status == ("not_golod" if certs else "golod")
        for c in certs[:3]:
            assert replay(c, ideal)


def test_verdict_three_variables_uses_decisive_engine():
    v = verdict(I((2, 0, 0), (0, 1, 1)))
    assert v.status == "not_golod"
    assert v.engines_run == ("golod3",)
    assert not v.reduction_applied


def test_verdict_eliminates_linear_generators():
    # x + the image of (y^2) leaves a 2-variable context
    ideal = I((1, 0, 0), (0, 2, 0))
    v = verdict(ideal)
    assert v.reduction_applied
    assert v.ideal.context.names == ("y", "z")
    assert v.original is ideal
    assert v.notes


def test_verdict_reduction_to_three_vars_is_decisive():
    # w dies, leaving m^2 in three variables: Golod
    xyzw_msq = ideal_product(maximal_ideal(XYZ), maximal_ideal(XYZ))
    rows = [g.exponents + (0,) for g in xyzw_msq.gens] + [(0, 0, 0, 1)]
    ideal = minimalize(rows, XYZW)
    v = verdict(ideal)
    assert v.status == "golod"
    assert v.engines_run == ("golod3",)
    assert v.reduction_applied


def test_verdict_zero_after_reduction_is_inconclusive():
    ideal = minimalize([(1, 0, 0, 0), (0, 0, 0, 1)], XYZW)
    v = verdict(ideal)
    assert v.status == "inconclusive"
    assert v.certificates == ()
    assert "polynomial ring" in " ".join(v.notes)


def test_verdict_rejects_unit_and_unknown_engine():
    with pytest.raises(ValueError):
        verdict(I((0, 0, 0)))
    with pytest.raises(ValueError):
        verdict(I((2, 0, 0)), engines=("nope",))


def test_verdict_four_vars_not_golod_via_nec():
    sq = minimalize([(2, 0, 0, 0), (0, 2, 0, 0), (0, 0, 2, 0), (0, 0, 0, 2)], XYZW)
    ideal = ideal_product(sq, maximal_ideal(XYZW))
    v = verdict(ideal)
    assert v.status == "not_golod"
    assert v.engines_run == ("nec",)
    assert all(replay(c, ideal) for c in v.certificates)


def test_verdict_inconclusive_case():
    # 4-variable ideal passing nec with trivial products and no gap at small order
    sq = minimalize(
        [(2, 0, 0, 0), (0, 2, 0, 0), (0, 0, 2, 0), (0, 0, 0, 2)], XYZW
    )
    msq4 = ideal_product(maximal_ideal(XYZW), maximal_ideal(XYZW))
    v = verdict(msq4, serre_order=3)
    assert v.status == "inconclusive"
    assert v.engines_run == ("nec", "koszul", "serre")


def test_verdict_consistent_with_products_for_three_vars():
    rng = SplitMix64(927)
    for _ in range(40):
        ideal = random_ideal(rng, XYZ, 1, 4, 3, force_m2=True)
        assert (golod3(ideal).status == "golod") == products_trivial(ideal).trivial


def test_golod_verdict_invariants():
    with pytest.raises(ValueError):
        GolodVerdict("bogus", (), ("nec",), EX1, EX1)
    with pytest.raises(ValueError):
        GolodVerdict("not_golod", (), ("nec",), EX1, EX1)
    with pytest.raises(ValueError):
        GolodVerdict(
            "golod",
            (Cond1Violation((0,), (1, 2), (1, 0, 0), (0, 1, 0), (1, 1, 0)),),
            ("nec",),
            EX1,
            EX1,
        )


def test_replay_rejects_tampered_certificates():
    ideal = I((2, 0, 0), (0, 1, 1))
    certs = nec_all(ideal)
    assert certs
    c = certs[0]
    if isinstance(c, Cond1Violation):
        bad = Cond1Violation(c.subset_s, c.subset_t, c.f, c.g, (9, 9, 9))
    else:
        bad = Cond2Violation(c.subset_s, c.subset_t, c.pivot, c.f, c.g, (9, 9, 9))
    assert not replay(bad, ideal)
    # a "gap" where none exists
    fake = SerreGapWitness(2, 5, 9, "q")
    assert not replay(fake, ideal)


def test_replay_rejects_unknown_type():
    with pytest.raises(TypeError):
        replay(object(), EX1)
