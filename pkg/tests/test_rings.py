import pytest

from golodkit.rings import (
    ContextMismatchError,
    ExponentOverflowError,
    MAX_EXPONENT,
    Monomial,
    MonomialIdeal,
    RingContext,
    in_m_squared,
    minimalize,
    multidegree_of_term,
)
from golodkit.rng import SplitMix64, random_ideal

from oracles import antichain_ok, box, member_brute

XYZ = RingContext(("x", "y", "z"))


def test_context_basics():
    assert XYZ.n == 3
    assert XYZ.names == ("x", "y", "z")
    assert XYZ.index_of("y") == 1
    with pytest.raises(KeyError):
        XYZ.index_of("t")
    assert RingContext.from_names("a, b").names == ("a", "b")
    assert RingContext.from_names("").n == 0


def test_context_rejects_duplicates_and_empty_names():
    with pytest.raises(ValueError):
        RingContext(("x", "x"))
    with pytest.raises(ValueError):
        RingContext(("x", ""))


def test_monomial_arithmetic():
    m = XYZ.monomial((2, 0, 1))
    assert m.total_degree() == 3
    assert not m.is_one()
    assert XYZ.one().is_one()
    assert (m * XYZ.monomial((0, 3, 0))).exponents == (2, 3, 1)
    assert XYZ.variable(1).exponents == (0, 1, 0)
    with pytest.raises(IndexError):
        XYZ.variable(3)


def test_monomial_validation():
    with pytest.raises(ValueError):
        Monomial((1, -1))
    with pytest.raises(ExponentOverflowError):
        Monomial((MAX_EXPONENT + 1,))
    with pytest.raises(ContextMismatchError):
        XYZ.monomial((1, 2))


def test_divisibility():
    a = XYZ.monomial((1, 0, 2))
    b = XYZ.monomial((2, 1, 2))
    assert a.divides(b)
    assert not b.divides(a)
    assert XYZ.one().divides(a)


def test_minimalize_collapses_to_antichain():
    ideal = minimalize([(2, 0, 0), (2, 1, 0), (0, 0, 3), (2, 0, 0)], XYZ)
    assert [g.exponents for g in ideal.gens] == [(0, 0, 3), (2, 0, 0)]
    assert antichain_ok(ideal)


def test_minimalize_unit_swallows_everything():
    ideal = minimalize([(0, 0, 0), (1, 0, 0)], XYZ)
    assert ideal.is_unit()
    assert len(ideal.gens) == 1


def test_zero_ideal():
    z = minimalize([], XYZ)
    assert z.is_zero()
    assert not z.member(XYZ.monomial((5, 5, 5)))
    assert in_m_squared(z)


def test_constructor_enforces_invariants():
    with pytest.raises(ValueError):
        MonomialIdeal(XYZ, (Monomial((2, 0, 0)), Monomial((2, 1, 0))))
    with pytest.raises(ValueError):
        MonomialIdeal(XYZ, (Monomial((1, 0, 0)), Monomial((0, 1, 0))))
    with pytest.raises(ContextMismatchError):
        MonomialIdeal(XYZ, (Monomial((1, 0)),))


def test_membership_matches_brute_force():
    rng = SplitMix64(7)
    for _ in range(60):
        ideal = random_ideal(rng, XYZ, 1, 4, 3)
        for v in box(XYZ, 4):
            assert ideal.member(XYZ.monomial(v)) == member_brute(v, ideal)


def test_random_ideals_are_antichains():
    rng = SplitMix64(11)
    for _ in range(200):
        assert antichain_ok(random_ideal(rng, XYZ, 1, 5, 4))


def test_in_m_squared():
    assert in_m_squared(minimalize([(2, 0, 0), (0, 1, 1)], XYZ))
    assert not in_m_squared(minimalize([(1, 0, 0), (0, 2, 0)], XYZ))


def test_multidegree_of_term():
    m = XYZ.monomial((1, 0, 0))
    assert multidegree_of_term(m, (0, 2), XYZ) == (2, 0, 1)
    assert multidegree_of_term(m, (), XYZ) == (1, 0, 0)
    with pytest.raises(IndexError):
        multidegree_of_term(m, (5,), XYZ)
