"""Parser and printer: grammar corners, error offsets, round-trips."""

import pytest

from golodkit import (
    Monomial,
    ParseError,
    RingContext,
    SplitMix64,
    format_ideal,
    format_monomial,
    parse_ideal,
    random_ideal,
)

XYZ = RingContext(("x", "y", "z"))
XYZW = RingContext(("x", "y", "z", "w"))


def exps(ideal):
    return sorted(m.exponents for m in ideal.gens)


class TestParse:
    def test_basic_two_generators(self):
        ideal = parse_ideal("(x^2*y, z)", XYZ)
        assert exps(ideal) == [(0, 0, 1), (2, 1, 0)]

    def test_unit_ideal(self):
        assert parse_ideal("(1)", XYZ).is_unit()

    def test_zero_ideal(self):
        ideal = parse_ideal("()", XYZ)
        assert ideal.gens == ()
        assert not ideal.is_unit()

    def test_whitespace_ignored(self):
        a = parse_ideal("( x ^ 2 , y * z )", XYZ)
        b = parse_ideal("(x^2,y*z)", XYZ)
        assert a.gens == b.gens

    def test_repeated_variables_multiply(self):
        ideal = parse_ideal("(x*x*y^2*x)", XYZ)
        assert exps(ideal) == [(3, 2, 0)]

    def test_result_is_minimalized(self):
        ideal = parse_ideal("(x, x^2, x*y)", XYZ)
        assert exps(ideal) == [(1, 0, 0)]

    def test_missing_exponent_error_offset(self):
        with pytest.raises(ParseError) as info:
            parse_ideal("(x^)", XYZ)
        assert info.value.position == 3

    def test_zero_exponent_rejected(self):
        with pytest.raises(ParseError):
            parse_ideal("(x^0)", XYZ)

    def test_undeclared_variable(self):
        with pytest.raises(ParseError, match="undeclared"):
            parse_ideal("(a^2)", XYZ)

    def test_trailing_text(self):
        with pytest.raises(ParseError, match="trailing"):
            parse_ideal("(x) junk", XYZ)

    def test_missing_close_paren(self):
        with pytest.raises(ParseError):
            parse_ideal("(x, y", XYZ)

    def test_t_alias_in_four_variables(self):
        ideal = parse_ideal("(t^2)", XYZW)
        assert exps(ideal) == [(0, 0, 0, 2)]

    def test_declared_t_not_aliased(self):
        ctx = RingContext(("x", "y", "z", "t"))
        ideal = parse_ideal("(t^3)", ctx)
        assert exps(ideal) == [(0, 0, 0, 3)]

    def test_t_alias_only_in_four_variables(self):
        with pytest.raises(ParseError, match="undeclared"):
            parse_ideal("(t)", XYZ)

    def test_underscore_names(self):
        ctx = RingContext(("u_1", "u_2"))
        ideal = parse_ideal("(u_1*u_2^3)", ctx)
        assert exps(ideal) == [(1, 3)]


class TestFormat:
    def test_monomial_forms(self):
        assert format_monomial(Monomial((0, 0, 0)), XYZ) == "1"
        assert format_monomial(Monomial((1, 0, 2)), XYZ) == "x*z^2"
        assert format_monomial(Monomial((0, 3, 0)), XYZ) == "y^3"

    def test_ideal_descending_lex(self):
        ideal = parse_ideal("(y*z, x^2, z^4)", XYZ)
        assert format_ideal(ideal) == "(x^2, y*z, z^4)"

    def test_zero_ideal_prints_empty(self):
        assert format_ideal(parse_ideal("()", XYZ)) == "()"


class TestRoundTrip:
    def test_round_trip_random(self):
        rng = SplitMix64(20260815)
        for k in range(250):
            ctx = XYZ if k % 2 else XYZW
            ideal = random_ideal(rng, ctx, 1, 6, 5)
            again = parse_ideal(format_ideal(ideal), ctx)
            assert again.gens == ideal.gens

    def test_round_trip_unit_and_zero(self):
        for text in ("(1)", "()"):
            ideal = parse_ideal(text, XYZ)
            assert parse_ideal(format_ideal(ideal), XYZ).gens == ideal.gens
