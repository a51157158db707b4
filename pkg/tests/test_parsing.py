from fractions import Fraction

import pytest

from unitgroups.extension import IrreducibilityStatus, norm
from unitgroups.gf import field_make
from unitgroups.ordered import DYADIC_GROUP, INT_GROUP, lex_group
from unitgroups.parsing import (ParseError, parse_dyadic_ratfunc,
                                parse_ext_elem, parse_extension, parse_field,
                                parse_fqelem, parse_group, parse_hahn,
                                parse_og_elem, parse_poly, parse_ratfunc)
from unitgroups.perfect import DyadicRatFunc, frobenius, pc_level

F2 = field_make(2)
F3 = field_make(3)
F4 = field_make(2, 2)
F9 = field_make(3, 2)


class TestField:
    def test_accepts(self):
        assert str(parse_field("GF(2)")) == "GF(2)"
        assert str(parse_field("GF(3^2)")) == "GF(3^2)"
        assert str(parse_field(" GF( 2 ^ 10 ) ")) == "GF(2^10)"

    @pytest.mark.parametrize("bad", ["GF(4^1)x", "GF(1)", "GF(x)", "F(2)",
                                     "GF(2^0)", "GF(6)"])
    def test_rejects(self, bad):
        with pytest.raises(ParseError):
            parse_field(bad)


class TestRatFuncGrammar:
    def test_quotients_and_powers(self):
        assert str(parse_ratfunc(F2, "x/(x+1)")) == "x/(x + 1)"
        assert str(parse_ratfunc(F2, "(x^2+x)/x")) == "x + 1"
        assert str(parse_ratfunc(F3, "-x + 2*x")) == "x"
        assert str(parse_ratfunc(F2, "x^-2")) == "1/x^2"
        assert str(parse_ratfunc(F2, "x**3 + 1")) == "x^3 + 1"

    def test_extension_field_constants(self):
        assert str(parse_poly(F9, "a*x^2 + 2")) == "a*x^2 + 2"
        assert str(parse_fqelem(F4, "a + 1")) == "a + 1"
        assert parse_fqelem(F3, "2 + 2").val == 1

    def test_parse_poly_demands_polynomial(self):
        with pytest.raises(ParseError):
            parse_poly(F2, "x/(x+1)")

    def test_parse_fqelem_demands_constant(self):
        with pytest.raises(ParseError):
            parse_fqelem(F2, "x")

    @pytest.mark.parametrize("bad", ["x + ", "y + 1", "", "2x", "x^(1/2)",
                                     "(x", "x 1", "*x"])
    def test_rejects_malformed(self, bad):
        with pytest.raises(ParseError):
            parse_ratfunc(F2, bad)

    def test_division_by_zero_is_a_domain_error(self):
        with pytest.raises(ZeroDivisionError):
            parse_ratfunc(F2, "1/(x+x)")

    def test_generator_name_needs_extension_field(self):
        with pytest.raises(ParseError):
            parse_ratfunc(F2, "a*x")


class TestGroups:
    def test_names(self):
        assert parse_group("Z") is INT_GROUP
        assert parse_group("Z[1/2]") is DYADIC_GROUP
        assert parse_group("Z^3") == lex_group(3)

    @pytest.mark.parametrize("bad", ["Z^0", "Q", "Z[1/3]", "Z^"])
    def test_rejects(self, bad):
        with pytest.raises(ParseError):
            parse_group(bad)

    def test_elements(self):
        assert parse_og_elem(INT_GROUP, "-4").value == -4
        assert parse_og_elem(lex_group(2), "(1, -2)").value == (1, -2)
        assert parse_og_elem(DYADIC_GROUP, "3/4").value == Fraction(3, 4)
        assert parse_og_elem(DYADIC_GROUP, "-5/2").value == Fraction(-5, 2)

    def test_element_shape_checked(self):
        with pytest.raises(ParseError):
            parse_og_elem(DYADIC_GROUP, "1/3")
        with pytest.raises(ParseError):
            parse_og_elem(lex_group(3), "(1,2)")
        with pytest.raises(ParseError):
            parse_og_elem(INT_GROUP, "3/4")


class TestHahnGrammar:
    def test_round_trips(self):
        assert str(parse_hahn(F2, INT_GROUP, "x^(-3) + x^(2)")) == "x^(-3) + x^(2)"
        s = "1 + 2*x^(1) + x^(2) + O(x^(3))"
        assert str(parse_hahn(F3, INT_GROUP, s)) == s
        assert str(parse_hahn(F9, INT_GROUP, "(a+1)*x^(2)")) == "(a + 1)*x^(2)"

    def test_lex_and_dyadic_exponents(self):
        hl = parse_hahn(F2, lex_group(2), "x^((1,-2)) + x^(0,3)")
        assert [g.value for g, _ in hl.terms] == [(0, 3), (1, -2)]
        hd = parse_hahn(F2, DYADIC_GROUP, "x^(1/2) + x^(3/2)")
        assert [g.value for g, _ in hd.terms] == [Fraction(1, 2), Fraction(3, 2)]

    def test_bare_variable_means_exponent_one(self):
        assert str(parse_hahn(F2, INT_GROUP, "x + x^2")) == "x^(1) + x^(2)"

    def test_zero_and_pure_precision(self):
        assert str(parse_hahn(F2, INT_GROUP, "0")) == "0"
        assert parse_hahn(F2, INT_GROUP, "O(x^(4))").precision.value == 4

    def test_cancellation_yields_exact_zero(self):
        h = parse_hahn(F3, INT_GROUP, "x^(1) - x^(1)")
        assert h.is_zero() and h.is_exact()

    def test_lex_requires_explicit_exponent(self):
        with pytest.raises(ParseError):
            parse_hahn(F2, lex_group(2), "x + 1")

    def test_exponent_must_live_in_group(self):
        with pytest.raises(ParseError):
            parse_hahn(F2, INT_GROUP, "x^(1/2)")


class TestDyadicGrammar:
    def test_levels_and_values(self):
        q = parse_dyadic_ratfunc("t^(1/2) + t^(3/2)")
        assert pc_level(q) == 1
        assert str(q) == "t^(3/2) + t^(1/2)"
        assert frobenius(parse_dyadic_ratfunc("t^(1/2)")) == parse_dyadic_ratfunc("t")
        assert pc_level(parse_dyadic_ratfunc("(t^(1/4) + t)/(t + 1)")) == 2

    def test_negative_and_composite_roots(self):
        assert (parse_dyadic_ratfunc("t^(-1/2)")
                == parse_dyadic_ratfunc("t^(1/2)").inverse())
        assert parse_dyadic_ratfunc("(t+1)^(1/2)") ** 2 == parse_dyadic_ratfunc("t+1")

    def test_char_two_cancellation(self):
        assert parse_dyadic_ratfunc("1 + 1") == DyadicRatFunc.zero()

    def test_only_power_of_two_denominators(self):
        with pytest.raises(ParseError):
            parse_dyadic_ratfunc("t^(1/3)")


class TestExtensionGrammar:
    def test_accepts_and_round_trips(self):
        ext = parse_extension("GF(2)(t)[y]/(y^2 + y + t)")
        assert ext.status is IrreducibilityStatus.VERIFIED
        assert str(ext) == "GF(2)(t)[y]/(y^2 + y + t)"
        assert str(norm(parse_ext_elem(ext, "y + 1"))) == "t"
        assert str(norm(parse_ext_elem(ext, "t + 1"))) == "t^2 + 1"
        assert str(parse_ext_elem(ext, "y^2")) == "y + t"
        assert str(parse_ext_elem(ext, "y/t + 1")) == "(1/t)*y + 1"

    def test_bad_modulus_is_a_domain_error_not_a_parse_error(self):
        # the descriptor parses fine; rejecting y^2 + t^2 is mathematics
        with pytest.raises(ValueError) as exc:
            parse_extension("GF(2)(t)[y]/(y^2 + t^2)")
        assert not isinstance(exc.value, ParseError)

    @pytest.mark.parametrize("bad", [
        "GF(2)(t)[t]/(t^2 + 1)",     # repeated variable name
        "GF(2)(t)[y]/(y^2 + z)",     # unknown name in modulus
        "GF(2)(t)[y]",               # missing modulus
        "GF(6)(t)[y]/(y^2 + t)",     # bad field
    ])
    def test_rejects_malformed_descriptors(self, bad):
        with pytest.raises(ParseError):
            parse_extension(bad)

    def test_ext_elem_grammar(self):
        ext = parse_extension("GF(2)(t)[y]/(y^2 + y + t)")
        with pytest.raises(ParseError):
            parse_ext_elem(ext, "y + w")
        with pytest.raises(ZeroDivisionError):
            parse_ext_elem(ext, "1/(t+t)")
