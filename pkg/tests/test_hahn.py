import random
from fractions import Fraction

import pytest

from unitgroups.gf import FqElem, field_make
from unitgroups.hahn import HahnSeries, hs_probe, hs_section, random_series
from unitgroups.ordered import DYADIC_GROUP, INT_GROUP, lex_group
from unitgroups.parsing import parse_hahn
from unitgroups.valuation import check_valuation_axioms

F2 = field_make(2)
F3 = field_make(3)
F5 = field_make(5)
Z = INT_GROUP
Z2 = lex_group(2)


def hs(text, spec=F2, group=Z):
    return parse_hahn(spec, group, text)


class TestConstruction:
    def test_terms_merge_and_cancel(self):
        # two copies of the same monomial cancel in characteristic 2
        s = HahnSeries(F2, Z, [(1, 1), (1, 1), (2, 1)])
        assert s == hs("x^2")

    def test_zero_coefficients_dropped(self):
        assert HahnSeries(F3, Z, [(0, 3), (1, 1)]) == hs("x", F3)

    def test_raw_exponents_coerced(self):
        s = HahnSeries(F2, DYADIC_GROUP, [(Fraction(1, 2), 1)])
        assert s.valuation() == DYADIC_GROUP.make(Fraction(1, 2))

    def test_precision_hides_high_terms(self):
        s = HahnSeries(F2, Z, [(0, 1), (5, 1)], precision=3)
        assert s == HahnSeries(F2, Z, [(0, 1)], precision=3)
        assert not s.is_exact()

    def test_mixed_group_exponent_rejected(self):
        with pytest.raises(ValueError):
            HahnSeries(F2, Z, [((1, 2), 1)])


class TestArithmetic:
    def test_square_root_of_x(self):
        h = hs("x^(1/2)", group=DYADIC_GROUP)
        assert h * h == hs("x", group=DYADIC_GROUP)

    def test_shifted_product(self):
        a = hs("x^-3 + x^2")
        b = hs("x^3")
        assert a * b == hs("1 + x^5")

    def test_char_cancellation_in_sum(self):
        assert (hs("1 + x") + hs("1 + x^2")) == hs("x + x^2")

    def test_pow_and_neg(self):
        a = hs("1 + x", F3)
        assert a ** 2 == hs("1 + 2*x + x^2", F3)
        assert a + (-a) == HahnSeries.zero(F3, Z)

    def test_lex_exponents(self):
        a = hs("x^(0,1) + x^(1,0)", group=Z2)
        assert a.valuation() == Z2.make((0, 1))
        assert (a * a).valuation() == Z2.make((0, 2))


class TestPrecision:
    def test_addition_takes_min_precision(self):
        a = HahnSeries(F2, Z, [(0, 1)], precision=2)
        b = HahnSeries(F2, Z, [(1, 1)], precision=5)
        assert (a + b).precision == Z.make(2)

    def test_exact_plus_truncated(self):
        a = hs("1 + x^9")
        b = HahnSeries(F2, Z, [(1, 1)], precision=4)
        c = a + b
        assert c.precision == Z.make(4)
        assert c == HahnSeries(F2, Z, [(0, 1), (1, 1)], precision=4)

    def test_product_precision_shifts_by_low_end(self):
        a = HahnSeries(F2, Z, [(0, 1)], precision=2)  # 1 + O(x^2)
        b = hs("x^3")
        assert (a * b).precision == Z.make(5)

    def test_equality_includes_precision(self):
        exact = hs("1 + x")
        cut = HahnSeries(F2, Z, [(0, 1), (1, 1)], precision=9)
        assert exact != cut
        assert hash(exact) != hash(cut) or exact == cut


class TestInverse:
    def test_geometric_series(self):
        inv = hs("1 + x").inverse(4)
        assert inv == HahnSeries(F2, Z, [(0, 1), (1, 1), (2, 1), (3, 1)],
                                 precision=4)

    def test_odd_characteristic(self):
        inv = hs("1 + 2*x", F3).inverse(3)
        assert inv == HahnSeries(F3, Z, [(0, 1), (1, 1), (2, 1)], precision=3)

    def test_monomial_inverse_is_exact(self):
        inv = hs("x^2").inverse(1)
        assert inv == hs("x^-2") and inv.is_exact()

    def test_product_with_inverse_is_one_to_precision(self):
        rng = random.Random(60)
        for spec, group in ((F2, Z), (F5, Z), (F2, DYADIC_GROUP)):
            for _ in range(20):
                a = random_series(spec, group, rng)
                if a.is_zero():
                    continue
                n = rng.randrange(1, 6)
                prod = a * a.inverse(n)
                one = HahnSeries.one(spec, group)
                cut = prod.precision
                assert prod == (one.truncate(cut) if cut is not None else one)

    def test_zero_has_no_inverse(self):
        with pytest.raises(ZeroDivisionError):
            HahnSeries.zero(F2, Z).inverse(3)

    def test_needs_at_least_one_term(self):
        with pytest.raises(ValueError):
            hs("1 + x").inverse(0)


class TestValuationSectionSplit:
    def test_frozen_valuations(self):
        assert hs("x^-3 + x^2").valuation() == Z.make(-3)
        assert hs("x^(0,1)", group=Z2).valuation() == Z2.make((0, 1))
        assert hs("1 + x").valuation() == Z.zero()

    def test_zero_valuation_rejected(self):
        with pytest.raises(ValueError):
            HahnSeries.zero(F2, Z).valuation()

    def test_section_is_monomial(self):
        assert hs_section(F2, Z, Z.zero()) == hs("1")
        s = hs_section(F2, Z2, Z2.make((1, -2)))
        assert s == hs("x^(1,-2)", group=Z2)
        d = hs_section(F2, DYADIC_GROUP, DYADIC_GROUP.make(Fraction(3, 4)))
        assert d == hs("x^(3/4)", group=DYADIC_GROUP)

    def test_frozen_splits(self):
        g, w = hs("x^-3 + x^2").unit_split()
        assert g == Z.make(-3) and w == hs("1 + x^5")
        g, w = hs("2*x^4", F3).unit_split()
        assert g == Z.make(4) and w == HahnSeries(F3, Z, [(0, 2)])
        g, w = hs("x^(1/2) + x^(3/2)", group=DYADIC_GROUP).unit_split()
        assert g == DYADIC_GROUP.make(Fraction(1, 2))
        assert w == hs("1 + x", group=DYADIC_GROUP)

    def test_split_respects_products(self):
        rng = random.Random(61)
        for spec, group in ((F2, Z), (F5, Z), (F2, Z2), (F2, DYADIC_GROUP)):
            for _ in range(30):
                a = random_series(spec, group, rng)
                b = random_series(spec, group, rng)
                if a.is_zero() or b.is_zero():
                    continue
                ga, wa = a.unit_split()
                gb, wb = b.unit_split()
                gp, wp = (a * b).unit_split()
                assert gp == ga + gb
                assert wp == wa * wb

    def test_split_rejects_zero_and_inexact_unit(self):
        with pytest.raises(ValueError):
            HahnSeries.zero(F2, Z).unit_split()


class TestAxiomProbes:
    @pytest.mark.parametrize("group", [Z, Z2, DYADIC_GROUP])
    def test_probe_passes(self, group):
        result = check_valuation_axioms(hs_probe(F2, group), trials=150, seed=3)
        assert result.passed, str(result)
