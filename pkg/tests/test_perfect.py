import random
from fractions import Fraction

import pytest

from unitgroups.gf import field_make
from unitgroups.ordered import DYADIC_GROUP
from unitgroups.parsing import parse_dyadic_ratfunc, parse_hahn, parse_poly
from unitgroups.perfect import (DyadicPoly, DyadicRatFunc, PCDecomposition,
                                frobenius, frobenius_inv, pc_decompose,
                                pc_level, pc_recompose, random_dyadic_ratfunc)

F2 = field_make(2)


def dq(text):
    return parse_dyadic_ratfunc(text)


class TestFrobenius:
    def test_square_root_of_t(self):
        assert frobenius(dq("t^(1/2)")) == dq("t")

    def test_polynomial(self):
        assert frobenius(dq("1+t")) == dq("1+t^2")

    def test_quotient(self):
        # canonical forms cancel shared factors level by level, so the
        # result prints reduced; equality is what the map promises
        assert frobenius(dq("(t^(1/4)+t)/(t+1)")) == dq("(t^(1/2)+t^2)/(t^2+1)")

    def test_inverse_examples(self):
        assert frobenius_inv(dq("t")) == dq("t^(1/2)")
        assert frobenius_inv(dq("1+t^2")) == dq("1+t")
        assert frobenius_inv(dq("t+t^3")) == dq("t^(1/2)+t^(3/2)")

    def test_round_trip_both_ways(self):
        rng = random.Random(70)
        for _ in range(60):
            q = random_dyadic_ratfunc(rng)
            assert frobenius_inv(frobenius(q)) == q
            assert frobenius(frobenius_inv(q)) == q

    def test_frobenius_is_a_field_homomorphism(self):
        rng = random.Random(71)
        for _ in range(40):
            a = random_dyadic_ratfunc(rng)
            b = random_dyadic_ratfunc(rng)
            assert frobenius(a * b) == frobenius(a) * frobenius(b)
            assert frobenius(a + b) == frobenius(a) + frobenius(b)


class TestLevel:
    def test_frozen_levels(self):
        assert pc_level(dq("t+1")) == 0
        assert pc_level(dq("t^(1/4)+t")) == 2
        assert pc_level(dq("t^(1/2)/(t+1)")) == 1

    def test_frobenius_lowers_level(self):
        rng = random.Random(72)
        for _ in range(60):
            q = random_dyadic_ratfunc(rng)
            assert pc_level(frobenius(q)) == max(pc_level(q) - 1, 0)

    def test_frobenius_inv_raises_level_by_at_most_one(self):
        rng = random.Random(73)
        for _ in range(60):
            q = random_dyadic_ratfunc(rng)
            lv = pc_level(q)
            assert pc_level(frobenius_inv(q)) <= lv + 1

    def test_level_is_canonical(self):
        # an element written at an inflated level still reports its
        # true level
        assert pc_level(dq("t^(2/4)")) == 1
        assert pc_level(dq("t^(4/4)")) == 0


class TestDecompose:
    def test_fractional_and_integer_exponents(self):
        d = pc_decompose(dq("t^(1/2)*(t+1)"))
        assert d.factors == ((parse_poly(F2, "t", var="t"), Fraction(1, 2)),
                             (parse_poly(F2, "t+1", var="t"), Fraction(1)))

    def test_plain_ratfunc(self):
        d = pc_decompose(dq("t"))
        assert d.factors == ((parse_poly(F2, "t", var="t"), Fraction(1)),)

    def test_deep_root(self):
        d = pc_decompose(dq("t^(1/4)"))
        assert d.factors == ((parse_poly(F2, "t", var="t"), Fraction(1, 4)),)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            pc_decompose(DyadicRatFunc.zero())

    def test_exponents_add_under_product(self):
        rng = random.Random(74)
        for _ in range(60):
            a = random_dyadic_ratfunc(rng)
            b = random_dyadic_ratfunc(rng)
            ea = dict(pc_decompose(a).factors)
            eb = dict(pc_decompose(b).factors)
            eab = dict(pc_decompose(a * b).factors)
            merged = {f: ea.get(f, 0) + eb.get(f, 0) for f in set(ea) | set(eb)}
            assert eab == {f: e for f, e in merged.items() if e != 0}


class TestRecompose:
    def test_frozen_values(self):
        assert pc_recompose(PCDecomposition(())) == DyadicRatFunc.one()
        t = parse_poly(F2, "t", var="t")
        assert pc_recompose(PCDecomposition(((t, Fraction(1, 2)),))) == dq("t^(1/2)")

    def test_round_trip(self):
        rng = random.Random(75)
        for _ in range(80):
            q = random_dyadic_ratfunc(rng)
            assert pc_recompose(pc_decompose(q)) == q

    def test_validation(self):
        t = parse_poly(F2, "t", var="t")
        with pytest.raises(ValueError):
            PCDecomposition(((t, Fraction(1, 3)),))  # not dyadic
        with pytest.raises(ValueError):
            PCDecomposition(((t, Fraction(0)),))
        with pytest.raises(ValueError):
            PCDecomposition(((parse_poly(F2, "x"), Fraction(1)),))  # wrong var


class TestHahnEmbedding:
    def test_monomials_and_polys(self):
        got = dq("t^(1/2)").num.to_hahn()
        assert got == parse_hahn(F2, DYADIC_GROUP, "x^(1/2)")
        got = dq("1+t").num.to_hahn()
        assert got == parse_hahn(F2, DYADIC_GROUP, "1 + x")

    def test_embedding_respects_products(self):
        rng = random.Random(76)
        for _ in range(50):
            a = random_dyadic_ratfunc(rng).num
            b = random_dyadic_ratfunc(rng).num
            assert (a * b).to_hahn() == a.to_hahn() * b.to_hahn()
            assert (a + b).to_hahn() == a.to_hahn() + b.to_hahn()


class TestDyadicPoly:
    def test_from_exponents(self):
        p = DyadicPoly.from_exponents({Fraction(1, 2): 1, Fraction(0): 1})
        assert str(p) == "t^(1/2) + 1"

    def test_rejects_non_dyadic_exponent(self):
        with pytest.raises(ValueError):
            DyadicPoly.from_exponents({Fraction(1, 5): 1})

    def test_rejects_negative_exponent(self):
        with pytest.raises(ValueError):
            DyadicPoly.from_exponents({Fraction(-1, 2): 1})
