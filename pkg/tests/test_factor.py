import random

import pytest

from unitgroups.factor import factor_poly, is_irreducible, product_of_factors
from unitgroups.gf import FqElem, field_make
from unitgroups.parsing import parse_poly
from unitgroups.poly import Poly, random_poly

F2 = field_make(2)
F3 = field_make(3)


def fp(spec, text):
    return parse_poly(spec, text)


class TestExamples:
    def test_split_linear_pair(self):
        unit, factors = factor_poly(fp(F2, "x^2+x"))
        assert unit.val == 1
        assert factors == ((fp(F2, "x"), 1), (fp(F2, "x+1"), 1))

    def test_degree_five_splits_2_3(self):
        unit, factors = factor_poly(fp(F2, "x^5+x+1"))
        assert unit.val == 1
        assert factors == ((fp(F2, "x^2+x+1"), 1), (fp(F2, "x^3+x^2+1"), 1))

    def test_unit_is_pulled_out(self):
        unit, factors = factor_poly(fp(F3, "2*x^2+2*x"))
        assert unit.val == 2
        assert factors == ((fp(F3, "x"), 1), (fp(F3, "x+1"), 1))

    def test_repeated_factors(self):
        unit, factors = factor_poly(fp(F2, "x^4+x^2"))  # x^2 (x+1)^2
        assert factors == ((fp(F2, "x"), 2), (fp(F2, "x+1"), 2))

    def test_constant_polynomial(self):
        unit, factors = factor_poly(Poly.constant(F3, 2))
        assert unit.val == 2 and factors == ()

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            factor_poly(Poly.zero(F2))


class TestIrreducible:
    def test_frozen_verdicts(self):
        assert is_irreducible(fp(F2, "x^2+x+1")) is True
        assert is_irreducible(fp(F2, "x^2+1")) is False
        assert is_irreducible(fp(F2, "x^4+x+1")) is True

    def test_constant_rejected(self):
        with pytest.raises(ValueError):
            is_irreducible(Poly.one(F2))

    def test_non_monic_irreducible(self):
        assert is_irreducible(fp(F3, "2*x^2+2")) is True  # 2(x^2 + 1)

    def test_every_reported_factor_is_irreducible(self):
        rng = random.Random(20)
        for _ in range(25):
            f = random_poly(F3, rng.randrange(2, 14), rng)
            if f.is_constant():
                continue
            for g, _m in factor_poly(f)[1]:
                assert is_irreducible(g)


class TestRecomposition:
    @pytest.mark.parametrize("p,n", [(2, 1), (3, 1), (3, 2), (2, 4), (5, 2),
                                     (1009, 1)])
    def test_product_reconstructs(self, p, n):
        spec = field_make(p, n)
        rng = random.Random(p * 31 + n)
        for _ in range(15):
            f = random_poly(spec, rng.randrange(1, 12), rng)
            unit, factors = factor_poly(f)
            assert product_of_factors(unit, factors, f.var) == f
            for g, m in factors:
                assert g.is_monic() and m >= 1


class TestDeterminism:
    def test_same_seed_same_output(self):
        rng = random.Random(8)
        for _ in range(10):
            f = random_poly(F2, 16, rng, monic=True)
            assert factor_poly(f, seed=5) == factor_poly(f, seed=5)

    def test_multiset_identical_across_seeds(self):
        rng = random.Random(9)
        for _ in range(10):
            f = random_poly(F3, 14, rng, monic=True)
            base = factor_poly(f, seed=0)
            for seed in (1, 2, 77):
                assert factor_poly(f, seed=seed) == base


class TestGcdLcmConsistency:
    def test_exponent_min_max_identity(self):
        # gcd picks min multiplicities, lcm picks max; their product has
        # the multiplicity sum, which equals the product of inputs.
        rng = random.Random(31)
        from unitgroups.poly import poly_gcd
        for _ in range(20):
            a = random_poly(F2, rng.randrange(1, 10), rng, monic=True)
            b = random_poly(F2, rng.randrange(1, 10), rng, monic=True)
            g = poly_gcd(a, b)
            fa = dict(factor_poly(a)[1])
            fb = dict(factor_poly(b)[1])
            fg = dict(factor_poly(g)[1]) if not g.is_constant() else {}
            for q in set(fa) | set(fb):
                assert fg.get(q, 0) == min(fa.get(q, 0), fb.get(q, 0))
