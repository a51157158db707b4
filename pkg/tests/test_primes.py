import math
import random

import pytest

from unitgroups.primes import (PrimeKind, factor_integer, is_prime,
                               is_prime_power, iter_prime_powers,
                               primary_decomposition, sieve_primes,
                               special_prime_kind)


class TestFactorInteger:
    def test_small_composite(self):
        assert factor_integer(12).factors == ((2, 2), (3, 1))

    def test_one_has_empty_factorization(self):
        assert factor_integer(1).factors == ()

    def test_large_prime(self):
        assert factor_integer(65537).factors == ((65537, 1),)

    def test_reconstructs_and_lists_primes(self):
        rng = random.Random(7)
        for _ in range(200):
            n = rng.randrange(1, 10**12)
            fi = factor_integer(n)
            prod = 1
            prev = 0
            for p, e in fi.factors:
                assert p > prev  # ascending, no repeats
                assert is_prime(p)
                assert e >= 1
                prod *= p**e
                prev = p
            assert prod == n

    @pytest.mark.parametrize("bad", [0, -4, (1 << 63) + 1, 2.5, "12"])
    def test_rejects_out_of_range(self, bad):
        with pytest.raises(ValueError):
            factor_integer(bad)


class TestIsPrimePower:
    def test_examples(self):
        assert is_prime_power(8) == (2, 3)
        assert is_prime_power(6) is None
        assert is_prime_power(531441) == (3, 12)

    def test_one_is_not_a_prime_power(self):
        assert is_prime_power(1) is None

    def test_agrees_with_factorization_exhaustively(self):
        for n in range(1, 5000):
            fi = factor_integer(n).factors
            expected = fi[0] if len(fi) == 1 else None
            assert is_prime_power(n) == expected, n


class TestSpecialPrimeKind:
    def test_fermat_only(self):
        assert special_prime_kind(5) == {PrimeKind.FERMAT}
        assert special_prime_kind(257) == {PrimeKind.FERMAT}

    def test_mersenne_only(self):
        assert special_prime_kind(7) == {PrimeKind.MERSENNE}
        assert special_prime_kind(127) == {PrimeKind.MERSENNE}

    def test_composite_mersenne_shape_gets_no_flag(self):
        # 2047 = 2^11 - 1 = 23 * 89
        assert special_prime_kind(2047) == frozenset()

    def test_three_carries_both_flags(self):
        assert special_prime_kind(3) == {PrimeKind.FERMAT, PrimeKind.MERSENNE}

    def test_two_carries_neither(self):
        assert special_prime_kind(2) == frozenset()

    def test_three_is_the_only_double_flag(self):
        for n in range(2, 20000):
            flags = special_prime_kind(n)
            if len(flags) == 2:
                assert n == 3

    def test_rejects_below_two(self):
        with pytest.raises(ValueError):
            special_prime_kind(1)


class TestPrimaryDecomposition:
    def test_examples(self):
        assert primary_decomposition(6) == [2, 3]
        assert primary_decomposition(8) == [8]
        assert primary_decomposition(360) == [8, 9, 5]
        assert primary_decomposition(1) == []

    def test_single_part_iff_prime_power(self):
        for n in range(1, 20000):
            parts = primary_decomposition(n)
            assert math.prod(parts) == n
            assert (len(parts) == 1) == (is_prime_power(n) is not None)
        rng = random.Random(11)
        for _ in range(2000):
            n = rng.randrange(20000, 10**6)
            parts = primary_decomposition(n)
            assert math.prod(parts) == n
            assert (len(parts) == 1) == (is_prime_power(n) is not None)

    def test_parts_are_pairwise_coprime(self):
        for n in (360, 2310, 720720, 999999):
            parts = primary_decomposition(n)
            for i, a in enumerate(parts):
                for b in parts[i + 1:]:
                    assert math.gcd(a, b) == 1


class TestSieves:
    def test_sieve_matches_is_prime(self):
        primes = set(sieve_primes(1000).tolist())
        for n in range(1001):
            assert (n in primes) == is_prime(n)

    def test_prime_powers_ascending_and_complete(self):
        got = list(iter_prime_powers(200))
        qs = [q for q, _, _ in got]
        assert qs == sorted(qs)
        assert qs == [n for n in range(2, 201) if is_prime_power(n)]
        for q, p, k in got:
            assert p**k == q and is_prime(p)
