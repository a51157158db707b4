import random

from unitgroups.factor import factor_poly
from unitgroups.gf import field_make
from unitgroups.parsing import parse_poly
from unitgroups.poly import random_poly
from unitgroups.selfcheck import (CheckResult, oracle_factor, oracle_rank,
                                  run_all, sieve_irreducibles)

F2 = field_make(2)


class TestOracles:
    def test_sieve_matches_necklace_counts(self):
        sieve = sieve_irreducibles(F2, 6)
        assert [len(sieve[d]) for d in range(1, 7)] == [2, 1, 2, 3, 6, 9]

    def test_trial_division_agrees_with_main_route(self):
        rng = random.Random(90)
        sieve = sieve_irreducibles(F2, 10)
        for _ in range(40):
            f = random_poly(F2, rng.randrange(1, 11), rng, monic=True)
            assert oracle_factor(f, sieve) == factor_poly(f)

    def test_oracle_factor_frozen_case(self):
        unit, factors = oracle_factor(parse_poly(F2, "x^5+x+1"))
        assert unit.val == 1
        assert factors == ((parse_poly(F2, "x^2+x+1"), 1),
                           (parse_poly(F2, "x^3+x^2+1"), 1))

    def test_fraction_rank(self):
        assert oracle_rank([[1, 0], [0, 1], [1, 1]]) == 2
        assert oracle_rank([[2, 4], [1, 2]]) == 1
        assert oracle_rank([[0, 0]]) == 0


class TestRunAll:
    def test_quick_pass_and_shape(self):
        results = run_all(seed=0, quick=True)
        assert len(results) == 9
        assert all(isinstance(r, CheckResult) and r.passed for r in results)
        names = [r.name for r in results]
        assert names[0] == "classification-scan"
        assert len(set(names)) == 9

    def test_result_string_carries_verdict(self):
        r = CheckResult("demo", True, 3, "fine")
        assert str(r).startswith("[PASS]")
        r = CheckResult("demo", False, 3, "broken")
        assert str(r).startswith("[FAIL]")
