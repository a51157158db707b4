"""Oracle cross-checks: every fast routine against a slow independent one.

Each check pits the production implementation against an oracle that
shares no code with it (trial division instead of Cantor-Zassenhaus,
rational Gaussian elimination instead of fraction-free integer
elimination, Sylvester determinants instead of the subresultant chain).
The acceptance suite and the ``selftest`` CLI command both drive these.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .classify import scan_classifications
from .extension import ext_make, norm, random_ext_elem, resultant_y
from .factor import factor_poly, is_irreducible, product_of_factors
from .gf import FieldSpec, field_make
from .hahn import hs_probe, hs_section, random_series
from .ordered import DYADIC_GROUP, INT_GROUP, lex_group
from .perfect import (
    frobenius, frobenius_inv, pc_decompose, pc_recompose,
    random_dyadic_ratfunc,
)
from .poly import Poly, random_poly
from .ratfunc import (
    RatFunc, decompose, integer_rank, multiplicative_rank, random_ratfunc,
    recompose, valuation_at,
)
from .valuation import (
    ValuationProbe, check_valuation_axioms, padic_valuation, recombine,
    section_free, split_unit,
)

EXPECTED_FIELDS_1E6 = (2, 3, 4, 5, 8, 9, 17, 32, 128, 257,
                       8192, 65537, 131072, 524288)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    n_cases: int
    details: str

    def __str__(self):
        tag = "PASS" if self.passed else "FAIL"
        return f"[{tag}] {self.name}: {self.details} ({self.n_cases} cases)"


# ---- oracles ----

def sieve_irreducibles(spec: FieldSpec, max_degree: int):
    """Monic irreducibles up to max_degree by inductive trial division.

    A reducible monic polynomial of degree d has an irreducible factor
    of degree at most d//2, so each degree only needs the sieve output
    of the lower half.  No probabilistic machinery involved.
    """
    by_degree = {d: [] for d in range(1, max_degree + 1)}
    q = spec.q
    for d in range(1, max_degree + 1):
        lower = [f for dd in range(1, d // 2 + 1) for f in by_degree[dd]]
        for tail in range(q ** d):
            f = Poly.from_int_code(spec, tail + q ** d)
            if not any((f % g).is_zero() for g in lower):
                by_degree[d].append(f)
    return by_degree


def oracle_factor(f: Poly, sieve=None):
    """Factor by repeated trial division against the irreducible sieve.

    Returns the same (unit, sorted factor multiset) shape as
    ``factor_poly`` but computes it with none of the same machinery.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    spec = f.spec
    unit = f.lc
    g = f.monic()
    if sieve is None:
        sieve = sieve_irreducibles(spec, max(1, g.degree))
    counts = {}
    d = 1
    while g.degree > 0:
        if d > g.degree // 2:
            # every irreducible of degree < d is divided out, and a proper
            # factorization would need a divisor of degree <= deg/2 < d
            counts[g] = counts.get(g, 0) + 1
            break
        for cand in sieve[d]:
            while g.degree >= d:
                quo, rem = divmod(g, cand)
                if not rem.is_zero():
                    break
                counts[cand] = counts.get(cand, 0) + 1
                g = quo
        d += 1
    factors = tuple(sorted(counts.items(),
                           key=lambda fe: (fe[0].degree, fe[0].int_code)))
    return unit, factors


def oracle_rank(rows) -> int:
    """Rank over Q by plain fraction Gaussian elimination."""
    mat = [[Fraction(v) for v in row] for row in rows]
    rank = 0
    col = 0
    ncols = len(mat[0]) if mat else 0
    while rank < len(mat) and col < ncols:
        piv = None
        for r in range(rank, len(mat)):
            if mat[r][col]:
                piv = r
                break
        if piv is None:
            col += 1
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [v * inv for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                fac = mat[r][col]
                mat[r] = [a - fac * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
        col += 1
    return rank


def oracle_resultant(a, b, spec: FieldSpec, var: str) -> Poly:
    """Sylvester-matrix determinant by cofactor expansion (tiny inputs)."""
    a = [c for c in a]
    b = [c for c in b]
    while a and a[-1].is_zero():
        a.pop()
    while b and b[-1].is_zero():
        b.pop()
    if not a or not b:
        return Poly.zero(spec, var)
    da, db = len(a) - 1, len(b) - 1
    n = da + db
    if n == 0:
        return Poly.one(spec, var)
    rows = []
    for i in range(db):
        row = [Poly.zero(spec, var)] * n
        for j, cj in enumerate(reversed(a)):
            row[i + j] = cj
        rows.append(row)
    for i in range(da):
        row = [Poly.zero(spec, var)] * n
        for j, cj in enumerate(reversed(b)):
            row[i + j] = cj
        rows.append(row)

    def det(mat):
        k = len(mat)
        if k == 1:
            return mat[0][0]
        total = Poly.zero(spec, var)
        for i in range(k):
            piv = mat[i][0]
            if piv.is_zero():
                continue
            minor = [r[1:] for j, r in enumerate(mat) if j != i]
            term = piv * det(minor)
            total = total + term if i % 2 == 0 else total - term
        return total

    return det(rows)


# ---- valuation probes (criterion inputs) ----

def padic_probe(p: int) -> ValuationProbe:
    primes = (2, 3, 5, 7, 11)

    def sample(rng):
        num = rng.choice((1, -1))
        den = 1
        for q in primes:
            e = rng.randint(-3, 3)
            if e >= 0:
                num *= q ** e
            else:
                den *= q ** (-e)
        return Fraction(num, den)

    return ValuationProbe(
        name=f"padic-{p}", group=INT_GROUP,
        value=lambda x: INT_GROUP.make(padic_valuation(x, p)),
        sample=sample)


def ratfunc_probe(spec: FieldSpec, modulus: Poly) -> ValuationProbe:
    def sample(rng):
        return random_ratfunc(spec, rng.randint(0, 6), rng)

    return ValuationProbe(
        name=f"ratfunc-{str(modulus).replace(' ', '')}", group=INT_GROUP,
        value=lambda q: INT_GROUP.make(valuation_at(q, modulus)),
        sample=sample)


def standard_probes():
    f2 = field_make(2)
    probes = [padic_probe(p) for p in (2, 3, 5)]
    for coeffs in ((0, 1), (1, 1), (1, 1, 1)):
        probes.append(ratfunc_probe(f2, Poly.from_coeffs(f2, coeffs)))
    for group in (INT_GROUP, lex_group(2), DYADIC_GROUP):
        probes.append(hs_probe(f2, group))
    return probes


# ---- one check per acceptance criterion ----

def check_classification(bound: int = 10 ** 6) -> CheckResult:
    hits = []
    disagreements = 0
    count = 0
    for entry in scan_classifications(bound):
        count += 1
        if not entry.agree:
            disagreements += 1
        if entry.classification.indecomposable:
            hits.append(entry.classification.q)
    expected = tuple(q for q in EXPECTED_FIELDS_1E6 if q <= bound)
    exact = tuple(hits) == expected
    passed = exact and disagreements == 0
    details = (f"{len(hits)} indecomposable of {count} prime powers, "
               f"{disagreements} oracle disagreements")
    if not exact:
        details += f"; got {hits}, expected {list(expected)}"
    return CheckResult("classification-scan", passed, count, details)


def check_decompose(per_field: int = 1000, pairs: int = 500,
                    seed: int = 0) -> CheckResult:
    rng = random.Random(seed)
    fields = (field_make(2), field_make(3), field_make(3, 2))
    bad = 0
    cases = 0
    for spec in fields:
        for _ in range(per_field):
            q = random_ratfunc(spec, 30, rng)
            cases += 1
            if recompose(decompose(q)) != q:
                bad += 1
        for _ in range(pairs):
            q1 = random_ratfunc(spec, 12, rng)
            q2 = random_ratfunc(spec, 12, rng)
            cases += 1
            if decompose(q1 * q2) != decompose(q1).combine(decompose(q2)):
                bad += 1
    return CheckResult(
        "unit-decomposition", bad == 0, cases,
        f"{bad} failures over {[str(s) for s in fields]}")


def check_factor_exhaustive(max_degree: int = 12) -> CheckResult:
    spec = field_make(2)
    sieve = sieve_irreducibles(spec, max_degree)
    bad = 0
    cases = 0
    for d in range(1, max_degree + 1):
        for tail in range(2 ** d):
            f = Poly.from_int_code(spec, tail + 2 ** d)
            cases += 1
            unit, factors = factor_poly(f)
            o_unit, o_factors = oracle_factor(f, sieve)
            ok = (unit == o_unit and factors == o_factors
                  and product_of_factors(unit, factors) == f
                  and all(is_irreducible(g) for g, _ in factors))
            if not ok:
                bad += 1
    return CheckResult(
        "factor-exhaustive-gf2", bad == 0, cases,
        f"{bad} disagreements with trial-division oracle, degrees 1..{max_degree}")


def check_axioms(trials: int = 1000, seed: int = 0) -> CheckResult:
    failures = []
    probes = standard_probes()
    for probe in probes:
        outcome = check_valuation_axioms(probe, trials, seed)
        if not outcome.passed:
            failures.append(f"{probe.name}: {outcome}")
    return CheckResult(
        "valuation-axioms", not failures, trials * len(probes),
        "; ".join(failures) if failures else
        f"{len(probes)} probes x {trials} samples, zero violations")


def _split_fixtures():
    f2 = field_make(2)
    f3 = field_make(3)
    x2 = Poly.x(f2)
    x3p1 = Poly.from_coeffs(f3, (1, 1))

    def v3(r):
        return INT_GROUP.make(padic_valuation(r, 3))

    def vx(q):
        return INT_GROUP.make(valuation_at(q, x2))

    def vx1(q):
        return INT_GROUP.make(valuation_at(q, x3p1))

    def sample_q(rng):
        num = rng.choice((1, -1)) * rng.randint(1, 400)
        return Fraction(num, rng.randint(1, 400))

    def sample_f2(rng):
        return random_ratfunc(f2, rng.randint(0, 8), rng)

    def sample_f3(rng):
        return random_ratfunc(f3, rng.randint(0, 8), rng)

    return (
        ("Q-at-3", v3, Fraction(3), sample_q),
        ("F2(x)-at-x", vx, RatFunc.from_poly(x2), sample_f2),
        ("F3(x)-at-x+1", vx1, RatFunc.from_poly(x3p1), sample_f3),
    )


def check_split(samples: int = 500, section_pairs: int = 200,
                seed: int = 0) -> CheckResult:
    rng = random.Random(seed)
    bad = 0
    cases = 0
    for name, val, image, sampler in _split_fixtures():
        sec = section_free(INT_GROUP, INT_GROUP.basis(), (image,), val)
        for _ in range(samples):
            u = sampler(rng)
            v = sampler(rng)
            cases += 1
            gu, wu = split_unit(u, val, sec)
            gv, wv = split_unit(v, val, sec)
            guv, wuv = split_unit(u * v, val, sec)
            ok = (recombine(gu, wu, sec) == u
                  and guv == gu + gv
                  and wuv == wu * wv
                  and val(wu).is_zero())
            if not ok:
                bad += 1

    # Hahn side: unit_split plus the homomorphic section
    f2, f5 = field_make(2), field_make(5)
    for spec, group in ((f2, INT_GROUP), (f5, INT_GROUP),
                        (f2, lex_group(2)), (f2, DYADIC_GROUP)):
        for _ in range(samples):
            s = random_series(spec, group, rng)
            cases += 1
            g, w = s.unit_split()
            ok = (w.valuation().is_zero()
                  and w.shift(g) == s
                  and hs_section(spec, group, g) * w == s)
            if not ok:
                bad += 1
        probe = hs_probe(spec, group)
        for _ in range(section_pairs):
            s1 = random_series(spec, group, rng, max_terms=3)
            s2 = random_series(spec, group, rng, max_terms=3)
            g1, g2 = s1.valuation(), s2.valuation()
            cases += 1
            lhs = hs_section(spec, group, g1) * hs_section(spec, group, g2)
            if lhs != hs_section(spec, group, g1 + g2):
                bad += 1
            if probe.value(s1 * s2) != g1 + g2:
                bad += 1
    return CheckResult("valuation-splitting", bad == 0, cases,
                       f"{bad} failures across 3 classic + 4 series fields")


def check_perfect_closure(roundtrips: int = 200, frob_pairs: int = 300,
                          seed: int = 0) -> CheckResult:
    rng = random.Random(seed)
    bad = 0
    for _ in range(roundtrips):
        q = random_dyadic_ratfunc(rng, max_level=3)
        if pc_recompose(pc_decompose(q)) != q:
            bad += 1
    for _ in range(frob_pairs):
        q = random_dyadic_ratfunc(rng, max_level=3)
        if frobenius(frobenius_inv(q)) != q or frobenius_inv(frobenius(q)) != q:
            bad += 1
    return CheckResult("perfect-closure", bad == 0, roundtrips + frob_pairs,
                       f"{bad} round-trip or Frobenius-pair failures")


def check_norm(pairs: int = 300, constants: int = 100,
               seed: int = 0) -> CheckResult:
    rng = random.Random(seed)
    f2 = field_make(2)
    t = Poly.x(f2, "t")
    exts = (ext_make(f2, (t, 1, 1)),            # y^2 + y + t
            ext_make(f2, (t, 1, 0, 1)))         # y^3 + y + t
    bad = 0
    cases = 0
    for ext in exts:
        d = ext.degree
        for _ in range(pairs):
            u = random_ext_elem(ext, rng, coeff_degree=2)
            v = random_ext_elem(ext, rng, coeff_degree=2)
            cases += 1
            if norm(u * v) != norm(u) * norm(v):
                bad += 1
        for _ in range(constants):
            c = random_ratfunc(f2, 3, rng, "t")
            cases += 1
            if norm(ext.from_base(c)) != c ** d:
                bad += 1
    # dual route: the subresultant chain against Sylvester determinants
    for _ in range(60):
        da, db = rng.randint(0, 3), rng.randint(0, 3)
        a = [random_poly(f2, rng.randint(0, 2), rng, var="t") for _ in range(da + 1)]
        b = [random_poly(f2, rng.randint(0, 2), rng, var="t") for _ in range(db + 1)]
        cases += 1
        if resultant_y(a, b, f2, "t") != oracle_resultant(a, b, f2, "t"):
            bad += 1
    return CheckResult("extension-norm", bad == 0, cases,
                       f"{bad} failures (multiplicativity, power law, resultant oracle)")


def check_rank(matrices: int = 100, seed: int = 0) -> CheckResult:
    rng = random.Random(seed)
    f2 = field_make(2)
    sieve = sieve_irreducibles(f2, 6)
    primes = [g for d in sorted(sieve) for g in sieve[d]][:20]
    bad = 0
    cases = 0
    for _ in range(matrices):
        nrows = rng.randint(1, 10)
        ncols = rng.randint(1, 20)
        mat = [[rng.randint(-5, 5) for _ in range(ncols)]
               for _ in range(nrows)]
        want = oracle_rank(mat)
        cases += 1
        if integer_rank(mat) != want:
            bad += 1
            continue
        elems = []
        for row in mat:
            num = Poly.one(f2)
            den = Poly.one(f2)
            for p, e in zip(primes, row):
                if e > 0:
                    num = num * p ** e
                elif e < 0:
                    den = den * p ** (-e)
            elems.append(RatFunc(num, den))
        if multiplicative_rank(elems) != want:
            bad += 1
    return CheckResult("multiplicative-rank", bad == 0, cases,
                       f"{bad} disagreements with rational Gauss oracle")


def check_performance(seed: int = 0) -> CheckResult:
    spec = field_make(2)
    rng = random.Random(seed)
    # warm the jitted kernels so compile time is not measured
    factor_poly(random_poly(spec, 32, rng, monic=True))
    a = random_poly(spec, 10 ** 4, rng)
    b = random_poly(spec, 10 ** 4, rng)
    _ = a * b

    f = random_poly(spec, 512, rng, monic=True)
    t0 = time.perf_counter()
    unit, factors = factor_poly(f)
    t_factor = time.perf_counter() - t0
    ok_factor = product_of_factors(unit, factors) == f

    t0 = time.perf_counter()
    _ = a * b
    t_mul = time.perf_counter() - t0

    # details carry no raw timings so reports are byte-identical per seed
    passed = ok_factor and t_factor < 1.0 and t_mul < 0.5
    verdict = ("within" if t_factor < 1.0 else "OVER",
               "within" if t_mul < 0.5 else "OVER")
    return CheckResult(
        "performance", passed, 2,
        f"deg-512 factor {verdict[0]} 1 s, deg-10^4 product {verdict[1]} 0.5 s")


def run_all(seed: int = 0, quick: bool = False):
    """Every criterion check; ``quick`` shrinks trial counts, not coverage."""
    if quick:
        return [
            check_classification(10 ** 4),
            check_decompose(60, 30, seed),
            check_factor_exhaustive(7),
            check_axioms(60, seed),
            check_split(40, 20, seed),
            check_perfect_closure(30, 40, seed),
            check_norm(25, 10, seed),
            check_rank(12, seed),
            check_performance(seed),
        ]
    return [
        check_classification(),
        check_decompose(seed=seed),
        check_factor_exhaustive(),
        check_axioms(seed=seed),
        check_split(seed=seed),
        check_perfect_closure(seed=seed),
        check_norm(seed=seed),
        check_rank(seed=seed),
        check_performance(seed),
    ]
