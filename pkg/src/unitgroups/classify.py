"""Indecomposability of finitely generated abelian groups and of F_q^x.

A finitely generated abelian group is indecomposable exactly when it is
trivial, infinite cyclic, or cyclic of prime-power order.  For the unit
group of a finite field this pins down four families, recognized here by
direct congruence tests on q.  The verdict is deliberately computed without
calling ``is_prime_power(q - 1)`` so that the root-extraction oracle in
``primes`` stays an independent cross-check.
"""

from dataclasses import dataclass
from enum import Enum

from .primes import (is_prime, is_prime_power, _is_power_of_two,
                     iter_prime_powers, MAX_INPUT)


@dataclass(frozen=True)
class FgAbelianGroup:
    """Z^free_rank plus cyclic torsion in invariant-factor form.

    torsion is a divisibility chain d1 | d2 | ... with every di >= 2.
    """

    free_rank: int
    torsion: tuple = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free_rank must be >= 0")
        prev = None
        for d in self.torsion:
            if d < 2:
                raise ValueError("invariant factors must be >= 2")
            if prev is not None and d % prev != 0:
                raise ValueError("invariant factors must form a divisibility chain")
            prev = d

    @classmethod
    def trivial(cls):
        return cls(0, ())

    @classmethod
    def free(cls, rank):
        return cls(rank, ())

    @classmethod
    def cyclic(cls, n):
        if n < 1:
            raise ValueError("cyclic group order must be >= 1")
        return cls(0, ()) if n == 1 else cls(0, (n,))


def is_indecomposable_fg(group):
    """True iff the group is trivial, Z, or cyclic of prime-power order."""
    rank, torsion = group.free_rank, group.torsion
    if torsion == ():
        return rank <= 1
    if rank > 0 or len(torsion) > 1:
        return False
    return is_prime_power(torsion[0]) is not None


class FieldFamily(Enum):
    F2 = "F2"
    F9 = "F9"
    FERMAT_PRIME = "FermatPrime"
    MERSENNE_PLUS_ONE = "MersennePlusOne"


@dataclass(frozen=True)
class Classification:
    """Verdict for the multiplicative group of GF(q).

    Indecomposable verdicts carry the witnessing family; decomposable ones
    carry a pair (a, b) with a * b = q - 1, gcd(a, b) = 1 and a, b >= 2,
    splitting the cyclic group of order q - 1 into a proper direct sum.
    """

    q: int
    indecomposable: bool
    family: FieldFamily | None = None
    witness: tuple | None = None

    def __post_init__(self):
        if self.indecomposable:
            if self.family is None or self.witness is not None:
                raise ValueError("indecomposable verdicts carry a family only")
        else:
            if self.family is not None or self.witness is None:
                raise ValueError("decomposable verdicts carry a witness only")
            a, b = self.witness
            import math
            if a < 2 or b < 2 or a * b != self.q - 1 or math.gcd(a, b) != 1:
                raise ValueError("witness must split q - 1 into coprime parts >= 2")


def _smallest_prime_factor(m):
    if m % 2 == 0:
        return 2
    f = 3
    while f * f <= m:
        if m % f == 0:
            return f
        f += 2
    return m


def _decomposition_witness(q):
    # a = the full power of the smallest prime dividing q - 1, b = the rest.
    m = q - 1
    p0 = _smallest_prime_factor(m)
    a = p0
    while m % (a * p0) == 0:
        a *= p0
    return (a, m // a)


def classify_finite_field(q):
    """Classify GF(q)^x as indecomposable (with family) or decomposable.

    The indecomposable families are: GF(2); GF(9); GF(q) for q a Fermat
    prime; and GF(p + 1) for p a Mersenne prime (q is then a power of two).
    """
    if not isinstance(q, int) or q < 2 or q > MAX_INPUT:
        raise ValueError(f"expected an integer in [2, 2^63], got {q!r}")
    if is_prime_power(q) is None:
        raise ValueError(f"{q} is not a prime power")
    if q == 2:
        return Classification(q, True, family=FieldFamily.F2)
    if q == 9:
        return Classification(q, True, family=FieldFamily.F9)
    if _is_power_of_two(q - 1) and is_prime(q):
        return Classification(q, True, family=FieldFamily.FERMAT_PRIME)
    if _is_power_of_two(q) and is_prime(q - 1):
        return Classification(q, True, family=FieldFamily.MERSENNE_PLUS_ONE)
    return Classification(q, False, witness=_decomposition_witness(q))


@dataclass(frozen=True)
class ScanEntry:
    """One classify-scan row: a verdict plus the independent oracle's answer."""

    classification: Classification
    oracle_indecomposable: bool

    @property
    def agree(self):
        return self.classification.indecomposable == self.oracle_indecomposable


def oracle_indecomposable(q):
    """Independent verdict: GF(q)^x is cyclic of order q - 1, hence
    indecomposable iff q - 1 is 1 or a prime power (root-extraction test)."""
    return q == 2 or is_prime_power(q - 1) is not None


def scan_classifications(bound):
    """Yield a ScanEntry for every prime power q <= bound, ascending."""
    if not isinstance(bound, int) or bound < 2 or bound > 1 << 40:
        raise ValueError(f"bound must be an integer in [2, 2^40], got {bound!r}")
    for q, _p, _k in iter_prime_powers(bound):
        yield ScanEntry(classify_finite_field(q), oracle_indecomposable(q))


def scan_indecomposable(bound):
    """ScanEntry list for the fields with indecomposable unit group only."""
    return [e for e in scan_classifications(bound) if e.classification.indecomposable]
