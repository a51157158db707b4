"""Exact integer primitives for 64-bit inputs.

Primality is decided by a deterministic Miller-Rabin witness set that is
exhaustive for all integers below 3.3 * 10^24, which covers the supported
range (n <= 2^63).  Factoring combines trial division by small primes with
Brent's cycle variant of Pollard rho; all arithmetic is exact.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

MAX_INPUT = 1 << 63

# Witnesses proving primality for every n < 3,317,044,064,679,887,385,961,981.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                 59, 61, 67, 71, 73, 79, 83, 89, 97)


def is_prime(n):
    """Deterministic primality test for 0 <= n <= 2^63."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n, rng_state=1):
    """One Brent-Pollard rho round; n must be composite, odd, no small factors."""
    c = rng_state
    while True:
        y, m = 2, 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        c += 1  # deterministic restart with a new polynomial


def _factor_into(n, out):
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_brent(n)
    _factor_into(d, out)
    _factor_into(n // d, out)


@dataclass(frozen=True)
class FactoredInteger:
    """A positive integer with its full prime factorization.

    factors is sorted by prime and every exponent is >= 1; the empty tuple
    encodes n = 1.
    """

    value: int
    factors: tuple

    def __post_init__(self):
        prod = 1
        last = 1
        for p, e in self.factors:
            if e < 1 or p <= last or not is_prime(p):
                raise ValueError("invalid factorization")
            last = p
            prod *= p ** e
        if prod != self.value:
            raise ValueError("factorization does not multiply back to value")


def factor_integer(n):
    """Factor 1 <= n <= 2^63 into a FactoredInteger."""
    if not isinstance(n, int) or n < 1 or n > MAX_INPUT:
        raise ValueError(f"expected an integer in [1, 2^63], got {n!r}")
    found = {}
    m = n
    for p in _SMALL_PRIMES:
        while m % p == 0:
            found[p] = found.get(p, 0) + 1
            m //= p
    _factor_into(m, found)
    return FactoredInteger(n, tuple(sorted(found.items())))


def iroot(n, k):
    """Largest r with r^k <= n, for n >= 0, k >= 1."""
    if n < 0 or k < 1:
        raise ValueError("iroot needs n >= 0, k >= 1")
    if n < 2 or k == 1:
        return n
    if k == 2:
        return math.isqrt(n)
    r = int(round(n ** (1.0 / k)))
    while r > 1 and r ** k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


def is_prime_power(n):
    """Return (p, k) with n = p^k and p prime, or None.

    n = 1 returns None: the empty power is not counted.  This routine works
    by direct k-th root extraction, so it is usable as an independent check
    against any factorization-based path.
    """
    if not isinstance(n, int) or n < 1 or n > MAX_INPUT:
        raise ValueError(f"expected an integer in [1, 2^63], got {n!r}")
    if n == 1:
        return None
    for k in range(n.bit_length() - 1, 0, -1):
        r = iroot(n, k)
        if r ** k == n and is_prime(r):
            return (r, k)
    return None


class PrimeKind(Enum):
    FERMAT = "fermat"
    MERSENNE = "mersenne"


def _is_power_of_two(n):
    return n >= 1 and n & (n - 1) == 0


def special_prime_kind(n):
    """Flags for primes adjacent to a power of two.

    Fermat: n prime and n - 1 = 2^k with k >= 1 (3, 5, 17, 257, ...).
    Mersenne: n prime and n + 1 = 2^k (3, 7, 31, 127, ...).
    n = 3 carries both flags; 2 carries neither.
    """
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"expected an integer >= 2, got {n!r}")
    flags = set()
    if is_prime(n):
        if n >= 3 and _is_power_of_two(n - 1):
            flags.add(PrimeKind.FERMAT)
        if _is_power_of_two(n + 1):
            flags.add(PrimeKind.MERSENNE)
    return frozenset(flags)


def primary_decomposition(n):
    """Prime-power parts of n in ascending prime order: 360 -> [8, 9, 5]."""
    fi = n if isinstance(n, FactoredInteger) else factor_integer(n)
    return [p ** e for p, e in fi.factors]


def sieve_primes(bound):
    """All primes <= bound as a numpy int64 array (simple sieve)."""
    if bound < 2:
        return np.empty(0, dtype=np.int64)
    mask = np.ones(bound + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(bound) + 1):
        if mask[p]:
            mask[p * p:: p] = False
    return np.flatnonzero(mask).astype(np.int64)


def iter_primes(bound, segment=1 << 22):
    """Yield primes <= bound in order, sieving in fixed-size segments."""
    if bound < 2:
        return
    root = math.isqrt(bound)
    base = sieve_primes(root)
    yield from (int(p) for p in base)
    lo = root + 1
    base_list = base.tolist()
    while lo <= bound:
        hi = min(lo + segment - 1, bound)
        mask = np.ones(hi - lo + 1, dtype=bool)
        for p in base_list:
            start = ((lo + p - 1) // p) * p
            if start <= hi:
                mask[start - lo:: p] = False
        for off in np.flatnonzero(mask):
            yield lo + int(off)
        lo = hi + 1


def iter_prime_powers(bound):
    """Yield (q, p, k) for every prime power q = p^k <= bound, ascending in q."""
    if bound < 2:
        return
    heap = []
    import heapq
    root = math.isqrt(bound)
    for p in sieve_primes(root).tolist():
        heapq.heappush(heap, (p, p, 1))
    gen = iter_primes(bound)
    nxt = next(gen, None)
    while nxt is not None and nxt <= root:
        nxt = next(gen, None)
    while heap or nxt is not None:
        if heap and (nxt is None or heap[0][0] < nxt):
            q, p, k = heapq.heappop(heap)
            yield q, p, k
            if q * p <= bound:
                heapq.heappush(heap, (q * p, p, k + 1))
        elif nxt is not None:
            yield nxt, nxt, 1
            nxt = next(gen, None)
