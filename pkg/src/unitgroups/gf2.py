"""Bit-packed GF(2)[x] arithmetic.

A polynomial is a trimmed little-endian ``uint64`` array: bit ``i`` of
word ``j`` is the coefficient of ``x**(64*j + i)``, the top word is
nonzero, and the zero polynomial is the empty array.  The word-level
shift/XOR kernels behind these helpers come from :mod:`.kernels`, which
picks the JIT or pure-numpy backend.
"""

import numpy as np

from . import kernels

_EVEN_BITS = np.uint64(0x5555555555555555)


def trim(words):
    n = words.shape[0]
    while n > 0 and words[n - 1] == 0:
        n -= 1
    return words[:n]


def deg(a):
    """Degree; -1 for the zero polynomial."""
    n = a.shape[0]
    if n == 0:
        return -1
    return 64 * (n - 1) + int(a[n - 1]).bit_length() - 1


def zero():
    return np.empty(0, dtype=np.uint64)


def one():
    return np.ones(1, dtype=np.uint64)


def x():
    return np.array([2], dtype=np.uint64)


def pack(bits):
    """Packed form of an iterable of 0/1 coefficients (ascending degree)."""
    arr = np.asarray(bits, dtype=np.uint8)
    if arr.size == 0:
        return zero()
    nwords = (arr.size + 63) // 64
    buf = np.zeros(nwords * 8, dtype=np.uint8)
    buf[: (arr.size + 7) // 8] = np.packbits(arr, bitorder="little")
    return trim(buf.view(np.dtype("<u8")))


def unpack(a):
    """0/1 coefficients of a packed polynomial, ascending, trimmed."""
    d = deg(a)
    if d < 0:
        return np.empty(0, dtype=np.uint8)
    bits = np.unpackbits(a.view(np.uint8), bitorder="little")
    return bits[: d + 1]


def to_int(a):
    return int.from_bytes(a.tobytes(), "little")


def from_int(code):
    if code < 0:
        raise ValueError("polynomial code must be >= 0")
    if code == 0:
        return zero()
    nbytes = (code.bit_length() + 7) // 8
    nwords = (nbytes + 7) // 8
    return trim(np.frombuffer(code.to_bytes(nwords * 8, "little"), dtype=np.dtype("<u8")).copy())


def padd(a, b):
    if a.shape[0] < b.shape[0]:
        a, b = b, a
    out = a.copy()
    out[: b.shape[0]] ^= b
    return trim(out)


def pmul(a, b):
    if a.shape[0] == 0 or b.shape[0] == 0:
        return zero()
    return trim(kernels.g2_mul(a, b))


def psqr(a):
    if a.shape[0] == 0:
        return zero()
    return trim(kernels.g2_sqr(a))


def psqrt(a):
    """Square root of a polynomial whose exponents are all even."""
    if a.shape[0] == 0:
        return zero()
    return trim(kernels.g2_sqrt(a))


def pdivmod(a, f):
    df = deg(f)
    if df < 0:
        raise ZeroDivisionError("polynomial division by zero")
    da = deg(a)
    if df == 0:
        return a.copy(), zero()
    if da < df:
        return zero(), a.copy()
    q, r = kernels.g2_divmod(a, da, f, df)
    return trim(q), trim(r)


def prem(a, f):
    df = deg(f)
    if df < 0:
        raise ZeroDivisionError("polynomial division by zero")
    da = deg(a)
    if df == 0:
        return zero()
    if da < df:
        return a.copy()
    return trim(kernels.g2_rem(a, da, f, df))


def pquo(a, f):
    return pdivmod(a, f)[0]


def pgcd(a, b):
    da, db = deg(a), deg(b)
    if da < 0:
        return b.copy()
    if db < 0:
        return a.copy()
    return trim(kernels.g2_gcd(a, da, b, db))


def pmulmod(a, b, f):
    return prem(pmul(a, b), f)


def psqrmod(a, f):
    return prem(psqr(a), f)


def ppowmod(a, e, f):
    if e < 0:
        raise ValueError("negative exponent")
    result = prem(one(), f)
    base = prem(a, f)
    while e:
        if e & 1:
            result = pmulmod(result, base, f)
        base = psqrmod(base, f)
        e >>= 1
    return result


def pderiv(a):
    """Formal derivative: odd-position bits shift down one place."""
    if a.shape[0] == 0:
        return zero()
    shifted = a >> np.uint64(1)
    shifted[:-1] |= a[1:] << np.uint64(63)
    return trim(shifted & _EVEN_BITS)


def prandom_below(degree_bound, rng):
    """Random polynomial of degree < degree_bound (possibly zero)."""
    if degree_bound < 1:
        return zero()
    return from_int(rng.getrandbits(degree_bound))
