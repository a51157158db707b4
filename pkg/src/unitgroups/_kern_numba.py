"""JIT-compiled polynomial kernels.

Two families share this module: ``g2_*`` operates on GF(2) polynomials
bit-packed into little-endian uint64 words (64 coefficients per word,
word-level shift/XOR arithmetic), and ``fq_*`` operates on dense int64
coefficient vectors over a small field GF(q) whose arithmetic is supplied
as flattened q*q lookup tables.

Inputs are trimmed (no trailing zero words / coefficients, top entry
nonzero); degree arguments are the true degrees.  Outputs may carry
trailing zeros; callers trim.
"""

import numpy as np
from numba import njit

from ._bittables import SPREAD8, COMPRESS8

_U0 = np.uint64(0)
_U1 = np.uint64(1)


@njit(cache=True)
def g2_mul(a, b):
    la = a.shape[0]
    lb = b.shape[0]
    out = np.zeros(la + lb, np.uint64)
    for i in range(la):
        w = a[i]
        if w == _U0:
            continue
        for s in range(64):
            if (w >> np.uint64(s)) & _U1:
                if s == 0:
                    for j in range(lb):
                        out[i + j] ^= b[j]
                else:
                    su = np.uint64(s)
                    inv = np.uint64(64 - s)
                    for j in range(lb):
                        out[i + j] ^= b[j] << su
                        out[i + j + 1] ^= b[j] >> inv
    return out


@njit(cache=True)
def g2_sqr(a):
    la = a.shape[0]
    out = np.zeros(2 * la, np.uint64)
    for i in range(la):
        w = a[i]
        lo = _U0
        hi = _U0
        for k in range(4):
            lo |= SPREAD8[(w >> np.uint64(8 * k)) & np.uint64(0xFF)] << np.uint64(16 * k)
            hi |= SPREAD8[(w >> np.uint64(8 * k + 32)) & np.uint64(0xFF)] << np.uint64(16 * k)
        out[2 * i] = lo
        out[2 * i + 1] = hi
    return out


@njit(cache=True)
def g2_sqrt(a):
    # even-position bit compress; exponents of a must all be even
    la = a.shape[0]
    out = np.zeros((la + 1) // 2, np.uint64)
    for i in range(la):
        w = a[i]
        half = _U0
        for k in range(8):
            half |= COMPRESS8[(w >> np.uint64(8 * k)) & np.uint64(0xFF)] << np.uint64(4 * k)
        out[i >> 1] |= half << np.uint64(32 * (i & 1))
    return out


@njit(cache=True)
def _g2_reduce_inplace(r, f, hi_bit, df):
    lf = f.shape[0]
    for bit in range(hi_bit, df - 1, -1):
        if (r[bit >> 6] >> np.uint64(bit & 63)) & _U1:
            off = bit - df
            owi = off >> 6
            osh = off & 63
            if osh == 0:
                for j in range(lf):
                    r[owi + j] ^= f[j]
            else:
                osu = np.uint64(osh)
                inv = np.uint64(64 - osh)
                for j in range(lf):
                    r[owi + j] ^= f[j] << osu
                    r[owi + j + 1] ^= f[j] >> inv


@njit(cache=True)
def g2_rem(a, da, f, df):
    r = np.zeros(a.shape[0] + 1, np.uint64)
    r[: a.shape[0]] = a
    _g2_reduce_inplace(r, f, da, df)
    return r[: (df + 63) >> 6]


@njit(cache=True)
def g2_divmod(a, da, f, df):
    r = np.zeros(a.shape[0] + 1, np.uint64)
    r[: a.shape[0]] = a
    lf = f.shape[0]
    quot = np.zeros(((da - df) >> 6) + 1, np.uint64)
    for bit in range(da, df - 1, -1):
        if (r[bit >> 6] >> np.uint64(bit & 63)) & _U1:
            off = bit - df
            quot[off >> 6] |= _U1 << np.uint64(off & 63)
            owi = off >> 6
            osh = off & 63
            if osh == 0:
                for j in range(lf):
                    r[owi + j] ^= f[j]
            else:
                osu = np.uint64(osh)
                inv = np.uint64(64 - osh)
                for j in range(lf):
                    r[owi + j] ^= f[j] << osu
                    r[owi + j + 1] ^= f[j] >> inv
    return quot, r[: (df + 63) >> 6]


@njit(cache=True)
def g2_gcd(a, da, b, db):
    n = (max(da, db) >> 6) + 2
    u = np.zeros(n, np.uint64)
    u[: a.shape[0]] = a
    v = np.zeros(n, np.uint64)
    v[: b.shape[0]] = b
    du = da
    dv = db
    if du < dv:
        u, v = v, u
        du, dv = dv, du
    while True:
        _g2_reduce_inplace(u, v[: (dv >> 6) + 1], du, dv)
        du = -1
        for wi in range(dv >> 6, -1, -1):
            if u[wi] != _U0:
                w = u[wi]
                bl = 0
                while w != _U0:
                    w >>= _U1
                    bl += 1
                du = (wi << 6) + bl - 1
                break
        if du < 0:
            return v[: (dv >> 6) + 1]
        u, v = v, u
        du, dv = dv, du


@njit(cache=True)
def fq_mul(a, b, mulf, addf, q):
    la = a.shape[0]
    lb = b.shape[0]
    out = np.zeros(la + lb - 1, np.int64)
    for i in range(la):
        ai = a[i]
        if ai == 0:
            continue
        base = ai * q
        for j in range(lb):
            bj = b[j]
            if bj != 0:
                out[i + j] = addf[out[i + j] * q + mulf[base + bj]]
    return out


@njit(cache=True)
def fq_divmod(a, b, mulf, subf, invt, q):
    la = a.shape[0]
    lb = b.shape[0]
    r = a.copy()
    quot = np.zeros(la - lb + 1, np.int64)
    binv = invt[b[lb - 1]]
    for k in range(la - lb, -1, -1):
        t = r[k + lb - 1]
        if t != 0:
            c = mulf[t * q + binv]
            quot[k] = c
            cq = c * q
            for j in range(lb - 1):
                bj = b[j]
                if bj != 0:
                    r[k + j] = subf[r[k + j] * q + mulf[cq + bj]]
            r[k + lb - 1] = 0
    return quot, r[: lb - 1]


@njit(cache=True)
def fq_gcd(a, b, mulf, subf, invt, q):
    u = a.copy()
    v = b.copy()
    du = u.shape[0] - 1
    dv = v.shape[0] - 1
    if du < dv:
        u, v = v, u
        du, dv = dv, du
    while True:
        binv = invt[v[dv]]
        for k in range(du - dv, -1, -1):
            t = u[k + dv]
            if t != 0:
                c = mulf[t * q + binv]
                cq = c * q
                for j in range(dv):
                    bj = v[j]
                    if bj != 0:
                        u[k + j] = subf[u[k + j] * q + mulf[cq + bj]]
                u[k + dv] = 0
        du = -1
        for i in range(dv - 1, -1, -1):
            if u[i] != 0:
                du = i
                break
        if du < 0:
            g = v[: dv + 1].copy()
            lead = g[dv]
            if lead != 1:
                li = invt[lead]
                for i in range(dv + 1):
                    if g[i] != 0:
                        g[i] = mulf[g[i] * q + li]
            return g
        u, v = v, u
        du, dv = dv, du
