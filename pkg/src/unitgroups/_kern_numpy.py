"""Pure-numpy fallback for the polynomial kernels in ``_kern_numba``.

Same contracts as the JIT backend: bit-packed uint64 words for GF(2) and
table-driven int64 vectors for small GF(q).  Inner loops run in Python
over vectorized slice operations, so this path is slower but has no
compiler dependency.
"""

import numpy as np

from ._bittables import SPREAD8_U16, COMPRESS8_U8

_U64 = np.uint64


def _shift_table(f):
    """All 64 left-shifts of packed f, one extra word for carry-out."""
    lf = f.shape[0]
    sh = np.zeros((64, lf + 1), dtype=np.uint64)
    sh[0, :lf] = f
    s = np.arange(1, 64, dtype=np.uint64)
    sh[1:, :lf] = f[None, :] << s[:, None]
    sh[1:, 1:] |= f[None, :] >> (np.uint64(64) - s)[:, None]
    return sh


def g2_mul(a, b):
    la = a.shape[0]
    lb = b.shape[0]
    out = np.zeros(la + lb, dtype=np.uint64)
    sh = _shift_table(b)
    for i in range(la):
        w = int(a[i])
        if w == 0:
            continue
        rows = []
        while w:
            s = (w & -w).bit_length() - 1
            rows.append(s)
            w &= w - 1
        if len(rows) == 1:
            out[i: i + lb + 1] ^= sh[rows[0]]
        else:
            out[i: i + lb + 1] ^= np.bitwise_xor.reduce(sh[rows], axis=0)
    return out


def g2_sqr(a):
    spread = SPREAD8_U16[a.view(np.uint8)]
    return np.ascontiguousarray(spread).view(np.dtype("<u8")).copy()


def g2_sqrt(a):
    nib = COMPRESS8_U8[a.view(np.uint8)]
    packed = nib[0::2] | (nib[1::2] << 4)
    la = a.shape[0]
    out_words = (la + 1) // 2
    buf = np.zeros(out_words * 8, dtype=np.uint8)
    buf[: packed.shape[0]] = packed
    return buf.view(np.dtype("<u8")).copy()


def _reduce_inplace(r, sh, hi_bit, df):
    width = sh.shape[1]
    for bit in range(hi_bit, df - 1, -1):
        if (int(r[bit >> 6]) >> (bit & 63)) & 1:
            off = bit - df
            owi = off >> 6
            r[owi: owi + width] ^= sh[off & 63]


def g2_rem(a, da, f, df):
    r = np.zeros(a.shape[0] + 1, dtype=np.uint64)
    r[: a.shape[0]] = a
    _reduce_inplace(r, _shift_table(f), da, df)
    return r[: (df + 63) >> 6]


def g2_divmod(a, da, f, df):
    r = np.zeros(a.shape[0] + 1, dtype=np.uint64)
    r[: a.shape[0]] = a
    quot = np.zeros(((da - df) >> 6) + 1, dtype=np.uint64)
    sh = _shift_table(f)
    width = sh.shape[1]
    for bit in range(da, df - 1, -1):
        if (int(r[bit >> 6]) >> (bit & 63)) & 1:
            off = bit - df
            quot[off >> 6] |= _U64(1) << _U64(off & 63)
            owi = off >> 6
            r[owi: owi + width] ^= sh[off & 63]
    return quot, r[: (df + 63) >> 6]


def _deg_words(r, max_word):
    for wi in range(max_word, -1, -1):
        w = int(r[wi])
        if w:
            return (wi << 6) + w.bit_length() - 1
    return -1


def g2_gcd(a, da, b, db):
    n = (max(da, db) >> 6) + 2
    u = np.zeros(n, dtype=np.uint64)
    u[: a.shape[0]] = a
    v = np.zeros(n, dtype=np.uint64)
    v[: b.shape[0]] = b
    du, dv = da, db
    if du < dv:
        u, v = v, u
        du, dv = dv, du
    while True:
        _reduce_inplace(u, _shift_table(v[: (dv >> 6) + 1]), du, dv)
        du = _deg_words(u, dv >> 6)
        if du < 0:
            return v[: (dv >> 6) + 1]
        u, v = v, u
        du, dv = dv, du


def fq_mul(a, b, mulf, addf, q):
    la = a.shape[0]
    lb = b.shape[0]
    out = np.zeros(la + lb - 1, dtype=np.int64)
    for i in range(la):
        ai = int(a[i])
        if ai == 0:
            continue
        prod = mulf[ai * q + b]
        seg = out[i: i + lb]
        seg[:] = addf[seg * q + prod]
    return out


def fq_divmod(a, b, mulf, subf, invt, q):
    la = a.shape[0]
    lb = b.shape[0]
    r = a.copy()
    quot = np.zeros(la - lb + 1, dtype=np.int64)
    binv = int(invt[b[lb - 1]])
    head = b[: lb - 1]
    for k in range(la - lb, -1, -1):
        t = int(r[k + lb - 1])
        if t != 0:
            c = int(mulf[t * q + binv])
            quot[k] = c
            if lb > 1:
                seg = r[k: k + lb - 1]
                seg[:] = subf[seg * q + mulf[c * q + head]]
            r[k + lb - 1] = 0
    return quot, r[: lb - 1]


def _trim_dense(arr):
    nz = np.flatnonzero(arr)
    return arr[: nz[-1] + 1] if nz.size else arr[:0]


def fq_gcd(a, b, mulf, subf, invt, q):
    u, v = a, b
    if u.shape[0] < v.shape[0]:
        u, v = v, u
    while v.shape[0]:
        _, r = fq_divmod(u, v, mulf, subf, invt, q)
        u, v = v, _trim_dense(r)
    g = u.copy()
    lead = int(g[-1])
    if lead != 1:
        g = mulf[int(invt[lead]) * q + g]
    return g
