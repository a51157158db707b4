"""Internal polynomial-arithmetic engines.

The factorization and irreducibility algorithms are written once against
a small duck-typed interface; three engines implement it:

* ``Gf2Engine`` - bit-packed uint64 words through the kernel backend;
* ``DenseEngine`` - int64 coefficient vectors with table-driven kernels,
  for 2 < q <= 512;
* ``PyEngine`` - plain Python lists with scalar field ops, any q.

Engine representations are trimmed (no trailing zeros); the zero
polynomial is the empty vector.  All methods return fresh values.
"""

import functools

import numpy as np

from . import gf2, kernels


class Gf2Engine:
    def __init__(self, spec):
        self.spec = spec
        self.p = 2
        self.q = 2
        self.n = 1

    def from_coeffs(self, coeffs):
        return gf2.pack(coeffs)

    def to_coeffs(self, rep):
        return tuple(int(b) for b in gf2.unpack(rep))

    def deg(self, a):
        return gf2.deg(a)

    def is_zero(self, a):
        return a.shape[0] == 0

    def is_one(self, a):
        return a.shape[0] == 1 and a[0] == 1

    def equal(self, a, b):
        return np.array_equal(a, b)

    def one(self):
        return gf2.one()

    def x(self):
        return gf2.x()

    def add(self, a, b):
        return gf2.padd(a, b)

    sub = add

    def sub_one(self, a):
        return gf2.padd(a, gf2.one())

    def mul(self, a, b):
        return gf2.pmul(a, b)

    def sqr(self, a):
        return gf2.psqr(a)

    def divmod(self, a, b):
        return gf2.pdivmod(a, b)

    def quo(self, a, b):
        return gf2.pquo(a, b)

    def rem(self, a, b):
        return gf2.prem(a, b)

    def gcd(self, a, b):
        return gf2.pgcd(a, b)

    def monic(self, a):
        return 1, a

    def powmod(self, a, e, f):
        return gf2.ppowmod(a, e, f)

    def powmod_q(self, a, f):
        return gf2.psqrmod(a, f)

    def pth_root_poly(self, a):
        return gf2.psqrt(a)

    def derivative(self, a):
        return gf2.pderiv(a)

    def random_below(self, degree_bound, rng):
        return gf2.prandom_below(degree_bound, rng)


class DenseEngine:
    def __init__(self, spec):
        self.spec = spec
        self.p = spec.p
        self.q = spec.q
        self.n = spec.n
        t = spec.tables()
        self._mulf = t["mul"]
        self._addf = t["add"]
        self._subf = t["sub"]
        self._inv = t["inv"]
        self._pth = t["pthroot"]

    def from_coeffs(self, coeffs):
        return self._trim(np.fromiter(coeffs, np.int64, len(coeffs)))

    def to_coeffs(self, rep):
        return tuple(int(v) for v in rep)

    @staticmethod
    def _trim(arr):
        n = arr.shape[0]
        while n > 0 and arr[n - 1] == 0:
            n -= 1
        return arr[:n]

    def deg(self, a):
        return a.shape[0] - 1

    def is_zero(self, a):
        return a.shape[0] == 0

    def is_one(self, a):
        return a.shape[0] == 1 and a[0] == 1

    def equal(self, a, b):
        return np.array_equal(a, b)

    def one(self):
        return np.ones(1, dtype=np.int64)

    def x(self):
        return np.array([0, 1], dtype=np.int64)

    def add(self, a, b):
        if a.shape[0] < b.shape[0]:
            a, b = b, a
        out = a.copy()
        if b.shape[0]:
            seg = out[: b.shape[0]]
            seg[:] = self._addf[seg * self.q + b]
        return self._trim(out)

    def sub(self, a, b):
        la, lb = a.shape[0], b.shape[0]
        n = max(la, lb)
        out = np.zeros(n, dtype=np.int64)
        out[:la] = a
        if lb:
            seg = out[:lb]
            seg[:] = self._subf[seg * self.q + b]
        return self._trim(out)

    def sub_one(self, a):
        return self.sub(a, self.one())

    def mul(self, a, b):
        if a.shape[0] == 0 or b.shape[0] == 0:
            return a[:0]
        return kernels.fq_mul(a, b, self._mulf, self._addf, self.q)

    def sqr(self, a):
        return self.mul(a, a)

    def divmod(self, a, b):
        if b.shape[0] == 0:
            raise ZeroDivisionError("polynomial division by zero")
        if a.shape[0] < b.shape[0]:
            return a[:0], a.copy()
        quot, r = kernels.fq_divmod(a, b, self._mulf, self._subf, self._inv, self.q)
        return quot, self._trim(r)

    def quo(self, a, b):
        return self.divmod(a, b)[0]

    def rem(self, a, b):
        return self.divmod(a, b)[1]

    def gcd(self, a, b):
        if a.shape[0] == 0:
            return self.monic(b)[1] if b.shape[0] else b
        if b.shape[0] == 0:
            return self.monic(a)[1]
        return self._trim(kernels.fq_gcd(a, b, self._mulf, self._subf, self._inv, self.q))

    def monic(self, a):
        unit = int(a[-1])
        if unit == 1:
            return 1, a
        li = int(self._inv[unit])
        return unit, self._mulf[li * self.q + a]

    def powmod(self, a, e, f):
        result = self.rem(self.one(), f)
        base = self.rem(a, f)
        while e:
            if e & 1:
                result = self.rem(self.mul(result, base), f)
            base = self.rem(self.sqr(base), f)
            e >>= 1
        return result

    def powmod_q(self, a, f):
        return self.powmod(a, self.q, f)

    def pth_root_poly(self, a):
        strided = a[:: self.p].copy()
        if self.n > 1 and strided.shape[0]:
            strided = self._pth[strided]
        return self._trim(strided)

    def derivative(self, a):
        if a.shape[0] < 2:
            return a[:0]
        scal = (np.arange(1, a.shape[0], dtype=np.int64) % self.p)
        out = self._mulf[a[1:] * self.q + scal]
        return self._trim(out)

    def random_below(self, degree_bound, rng):
        vals = [rng.randrange(self.q) for _ in range(degree_bound)]
        return self.from_coeffs(vals)


class PyEngine:
    """Correctness fallback for q > 512; plain lists, scalar table-free ops."""

    def __init__(self, spec):
        self.spec = spec
        self.p = spec.p
        self.q = spec.q
        self.n = spec.n

    def from_coeffs(self, coeffs):
        return self._trim(list(coeffs))

    def to_coeffs(self, rep):
        return tuple(rep)

    @staticmethod
    def _trim(a):
        while a and a[-1] == 0:
            a.pop()
        return a

    def deg(self, a):
        return len(a) - 1

    def is_zero(self, a):
        return not a

    def is_one(self, a):
        return len(a) == 1 and a[0] == 1

    def equal(self, a, b):
        return a == b

    def one(self):
        return [1]

    def x(self):
        return [0, 1]

    def add(self, a, b):
        s = self.spec
        out = list(a) + [0] * (len(b) - len(a))
        for i, v in enumerate(b):
            out[i] = s.eadd(out[i], v)
        return self._trim(out)

    def sub(self, a, b):
        s = self.spec
        out = list(a) + [0] * (len(b) - len(a))
        for i, v in enumerate(b):
            out[i] = s.esub(out[i], v)
        return self._trim(out)

    def sub_one(self, a):
        return self.sub(a, [1])

    def mul(self, a, b):
        if not a or not b:
            return []
        s = self.spec
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = s.eadd(out[i + j], s.emul(ai, bj))
        return out

    def sqr(self, a):
        return self.mul(a, a)

    def divmod(self, a, b):
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        s = self.spec
        r = list(a)
        db = len(b) - 1
        if len(a) < len(b):
            return [], r
        binv = s.einv(b[-1])
        quot = [0] * (len(a) - db)
        for k in range(len(a) - db - 1, -1, -1):
            t = r[k + db]
            if t:
                c = s.emul(t, binv)
                quot[k] = c
                for j in range(db + 1):
                    r[k + j] = s.esub(r[k + j], s.emul(c, b[j]))
        return self._trim(quot), self._trim(r[:db])

    def quo(self, a, b):
        return self.divmod(a, b)[0]

    def rem(self, a, b):
        return self.divmod(a, b)[1]

    def gcd(self, a, b):
        u, v = list(a), list(b)
        while v:
            u, v = v, self.rem(u, v)
        return self.monic(u)[1] if u else u

    def monic(self, a):
        s = self.spec
        unit = a[-1]
        if unit == 1:
            return 1, list(a)
        li = s.einv(unit)
        return unit, [s.emul(li, c) for c in a]

    def powmod(self, a, e, f):
        result = self.rem(self.one(), f)
        base = self.rem(a, f)
        while e:
            if e & 1:
                result = self.rem(self.mul(result, base), f)
            base = self.rem(self.sqr(base), f)
            e >>= 1
        return result

    def powmod_q(self, a, f):
        return self.powmod(a, self.q, f)

    def pth_root_poly(self, a):
        s = self.spec
        return self._trim([s.epth_root(c) for c in a[:: self.p]])

    def derivative(self, a):
        s = self.spec
        return self._trim([s.emul(c, i % self.p) for i, c in enumerate(a) if i > 0])

    def random_below(self, degree_bound, rng):
        return self.from_coeffs([rng.randrange(self.q) for _ in range(degree_bound)])


@functools.lru_cache(maxsize=None)
def engine_for(spec):
    if spec.q == 2:
        return Gf2Engine(spec)
    if spec.tables() is not None:
        return DenseEngine(spec)
    return PyEngine(spec)
