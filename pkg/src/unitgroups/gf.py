"""Finite fields GF(p^n) with a canonical modulus.

``field_make(p, n)`` interns one ``FieldSpec`` per (p, n).  For n > 1 the
modulus is the monic irreducible of degree n over GF(p) whose coefficient
vector, read least-significant-first as a base-p integer, is minimal; the
construction is therefore reproducible everywhere.  Elements are stored
base-p encoded (an integer in [0, q)) and rendered as polynomials in the
generator ``a``.

Fields with q <= 512 lazily build flat numpy lookup tables for the scalar
operations; the dense polynomial kernels consume the same tables.
"""

import functools

import numpy as np

from .primes import is_prime

_TABLE_BOUND = 512
MAX_Q = 1 << 63


class FieldSpec:
    """One finite field GF(p^n); use :func:`field_make`, not the constructor."""

    __slots__ = ("p", "n", "q", "modulus", "_tables")

    def __init__(self, p, n, modulus):
        self.p = p
        self.n = n
        self.q = p ** n
        self.modulus = modulus  # tuple of n+1 residues, monic, None for n == 1
        self._tables = None

    def __repr__(self):
        return str(self)

    def __str__(self):
        return f"GF({self.p})" if self.n == 1 else f"GF({self.p}^{self.n})"

    def __eq__(self, other):
        return self is other or (isinstance(other, FieldSpec)
                                 and (self.p, self.n) == (other.p, other.n))

    def __hash__(self):
        return hash((FieldSpec, self.p, self.n))

    # -- element constructors ------------------------------------------------

    def zero(self):
        return FqElem(self, 0)

    def one(self):
        return FqElem(self, 1)

    def gen(self):
        """The residue of x, written ``a``; extension fields only."""
        if self.n == 1:
            raise ValueError(f"{self} has no generator symbol")
        return FqElem(self, self.p)

    def elem(self, v):
        """Element from an encoded value (n > 1) or a residue (n == 1)."""
        if isinstance(v, FqElem):
            if v.spec != self:
                raise TypeError(f"element of {v.spec}, expected {self}")
            return v
        if self.n == 1:
            return FqElem(self, v % self.p)
        if not 0 <= v < self.q:
            raise ValueError(f"encoded value {v} out of range for {self}")
        return FqElem(self, v)

    def from_coeffs(self, digits):
        """Element with the given base-p digits, least significant first."""
        if len(digits) > self.n:
            raise ValueError(f"at most {self.n} coefficients for {self}")
        val = 0
        for d in reversed(digits):
            val = val * self.p + (d % self.p)
        return FqElem(self, val)

    def random_elem(self, rng, nonzero=False):
        lo = 1 if nonzero else 0
        return FqElem(self, rng.randrange(lo, self.q))

    def all_elems(self):
        return [FqElem(self, v) for v in range(self.q)]

    # -- encoded scalar arithmetic -------------------------------------------

    def digits(self, v):
        p, out = self.p, []
        for _ in range(self.n):
            out.append(v % p)
            v //= p
        return tuple(out)

    def encode(self, digits):
        val = 0
        for d in reversed(digits):
            val = val * self.p + d
        return val

    def eadd(self, x, y):
        if self.n == 1:
            return (x + y) % self.p
        t = self.tables()
        if t is not None:
            return int(t["add"][x * self.q + y])
        return self.encode([(a + b) % self.p for a, b in zip(self.digits(x), self.digits(y))])

    def esub(self, x, y):
        if self.n == 1:
            return (x - y) % self.p
        t = self.tables()
        if t is not None:
            return int(t["sub"][x * self.q + y])
        return self.encode([(a - b) % self.p for a, b in zip(self.digits(x), self.digits(y))])

    def eneg(self, x):
        if self.n == 1:
            return (-x) % self.p
        return self.esub(0, x)

    def emul(self, x, y):
        if self.n == 1:
            return (x * y) % self.p
        t = self.tables()
        if t is not None:
            return int(t["mul"][x * self.q + y])
        return self._emul_digits(x, y)

    def _emul_digits(self, x, y):
        p, n = self.p, self.n
        a, b = self.digits(x), self.digits(y)
        prod = [0] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        mod = self.modulus
        for k in range(2 * n - 2, n - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for i in range(n):
                    prod[k - n + i] = (prod[k - n + i] - c * mod[i]) % p
        return self.encode(prod[:n])

    def einv(self, x):
        if x == 0:
            raise ZeroDivisionError(f"inversion of zero in {self}")
        if self.n == 1:
            return pow(x, -1, self.p)
        t = self.tables()
        if t is not None:
            return int(t["inv"][x])
        return self._einv_digits(x)

    def _einv_digits(self, x):
        # extended Euclid on base-p coefficient polynomials
        p = self.p
        a = list(self.digits(x))
        while a and a[-1] == 0:
            a.pop()
        b = list(self.modulus)
        s0, s1 = [1], []
        r0, r1 = a, b
        while r1:
            q, r = _fp_divmod(r0, r1, p)
            r0, r1 = r1, r
            s0, s1 = s1, _fp_sub(s0, _fp_mul(q, s1, p), p)
        c = pow(r0[-1], -1, p)  # r0 is a nonzero constant times gcd = const
        if len(r0) != 1:
            raise ZeroDivisionError(f"not invertible in {self}")
        inv = [(c * d) % p for d in s0]
        inv += [0] * (self.n - len(inv))
        return self.encode(inv[: self.n])

    def epow(self, x, e):
        if e < 0:
            return self.epow(self.einv(x), -e)
        result, base = 1, x
        while e:
            if e & 1:
                result = self.emul(result, base)
            base = self.emul(base, base)
            e >>= 1
        return result

    def epth_root(self, x):
        """Inverse of the Frobenius y -> y^p (identity on prime fields)."""
        if self.n == 1:
            return x
        t = self.tables()
        if t is not None:
            return int(t["pthroot"][x])
        return self.epow(x, self.q // self.p)

    # -- lookup tables ---------------------------------------------------------

    def tables(self):
        """Flat int64 op tables for q <= 512, else None; built lazily."""
        if self.q > _TABLE_BOUND:
            return None
        if self._tables is None:
            self._tables = self._build_tables()
        return self._tables

    def _build_tables(self):
        p, n, q = self.p, self.n, self.q
        if n == 1:
            i = np.arange(q, dtype=np.int64)
            add = (i[:, None] + i[None, :]) % p
            sub = (i[:, None] - i[None, :]) % p
            mul = (i[:, None] * i[None, :]) % p
        else:
            digits = np.zeros((q, n), dtype=np.int64)
            v = np.arange(q, dtype=np.int64)
            for k in range(n):
                digits[:, k] = v % p
                v //= p
            powers = p ** np.arange(n, dtype=np.int64)
            add = ((digits[:, None, :] + digits[None, :, :]) % p) @ powers
            sub = ((digits[:, None, :] - digits[None, :, :]) % p) @ powers
            prod = np.zeros((q, q, 2 * n - 1), dtype=np.int64)
            for i in range(n):
                for j in range(n):
                    prod[:, :, i + j] += digits[:, None, i] * digits[None, :, j]
            prod %= p
            mod = np.asarray(self.modulus[:n], dtype=np.int64)
            for k in range(2 * n - 2, n - 1, -1):
                c = prod[:, :, k].copy()
                prod[:, :, k] = 0
                prod[:, :, k - n: k] = (prod[:, :, k - n: k] - c[:, :, None] * mod) % p
            mul = prod[:, :, :n] @ powers
        inv = np.zeros(q, dtype=np.int64)
        rows, cols = np.nonzero(mul == 1)
        inv[rows] = cols
        pthroot = np.arange(q, dtype=np.int64)
        if n > 1:
            e = q // p
            for v in range(q):
                pthroot[v] = self.epow_via(mul, v, e)
        return {"add": add.reshape(-1), "sub": sub.reshape(-1),
                "mul": mul.reshape(-1), "inv": inv, "pthroot": pthroot,
                "mul2d": mul}

    def epow_via(self, mul2d, x, e):
        result, base = 1, x
        while e:
            if e & 1:
                result = int(mul2d[result, base])
            base = int(mul2d[base, base])
            e >>= 1
        return result


def _fp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_divmod(a, b, p):
    a = list(a)
    db = len(b) - 1
    binv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - db, 0)
    for k in range(len(a) - db - 1, -1, -1):
        t = a[k + db]
        if t:
            c = (t * binv) % p
            q[k] = c
            for j in range(db + 1):
                a[k + j] = (a[k + j] - c * b[j]) % p
    return q, _fp_trim(a[:db])


def _fp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _fp_trim(out)


def _fp_sub(a, b, p):
    out = [0] * max(len(a), len(b))
    for i, v in enumerate(a):
        out[i] = v
    for i, v in enumerate(b):
        out[i] = (out[i] - v) % p
    return _fp_trim(out)


class FqElem:
    """An element of a FieldSpec, stored as its base-p encoded value."""

    __slots__ = ("spec", "val")

    def __init__(self, spec, val):
        self.spec = spec
        self.val = val

    @property
    def coeffs(self):
        return self.spec.digits(self.val)

    def _coerce(self, other):
        if isinstance(other, FqElem):
            if other.spec != self.spec:
                raise TypeError(f"mixed fields {self.spec} and {other.spec}")
            return other
        if isinstance(other, int):
            return FqElem(self.spec, other % self.spec.p)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FqElem(self.spec, self.spec.eadd(self.val, o.val))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FqElem(self.spec, self.spec.esub(self.val, o.val))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FqElem(self.spec, self.spec.esub(o.val, self.val))

    def __neg__(self):
        return FqElem(self.spec, self.spec.eneg(self.val))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FqElem(self.spec, self.spec.emul(self.val, o.val))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FqElem(self.spec, self.spec.emul(self.val, self.spec.einv(o.val)))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FqElem(self.spec, self.spec.emul(o.val, self.spec.einv(self.val)))

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        return FqElem(self.spec, self.spec.epow(self.val, e))

    def inverse(self):
        return FqElem(self.spec, self.spec.einv(self.val))

    def pth_root(self):
        return FqElem(self.spec, self.spec.epth_root(self.val))

    def __bool__(self):
        return self.val != 0

    def __eq__(self, other):
        if isinstance(other, FqElem):
            return self.spec == other.spec and self.val == other.val
        return NotImplemented

    def __hash__(self):
        return hash((FqElem, self.spec.p, self.spec.n, self.val))

    def __str__(self):
        if self.spec.n == 1:
            return str(self.val)
        terms = []
        for i in range(self.spec.n - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                var = "a" if i == 1 else f"a^{i}"
                terms.append(var if c == 1 else f"{c}*{var}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return f"<{self} in {self.spec}>"


def _canonical_modulus(p, n):
    """Minimal-code monic irreducible of degree n over GF(p)."""
    from .factor import is_irreducible
    from .poly import Poly
    base = field_make(p)
    lead = p ** n
    for c in range(lead):
        digits = []
        v = c
        for _ in range(n):
            digits.append(v % p)
            v //= p
        cand = Poly.from_coeffs(base, digits + [1])
        if is_irreducible(cand):
            return tuple(digits + [1])
    raise AssertionError("no irreducible of requested degree")  # unreachable


@functools.lru_cache(maxsize=None)
def field_make(p, n=1):
    """The interned FieldSpec for GF(p^n); requires p prime and p^n <= 2^63."""
    if not isinstance(p, int) or not isinstance(n, int) or n < 1:
        raise ValueError("field_make expects a prime p and an exponent n >= 1")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p ** n > MAX_Q:
        raise ValueError(f"field size {p}^{n} exceeds 2^63")
    if n == 1:
        return FieldSpec(p, n, None)
    return FieldSpec(p, n, _canonical_modulus(p, n))
