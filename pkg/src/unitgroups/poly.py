"""Dense univariate polynomials over a finite field.

``Poly`` is immutable.  Coefficients are stored as a trimmed tuple of
encoded field values, lowest degree first; the zero polynomial has an
empty tuple.  Arithmetic dispatches to the packed GF(2) kernels or the
table-driven dense kernels when the field is small enough, and to a
plain Python path otherwise.
"""

from __future__ import annotations

import functools

from . import _engines
from .gf import FieldSpec, FqElem


def _as_coeff(spec: FieldSpec, c) -> int:
    if isinstance(c, FqElem):
        if c.spec != spec:
            raise TypeError(f"coefficient from {c.spec}, expected {spec}")
        return c.val
    if isinstance(c, int):
        return c % spec.p
    raise TypeError(f"cannot use {type(c).__name__} as a coefficient")


class Poly:
    __slots__ = ("spec", "coeffs", "var")

    def __init__(self, spec: FieldSpec, coeffs=(), var: str = "x"):
        q = spec.q
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int) or not 0 <= c < q:
                raise ValueError(f"encoded coefficient {c!r} out of range for {spec}")
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, spec: FieldSpec, var: str = "x") -> "Poly":
        return cls(spec, (), var)

    @classmethod
    def one(cls, spec: FieldSpec, var: str = "x") -> "Poly":
        return cls(spec, (1,), var)

    @classmethod
    def x(cls, spec: FieldSpec, var: str = "x") -> "Poly":
        return cls(spec, (0, 1), var)

    @classmethod
    def constant(cls, spec: FieldSpec, c, var: str = "x") -> "Poly":
        return cls(spec, (_as_coeff(spec, c),), var)

    @classmethod
    def from_coeffs(cls, spec: FieldSpec, coeffs, var: str = "x") -> "Poly":
        """Build from a low-to-high list of ints or field elements.

        Plain ints are reduced into the prime subfield, so lists like
        ``[1, 0, 2]`` mean 2x^2 + 1 over any field of characteristic > 2.
        """
        return cls(spec, [_as_coeff(spec, c) for c in coeffs], var)

    @classmethod
    def from_int_code(cls, spec: FieldSpec, code: int, var: str = "x") -> "Poly":
        if code < 0:
            raise ValueError("polynomial code must be nonnegative")
        q = spec.q
        cs = []
        while code:
            code, r = divmod(code, q)
            cs.append(r)
        return cls(spec, cs, var)

    # -- basic queries ------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> FqElem:
        if not self.coeffs:
            return FqElem(self.spec, 0)
        return FqElem(self.spec, self.coeffs[-1])

    @property
    def int_code(self) -> int:
        """Base-q integer encoding; the canonical total order on polys."""
        code = 0
        for c in reversed(self.coeffs):
            code = code * self.spec.q + c
        return code

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.spec == other.spec and self.coeffs == other.coeffs
        if isinstance(other, (int, FqElem)):
            o = self._coerce(other)
            return o is not NotImplemented and self.coeffs == o.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.coeffs))

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> FqElem:
        if not 0 <= i:
            raise IndexError("coefficient index must be nonnegative")
        v = self.coeffs[i] if i < len(self.coeffs) else 0
        return FqElem(self.spec, v)

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.spec != self.spec:
                raise TypeError(f"mixed fields: {self.spec} and {other.spec}")
            return other
        if isinstance(other, (int, FqElem)):
            return Poly(self.spec, (_as_coeff(self.spec, other),), self.var)
        return NotImplemented

    def _lift(self, rep) -> "Poly":
        eng = _engines.engine_for(self.spec)
        return Poly(self.spec, eng.to_coeffs(rep), self.var)

    def _rep(self):
        return _engines.engine_for(self.spec).from_coeffs(self.coeffs)

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        eng = _engines.engine_for(self.spec)
        return self._lift(eng.add(self._rep(), o._rep()))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        if self.spec.p == 2:
            return self
        s = self.spec
        return Poly(s, [s.eneg(c) for c in self.coeffs], self.var)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        eng = _engines.engine_for(self.spec)
        return self._lift(eng.sub(self._rep(), o._rep()))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        eng = _engines.engine_for(self.spec)
        return self._lift(eng.mul(self._rep(), o._rep()))

    __rmul__ = __mul__

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        eng = _engines.engine_for(self.spec)
        quot, rem = eng.divmod(self._rep(), o._rep())
        return self._lift(quot), self._lift(rem)

    def __floordiv__(self, other):
        dm = divmod(self, other)
        return NotImplemented if dm is NotImplemented else dm[0]

    def __mod__(self, other):
        dm = divmod(self, other)
        return NotImplemented if dm is NotImplemented else dm[1]

    def __pow__(self, e: int) -> "Poly":
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.one(self.spec, self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def mulmod(self, other: "Poly", modulus: "Poly") -> "Poly":
        return (self * other) % modulus

    def powmod(self, e: int, modulus: "Poly") -> "Poly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        eng = _engines.engine_for(self.spec)
        return self._lift(eng.powmod(self._rep(), e, modulus._rep()))

    def monic(self) -> "Poly":
        if self.is_zero() or self.is_monic():
            return self
        s = self.spec
        li = s.einv(self.coeffs[-1])
        return Poly(s, [s.emul(li, c) for c in self.coeffs], self.var)

    def derivative(self) -> "Poly":
        eng = _engines.engine_for(self.spec)
        return self._lift(eng.derivative(self._rep()))

    def __call__(self, point):
        """Evaluate by Horner's rule; accepts an int or field element."""
        s = self.spec
        v = _as_coeff(s, point)
        acc = 0
        for c in reversed(self.coeffs):
            acc = s.eadd(s.emul(acc, v), c)
        return FqElem(s, acc)

    def shift_compose(self, c) -> "Poly":
        """Return self(x + c)."""
        s = self.spec
        cv = _as_coeff(s, c)
        xpc = Poly(s, (cv, 1), self.var)
        acc = Poly.zero(s, self.var)
        for coeff in reversed(self.coeffs):
            acc = acc * xpc + coeff
        return acc

    # -- display ------------------------------------------------------

    def _term_str(self, c: int, i: int) -> str:
        s = self.spec
        cs = str(FqElem(s, c))
        if i == 0:
            return f"({cs})" if s.n > 1 and ("+" in cs or "-" in cs) else cs
        xp = self.var if i == 1 else f"{self.var}^{i}"
        if c == 1:
            return xp
        if s.n > 1 and ("+" in cs or "-" in cs):
            return f"({cs})*{xp}"
        return f"{cs}*{xp}"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = [
            self._term_str(c, i)
            for i, c in sorted(enumerate(self.coeffs), reverse=True)
            if c != 0
        ]
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"<{self} over {self.spec}>"


def random_poly(spec: FieldSpec, degree: int, rng, monic: bool = False,
                var: str = "x") -> Poly:
    """Uniform polynomial of exactly the given degree (monic if asked)."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    cs = [rng.randrange(spec.q) for _ in range(degree)]
    if monic:
        cs.append(1)
    else:
        cs.append(rng.randrange(1, spec.q))
    return Poly(spec, cs, var)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    if a.spec != b.spec:
        raise TypeError(f"mixed fields: {a.spec} and {b.spec}")
    eng = _engines.engine_for(a.spec)
    return a._lift(eng.gcd(a._rep(), b._rep()))


@functools.lru_cache(maxsize=None)
def _irreducibles_cached(spec: FieldSpec, degree: int):
    from .factor import is_irreducible

    q = spec.q
    out = []
    # monic degree-d polys are x^d + (lower part); lower part ranges over q^d codes
    for low in range(q ** degree):
        f = Poly.from_int_code(spec, low + q ** degree)
        if is_irreducible(f):
            out.append(f)
    return tuple(out)


def irreducible_polys(spec: FieldSpec, degree: int):
    """All monic irreducibles of exact degree, ascending base-q code."""
    if degree < 1:
        raise ValueError("degree must be at least 1")
    if degree > 24:
        raise ValueError("exhaustive irreducible enumeration capped at degree 24")
    return _irreducibles_cached(spec, degree)
