"""Simple algebraic extensions of a rational function field, and norms.

The extension is F_q(x)[y]/(m) for a monic squarefree m of degree
d >= 2.  Irreducibility over F_q(x) is certified when some
specialization x -> a in F_q keeps degree d and is irreducible over
F_q; otherwise the extension is only marked squarefree (norms are still
multiplicative in that case, just over a product of fields).

The norm of u is the product of u over the conjugates of y, computed as
a resultant in y.  Coefficients are cleared to polynomials first and
the resultant runs fraction-free over F_q[x] (subresultant PRS), so no
rational-function arithmetic happens in the elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .factor import is_irreducible
from .gf import FieldSpec, FqElem
from .poly import Poly, poly_gcd
from .ratfunc import RatFunc

_SPECIALIZE_CAP = 64


class IrreducibilityStatus(Enum):
    VERIFIED = "Verified"
    ASSUMED_SQUAREFREE = "AssumedSquarefree"


# ---- polynomials in y with RatFunc coefficients (ascending tuples) ----

def _ytrim(cs):
    cs = list(cs)
    while cs and cs[-1].is_zero():
        cs.pop()
    return tuple(cs)


def _yadd(a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        if i < len(a) and i < len(b):
            out.append(a[i] + b[i])
        else:
            out.append(a[i] if i < len(a) else b[i])
    return _ytrim(out)


def _yneg(a):
    return tuple(-c for c in a)


def _ymul(a, b, zero):
    if not a or not b:
        return ()
    out = [zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = out[i + j] + ai * bj
    return _ytrim(out)


def _ydivmod(a, b, zero):
    if not b:
        raise ZeroDivisionError("division by zero polynomial in y")
    r = list(a)
    db = len(b) - 1
    if len(a) < len(b):
        return (), a
    binv = b[-1].inverse()
    quot = [zero] * (len(a) - db)
    for k in range(len(a) - db - 1, -1, -1):
        t = r[k + db]
        if t:
            c = t * binv
            quot[k] = c
            for j in range(db + 1):
                r[k + j] = r[k + j] - c * b[j]
    return _ytrim(quot), _ytrim(r[:db])


def _ygcd_is_unit(a, b, zero):
    """True when gcd over F_q(x) of the two y-polynomials is a constant."""
    u, v = tuple(a), tuple(b)
    while v:
        u, v = v, _ydivmod(u, v, zero)[1]
    return len(u) == 1


def _yderiv(a, spec):
    out = []
    for i in range(1, len(a)):
        out.append(a[i] * (i % spec.p))
    return _ytrim(out)


@dataclass(frozen=True)
class SimpleExtension:
    """F_q(base_var)[ext_var] / (modulus), modulus monic squarefree."""

    spec: FieldSpec
    base_var: str
    ext_var: str
    modulus: tuple   # RatFunc coefficients, ascending, length degree+1
    status: IrreducibilityStatus
    witness: object  # FqElem specialization point when Verified

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    def zero_rf(self) -> RatFunc:
        return RatFunc.zero(self.spec, self.base_var)

    def one_rf(self) -> RatFunc:
        return RatFunc.one(self.spec, self.base_var)

    def element(self, coeffs) -> "ExtElem":
        return ExtElem(self, coeffs)

    def gen(self) -> "ExtElem":
        return ExtElem(self, (self.zero_rf(), self.one_rf()))

    def from_base(self, c) -> "ExtElem":
        return ExtElem(self, (c,))

    def modulus_str(self) -> str:
        return _ypoly_str(self.modulus, self.ext_var)

    def __str__(self):
        return (f"GF({self.spec.p})({self.base_var})"
                f"[{self.ext_var}]/({self.modulus_str()})")


def ext_make(spec: FieldSpec, coeffs, base_var: str = "t",
             ext_var: str = "y") -> SimpleExtension:
    """Build the extension, checking monic + squarefree and attempting an
    irreducibility certificate by specialization."""
    zero = RatFunc.zero(spec, base_var)
    m = []
    for c in coeffs:
        if isinstance(c, RatFunc):
            if c.spec != spec or c.var != base_var:
                raise ValueError("modulus coefficient in the wrong base field")
            m.append(c)
        elif isinstance(c, Poly):
            m.append(RatFunc.from_poly(c))
        elif isinstance(c, (int, FqElem)):
            m.append(RatFunc.from_poly(Poly.constant(spec, c, base_var)))
        else:
            raise TypeError(f"bad modulus coefficient {c!r}")
    m = _ytrim(m)
    d = len(m) - 1
    if d < 2:
        raise ValueError("extension degree must be at least 2")
    if not m[-1].is_one():
        raise ValueError("modulus must be monic in the extension variable")
    dm = _yderiv(m, spec)
    if not dm or not _ygcd_is_unit(m, dm, zero):
        raise ValueError("modulus is not squarefree")

    status = IrreducibilityStatus.ASSUMED_SQUAREFREE
    witness = None
    if all(c.is_poly() for c in m):
        tried = 0
        for a in spec.all_elems():
            if tried >= _SPECIALIZE_CAP:
                break
            tried += 1
            special = Poly(spec, [c.num(a).val for c in m], ext_var)
            if special.degree == d and is_irreducible(special):
                status = IrreducibilityStatus.VERIFIED
                witness = a
                break
    return SimpleExtension(spec, base_var, ext_var, tuple(m), status, witness)


def _ypoly_str(coeffs, var: str) -> str:
    if not coeffs:
        return "0"
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c.is_zero():
            continue
        if i == 0:
            cs = str(c)
            parts.append(f"({cs})" if (" " in cs or "/" in cs) else cs)
            continue
        ypow = var if i == 1 else f"{var}^{i}"
        if c.is_one():
            parts.append(ypow)
        else:
            cs = str(c)
            if " " in cs or "/" in cs or "*" in cs:
                cs = f"({cs})"
            parts.append(f"{cs}*{ypow}")
    return " + ".join(parts) if parts else "0"


class ExtElem:
    """Residue of a y-polynomial mod the extension's modulus."""

    __slots__ = ("ext", "coeffs")

    def __init__(self, ext: SimpleExtension, coeffs):
        cs = []
        for c in coeffs:
            if isinstance(c, RatFunc):
                if c.spec != ext.spec or c.var != ext.base_var:
                    raise ValueError("coefficient in the wrong base field")
                cs.append(c)
            elif isinstance(c, Poly):
                cs.append(RatFunc.from_poly(c))
            elif isinstance(c, (int, FqElem)):
                cs.append(RatFunc.from_poly(Poly.constant(ext.spec, c, ext.base_var)))
            else:
                raise TypeError(f"bad coefficient {c!r}")
        cs = _ytrim(cs)
        if len(cs) > ext.degree:
            cs = _ydivmod(cs, ext.modulus, ext.zero_rf())[1]
        object.__setattr__(self, "ext", ext)
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("ExtElem is immutable")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def y_degree(self) -> int:
        return len(self.coeffs) - 1

    def _check(self, other):
        if isinstance(other, ExtElem):
            if other.ext != self.ext:
                raise TypeError("mixed extensions")
            return other
        if isinstance(other, (RatFunc, Poly, int, FqElem)):
            return ExtElem(self.ext, (other,))
        return NotImplemented

    def __add__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return NotImplemented
        return ExtElem(self.ext, _yadd(self.coeffs, o.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return ExtElem(self.ext, _yneg(self.coeffs))

    def __sub__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return NotImplemented
        return ExtElem(self.ext, _yadd(self.coeffs, _yneg(o.coeffs)))

    def __rsub__(self, other):
        o = self._check(other)
        return NotImplemented if o is NotImplemented else o - self

    def __mul__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return NotImplemented
        prod = _ymul(self.coeffs, o.coeffs, self.ext.zero_rf())
        return ExtElem(self.ext, prod)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            raise ValueError("negative powers are not supported in extensions")
        result = ExtElem(self.ext, (self.ext.one_rf(),))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, ExtElem):
            return self.ext == other.ext and self.coeffs == other.coeffs
        if isinstance(other, (RatFunc, Poly, int, FqElem)):
            o = self._check(other)
            return self.coeffs == o.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((id(self.ext), self.coeffs))

    def __str__(self):
        return _ypoly_str(self.coeffs, self.ext.ext_var)

    def __repr__(self):
        return f"<{self} in {self.ext}>"


# ---- fraction-free resultant over F_q[x] ----

def _content(cs, spec, var):
    g = Poly.zero(spec, var)
    for c in cs:
        g = poly_gcd(g, c)
    return g


def _prem(a, b):
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, division-free."""
    da, db = len(a) - 1, len(b) - 1
    lb = b[-1]
    r = list(a)
    for k in range(da - db, -1, -1):
        lead = r[k + db]
        r = [c * lb for c in r]
        for j in range(db + 1):
            r[k + j] = r[k + j] - lead * b[j]
        # top coefficient cancelled by construction
        r = r[: k + db]
    return r


def _poly_exact_div(a: Poly, b: Poly) -> Poly:
    quot, rem = divmod(a, b)
    if not rem.is_zero():
        raise ArithmeticError("inexact division in subresultant chain")
    return quot


def resultant_y(a, b, spec: FieldSpec, var: str) -> Poly:
    """Resultant of two y-polynomials with Poly coefficients over F_q[x].

    Subresultant pseudo-remainder sequence: all intermediate values stay
    in F_q[x], with exact divisions keeping coefficient growth linear.
    """
    a = [c for c in a]
    b = [c for c in b]
    while a and a[-1].is_zero():
        a.pop()
    while b and b[-1].is_zero():
        b.pop()
    one = Poly.one(spec, var)
    if not a or not b:
        return Poly.zero(spec, var)
    sign = 1
    if len(a) < len(b):
        if ((len(a) - 1) * (len(b) - 1)) % 2 == 1:
            sign = -sign
        a, b = b, a
    g = one
    h = one
    while len(b) - 1 > 0:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if (da % 2) == 1 and (db % 2) == 1:
            sign = -sign
        r = _prem(a, b)
        while r and r[-1].is_zero():
            r.pop()
        a = b
        divisor = g * h ** delta
        b = [_poly_exact_div(c, divisor) for c in r]
        g = a[-1]
        if delta == 0:
            # h unchanged: h = h^1 g^0
            pass
        elif delta == 1:
            h = g
        else:
            h = _poly_exact_div(g ** delta, h ** (delta - 1))
        if not b:
            return Poly.zero(spec, var)
    da = len(a) - 1
    lb = b[0]
    if da == 0:
        res = one
    else:
        res = _poly_exact_div(lb ** da, h ** (da - 1)) if da > 1 else lb
    if sign == -1:
        res = -res
    return res


def _lcm_poly(a: Poly, b: Poly) -> Poly:
    g = poly_gcd(a, b)
    return (a // g) * b


def norm(u: ExtElem) -> RatFunc:
    """Field norm down to the base: the product of u over the conjugates.

    Computed as Res_y(modulus, u) after clearing denominators, then the
    correction factors Dm^deg_y(u) and Du^d are divided back out.
    """
    if u.is_zero():
        raise ValueError("norm of zero is not defined on the unit group")
    ext = u.ext
    spec, var = ext.spec, ext.base_var
    one = Poly.one(spec, var)

    def clear(cs):
        den = one
        for c in cs:
            den = _lcm_poly(den, c.den)
        cleared = [c.num * (den // c.den) for c in cs]
        return cleared, den

    m_cleared, dm = clear(ext.modulus)
    u_cleared, du = clear(u.coeffs)
    res = resultant_y(m_cleared, u_cleared, spec, var)
    e = u.y_degree
    d = ext.degree
    correction = dm ** e * du ** d
    # lc(m_cleared) = dm, so Res(m_cleared, u_cleared) = dm^e du^d prod u(theta_i)
    value = RatFunc(res, correction)
    return value


def random_ext_elem(ext: SimpleExtension, rng, coeff_degree: int = 3,
                    nonzero: bool = True) -> ExtElem:
    from .ratfunc import random_ratfunc

    while True:
        cs = []
        for _ in range(ext.degree):
            if rng.random() < 0.3:
                cs.append(ext.zero_rf())
            else:
                cs.append(random_ratfunc(ext.spec, rng.randint(0, coeff_degree),
                                         rng, ext.base_var))
        el = ExtElem(ext, cs)
        if el or not nonzero:
            return el
