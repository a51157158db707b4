"""The perfect closure of F_2(t): adjoin all 2-power roots of t.

An element is stored as a level k >= 0 and a body in F_2(t), read by
substituting t^(1/2^k) for the body's variable.  The pair is kept
minimal: at level k > 0 the body is never a square, which makes the
representation canonical and equality structural.  Squaring shifts the
level down, square roots shift it up; both are exact and O(1) in the
body.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .gf import field_make
from .hahn import HahnSeries
from .ordered import DYADIC_GROUP
from .poly import Poly
from .ratfunc import RatFunc, decompose

_F2 = field_make(2)
_VAR = "t"


def _t_poly(coeffs) -> Poly:
    return Poly(_F2, coeffs, _VAR)


def _is_square(p: Poly) -> bool:
    return all(c == 0 for i, c in enumerate(p.coeffs) if i & 1)


def _sqrt(p: Poly) -> Poly:
    return Poly(p.spec, p.coeffs[::2], p.var)


def _stretch(p: Poly, factor: int) -> Poly:
    """p(x^factor); factor a power of two here, so this is p^factor in char 2."""
    if factor == 1 or p.is_zero():
        return p
    cs = [0] * (p.degree * factor + 1)
    for i, c in enumerate(p.coeffs):
        cs[i * factor] = c
    return Poly(p.spec, cs, p.var)


class DyadicPoly:
    """F_2-polynomial in t with nonnegative dyadic exponents."""

    __slots__ = ("level", "poly")

    def __init__(self, level: int, poly: Poly):
        if level < 0:
            raise ValueError("level must be nonnegative")
        while level > 0 and _is_square(poly):
            poly = _sqrt(poly)
            level -= 1
        if poly.is_zero():
            level = 0
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "poly", poly)

    def __setattr__(self, name, value):
        raise AttributeError("DyadicPoly is immutable")

    @classmethod
    def zero(cls) -> "DyadicPoly":
        return cls(0, Poly.zero(_F2, _VAR))

    @classmethod
    def one(cls) -> "DyadicPoly":
        return cls(0, Poly.one(_F2, _VAR))

    @classmethod
    def from_exponents(cls, exponents) -> "DyadicPoly":
        """Build sum of t^e over distinct dyadic exponents e >= 0."""
        exps = [Fraction(e) for e in exponents]
        if len(set(exps)) != len(exps):
            raise ValueError("duplicate exponents would cancel in characteristic 2")
        level = 0
        for e in exps:
            if e < 0:
                raise ValueError(f"negative exponent {e} in a dyadic polynomial")
            d = e.denominator
            if d & (d - 1):
                raise ValueError(f"exponent {e} is not dyadic")
            level = max(level, d.bit_length() - 1)
        scale = 1 << level
        cs = [0] * (max((int(e * scale) for e in exps), default=0) + 1) or [0]
        for e in exps:
            cs[int(e * scale)] = 1
        return cls(level, _t_poly(cs) if exps else Poly.zero(_F2, _VAR))

    @property
    def exponents(self):
        scale = 1 << self.level
        return tuple(Fraction(i, scale) for i, c in enumerate(self.poly.coeffs) if c)

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def _lift(self, level: int) -> Poly:
        return _stretch(self.poly, 1 << (level - self.level))

    def __add__(self, other):
        if not isinstance(other, DyadicPoly):
            return NotImplemented
        k = max(self.level, other.level)
        return DyadicPoly(k, self._lift(k) + other._lift(k))

    __sub__ = __add__  # characteristic 2

    def __mul__(self, other):
        if not isinstance(other, DyadicPoly):
            return NotImplemented
        k = max(self.level, other.level)
        return DyadicPoly(k, self._lift(k) * other._lift(k))

    def __eq__(self, other):
        if not isinstance(other, DyadicPoly):
            return NotImplemented
        return self.level == other.level and self.poly == other.poly

    def __hash__(self):
        return hash((self.level, self.poly))

    def to_hahn(self) -> HahnSeries:
        """The same element inside F_2((Z[1/2]))."""
        return HahnSeries(_F2, DYADIC_GROUP, [(e, 1) for e in self.exponents])

    def __str__(self):
        if self.is_zero():
            return "0"
        return " + ".join(_exp_term(e) for e in reversed(self.exponents))

    def __repr__(self):
        return f"<{self} in perfect closure of GF(2)({_VAR})>"


def _exp_term(e: Fraction) -> str:
    if e == 0:
        return "1"
    if e == 1:
        return _VAR
    if e.denominator == 1:
        return f"{_VAR}^{e}"
    return f"{_VAR}^({e})"


class DyadicRatFunc:
    """Quotient of dyadic polynomials, canonicalized at its minimal level."""

    __slots__ = ("level", "body")

    def __init__(self, level: int, body: RatFunc):
        if level < 0:
            raise ValueError("level must be nonnegative")
        while level > 0 and _is_square(body.num) and _is_square(body.den):
            body = RatFunc(_sqrt(body.num), _sqrt(body.den))
            level -= 1
        if body.is_zero():
            level = 0
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "body", body)

    def __setattr__(self, name, value):
        raise AttributeError("DyadicRatFunc is immutable")

    @classmethod
    def zero(cls) -> "DyadicRatFunc":
        return cls(0, RatFunc.zero(_F2, _VAR))

    @classmethod
    def one(cls) -> "DyadicRatFunc":
        return cls(0, RatFunc.one(_F2, _VAR))

    @classmethod
    def from_ratfunc(cls, rf: RatFunc) -> "DyadicRatFunc":
        if rf.spec != _F2:
            raise ValueError("perfect-closure elements live over GF(2)")
        return cls(0, rf)

    @classmethod
    def monomial(cls, e) -> "DyadicRatFunc":
        """t^e for any dyadic rational e."""
        e = Fraction(e)
        d = e.denominator
        if d & (d - 1):
            raise ValueError(f"exponent {e} is not dyadic")
        level = d.bit_length() - 1
        m = abs(e.numerator)
        mono = _t_poly([0] * m + [1])
        one = Poly.one(_F2, _VAR)
        body = RatFunc(mono, one) if e >= 0 else RatFunc(one, mono)
        return cls(level, body)

    @property
    def num(self) -> DyadicPoly:
        return DyadicPoly(self.level, self.body.num)

    @property
    def den(self) -> DyadicPoly:
        return DyadicPoly(self.level, self.body.den)

    def is_zero(self) -> bool:
        return self.body.is_zero()

    def is_one(self) -> bool:
        return self.level == 0 and self.body.is_one()

    def __bool__(self):
        return not self.is_zero()

    def _lift(self, level: int) -> RatFunc:
        f = 1 << (level - self.level)
        return RatFunc(_stretch(self.body.num, f), _stretch(self.body.den, f))

    def _binop(self, other, op):
        if not isinstance(other, DyadicRatFunc):
            if isinstance(other, (int, Poly, RatFunc)):
                other = DyadicRatFunc(0, RatFunc.one(_F2, _VAR) * other)
            else:
                return NotImplemented
        k = max(self.level, other.level)
        return DyadicRatFunc(k, op(self._lift(k), other._lift(k)))

    def __add__(self, other):
        return self._binop(other, lambda a, b: a + b)

    __radd__ = __add__
    __sub__ = __add__  # characteristic 2
    __rsub__ = __add__

    def __mul__(self, other):
        return self._binop(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._binop(other, lambda a, b: a / b)

    def inverse(self) -> "DyadicRatFunc":
        return DyadicRatFunc(self.level, self.body.inverse())

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        return DyadicRatFunc(self.level, self.body ** e)

    def __eq__(self, other):
        if not isinstance(other, DyadicRatFunc):
            return NotImplemented
        return self.level == other.level and self.body == other.body

    def __hash__(self):
        return hash((self.level, self.body))

    def __str__(self):
        num, den = self.num, self.den
        if den == DyadicPoly.one():
            return str(num)
        ns, ds = str(num), str(den)
        if " " in ns:
            ns = f"({ns})"
        if " " in ds:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self):
        return f"<{self} in perfect closure of GF(2)({_VAR})>"


def frobenius(q: DyadicRatFunc) -> DyadicRatFunc:
    """Squaring; in characteristic 2 this doubles every exponent."""
    if q.level > 0:
        return DyadicRatFunc(q.level - 1, q.body)
    return DyadicRatFunc(0, q.body * q.body)


def frobenius_inv(q: DyadicRatFunc) -> DyadicRatFunc:
    """The unique square root; perfectness makes this total."""
    return DyadicRatFunc(q.level + 1, q.body)


def pc_level(q: DyadicRatFunc) -> int:
    """Least k with q in GF(2)(t^(1/2^k))."""
    if q.is_zero():
        raise ValueError("zero has no level")
    return q.level


@dataclass(frozen=True)
class PCDecomposition:
    """Product of integer-polynomial irreducibles with dyadic exponents."""

    factors: tuple

    def __post_init__(self):
        last_key = None
        for f, e in self.factors:
            if not isinstance(f, Poly) or f.spec != _F2 or f.var != _VAR:
                raise ValueError("factors must be polynomials over GF(2) in t")
            if f.degree < 1 or not f.is_monic():
                raise ValueError(f"factor {f} must be monic of positive degree")
            if not isinstance(e, Fraction) or e == 0 or (e.denominator & (e.denominator - 1)):
                raise ValueError(f"exponent {e} must be a nonzero dyadic rational")
            key = (f.degree, f.int_code)
            if last_key is not None and key <= last_key:
                raise ValueError("factors must be strictly sorted canonically")
            last_key = key

    def to_json_dict(self) -> dict:
        return {"factors": [{"poly": str(f).replace(" ", ""), "exp": str(e)}
                            for f, e in self.factors]}

    def __str__(self):
        if not self.factors:
            return "1"
        parts = []
        for f, e in self.factors:
            fs = str(f)
            if " " in fs:
                fs = f"({fs})"
            parts.append(fs if e == 1 else f"{fs}^({e})")
        return " * ".join(parts)


def pc_decompose(q: DyadicRatFunc, seed: int = 0) -> PCDecomposition:
    """Irreducible decomposition with exponents in Z[1/2].

    Raising q to 2^level lands in F_2(t); factor there, then divide the
    exponents back down.
    """
    if q.is_zero():
        raise ValueError("cannot decompose zero")
    d = decompose(q.body, seed)
    scale = 1 << q.level
    return PCDecomposition(tuple((f, Fraction(e, scale)) for f, e in d.factors))


def pc_recompose(d: PCDecomposition) -> DyadicRatFunc:
    """Evaluate the product of dyadic powers exactly."""
    level = 0
    for _, e in d.factors:
        level = max(level, e.denominator.bit_length() - 1)
    scale = 1 << level
    num = Poly.one(_F2, _VAR)
    den = Poly.one(_F2, _VAR)
    for f, e in d.factors:
        m = int(e * scale)
        if m > 0:
            num = num * f ** m
        else:
            den = den * f ** (-m)
    return DyadicRatFunc(level, RatFunc(num, den))


def random_dyadic_ratfunc(rng, max_level: int = 3, max_degree: int = 6,
                          nonzero: bool = True) -> DyadicRatFunc:
    num = _t_poly([rng.randrange(2) for _ in range(max_degree + 1)])
    while nonzero and num.is_zero():
        num = _t_poly([rng.randrange(2) for _ in range(max_degree + 1)])
    den = Poly.zero(_F2, _VAR)
    while den.is_zero():
        den = _t_poly([rng.randrange(2) for _ in range(max_degree + 1)])
    return DyadicRatFunc(rng.randint(0, max_level), RatFunc(num, den))
