"""Rational functions over a finite field and their unit-group structure.

A nonzero rational function factors uniquely as a field constant times a
product of integer powers of monic irreducibles.  ``decompose`` /
``recompose`` realize both directions of that correspondence, and
``multiplicative_rank`` measures the free rank of a finite set of
rational functions inside the exponent lattice, by fraction-free
integer elimination.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .factor import factor_poly, is_irreducible
from .gf import FieldSpec, FqElem
from .poly import Poly, poly_gcd

_BARE_RE = re.compile(r"^[A-Za-z0-9^]+$")


def _side_str(p: Poly) -> str:
    s = str(p)
    return s if _BARE_RE.match(s) else f"({s})"


class RatFunc:
    """Reduced fraction of polynomials; denominator monic, zero is 0/1."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        if num.spec != den.spec:
            raise TypeError(f"mixed fields: {num.spec} and {den.spec}")
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            den = Poly.one(num.spec, num.var)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
            if not den.is_monic():
                lead_inv = den.lc.inverse()
                num, den = num * lead_inv, den * lead_inv
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def zero(cls, spec: FieldSpec, var: str = "x") -> "RatFunc":
        return cls(Poly.zero(spec, var), Poly.one(spec, var))

    @classmethod
    def one(cls, spec: FieldSpec, var: str = "x") -> "RatFunc":
        return cls(Poly.one(spec, var), Poly.one(spec, var))

    @classmethod
    def from_poly(cls, p: Poly) -> "RatFunc":
        return cls(p, Poly.one(p.spec, p.var))

    @property
    def spec(self) -> FieldSpec:
        return self.num.spec

    @property
    def var(self) -> str:
        return self.num.var

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_poly(self) -> bool:
        return self.den.is_one()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_one()

    def constant_value(self) -> FqElem:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.num[0]

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (Poly, int, FqElem)):
            o = self._coerce(other)
            return o is not NotImplemented and self == o
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.spec != self.spec:
                raise TypeError(f"mixed fields: {self.spec} and {other.spec}")
            return other
        if isinstance(other, Poly):
            return RatFunc.from_poly(other)
        if isinstance(other, (int, FqElem)):
            return RatFunc.from_poly(Poly.constant(self.spec, other, self.var))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else o * self.inverse()

    def __pow__(self, e: int) -> "RatFunc":
        if not isinstance(e, int):
            return NotImplemented
        base = self if e >= 0 else self.inverse()
        return RatFunc(base.num ** abs(e), base.den ** abs(e))

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        return f"{_side_str(self.num)}/{_side_str(self.den)}"

    def __repr__(self) -> str:
        return f"<{self} over {self.spec}>"


def rf_make(num: Poly, den: Poly) -> RatFunc:
    return RatFunc(num, den)


def random_ratfunc(spec: FieldSpec, max_degree: int, rng, var: str = "x",
                   nonzero: bool = True) -> RatFunc:
    """Random reduced fraction with numerator/denominator degree bounds."""
    num = Poly(spec, [rng.randrange(spec.q) for _ in range(max_degree + 1)], var)
    if nonzero:
        while num.is_zero():
            num = Poly(spec, [rng.randrange(spec.q) for _ in range(max_degree + 1)], var)
    den = Poly.zero(spec, var)
    while den.is_zero():
        den = Poly(spec, [rng.randrange(spec.q) for _ in range(max_degree + 1)], var)
    return RatFunc(num, den)


@dataclass(frozen=True)
class UnitDecomposition:
    """constant * prod(factor^exp): one side of the unit-group isomorphism.

    Factors are monic of positive degree with nonzero integer exponents,
    strictly sorted by (degree, base-q code); ``decompose`` additionally
    guarantees each factor is irreducible.
    """

    constant: FqElem
    factors: tuple

    def __post_init__(self):
        if not self.constant:
            raise ValueError("decomposition constant must be nonzero")
        spec = self.constant.spec
        last_key = None
        for f, e in self.factors:
            if not isinstance(f, Poly) or f.spec != spec:
                raise ValueError("factor field mismatch")
            if f.degree < 1 or not f.is_monic():
                raise ValueError(f"factor {f} must be monic of positive degree")
            if not isinstance(e, int) or e == 0:
                raise ValueError(f"exponent for {f} must be a nonzero integer")
            key = (f.degree, f.int_code)
            if last_key is not None and key <= last_key:
                raise ValueError("factors must be strictly sorted canonically")
            last_key = key

    @property
    def spec(self) -> FieldSpec:
        return self.constant.spec

    def exponent_of(self, f: Poly) -> int:
        for g, e in self.factors:
            if g == f:
                return e
        return 0

    def combine(self, other: "UnitDecomposition") -> "UnitDecomposition":
        """Pointwise product: multiply constants, add exponents."""
        if other.spec != self.spec:
            raise TypeError("mixed fields")
        exps = {}
        for f, e in self.factors:
            exps[f] = exps.get(f, 0) + e
        for f, e in other.factors:
            exps[f] = exps.get(f, 0) + e
        kept = sorted(
            ((f, e) for f, e in exps.items() if e != 0),
            key=lambda fe: (fe[0].degree, fe[0].int_code),
        )
        return UnitDecomposition(self.constant * other.constant, tuple(kept))

    def to_json_dict(self) -> dict:
        # machine form is whitespace-free; the parser accepts either
        return {
            "constant": str(self.constant).replace(" ", ""),
            "factors": [{"poly": str(f).replace(" ", ""), "exp": e}
                        for f, e in self.factors],
        }

    def __str__(self) -> str:
        parts = [str(self.constant)]
        for f, e in self.factors:
            fs = _side_str(f)
            parts.append(fs if e == 1 else f"{fs}^{e}")
        return " * ".join(parts)


def decompose(q: RatFunc, seed: int = 0) -> UnitDecomposition:
    """Write a nonzero rational function as constant * prod(irreducible^exp)."""
    if q.is_zero():
        raise ValueError("cannot decompose zero")
    unit_num, num_factors = factor_poly(q.num, seed)
    _, den_factors = factor_poly(q.den, seed)
    exps = {f: e for f, e in num_factors}
    for f, e in den_factors:
        exps[f] = exps.get(f, 0) - e
    kept = sorted(
        ((f, e) for f, e in exps.items() if e != 0),
        key=lambda fe: (fe[0].degree, fe[0].int_code),
    )
    return UnitDecomposition(unit_num, tuple(kept))


def recompose(d: UnitDecomposition) -> RatFunc:
    """Inverse of ``decompose``: evaluate the product exactly."""
    spec = d.spec
    num = Poly.constant(spec, d.constant)
    den = Poly.one(spec)
    for f, e in d.factors:
        if e > 0:
            num = num * f ** e
        else:
            den = den * f ** (-e)
    return RatFunc(num, den)


def valuation_at(q: RatFunc, p: Poly) -> int:
    """Order of vanishing of q at the place p (monic irreducible)."""
    if q.is_zero():
        raise ValueError("valuation of zero is not a group element")
    if not p.is_monic() or not is_irreducible(p):
        raise ValueError(f"{p} is not monic irreducible")

    def _count(f: Poly) -> int:
        k = 0
        while f.degree >= p.degree:
            quot, rem = divmod(f, p)
            if not rem.is_zero():
                break
            f = quot
            k += 1
        return k

    return _count(q.num) - _count(q.den)


@dataclass(frozen=True)
class ExponentMatrix:
    """Integer exponent vectors of several elements over shared columns."""

    columns: tuple
    rows: tuple

    def __post_init__(self):
        ncols = len(self.columns)
        for r in self.rows:
            if len(r) != ncols:
                raise ValueError("ragged exponent matrix")
        for j in range(ncols):
            if all(r[j] == 0 for r in self.rows):
                raise ValueError(f"column {self.columns[j]} is identically zero")

    @classmethod
    def from_decompositions(cls, decomps) -> "ExponentMatrix":
        cols = sorted(
            {f for d in decomps for f, _ in d.factors},
            key=lambda f: (f.degree, f.int_code),
        )
        index = {f: j for j, f in enumerate(cols)}
        rows = []
        for d in decomps:
            row = [0] * len(cols)
            for f, e in d.factors:
                row[index[f]] = e
            rows.append(tuple(row))
        return cls(tuple(cols), tuple(rows))


def integer_rank(rows) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((i for i in range(rank, nrows) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for i in range(rank + 1, nrows):
            for j in range(col + 1, ncols):
                m[i][j] = (m[i][j] * m[rank][col] - m[i][col] * m[rank][j]) // prev
            m[i][col] = 0
        prev = m[rank][col]
        rank += 1
        if rank == nrows:
            break
    return rank


def multiplicative_rank(elems, seed: int = 0) -> int:
    """Free rank of the subgroup generated by the given nonzero elements.

    Constants are torsion and contribute nothing; everything else is
    measured through its irreducible-factor exponent vector.
    """
    decomps = []
    for q in elems:
        if q.is_zero():
            raise ValueError("zero element has no place in the unit group")
        decomps.append(decompose(q, seed))
    rows = [d for d in decomps if d.factors]
    if not rows:
        return 0
    mat = ExponentMatrix.from_decompositions(rows)
    return integer_rank(mat.rows)
