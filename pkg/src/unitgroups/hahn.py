"""Hahn series with exponents in an ordered value group.

A series is a finite sorted list of (exponent, nonzero coefficient)
terms plus an optional precision cutoff: terms with exponent at or past
the cutoff are unknown.  Results carry the tightest cutoff their inputs
imply; arithmetic on exact series is exact.  Laurent series are the
G = Z case.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .gf import FieldSpec, FqElem
from .ordered import INFINITY, OgElem, ValueGroup
from .valuation import ValuationProbe


def _min_prec(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class HahnSeries:
    __slots__ = ("spec", "group", "terms", "precision")

    def __init__(self, spec: FieldSpec, group: ValueGroup, terms=(), precision=None):
        acc = {}
        for g, c in terms:
            if not isinstance(g, OgElem):
                g = group.make(g)
            elif g.group != group:
                raise ValueError(f"exponent {g} not in {group}")
            if not isinstance(c, FqElem):
                c = FqElem(spec, c % spec.p)
            elif c.spec != spec:
                raise ValueError(f"coefficient {c} not in {spec}")
            if g in acc:
                acc[g] = acc[g] + c
            else:
                acc[g] = c
        if precision is not None and not isinstance(precision, OgElem):
            precision = group.make(precision)
        if precision is not None and precision.group != group:
            raise ValueError(f"precision {precision} not in {group}")
        kept = sorted(
            ((g, c) for g, c in acc.items()
             if c and (precision is None or g < precision)),
            key=lambda gc: gc[0].value,
        )
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "terms", tuple(kept))
        object.__setattr__(self, "precision", precision)

    def __setattr__(self, name, value):
        raise AttributeError("HahnSeries is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, spec, group, precision=None) -> "HahnSeries":
        return cls(spec, group, (), precision)

    @classmethod
    def one(cls, spec, group) -> "HahnSeries":
        return cls(spec, group, ((group.zero(), 1),))

    @classmethod
    def monomial(cls, spec, group, g, coeff=1) -> "HahnSeries":
        return cls(spec, group, ((g, coeff),))

    # -- structure ------------------------------------------------------

    def is_zero(self) -> bool:
        """No known terms; an O(..) tail may still hide nonzero ones."""
        return not self.terms

    def is_exact(self) -> bool:
        return self.precision is None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, HahnSeries):
            return NotImplemented
        return (self.spec == other.spec and self.group == other.group
                and self.terms == other.terms and self.precision == other.precision)

    def __hash__(self):
        return hash((self.spec, self.group, self.terms, self.precision))

    def _low(self):
        """Best lower bound for the valuation; None when truly zero."""
        if self.terms:
            return self.terms[0][0]
        return self.precision

    def valuation(self) -> OgElem:
        if not self.terms:
            raise ValueError("valuation of a series with no known terms")
        return self.terms[0][0]

    def coefficient(self, g) -> FqElem:
        if not isinstance(g, OgElem):
            g = self.group.make(g)
        for e, c in self.terms:
            if e == g:
                return c
        return FqElem(self.spec, 0)

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, HahnSeries):
            if other.spec != self.spec or other.group != self.group:
                raise TypeError("mixed series domains")
            return other
        if isinstance(other, (int, FqElem)):
            return HahnSeries(self.spec, self.group, ((self.group.zero(), other),))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return HahnSeries(self.spec, self.group, self.terms + o.terms,
                          _min_prec(self.precision, o.precision))

    __radd__ = __add__

    def __neg__(self):
        return HahnSeries(self.spec, self.group,
                          tuple((g, -c) for g, c in self.terms), self.precision)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        # an exact zero annihilates even unknown tails
        if not self.terms and self.precision is None:
            return self
        if not o.terms and o.precision is None:
            return o
        cands = []
        if o.precision is not None:
            low = self._low()
            if low is not None:
                cands.append(low + o.precision)
        if self.precision is not None:
            low = o._low()
            if low is not None:
                cands.append(low + self.precision)
        prec = min(cands) if cands else None
        prod = [(ga + gb, ca * cb) for ga, ca in self.terms for gb, cb in o.terms]
        return HahnSeries(self.spec, self.group, prod, prec)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            if len(self.terms) != 1:
                raise ValueError("negative powers need a monomial; use inverse(n_terms)")
            g, c = self.terms[0]
            return HahnSeries.monomial(self.spec, self.group,
                                       g.scale(e), c.inverse() ** (-e))
        result = HahnSeries.one(self.spec, self.group)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def truncate(self, cutoff) -> "HahnSeries":
        """Forget terms at or past the cutoff; tightens precision only."""
        if cutoff is not None and not isinstance(cutoff, OgElem):
            cutoff = self.group.make(cutoff)
        return HahnSeries(self.spec, self.group, self.terms,
                          _min_prec(self.precision, cutoff))

    def shift(self, g) -> "HahnSeries":
        """Exact multiplication by the monomial x^g."""
        if not isinstance(g, OgElem):
            g = self.group.make(g)
        prec = None if self.precision is None else self.precision + g
        return HahnSeries(self.spec, self.group,
                          tuple((e + g, c) for e, c in self.terms), prec)

    def inverse(self, n_terms: int) -> "HahnSeries":
        """Multiplicative inverse by geometric expansion of the unit part.

        Exact for monomials; otherwise the result carries the precision
        reached after n_terms powers of the non-leading part (capped by
        whatever precision the input already had).
        """
        if n_terms < 1:
            raise ValueError("n_terms must be positive")
        if not self.terms:
            raise ZeroDivisionError("inverse of a series with no known terms")
        g, unit = self.unit_split()
        c0 = unit.terms[0][1]
        c0_inv = c0.inverse()
        tail = unit - HahnSeries.monomial(self.spec, self.group, self.group.zero(), c0)
        if not tail.terms and tail.precision is None:
            inv_unit = HahnSeries.monomial(self.spec, self.group,
                                           self.group.zero(), c0_inv)
        else:
            step = tail * (-c0_inv)
            acc = HahnSeries.one(self.spec, self.group)
            power = acc
            for _ in range(n_terms - 1):
                power = power * step
                acc = acc + power
            inv_unit = acc * c0_inv
            if step.terms:
                inv_unit = inv_unit.truncate(step.terms[0][0].scale(n_terms))
        return inv_unit.shift(-g)

    def unit_split(self):
        """(g, U) with g = v(A) and U = A * x^(-g), so v(U) = 0."""
        g = self.valuation()
        return g, self.shift(-g)

    # -- display --------------------------------------------------------

    def _exp_str(self, g: OgElem) -> str:
        return str(g)

    def _term_str(self, g: OgElem, c: FqElem) -> str:
        cs = str(c)
        if g.is_zero():
            return f"({cs})" if " " in cs else cs
        xs = f"x^({self._exp_str(g)})"
        if c == FqElem(self.spec, 1):
            return xs
        if " " in cs or "*" in cs:
            return f"({cs})*{xs}"
        return f"{cs}*{xs}"

    def __str__(self):
        parts = [self._term_str(g, c) for g, c in self.terms]
        if not parts:
            parts = [] if self.precision is not None else ["0"]
        if self.precision is not None:
            parts.append(f"O(x^({self._exp_str(self.precision)}))")
        return " + ".join(parts)

    def __repr__(self):
        return f"<{self} over {self.spec}, exponents in {self.group}>"


def hs_section(spec: FieldSpec, group: ValueGroup, g) -> HahnSeries:
    """The canonical section g -> x^g of the Hahn valuation."""
    if not isinstance(g, OgElem):
        g = group.make(g)
    return HahnSeries.monomial(spec, group, g)


def _exp_sampler(group: ValueGroup):
    if group.kind == "int":
        return lambda rng: group.make(rng.randint(-8, 8))
    if group.kind == "lex":
        return lambda rng: group.make(
            tuple(rng.randint(-5, 5) for _ in range(group.arity)))
    return lambda rng: group.make(
        Fraction(rng.randint(-24, 24), 2 ** rng.randint(0, 3)))


def random_series(spec: FieldSpec, group: ValueGroup, rng,
                  max_terms: int = 4, nonzero: bool = True) -> HahnSeries:
    """Random exact series with a handful of terms."""
    exps = _exp_sampler(group)
    while True:
        n = rng.randint(1 if nonzero else 0, max_terms)
        terms = [(exps(rng), rng.randrange(1, spec.q)) for _ in range(n)]
        s = HahnSeries(spec, group, terms)
        if s.terms or not nonzero:
            return s


def hs_probe(spec: FieldSpec, group: ValueGroup) -> ValuationProbe:
    """Valuation probe for K((G)) with the min-support valuation."""

    def value(a: HahnSeries):
        return INFINITY if a.is_zero() else a.valuation()

    def sample(rng: random.Random) -> HahnSeries:
        return random_series(spec, group, rng)

    return ValuationProbe(f"hahn-{spec}-{group}", group, value, sample)
