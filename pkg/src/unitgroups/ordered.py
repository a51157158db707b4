"""Ordered abelian value groups: Z, Z^k under lexicographic order, Z[1/2].

Elements are immutable ``OgElem`` values tagged with their group, so
mixed-group arithmetic fails loudly.  ``INFINITY`` is the conventional
value of zero field elements: it absorbs addition and exceeds every
group element.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class ValueGroup:
    """Descriptor for one of the three supported groups.

    kind "int" is Z; "lex" is Z^arity ordered lexicographically;
    "dyadic" is Z[1/2] with the rational order.
    """

    kind: str
    arity: int = 1

    def __post_init__(self):
        if self.kind not in ("int", "lex", "dyadic"):
            raise ValueError(f"unknown value-group kind {self.kind!r}")
        if self.kind == "lex" and self.arity < 1:
            raise ValueError("lex group needs arity >= 1")
        if self.kind != "lex" and self.arity != 1:
            raise ValueError("arity applies only to lex groups")

    @property
    def is_free_finite_rank(self) -> bool:
        return self.kind in ("int", "lex")

    @property
    def rank(self) -> int:
        return self.arity if self.kind == "lex" else 1

    def zero(self) -> "OgElem":
        if self.kind == "lex":
            return OgElem(self, (0,) * self.arity)
        if self.kind == "dyadic":
            return OgElem(self, Fraction(0))
        return OgElem(self, 0)

    def make(self, value) -> "OgElem":
        """Coerce an int, tuple, or Fraction into this group."""
        if self.kind == "int":
            if isinstance(value, int):
                return OgElem(self, value)
        elif self.kind == "lex":
            if isinstance(value, (tuple, list)) and len(value) == self.arity \
                    and all(isinstance(v, int) for v in value):
                return OgElem(self, tuple(value))
        else:
            if isinstance(value, (int, Fraction)):
                return OgElem(self, Fraction(value))
        raise ValueError(f"{value!r} is not an element of {self}")

    def basis(self):
        """The standard free basis (int and lex kinds only)."""
        if self.kind == "int":
            return (OgElem(self, 1),)
        if self.kind == "lex":
            return tuple(
                OgElem(self, tuple(1 if j == i else 0 for j in range(self.arity)))
                for i in range(self.arity)
            )
        raise ValueError("Z[1/2] is not free of finite rank; no standard basis")

    def __str__(self) -> str:
        if self.kind == "int":
            return "Z"
        if self.kind == "lex":
            return f"Z^{self.arity}"
        return "Z[1/2]"


INT_GROUP = ValueGroup("int")
DYADIC_GROUP = ValueGroup("dyadic")


def lex_group(arity: int) -> ValueGroup:
    return ValueGroup("lex", arity)


def _is_dyadic(fr: Fraction) -> bool:
    d = fr.denominator
    return d & (d - 1) == 0


@dataclass(frozen=True)
class OgElem:
    group: ValueGroup
    value: object

    def __post_init__(self):
        k = self.group.kind
        if k == "int":
            if not isinstance(self.value, int):
                raise ValueError("Z element must be an int")
        elif k == "lex":
            v = self.value
            if not (isinstance(v, tuple) and len(v) == self.group.arity
                    and all(isinstance(c, int) for c in v)):
                raise ValueError(f"needs an int tuple of length {self.group.arity}")
        else:
            v = self.value
            if not isinstance(v, Fraction) or not _is_dyadic(v):
                raise ValueError("Z[1/2] element must be a Fraction with 2-power denominator")

    def _check(self, other) -> "OgElem":
        if not isinstance(other, OgElem) or other.group != self.group:
            raise TypeError(f"mixed value groups: {self} and {other}")
        return other

    def __add__(self, other):
        o = self._check(other)
        if self.group.kind == "lex":
            return OgElem(self.group, tuple(a + b for a, b in zip(self.value, o.value)))
        return OgElem(self.group, self.value + o.value)

    def __neg__(self) -> "OgElem":
        if self.group.kind == "lex":
            return OgElem(self.group, tuple(-a for a in self.value))
        return OgElem(self.group, -self.value)

    def __sub__(self, other):
        return self + (-self._check(other))

    def scale(self, n: int) -> "OgElem":
        """Integer multiple n*g (the Z-module action)."""
        if not isinstance(n, int):
            raise TypeError("scale factor must be an int")
        if self.group.kind == "lex":
            return OgElem(self.group, tuple(n * a for a in self.value))
        return OgElem(self.group, n * self.value)

    def is_zero(self) -> bool:
        return self == self.group.zero()

    def __lt__(self, other):
        if other is INFINITY:
            return True
        o = self._check(other)
        return self.value < o.value

    def __le__(self, other):
        return self == other or self < other

    def __gt__(self, other):
        if other is INFINITY:
            return False
        o = self._check(other)
        return self.value > o.value

    def __ge__(self, other):
        return self == other or self > other

    @property
    def dyadic_parts(self):
        """(numerator, k) with value = numerator / 2^k, reduced."""
        if self.group.kind != "dyadic":
            raise ValueError("not a dyadic element")
        return self.value.numerator, self.value.denominator.bit_length() - 1

    def __str__(self) -> str:
        if self.group.kind == "lex":
            return "(" + ",".join(str(a) for a in self.value) + ")"
        return str(self.value)


class _Infinity:
    """v(0): greater than every group element, absorbing under +."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __add__(self, other):
        if isinstance(other, (OgElem, _Infinity)):
            return self
        return NotImplemented

    __radd__ = __add__

    def __lt__(self, other):
        if isinstance(other, (OgElem, _Infinity)):
            return False
        return NotImplemented

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        if isinstance(other, OgElem):
            return True
        if isinstance(other, _Infinity):
            return False
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, (OgElem, _Infinity)):
            return True
        return NotImplemented

    def __str__(self):
        return "infinity"

    def __repr__(self):
        return "INFINITY"


INFINITY = _Infinity()
