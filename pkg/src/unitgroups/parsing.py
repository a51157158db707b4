"""Text input for every object the command line accepts.

One tokenizer feeds several small recursive-descent parsers.  The
arithmetic grammar is shared (sums of products of signed powers, with
parentheses); what differs per object kind is the value domain and what
an exponent may look like, so those are pluggable.

Errors raise ParseError, a ValueError subclass, so malformed input can
be told apart from valid input that fails a mathematical requirement.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .extension import ExtElem, SimpleExtension, _ymul, _yadd, _yneg, ext_make
from .gf import FieldSpec, FqElem, field_make
from .hahn import HahnSeries
from .ordered import DYADIC_GROUP, INT_GROUP, OgElem, ValueGroup, lex_group
from .perfect import DyadicRatFunc, frobenius_inv
from .poly import Poly
from .ratfunc import RatFunc


class ParseError(ValueError):
    """Input text does not match the expected grammar."""


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^(),\[\]]))")


def _tokenize(text: str):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            rest = text[pos:].lstrip()
            if not rest:
                break
            raise ParseError(f"unexpected character {rest[0]!r} in {text!r}")
        pos = m.end()
        if m.group(1) is not None:
            out.append(("int", m.group(1)))
        elif m.group(2) is not None:
            out.append(("name", m.group(2)))
        else:
            op = m.group(3)
            out.append(("op", "^" if op == "**" else op))
    return out


class _Cursor:
    __slots__ = ("toks", "i", "text")

    def __init__(self, toks, text):
        self.toks = toks
        self.i = 0
        self.text = text

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def at_op(self, *ops) -> bool:
        kind, val = self.peek()
        return kind == "op" and val in ops

    def expect_op(self, op):
        kind, val = self.next()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r} in {self.text!r}")

    def done(self) -> bool:
        return self.i >= len(self.toks)

    def require_done(self):
        if not self.done():
            kind, val = self.peek()
            raise ParseError(f"trailing input {val!r} in {self.text!r}")


# ---- shared arithmetic grammar over a pluggable value domain ----
#
# expr   := term (('+'|'-') term)*
# term   := factor (('*'|'/') factor)*
# factor := ('-'|'+')* power
# power  := primary ('^' exponent)?
# primary:= INT | NAME | '(' expr ')'

def _parse_expr(cur, sem):
    v = _parse_term(cur, sem)
    while cur.at_op("+", "-"):
        _, op = cur.next()
        rhs = _parse_term(cur, sem)
        v = sem.add(v, rhs) if op == "+" else sem.add(v, sem.neg(rhs))
    return v


def _parse_term(cur, sem):
    v = _parse_factor(cur, sem)
    while cur.at_op("*", "/"):
        _, op = cur.next()
        rhs = _parse_factor(cur, sem)
        v = sem.mul(v, rhs) if op == "*" else sem.div(v, rhs)
    return v


def _parse_factor(cur, sem):
    negate = False
    while cur.at_op("-", "+"):
        _, op = cur.next()
        if op == "-":
            negate = not negate
    v = _parse_power(cur, sem)
    return sem.neg(v) if negate else v


def _parse_power(cur, sem):
    v = _parse_primary(cur, sem)
    if cur.at_op("^"):
        cur.next()
        e = sem.parse_exponent(cur)
        v = sem.pow(v, e)
    return v


def _parse_primary(cur, sem):
    kind, val = cur.peek()
    if kind == "int":
        cur.next()
        return sem.from_int(int(val))
    if kind == "name":
        cur.next()
        return sem.from_name(val)
    if cur.at_op("("):
        cur.next()
        v = _parse_expr(cur, sem)
        cur.expect_op(")")
        return v
    if cur.at_op("-", "+"):
        return _parse_factor(cur, sem)
    raise ParseError(f"expected a value in {cur.text!r}")


def _parse_int_exponent(cur) -> int:
    """Integer exponent, optionally signed, optionally parenthesized."""
    wrapped = cur.at_op("(")
    if wrapped:
        cur.next()
    sign = 1
    while cur.at_op("-", "+"):
        _, op = cur.next()
        if op == "-":
            sign = -sign
    kind, val = cur.next()
    if kind != "int":
        raise ParseError(f"expected an integer exponent in {cur.text!r}")
    if wrapped:
        cur.expect_op(")")
    return sign * int(val)


class _RatSemantics:
    """Values are RatFunc over a fixed field and variable name."""

    def __init__(self, spec: FieldSpec, var: str):
        self.spec = spec
        self.var = var

    def from_int(self, n: int) -> RatFunc:
        return RatFunc.from_poly(Poly.constant(self.spec, n, self.var))

    def from_name(self, name: str) -> RatFunc:
        if name == self.var:
            return RatFunc.from_poly(Poly.x(self.spec, self.var))
        if name == "a" and self.spec.n > 1:
            gen = FqElem(self.spec, self.spec.p)
            return RatFunc.from_poly(Poly.constant(self.spec, gen, self.var))
        raise ParseError(f"unknown name {name!r} over {self.spec}")

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        return a / b

    def pow(self, a, e):
        return a ** e

    parse_exponent = staticmethod(_parse_int_exponent)


class _DyadicSemantics:
    """Values live in the perfect closure of GF(2)(t); dyadic exponents."""

    def from_int(self, n: int) -> DyadicRatFunc:
        return DyadicRatFunc.zero() if n % 2 == 0 else DyadicRatFunc.one()

    def from_name(self, name: str) -> DyadicRatFunc:
        if name == "t":
            return DyadicRatFunc.monomial(Fraction(1))
        raise ParseError(f"unknown name {name!r} in the perfect closure")

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return a  # characteristic 2

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        return a / b

    def pow(self, a, e: Fraction):
        k = e.denominator.bit_length() - 1
        for _ in range(k):
            a = frobenius_inv(a)
        return a ** e.numerator

    def parse_exponent(self, cur) -> Fraction:
        wrapped = cur.at_op("(")
        if wrapped:
            cur.next()
        sign = 1
        while cur.at_op("-", "+"):
            _, op = cur.next()
            if op == "-":
                sign = -sign
        kind, val = cur.next()
        if kind != "int":
            raise ParseError(f"expected an exponent in {cur.text!r}")
        num = int(val)
        den = 1
        if cur.at_op("/"):
            cur.next()
            kind, val = cur.next()
            if kind != "int":
                raise ParseError(f"expected a denominator in {cur.text!r}")
            den = int(val)
        if wrapped:
            cur.expect_op(")")
        e = Fraction(sign * num, den)
        if e.denominator & (e.denominator - 1):
            raise ParseError(f"exponent {e} does not have a power-of-two "
                             f"denominator")
        return e


class _YPolySemantics:
    """Polynomials in the extension variable with RatFunc coefficients,
    kept as ascending tuples (no modulus reduction here)."""

    def __init__(self, spec: FieldSpec, base_var: str, ext_var: str):
        self.spec = spec
        self.base_var = base_var
        self.ext_var = ext_var
        self.rat = _RatSemantics(spec, base_var)

    def _const(self, rf: RatFunc):
        return (rf,) if not rf.is_zero() else ()

    def from_int(self, n: int):
        return self._const(self.rat.from_int(n))

    def from_name(self, name: str):
        if name == self.ext_var:
            z = RatFunc.zero(self.spec, self.base_var)
            return (z, RatFunc.one(self.spec, self.base_var))
        return self._const(self.rat.from_name(name))

    def add(self, a, b):
        return _yadd(a, b)

    def neg(self, a):
        return _yneg(a)

    def mul(self, a, b):
        return _ymul(a, b, RatFunc.zero(self.spec, self.base_var))

    def div(self, a, b):
        if len(b) > 1:
            raise ValueError(f"cannot divide by {self.ext_var}-polynomials")
        if not b:
            raise ZeroDivisionError("division by zero")
        return tuple(c / b[0] for c in a)

    def pow(self, a, e: int):
        if e < 0:
            if len(a) > 1:
                raise ValueError(f"cannot invert {self.ext_var}-polynomials")
            if not a:
                raise ZeroDivisionError("zero to a negative power")
            return self._const(a[0] ** e)
        out = self.from_int(1)
        base = a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    parse_exponent = staticmethod(_parse_int_exponent)


def _run(text: str, sem):
    cur = _Cursor(_tokenize(text), text)
    if cur.done():
        raise ParseError(f"empty input {text!r}")
    v = _parse_expr(cur, sem)
    cur.require_done()
    return v


# ---- public entry points ----

_FIELD_RE = re.compile(r"^\s*GF\(\s*(\d+)\s*(?:\^\s*(\d+)\s*)?\)\s*$")


def parse_field(text: str) -> FieldSpec:
    m = _FIELD_RE.match(text)
    if not m:
        raise ParseError(f"expected GF(p) or GF(p^n), got {text!r}")
    p = int(m.group(1))
    n = int(m.group(2)) if m.group(2) else 1
    try:
        return field_make(p, n)
    except ValueError as exc:
        raise ParseError(f"bad field {text.strip()!r}: {exc}") from None


def parse_ratfunc(spec: FieldSpec, text: str, var: str = "x") -> RatFunc:
    return _run(text, _RatSemantics(spec, var))


def parse_poly(spec: FieldSpec, text: str, var: str = "x") -> Poly:
    rf = parse_ratfunc(spec, text, var)
    if not rf.is_poly():
        raise ParseError(f"{text!r} is not a polynomial "
                         f"(denominator {rf.den})")
    return rf.num


def parse_fqelem(spec: FieldSpec, text: str) -> FqElem:
    rf = parse_ratfunc(spec, text, "x")
    if not rf.is_constant():
        raise ParseError(f"{text!r} is not a field constant")
    return rf.constant_value()


def parse_group(text: str) -> ValueGroup:
    s = re.sub(r"\s+", "", text)
    if s == "Z":
        return INT_GROUP
    if s == "Z[1/2]":
        return DYADIC_GROUP
    m = re.match(r"^Z\^(\d+)$", s)
    if m:
        k = int(m.group(1))
        if k < 1:
            raise ParseError(f"bad lex arity in {text!r}")
        return lex_group(k)
    raise ParseError(f"expected Z, Z^k, or Z[1/2], got {text!r}")


def parse_og_elem(group: ValueGroup, text: str) -> OgElem:
    cur = _Cursor(_tokenize(text), text)
    val = _parse_raw_exponent(cur)
    cur.require_done()
    try:
        return group.make(val)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _parse_raw_exponent(cur):
    """An exponent literal: signed int, fraction n/2^k, or int tuple.

    Extra parentheses are tolerated, so x^((1,-2)) and x^(1,-2) read the
    same way.
    """
    if cur.at_op("("):
        cur.next()
        inner = _parse_raw_exponent(cur)
        if cur.at_op(","):
            items = [inner]
            while cur.at_op(","):
                cur.next()
                items.append(_parse_raw_exponent(cur))
            cur.expect_op(")")
            flat = []
            for it in items:
                if not isinstance(it, int):
                    raise ParseError(f"tuple entries must be integers "
                                     f"in {cur.text!r}")
                flat.append(it)
            return tuple(flat)
        cur.expect_op(")")
        return inner
    sign = 1
    while cur.at_op("-", "+"):
        _, op = cur.next()
        if op == "-":
            sign = -sign
    kind, val = cur.next()
    if kind != "int":
        raise ParseError(f"expected an exponent in {cur.text!r}")
    num = sign * int(val)
    if cur.at_op("/"):
        cur.next()
        ksign = 1
        while cur.at_op("-", "+"):
            _, op = cur.next()
            if op == "-":
                ksign = -ksign
        kind, val = cur.next()
        if kind != "int":
            raise ParseError(f"expected a denominator in {cur.text!r}")
        return Fraction(num, ksign * int(val))
    return num


def parse_hahn(spec: FieldSpec, group: ValueGroup, text: str,
               var: str = "x") -> HahnSeries:
    """Series literal: signed terms `c*x^(e)`, `x^(e)`, or `c`, with an
    optional trailing `+ O(x^(e))` precision marker."""
    cur = _Cursor(_tokenize(text), text)
    if cur.done():
        raise ParseError(f"empty input {text!r}")
    sem = _RatSemantics(spec, var)
    terms = []
    precision = None
    negate = False
    while True:
        kind, val = cur.peek()
        if kind == "name" and val == "O":
            if negate:
                raise ParseError("precision marker cannot be negated")
            cur.next()
            cur.expect_op("(")
            kind, val = cur.next()
            if kind != "name" or val != var:
                raise ParseError(f"expected {var!r} inside O(...)")
            cur.expect_op("^")
            precision = _parse_raw_exponent(cur)
            cur.expect_op(")")
            cur.require_done()
            break
        exp, coeff = _parse_hahn_term(cur, sem, group, var)
        if negate:
            coeff = -coeff
        terms.append((exp, coeff))
        if cur.done():
            break
        kind, val = cur.next()
        if kind != "op" or val not in "+-":
            raise ParseError(f"expected + or - between terms in {text!r}")
        negate = val == "-"
    try:
        return HahnSeries(spec, group, terms, precision)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _parse_hahn_term(cur, sem, group, var):
    kind, val = cur.peek()
    coeff = None
    if not (kind == "name" and val == var):
        v = _parse_primary(cur, sem)
        if cur.at_op("^"):
            cur.next()
            v = v ** _parse_int_exponent(cur)
        while cur.at_op("/"):
            cur.next()
            v = v / _parse_primary(cur, sem)
        if not v.is_constant():
            raise ParseError(f"series coefficients must be constants, "
                             f"got {v}")
        coeff = v.constant_value()
        if not cur.at_op("*"):
            return group.zero(), coeff
        cur.next()
        kind, val = cur.next()
        if kind != "name" or val != var:
            raise ParseError(f"expected {var!r} after * in {cur.text!r}")
    else:
        cur.next()
        coeff = FqElem(sem.spec, 1)
    if cur.at_op("^"):
        cur.next()
        raw = _parse_raw_exponent(cur)
    else:
        if group.kind == "lex":
            raise ParseError(f"bare {var!r} needs an explicit exponent "
                             f"over {group}")
        raw = 1
    try:
        exp = group.make(raw)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return exp, coeff


def parse_dyadic_ratfunc(text: str) -> DyadicRatFunc:
    return _run(text, _DyadicSemantics())


_EXT_RE = re.compile(
    r"^\s*(GF\(\s*\d+\s*(?:\^\s*\d+\s*)?\))\s*"
    r"\(\s*([A-Za-z_][A-Za-z_0-9]*)\s*\)\s*"
    r"\[\s*([A-Za-z_][A-Za-z_0-9]*)\s*\]\s*/\s*\((.+)\)\s*$"
)


def parse_extension(text: str) -> SimpleExtension:
    """Descriptor like GF(2)(t)[y]/(y^2 + y + t)."""
    m = _EXT_RE.match(text)
    if not m:
        raise ParseError(f"expected GF(q)(t)[y]/(modulus), got {text!r}")
    spec = parse_field(m.group(1))
    base_var, ext_var = m.group(2), m.group(3)
    if base_var == ext_var:
        raise ParseError("base and extension variables must differ")
    coeffs = _run(m.group(4), _YPolySemantics(spec, base_var, ext_var))
    # grammar is satisfied at this point; ext_make failures (non-monic,
    # not squarefree, degree < 2) are domain errors and stay ValueError
    return ext_make(spec, coeffs, base_var, ext_var)


def parse_ext_elem(ext: SimpleExtension, text: str) -> ExtElem:
    coeffs = _run(text, _YPolySemantics(ext.spec, ext.base_var, ext.ext_var))
    return ExtElem(ext, coeffs)
