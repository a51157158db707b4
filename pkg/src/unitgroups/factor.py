"""Polynomial factorization over finite fields.

Pipeline: squarefree decomposition (with p-th root descent for
inseparable parts), distinct-degree splitting by Frobenius powers, then
randomized equal-degree splitting (trace maps in characteristic 2, the
half-power trick otherwise).  Irreducibility uses Rabin's test.

Randomness is drawn from ``random.Random(seed)`` so results are
reproducible; the returned factor list is sorted by (degree, base-q
code) and does not depend on the seed.
"""

from __future__ import annotations

import random

from ._engines import engine_for
from .gf import FqElem
from .poly import Poly
from .primes import factor_integer


def _sqf_list(eng, f):
    """Squarefree decomposition of a monic rep; [(part, multiplicity)]."""
    out = []
    n = 1
    p = eng.p
    cur = f
    while True:
        dv = eng.derivative(cur)
        if not eng.is_zero(dv):
            g = eng.gcd(cur, dv)
            h = eng.quo(cur, g)
            i = 1
            while not eng.is_one(h):
                gh = eng.gcd(g, h)
                stripped = eng.quo(h, gh)
                if eng.deg(stripped) > 0:
                    out.append((stripped, i * n))
                g = eng.quo(g, gh)
                h = gh
                i += 1
            if eng.is_one(g):
                break
            cur = g
        # remaining part is a p-th power
        cur = eng.pth_root_poly(cur)
        n *= p
    return out


def _ddf(eng, f):
    """Distinct-degree split of a monic squarefree rep; [(product, degree)]."""
    out = []
    cur = f
    h = eng.rem(eng.x(), f)
    d = 1
    while eng.deg(cur) >= 2 * d:
        h = eng.powmod_q(h, cur)
        xm = eng.rem(eng.x(), cur)
        g = eng.gcd(eng.sub(h, xm), cur)
        if eng.deg(g) > 0:
            out.append((g, d))
            cur = eng.quo(cur, g)
            h = eng.rem(h, cur)
        d += 1
    if eng.deg(cur) > 0:
        out.append((cur, eng.deg(cur)))
    return out


def _edf(eng, f, d, rng):
    """Split a monic product of degree-d irreducibles into its factors."""
    out = []
    stack = [f]
    half = (eng.q ** d - 1) // 2 if eng.q % 2 else 0
    frob_steps = eng.n * d if eng.p == 2 else 0
    while stack:
        g = stack.pop()
        dg = eng.deg(g)
        if dg == d:
            out.append(g)
            continue
        r = eng.random_below(dg, rng)
        if eng.p == 2:
            # trace of r over GF(2) inside GF(q^d): sum of 2^i-th powers
            t = eng.rem(r, g)
            acc = t
            for _ in range(frob_steps - 1):
                t = eng.rem(eng.sqr(t), g)
                acc = eng.add(acc, t)
            h = eng.gcd(acc, g)
        else:
            t = eng.powmod(r, half, g)
            h = eng.gcd(eng.sub_one(t), g)
        if 0 < eng.deg(h) < dg:
            stack.append(h)
            stack.append(eng.quo(g, h))
        else:
            stack.append(g)
    return out


def _rabin_irreducible(eng, f):
    n = eng.deg(f)
    if n == 1:
        return True
    xm = eng.rem(eng.x(), f)
    h = xm
    for _ in range(n):
        h = eng.powmod_q(h, f)
    if not eng.equal(h, xm):
        return False
    for r, _ in factor_integer(n).factors:
        h = xm
        for _ in range(n // r):
            h = eng.powmod_q(h, f)
        if not eng.is_one(eng.gcd(eng.sub(h, xm), f)):
            return False
    return True


def is_irreducible(f: Poly) -> bool:
    """Rabin irreducibility test; constants and zero are rejected."""
    if f.degree < 1:
        raise ValueError("irreducibility is defined for degree >= 1")
    eng = engine_for(f.spec)
    return _rabin_irreducible(eng, eng.from_coeffs(f.monic().coeffs))


def factor_poly(f: Poly, seed: int = 0):
    """Factor into monic irreducibles over the coefficient field.

    Returns ``(unit, factors)`` where ``unit`` is the leading
    coefficient and ``factors`` is a tuple of ``(Poly, multiplicity)``
    pairs sorted by (degree, base-q code).  The product of the unit and
    the factor powers reconstructs the input exactly.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    spec = f.spec
    unit = f.lc
    if f.is_constant():
        return unit, ()
    eng = engine_for(spec)
    rng = random.Random(seed)
    out = []
    for part, mult in _sqf_list(eng, eng.from_coeffs(f.monic().coeffs)):
        for prod, d in _ddf(eng, part):
            if eng.deg(prod) == d:
                pieces = [prod]
            else:
                pieces = _edf(eng, prod, d, rng)
            for rep in pieces:
                out.append((Poly(spec, eng.to_coeffs(rep), f.var), mult))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].int_code))
    return unit, tuple(out)


def product_of_factors(unit: FqElem, factors, var: str = "x") -> Poly:
    """Rebuild the polynomial from ``factor_poly`` output."""
    if factors:
        var = factors[0][0].var
    acc = Poly.constant(unit.spec, unit, var)
    for g, m in factors:
        acc = acc * g ** m
    return acc
