"""Valuations, axiom probes, and sections on free value groups.

A probe packages a value map and a sampler so the two valuation axioms
(v(xy) = v(x) + v(y), v(x+y) >= min(v(x), v(y))) can be checked on
seeded random inputs of any field implementing ``*`` and ``+``.
Sections are homomorphic right inverses determined by images of a free
basis; they split the unit group as value group x valuation kernel.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .ordered import INFINITY, OgElem, ValueGroup
from .primes import is_prime


def padic_valuation(r, p: int) -> int:
    """Exponent of p in the rational r (r nonzero, p prime)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    r = Fraction(r)
    if r == 0:
        raise ValueError("zero has no finite valuation")

    def count(n: int) -> int:
        k = 0
        while n % p == 0:
            n //= p
            k += 1
        return k

    return count(abs(r.numerator)) - count(r.denominator)


@dataclass(frozen=True)
class ValuationProbe:
    """A named valuation with a sampler of nonzero field elements."""

    name: str
    group: ValueGroup
    value: object   # callable: field element -> OgElem | INFINITY
    sample: object  # callable: rng -> nonzero field element


@dataclass(frozen=True)
class Pass:
    trials: int

    @property
    def passed(self) -> bool:
        return True

    def __str__(self):
        return f"pass ({self.trials} trials)"


@dataclass(frozen=True)
class Counterexample:
    x: object
    y: object
    axiom: str

    @property
    def passed(self) -> bool:
        return False

    def __str__(self):
        return f"violated {self.axiom} at x={self.x}, y={self.y}"


def check_valuation_axioms(probe: ValuationProbe, trials: int, seed: int = 0):
    """Sample pairs and test both axioms; first violation is returned."""
    if trials < 1:
        raise ValueError("need at least one trial")
    rng = random.Random(seed)
    for _ in range(trials):
        x = probe.sample(rng)
        y = probe.sample(rng)
        vx = probe.value(x)
        vy = probe.value(y)
        if vx is INFINITY or vy is INFINITY:
            raise ValueError("probe sampler produced zero")
        if probe.value(x * y) != vx + vy:
            return Counterexample(x, y, "multiplicative")
        z = x + y
        if z:
            if not probe.value(z) >= min(vx, vy):
                return Counterexample(x, y, "ultrametric")
    return Pass(trials)


def _basis_matrix(basis) -> list:
    rows = []
    for b in basis:
        rows.append(list(b.value) if b.group.kind == "lex" else [b.value])
    # columns are basis vectors
    return [[rows[j][i] for j in range(len(rows))] for i in range(len(rows[0]))]


def _unimodular_inverse(mat) -> list:
    """Exact inverse of an integer matrix; requires det = +-1."""
    k = len(mat)
    aug = [[Fraction(mat[i][j]) for j in range(k)] + [Fraction(int(i == j)) for j in range(k)]
           for i in range(k)]
    det = Fraction(1)
    for col in range(k):
        piv = next((i for i in range(col, k) if aug[i][col] != 0), None)
        if piv is None:
            raise ValueError("basis vectors are linearly dependent")
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
            det = -det
        det *= aug[col][col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for i in range(k):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    if det not in (1, -1):
        raise ValueError(f"basis determinant {det} is not a unit; not a free basis of Z^{k}")
    out = [[aug[i][k + j] for j in range(k)] for i in range(k)]
    assert all(v.denominator == 1 for row in out for v in row)
    return [[int(v) for v in row] for row in out]


@dataclass(frozen=True)
class Section:
    """Homomorphic right inverse of a valuation, fixed by basis images."""

    group: ValueGroup
    basis: tuple
    images: tuple
    valuation: object
    _coord_matrix: tuple

    def coordinates(self, g: OgElem):
        """Integer coordinates of g in the section's basis."""
        if g.group != self.group:
            raise TypeError(f"{g} is not in {self.group}")
        vec = list(g.value) if self.group.kind == "lex" else [g.value]
        return tuple(
            sum(self._coord_matrix[i][j] * vec[j] for j in range(len(vec)))
            for i in range(len(self.basis))
        )

    def apply(self, g: OgElem):
        """s(g): the basis-image product with the coordinates of g."""
        coords = self.coordinates(g)
        result = None
        for img, c in zip(self.images, coords):
            part = img ** c
            result = part if result is None else result * part
        return result

    def __str__(self):
        pairs = ", ".join(f"s({b}) = {img}" for b, img in zip(self.basis, self.images))
        return f"section on {self.group}: {pairs}"


def section_free(group: ValueGroup, basis, images, valuation) -> Section:
    """Build the section with s(basis[i]) = images[i].

    The basis must freely generate the group (unimodular over Z), and
    each image must actually have the stated valuation.
    """
    if not group.is_free_finite_rank:
        raise ValueError(f"{group} has no finite free basis; use an explicit section")
    basis = tuple(basis)
    images = tuple(images)
    if len(basis) != group.rank or len(images) != len(basis):
        raise ValueError(f"need exactly {group.rank} basis elements with images")
    for b in basis:
        if not isinstance(b, OgElem) or b.group != group:
            raise ValueError(f"{b} is not an element of {group}")
    inv = _unimodular_inverse(_basis_matrix(basis))
    for b, img in zip(basis, images):
        if valuation(img) != b:
            raise ValueError(f"image valuation mismatch: v({img}) = {valuation(img)} != {b}")
    return Section(group, basis, images, valuation, tuple(map(tuple, inv)))


def split_unit(u, valuation, section: Section):
    """Factor a nonzero element through the value group: u = s(g) * w."""
    g = valuation(u)
    if g is INFINITY:
        raise ValueError("cannot split zero")
    w = u * section.apply(-g)
    assert valuation(w).is_zero()
    return g, w


def recombine(g: OgElem, w, section: Section):
    """Inverse of ``split_unit``: s(g) * w for w in the valuation kernel."""
    vw = section.valuation(w)
    if vw is INFINITY or not vw.is_zero():
        raise ValueError(f"second component has valuation {vw}, expected 0")
    return section.apply(g) * w
