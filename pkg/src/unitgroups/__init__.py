"""Exact computational algebra for unit groups of function fields.

Finite fields GF(p^n), polynomial factorization, multiplicative
decompositions of rational functions, ordered value groups with
valuations and sections, generalized power series, the perfect closure
of GF(2)(t), and norms in simple extensions.  Everything is exact; the
GF(2) kernels are bit-packed and jitted (see ``unitgroups.kernels``).
"""

from .classify import (
    Classification, FgAbelianGroup, FieldFamily, ScanEntry,
    classify_finite_field, is_indecomposable_fg, oracle_indecomposable,
    scan_classifications, scan_indecomposable,
)
from .extension import (
    ExtElem, IrreducibilityStatus, SimpleExtension, ext_make, norm,
    random_ext_elem,
)
from .factor import factor_poly, is_irreducible, product_of_factors
from .gf import FieldSpec, FqElem, field_make
from .hahn import HahnSeries, hs_probe, hs_section, random_series
from .kernels import BACKEND
from .ordered import (
    DYADIC_GROUP, INFINITY, INT_GROUP, OgElem, ValueGroup, lex_group,
)
from .parsing import (
    ParseError, parse_dyadic_ratfunc, parse_ext_elem, parse_extension,
    parse_field, parse_fqelem, parse_group, parse_hahn, parse_og_elem,
    parse_poly, parse_ratfunc,
)
from .perfect import (
    DyadicPoly, DyadicRatFunc, PCDecomposition, frobenius, frobenius_inv,
    pc_decompose, pc_level, pc_recompose, random_dyadic_ratfunc,
)
from .poly import Poly, irreducible_polys, poly_gcd, random_poly
from .primes import (
    FactoredInteger, PrimeKind, factor_integer, is_prime, is_prime_power,
    special_prime_kind,
)
from .ratfunc import (
    RatFunc, UnitDecomposition, decompose, integer_rank,
    multiplicative_rank, random_ratfunc, recompose, rf_make, valuation_at,
)
from .valuation import (
    Counterexample, Pass, Section, ValuationProbe, check_valuation_axioms,
    padic_valuation, recombine, section_free, split_unit,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "Classification", "Counterexample", "DYADIC_GROUP",
    "DyadicPoly", "DyadicRatFunc", "ExtElem", "FactoredInteger",
    "FgAbelianGroup", "FieldFamily", "FieldSpec", "FqElem", "HahnSeries",
    "INFINITY", "INT_GROUP", "IrreducibilityStatus", "OgElem",
    "PCDecomposition", "ParseError", "Pass", "Poly", "PrimeKind", "RatFunc",
    "ScanEntry", "Section", "SimpleExtension", "UnitDecomposition",
    "ValuationProbe", "ValueGroup", "check_valuation_axioms",
    "classify_finite_field", "decompose", "ext_make", "factor_integer",
    "factor_poly", "field_make", "frobenius", "frobenius_inv", "hs_probe",
    "hs_section", "integer_rank", "irreducible_polys", "is_irreducible",
    "is_indecomposable_fg", "is_prime", "is_prime_power", "lex_group",
    "multiplicative_rank", "norm", "oracle_indecomposable",
    "padic_valuation", "parse_dyadic_ratfunc", "parse_ext_elem",
    "parse_extension", "parse_field", "parse_fqelem", "parse_group",
    "parse_hahn", "parse_og_elem", "parse_poly", "parse_ratfunc",
    "pc_decompose", "pc_level", "pc_recompose", "poly_gcd",
    "product_of_factors", "random_dyadic_ratfunc", "random_ext_elem",
    "random_poly", "random_ratfunc", "random_series", "recombine",
    "recompose", "rf_make", "scan_classifications", "scan_indecomposable",
    "section_free", "special_prime_kind", "split_unit", "valuation_at",
]
