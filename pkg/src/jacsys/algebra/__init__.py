"""Exact scalar and polynomial arithmetic used by the rest of the package."""

from jacsys.algebra.factor import factor_rational, rational_roots
from jacsys.algebra.multipoly import MultiPoly, var_key, zindex, zvar
from jacsys.algebra.quotient import (
    AlgebraicElement,
    CyclotomicElement,
    cyclotomic_poly,
    quotient_arith,
)
from jacsys.algebra.resultant import (
    det_bareiss,
    det_berkowitz,
    det_complex,
    sylvester_matrix,
    uni_resultant,
)
from jacsys.algebra.roots import roots_numeric
from jacsys.algebra.unipoly import UniPoly, poly_gcd, poly_xgcd, squarefree_part

__all__ = [
    "AlgebraicElement",
    "CyclotomicElement",
    "MultiPoly",
    "UniPoly",
    "cyclotomic_poly",
    "det_bareiss",
    "det_berkowitz",
    "det_complex",
    "factor_rational",
    "poly_gcd",
    "poly_xgcd",
    "quotient_arith",
    "rational_roots",
    "roots_numeric",
    "squarefree_part",
    "sylvester_matrix",
    "uni_resultant",
    "var_key",
    "zindex",
    "zvar",
]
