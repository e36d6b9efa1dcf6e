"""Factorisation of rational univariate polynomials.

Factoring over Q is delegated to sympy; the result is converted back to
:class:`UniPoly` objects with ``Fraction`` coefficients and checked by
multiplying out.
"""

from __future__ import annotations

from fractions import Fraction

from jacsys.algebra.unipoly import UniPoly


def factor_rational(f: UniPoly):
    """Return ``(content, [(monic irreducible factor, multiplicity), ...])``."""
    import sympy

    if not f:
        raise ValueError("cannot factor the zero polynomial")
    t = sympy.Symbol("t")
    expr = sum(
        sympy.Rational(c.numerator, c.denominator) * t**k
        for k, c in enumerate(Fraction(c) for c in f.coeffs)
    )
    content, factors = sympy.factor_list(sympy.Poly(expr, t, domain="QQ"))
    out = []
    for fac, mult in factors:
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(fac.all_coeffs())]
        g = UniPoly(coeffs, f.var)
        lead = g.lead
        content = content * sympy.Rational(lead.numerator, lead.denominator) ** mult
        out.append((g.monic(), mult))
    out.sort(key=lambda item: (item[0].degree, [str(c) for c in item[0].coeffs]))
    content = Fraction(int(sympy.Rational(content).p), int(sympy.Rational(content).q))

    check = UniPoly([content], f.var)
    for g, mult in out:
        check = check * g**mult
    if check != f:
        raise ArithmeticError("factorisation does not multiply back to the input")
    return content, out


def rational_roots(f: UniPoly):
    """Distinct rational roots of ``f``."""
    _, factors = factor_rational(f)
    return [-g[0] for g, _ in factors if g.degree == 1]
