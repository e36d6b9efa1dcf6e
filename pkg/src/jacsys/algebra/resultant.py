"""Determinants and Sylvester resultants.

Three determinant routines are provided, chosen by entry type:

* :func:`det_berkowitz` is division free and works over any commutative
  ring, in particular over ``MultiPoly`` entries;
* :func:`det_bareiss` is fraction-free Gaussian elimination for exact
  field entries (``Fraction``, ``AlgebraicElement``);
* :func:`det_complex` delegates to an LU factorisation in numpy.
"""

from __future__ import annotations

from fractions import Fraction

from jacsys.algebra.multipoly import MultiPoly
from jacsys.errors import NothingToEliminateError


def det_berkowitz(matrix, one=1):
    """Determinant by Berkowitz's algorithm, using only ``+`` and ``*``."""
    n = len(matrix)
    if n == 0:
        return one
    zero = one - one
    # Coefficient vector of the characteristic polynomial of the leading
    # r x r block, highest degree first.
    poly = [one, -matrix[0][0]]
    for r in range(1, n):
        a_rr = matrix[r][r]
        row = matrix[r][:r]
        col = [matrix[i][r] for i in range(r)]
        sub = [mrow[:r] for mrow in matrix[:r]]
        # Toeplitz column: 1, -a_rr, -R C, -R A C, -R A^2 C, ...
        toe = [one, -a_rr]
        vec = col
        for _ in range(r):
            s = zero
            for x, y in zip(row, vec):
                s = s + x * y
            toe.append(-s)
            vec = [_dot(sub[i], vec, zero) for i in range(r)]
        new = []
        for k in range(r + 2):
            s = zero
            for j in range(min(k, r) + 1):
                if k - j < len(toe):
                    s = s + toe[k - j] * poly[j]
            new.append(s)
        poly = new
    det = poly[-1]
    return det if n % 2 == 0 else -det


def _dot(u, v, zero):
    s = zero
    for x, y in zip(u, v):
        s = s + x * y
    return s


def det_bareiss(matrix):
    """Fraction-free elimination with row pivoting; entries from a field."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    a = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return a[k][k] * 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


def det_complex(matrix) -> complex:
    import numpy as np

    if not matrix:
        return complex(1)
    return complex(np.linalg.det(np.array(matrix, dtype=complex)))


def sylvester_matrix(f, g):
    """Sylvester matrix of two coefficient lists given highest degree first."""
    df, dg = len(f) - 1, len(g) - 1
    size = df + dg
    zero = f[0] - f[0]
    rows = []
    for i in range(dg):
        rows.append([zero] * i + list(f) + [zero] * (size - df - 1 - i))
    for i in range(df):
        rows.append([zero] * i + list(g) + [zero] * (size - dg - 1 - i))
    return rows


def uni_resultant(f: MultiPoly, g: MultiPoly, var: str) -> MultiPoly:
    """Resultant of two polynomials with respect to ``var``.

    Both inputs constant in ``var`` leaves nothing to eliminate and is an
    error.  When exactly one is constant of degree 0 the resultant is that
    constant raised to the other's degree.
    """
    f = MultiPoly.coerce(f)
    g = MultiPoly.coerce(g)
    df, dg = f.degree(var), g.degree(var)
    if df <= 0 and dg <= 0:
        raise NothingToEliminateError(f"neither polynomial involves {var}")
    if not f or not g:
        return MultiPoly()
    fp = f.as_univariate(var)
    gp = g.as_univariate(var)
    fc = [fp.get(k, MultiPoly()) for k in range(df, -1, -1)]
    gc = [gp.get(k, MultiPoly()) for k in range(dg, -1, -1)]
    if df == 0:
        return fc[0] ** dg
    if dg == 0:
        return gc[0] ** df
    return det_berkowitz(sylvester_matrix(fc, gc), one=MultiPoly.const(1))
