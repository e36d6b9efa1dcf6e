"""The Jacobian matrix of the standard system and its determinant.

Row ``i`` of the matrix holds the partial derivatives of the ``i``-th
standard equation with respect to ``Z_-1, ..., Z_-(m+n-2)``.  Entries are
produced from the closed formula

    d (Z^i)_k / d Z_l = i (Z^(i-1))_(k-l)

rather than by differentiating; :func:`jacobian_by_differentiation`
is the independent route used to cross-check it.
"""

from __future__ import annotations

from numbers import Rational

from jacsys.algebra.multipoly import MultiPoly, zvar
from jacsys.algebra.quotient import AlgebraicElement
from jacsys.algebra.resultant import det_bareiss, det_berkowitz, det_complex
from jacsys.errors import InvalidParameterError
from jacsys.laurent import TruncatedLaurentSeries, series_pow
from jacsys.systems import SolutionTuple, SystemSpec, build_standard, generic_series


def _generic_z(depth: int) -> TruncatedLaurentSeries:
    return generic_series(1, range(-1, -depth - 1, -1), -depth)


def power_coeff(i: int, k: int, depth: int) -> MultiPoly:
    """``(Z^i)_k`` for the generic ``Z = x + Z_-1 x^-1 + ... + Z_-depth x^-depth``."""
    if i == 0:
        return MultiPoly.const(1 if k == 0 else 0)
    return MultiPoly.coerce(series_pow(_generic_z(depth), i)[k])


def coeff_partial(i: int, k: int, l: int) -> MultiPoly:
    """``d (Z^i)_k / d Z_l`` by differentiating the expanded coefficient.

    The result is checked against ``i (Z^(i-1))_(k-l)``.
    """
    if i < 1:
        raise InvalidParameterError("power must be at least 1")
    if l >= 0:
        raise InvalidParameterError("variable index must be negative")
    depth = max(-l, i - 1 - k, 1) + 1
    direct = power_coeff(i, k, depth).diff(zvar(l))
    formula = power_coeff(i - 1, k - l, depth) * i
    if direct != formula:
        raise AssertionError(f"derivative identity fails for i={i}, k={k}, l={l}")
    return direct


class JacobianMatrix:
    def __init__(self, rows, spec: SystemSpec):
        self.rows = rows
        self.spec = spec

    @property
    def size(self) -> int:
        return len(self.rows)

    @property
    def block1(self):
        return self.rows[: self.spec.m - 1]

    @property
    def block2(self):
        return self.rows[self.spec.m - 1 :]

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if isinstance(other, JacobianMatrix):
            other = other.rows
        return [list(r) for r in self.rows] == [list(r) for r in other]

    def evaluate(self, values: dict):
        return [[entry.evaluate(values) if entry else 0 for entry in row] for row in self.rows]

    def __str__(self):
        from jacsys.serialize import format_multipoly

        return "\n".join("[" + ", ".join(format_multipoly(e) for e in row) + "]" for row in self.rows)


def build_jacobian(spec: SystemSpec) -> JacobianMatrix:
    if spec.lead_exponent != 1 or spec.support_step != 1 or spec.tail_power is not None:
        raise InvalidParameterError("the Jacobian is defined for standard systems only")
    n, m = spec.n, spec.m
    N = spec.size
    Z = _generic_z(N)
    zn1 = series_pow(Z, n - 1)
    # G = sum_k lam_k (m - k) Z^(m-k-1)
    G = None
    for k, lam in enumerate(spec.lambdas):
        if lam == 0 or m - k - 1 < 0:
            continue
        term = series_pow(Z, m - k - 1).scale(MultiPoly.const(lam * (m - k)))
        G = term if G is None else G + term
    rows = []
    for i in range(1, N + 1):
        row = []
        for j in range(1, N + 1):
            if i < m:
                entry = zn1[j - i] * n if j < n + i else MultiPoly()
            else:
                entry = G[m + j - i - 1] if j <= i else MultiPoly()
            row.append(MultiPoly.coerce(entry))
        rows.append(row)
    return JacobianMatrix(rows, spec)


def jacobian_by_differentiation(spec: SystemSpec) -> JacobianMatrix:
    eqs = build_standard(spec)
    rows = [[eq.diff(v) for v in eqs.variables] for eq in eqs.equations]
    return JacobianMatrix(rows, spec)


def eval_det(J: JacobianMatrix, point):
    """Determinant of ``J`` at a point.

    Exact scalars use fraction-free elimination, complex points an LU
    factorisation and symbolic (``MultiPoly``) points the division-free
    Berkowitz algorithm.
    """
    if isinstance(point, SolutionTuple):
        values = list(point.values)
    elif isinstance(point, dict):
        values = [point[zvar(-k)] for k in range(1, J.size + 1)]
    else:
        values = list(point)
    if len(values) != J.size:
        raise InvalidParameterError(f"point has {len(values)} entries, matrix has size {J.size}")
    assignment = {zvar(-k): v for k, v in enumerate(values, start=1)}
    M = J.evaluate(assignment)
    flat = [x for row in M for x in row]
    if any(isinstance(x, (complex, float)) for x in flat):
        return det_complex([[complex(x) for x in row] for row in M])
    if all(isinstance(x, (Rational, AlgebraicElement)) for x in flat):
        return det_bareiss(M)
    one = MultiPoly.const(1)
    return det_berkowitz([[MultiPoly.coerce(x) if isinstance(x, Rational) else x for x in row] for row in M], one=one)
