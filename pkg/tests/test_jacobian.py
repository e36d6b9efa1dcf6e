from fractions import Fraction

import pytest
import sympy

from jacsys.algebra import MultiPoly
from jacsys.errors import InvalidParameterError
from jacsys.homogeneous import solve_reduced
from jacsys.jacobian import (
    build_jacobian,
    coeff_partial,
    eval_det,
    jacobian_by_differentiation,
    power_coeff,
)
from jacsys.serialize import parse_poly
from jacsys.systems import SystemSpec


def Z(k):
    return MultiPoly.var(f"Z{k}")


def test_2_3_matrix_and_det():
    J = build_jacobian(SystemSpec(2, 3))
    zero = MultiPoly()
    assert J.rows == [
        [zero, 2 * MultiPoly.const(1), zero],
        [2 * Z(-1), zero, 2 * MultiPoly.const(1)],
        [6 * Z(-1), zero, 3 * MultiPoly.const(1)],
    ]
    assert len(J.block1) == 2 and len(J.block2) == 1
    assert eval_det(J, [Z(-1), Z(-2), Z(-3)]) == 12 * Z(-1)
    assert eval_det(J, [Fraction(1, 2), 0, Fraction(-1, 8)]) == 6


@pytest.mark.parametrize(
    "spec",
    [
        SystemSpec(2, 3),
        SystemSpec(3, 4),
        SystemSpec(2, 5),
        SystemSpec(4, 7),
        SystemSpec(3, 5, lambdas=(1, Fraction(1, 2), 0, -3, 0, 0, 2)),
    ],
)
def test_formula_matches_differentiation(spec):
    assert build_jacobian(spec) == jacobian_by_differentiation(spec)


def to_sympy(p: MultiPoly, symbols):
    expr = sympy.Integer(0)
    for mono, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for v, e in mono:
            term *= symbols[v] ** e
        expr += term
    return expr


@pytest.mark.parametrize("n,m", [(3, 4), (2, 5)])
def test_symbolic_det_matches_sympy(n, m):
    spec = SystemSpec(n, m)
    J = build_jacobian(spec)
    names = [f"Z{-k}" for k in range(1, spec.size + 1)]
    symbols = {v: sympy.Symbol(v) for v in names}
    ours = eval_det(J, [MultiPoly.var(v) for v in names])
    ref = sympy.Matrix([[to_sympy(e, symbols) for e in row] for row in J.rows]).det()
    assert sympy.expand(to_sympy(ours, symbols) - ref) == 0


def test_power_coeff_values():
    assert power_coeff(2, 0, 3) == 2 * Z(-1)
    assert power_coeff(3, -1, 3) == parse_poly("3 Z_{-1}^2 + 3 Z_{-3}")
    assert power_coeff(0, 0, 2) == MultiPoly.const(1)
    assert power_coeff(0, -1, 2) == MultiPoly()


def test_coeff_partial():
    assert coeff_partial(3, -1, -1) == 6 * Z(-1)
    assert coeff_partial(2, -2, -3) == MultiPoly.const(2)
    assert coeff_partial(2, -1, -3) == MultiPoly()
    assert coeff_partial(1, -2, -2) == MultiPoly.const(1)
    with pytest.raises(InvalidParameterError):
        coeff_partial(2, 0, 1)


def test_generalized_shapes_rejected():
    with pytest.raises(InvalidParameterError):
        build_jacobian(SystemSpec(2, 3, lead_exponent=2, tail_power=-1))


def test_complex_point_det():
    res = solve_reduced(3, 4, Fraction(1), mode="complex")
    J = build_jacobian(SystemSpec(3, 4))
    for s in res.solutions:
        det = eval_det(J, s)
        assert isinstance(det, complex)
        assert abs(det) > 1e-8


def test_point_length_checked():
    with pytest.raises(InvalidParameterError):
        eval_det(build_jacobian(SystemSpec(2, 3)), [1, 2])
