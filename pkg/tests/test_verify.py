from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from jacsys.algebra import UniPoly
from jacsys.errors import InvalidParameterError, NotASolutionError, TruncationError
from jacsys.homogeneous import solve_reduced, tuple_from_p
from jacsys.laurent import TruncatedLaurentSeries, monic_nth_root
from jacsys.verify import (
    BiPoly,
    bracket,
    degree_bounds,
    is_power_polynomial,
    lambda_tail_of,
    lift_homogeneous,
    lifted_pair,
    verify_pair,
)

X, Y = BiPoly.x(), BiPoly.y()


def test_bracket_basics():
    assert bracket(X, Y) == BiPoly.const(1)
    assert bracket(Y, X) == BiPoly.const(-1)
    assert bracket(X + Y**2, Y) == BiPoly.const(1)
    assert bracket(X**2, Y) == 2 * X


small = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-4, 4), max_size=5)


@given(small, small)
@settings(max_examples=60, deadline=None)
def test_bracket_matches_sympy(a, b):
    x, y = sympy.symbols("x y")
    P, Q = BiPoly(a), BiPoly(b)
    Ps = sum((c * x**i * y**j for (i, j), c in a.items()), sympy.Integer(0))
    Qs = sum((c * x**i * y**j for (i, j), c in b.items()), sympy.Integer(0))
    ref = sympy.expand(sympy.diff(Ps, x) * sympy.diff(Qs, y) - sympy.diff(Ps, y) * sympy.diff(Qs, x))
    J = bracket(P, Q)
    ours = sum((c * x**i * y**j for (i, j), c in J.terms.items()), sympy.Integer(0))
    assert sympy.expand(ours - ref) == 0
    assert bracket(Q, P) == -J


def test_verify_pair_reasons():
    assert verify_pair(X, X + Y).reasons == ["divisible-degrees"]
    assert verify_pair(X, Y).reasons == ["divisible-degrees", "not-normal-form"]
    assert "zero-jacobian" in verify_pair(X**2, X**3).reasons
    assert "non-constant-jacobian" in verify_pair(X**2 + Y, X**3).reasons
    report = verify_pair(X**2 + X * Y, X**3)
    assert "not-normal-form" in report.reasons
    assert not report.counterexample
    assert report.to_json()["counterexample"] is False


def test_verify_pair_on_homogeneous_pair():
    base = tuple_from_p([Fraction(1)], 2, 3)
    P, Q = lifted_pair(lift_homogeneous(base, 2, 3), 2, 3)
    report = verify_pair(P, Q)
    assert report.non_divisible and report.normal_form
    assert report.reasons == ["non-constant-jacobian"]
    assert report.jacobian == BiPoly({(0, 3): Fraction(-3)})


def test_lift_requires_solution():
    with pytest.raises(NotASolutionError):
        lift_homogeneous([Fraction(1), 0, 0], 2, 3)
    with pytest.raises(InvalidParameterError):
        lift_homogeneous([Fraction(1), 0, 0])


def test_lifted_coefficients_are_monomials():
    for s in solve_reduced(2, 5, Fraction(5, 16)).solutions:
        lifted = lift_homogeneous(s)
        for k, (C, c) in enumerate(zip(lifted, s.values), start=1):
            if c == 0:
                assert C.is_zero()
            else:
                assert C.degree == k + 1 and C[k + 1] == c


def test_lambda_tail_of():
    assert lambda_tail_of((Fraction(1, 2), 0, Fraction(-1, 8)), 2, 3) == Fraction(3, 8)


def test_c_bound_holds_with_equality_on_lifted_solutions():
    for m in (3, 5):
        base = tuple_from_p([Fraction(1)], 2, m)
        report = degree_bounds(lift_homogeneous(base, 2, m), 2, m, 40)
        assert report.c_holds
        nonzero = [k for k in range(1, 41) if k % 2 == 1]
        assert report.c_equalities == nonzero


def test_f_degrees_of_lifted_solution():
    # every nonzero F_-k of a lift is Y-homogeneous of degree m + k
    base = tuple_from_p([Fraction(1)], 2, 3)
    report = degree_bounds(lift_homogeneous(base, 2, 3), 2, 3, 20)
    for k, d in report.f_degrees.items():
        assert d in (-1, 3 + k)


def test_degree_bounds_for_datum_of_degree_one():
    # C = (x^2 + Y)^(1/2): C_-k has degree (k+1)/2 and F_-k stays within 2 - n + k
    C = monic_nth_root(TruncatedLaurentSeries({2: UniPoly([1], "Y"), 0: UniPoly([0, 1], "Y")}, -8), 2)
    prefix = [C[-1], C[-2], C[-3]]
    report = degree_bounds(prefix, 2, 3, 30)
    assert report.holds


def test_degree_bounds_prefix_length():
    with pytest.raises(InvalidParameterError):
        degree_bounds([UniPoly([1], "Y")], 2, 3, 10)


def test_is_power_polynomial():
    C = monic_nth_root(TruncatedLaurentSeries({2: 1, 0: 1}, -20), 2)
    check = is_power_polynomial(C, 2)
    assert check and check.checked_down_to == C.cutoff + 1
    assert not is_power_polynomial(C, 3)
    with pytest.raises(TruncationError):
        is_power_polynomial(C, 2, min_depth=100)


def test_bipoly_helpers():
    p = UniPoly([1, 0, 1])
    H = BiPoly.homogenize(p)
    assert H == X**2 + Y**2
    assert H.evaluate(Fraction(1), Fraction(2)) == 5
    assert H.degree_x() == 2 and H.degree_y() == 2 and H.total_degree() == 2
    assert H.x_coeff(0) == {2: 1}
    assert str(X**2 - 3 * Y) == "x^2 - 3 Y"
    with pytest.raises(InvalidParameterError):
        BiPoly({(0, -1): 1})
    assert BiPoly({(0, -1): 1}, laurent=True).diff_y() == BiPoly({(0, -2): -1}, laurent=True)
