from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jacsys.algebra import MultiPoly
from jacsys.errors import DegreeCapError, InvalidParameterError
from jacsys.homogeneous import solve_reduced
from jacsys.laurent import TruncatedLaurentSeries, series_pow
from jacsys.serialize import parse_poly
from jacsys.systems import (
    SolutionTuple,
    SystemSpec,
    build_generalized,
    build_homogeneous,
    build_modified,
    build_sparse,
    build_standard,
    check_w_homogeneity,
    extend_solution,
    recover_root_series,
    residual,
)


def test_standard_2_3_equations():
    eqs = build_standard(SystemSpec(2, 3))
    assert eqs.variables == ["Z-1", "Z-2", "Z-3"]
    assert eqs.equations == [
        parse_poly("2 Z_{-2}"),
        parse_poly("Z_{-1}^2 + 2 Z_{-3}"),
        parse_poly("3 Z_{-1}^2 + 3 Z_{-3} + lam"),
    ]


def test_equation_counts():
    for n, m in ((2, 3), (3, 4), (4, 7), (3, 5)):
        eqs = build_standard(SystemSpec(n, m))
        assert len(eqs) == m + n - 2
        assert len(eqs.variables) == m + n - 2


def test_lambdas_and_numeric_datum():
    eqs = build_standard(SystemSpec(2, 3, lambdas=(1, Fraction(1, 2), 0, 0), datum=3))
    assert eqs.equations[2] == parse_poly("3 Z_{-1}^2 + Z_{-2} + 3 Z_{-3} + 3")


def test_lambda_vector_validation():
    with pytest.raises(InvalidParameterError):
        SystemSpec(2, 3, lambdas=(1, 2))
    with pytest.raises(InvalidParameterError):
        SystemSpec(2, 3, lambdas=(2, 0, 0, 0))
    with pytest.raises(InvalidParameterError):
        SystemSpec(0, 3)


def test_homogeneous_datum_is_power_of_y():
    eqs = build_homogeneous(2, 3)
    assert eqs.equations[2] == parse_poly("Y^4 + 3 Z_{-1}^2 + 3 Z_{-3}")


def test_modified_lead_one_is_standard():
    assert build_modified(1).equations == build_standard(SystemSpec(2, 3)).equations


def test_modified_shapes():
    r2, r3 = build_modified(2), build_modified(3)
    assert len(r2) == 8 and r2.variables[0] == "Z0" and r2.variables[-1] == "Z-7"
    assert len(r3) == 13 and r3.variables[0] == "Z1" and r3.variables[-1] == "Z-11"
    spec = SystemSpec(2, 3, lead_exponent=2, tail_power=-1)
    assert build_generalized(spec).equations == r2.equations


def test_modified_and_sparse_are_weight_homogeneous():
    for eqs in (build_modified(2), build_modified(3), build_sparse(6, 4, 3)):
        assert all(ok for ok, _ in check_w_homogeneity(eqs))


def test_sparse_orientation_and_divisibility():
    with pytest.raises(InvalidParameterError):
        build_sparse(4, 6, 3)
    with pytest.raises(InvalidParameterError):
        build_sparse(6, 4, 2)


def test_degree_cap(monkeypatch):
    monkeypatch.setenv("JS_MAX_DEGREE", "3")
    with pytest.raises(DegreeCapError):
        build_standard(SystemSpec(3, 4))
    monkeypatch.setenv("JS_MAX_DEGREE", "abc")
    with pytest.raises(InvalidParameterError):
        build_standard(SystemSpec(2, 3))


def test_residual_arguments():
    eqs = build_standard(SystemSpec(2, 3))
    sol = SolutionTuple(2, 3, (Fraction(1, 2), 0, Fraction(-1, 8)))
    assert residual(eqs, sol, {"lam": Fraction(-3, 8)}) == [0, 0, 0]
    assert residual(eqs, list(sol.values), {"lam": Fraction(-3, 8)}) == [0, 0, 0]
    with pytest.raises(InvalidParameterError):
        residual(eqs, [1, 2])
    with pytest.raises(InvalidParameterError):
        residual(eqs, sol)
    with pytest.raises(InvalidParameterError):
        SolutionTuple(2, 3, (1, 2))


def test_extension_of_sqrt():
    # c = sqrt(x^2 + 1) = x + 1/2 x^-1 - 1/8 x^-3 + 1/16 x^-5 - 5/128 x^-7 + ...
    coeffs = extend_solution(SystemSpec(2, 3), [Fraction(1, 2), 0, Fraction(-1, 8)], 7)
    assert coeffs == [Fraction(1, 2), 0, Fraction(-1, 8), 0, Fraction(1, 16), 0, Fraction(-5, 128)]


def test_extension_of_genuine_solutions_kills_all_negative_powers():
    for n, m, lt in ((2, 5, Fraction(5, 16)), (3, 4, Fraction(1))):
        res = solve_reduced(n, m, lt)
        for s in res.solutions:
            coeffs = extend_solution(SystemSpec(n, m), s.values, 30)
            C = TruncatedLaurentSeries({1: 1, **{-k: c for k, c in enumerate(coeffs, start=1)}}, -30)
            Cn = series_pow(C, n)
            assert all(Cn[-k] == 0 for k in range(1, 30 - n + 2))
        assert {s.kind for s in res.solutions} == ({"rational", "algebraic"} if n == 2 else {"algebraic"})


def test_extension_prefix_length_checked():
    with pytest.raises(InvalidParameterError):
        extend_solution(SystemSpec(2, 3), [1, 2], 10)
    with pytest.raises(InvalidParameterError):
        extend_solution(SystemSpec(2, 3), [1, 2, 3], 2)


@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6), min_size=3, max_size=3))
@settings(max_examples=30, deadline=None)
def test_sparse_recovered_root_is_supported_on_progression(values):
    spec = SystemSpec(6, 4, lead_exponent=2, support_step=3)
    C = recover_root_series(spec, values, 24)
    for k in range(1, 25):
        if (k + 1) % 3:
            assert C[-k] == 0


def test_sparse_residual_example():
    eqs = build_sparse(6, 4, 3)
    assert [eq.degree("lam") for eq in eqs] == [0, 0, 1]
    point = [Fraction(-1), Fraction(-1, 2), Fraction(-2, 3)]
    assert residual(eqs, point, {"lam": Fraction(1, 3)}) == [0, 0, 0]
    assert residual(eqs, point, {"lam": Fraction(1, 2)}) != [0, 0, 0]
    assert eqs.equations[-1].diff("lam") == MultiPoly.const(1)
