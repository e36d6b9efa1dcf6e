import random
import time
from fractions import Fraction

import pytest

from fixture_data import R2, R3
from jacsys.algebra import AlgebraicElement, MultiPoly, UniPoly, poly_gcd
from jacsys.errors import DivisibleDegreesError
from jacsys.homogeneous import (
    check_conditions,
    embed_family,
    orbit_act,
    pair_from_solution,
    PolynomialPair,
    reduce_system,
    solve_reduced,
)
from jacsys.jacobian import build_jacobian, eval_det, power_coeff
from jacsys.laurent import TruncatedLaurentSeries, series_pow
from jacsys.serialize import parse_poly
from jacsys.systems import (
    SystemSpec,
    build_homogeneous,
    build_modified,
    build_sparse,
    build_standard,
    check_w_homogeneity,
    extend_solution,
    recover_root_series,
    residual,
)
from jacsys.verify import BiPoly, bracket, degree_bounds, lambda_tail_of, lift_homogeneous, lifted_pair


def binom(a, k):
    out = Fraction(1)
    for i in range(k):
        out = out * (a - i) / (i + 1)
    return out


def n2_result(m):
    r = (m - 1) // 2
    return r, solve_reduced(2, m, binom(Fraction(m, 2), r + 1))


def is_zero(v):
    return v == 0


@pytest.mark.criterion(1)
def test_c01_fixture_lead_exponent_2():
    t0 = time.perf_counter()
    eqs = build_modified(2)
    assert len(eqs) == 8
    for got, text in zip(eqs.equations, R2):
        assert got == parse_poly(text)
    lam = MultiPoly.var("lam")
    Z = lambda k: MultiPoly.var(f"Z{k}")
    e7 = lam + 3 * Z(0) * Z(-1) ** 2 + 3 * Z(0) ** 2 * Z(-2) + 3 * Z(-2) ** 2 + 6 * Z(-1) * Z(-3) + 6 * Z(0) * Z(-4) + 3 * Z(-6)
    assert eqs.equations[6] == e7
    assert time.perf_counter() - t0 < 1


@pytest.mark.criterion(2)
def test_c02_fixture_lead_exponent_3():
    t0 = time.perf_counter()
    eqs = build_modified(3)
    assert len(eqs) == 13
    for got, text in zip(eqs.equations, R3):
        assert got == parse_poly(text)
    assert eqs.equations[12].terms[(("Z1", 1), ("lam", 1))] == -1
    assert time.perf_counter() - t0 < 1


@pytest.mark.criterion(3)
def test_c03_n2_solution_counts():
    t0 = time.perf_counter()
    for m in (3, 5, 7, 9):
        r, res = n2_result(m)
        assert res.eliminant.degree == r + 1
        assert poly_gcd(res.eliminant, res.eliminant.derivative()).degree == 0
        assert res.count_over_closure == r + 1
        lt = binom(Fraction(m, 2), r + 1)
        eqs = build_standard(SystemSpec(2, m))
        for s in res.solutions:
            assert all(is_zero(x) for x in residual(eqs, s.values, {"lam": -lt}))
    assert time.perf_counter() - t0 < 5


@pytest.mark.criterion(4)
def test_c04_orbit_closure():
    t0 = time.perf_counter()
    res = solve_reduced(2, 5, Fraction(5, 16))
    base = next(s for s in res.solutions if s.conjugates == 1)
    tuples = []
    for s in res.solutions:
        tuples.extend(embed_family(s, 6))
    assert len(tuples) == 3
    images = [orbit_act(i, base, 6).values for i in range(6)]
    for t in tuples:
        assert t.values in images
    assert time.perf_counter() - t0 < 2


@pytest.mark.criterion(5)
def test_c05_jacobian_invertible_at_solutions():
    t0 = time.perf_counter()
    for m in (3, 5, 7, 9):
        _, res = n2_result(m)
        J = build_jacobian(SystemSpec(2, m))
        for s in res.solutions:
            assert not eval_det(J, s) == 0
    J34 = build_jacobian(SystemSpec(3, 4))
    res34 = solve_reduced(3, 4, Fraction(1), mode="complex")
    assert res34.count_over_closure == 5
    for s in res34.solutions:
        assert abs(eval_det(J34, s)) > 1e-8
    J23 = build_jacobian(SystemSpec(2, 3))
    syms = [MultiPoly.var(f"Z{-k}") for k in (1, 2, 3)]
    assert eval_det(J23, syms) == 12 * MultiPoly.var("Z-1")
    dets = sorted(eval_det(J23, s) for s in solve_reduced(2, 3, Fraction(3, 8)).solutions)
    assert dets == [-6, 6]
    assert time.perf_counter() - t0 < 5


@pytest.mark.criterion(6)
def test_c06_extension_recursion():
    t0 = time.perf_counter()
    rng = random.Random(20240611)
    order = 40
    for n, m in ((2, 3), (3, 4), (4, 7)):
        spec = SystemSpec(n, m)
        for _ in range(20):
            prefix = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(spec.size)]
            coeffs = extend_solution(spec, prefix, order)
            assert coeffs == extend_solution(spec, prefix, order)
            assert coeffs[: spec.size] == prefix
            C = TruncatedLaurentSeries({1: 1, **{-k: c for k, c in enumerate(coeffs, start=1)}}, -order)
            Cn = series_pow(C, n)
            # the recursion fixes (C^n)_-k for every k past the prefix's reach
            checked = range(m, order - n + 2)
            assert len(checked) > 20
            assert all(Cn[-k] == 0 for k in checked)
    assert time.perf_counter() - t0 < 10


@pytest.mark.criterion(7)
def test_c07_w_homogeneity():
    t0 = time.perf_counter()
    for n, m in ((2, 3), (3, 4), (4, 6), (2, 5)):
        eqs = build_homogeneous(n, m)
        result = check_w_homogeneity(eqs)
        for i, (ok, wdeg) in enumerate(result, start=1):
            assert ok
            assert wdeg == (i + n if i < m else i + 1)
    assert time.perf_counter() - t0 < 2


@pytest.mark.criterion(8)
def test_c08_derivative_identity():
    t0 = time.perf_counter()
    depth = 14
    for i in range(1, 6):
        for l in range(-6, 0):
            for k in range(-8, i + 1):
                lhs = power_coeff(i, k, depth).diff(f"Z{l}")
                rhs = power_coeff(i - 1, k - l, depth) * i
                assert lhs == rhs, (i, k, l)
    assert time.perf_counter() - t0 < 5


@pytest.mark.criterion(9)
def test_c09_pair_conditions():
    t0 = time.perf_counter()
    for m in (3, 5, 7, 9):
        _, res = n2_result(m)
        for s in res.solutions:
            assert check_conditions(pair_from_solution(s)).all_hold
    x = UniPoly.gen()
    for square in (Fraction(1), Fraction(4), Fraction(1, 9)):
        for sol in solve_reduced(2, 3, Fraction(3, 8) * square).solutions:
            p0 = sol.p[0]
            assert p0**2 == square
            pair = pair_from_solution(sol)
            assert pair.p == x**2 + p0
            assert pair.lambda_tilde == -3 * p0**2
            assert pair.p**3 - pair.q**2 == Fraction(3, 4) * p0**2 * x**2 + p0**3
            report = check_conditions(pair)
            assert report.all_hold
            assert report[6].witness["rem_p"].is_zero()
    rng = random.Random(7)
    for _ in range(200):
        n, m = rng.choice([(2, 3), (2, 5), (3, 4), (3, 5)])
        pc = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n - 1)] + [0, 1]
        qc = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(m)] + [1]
        lt = Fraction(rng.choice([-3, -1, 1, 2, 5]), rng.randint(1, 4))
        flags = check_conditions(PolynomialPair(UniPoly(pc), UniPoly(qc), lt)).booleans()
        assert len(set(flags.values())) == 1, flags
    assert time.perf_counter() - t0 < 10


@pytest.mark.criterion(10)
def test_c10_divisibility_refusal():
    t0 = time.perf_counter()
    for n, m in ((2, 4), (3, 6), (6, 3)):
        with pytest.raises(DivisibleDegreesError):
            reduce_system(n, m)
    with pytest.raises(DivisibleDegreesError) as info:
        reduce_system(2, 4)
    assert info.value.details["equations"] == [-MultiPoly.var("lam")]
    assert time.perf_counter() - t0 < 1


@pytest.mark.criterion(11)
def test_c11_sparse_system():
    t0 = time.perf_counter()
    eqs = build_sparse(6, 4, 3)
    assert len(eqs) == 3
    assert eqs.variables == ["Z-1", "Z-4", "Z-7"]
    point = [Fraction(-1), Fraction(-1, 2), Fraction(-2, 3)]
    assert residual(eqs, point, {"lam": Fraction(1, 3)}) == [0, 0, 0]
    spec = SystemSpec(6, 4, lead_exponent=2, support_step=3)
    C = recover_root_series(spec, point, 30)
    assert C.cutoff <= -30
    for k in range(1, 31):
        if (k + 1) % 3:
            assert C[-k] == 0
    assert any(C[-k] != 0 for k in range(1, 31))
    assert time.perf_counter() - t0 < 2


@pytest.mark.criterion(12)
def test_c12_homogeneous_lift():
    t0 = time.perf_counter()
    base = next(s for s in solve_reduced(2, 3, Fraction(3, 8)).solutions if s.p[0] == 1)
    lifted = lift_homogeneous(base)
    for k, (C, c) in enumerate(zip(lifted, base.values), start=1):
        assert C == UniPoly.monomial(k + 1, c, "Y") or (c == 0 and C.is_zero())
    P, Q = lifted_pair(lifted, 2, 3)
    lt = lambda_tail_of(base.values, 2, 3)
    assert bracket(P, Q) == BiPoly({(0, 3): Fraction(-3)})
    assert bracket(P, Q) == BiPoly({(0, 3): 2 * lt * (1 - 3 - 2)})
    # datum exactly Y^4 means lambda_tail = -1, reached over Q(sqrt(-8/3))
    fam = solve_reduced(2, 3, Fraction(-1)).solutions[0]
    P, Q = lifted_pair(lift_homogeneous(fam), 2, 3)
    J = bracket(P, Q)
    assert set(J.terms) == {(0, 3)}
    value = J.terms[(0, 3)]
    assert isinstance(value, AlgebraicElement) and value.is_rational() and value.rational_value() == 8
    assert time.perf_counter() - t0 < 1


@pytest.mark.criterion(13)
def test_c13_degree_bounds():
    t0 = time.perf_counter()
    for m in (3, 5):
        base = next(s for s in solve_reduced(2, m, binom(Fraction(m, 2), (m + 1) // 2)).solutions if s.conjugates == 1)
        report = degree_bounds(lift_homogeneous(base), 2, m, 40)
        assert report.c_holds
        assert report.f_holds, f"F bound violated at k = {report.f_violations[:5]}"
    assert time.perf_counter() - t0 < 2
