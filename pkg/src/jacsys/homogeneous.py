"""Solutions of the homogeneous system through the reduced formulation.

A solution of the homogeneous system is determined by the monic
polynomial ``p = x^n + p_(n-2) x^(n-2) + ... + p_0``: its ``n``-th root
``c`` must make ``c^m`` a polynomial ``q`` up to the single tail
coefficient ``lam_tail = (c^m)_(1-n)``.  This module builds that reduced
system, solves it by iterated resultants, checks the equivalent
polynomial-pair conditions, normalises pairs under affine changes of
``x`` and acts on solutions by roots of unity.

Sign convention: ``lam_tail`` is the tail coefficient of ``c^m`` itself,
so a solution of the reduced system at ``lam_tail`` solves the standard
system with datum ``-lam_tail``.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Optional

from jacsys.algebra.factor import factor_rational
from jacsys.algebra.multipoly import MultiPoly
from jacsys.algebra.quotient import AlgebraicElement, CyclotomicElement
from jacsys.algebra.resultant import uni_resultant
from jacsys.algebra.roots import roots_numeric
from jacsys.algebra.unipoly import UniPoly, poly_gcd, squarefree_part
from jacsys.errors import (
    DivisibleDegreesError,
    EliminationError,
    InvalidParameterError,
    ModulusMismatchError,
    NotInvertibleError,
    RootFindingError,
    ScaleError,
)
from jacsys.laurent import TruncatedLaurentSeries, monic_nth_root, series_pow, split
from jacsys.systems import EquationSet, SolutionTuple, SystemSpec, build_standard, residual
from jacsys.verify import BiPoly, bracket

MAX_UNKNOWNS = 3
MAX_FACTOR_DEGREE = 8
NUMERIC_TOL = 1e-9


def pvar(i: int) -> str:
    return f"p{i}"


def lambda_tilde(n: int, m: int, lambda_tail):
    return lambda_tail * (n * (1 - m - n))


# -- series of a monic polynomial -----------------------------------------
def root_series(p_values, n: int, precision: int) -> TruncatedLaurentSeries:
    """``(x^n + p_(n-2) x^(n-2) + ... + p_0)^(1/n)`` with the given relative precision."""
    coeffs = {n: 1}
    for i, v in enumerate(p_values):
        coeffs[i] = v
    return monic_nth_root(TruncatedLaurentSeries(coeffs, n - precision), n)


def tuple_from_p(p_values, n: int, m: int):
    """``(c_-1, ..., c_-(m+n-2))`` for ``c = p^(1/n)``."""
    c = root_series(p_values, n, m + n - 1)
    return tuple(c[-k] for k in range(1, m + n - 1))


# -- reduced system -------------------------------------------------------
def _reduced_equations(n: int, m: int):
    ps = [MultiPoly.var(pvar(i)) for i in range(n - 1)]
    c = root_series(ps, n, m + n - 1)
    cm = series_pow(c, m)
    eqs = [MultiPoly.coerce(cm[-k]) for k in range(1, n - 1)]
    eqs.append(MultiPoly.coerce(cm[1 - n]) - MultiPoly.var("lam"))
    return eqs


def reduce_system(n: int, m: int) -> EquationSet:
    """Equations in ``p_0 .. p_(n-2)`` and ``lam`` for ``c^m`` to be polynomial
    above ``x^(1-n)`` with tail coefficient ``lam`` there."""
    if n < 2 or m < 2:
        raise InvalidParameterError("degrees must be at least 2")
    if n % m == 0 or m % n == 0:
        raise DivisibleDegreesError(
            f"degrees ({n}, {m}): one divides the other, so the system has no solution",
            n=n,
            m=m,
            equations=_reduced_equations(n, m),
        )
    eqs = _reduced_equations(n, m)
    variables = [pvar(i) for i in range(n - 1)]
    weights = {pvar(i): n - i for i in range(n - 1)}
    weights["lam"] = m + n - 1
    return EquationSet(eqs, variables, weights, {"n": n, "m": m}, "reduced")


# -- solving --------------------------------------------------------------
@dataclass
class SolveResult:
    n: int
    m: int
    lambda_tail: object
    eliminant: UniPoly
    squarefree: UniPoly
    solutions: list
    degenerate: bool = False
    mode: str = "exact"

    @property
    def count_over_closure(self) -> int:
        return sum(s.conjugates for s in self.solutions)

    @property
    def scalar_kind(self) -> str:
        kinds = sorted({s.kind for s in self.solutions})
        return kinds[0] if len(kinds) == 1 else ("mixed" if kinds else "none")


def _eliminate(polys, var):
    """Eliminate ``var`` from a list; returns the list of resulting polynomials."""
    with_var = [f for f in polys if f.degree(var) > 0]
    without = [f for f in polys if f and f.degree(var) <= 0]
    if len(with_var) <= 1:
        return without
    with_var.sort(key=lambda f: (f.degree(var), len(f.terms)))
    pivot = with_var[0]
    out = list(without)
    for f in with_var[1:]:
        r = uni_resultant(pivot, f, var)
        if r:
            out.append(r)
    return out


def _as_unipoly(f: MultiPoly, var: str) -> UniPoly:
    parts = f.as_univariate(var)
    top = max(parts) if parts else -1
    return UniPoly([parts[k].constant_value() if k in parts else 0 for k in range(top + 1)], var)


def _specialize(f: MultiPoly, values: dict, var: str) -> UniPoly:
    """``f`` with the given values substituted, as a polynomial in ``var``."""
    parts = f.as_univariate(var)
    top = max(parts) if parts else -1
    coeffs = []
    for k in range(top + 1):
        c = parts.get(k)
        coeffs.append(c.evaluate(values) if c is not None else 0)
    return UniPoly(coeffs, var)


def solve_reduced(n: int, m: int, lambda_tail, mode: str = "exact", seed: int = 0) -> SolveResult:
    """All solutions of the reduced system at the given tail coefficient.

    ``mode="exact"`` returns rational tuples and algebraic families (one
    tuple over ``Q[t]/(h)`` per irreducible factor ``h``, standing for
    ``deg h`` conjugate solutions); branches that would need a tower of
    extensions fall back to complex approximations.  ``mode="complex"``
    returns one complex tuple per solution.
    """
    if mode not in ("exact", "complex"):
        raise InvalidParameterError("mode must be 'exact' or 'complex'")
    if n - 1 > MAX_UNKNOWNS:
        raise ScaleError(f"the reduced system has {n - 1} unknowns; at most {MAX_UNKNOWNS} are supported")
    lambda_tail = Fraction(lambda_tail)
    eqset = reduce_system(n, m)
    eqs = [e.subs({"lam": lambda_tail}) for e in eqset.equations]
    variables = eqset.variables
    layers = [list(eqs)]
    current = list(eqs)
    for var in reversed(variables[1:]):
        current = _eliminate(current, var)
        layers.append(list(current))
    univariate = [f for f in current if f]
    if not univariate:
        raise EliminationError("the eliminant is identically zero")
    eliminant = _as_unipoly(univariate[0], variables[0])
    for f in univariate[1:]:
        eliminant = poly_gcd(eliminant, _as_unipoly(f, variables[0]))
    if not eliminant or eliminant.degree < 1:
        raise EliminationError("elimination left no univariate polynomial with roots")
    sqf = squarefree_part(eliminant)
    layers.reverse()  # layers[k] involves p0 .. pk

    if mode == "exact":
        points = _exact_points(sqf, layers, variables, seed)
    else:
        points = _complex_points(sqf, layers, variables, seed)

    spec_eqs = build_standard(SystemSpec(n, m))
    solutions = []
    for pvals, kind, conj in points:
        if kind == "complex":
            pvals = _newton_polish(eqs, variables, pvals)
            if not all(_approx_zero(e, dict(zip(variables, pvals))) for e in eqs):
                continue
            values = tuple(complex(v) for v in tuple_from_p(pvals, n, m))
            point = dict(zip(spec_eqs.variables, values))
            point["lam"] = complex(-lambda_tail)
            if not all(_approx_zero(e, point) for e in spec_eqs.equations):
                continue
        else:
            assignment = dict(zip(variables, pvals))
            if any(not e.evaluate(assignment) == 0 for e in eqs):
                continue
            values = tuple_from_p(pvals, n, m)
            res = residual(spec_eqs, values, {"lam": -lambda_tail})
            if any(not r == 0 for r in res):
                continue
        solutions.append(SolutionTuple(n, m, values, kind, conj, tuple(pvals)))
    if mode == "complex":
        solutions = _dedupe(solutions)
    solutions.sort(key=_solution_key)
    return SolveResult(n, m, lambda_tail, eliminant, sqf, solutions, lambda_tail == 0, mode)


def _solution_key(s: SolutionTuple):
    def key(v):
        if isinstance(v, complex):
            return (round(v.real, 8), round(v.imag, 8))
        if isinstance(v, AlgebraicElement):
            return (0.0, 0.0)
        return (float(v), 0.0)

    return (s.kind != "rational", s.kind, -s.conjugates, [key(v) for v in s.p])


def _exact_points(sqf: UniPoly, layers, variables, seed):
    """Back-substitution over Q and simple extensions."""
    _, factors = factor_rational(sqf)
    points = []
    for h, _mult in factors:
        if h.degree > MAX_FACTOR_DEGREE:
            points.extend(_complex_from_factor(h, layers, variables, seed))
            continue
        if h.degree == 1:
            root = -h.coeffs[0]
        else:
            root = AlgebraicElement.generator(h.coeffs)
        points.extend(_extend_exact([root], layers, variables, h.degree, seed))
    return points


def _field_gcd(polys):
    g = None
    for f in polys:
        if not f:
            continue
        g = f if g is None else poly_gcd(g, f)
    return g


def _extend_exact(prefix, layers, variables, conj, seed):
    level = len(prefix)
    if level == len(variables):
        return [(tuple(prefix), "rational" if conj == 1 else "algebraic", conj)]
    var = variables[level]
    values = dict(zip(variables, prefix))
    candidates = [_specialize(f, values, var) for f in layers[level]]
    try:
        g = _field_gcd(candidates)
    except NotInvertibleError:
        g = None
    if g is None or g.degree < 1:
        if g is None and all(not f for f in candidates):
            raise EliminationError(f"{var} is not determined at this point (positive-dimensional family)")
        return []
    g = g.monic()
    if g.degree == 1:
        return _extend_exact(prefix + [-g.coeffs[0]], layers, variables, conj, seed)
    if all(isinstance(v, Rational) for v in prefix):
        out = []
        rat = UniPoly([Fraction(c) for c in g.coeffs], var)
        for h, _ in factor_rational(rat)[1]:
            if h.degree == 1:
                out.extend(_extend_exact(prefix + [-h.coeffs[0]], layers, variables, conj, seed))
            elif conj == 1 and h.degree <= MAX_FACTOR_DEGREE:
                t = AlgebraicElement.generator(h.coeffs)
                lifted = [AlgebraicElement.from_rational(v, h.coeffs) for v in prefix]
                out.extend(_extend_exact(lifted + [t], layers, variables, h.degree, seed))
            else:
                out.extend(_numeric_branch(prefix, h, layers, variables, seed))
        return out
    return _numeric_branch(prefix, g, layers, variables, seed)


def _conjugate_values(prefix, conj, seed):
    """All complex specialisations of an exact prefix."""
    alg = [v for v in prefix if isinstance(v, AlgebraicElement)]
    if not alg:
        return [[complex(v) for v in prefix]]
    modulus = UniPoly(alg[0].modulus, "t")
    out = []
    for z in roots_numeric(modulus, seed=seed):
        out.append([v.to_complex(z) if isinstance(v, AlgebraicElement) else complex(v) for v in prefix])
    return out


def _numeric_branch(prefix, g, layers, variables, seed):
    """Finish a branch numerically once exact extension would need a tower."""
    out = []
    for start in _conjugate_values(prefix, 1, seed):
        out.extend(_extend_complex(start, layers, variables, seed))
    return out


def _complex_from_factor(h, layers, variables, seed):
    out = []
    for z in roots_numeric(h, seed=seed):
        out.extend(_extend_complex([z], layers, variables, seed))
    return out


def _complex_points(sqf, layers, variables, seed):
    out = []
    for z in roots_numeric(sqf, seed=seed):
        out.extend(_extend_complex([z], layers, variables, seed))
    return out


def _eval_scale(f: MultiPoly, values: dict):
    total = 0
    scale = 0.0
    for mono, c in f.terms.items():
        t = complex(c)
        for v, e in mono:
            t *= complex(values[v]) ** e
        total += t
        scale += abs(t)
    return total, scale


def _approx_zero(f: MultiPoly, values: dict, tol: float = NUMERIC_TOL) -> bool:
    total, scale = _eval_scale(f, values)
    return abs(total) <= tol * max(1.0, scale)


def _extend_complex(prefix, layers, variables, seed):
    level = len(prefix)
    if level == len(variables):
        return [(tuple(prefix), "complex", 1)]
    var = variables[level]
    values = dict(zip(variables, prefix))
    polys = []
    for f in layers[level]:
        parts = f.as_univariate(var)
        top = max(parts) if parts else -1
        coeffs = []
        for k in range(top + 1):
            if k in parts:
                val, scale = _eval_scale(parts[k], values)
                coeffs.append(0j if abs(val) <= NUMERIC_TOL * max(1.0, scale) else val)
            else:
                coeffs.append(0j)
        polys.append(UniPoly(coeffs, var))
    nonconstant = [p for p in polys if p.degree >= 1]
    if not nonconstant:
        return []
    pivot = min(nonconstant, key=lambda p: p.degree)
    try:
        roots = roots_numeric(pivot, seed=seed)
    except RootFindingError as exc:
        roots = exc.partial or []
    out = []
    for z in _distinct(roots):
        trial = values | {var: z}
        if all(_approx_zero(f, trial, 1e-6) for f in layers[level]):
            out.extend(_extend_complex(prefix + [z], layers, variables, seed))
    return out


def _distinct(zs, tol: float = 1e-8):
    out = []
    for z in zs:
        if all(abs(z - w) > tol * (1 + abs(w)) for w in out):
            out.append(z)
    return out


def _newton_polish(eqs, variables, pvals, steps: int = 8):
    """A few Newton steps on the square reduced system (complex arithmetic)."""
    import numpy as np

    x = np.array([complex(v) for v in pvals])
    jac = [[e.diff(v) for v in variables] for e in eqs]
    for _ in range(steps):
        vals = dict(zip(variables, x))
        F = np.array([_eval_scale(e, vals)[0] for e in eqs])
        if np.max(np.abs(F), initial=0.0) < 1e-15:
            break
        J = np.array([[_eval_scale(d, vals)[0] if d else 0j for d in row] for row in jac])
        try:
            dx = np.linalg.solve(J, F)
        except np.linalg.LinAlgError:
            break
        x = x - dx
        if np.max(np.abs(dx), initial=0.0) < 1e-15 * (1 + np.max(np.abs(x))):
            break
    return tuple(complex(v) for v in x)


def _dedupe(solutions):
    out = []
    for s in solutions:
        if all(
            max(abs(a - b) for a, b in zip(s.values, t.values)) > 1e-8 for t in out
        ):
            out.append(s)
    return out


# -- polynomial pairs ------------------------------------------------------
def _is_close(a, b, tol=NUMERIC_TOL) -> bool:
    if isinstance(a, complex) or isinstance(b, complex) or isinstance(a, float) or isinstance(b, float):
        return abs(complex(a) - complex(b)) <= tol * max(1.0, abs(complex(a)), abs(complex(b)))
    return a == b


def _poly_is_zero(p: UniPoly, tol=NUMERIC_TOL) -> bool:
    return all(_is_close(c, 0, tol) for c in p.coeffs)


@dataclass
class PolynomialPair:
    p: UniPoly
    q: UniPoly
    lambda_tail: object

    def __post_init__(self):
        n, m = self.p.degree, self.q.degree
        if n < 1 or m < 1:
            raise InvalidParameterError("p and q must be nonconstant")
        if not _is_close(self.p.lead, 1) or not _is_close(self.q.lead, 1):
            raise InvalidParameterError("p and q must be monic")
        if not _is_close(self.p[n - 1], 0):
            raise InvalidParameterError("p must have no x^(n-1) term")

    @property
    def n(self) -> int:
        return self.p.degree

    @property
    def m(self) -> int:
        return self.q.degree

    @property
    def lambda_tilde(self):
        return lambda_tilde(self.n, self.m, self.lambda_tail)


def pair_from_solution(solution: SolutionTuple) -> PolynomialPair:
    """``p = C^n``, ``q`` the polynomial part of ``C^m`` and the tail of ``C^m``."""
    n, m = solution.n, solution.m
    N = n + m - 2
    c = TruncatedLaurentSeries({1: 1, **{-k: v for k, v in enumerate(solution.values, start=1)}}, -N)
    p, _ = split(series_pow(c, n))
    q, tail = split(series_pow(c, m))
    return PolynomialPair(p, q, tail[1 - n])


@dataclass
class Condition:
    holds: bool
    witness: object = None
    detail: str = ""


@dataclass
class ConditionReport:
    conditions: dict = field(default_factory=dict)

    def __getitem__(self, k):
        return self.conditions[k]

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.conditions.values())

    def booleans(self) -> dict:
        return {k: c.holds for k, c in self.conditions.items()}


def check_conditions(pair: PolynomialPair) -> ConditionReport:
    """Evaluate the bracket, Wronskian, power-difference and root conditions."""
    p, q = pair.p, pair.q
    n, m = pair.n, pair.m
    lt = pair.lambda_tilde
    exact = not any(isinstance(c, complex) for c in p.coeffs + q.coeffs) and not isinstance(lt, complex)
    report = {}

    # Wronskian: m p' q - n p q' is the constant lambda~.
    W = p.derivative() * q * m - p * q.derivative() * n
    ok4 = _poly_is_zero(W - lt)
    report[4] = Condition(ok4, W, "m p' q - n p q' = lambda~")

    # p^m - q^n = n lambda x^(mn-m-n+1) + lower.
    D = p**m - q**n
    top = m * n - m - n + 1
    high_ok = all(_is_close(D[k], 0) for k in range(top + 1, max(D.degree, top) + 1))
    ok5 = high_ok and _is_close(D[top], pair.lambda_tail * n)
    report[5] = Condition(ok5, D, "p^m - q^n = n lambda x^(mn-m-n+1) + lower")

    # Bracket of the homogenised pair is lambda~ Y^(m+n-2).
    P = BiPoly.homogenize(p, n)
    Q = BiPoly.homogenize(q, m)
    J = bracket(P, Q)
    target = BiPoly({(0, m + n - 2): lt})
    if exact:
        ok3 = J == target
    else:
        keys = set(J.terms) | set(target.terms)
        ok3 = all(_is_close(J.terms.get(k, 0), target.terms.get(k, 0)) for k in keys)
    report[3] = Condition(ok3, J, "[P, Q] = lambda~ Y^(m+n-2)")

    # g = pq squarefree, m g' = lambda~ at roots of p, n g' = -lambda~ at roots of q.
    g = p * q
    dg = g.derivative()
    r_p = (dg * m - lt) % p
    r_q = (dg * n + lt) % q
    if exact:
        common = poly_gcd(g, dg)
        separable = common.degree == 0
        witness = common
    else:
        roots = roots_numeric(g)
        gaps = [abs(a - b) for i, a in enumerate(roots) for b in roots[i + 1 :]]
        separable = min(gaps, default=1.0) > 1e-6
        witness = min(gaps, default=None)
    ok6 = separable and _poly_is_zero(r_p) and _poly_is_zero(r_q)
    report[6] = Condition(ok6, {"gcd": witness, "rem_p": r_p, "rem_q": r_q}, "g = pq separable with root conditions")
    return ConditionReport(report)


# -- normalisation ---------------------------------------------------------
def _rational_root(value: Fraction, e: int):
    """A rational ``a`` with ``a^e = value`` (positive when possible), else None."""
    if value == 0:
        return Fraction(0)
    sign = 1
    if value < 0:
        if e % 2 == 0:
            return None
        sign = -1
    num, den = abs(value.numerator), value.denominator

    def iroot(k):
        r = round(k ** (1.0 / e))
        for cand in (r - 1, r, r + 1):
            if cand >= 0 and cand**e == k:
                return cand
        lo, hi = 0, k + 1
        while lo < hi:
            mid = (lo + hi) // 2
            if mid**e < k:
                lo = mid + 1
            else:
                hi = mid
        return lo if lo**e == k else None

    a, b = iroot(num), iroot(den)
    if a is None or b is None:
        return None
    return sign * Fraction(a, b)


def normalize_inf_equiv(p: UniPoly, q: UniPoly) -> PolynomialPair:
    """Shift and rescale ``x`` so that ``p`` loses its ``x^(n-1)`` term and the
    Wronskian becomes 1.

    With ``b = p_(n-1) / n`` and ``a^(m+n-1) = lambda~`` the new pair is
    ``a^-n p(a x - b)``, ``a^-m q(a x - b)``.  When ``lambda~`` is not a
    rational ``(m+n-1)``-th power, ``a`` is the class of ``t`` modulo
    ``t^(m+n-1) - lambda~``.
    """
    n, m = p.degree, q.degree
    if not p.lead == 1 or not q.lead == 1:
        raise InvalidParameterError("p and q must be monic")
    W = p.derivative() * q * m - p * q.derivative() * n
    if W.degree > 0:
        raise InvalidParameterError("the Wronskian m p' q - n p q' is not constant")
    lt = W[0]
    if lt == 0:
        raise InvalidParameterError("the Wronskian vanishes")
    b = Fraction(p[n - 1]) / n
    shift = UniPoly([-b, 1], p.var)
    ps = p.compose(shift)
    qs = q.compose(shift)
    e = m + n - 1
    a = _rational_root(Fraction(lt), e)
    if a is not None:
        ainv = 1 / a
        pow_a = lambda k: a**k if k >= 0 else ainv ** (-k)
    else:
        modulus = [-Fraction(lt)] + [0] * (e - 1) + [1]
        a = AlgebraicElement.generator(modulus)
        ainv = a ** (e - 1) / Fraction(lt)
        pow_a = lambda k: a**k if k >= 0 else ainv ** (-k)
    p1 = UniPoly([c * pow_a(k - n) for k, c in enumerate(ps.coeffs)], p.var)
    q1 = UniPoly([c * pow_a(k - m) for k, c in enumerate(qs.coeffs)], q.var)
    W1 = p1.derivative() * q1 * m - p1 * q1.derivative() * n
    if not (W1.degree == 0 and W1[0] == 1):
        raise AssertionError("normalised pair does not have unit Wronskian")
    return PolynomialPair(p1, q1, Fraction(1, n * (1 - m - n)))


# -- orbit action ----------------------------------------------------------
def orbit_act(i: int, solution: SolutionTuple, e: int) -> SolutionTuple:
    """Scale ``c_-k`` by ``u^((k+1) i)`` with ``u`` a primitive ``e``-th root of unity.

    ``e`` must equal ``m + n - 1``.  If the input solves the standard
    system at its own tail coefficient, so does the output (checked).
    """
    n, m = solution.n, solution.m
    if e != m + n - 1:
        raise InvalidParameterError(f"orbit order must be m + n - 1 = {m + n - 1}, got {e}")
    values = []
    for v in solution.values:
        if isinstance(v, CyclotomicElement):
            if v.e != e:
                raise ModulusMismatchError(f"value lives in Q(zeta_{v.e}), expected Q(zeta_{e})")
            values.append(v)
        elif isinstance(v, Rational):
            values.append(CyclotomicElement.from_rational(v, e))
        else:
            raise InvalidParameterError("orbit action needs rational or cyclotomic values")
    u = CyclotomicElement.u(e)
    out = tuple(v * u ** (((k + 1) * i) % e) for k, v in enumerate(values, start=1))
    eqs = build_standard(SystemSpec(n, m))
    from jacsys.verify import lambda_tail_of

    lt_in = lambda_tail_of(values, n, m)
    if all(r == 0 for r in residual(eqs, values, {"lam": -lt_in})):
        lt_out = lambda_tail_of(out, n, m)
        if not all(r == 0 for r in residual(eqs, out, {"lam": -lt_out})) or not lt_out == lt_in:
            raise AssertionError("orbit image is not a solution")
    return SolutionTuple(n, m, out, "cyclotomic", 1)


def embed_family(solution: SolutionTuple, e: int):
    """All specialisations of an algebraic family whose modulus splits into
    powers of a primitive ``e``-th root of unity, as cyclotomic tuples."""
    u = CyclotomicElement.u(e)
    alg = [v for v in solution.values + solution.p if isinstance(v, AlgebraicElement)]
    if not alg:
        return [SolutionTuple(solution.n, solution.m, tuple(CyclotomicElement.from_rational(v, e) for v in solution.values), "cyclotomic")]
    modulus = UniPoly(alg[0].modulus, "t")
    out = []
    for j in range(e):
        root = u**j
        if modulus(root) == 0:
            vals = tuple(
                v.lift(root) if isinstance(v, AlgebraicElement) else CyclotomicElement.from_rational(v, e)
                for v in solution.values
            )
            out.append(SolutionTuple(solution.n, solution.m, vals, "cyclotomic"))
    return out


def principal_root(e: int) -> complex:
    return cmath.exp(2j * cmath.pi / e)
