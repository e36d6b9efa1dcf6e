"""Checks on bivariate pairs and on lifted solutions.

:class:`BiPoly` is a polynomial in ``x`` and ``Y`` with generic
coefficients (``Y`` may carry negative exponents when the Laurent flag is
set).  The remaining functions verify the bracket of a pair, the degree
bounds satisfied by solutions over ``K[Y]`` and the homogeneous lift of a
scalar solution.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from jacsys.algebra.multipoly import MultiPoly
from jacsys.algebra.unipoly import UniPoly
from jacsys.errors import InvalidParameterError, NotASolutionError, TruncationError
from jacsys.laurent import TruncatedLaurentSeries, series_pow
from jacsys.systems import SolutionTuple, SystemSpec, build_standard, extend_series, residual


class BiPoly:
    __slots__ = ("terms", "laurent")

    def __init__(self, terms=None, laurent: bool = False):
        self.laurent = laurent
        self.terms = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or (j < 0 and not laurent):
                raise InvalidParameterError("negative exponent in a polynomial (set laurent=True for Y)")
            if not c == 0:
                self.terms[(int(i), int(j))] = c

    @classmethod
    def x(cls) -> BiPoly:
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> BiPoly:
        return cls({(0, 1): 1})

    @classmethod
    def const(cls, c) -> BiPoly:
        return cls({(0, 0): c})

    @classmethod
    def homogenize(cls, p: UniPoly, degree=None) -> BiPoly:
        """``Y^d p(x / Y)`` with ``d = deg p`` unless given."""
        d = p.degree if degree is None else degree
        return cls({(k, d - k): c for k, c in enumerate(p.coeffs)})

    @classmethod
    def from_x_poly(cls, coeffs) -> BiPoly:
        """From a sequence of ``UniPoly``-in-``Y`` coefficients of ``x^0, x^1, ...``."""
        terms = {}
        for i, c in enumerate(coeffs):
            c = c if isinstance(c, UniPoly) else UniPoly([c], "Y")
            for j, a in enumerate(c.coeffs):
                terms[(i, j)] = a
        return cls(terms)

    def _wrap(self, other):
        if isinstance(other, BiPoly):
            return other
        return BiPoly.const(other)

    def __add__(self, other):
        other = self._wrap(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return BiPoly(out, self.laurent or other.laurent)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -c for k, c in self.terms.items()}, self.laurent)

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        other = self._wrap(other)
        out = {}
        for (a, b), c in self.terms.items():
            for (d, e), f in other.terms.items():
                k = (a + d, b + e)
                t = c * f
                out[k] = out[k] + t if k in out else t
        return BiPoly(out, self.laurent or other.laurent)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = BiPoly.const(1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._wrap(other)
        keys = set(self.terms) | set(other.terms)
        return all(self.terms.get(k, 0) == other.terms.get(k, 0) for k in keys)

    def __bool__(self):
        return bool(self.terms)

    def diff_x(self) -> BiPoly:
        return BiPoly({(i - 1, j): c * i for (i, j), c in self.terms.items() if i}, self.laurent)

    def diff_y(self) -> BiPoly:
        return BiPoly({(i, j - 1): c * j for (i, j), c in self.terms.items() if j}, self.laurent)

    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def degree_x(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def degree_y(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def x_coeff(self, i: int) -> dict:
        """Coefficient of ``x^i`` as a map ``Y-exponent -> coefficient``."""
        return {j: c for (a, j), c in self.terms.items() if a == i}

    def is_constant(self) -> bool:
        return all(k == (0, 0) for k in self.terms)

    def evaluate(self, x, y):
        acc = 0
        for (i, j), c in self.terms.items():
            acc = c * x**i * y**j + acc
        return acc

    def __repr__(self):
        return f"BiPoly({self})"

    def __str__(self):
        from jacsys.serialize import format_scalar

        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms.items(), key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0])):
            mono = " ".join(
                s for s in (
                    "" if i == 0 else ("x" if i == 1 else f"x^{i}"),
                    "" if j == 0 else ("Y" if j == 1 else f"Y^{j}"),
                ) if s
            )
            coeff = format_scalar(c)
            parts.append(mono if coeff == "1" and mono else (f"{coeff} {mono}" if mono else coeff))
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self):
        from jacsys.serialize import scalar_to_json

        return {
            "terms": [
                {"x": i, "y": j, "coeff": scalar_to_json(c)}
                for (i, j), c in sorted(self.terms.items())
            ]
        }


def bracket(P: BiPoly, Q: BiPoly) -> BiPoly:
    """``P_x Q_Y - Q_x P_Y``."""
    return P.diff_x() * Q.diff_y() - Q.diff_x() * P.diff_y()


# -- pair verification ----------------------------------------------------
@dataclass
class PairReport:
    n: int
    m: int
    jacobian: BiPoly
    constant_jacobian: bool
    non_divisible: bool
    normal_form: bool
    reasons: list = field(default_factory=list)

    @property
    def counterexample(self) -> bool:
        return not self.reasons

    def to_json(self):
        return {
            "n": self.n,
            "m": self.m,
            "jacobian": self.jacobian.to_json(),
            "constant_jacobian": self.constant_jacobian,
            "non_divisible": self.non_divisible,
            "normal_form": self.normal_form,
            "counterexample": self.counterexample,
            "reasons": list(self.reasons),
        }


def _normal_shape(F: BiPoly, d: int, kill_subleading: bool) -> bool:
    if F.degree_x() != d:
        return False
    top = F.x_coeff(d)
    if set(top) != {0} or not top[0] == 1:
        return False
    if kill_subleading and F.x_coeff(d - 1):
        return False
    for i in range(1, d + 1):
        coeff = F.x_coeff(d - i)
        if coeff and max(coeff) > i:
            return False
    return True


def verify_pair(P: BiPoly, Q: BiPoly) -> PairReport:
    """Report whether ``(P, Q)`` has the shape of a counterexample pair.

    The verdict needs a nonzero constant bracket, degrees neither of
    which divides the other, and ``P``, ``Q`` monic in ``x`` with the
    ``Y``-degree bounds of the normal form (plus no ``x^(n-1)`` term in ``P``).
    """
    n, m = P.total_degree(), Q.total_degree()
    J = bracket(P, Q)
    constant = J.is_constant() and bool(J)
    non_div = n > 0 and m > 0 and n % m != 0 and m % n != 0
    normal = _normal_shape(P, n, True) and _normal_shape(Q, m, False)
    reasons = []
    if not J:
        reasons.append("zero-jacobian")
    elif not constant:
        reasons.append("non-constant-jacobian")
    if not non_div:
        reasons.append("divisible-degrees")
    if not normal:
        reasons.append("not-normal-form")
    return PairReport(n, m, J, constant, non_div, normal, reasons)


# -- degree bounds --------------------------------------------------------
def _ydeg(c) -> int:
    if isinstance(c, UniPoly):
        return c.degree
    return -1 if c == 0 else 0


@dataclass
class DegreeReport:
    order: int
    c_violations: list
    f_violations: list
    c_equalities: list
    f_degrees: dict

    @property
    def holds(self) -> bool:
        return not self.c_violations and not self.f_violations

    @property
    def c_holds(self) -> bool:
        return not self.c_violations

    @property
    def f_holds(self) -> bool:
        return not self.f_violations

    def to_json(self):
        return {
            "order": self.order,
            "holds": self.holds,
            "c_violations": self.c_violations,
            "f_violations": self.f_violations,
            "c_equalities": self.c_equalities,
        }


def degree_bounds(prefix, n: int, m: int, order: int, lambdas=()) -> DegreeReport:
    """Check ``deg_Y C_-k <= k + 1`` and ``deg_Y F_-k <= 2 - n + k``.

    ``prefix`` holds ``C_-1 .. C_-(m+n-2)`` as polynomials in ``Y``.  The
    series is extended to ``order`` by the unique recursion, and
    ``F = -(sum lam_i C^(m-i))_-`` is its negative part; the ``F`` bound
    is checked for ``n <= k <= order - m + 1`` (the degrees the truncated
    expansion determines).
    """
    spec = SystemSpec(n, m, lambdas=tuple(lambdas))
    N = spec.size
    prefix = [c if isinstance(c, UniPoly) else UniPoly([c], "Y") for c in prefix]
    if len(prefix) != N:
        raise InvalidParameterError(f"prefix must have {N} entries")
    zero = UniPoly((), "Y")
    c_violations = [k for k, c in enumerate(prefix, start=1) if _ydeg(c) > k + 1]
    series = extend_series(spec, prefix, order)
    coeffs = [series[-k] for k in range(1, order + 1)]
    c_violations += [k for k in range(N + 1, order + 1) if _ydeg(coeffs[k - 1]) > k + 1]
    c_equalities = [k for k in range(1, order + 1) if _ydeg(coeffs[k - 1]) == k + 1]

    C = TruncatedLaurentSeries(
        {1: UniPoly([1], "Y"), **{-k: coeffs[k - 1] for k in range(1, order + 1)}}, -order
    )
    mixed = None
    for i, lam in enumerate(spec.lambdas):
        if lam == 0 or m - i < 1:
            continue
        term = series_pow(C, m - i).scale(lam)
        mixed = term if mixed is None else mixed + term
    f_degrees = {}
    f_violations = []
    for k in range(n, order + 1):
        try:
            Fk = -mixed[-k]
        except TruncationError:
            break
        Fk = Fk if isinstance(Fk, UniPoly) else UniPoly([Fk], "Y")
        f_degrees[k] = _ydeg(Fk if Fk else zero)
        if f_degrees[k] > 2 - n + k:
            f_violations.append(k)
    return DegreeReport(order, c_violations, f_violations, c_equalities, f_degrees)


# -- homogeneous lift -----------------------------------------------------
def lambda_tail_of(values, n: int, m: int, lambdas=()):
    """``(sum lam_i c^(m-i))_(1-n)`` for a scalar prefix ``c_-1 .. c_-(m+n-2)``."""
    spec = SystemSpec(n, m, lambdas=tuple(lambdas))
    N = spec.size
    c = TruncatedLaurentSeries({1: 1, **{-k: v for k, v in enumerate(values, start=1)}}, -N)
    total = None
    for i, lam in enumerate(spec.lambdas):
        if lam == 0 or m - i < 1:
            continue
        term = series_pow(c, m - i).scale(lam)
        total = term if total is None else total + term
    return total[1 - n]


def lift_homogeneous(solution, n: int = None, m: int = None):
    """``C_-k = c_-k Y^(k+1)`` for a scalar solution ``c``.

    The lift is checked against the homogeneous system with the formal
    datum set to ``-lam_tail Y^(m+n-1)``.
    """
    if isinstance(solution, SolutionTuple):
        n, m, values = solution.n, solution.m, list(solution.values)
    else:
        values = list(solution)
    if n is None or m is None:
        raise InvalidParameterError("degrees n and m are required")
    eqs = build_standard(SystemSpec(n, m))
    lam_tail = lambda_tail_of(values, n, m)
    if any(not r == 0 for r in residual(eqs, values, {"lam": -lam_tail})):
        raise NotASolutionError("tuple does not solve the scalar system")
    lifted = [UniPoly.monomial(k + 1, v, "Y") if not v == 0 else UniPoly((), "Y") for k, v in enumerate(values, start=1)]
    point = {f"Z{-k}": lifted[k - 1] for k in range(1, len(lifted) + 1)}
    point["lam"] = UniPoly.monomial(m + n - 1, -lam_tail, "Y")
    if any(r for r in residual(eqs, point)):
        raise AssertionError("lifted tuple fails the homogeneous system")
    return lifted


def lifted_pair(lifted, n: int, m: int):
    """The bivariate pair ``(P, Q)`` of a lifted prefix: ``P = C^n``, ``Q`` the
    polynomial part of ``C^m``."""
    N = n + m - 2
    C = TruncatedLaurentSeries(
        {1: UniPoly([1], "Y"), **{-k: lifted[k - 1] for k in range(1, N + 1)}}, -N
    )
    Pn = series_pow(C, n)
    Qm = series_pow(C, m)
    P = BiPoly.from_x_poly([Pn[k] for k in range(0, n + 1)])
    Q = BiPoly.from_x_poly([Qm[k] for k in range(0, m + 1)])
    return P, Q


# -- power check ----------------------------------------------------------
class PowerCheck(NamedTuple):
    holds: bool
    checked_down_to: int

    def __bool__(self):
        return self.holds


def is_power_polynomial(C: TruncatedLaurentSeries, d: int, min_depth: int = 1) -> PowerCheck:
    """Whether every known negative-degree coefficient of ``C^d`` vanishes.

    The verdict only covers degrees down to ``checked_down_to``; asking
    for ``min_depth`` more negative degrees than the truncation supports
    is an error.
    """
    if d < 1:
        raise InvalidParameterError("power must be positive")
    Cd = series_pow(C, d)
    depth = -Cd.cutoff
    if depth < min_depth:
        raise TruncationError(
            f"insufficient truncation order: C^{d} is known only down to x^{Cd.cutoff}"
        )
    holds = all(Cd[k] == 0 for k in range(-1, Cd.cutoff - 1, -1))
    return PowerCheck(holds, Cd.cutoff)
