"""Generation of the coefficient equation systems.

Every builder expands powers of a generic series

    Z = x^r + sum_j Z_j x^j

with :class:`MultiPoly` coefficients and reads off coefficients of
``x^-k``.  The four families differ only in the shape of ``Z`` and in
which coefficients are collected:

* standard: ``r = 1``; ``(Z^n)_-k`` for ``k < m``, then
  ``(sum lam_i Z^(m-i))_-k`` for ``k < n - 1`` and finally that
  coefficient at ``x^(1-n)`` plus the datum;
* homogeneous: the standard system with datum ``Y^(m+n-1)``;
* modified: leading exponent ``r`` and an extra tail term
  ``datum * Z^tail_power`` in the second block;
* sparse: ``Z`` supported on degrees ``r, r-d, r-2d, ...`` with
  ``r = gcd(n, m)``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Mapping, Optional, Sequence

from jacsys.algebra.multipoly import MultiPoly, zvar
from jacsys.errors import (
    DegreeCapError,
    DivisibleDegreesError,
    InvalidParameterError,
    TruncationError,
)
from jacsys.laurent import TruncatedLaurentSeries, monic_nth_root, series_pow

DATUM = "lam"
DEFAULT_MAX_DEGREE = 64


def max_degree() -> int:
    raw = os.environ.get("JS_MAX_DEGREE", "")
    try:
        return int(raw) if raw else DEFAULT_MAX_DEGREE
    except ValueError:
        raise InvalidParameterError(f"JS_MAX_DEGREE must be an integer, got {raw!r}")


def _check_cap(degree: int):
    cap = max_degree()
    if degree > cap:
        raise DegreeCapError(f"expansion degree {degree} exceeds the cap {cap} (JS_MAX_DEGREE)")


@dataclass(frozen=True)
class SystemSpec:
    n: int
    m: int
    lambdas: tuple = ()
    datum: object = None
    lead_exponent: int = 1
    support_step: int = 1
    tail_power: Optional[int] = None

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise InvalidParameterError("degrees n and m must be positive")
        if self.lead_exponent < 1 or self.support_step < 1:
            raise InvalidParameterError("lead exponent and support step must be positive")
        size = self.m + self.n - 1
        lambdas = tuple(Fraction(x) for x in self.lambdas) if self.lambdas else (Fraction(1),) + (Fraction(0),) * (size - 1)
        if len(lambdas) != size:
            raise InvalidParameterError(f"expected {size} lambdas (lambda_0..lambda_{size - 1}), got {len(lambdas)}")
        if lambdas[0] != 1:
            raise InvalidParameterError("lambda_0 must equal 1")
        object.__setattr__(self, "lambdas", lambdas)
        if self.datum is not None and not isinstance(self.datum, MultiPoly):
            object.__setattr__(self, "datum", Fraction(self.datum))

    @property
    def size(self) -> int:
        return self.m + self.n - 2

    def datum_poly(self) -> MultiPoly:
        if self.datum is None:
            return MultiPoly.var(DATUM)
        return MultiPoly.coerce(self.datum)

    def params(self) -> dict:
        from jacsys.serialize import format_multipoly, format_rational

        datum = "formal" if self.datum is None else (
            format_multipoly(self.datum) if isinstance(self.datum, MultiPoly) else format_rational(self.datum)
        )
        out = {
            "n": self.n,
            "m": self.m,
            "lambdas": [format_rational(x) for x in self.lambdas],
            "datum": datum,
            "lead_exponent": self.lead_exponent,
            "support_step": self.support_step,
        }
        if self.tail_power is not None:
            out["tail_power"] = self.tail_power
        return out


@dataclass
class EquationSet:
    equations: list
    variables: list
    weights: dict
    params: dict = field(default_factory=dict)
    kind: str = "standard"

    def __len__(self):
        return len(self.equations)

    def __iter__(self):
        return iter(self.equations)

    def all_variables(self):
        seen = set(self.variables)
        extra = sorted({v for e in self.equations for v in e.variables()} - seen)
        return list(self.variables) + extra


@dataclass(frozen=True)
class SolutionTuple:
    """A point ``(C_-1, ..., C_-(m+n-2))`` over some scalar ring.

    ``conjugates`` counts the solutions an algebraic family stands for;
    ``p`` optionally records the reduced coordinates it came from.
    """

    n: int
    m: int
    values: tuple
    kind: str = "rational"
    conjugates: int = 1
    p: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        object.__setattr__(self, "p", tuple(self.p))
        if len(self.values) != self.n + self.m - 2:
            raise InvalidParameterError(
                f"a solution for (n, m) = ({self.n}, {self.m}) has {self.n + self.m - 2} entries"
            )

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, k):
        return self.values[k]

    def as_point(self) -> dict:
        return {zvar(-k): v for k, v in enumerate(self.values, start=1)}


# -- shared expansion machinery -------------------------------------------
def generic_series(lead: int, degrees: Sequence[int], cutoff: int) -> TruncatedLaurentSeries:
    """``x^lead + sum Z_j x^j`` over the given degrees."""
    coeffs = {lead: MultiPoly.const(1)}
    for j in degrees:
        coeffs[j] = MultiPoly.var(zvar(j))
    return TruncatedLaurentSeries(coeffs, cutoff)


def _coeff(series: TruncatedLaurentSeries, degree: int) -> MultiPoly:
    try:
        return MultiPoly.coerce(series[degree])
    except TruncationError as exc:
        raise TruncationError(f"internal truncation too shallow for degree {degree}") from exc


def _weights(variables, r: int, datum_weight: int) -> dict:
    from jacsys.algebra.multipoly import zindex

    w = {v: r - zindex(v) for v in variables}
    w["Y"] = 1
    w[DATUM] = datum_weight
    return w


def _check_not_divisible(n: int, m: int):
    if n % m == 0 or m % n == 0:
        raise DivisibleDegreesError(f"degrees ({n}, {m}): one divides the other", n=n, m=m)


def _mixed_power(Z, spec: SystemSpec):
    """``sum_i lam_i Z^(m-i)`` over the nonzero lambdas with ``m - i >= 1``."""
    total = None
    for i, lam in enumerate(spec.lambdas):
        if lam == 0 or spec.m - i < 1:
            continue
        term = series_pow(Z, spec.m - i).scale(MultiPoly.const(lam))
        total = term if total is None else total + term
    return total


# -- builders -------------------------------------------------------------
def build_standard(spec: SystemSpec) -> EquationSet:
    if spec.lead_exponent != 1 or spec.support_step != 1 or spec.tail_power is not None:
        raise InvalidParameterError("standard systems need lead exponent 1, step 1 and no tail")
    n, m = spec.n, spec.m
    _check_not_divisible(n, m)
    _check_cap(max(n, m))
    N = spec.size
    degrees = list(range(-1, -N - 1, -1))
    Z = generic_series(1, degrees, -N)
    Zn = series_pow(Z, n)
    mixed = _mixed_power(Z, spec)
    eqs = [_coeff(Zn, -k) for k in range(1, m)]
    eqs += [_coeff(mixed, -k) for k in range(1, n - 1)]
    eqs.append(_coeff(mixed, 1 - n) + spec.datum_poly())
    variables = [zvar(j) for j in degrees]
    return EquationSet(eqs, variables, _weights(variables, 1, m + n - 1), spec.params(), "standard")


def build_homogeneous(n: int, m: int) -> EquationSet:
    spec = SystemSpec(n, m, datum=MultiPoly.var("Y") ** (m + n - 1))
    eqs = build_standard(spec)
    eqs.kind = "homogeneous"
    return eqs


def build_modified(r: int, n: int = 2, m: int = 3, tail_power: int = -1, datum=None) -> EquationSet:
    """Systems with leading exponent ``r`` and a tail term ``datum * Z^tail_power``.

    With ``L = (m + n - 1) r - 1`` the unknowns are ``Z_(r-2), ..., Z_-L``
    (no ``x^(r-1)`` term), followed by ``(Z^n)_-k`` for
    ``k = 1..L - (n-1) r`` and ``(Z^m + datum Z^tail)_-k`` for
    ``k = 1..L - (m-1) r``.  ``r = 1`` gives back the standard system
    written with a tail instead of an additive datum.
    """
    spec = SystemSpec(n, m, datum=datum, lead_exponent=r, tail_power=tail_power)
    return build_generalized(spec)


def build_sparse(n: int, m: int, d: int, datum=None) -> EquationSet:
    r = gcd(n, m)
    return build_generalized(SystemSpec(n, m, datum=datum, lead_exponent=r, support_step=d))


def _sparse_shape(spec: SystemSpec):
    n, m, d = spec.n, spec.m, spec.support_step
    r = gcd(n, m)
    if spec.lead_exponent != r:
        raise InvalidParameterError(f"sparse systems have lead exponent gcd(n, m) = {r}")
    if (m + n - 1) % d:
        raise InvalidParameterError(f"support step {d} must divide m + n - 1 = {m + n - 1}")
    if d <= r:
        raise InvalidParameterError(f"support step {d} must exceed gcd(n, m) = {r}")
    if m % d != 1 % d or n % d != 0:
        raise InvalidParameterError("sparse systems need m = 1 and n = 0 modulo the support step")
    return r, (m + n - 1) // d


def build_generalized(spec: SystemSpec) -> EquationSet:
    if any(lam for lam in spec.lambdas[1:]):
        raise InvalidParameterError("generalized shapes take lambda_i = 0 for i > 0")
    if spec.support_step > 1:
        return _build_sparse(spec)
    if spec.tail_power is None:
        if spec.lead_exponent == 1:
            return build_standard(spec)
        raise InvalidParameterError("a lead exponent above 1 needs a tail power or a support step")
    return _build_modified(spec)


def _build_modified(spec: SystemSpec) -> EquationSet:
    n, m, r, tail = spec.n, spec.m, spec.lead_exponent, spec.tail_power
    if tail >= 0:
        raise InvalidParameterError("tail power must be negative")
    _check_cap(max(n, m) * r)
    L = (m + n - 1) * r - 1
    k1 = L - (n - 1) * r
    k2 = L - (m - 1) * r
    degrees = list(range(r - 2, -L - 1, -1))
    Z = generic_series(r, degrees, -L)
    Zn = series_pow(Z, n)
    second = series_pow(Z, m) + series_pow(Z, tail).scale(spec.datum_poly())
    eqs = [_coeff(Zn, -k) for k in range(1, k1 + 1)]
    eqs += [_coeff(second, -k) for k in range(1, k2 + 1)]
    variables = [zvar(j) for j in degrees]
    return EquationSet(eqs, variables, _weights(variables, r, (m - tail) * r), spec.params(), "modified")


def _build_sparse(spec: SystemSpec) -> EquationSet:
    n, m, d = spec.n, spec.m, spec.support_step
    r, N = _sparse_shape(spec)
    _check_cap(max(n, m))
    degrees = [r - k * d for k in range(1, N + 1)]
    Z = generic_series(r, degrees, degrees[-1])
    Za = series_pow(Z, n // r)
    Zb = series_pow(Z, m // r)
    eqs = [_coeff(Za, -d * k) for k in range(1, (m - 1) // d + 1)]
    eqs += [_coeff(Zb, -d * k + 1) for k in range(1, n // d)]
    eqs.append(_coeff(Zb, 1 - n) + spec.datum_poly())
    variables = [zvar(j) for j in degrees]
    return EquationSet(eqs, variables, _weights(variables, r, m + n - 1), spec.params(), "sparse")


# -- extension ------------------------------------------------------------
def _force_polynomial_power(coeffs: list, known: int, power: int, count: int) -> list:
    """Extend ``coeffs`` (``a_0 = 1, a_1, ...`` of a monic series) to ``count`` terms.

    Entries ``a_j`` for ``j > known`` are chosen so that the coefficient
    of ``t^j`` in ``(1 + a_1 t + ...)^power`` vanishes.  Miller's
    recurrence gives that coefficient as ``power * a_j`` plus terms in
    earlier coefficients, so each new entry is determined uniquely.
    """
    a = list(coeffs[: known + 1])
    b = [1]
    for j in range(1, count):
        rest = 0
        for i in range(1, j if j > known else j + 1):
            ai = a[i]
            if ai == 0:
                continue
            w = (power + 1) * i - j
            if w:
                rest = ai * b[j - i] * w + rest
        rest = rest * Fraction(1, j)
        if j > known:
            a.append(-rest * Fraction(1, power))
            b.append(0)
        else:
            b.append(rest)
    return a


def extend_series(spec: SystemSpec, partial, order: int) -> TruncatedLaurentSeries:
    """The series of the (generalized) system extended down to ``x^-order``.

    ``partial`` lists the values of the system's unknowns in order.  The
    new coefficients make ``Z^(n/r)`` a polynomial beyond the degrees the
    prefix already fixes.
    """
    r = spec.lead_exponent
    values = list(partial)
    if spec.support_step > 1:
        _, N = _sparse_shape(spec)
        degrees = [r - k * spec.support_step for k in range(1, N + 1)]
    elif spec.tail_power is not None:
        L = (spec.m + spec.n - 1) * r - 1
        degrees = list(range(r - 2, -L - 1, -1))
    else:
        degrees = list(range(-1, -spec.size - 1, -1))
    if len(values) != len(degrees):
        raise InvalidParameterError(f"expected {len(degrees)} prefix values, got {len(values)}")
    lowest = degrees[-1]
    if order < -lowest:
        raise InvalidParameterError(f"order must be at least {-lowest}")
    power = spec.n // r
    known = r - lowest
    a = [0] * (known + 1)
    a[0] = 1
    for deg, v in zip(degrees, values):
        a[r - deg] = v
    a = _force_polynomial_power(a, known, power, r + order + 1)
    return TruncatedLaurentSeries({r - j: c for j, c in enumerate(a)}, -order)


def extend_solution(spec: SystemSpec, partial, order: int) -> list:
    """Coefficients at degrees ``-1 .. -order`` of the uniquely extended series."""
    s = extend_series(spec, partial, order)
    return [s[-k] for k in range(1, order + 1)]


def recover_root_series(spec: SystemSpec, partial, order: int) -> TruncatedLaurentSeries:
    """Extend a generalized solution and take the monic ``r``-th root.

    For sparse systems this is the series ``C`` with ``C^n`` a polynomial
    whose coefficients vanish off the support progression.
    """
    s = extend_series(spec, partial, order)
    return monic_nth_root(s, spec.lead_exponent)


# -- evaluation -----------------------------------------------------------
def residual(eqs: EquationSet, point, extra: Optional[Mapping] = None) -> list:
    """Evaluate every equation at ``point`` (a mapping or a sequence aligned
    with ``eqs.variables``); ``extra`` supplies values for ``Y``, ``lam``."""
    if isinstance(point, SolutionTuple):
        values = point.as_point()
    elif isinstance(point, Mapping):
        values = dict(point)
    else:
        seq = list(point)
        if len(seq) != len(eqs.variables):
            raise InvalidParameterError(
                f"point has {len(seq)} entries, system has {len(eqs.variables)} unknowns"
            )
        values = dict(zip(eqs.variables, seq))
    if extra:
        values.update(extra)
    out = []
    for eq in eqs.equations:
        missing = [v for v in eq.variables() if v not in values]
        if missing:
            raise InvalidParameterError(f"missing assignment for {', '.join(missing)}")
        out.append(eq.evaluate(values))
    return out


def check_w_homogeneity(eqs: EquationSet) -> list:
    """Per equation: ``(True, wdeg)`` if all terms share one weighted degree,
    otherwise ``(False, None)``."""
    out = []
    for eq in eqs.equations:
        degs = eq.weighted_degrees(eqs.weights)
        if len(degs) == 1:
            out.append((True, degs.pop()))
        else:
            out.append((False, None))
    return out
