"""Truncated Laurent series in ``x^-1`` over a generic coefficient ring.

A series stores its nonzero coefficients by degree together with an
inclusive ``cutoff``: every coefficient at a degree ``>= cutoff`` is known
(absent means zero) and nothing is known below it.  Operations propagate
the cutoff so that only provably correct coefficients are ever reported.

For a series with leading degree ``L`` the *relative precision* is
``L - cutoff``; products, powers, inverses and roots preserve it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from jacsys.algebra.multipoly import MultiPoly
from jacsys.algebra.unipoly import UniPoly
from jacsys.errors import InvalidParameterError, NotInvertibleError, TruncationError


def ring_inverse(c):
    """Multiplicative inverse of a coefficient, or :class:`NotInvertibleError`."""
    if isinstance(c, Rational):
        if c == 0:
            raise NotInvertibleError("zero is not invertible")
        return 1 / Fraction(c)
    if isinstance(c, MultiPoly):
        if c.is_constant() and c:
            return MultiPoly.const(1 / c.constant_value())
        raise NotInvertibleError("non-constant polynomial coefficient is not invertible")
    if isinstance(c, UniPoly):
        if c.degree == 0:
            return UniPoly([ring_inverse(c.coeffs[0])], c.var)
        raise NotInvertibleError("non-constant polynomial coefficient is not invertible")
    if hasattr(c, "inverse"):
        return c.inverse()
    if c == 0:
        raise NotInvertibleError("zero is not invertible")
    return 1 / c


class TruncatedLaurentSeries:
    __slots__ = ("coeffs", "cutoff", "lead")

    def __init__(self, coeffs, cutoff: int):
        self.cutoff = int(cutoff)
        self.coeffs = {int(k): c for k, c in coeffs.items() if k >= cutoff and not c == 0}
        # A zero series behaves like one whose leading term hides just
        # below the cutoff; that is exactly what the product bounds need.
        self.lead = max(self.coeffs) if self.coeffs else self.cutoff - 1

    @classmethod
    def monomial(cls, degree: int, cutoff: int, coeff=1) -> TruncatedLaurentSeries:
        return cls({degree: coeff}, cutoff)

    @classmethod
    def from_poly(cls, poly, cutoff: int) -> TruncatedLaurentSeries:
        """Series of a polynomial given as ``UniPoly`` or a degree map."""
        if isinstance(poly, UniPoly):
            poly = dict(enumerate(poly.coeffs))
        return cls(dict(poly), cutoff)

    # -- queries ------------------------------------------------------
    @property
    def precision(self) -> int:
        return self.lead - self.cutoff

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead_coeff(self):
        return self.coeffs.get(self.lead, 0)

    def __getitem__(self, k: int):
        if k < self.cutoff:
            raise TruncationError(
                f"insufficient truncation order: degree {k} is below the cutoff {self.cutoff}"
            )
        return self.coeffs.get(k, 0)

    def truncate(self, cutoff: int) -> TruncatedLaurentSeries:
        if cutoff < self.cutoff:
            raise TruncationError("cannot lower the cutoff of a series")
        return TruncatedLaurentSeries(self.coeffs, cutoff)

    def map_coeffs(self, f) -> TruncatedLaurentSeries:
        return TruncatedLaurentSeries({k: f(c) for k, c in self.coeffs.items()}, self.cutoff)

    def __eq__(self, other):
        if not isinstance(other, TruncatedLaurentSeries):
            return NotImplemented
        return self.cutoff == other.cutoff and self.coeffs == other.coeffs

    def agrees_with(self, other) -> bool:
        """Equality on the degrees both series know."""
        low = max(self.cutoff, other.cutoff)
        degrees = {k for k in self.coeffs if k >= low} | {k for k in other.coeffs if k >= low}
        return all(self.coeffs.get(k, 0) == other.coeffs.get(k, 0) for k in degrees)

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, TruncatedLaurentSeries):
            other = TruncatedLaurentSeries({0: other}, self.cutoff)
        cutoff = max(self.cutoff, other.cutoff)
        out = dict((k, c) for k, c in self.coeffs.items() if k >= cutoff)
        for k, c in other.coeffs.items():
            if k >= cutoff:
                out[k] = out[k] + c if k in out else c
        return TruncatedLaurentSeries(out, cutoff)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedLaurentSeries({k: -c for k, c in self.coeffs.items()}, self.cutoff)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> TruncatedLaurentSeries:
        return TruncatedLaurentSeries({k: v * c for k, v in self.coeffs.items()}, self.cutoff)

    def __mul__(self, other):
        if isinstance(other, TruncatedLaurentSeries):
            return series_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return TruncatedLaurentSeries({k: other * v for k, v in self.coeffs.items()}, self.cutoff)

    def __pow__(self, j: int):
        return series_pow(self, j)

    def __repr__(self):
        return f"TruncatedLaurentSeries({self.coeffs!r}, cutoff={self.cutoff})"

    def __str__(self):
        from jacsys.serialize import format_series

        return format_series(self)


def series_mul(a: TruncatedLaurentSeries, b: TruncatedLaurentSeries) -> TruncatedLaurentSeries:
    """Cauchy product keeping only the provably complete coefficients."""
    cutoff = max(a.cutoff + b.lead, b.cutoff + a.lead)
    out = {}
    for i, ai in a.coeffs.items():
        for j, bj in b.coeffs.items():
            k = i + j
            if k < cutoff:
                continue
            t = ai * bj
            out[k] = out[k] + t if k in out else t
    return TruncatedLaurentSeries(out, cutoff)


def _normalized(a: TruncatedLaurentSeries):
    """Coefficients ``a_j`` of ``a / (c x^L)`` at relative index ``j``."""
    lc = a.lead_coeff()
    inv = ring_inverse(lc)
    return [a.coeffs.get(a.lead - j, 0) * inv if j else 1 for j in range(a.precision + 1)], lc


def _power_series_power(norm, alpha, count):
    """``(1 + a_1 t + a_2 t^2 + ...)^alpha`` to ``count`` terms (Miller's recurrence)."""
    alpha = Fraction(alpha)
    b = [1]
    for k in range(1, count):
        acc = 0
        for j in range(1, k + 1):
            aj = norm[j]
            if aj == 0:
                continue
            w = (alpha + 1) * j - k
            if w == 0:
                continue
            acc = aj * b[k - j] * w + acc
        b.append(acc * Fraction(1, k))
    return b


def series_inverse(a: TruncatedLaurentSeries) -> TruncatedLaurentSeries:
    if a.is_zero():
        raise NotInvertibleError("zero series is not invertible")
    norm, lc = _normalized(a)
    inv_lc = ring_inverse(lc)
    b = _power_series_power(norm, -1, a.precision + 1)
    lead = -a.lead
    return TruncatedLaurentSeries(
        {lead - k: bk * inv_lc for k, bk in enumerate(b)}, lead - a.precision
    )


def series_pow(a: TruncatedLaurentSeries, j: int) -> TruncatedLaurentSeries:
    """``a**j``; negative ``j`` needs an invertible leading coefficient."""
    if j < 0:
        return series_pow(series_inverse(a), -j)
    if j == 0:
        # One is known exactly; keep the relative precision of ``a``.
        return TruncatedLaurentSeries({0: 1}, -max(a.precision, 0))
    result = None
    base = a
    while j:
        if j & 1:
            result = base if result is None else series_mul(result, base)
        j >>= 1
        if j:
            base = series_mul(base, base)
    return result


def monic_nth_root(p: TruncatedLaurentSeries, n: int) -> TruncatedLaurentSeries:
    """The unique series ``c`` with ``c**n == p`` and leading term ``x^(N/n)``."""
    if n < 1:
        raise InvalidParameterError("root index must be positive")
    if p.is_zero() or not p.lead_coeff() == 1:
        raise InvalidParameterError("series must have leading coefficient 1")
    if p.lead % n:
        raise InvalidParameterError(f"root index {n} does not divide the leading degree {p.lead}")
    norm = [p.coeffs.get(p.lead - j, 0) for j in range(p.precision + 1)]
    norm[0] = 1
    b = _power_series_power(norm, Fraction(1, n), p.precision + 1)
    lead = p.lead // n
    return TruncatedLaurentSeries({lead - k: bk for k, bk in enumerate(b)}, lead - p.precision)


@dataclass(frozen=True)
class Window:
    high: int
    low: int

    def __post_init__(self):
        if self.low > self.high:
            raise InvalidParameterError("window must satisfy low <= high")

    @classmethod
    def pi(cls, n: int, m: int) -> Window:
        return cls(-1, 2 - m - n)

    @classmethod
    def pi1(cls, m: int) -> Window:
        return cls(-1, 1 - m)

    @classmethod
    def pi2(cls, n: int) -> Window:
        return cls(-1, 1 - n)

    def degrees(self):
        return range(self.high, self.low - 1, -1)


def project(f: TruncatedLaurentSeries, w: Window):
    """Coefficients of ``f`` on the window, highest degree first."""
    if w.low < f.cutoff:
        raise TruncationError(
            f"insufficient truncation order: window reaches {w.low}, cutoff is {f.cutoff}"
        )
    return tuple(f.coeffs.get(k, 0) for k in w.degrees())


def embed(values, w: Window, cutoff=None) -> TruncatedLaurentSeries:
    """Inverse of :func:`project`: place values on the window degrees."""
    values = list(values)
    if len(values) != len(w.degrees()):
        raise InvalidParameterError("value count does not match the window")
    return TruncatedLaurentSeries(dict(zip(w.degrees(), values)), w.low if cutoff is None else cutoff)


def split(f: TruncatedLaurentSeries, var: str = "x"):
    """``(polynomial part, negative-degree tail)`` with ``f = poly + tail``."""
    if f.cutoff > 0:
        raise TruncationError("polynomial part is not fully known above the cutoff")
    top = max((k for k in f.coeffs if k >= 0), default=-1)
    poly = UniPoly([f.coeffs.get(k, 0) for k in range(top + 1)], var)
    tail = TruncatedLaurentSeries({k: c for k, c in f.coeffs.items() if k < 0}, f.cutoff)
    return poly, tail
