"""Dense univariate polynomials over a generic coefficient ring.

Coefficients are stored lowest degree first.  Anything that is not a
``UniPoly`` is treated as a scalar, so the same class serves for
polynomials over ``Fraction``, ``AlgebraicElement``, ``complex`` and
even ``MultiPoly`` coefficients.  Division-based operations (``divmod``,
``gcd``, ``monic``) need the coefficients to form a field.
"""

from __future__ import annotations

from fractions import Fraction


def is_zero(c) -> bool:
    return c == 0


def _inv(c):
    if hasattr(c, "inverse"):
        return c.inverse()
    if isinstance(c, int):
        return Fraction(1, c)
    return 1 / c


class UniPoly:
    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var: str = "x"):
        coeffs = list(coeffs)
        while coeffs and is_zero(coeffs[-1]):
            coeffs.pop()
        self.coeffs = tuple(coeffs)
        self.var = var

    @classmethod
    def monomial(cls, degree: int, coeff=1, var: str = "x") -> UniPoly:
        return cls([0] * degree + [coeff], var)

    @classmethod
    def gen(cls, var: str = "x") -> UniPoly:
        return cls([0, 1], var)

    @classmethod
    def from_roots(cls, roots, var: str = "x") -> UniPoly:
        out = cls([1], var)
        for r in roots:
            out = out * cls([-r, 1], var)
        return out

    # -- basic queries -------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def map_coeffs(self, f) -> UniPoly:
        return UniPoly([f(c) for c in self.coeffs], self.var)

    # -- arithmetic ----------------------------------------------------
    def _lift(self, other) -> UniPoly:
        if isinstance(other, UniPoly):
            return other
        return UniPoly([other], self.var)

    def __add__(self, other):
        other = self._lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            if is_zero(other):
                return UniPoly((), self.var)
            return UniPoly([c * other for c in self.coeffs], self.var)
        if not self.coeffs or not other.coeffs:
            return UniPoly((), self.var)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out, self.var)

    def __rmul__(self, other):
        if is_zero(other):
            return UniPoly((), self.var)
        return UniPoly([other * c for c in self.coeffs], self.var)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly([1], self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        other = self._lift(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        inv_lead = _inv(other.lead)
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly((), self.var), self
        quot = [0] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + other.degree]
            if is_zero(c):
                continue
            c = c * inv_lead
            quot[k] = c
            for j, b in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - c * b
        return UniPoly(quot, self.var), UniPoly(rem[: other.degree], self.var)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __truediv__(self, other):
        if isinstance(other, UniPoly):
            q, r = divmod(self, other)
            if r:
                raise ArithmeticError("inexact polynomial division")
            return q
        return self * _inv(other)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs or (
                len(self.coeffs) == len(other.coeffs)
                and all(is_zero(a - b) for a, b in zip(self.coeffs, other.coeffs))
            )
        if not self.coeffs:
            return is_zero(other)
        return len(self.coeffs) == 1 and self.coeffs[0] == other

    def __hash__(self):
        return hash(self.coeffs)

    # -- calculus and normalisation ----------------------------------
    def derivative(self) -> UniPoly:
        return UniPoly([k * c for k, c in enumerate(self.coeffs)][1:], self.var)

    def monic(self) -> UniPoly:
        if not self.coeffs:
            raise ZeroDivisionError("zero polynomial has no monic normalisation")
        return self * _inv(self.lead)

    def compose(self, inner: UniPoly) -> UniPoly:
        """Return ``self(inner(x))``."""
        acc = UniPoly((), inner.var)
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def with_var(self, var: str) -> UniPoly:
        return UniPoly(self.coeffs, var)

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)!r}, var={self.var!r})"

    def __str__(self):
        from jacsys.serialize import format_unipoly

        return format_unipoly(self)


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd by the Euclidean algorithm (coefficients in a field)."""
    while b:
        a, b = b, a % b
    return a.monic() if a else a


def poly_xgcd(a: UniPoly, b: UniPoly):
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` monic."""
    r0, r1 = a, b
    s0, s1 = UniPoly([1], a.var), UniPoly((), a.var)
    t0, t1 = UniPoly((), a.var), UniPoly([1], a.var)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return r0, s0, t0
    inv = _inv(r0.lead)
    return r0 * inv, s0 * inv, t0 * inv


def squarefree_part(f: UniPoly) -> UniPoly:
    """``f / gcd(f, f')`` normalised to be monic."""
    if not f:
        raise ValueError("squarefree part of the zero polynomial")
    if f.degree == 0:
        return UniPoly([1], f.var)
    g = poly_gcd(f, f.derivative())
    return (f / g).monic()
