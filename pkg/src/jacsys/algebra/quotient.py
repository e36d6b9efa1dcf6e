"""Exact arithmetic in simple algebraic extensions of the rationals.

An :class:`AlgebraicElement` is a residue class of ``Q[t]`` modulo a monic
polynomial ``h``.  When ``h`` is irreducible the quotient is a field; when
it is not, inversion may hit a zero divisor, which is reported together
with the nontrivial factor of ``h`` that was found.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from jacsys.algebra.unipoly import UniPoly, poly_xgcd
from jacsys.errors import ModulusMismatchError, NotInvertibleError


def _fr_tuple(coeffs):
    out = [Fraction(c) for c in coeffs]
    while out and not out[-1]:
        out.pop()
    return tuple(out)


class AlgebraicElement:
    __slots__ = ("coeffs", "modulus")

    def __init__(self, coeffs, modulus):
        modulus = _fr_tuple(modulus)
        if not modulus or modulus[-1] != 1:
            raise ValueError("modulus must be a monic polynomial")
        if len(modulus) < 2:
            raise ValueError("modulus must have positive degree")
        rep = UniPoly(_fr_tuple(coeffs), "t") % UniPoly(modulus, "t")
        self.coeffs = tuple(rep.coeffs)
        self.modulus = modulus

    @classmethod
    def generator(cls, modulus) -> AlgebraicElement:
        return cls((0, 1), modulus)

    @classmethod
    def from_rational(cls, value, modulus) -> AlgebraicElement:
        return cls((value,), modulus)

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    def representative(self) -> UniPoly:
        return UniPoly(self.coeffs, "t")

    def modulus_poly(self) -> UniPoly:
        return UniPoly(self.modulus, "t")

    def is_rational(self) -> bool:
        return len(self.coeffs) <= 1

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def _wrap(self, coeffs):
        return type(self)._make(coeffs, self)

    @classmethod
    def _make(cls, coeffs, like):
        obj = cls.__new__(cls)
        rep = UniPoly(_fr_tuple(coeffs), "t") % UniPoly(like.modulus, "t")
        obj.coeffs = tuple(rep.coeffs)
        obj.modulus = like.modulus
        like._copy_extra(obj)
        return obj

    def _copy_extra(self, obj):
        pass

    def _coerce(self, other):
        if isinstance(other, AlgebraicElement):
            if other.modulus != self.modulus:
                raise ModulusMismatchError(
                    "operands live in different quotient rings",
                    left=self.modulus,
                    right=other.modulus,
                )
            return other.coeffs
        if isinstance(other, Rational):
            return (Fraction(other),)
        return None

    # -- ring operations ----------------------------------------------
    def __add__(self, other):
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        a, b = list(self.coeffs), list(oc)
        n = max(len(a), len(b))
        a += [0] * (n - len(a))
        b += [0] * (n - len(b))
        return self._wrap([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return self._wrap([-c for c in self.coeffs])

    def __sub__(self, other):
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        return self + self._wrap([-c for c in oc])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        prod = UniPoly(self.coeffs, "t") * UniPoly(oc, "t")
        return self._wrap(prod.coeffs)

    __rmul__ = __mul__

    def inverse(self) -> AlgebraicElement:
        if not self.coeffs:
            raise NotInvertibleError("zero has no inverse")
        g, s, _ = poly_xgcd(UniPoly(self.coeffs, "t"), UniPoly(self.modulus, "t"))
        if g.degree > 0:
            raise NotInvertibleError(
                "element is a zero divisor in this quotient ring", factor=g
            )
        return self._wrap(s.coeffs)

    def __truediv__(self, other):
        if isinstance(other, AlgebraicElement):
            self._coerce(other)
            return self * other.inverse()
        if isinstance(other, Rational):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, Rational):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self._wrap((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, AlgebraicElement):
            return self.modulus == other.modulus and self.coeffs == other.coeffs
        if isinstance(other, Rational):
            return self.coeffs == _fr_tuple((other,))
        return NotImplemented

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else Fraction(0))
        return hash((self.coeffs, self.modulus))

    # -- specialisation -----------------------------------------------
    def lift(self, value):
        """Evaluate the representative at a chosen root of the modulus."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def to_complex(self, root: complex) -> complex:
        return complex(self.lift(complex(root)))

    def __repr__(self):
        return f"{type(self).__name__}({list(self.coeffs)!r} mod {list(self.modulus)!r})"

    def __str__(self):
        from jacsys.serialize import format_unipoly

        return f"[{format_unipoly(self.representative())}]"


def quotient_arith(a, b, op: str):
    """Apply ``op`` (one of ``+ - * /``) to two elements of the same quotient ring."""
    if isinstance(a, AlgebraicElement) and isinstance(b, AlgebraicElement):
        if a.modulus != b.modulus:
            raise ModulusMismatchError(
                "operands live in different quotient rings", left=a.modulus, right=b.modulus
            )
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


@lru_cache(maxsize=None)
def cyclotomic_coeffs(e: int) -> tuple:
    """Coefficients of the e-th cyclotomic polynomial, lowest first."""
    if e < 1:
        raise ValueError("cyclotomic index must be positive")
    num = UniPoly([-1] + [0] * (e - 1) + [1], "t")
    for d in range(1, e):
        if e % d == 0:
            num = num / UniPoly(cyclotomic_coeffs(d), "t")
    return tuple(Fraction(c) for c in num.coeffs)


def cyclotomic_poly(e: int) -> UniPoly:
    return UniPoly(cyclotomic_coeffs(e), "t")


class CyclotomicElement(AlgebraicElement):
    """Element of ``Q(u)`` with ``u`` a primitive e-th root of unity."""

    __slots__ = ("e",)

    def __init__(self, coeffs, e: int):
        super().__init__(coeffs, cyclotomic_coeffs(e))
        self.e = e

    def _copy_extra(self, obj):
        obj.e = self.e

    @classmethod
    def u(cls, e: int) -> CyclotomicElement:
        return cls((0, 1), e)

    @classmethod
    def from_rational(cls, value, e: int) -> CyclotomicElement:
        return cls((value,), e)

    def principal_complex(self) -> complex:
        """Value under the embedding ``u -> exp(2 pi i / e)``."""
        return self.to_complex(cmath.exp(2j * cmath.pi / self.e))
