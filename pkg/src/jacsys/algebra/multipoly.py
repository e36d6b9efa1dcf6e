"""Sparse multivariate polynomials with rational coefficients.

A monomial is a tuple of ``(variable, exponent)`` pairs sorted by
:func:`var_key`; a polynomial maps monomials to nonzero ``Fraction``
coefficients.  Variable names follow one convention throughout the
package: ``Z0``, ``Z-1``, ``Z-2`` ... for series coefficients, ``Y`` for
the homogenising variable and ``lam`` for the formal datum.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

_ZVAR = re.compile(r"^Z(-?\d+)$")


@lru_cache(maxsize=None)
def var_key(name: str):
    """Sort key: Z variables by descending index, then others, ``lam`` last."""
    m = _ZVAR.match(name)
    if m:
        return (0, -int(m.group(1)), "")
    if name == "lam":
        return (3, 0, "")
    if name == "Y":
        return (1, 0, "")
    return (2, 0, name)


def zvar(index: int) -> str:
    return f"Z{index}"


def zindex(name: str):
    m = _ZVAR.match(name)
    return int(m.group(1)) if m else None


def _mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items(), key=lambda t: var_key(t[0])))


def _mono_degree(mono) -> int:
    return sum(e for _, e in mono)


def _as_fraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, Rational):
        return Fraction(c)
    raise TypeError(f"MultiPoly coefficients must be rational, got {type(c).__name__}")


class MultiPoly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for mono, c in terms.items():
                c = _as_fraction(c)
                if c:
                    self.terms[mono] = c

    @classmethod
    def var(cls, name: str) -> MultiPoly:
        return cls({((name, 1),): Fraction(1)})

    @classmethod
    def const(cls, c) -> MultiPoly:
        return cls({(): c})

    @classmethod
    def zero(cls) -> MultiPoly:
        return cls()

    @classmethod
    def coerce(cls, value) -> MultiPoly:
        if isinstance(value, MultiPoly):
            return value
        return cls.const(value)

    # -- queries ------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not m for m in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(_mono_degree(m) for m in self.terms)

    def degree(self, var: str) -> int:
        best = -1 if not self.terms else 0
        for mono in self.terms:
            for v, e in mono:
                if v == var and e > best:
                    best = e
        return best

    def variables(self):
        seen = {v for mono in self.terms for v, _ in mono}
        return sorted(seen, key=var_key)

    def weighted_degrees(self, weights):
        """Set of weighted degrees of the monomials (missing weights are 0)."""
        return {sum(weights.get(v, 0) * e for v, e in mono) for mono in self.terms}

    def sorted_terms(self):
        """Terms in graded order: higher total degree first, then lex."""

        def key(item):
            mono = item[0]
            vec = [(var_key(v), e) for v, e in mono]
            return (-_mono_degree(mono), [(k, -e) for k, e in vec])

        return sorted(self.terms.items(), key=key)

    # -- arithmetic ---------------------------------------------------
    def _other(self, other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, Rational):
            return MultiPoly.const(other)
        return None

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        res = MultiPoly()
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = MultiPoly()
        res.terms = {m: -c for m, c in self.terms.items()}
        return res

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, Rational):
            c0 = Fraction(other)
            res = MultiPoly()
            if c0:
                res.terms = {m: c * c0 for m, c in self.terms.items()}
            return res
        if not isinstance(other, MultiPoly):
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return MultiPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Rational):
            return self * (1 / Fraction(other))
        if isinstance(other, MultiPoly) and other.is_constant() and other:
            return self * (1 / other.constant_value())
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- calculus and substitution -----------------------------------
    def diff(self, var: str) -> MultiPoly:
        out = {}
        for mono, c in self.terms.items():
            for i, (v, e) in enumerate(mono):
                if v == var:
                    rest = mono[:i] + (((v, e - 1),) if e > 1 else ()) + mono[i + 1 :]
                    out[rest] = out.get(rest, 0) + c * e
                    break
        return MultiPoly(out)

    def as_univariate(self, var: str) -> dict:
        """Split into ``{exponent: coefficient polynomial}`` with respect to ``var``."""
        out = {}
        for mono, c in self.terms.items():
            e = 0
            rest = []
            for v, k in mono:
                if v == var:
                    e = k
                else:
                    rest.append((v, k))
            part = out.setdefault(e, {})
            part[tuple(rest)] = c
        return {e: MultiPoly(t) for e, t in out.items()}

    def to_unipoly(self, var: str):
        from jacsys.algebra.unipoly import UniPoly

        parts = self.as_univariate(var)
        if not parts:
            return UniPoly((), var)
        top = max(parts)
        return UniPoly([parts.get(k, MultiPoly()) for k in range(top + 1)], var)

    def subs(self, values: dict) -> MultiPoly:
        """Substitute rational numbers or polynomials for some variables."""
        out = MultiPoly()
        cache = {}
        for mono, c in self.terms.items():
            term = MultiPoly.const(c)
            keep = []
            for v, e in mono:
                if v in values:
                    key = (v, e)
                    if key not in cache:
                        cache[key] = MultiPoly.coerce(values[v]) ** e
                    term = term * cache[key]
                else:
                    keep.append((v, e))
            if keep:
                term = term * MultiPoly({tuple(keep): 1})
            out = out + term
        return out

    def evaluate(self, values: dict):
        """Evaluate with values in any ring supporting ``+``, ``*`` and ``**``.

        Every variable of the polynomial must be present in ``values``.
        """
        acc = 0
        powers = {}
        for mono, c in self.terms.items():
            term = c
            for v, e in mono:
                key = (v, e)
                if key not in powers:
                    if v not in values:
                        raise KeyError(f"no value supplied for variable {v}")
                    powers[key] = values[v] ** e
                term = powers[key] * term
            acc = term + acc
        return acc

    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        from jacsys.serialize import format_multipoly

        return format_multipoly(self)
