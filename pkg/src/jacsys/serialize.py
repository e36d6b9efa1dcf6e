"""Text and JSON representations of the package's values.

Pretty text follows the usual typeset notation (``Z_{-1}^2``, ``Y``,
``λ``); :func:`parse_poly` reads that notation back, including the
looser ``Z_ {-1}`` and ``(Z_ {-1})^2`` spellings found in typeset
sources.  JSON keeps rationals exact as ``"p/q"`` strings.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from numbers import Rational

from jacsys.algebra.multipoly import MultiPoly, var_key, zindex
from jacsys.errors import ParseError

DEFAULT_NAMES = {"lam": "λ"}
MAX_EXPONENT = 256


# -- scalars --------------------------------------------------------------
def format_rational(c) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational number: {text!r}") from exc


def format_complex(z: complex) -> str:
    re_, im = z.real, z.imag
    sign = "-" if im < 0 or (im == 0 and str(im).startswith("-")) else "+"
    return f"{re_:.12g}{sign}{abs(im):.12g}i"


def format_scalar(c) -> str:
    from jacsys.algebra.quotient import AlgebraicElement

    if isinstance(c, bool):
        return str(c)
    if isinstance(c, Rational):
        return format_rational(c)
    if isinstance(c, complex):
        return format_complex(c)
    if isinstance(c, float):
        return f"{c:.12g}"
    if isinstance(c, AlgebraicElement):
        if c.is_rational():
            return format_rational(c.rational_value())
        from jacsys.algebra.unipoly import UniPoly

        return f"{format_unipoly(c.representative())} mod {format_unipoly(UniPoly(c.modulus, 't'))}"
    return str(c)


# -- polynomials ----------------------------------------------------------
def var_display(name: str, names=None) -> str:
    names = DEFAULT_NAMES if names is None else {**DEFAULT_NAMES, **names}
    if name in names:
        return names[name]
    k = zindex(name)
    if k is not None:
        return f"Z_{k}" if 0 <= k <= 9 else f"Z_{{{k}}}"
    return name


def _display_order(mono):
    # The datum symbol is written first inside a monomial, as in typeset text.
    return sorted(mono, key=lambda t: (t[0] != "lam", var_key(t[0])))


def format_monomial(mono, names=None) -> str:
    parts = []
    for v, e in _display_order(mono):
        s = var_display(v, names)
        parts.append(s if e == 1 else f"{s}^{e}")
    return " ".join(parts)


def _join_terms(items) -> str:
    """Join ``(negative, body)`` pairs with `` + `` / `` - ``."""
    if not items:
        return "0"
    out = []
    for i, (neg, body) in enumerate(items):
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def format_multipoly(p: MultiPoly, names=None) -> str:
    items = []
    for mono, c in p.sorted_terms():
        neg = c < 0
        a = abs(c)
        if not mono:
            body = format_rational(a)
        elif a == 1:
            body = format_monomial(mono, names)
        else:
            body = f"{format_rational(a)} {format_monomial(mono, names)}"
        items.append((neg, body))
    return _join_terms(items)


def format_unipoly(p, names=None) -> str:
    var = p.var
    items = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        power = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if isinstance(c, Rational):
            neg = c < 0
            a = abs(c)
            if not power:
                body = format_rational(a)
            elif a == 1:
                body = power
            else:
                body = f"{format_rational(a)} {power}"
        else:
            neg = False
            text = str(c) if isinstance(c, MultiPoly) else format_scalar(c)
            if isinstance(c, MultiPoly):
                text = format_multipoly(c, names)
            body = f"({text})" + (f" {power}" if power else "")
        items.append((neg, body))
    return _join_terms(items)


def format_series(s) -> str:
    items = []
    for k in range(s.lead, s.cutoff - 1, -1):
        c = s.coeffs.get(k, 0)
        if c == 0:
            continue
        power = "" if k == 0 else ("x" if k == 1 else f"x^{k}" if k > 0 else f"x^{{{k}}}")
        if isinstance(c, Rational):
            neg = c < 0
            a = abs(c)
            body = format_rational(a) if not power else (power if a == 1 else f"{format_rational(a)} {power}")
        else:
            neg = False
            body = f"({format_scalar(c) if not isinstance(c, MultiPoly) else format_multipoly(c)})"
            body += f" {power}" if power else ""
        items.append((neg, body))
    tail = f"O(x^{{{s.cutoff - 1}}})" if s.cutoff - 1 < 0 else f"O(x^{s.cutoff - 1})"
    return _join_terms(items) + " + " + tail


# -- parsing --------------------------------------------------------------
_TOKEN = re.compile(
    r"""\s*(?:
        (?P<num>\d+(?:/\d+)?)
      | Z_\s*\{\s*(?P<zb>[+-]?\s*\d+)\s*\}
      | Z_\s*(?P<zd>[+-]?\d)
      | Z(?P<zn>-?\d+)
      | (?P<lam>\\lambda|λ|Λ|lam\b)
      | (?P<name>[A-Za-z]\w*)
      | (?P<op>[-+*^()])
    )""",
    re.VERBOSE,
)


def _tokenize(text: str):
    text = text.replace("−", "-").replace("&", " ").replace("\\\\", " ").replace("\\,", " ")
    text = text.replace("{\\lambda}", "\\lambda")
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected input at position {pos}: {text[pos:pos + 12]!r}")
        pos = m.end()
        if m.group("num"):
            out.append(("num", Fraction(m.group("num"))))
        elif m.group("zb") is not None:
            out.append(("var", f"Z{int(m.group('zb').replace(' ', ''))}"))
        elif m.group("zd") is not None:
            out.append(("var", f"Z{int(m.group('zd'))}"))
        elif m.group("zn") is not None:
            out.append(("var", f"Z{int(m.group('zn'))}"))
        elif m.group("lam"):
            out.append(("var", "lam"))
        elif m.group("name"):
            out.append(("var", m.group("name")))
        else:
            out.append(("op", m.group("op")))
    return out


class _Parser:
    def __init__(self, tokens, aliases):
        self.tokens = tokens
        self.i = 0
        self.aliases = aliases

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expr(self):
        total = MultiPoly()
        sign = 1
        kind, val = self.peek()
        if (kind, val) in (("op", "+"), ("op", "-")):
            self.take()
            sign = -1 if val == "-" else 1
        total = total + self.term() * sign
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                total = total + t if val == "+" else total - t
            else:
                return total

    def term(self):
        result = self.power()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                result = result * self.power()
            elif kind in ("num", "var") or (kind == "op" and val == "("):
                result = result * self.power()
            else:
                return result

    def power(self):
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, exp = self.take()
            if kind != "num" or exp.denominator != 1:
                raise ParseError("exponent must be a nonnegative integer")
            if exp > MAX_EXPONENT:
                raise ParseError(f"exponent {exp} exceeds {MAX_EXPONENT}")
            return base ** int(exp)
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return MultiPoly.const(val)
        if kind == "var":
            return MultiPoly.var(self.aliases.get(val, val))
        if kind == "op" and val == "(":
            inner = self.expr()
            k2, v2 = self.take()
            if (k2, v2) != ("op", ")"):
                raise ParseError("unbalanced parenthesis")
            return inner
        raise ParseError(f"unexpected token {val!r}")


def parse_poly(text: str, aliases=None) -> MultiPoly:
    """Parse a polynomial written in typeset-like notation."""
    text = re.sub(r"\^\{(\d+)\}", r"^\1", text)
    parser = _Parser(_tokenize(text), aliases or {})
    if not parser.tokens:
        raise ParseError("empty polynomial")
    result = parser.expr()
    if parser.i != len(parser.tokens):
        raise ParseError(f"trailing input after token {parser.i}")
    return result


# -- JSON -----------------------------------------------------------------
def scalar_to_json(c):
    from jacsys.algebra.quotient import AlgebraicElement
    from jacsys.algebra.unipoly import UniPoly

    if isinstance(c, Rational):
        return format_rational(c)
    if isinstance(c, complex):
        return {"re": c.real, "im": c.imag}
    if isinstance(c, float):
        return {"re": c, "im": 0.0}
    if isinstance(c, AlgebraicElement):
        return {
            "rep": [format_rational(x) for x in c.coeffs],
            "modulus": [format_rational(x) for x in c.modulus],
        }
    if isinstance(c, MultiPoly):
        return multipoly_to_json(c)
    if isinstance(c, UniPoly):
        return unipoly_to_json(c)
    raise TypeError(f"cannot serialise {type(c).__name__}")


def scalar_from_json(obj):
    from jacsys.algebra.quotient import AlgebraicElement

    if isinstance(obj, str):
        return parse_rational(obj)
    if isinstance(obj, dict) and "re" in obj:
        return complex(obj["re"], obj["im"])
    if isinstance(obj, dict) and "rep" in obj:
        return AlgebraicElement(
            [parse_rational(x) for x in obj["rep"]],
            [parse_rational(x) for x in obj["modulus"]],
        )
    if isinstance(obj, list):
        return multipoly_from_json(obj)
    raise ParseError(f"cannot decode scalar {obj!r}")


def multipoly_to_json(p: MultiPoly):
    return [
        {"coeff": format_rational(c), "monomial": {v: e for v, e in mono}}
        for mono, c in p.sorted_terms()
    ]


def multipoly_from_json(terms) -> MultiPoly:
    out = {}
    try:
        for t in terms:
            mono = tuple(
                sorted(((str(v), int(e)) for v, e in t["monomial"].items()), key=lambda x: var_key(x[0]))
            )
            out[mono] = out.get(mono, 0) + parse_rational(t["coeff"])
    except (KeyError, TypeError, AttributeError) as exc:
        raise ParseError("malformed polynomial JSON") from exc
    return MultiPoly(out)


def unipoly_to_json(p):
    return {"var": p.var, "coeffs": [scalar_to_json(c) for c in p.coeffs]}


def series_to_json(s):
    return {
        "lead": s.lead,
        "cutoff": s.cutoff,
        "coeffs": {
            str(k): scalar_to_json(s.coeffs[k])
            for k in sorted(s.coeffs, reverse=True)
            if s.coeffs[k] != 0
        },
    }


def series_from_json(obj):
    from jacsys.laurent import TruncatedLaurentSeries

    coeffs = {int(k): scalar_from_json(v) for k, v in obj["coeffs"].items()}
    return TruncatedLaurentSeries(coeffs, int(obj["cutoff"]))


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def equationset_to_json(eqs) -> dict:
    return {
        "kind": eqs.kind,
        "params": eqs.params,
        "vars": list(eqs.variables),
        "weights": {v: eqs.weights[v] for v in sorted(eqs.weights, key=var_key)},
        "equations": [multipoly_to_json(e) for e in eqs.equations],
    }


def equationset_from_json(obj):
    from jacsys.systems import EquationSet

    try:
        return EquationSet(
            [multipoly_from_json(e) for e in obj["equations"]],
            [str(v) for v in obj["vars"]],
            {str(k): int(v) for k, v in obj.get("weights", {}).items()},
            dict(obj.get("params", {})),
            str(obj.get("kind", "standard")),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError("malformed equation set JSON") from exc
