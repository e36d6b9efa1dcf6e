import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jacsys.algebra import AlgebraicElement, MultiPoly, UniPoly
from jacsys.errors import ParseError
from jacsys.laurent import TruncatedLaurentSeries
from jacsys.serialize import (
    dumps,
    equationset_from_json,
    equationset_to_json,
    format_multipoly,
    format_rational,
    format_series,
    format_unipoly,
    multipoly_from_json,
    multipoly_to_json,
    parse_poly,
    parse_rational,
    scalar_from_json,
    scalar_to_json,
    series_from_json,
    series_to_json,
)
from jacsys.systems import SystemSpec, build_modified, build_sparse, build_standard


def Z(k):
    return MultiPoly.var(f"Z{k}")


def test_rationals():
    assert format_rational(Fraction(-3, 8)) == "-3/8"
    assert format_rational(Fraction(4)) == "4"
    assert parse_rational(" -3/8 ") == Fraction(-3, 8)
    with pytest.raises(ParseError):
        parse_rational("1/0")
    with pytest.raises(ParseError):
        parse_rational("abc")


def test_format_multipoly():
    p = 3 * Z(-1) ** 2 + 3 * Z(-3) + MultiPoly.var("lam")
    assert format_multipoly(p) == "3 Z_{-1}^2 + 3 Z_{-3} + λ"
    assert format_multipoly(p, {"lam": "F"}) == "3 Z_{-1}^2 + 3 Z_{-3} + F"
    assert format_multipoly(MultiPoly()) == "0"
    assert format_multipoly(-MultiPoly.var("lam") * Z(1)) == "-λ Z_1"


def test_format_series_and_unipoly():
    s = TruncatedLaurentSeries({1: 1, -1: Fraction(1, 2)}, -3)
    assert format_series(s) == "x + 1/2 x^{-1} + O(x^{-4})"
    assert format_unipoly(UniPoly([Fraction(-3, 8), 0, Fraction(3, 8)], "p0")) == "3/8 p0^2 - 3/8"


def test_parse_spellings():
    expected = Z(-1) ** 2 + 2 * Z(0) * Z(-2)
    for text in ("Z_{-1}^2 + 2 Z_0 Z_{-2}", "(Z_ {-1})^2 + 2 Z_ 0 Z_ {-2}", "Z-1^2 + 2*Z0*Z-2", "Z_{-1}^{2} + 2 Z_{0} Z_{-2}"):
        assert parse_poly(text) == expected
    assert parse_poly(r"\lambda + 1") == MultiPoly.var("lam") + 1
    assert parse_poly("λ Z_1") == MultiPoly.var("lam") * Z(1)
    assert parse_poly("-(x + 1)^2") == -(MultiPoly.var("x") + 1) ** 2
    assert parse_poly("3/4 x") == Fraction(3, 4) * MultiPoly.var("x")


@pytest.mark.parametrize("text", ["", "x +", "(x", "x ^ y", "2 ^ -1", "x^999", "$", "x )"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_poly(text)


@given(st.lists(st.tuples(st.fractions(max_denominator=9, min_value=-9, max_value=9), st.integers(-5, 1), st.integers(0, 3), st.integers(0, 2)), max_size=6))
@settings(max_examples=80, deadline=None)
def test_format_parse_roundtrip(terms):
    p = MultiPoly()
    for c, k, e, f in terms:
        p = p + c * Z(k) ** e * MultiPoly.var("lam") ** f
    assert parse_poly(format_multipoly(p)) == p
    assert multipoly_from_json(json.loads(json.dumps(multipoly_to_json(p)))) == p


def test_scalar_json():
    for v in (Fraction(-3, 8), 5, complex(1.5, -2)):
        assert scalar_from_json(json.loads(json.dumps(scalar_to_json(v)))) == v
    a = AlgebraicElement([Fraction(1, 2), 1], [1, 1, 1])
    assert scalar_from_json(json.loads(json.dumps(scalar_to_json(a)))) == a


def test_series_json():
    s = TruncatedLaurentSeries({1: 1, -1: Fraction(1, 2), -3: Fraction(-1, 8)}, -4)
    assert series_from_json(json.loads(dumps(series_to_json(s)))) == s


@pytest.mark.parametrize("eqs", [build_standard(SystemSpec(3, 4)), build_modified(3), build_sparse(6, 4, 3)])
def test_equationset_json_roundtrip_is_byte_identical(eqs):
    text = dumps(equationset_to_json(eqs))
    back = equationset_from_json(json.loads(text))
    assert back.equations == eqs.equations
    assert back.variables == eqs.variables
    assert dumps(equationset_to_json(back)) == text
