from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from e8strata.groebner import contains_one, groebner_basis, reduce
from e8strata.polynomials import BivariatePoly, ParseError, parse_poly

X, Y = sympy.symbols("x y")

coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
polys = st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), coeffs, max_size=5).map(BivariatePoly)


def to_sympy(p: BivariatePoly):
    return sympy.expand(sum((sympy.Rational(c.numerator, c.denominator) * X**a * Y**b for (a, b), c in p.terms.items()), sympy.Integer(0)))


@given(polys)
def test_str_round_trips(p):
    assert parse_poly(str(p)) == p


@given(polys, polys)
def test_ring_operations_match_sympy(p, q):
    assert to_sympy(p * q) == sympy.expand(to_sympy(p) * to_sympy(q))
    assert to_sympy(p - q) == sympy.expand(to_sympy(p) - to_sympy(q))
    assert to_sympy(p.diff("x")) == sympy.expand(sympy.diff(to_sympy(p), X))


def test_parser_examples():
    assert str(parse_poly("x*(x^2+y^3)")) == "x*y^3 + x^3"
    assert parse_poly("(x+y)^2") == parse_poly("x^2 + 2*x*y + y^2")
    assert parse_poly("x/2 - -y") == BivariatePoly({(1, 0): Fraction(1, 2), (0, 1): 1})
    assert str(parse_poly("0*x")) == "0"


@pytest.mark.parametrize(
    "text,position",
    [("x^3+z", 4), ("x^", 2), ("(x+y", 4), ("x/y", 1), ("x/0", 1), ("", 0), ("x y", 2)],
)
def test_parse_errors_report_position(text, position):
    with pytest.raises(ParseError) as err:
        parse_poly(text)
    assert err.value.position == position


@given(st.lists(polys, min_size=1, max_size=3))
def test_contains_one_matches_sympy(gens):
    gens = [g for g in gens if g]
    if not gens:
        return
    expected = list(sympy.groebner([to_sympy(g) for g in gens], X, Y, order="grlex").exprs) == [1]
    assert contains_one(gens) == expected


def test_groebner_basis_matches_sympy():
    gens = [parse_poly("x^3+y^5+1"), parse_poly("3*x^2"), parse_poly("5*y^4")]
    assert groebner_basis(gens) == [BivariatePoly.constant(1)]
    gens = [parse_poly("x^2*y - 1"), parse_poly("x*y^2 - x")]
    ours = {str(g) for g in groebner_basis(gens)}
    theirs = sympy.groebner([to_sympy(g) for g in gens], X, Y, order="grlex")
    assert ours == {str(parse_poly(str(e).replace("**", "^"))) for e in theirs.exprs}


def test_reduce_remainder():
    basis = groebner_basis([parse_poly("x^2 - y")])
    assert reduce(parse_poly("x^4"), basis) == parse_poly("y^2")
