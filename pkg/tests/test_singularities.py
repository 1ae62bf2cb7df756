from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from e8strata.polynomials import parse_poly
from e8strata.root_systems import parse_diagram
from e8strata.semigroups import from_generators
from e8strata.singularities import (
    NonIsolatedSingularityError,
    build_versal,
    fiber_is_smooth,
    germ_for_diagram,
    milnor,
    monomial_curve,
    orbit_descriptor,
    parse_rational_vector,
)


@given(st.integers(2, 7), st.integers(2, 7))
def test_brieskorn_pham_milnor_number(p, q):
    # x^p + y^q has Milnor number (p-1)(q-1)
    assert milnor(parse_poly(f"x^{p}+y^{q}")).milnor_number == (p - 1) * (q - 1)


def test_e8_basis():
    data = milnor(parse_poly("x^3+y^5"))
    assert data.milnor_number == 8
    assert sorted(data.basis) == sorted((a, b) for a in range(2) for b in range(4))


@pytest.mark.parametrize("poly,mu", [("x^2+y^2", 1), ("x^3+y^4", 6), ("x^3+x*y^3", 7), ("x^5-y^3", 8), ("x^3-y^2", 2)])
def test_milnor_numbers(poly, mu):
    assert milnor(parse_poly(poly)).milnor_number == mu


@pytest.mark.parametrize("n", range(4, 9))
def test_d_series(n):
    assert milnor(parse_poly(f"x^2*y+y^{n - 1}")).milnor_number == n


@pytest.mark.parametrize("name", ["A1", "A3", "D4", "D6", "E6", "E7", "E8"])
def test_germs_for_diagrams(name):
    d = parse_diagram(name)
    classical = milnor(germ_for_diagram(d, "classical")).milnor_number
    assert classical == d.rank
    shifted = milnor(germ_for_diagram(d, "shifted")).milnor_number
    assert shifted == (d.rank + 1 if d.family == "A" else d.rank)


def test_milnor_rejects_bad_input():
    with pytest.raises(ValueError):
        milnor(parse_poly("x^2+1"))
    with pytest.raises(NonIsolatedSingularityError):
        milnor(parse_poly("x^2*y^2"), bound=12)
    with pytest.raises(NonIsolatedSingularityError):
        milnor(parse_poly("x^2"), bound=12)


def test_monomial_curve():
    assert monomial_curve(3, 5) == parse_poly("x^5-y^3")
    assert milnor(monomial_curve(3, 5)).milnor_number == 8
    with pytest.raises(ValueError):
        monomial_curve(2, 4)


def test_versal_family():
    fam = build_versal(parse_poly("x^3+y^5"))
    assert fam.dimension == 8
    assert fam.to_json()["parameters"][0] == {"name": "s1", "monomial": "1"}
    zero = [0] * 8
    assert not fiber_is_smooth(fam, zero)
    one = [1] + [0] * 7
    assert fam.specialize(one) == parse_poly("x^3+y^5+1")
    assert fiber_is_smooth(fam, one)
    with pytest.raises(ValueError):
        fam.specialize([0])


def test_nodal_fibers_are_not_smooth():
    fam = build_versal(parse_poly("x^2+y^2"))
    assert not fiber_is_smooth(fam, [0])
    assert fiber_is_smooth(fam, [Fraction(-1, 3)])


def test_rational_vectors():
    assert parse_rational_vector("1, -2/3,0") == [1, Fraction(-2, 3), 0]
    with pytest.raises(ValueError):
        parse_rational_vector("1,a")


def test_orbit_descriptor():
    od = orbit_descriptor([2, 8, 12, 14, 18, 20, 24, 30])
    assert od.closes and od.quotient_order == 2
    od = orbit_descriptor([2, 5, 6, 8, 9, 12])
    assert not od.closes and od.quotient_order == 1
    with pytest.raises(ValueError):
        orbit_descriptor([])


@pytest.mark.parametrize("n", range(1, 9))
def test_a_series_conventions(n):
    d = parse_diagram(f"A{n}")
    assert milnor(germ_for_diagram(d, "classical")).milnor_number == n
    assert milnor(germ_for_diagram(d, "shifted")).milnor_number == n + 1
    with pytest.raises(ValueError):
        germ_for_diagram(d, "other")


@pytest.mark.parametrize("n", range(4, 9))
def test_d_series_germs(n):
    assert milnor(germ_for_diagram(parse_diagram(f"D{n}"))).milnor_number == n


def test_smoothness_is_invariant_under_weighted_rescaling():
    # x has weight 5, y weight 3, f weight 15; s_m scales by lambda^(15 - wt(m))
    fam = build_versal(parse_poly("x^3+y^5"))
    rng = random.Random(11)
    lam = Fraction(2)
    for _ in range(5):
        s = [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(fam.dimension)]
        scaled = [c * lam ** (15 - 5 * a - 3 * b) for c, (_, (a, b)) in zip(s, fam.parameters)]
        assert fiber_is_smooth(fam, s) == fiber_is_smooth(fam, scaled)


@pytest.mark.parametrize("a,b", [(2, 3), (2, 5), (3, 4), (3, 5), (3, 7), (4, 5)])
def test_delta_invariant_is_semigroup_genus(a, b):
    mu = milnor(monomial_curve(a, b)).milnor_number
    assert mu % 2 == 0 and mu // 2 == from_generators([a, b]).genus
