from __future__ import annotations

import itertools
import json
import math

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from e8strata.root_systems import (
    DiagramError,
    build_diagram,
    cartan_matrix,
    coxeter_element,
    coxeter_number,
    delta_automorphism,
    determinant,
    diagram_from_edges,
    element_from_word,
    enumerate_positive_roots,
    exponents,
    invariant_degrees,
    longest_element,
    longest_word,
    parse_diagram,
    reduced_word,
    simple_reflection,
    weyl_descents,
)

NAMES = ["A1", "A2", "A3", "A4", "D4", "D5", "E6", "E7", "E8"]


def norm2_vectors(d, bound):
    """Positive roots as nonnegative vectors of Cartan norm 2 (independent of reflections)."""
    c = cartan_matrix(d)
    n = d.rank
    out = []
    for v in itertools.product(range(bound + 1), repeat=n):
        if any(v) and sum(v[i] * c[i][j] * v[j] for i in range(n) for j in range(n)) == 2:
            out.append(v)
    return sorted(out)


@pytest.mark.parametrize("name,count", [("A1", 1), ("A2", 3), ("A3", 6), ("D4", 12), ("D5", 20), ("E6", 36), ("E7", 63), ("E8", 120)])
def test_positive_root_counts(name, count):
    assert len(enumerate_positive_roots(parse_diagram(name)).positive_roots) == count


@pytest.mark.parametrize("name,bound", [("A3", 1), ("D4", 2), ("D5", 2), ("E6", 3)])
def test_roots_match_norm_two_vectors(name, bound):
    d = parse_diagram(name)
    assert sorted(enumerate_positive_roots(d).positive_roots) == norm2_vectors(d, bound)


@pytest.mark.parametrize("name", NAMES)
def test_root_count_is_rank_times_half_coxeter_number(name):
    d = parse_diagram(name)
    assert len(enumerate_positive_roots(d).positive_roots) * 2 == d.rank * coxeter_number(d)


def test_cartan_determinants_against_sympy():
    known = {"A1": 2, "A3": 4, "D4": 4, "D5": 4, "E6": 3, "E7": 2, "E8": 1}
    for name, det in known.items():
        c = cartan_matrix(parse_diagram(name))
        assert determinant(c) == det == sympy.Matrix(c).det()


def test_build_diagram_shapes():
    e8 = build_diagram("E", 8)
    degrees = [len(e8.neighbours(v)) for v in e8.vertices]
    assert len(e8.edges) == 7 and degrees.count(3) == 1
    d4 = build_diagram("D", 4)
    assert sorted(len(d4.neighbours(v)) for v in d4.vertices) == [1, 1, 1, 3]
    assert build_diagram("A", 1).edges == frozenset()


@pytest.mark.parametrize("family,rank", [("D", 2), ("E", 9), ("E", 5), ("A", 0), ("B", 3)])
def test_rejected_combinations(family, rank):
    with pytest.raises(DiagramError):
        build_diagram(family, rank)


def test_json_diagram_is_classified():
    text = json.dumps({"vertices": [1, 2, 3, 4], "edges": [[1, 2], [2, 3], [2, 4]]})
    assert parse_diagram(text).family == "D"
    with pytest.raises(DiagramError):
        parse_diagram(json.dumps({"vertices": [1, 2, 3], "edges": [[1, 2], [2, 3], [1, 3]]}))
    with pytest.raises(DiagramError):
        parse_diagram(json.dumps({"vertices": [1, 2, 3, 4, 5], "edges": [[1, 2], [1, 3], [1, 4], [1, 5]]}))


def test_longest_element():
    for name in ["A1", "D4", "E7", "E8"]:
        assert longest_element(parse_diagram(name)).is_minus_identity()
    for name in ["A2", "A3", "D5", "E6"]:
        assert not longest_element(parse_diagram(name)).is_minus_identity()
    e8 = parse_diagram("E8")
    assert len(longest_word(e8)) == 120
    assert enumerate_positive_roots(e8).length(longest_element(e8)) == 120


def test_weyl_group_orders_from_degrees():
    # |W| is the product of the degrees
    orders = {"A3": 24, "D4": 192, "E6": 51840, "E7": 2903040, "E8": 696729600}
    for name, order in orders.items():
        assert math.prod(invariant_degrees(parse_diagram(name))) == order


def test_degrees_and_exponents():
    e8 = parse_diagram("E8")
    assert invariant_degrees(e8) == [2, 8, 12, 14, 18, 20, 24, 30]
    assert exponents(e8) == [1, 7, 11, 13, 17, 19, 23, 29]
    assert invariant_degrees(parse_diagram("E6")) == [2, 5, 6, 8, 9, 12]
    assert invariant_degrees(parse_diagram("D4")) == [2, 4, 4, 6]


def test_coxeter_numbers():
    expected = {"A1": 2, "A2": 3, "A3": 4, "D4": 6, "D5": 8, "E6": 12, "E7": 18, "E8": 30}
    for name, h in expected.items():
        assert coxeter_number(parse_diagram(name)) == h


def test_delta_automorphism():
    assert delta_automorphism(parse_diagram("E6")) == {1: 6, 2: 2, 3: 5, 4: 4, 5: 3, 6: 1}
    assert delta_automorphism(parse_diagram("A3")) == {1: 3, 2: 2, 3: 1}
    e8 = parse_diagram("E8")
    assert all(delta_automorphism(e8)[v] == v for v in e8.vertices)


def test_e8_coxeter_power_is_longest_element():
    e8 = parse_diagram("E8")
    c = coxeter_element(e8)
    p = c
    for _ in range(14):
        p = p * c
    assert p.is_minus_identity()


@given(st.sampled_from(["A4", "D5", "E6", "E8"]), st.lists(st.integers(1, 8), max_size=12))
def test_reduced_word_represents_element(name, word):
    d = parse_diagram(name)
    word = [v for v in word if v <= d.rank]
    w = element_from_word(d, word)
    rw = reduced_word(w, d)
    assert element_from_word(d, rw) == w
    assert len(rw) == enumerate_positive_roots(d).length(w) <= len(word)


@given(st.sampled_from(["A3", "D4", "E6"]), st.lists(st.integers(1, 6), max_size=10))
def test_weyl_elements_permute_roots(name, word):
    d = parse_diagram(name)
    word = [v for v in word if v <= d.rank]
    rs = enumerate_positive_roots(d)
    roots = set(rs.positive_roots) | {tuple(-x for x in r) for r in rs.positive_roots}
    assert element_from_word(d, word).permutes(roots)


@given(st.permutations(range(1, 7)))
def test_relabelled_e6_has_same_invariants(perm):
    d = parse_diagram("E6")
    mapping = dict(zip(d.vertices, perm))
    relabelled = diagram_from_edges(list(perm), [(mapping[a], mapping[b]) for a, b in d.sorted_edges()])
    assert relabelled.family == "E" and relabelled.rank == 6
    assert len(enumerate_positive_roots(relabelled).positive_roots) == 36
    assert invariant_degrees(relabelled) == invariant_degrees(d)


def test_descents_of_simple_reflection():
    d = parse_diagram("A3")
    s2 = simple_reflection(d, 2)
    assert weyl_descents(s2, "left", d) == {2} == weyl_descents(s2, "right", d)
