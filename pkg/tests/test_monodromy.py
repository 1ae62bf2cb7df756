from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from e8strata.artin_garside import ArtinWord, garside_element, normal_form, parse_word
from e8strata.monodromy import (
    build_config,
    check_geometric_relations,
    delta_image,
    flip_edge,
    kernel_search,
    rep_word,
    transvection,
    verify_kernel_certificate,
)
from e8strata.root_systems import DiagramError, identity_matrix, mat_mul, parse_diagram

NAMES = ["A1", "A2", "A3", "A4", "D4", "D5", "E6", "E7", "E8"]


def signs_for(d, rng):
    return {e: rng.choice((1, -1)) for e in d.sorted_edges()}


def test_determinants():
    assert build_config(parse_diagram("E8")).determinant in (1, -1)
    assert build_config(parse_diagram("E6")).unimodular
    assert build_config(parse_diagram("E7")).determinant == 0
    a1 = build_config(parse_diagram("A1"))
    assert a1.gram == ((0,),) and a1.determinant == 0


def test_bad_orientation():
    d = parse_diagram("A3")
    with pytest.raises(DiagramError):
        build_config(d, {(1, 2): 1})
    with pytest.raises(DiagramError):
        build_config(d, {(1, 2): 1, (2, 3): 2})
    with pytest.raises(DiagramError):
        build_config(d, {(1, 2): 1, (1, 3): 1})


def test_small_transvections():
    assert transvection(build_config(parse_diagram("A1")), 1).is_identity()
    m = transvection(build_config(parse_diagram("A2")), 1).matrix
    assert m == ((1, -1), (0, 1))


@pytest.mark.parametrize("name", NAMES)
@pytest.mark.parametrize("seed", [0, 1, 2])
def test_generators_are_unipotent_and_symplectic(name, seed):
    d = parse_diagram(name)
    cfg = build_config(d, signs_for(d, random.Random(seed)))
    n = d.rank
    for v in d.vertices:
        t = transvection(cfg, v)  # RepMatrix checks the form on construction
        assert t.determinant == 1
        nil = tuple(tuple(t.matrix[i][j] - (i == j) for j in range(n)) for i in range(n))
        assert mat_mul(nil, nil) == tuple(tuple(0 for _ in range(n)) for _ in range(n))


@pytest.mark.parametrize("name", NAMES)
@pytest.mark.parametrize("seed", [0, 1, 2])
def test_relations_hold(name, seed):
    d = parse_diagram(name)
    report = check_geometric_relations(build_config(d, signs_for(d, random.Random(seed))))
    assert report.all_pass
    assert report.count("braid") == d.rank - 1
    assert report.count("commutation") == d.rank * (d.rank - 1) // 2 - (d.rank - 1)


def test_e8_relation_report():
    report = check_geometric_relations(build_config(parse_diagram("E8")))
    assert (report.count("braid"), report.count("commutation")) == (7, 21)
    assert report.all_pass and abs(report.gram_determinant) == 1


def test_word_examples():
    cfg = build_config(parse_diagram("A2"))
    d = cfg.diagram
    assert rep_word(cfg, parse_word("", d)).is_identity()
    assert rep_word(cfg, parse_word("1 2 1", d)) == rep_word(cfg, parse_word("2 1 2", d))
    e8 = build_config(parse_diagram("E8"))
    assert rep_word(e8, parse_word("1 2", e8.diagram)) == rep_word(e8, parse_word("2 1", e8.diagram))
    with pytest.raises(DiagramError):
        rep_word(cfg, parse_word("1", parse_diagram("A3")))


def e8_words(max_size=8):
    d = parse_diagram("E8")
    letters = [s * v for v in d.vertices for s in (1, -1)]
    return st.lists(st.sampled_from(letters), max_size=max_size).map(lambda ls: ArtinWord(tuple(ls), d))


@given(e8_words(), e8_words())
def test_representation_is_functorial(u, v):
    cfg = build_config(u.diagram)
    assert rep_word(cfg, u * v) == rep_word(cfg, u) * rep_word(cfg, v)
    assert (rep_word(cfg, u) * rep_word(cfg, u.inverse())).is_identity()


def flip_conjugator(cfg, edge):
    """Diagonal +-1 matrix negating every class on the far side of ``edge``."""
    d = cfg.diagram
    a, b = edge
    side = {b}
    stack = [b]
    while stack:
        v = stack.pop()
        for w in d.neighbours(v):
            if w != a and w not in side:
                side.add(w)
                stack.append(w)
    n = d.rank
    return tuple(tuple((-1 if d.vertices[i] in side else 1) if i == j else 0 for j in range(n)) for i in range(n))


@given(st.sampled_from(["A4", "D5", "E8"]), st.integers(0, 100), st.data())
def test_orientation_flip_is_a_conjugation(name, seed, data):
    d = parse_diagram(name)
    cfg = build_config(d, signs_for(d, random.Random(seed)))
    edge = data.draw(st.sampled_from(d.sorted_edges()))
    flipped = flip_edge(cfg, edge)
    D = flip_conjugator(cfg, edge)
    for v in d.vertices:
        assert mat_mul(mat_mul(D, transvection(cfg, v).matrix), D) == transvection(flipped, v).matrix
    assert check_geometric_relations(cfg).to_json()["all_pass"] == check_geometric_relations(flipped).to_json()["all_pass"]
    assert [r.holds for r in check_geometric_relations(cfg).relations] == [
        r.holds for r in check_geometric_relations(flipped).relations
    ]


def test_delta_images():
    a1 = delta_image(build_config(parse_diagram("A1")))
    assert a1.matrix.is_identity() and a1.order == 1
    # A2 maps onto SL(2, Z) with Delta^2 -> -I
    a2 = delta_image(build_config(parse_diagram("A2")))
    assert a2.order == 4
    sq = mat_mul(a2.matrix.matrix, a2.matrix.matrix)
    assert sq == ((-1, 0), (0, -1))


def test_e8_delta_image_regression():
    cfg = build_config(parse_diagram("E8"))
    img = delta_image(cfg)
    # pinned after exact powering; the Coxeter word acts with order 15 = lcm(3, 5)
    assert img.order == 1
    c = ArtinWord(tuple(cfg.diagram.vertices), cfg.diagram)
    m = rep_word(cfg, c).matrix
    p, k = m, 1
    while p != identity_matrix(8):
        p, k = mat_mul(p, m), k + 1
    assert k == 15


def test_certificates():
    cfg = build_config(parse_diagram("E8"))
    d = cfg.diagram
    empty = verify_kernel_certificate(cfg, parse_word("", d))
    assert (empty.group_trivial, empty.homology_trivial) == (True, True)
    one = verify_kernel_certificate(cfg, parse_word("1", d))
    assert (one.group_trivial, one.homology_trivial) == (False, False)
    delta = verify_kernel_certificate(cfg, garside_element(d))
    assert not delta.group_trivial and delta.homology_trivial == delta_image(cfg).matrix.is_identity()
    assert delta.valid


def test_kernel_search_small_cases():
    a2 = build_config(parse_diagram("A2"))
    assert kernel_search(a2, 0).words == ()
    # the kernel of B3 -> SL(2, Z) is generated by Delta^4, of length 12
    assert kernel_search(a2, 11).words == ()
    res = kernel_search(a2, 12)
    assert res.complete and res.explored_length == 12
    assert all(verify_kernel_certificate(a2, w).valid for w in res.words)
    assert sorted(normal_form(w).to_json()["delta_power"] for w in res.words) == [-4, 4]
    assert all(not normal_form(w).simples for w in res.words)
    a1 = build_config(parse_diagram("A1"))
    assert [str(w) for w in kernel_search(a1, 2).words] == ["-1", "1", "-1 -1", "1 1"]


def test_kernel_search_excludes_relators():
    a2 = build_config(parse_diagram("A2"))
    relator = parse_word("1 2 1 -2 -1 -2", a2.diagram)
    assert verify_kernel_certificate(a2, relator).group_trivial
    assert all(w.letters != relator.letters for w in kernel_search(a2, 12).words)


def test_kernel_search_limits():
    cfg = build_config(parse_diagram("E8"))
    with pytest.raises(ValueError):
        kernel_search(cfg, 15)
    partial = kernel_search(cfg, 8, budget=0.0)
    assert not partial.complete and partial.explored_length < 8


def test_kernel_search_e8_reproducible():
    cfg = build_config(parse_diagram("E8"))
    first = kernel_search(cfg, 6)
    assert first.complete
    assert first.words == kernel_search(cfg, 6).words
    assert all(verify_kernel_certificate(cfg, w).valid for w in first.words)
