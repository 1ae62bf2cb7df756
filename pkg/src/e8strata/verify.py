"""Named suites of cross-module consistency checks, one entry per claim."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable

from .artin_garside import (
    ArtinWord,
    are_equal,
    conjugation_by_delta,
    degree,
    garside_element,
    generator,
    is_central,
    normal_form,
)
from .monodromy import build_config, check_geometric_relations, kernel_search, verify_kernel_certificate
from .polynomials import parse_poly
from .root_systems import enumerate_positive_roots, invariant_degrees, longest_element, parse_diagram
from .semigroups import GapSequence, classify_genus4, from_generators, spin_parity
from .singularities import build_versal, fiber_is_smooth, milnor, orbit_descriptor


@dataclass(frozen=True)
class Check:
    name: str
    claim: str
    passed: bool
    detail: dict

    def to_json(self) -> dict:
        return {"name": self.name, "claim": self.claim, "passed": self.passed, "detail": self.detail}


def _check(name: str, claim: str, passed: bool, **detail) -> Check:
    return Check(name, claim, bool(passed), detail)


def suite_gaps() -> list[Check]:
    s = from_generators([3, 5])
    gs = GapSequence(s.gaps)
    even = spin_parity(GapSequence((1, 2, 4, 7)))
    odd = spin_parity(GapSequence((1, 2, 3, 7)))
    return [
        _check(
            "gaps_3_5",
            "semigroup <3,5> has gaps {1,2,4,7} and lies in the even component",
            s.gaps == (1, 2, 4, 7) and classify_genus4(gs) == "even_component",
            gaps=list(s.gaps),
            classification=classify_genus4(gs),
        ),
        _check(
            "spin_parity",
            "h0 counts gaps >= g: {1,2,4,7} is even with h0 = 2, {1,2,3,7} is odd with h0 = 1",
            (even.h0, even.parity, odd.h0, odd.parity) == (2, "even", 1, "odd"),
            even=[even.h0, even.parity],
            odd=[odd.h0, odd.parity],
        ),
    ]


def suite_milnor() -> list[Check]:
    e8 = milnor(parse_poly("x^3+y^5"))
    expected_basis = sorted((a, b) for a in range(2) for b in range(4))
    checks = [
        _check(
            "milnor_e8",
            "x^3+y^5 has Milnor number 8 with basis x^a y^b, a <= 1, b <= 3",
            e8.milnor_number == 8 and sorted(e8.basis) == expected_basis,
            milnor_number=e8.milnor_number,
        ),
    ]
    for poly, mu in (("x^3+y^4", 6), ("x^3+x*y^3", 7)):
        got = milnor(parse_poly(poly)).milnor_number
        checks.append(_check(f"milnor_{poly}", f"{poly} has Milnor number {mu}", got == mu, milnor_number=got))
    d_series = {n: milnor(parse_poly(f"x^2*y+y^{n - 1}")).milnor_number for n in range(4, 9)}
    checks.append(
        _check(
            "milnor_d_series",
            "x^2 y + y^(n-1) has Milnor number n for n = 4..8",
            all(d_series[n] == n for n in d_series),
            values={str(n): v for n, v in d_series.items()},
        )
    )
    g, n = 4, 1
    checks.append(
        _check(
            "stratum_dimension",
            "the E8 Milnor number equals the stratum dimension 2g + n - 1 at (g, n) = (4, 1)",
            e8.milnor_number == 2 * g + n - 1,
            dimension=2 * g + n - 1,
        )
    )
    return checks


def suite_roots() -> list[Check]:
    e8, e6 = parse_diagram("E8"), parse_diagram("E6")
    count = len(enumerate_positive_roots(e8).positive_roots)
    degs = invariant_degrees(e8)
    return [
        _check("positive_roots_e8", "E8 has 120 positive roots", count == 120, count=count),
        _check(
            "w0_e8",
            "the longest element of W(E8) is -id, that of W(E6) is not",
            longest_element(e8).is_minus_identity() and not longest_element(e6).is_minus_identity(),
        ),
        _check(
            "degrees_e8",
            "E8 invariant degrees are 2,8,12,14,18,20,24,30 with gcd 2",
            degs == [2, 8, 12, 14, 18, 20, 24, 30] and math.gcd(*degs) == 2 and sum(x - 1 for x in degs) == 120,
            degrees=degs,
            gcd=math.gcd(*degs),
        ),
    ]


def _random_word(rng: random.Random, d, length: int) -> list[int]:
    return [rng.choice(d.vertices) * rng.choice((1, -1)) for _ in range(length)]


def _random_relator(rng: random.Random, d) -> list[int]:
    a, b = rng.sample(list(d.vertices), 2)
    if d.adjacent(a, b):
        rel = [a, b, a, -b, -a, -b]
    else:
        rel = [a, b, -a, -b]
    if rng.random() < 0.5:
        rel = [-x for x in reversed(rel)]
    # a cyclic rotation of a relator is still a relator
    k = rng.randrange(len(rel))
    return rel[k:] + rel[:k]


def relator_round_trips(count: int = 500, seed: int = 0, length: int = 20) -> tuple[int, int]:
    """(passes, trials): insert a random relator into a random word and compare normal forms."""
    rng = random.Random(seed)
    names = ["A2", "A3", "D4", "E6", "E8"]
    passes = 0
    for k in range(count):
        d = parse_diagram(names[k % len(names)])
        w = _random_word(rng, d, length)
        pos = rng.randrange(len(w) + 1)
        w2 = w[:pos] + _random_relator(rng, d) + w[pos:]
        if normal_form(ArtinWord(tuple(w), d)) == normal_form(ArtinWord(tuple(w2), d)):
            passes += 1
    return passes, count


def suite_garside() -> list[Check]:
    d = parse_diagram("E8")
    delta = garside_element(d)
    nf = normal_form(delta)
    conj_fixed = all(conjugation_by_delta(d, v) == v for v in d.vertices)
    conj_ok = True
    for v in d.vertices:
        g = generator(d, v)
        c = g * delta * g.inverse()
        conj_ok &= are_equal(c, delta) and not any(are_equal(c, delta**n) for n in range(2, 6))
    passes, trials = relator_round_trips()
    return [
        _check(
            "delta_e8",
            "Delta in E8 has normal form Delta^1, degree 120, and is central",
            nf.delta_power == 1 and not nf.simples and degree(delta) == 120 and is_central(delta),
            normal_form=nf.to_json(),
            degree=degree(delta),
        ),
        _check(
            "generators_not_central",
            "no standard generator of A(E8) is central and Delta conjugation fixes every vertex",
            not any(is_central(generator(d, v)) for v in d.vertices) and conj_fixed,
        ),
        _check(
            "conjugate_of_delta",
            "g Delta g^-1 equals Delta and differs from Delta^n for 2 <= n <= 5",
            conj_ok,
        ),
        _check(
            "relator_insertion",
            "inserting a relator never changes the normal form",
            passes == trials,
            passes=passes,
            trials=trials,
        ),
    ]


def suite_homology() -> list[Check]:
    cfg = build_config(parse_diagram("E8"))
    report = check_geometric_relations(cfg)
    return [
        _check(
            "picard_lefschetz_e8",
            "E8 transvections satisfy all 7 braid and 21 commutation relations and preserve the form",
            report.all_pass and report.count("braid") == 7 and report.count("commutation") == 21,
            braid=report.count("braid"),
            commutation=report.count("commutation"),
        ),
        _check(
            "gram_unimodular_e8",
            "the E8 intersection form is unimodular",
            abs(report.gram_determinant) == 1,
            determinant=report.gram_determinant,
        ),
    ]


def suite_versal() -> list[Check]:
    fam = build_versal(parse_poly("x^3+y^5"))
    zero = [0] * fam.dimension
    shifted = [0] * fam.dimension
    constant = next(k for k, (_, m) in enumerate(fam.parameters) if m == (0, 0))
    shifted[constant] = 1
    return [
        _check("versal_dimension", "the versal family of x^3+y^5 has 8 parameters", fam.dimension == 8),
        _check(
            "versal_fibers",
            "the central fiber is singular and the fiber x^3+y^5+1 is smooth",
            not fiber_is_smooth(fam, zero) and fiber_is_smooth(fam, shifted),
        ),
    ]


def suite_orbit() -> list[Check]:
    od = orbit_descriptor(invariant_degrees(parse_diagram("E8")))
    return [
        _check(
            "orbit_e8",
            "the weighted C* orbit for the E8 degrees closes after a half turn and is C*/Z2",
            od.closes and od.quotient_order == 2,
            closes=od.closes,
            quotient_order=od.quotient_order,
        )
    ]


def suite_kernel(max_length: int = 8) -> list[Check]:
    cfg = build_config(parse_diagram("E8"))
    first = kernel_search(cfg, max_length)
    second = kernel_search(cfg, max_length)
    certs = [verify_kernel_certificate(cfg, w) for w in first.words]
    return [
        _check(
            "kernel_probe",
            f"the homological kernel probe up to length {max_length} is reproducible and every hit certifies",
            first.complete and second.complete and first.words == second.words and all(c.valid for c in certs),
            found=len(first.words),
            explored_length=first.explored_length,
            complete=first.complete and second.complete,
        )
    ]


SUITES: dict[str, Callable[[], list[Check]]] = {
    "gaps": suite_gaps,
    "milnor": suite_milnor,
    "roots": suite_roots,
    "garside": suite_garside,
    "homology": suite_homology,
    "versal": suite_versal,
    "orbit": suite_orbit,
    "kernel": suite_kernel,
}


def run_suite(name: str) -> dict[str, list[Check]]:
    if name == "all":
        return {k: f() for k, f in SUITES.items()}
    return {name: SUITES[name]()}
