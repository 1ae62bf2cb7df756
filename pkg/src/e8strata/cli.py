"""Command-line front end. Every command prints one JSON report on stdout.

Exit codes: 0 success, 1 domain error (the report carries an ``error`` object),
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from typing import Sequence

from . import artin_garside as ag
from . import monodromy as mono
from .polynomials import ParseError, monomial_str, parse_poly
from .root_systems import (
    DiagramError,
    cartan_matrix,
    coxeter_number,
    delta_automorphism,
    enumerate_positive_roots,
    exponents,
    invariant_degrees,
    longest_element,
    longest_word,
    parse_diagram,
)
from .semigroups import GapSequence, SemigroupError, classify_genus4, from_generators, gaps_to_semigroup, spin_parity
from .singularities import (
    NonIsolatedSingularityError,
    build_versal,
    fiber_is_smooth,
    milnor,
    monomial_curve,
    orbit_descriptor,
    parse_rational_vector,
)
from .verify import SUITES, run_suite

SCHEMA_VERSION = "1.0"

ENV_HELP = """environment:
  E8STRATA_BUDGET_SECONDS   time budget for kernel-search (default 300)
  E8STRATA_MAX_TRUNCATION   truncation bound for Milnor algebras (default 64)
"""


class DomainError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


# --------------------------------------------------------------------------
# handlers: each returns the result payload


def cmd_dynkin(args) -> dict:
    d = parse_diagram(args.diagram)
    degs = invariant_degrees(d)
    return {
        "diagram": d.name,
        "family": d.family,
        "rank": d.rank,
        "vertices": list(d.vertices),
        "edges": [list(e) for e in d.sorted_edges()],
        "cartan_matrix": [list(r) for r in cartan_matrix(d)],
        "positive_roots": len(enumerate_positive_roots(d).positive_roots),
        "coxeter_number": coxeter_number(d),
        "exponents": exponents(d),
        "degrees": degs,
        "gcd": math.gcd(*degs),
        "longest_word": list(longest_word(d)),
        "w0_is_minus_id": longest_element(d).is_minus_identity(),
        "delta_automorphism": {str(k): v for k, v in sorted(delta_automorphism(d).items())},
    }


def cmd_artin(args) -> dict:
    d = parse_diagram(args.diagram)
    w = ag.parse_word(args.word, d)
    if args.action == "normal-form":
        nf = ag.normal_form(w)
        return {"word": str(w), "normal_form": nf.to_json(), "degree": ag.degree(w)}
    if args.action == "central":
        return {"word": str(w), "is_central": ag.is_central(w)}
    if args.action == "equal":
        if args.other is None:
            raise DomainError("artin equal needs --other")
        other = ag.parse_word(args.other, d)
        inn = ag.inn_equal(w, other)
        return {
            "word": str(w),
            "other": str(other),
            "equal": ag.are_equal(w, other),
            "inn_equal": inn.equal,
            "inn_witness": inn.witness,
            "centre_generator": inn.quotient,
        }
    raise AssertionError(args.action)


def _poly(text: str):
    try:
        return parse_poly(text)
    except ParseError as e:
        raise DomainError(str(e)) from None


def _germ(args):
    if args.curve:
        a, b = args.curve
        return monomial_curve(a, b)
    if args.poly is None:
        raise DomainError("give --poly or --curve")
    return _poly(args.poly)


def cmd_milnor(args) -> dict:
    f = _germ(args)
    data = milnor(f)
    return {
        "germ": str(f),
        "milnor_number": data.milnor_number,
        "basis": [monomial_str(m) for m in data.basis],
        "stabilised_at_truncation": data.truncation,
    }


def cmd_versal(args) -> dict:
    f = _germ(args)
    fam = build_versal(f)
    out = {"family": fam.to_json(), "dimension": fam.dimension}
    vectors = []
    if args.smooth:
        vectors.append(args.smooth)
    if args.batch:
        stream = sys.stdin if args.batch == "-" else open(args.batch)
        with stream:
            vectors.extend(line for line in stream if line.strip())
    if vectors:
        fibers = []
        for line in vectors:
            s = parse_rational_vector(line)
            fibers.append({"s": [str(c) for c in s], "smooth": fiber_is_smooth(fam, s)})
        out["fibers"] = fibers
    return out


def cmd_semigroup(args) -> dict:
    if (args.gens is None) == (args.gaps is None):
        raise DomainError("give exactly one of --gens and --gaps")
    if args.gens is not None:
        s = from_generators(args.gens)
        gs = GapSequence(s.gaps)
    else:
        gs = GapSequence(tuple(args.gaps))
        s = gaps_to_semigroup(gs)
    par = spin_parity(gs)
    out = {
        "generators": list(s.generators),
        "gaps": list(s.gaps),
        "genus": s.genus,
        "frobenius": s.frobenius,
        "parity": par.parity,
        "h0": par.h0,
    }
    if args.classify or gs.genus == 4:
        if gs.genus != 4:
            raise DomainError(f"classification applies to genus 4, this semigroup has genus {gs.genus}")
        out["classification"] = classify_genus4(gs)
    return out


def _orientation(text: str | None):
    if text is None:
        return None
    try:
        raw = json.loads(text)
        return {tuple(int(v) for v in k.split(",")): int(s) for k, s in raw.items()}
    except (ValueError, AttributeError):
        raise DomainError(f'orientation must be JSON like {{"1,3": -1, ...}}, got {text!r}') from None


def cmd_monodromy(args) -> dict:
    d = parse_diagram(args.diagram)
    cfg = mono.build_config(d, _orientation(args.orientation))
    base = {"diagram": d.name, "gram": [list(r) for r in cfg.gram], "gram_determinant": cfg.determinant}
    if args.action == "check-relations":
        return {**base, **mono.check_geometric_relations(cfg).to_json()}
    if args.action == "image":
        w = ag.parse_word(args.word or "", d)
        m = mono.rep_word(cfg, w)
        return {**base, "word": str(w), "matrix": m.to_json(), "is_identity": m.is_identity()}
    if args.action == "delta":
        img = mono.delta_image(cfg, args.order_bound)
        return {**base, "matrix": img.matrix.to_json(), "order": img.order if img.order is not None else "infinite"}
    if args.action == "certificate":
        w = ag.parse_word(args.word or "", d)
        c = mono.verify_kernel_certificate(cfg, w)
        return {**base, "word": str(w), "group_trivial": c.group_trivial, "homology_trivial": c.homology_trivial}
    if args.action == "kernel-search":
        res = mono.kernel_search(cfg, args.max_len, args.budget_seconds)
        return {
            **base,
            "max_length": res.max_length,
            "words": [str(w) for w in res.words],
            "explored_length": res.explored_length,
            "complete": res.complete,
            "elements_visited": res.elements_visited,
        }
    raise AssertionError(args.action)


def cmd_verify(args) -> dict:
    results = run_suite(args.suite)
    suites = {name: [c.to_json() for c in checks] for name, checks in results.items()}
    failing = [f"{name}:{c.name}" for name, checks in results.items() for c in checks if not c.passed]
    return {"suites": suites, "failing": failing, "all_pass": not failing}


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indented JSON")
    common.add_argument("--timing", action="store_true", help="add wall-clock seconds under a top-level 'timing' key")

    p = argparse.ArgumentParser(
        prog="e8strata",
        description="Exact computations with E8 root data, Artin groups, plane curve germs and gap sequences.",
        epilog=ENV_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("dynkin", parents=[common], help="root system data")
    s.add_argument("action", choices=["info"])
    s.add_argument("diagram", help="A<n>, D<n>, E6, E7, E8 or JSON {vertices, edges}")
    s.set_defaults(handler=cmd_dynkin)

    s = sub.add_parser("artin", parents=[common], help="Artin group words and Garside normal forms")
    s.add_argument("action", choices=["normal-form", "central", "equal"])
    s.add_argument("diagram")
    s.add_argument("--word", required=True, help='signed generator labels, e.g. "1 2 -3"')
    s.add_argument("--other", help="second word for 'equal'")
    s.set_defaults(handler=cmd_artin)

    for name, handler, text in (
        ("milnor", cmd_milnor, "Milnor number and local algebra basis"),
        ("versal", cmd_versal, "versal deformation and fiber smoothness"),
    ):
        s = sub.add_parser(name, parents=[common], help=text)
        s.add_argument("--poly", help='germ, e.g. "x^3+y^5"')
        s.add_argument("--curve", type=_int_list, help="monomial curve a,b giving x^b - y^a")
        if name == "versal":
            s.add_argument("--smooth", help="parameter vector s1,...,sm (rationals)")
            s.add_argument("--batch", help="file with one parameter vector per line, or - for stdin")
        s.set_defaults(handler=handler)

    s = sub.add_parser("semigroup", parents=[common], help="numerical semigroups and gap sequences")
    s.add_argument("--gens", type=_int_list)
    s.add_argument("--gaps", type=_int_list)
    s.add_argument("--classify", action="store_true", help="genus 4 component (also automatic in genus 4)")
    s.set_defaults(handler=cmd_semigroup)

    s = sub.add_parser("monodromy", parents=[common], help="homology-level transvection representation")
    s.add_argument("action", choices=["check-relations", "image", "delta", "certificate", "kernel-search"])
    s.add_argument("diagram")
    s.add_argument("--orientation", help='edge signs as JSON, e.g. {"1,3": -1, ...}; default +1 everywhere')
    s.add_argument("--word")
    s.add_argument("--max-len", type=int, default=8)
    s.add_argument("--budget-seconds", type=float, default=None)
    s.add_argument("--order-bound", type=int, default=mono.DEFAULT_ORDER_BOUND)
    s.set_defaults(handler=cmd_monodromy)

    s = sub.add_parser("verify-paper", parents=[common], help="run named consistency suites")
    s.add_argument("suite", choices=[*SUITES, "all"])
    s.set_defaults(handler=cmd_verify)
    return p


DOMAIN_ERRORS = (DomainError, DiagramError, SemigroupError, ParseError, NonIsolatedSingularityError, ValueError, OSError)


def dumps(report: dict, pretty: bool) -> str:
    if pretty:
        return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False)
    return json.dumps(report, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def run(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    report: dict = {"schema_version": SCHEMA_VERSION, "command": argv}
    start = time.perf_counter()
    code = 0
    try:
        report["result"] = args.handler(args)
    except DOMAIN_ERRORS as e:
        report["error"] = {"type": type(e).__name__, "message": str(e)}
        code = 1
    if args.command == "verify-paper" and code == 0 and not report["result"]["all_pass"]:
        report["error"] = {"type": "CheckFailure", "message": "failing: " + ", ".join(report["result"]["failing"])}
        code = 1
    if args.timing:
        report["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    print(dumps(report, args.pretty))
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
