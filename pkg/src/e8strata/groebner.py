"""Buchberger's algorithm for ideals of Q[x, y], graded lex order with x > y.

Inputs here are tiny (a curve and its two partials), so the implementation
favours clarity: the product criterion is the only pair pruning.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .polynomials import BivariatePoly, Monomial, graded_lex_key


def _divides(m: Monomial, n: Monomial) -> bool:
    return m[0] <= n[0] and m[1] <= n[1]


def _lcm(m: Monomial, n: Monomial) -> Monomial:
    return max(m[0], n[0]), max(m[1], n[1])


def monic(f: BivariatePoly) -> BivariatePoly:
    return f.scale(1 / f.leading()[1])


def reduce(f: BivariatePoly, basis: list[BivariatePoly]) -> BivariatePoly:
    """Full remainder of f on division by ``basis`` (all terms reduced)."""
    leads = [(g.leading(), g) for g in basis]
    rem = BivariatePoly()
    p = f
    while p:
        m, c = p.leading()
        for (lm, lc), g in leads:
            if _divides(lm, m):
                p = p - g.shift(m[0] - lm[0], m[1] - lm[1]).scale(c / lc)
                break
        else:
            rem = rem + BivariatePoly.monomial(m[0], m[1], c)
            p = p - BivariatePoly.monomial(m[0], m[1], c)
    return rem


def _s_poly(f: BivariatePoly, g: BivariatePoly) -> BivariatePoly:
    (mf, cf), (mg, cg) = f.leading(), g.leading()
    l = _lcm(mf, mg)
    return f.shift(l[0] - mf[0], l[1] - mf[1]).scale(1 / cf) - g.shift(l[0] - mg[0], l[1] - mg[1]).scale(1 / cg)


def groebner_basis(polys: Iterable[BivariatePoly]) -> list[BivariatePoly]:
    """Reduced Groebner basis, monic, sorted by leading monomial (largest first)."""
    G = [monic(f) for f in polys if f]
    if not G:
        return []
    pairs = list(combinations(range(len(G)), 2))
    while pairs:
        i, j = pairs.pop()
        mi, mj = G[i].leading()[0], G[j].leading()[0]
        if min(mi[0], mj[0]) == 0 and min(mi[1], mj[1]) == 0:
            # coprime leading monomials: the S-polynomial reduces to zero
            continue
        r = reduce(_s_poly(G[i], G[j]), G)
        if r:
            G.append(monic(r))
            if r.terms.keys() == {(0, 0)}:
                return [BivariatePoly.constant(1)]
            pairs.extend((k, len(G) - 1) for k in range(len(G) - 1))
    # minimise then inter-reduce
    G.sort(key=lambda g: graded_lex_key(g.leading()[0]))
    minimal = []
    for g in G:
        # a divisor of a leading monomial is never larger, so it was already seen
        if not any(_divides(h.leading()[0], g.leading()[0]) for h in minimal):
            minimal.append(g)
    out = []
    for k, g in enumerate(minimal):
        rest = minimal[:k] + minimal[k + 1:]
        lm, lc = g.leading()
        tail = reduce(g - BivariatePoly.monomial(lm[0], lm[1], lc), rest)
        out.append(monic(BivariatePoly.monomial(lm[0], lm[1], lc) + tail))
    out.sort(key=lambda g: graded_lex_key(g.leading()[0]), reverse=True)
    return out


def contains_one(polys: Iterable[BivariatePoly]) -> bool:
    """Whether 1 lies in the ideal generated by ``polys``."""
    return groebner_basis(polys) == [BivariatePoly.constant(1)]
