"""Words in small-type Artin groups and their Garside normal forms.

Simple elements (divisors of the Garside element) are Weyl group elements. The
public type is the integer matrix; internally a simple element ``w`` is the pair
``(w(2 rho), w^-1(2 rho))`` in fundamental-weight coordinates. Since ``2 rho``
is regular either vector determines ``w``. Left descents are the negative
entries of the first vector, right descents those of the second, and a simple
reflection acting on a weight only touches a vertex and its neighbours.

A word is brought to normal form by rewriting each inverse letter as
``a_i^-1 = Delta^-1 (w0 s_i)``, pushing every ``Delta^-1`` to the front (this
conjugates the factors it passes by the diagram automorphism ``tau``), and then
left-weighting the remaining positive factors by local sliding.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .root_systems import (
    DiagramError,
    DynkinDiagram,
    WeylElement,
    cartan_matrix,
    delta_automorphism,
    element_from_word,
    enumerate_positive_roots,
    longest_word,
    mat_vec,
    reduced_word,
)

Weight = tuple[int, ...]
Simple = tuple[Weight, Weight]


class _Tables:
    """Per-diagram data for the Garside machinery (built once, then read-only)."""

    def __init__(self, d: DynkinDiagram):
        self.d = d
        n = self.n = d.rank
        self.nbrs = [[j for j in range(n) if d.adjacent(d.vertices[i], d.vertices[j])] for i in range(n)]
        self.rho2: Weight = (2,) * n
        self.identity: Simple = (self.rho2, self.rho2)
        self.cartan = cartan_matrix(d)
        roots = enumerate_positive_roots(d).positive_roots
        self.rho2_roots = tuple(sum(r[k] for r in roots) for k in range(n))
        self.gens = [self.from_word([i]) for i in range(n)]
        self.w0 = self.from_word([d.index(s) for s in longest_word(d)])
        auto = delta_automorphism(d)
        self.sigma = [d.index(auto[v]) for v in d.vertices]
        # w0 s_i, the left complement of a_i in Delta
        self.complements = [self.rmul(self.w0, i) for i in range(n)]

    def reflect(self, lam: Weight, s: int) -> Weight:
        out = list(lam)
        c = lam[s]
        out[s] = -c
        for j in self.nbrs[s]:
            out[j] += c
        return tuple(out)

    def peel(self, lam: Weight) -> list[int]:
        """Letters s_k1, s_k2, ... with w = s_k1 s_k2 ..., for lam = w(2 rho)."""
        word = []
        while True:
            k = next((k for k, c in enumerate(lam) if c < 0), None)
            if k is None:
                return word
            word.append(k)
            lam = self.reflect(lam, k)

    def other_side(self, lam: Weight) -> Weight:
        """w^-1(2 rho) from w(2 rho), and vice versa.

        Peels left descents off ``w`` in any order; the result does not depend on it.
        """
        lam = list(lam)
        mu = [2] * self.n
        nbrs = self.nbrs
        stack = [k for k in range(self.n) if lam[k] < 0]
        while stack:
            k = stack.pop()
            c = lam[k]
            if c >= 0:
                continue
            lam[k] = -c
            d = mu[k]
            mu[k] = -d
            for j in nbrs[k]:
                lam[j] += c
                mu[j] += d
                if lam[j] < 0:
                    stack.append(j)
        return tuple(mu)

    # a Simple may carry None on one side until that side is needed

    def lam(self, x: Simple) -> Weight:
        return x[0] if x[0] is not None else self.other_side(x[1])

    def mu(self, x: Simple) -> Weight:
        return x[1] if x[1] is not None else self.other_side(x[0])

    def full(self, x: Simple) -> Simple:
        return self.lam(x), self.mu(x)

    def from_word(self, word: Iterable[int]) -> Simple:
        w = self.identity
        for s in word:
            w = self.rmul(w, s)
        return w

    def rmul(self, x: Simple, s: int) -> Simple:
        mu = self.reflect(self.mu(x), s)
        return self.other_side(mu), mu

    def lmul(self, s: int, x: Simple) -> Simple:
        lam = self.reflect(self.lam(x), s)
        return lam, self.other_side(lam)

    @staticmethod
    def mask(lam: Weight) -> int:
        m = 0
        for k, c in enumerate(lam):
            if c < 0:
                m |= 1 << k
        return m

    def rdesc(self, x: Simple) -> int:
        return self.mask(self.mu(x))

    def ldesc(self, x: Simple) -> int:
        return self.mask(self.lam(x))

    def is_identity(self, x: Simple) -> bool:
        return (x[0] if x[0] is not None else x[1]) == self.rho2

    def is_delta(self, x: Simple) -> bool:
        return (x[0] if x[0] is not None else x[1]) == self.w0[0]

    def tau(self, x: Simple) -> Simple:
        """Conjugation by w0, which relabels weights through sigma."""
        sig = self.sigma
        out = []
        for vec in x:
            if vec is None:
                out.append(None)
                continue
            new = [0] * self.n
            for k in range(self.n):
                new[sig[k]] = vec[k]
            out.append(tuple(new))
        return out[0], out[1]

    def length(self, x: Simple) -> int:
        return len(self.peel(self.lam(x)))

    # -- normal forms

    def left_weight(self, x: Simple, y: Simple) -> tuple[Simple, Simple] | None:
        """Left-weighted pair equal to x*y, or None when (x, y) already is one.

        Slides letters s with s a left descent of y and not a right descent of x.
        Only s and its neighbours change status after a slide.
        """
        mu = list(self.mu(x))
        lam = list(self.lam(y))
        nbrs = self.nbrs
        stack = [k for k in range(self.n) if lam[k] < 0 and mu[k] > 0]
        if not stack:
            return None
        while stack:
            s = stack.pop()
            c, d = lam[s], mu[s]
            if c >= 0 or d < 0:
                continue
            lam[s], mu[s] = -c, -d
            for j in nbrs[s]:
                lam[j] += c
                mu[j] += d
                if lam[j] < 0 and mu[j] > 0:
                    stack.append(j)
        return (None, tuple(mu)), (tuple(lam), None)

    def append(self, factors: list[Simple], y: Simple) -> None:
        """Right-multiply a left-weighted list of simples by ``y`` in place."""
        factors.append(y)
        i = len(factors) - 2
        while i >= 0:
            x, y = factors[i], factors[i + 1]
            if x[1] is None:
                factors[i] = x = (x[0], self.other_side(x[0]))
            if y[0] is None:
                factors[i + 1] = y = (self.other_side(y[1]), y[1])
            pair = self.left_weight(x, y)
            if pair is None:
                break
            factors[i], factors[i + 1] = pair
            i -= 1
        # identities can only sit at the tail of a left-weighted list
        while factors and self.is_identity(factors[-1]):
            factors.pop()

    def normalise(self, power: int, factors: list[Simple]) -> tuple[int, list[Simple]]:
        start = 0
        while start < len(factors) and self.is_delta(factors[start]):
            start += 1
        end = len(factors)
        while end > start and self.is_identity(factors[end - 1]):
            end -= 1
        return power + start, factors[start:end]

    def is_left_weighted(self, factors: Sequence[Simple]) -> bool:
        return all(self.ldesc(b) & ~self.rdesc(a) == 0 for a, b in zip(factors, factors[1:]))

    def word_normal_form(self, letters: Sequence[int]) -> tuple[int, list[Simple]]:
        """Normal form of a word given by signed vertex positions (1-based, sign = exponent)."""
        letters = free_reduce(letters)
        negatives_after = 0
        twisted = [False] * len(letters)
        for k in range(len(letters) - 1, -1, -1):
            twisted[k] = bool(negatives_after & 1)
            if letters[k] < 0:
                negatives_after += 1
        factors: list[Simple] = []
        for k, letter in enumerate(letters):
            i = abs(letter) - 1
            if twisted[k]:
                i = self.sigma[i]
            self.append(factors, self.gens[i] if letter > 0 else self.complements[i])
        return self.normalise(-negatives_after, factors)

    def mul_letter(self, power: int, factors: Sequence[Simple], letter: int) -> tuple[int, list[Simple]]:
        """Normal form of (Delta^power * factors) * a_i^{+-1}."""
        i = abs(letter) - 1
        if letter > 0:
            out = list(factors)
            self.append(out, self.gens[i])
            return self.normalise(power, out)
        if factors and self.rdesc(factors[-1]) >> i & 1:
            # the last factor ends in s_i: strip it, left-weightedness is kept
            out = list(factors)
            out[-1] = self.rmul(out[-1], i)
            return self.normalise(power, out)
        out = [self.tau(x) for x in factors]
        self.append(out, self.complements[i])
        return self.normalise(power - 1, out)

    def key(self, power: int, factors: Sequence[Simple]) -> tuple[int, tuple[Weight, ...]]:
        return power, tuple(self.lam(f) for f in factors)

    def to_weyl(self, x: Simple) -> WeylElement:
        return element_from_word(self.d, [self.d.vertices[k] for k in self.peel(self.lam(x))])

    def from_weyl(self, w: WeylElement) -> Simple:
        lam = mat_vec(self.cartan, w.apply(self.rho2_roots))
        return lam, self.other_side(lam)


@functools.lru_cache(maxsize=None)
def _tables(d: DynkinDiagram) -> _Tables:
    return _Tables(d)


def free_reduce(letters: Iterable[int]) -> list[int]:
    out: list[int] = []
    for a in letters:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return out


# --------------------------------------------------------------------------
# Public types


@dataclass(frozen=True)
class ArtinWord:
    letters: tuple[int, ...]
    diagram: DynkinDiagram

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(a) for a in self.letters))
        for a in self.letters:
            if a == 0 or abs(a) not in self.diagram.vertices:
                raise DiagramError(f"letter {a} does not name a generator of {self.diagram.name}")

    def __mul__(self, other: ArtinWord) -> ArtinWord:
        _same_diagram(self, other)
        return ArtinWord(self.letters + other.letters, self.diagram)

    def __pow__(self, k: int) -> ArtinWord:
        if k < 0:
            return self.inverse() ** (-k)
        return ArtinWord(self.letters * k, self.diagram)

    def __len__(self):
        return len(self.letters)

    def inverse(self) -> ArtinWord:
        return ArtinWord(tuple(-a for a in reversed(self.letters)), self.diagram)

    def __str__(self):
        return " ".join(str(a) for a in self.letters)


def parse_word(text: str, d: DynkinDiagram) -> ArtinWord:
    """Parse whitespace-separated signed generator labels, e.g. ``"1 2 -3"``."""
    try:
        letters = [int(tok) for tok in text.split()]
    except ValueError:
        raise DiagramError(f"cannot parse word {text!r}: expected signed integers") from None
    return ArtinWord(tuple(letters), d)


def generator(d: DynkinDiagram, i: int) -> ArtinWord:
    return ArtinWord((i,), d)


@dataclass(frozen=True)
class GarsideNormalForm:
    delta_power: int
    simples: tuple[WeylElement, ...]
    diagram: DynkinDiagram

    def reduced_words(self) -> list[list[int]]:
        return [reduced_word(w, self.diagram) for w in self.simples]

    def to_word(self) -> ArtinWord:
        delta = list(longest_word(self.diagram))
        if self.delta_power >= 0:
            letters = delta * self.delta_power
        else:
            letters = [-a for a in reversed(delta)] * (-self.delta_power)
        for rw in self.reduced_words():
            letters.extend(rw)
        return ArtinWord(tuple(letters), self.diagram)

    def to_json(self) -> dict:
        return {"delta_power": self.delta_power, "simples": self.reduced_words()}

    @property
    def canonical_length(self) -> int:
        return len(self.simples)


def _positions(w: ArtinWord) -> list[int]:
    d = w.diagram
    return [(d.index(abs(a)) + 1) * (1 if a > 0 else -1) for a in w.letters]


def _nf_key(w: ArtinWord) -> tuple[int, tuple]:
    t = _tables(w.diagram)
    return t.key(*t.word_normal_form(_positions(w)))


def _same_diagram(w1: ArtinWord, w2: ArtinWord) -> None:
    if w1.diagram != w2.diagram:
        raise DiagramError(f"words live over different diagrams ({w1.diagram.name} vs {w2.diagram.name})")


# --------------------------------------------------------------------------
# Operations


def garside_element(d: DynkinDiagram) -> ArtinWord:
    return ArtinWord(longest_word(d), d)


def normal_form(w: ArtinWord) -> GarsideNormalForm:
    t = _tables(w.diagram)
    p, factors = t.word_normal_form(_positions(w))
    return GarsideNormalForm(p, tuple(t.to_weyl(f) for f in factors), w.diagram)


def are_equal(w1: ArtinWord, w2: ArtinWord) -> bool:
    _same_diagram(w1, w2)
    return _nf_key(w1 * w2.inverse()) == (0, ())


def degree(w: ArtinWord) -> int:
    return sum(1 if a > 0 else -1 for a in w.letters)


def is_central(w: ArtinWord) -> bool:
    return all(are_equal(w * generator(w.diagram, i), generator(w.diagram, i) * w) for i in w.diagram.vertices)


def conjugation_by_delta(d: DynkinDiagram, i: int) -> int:
    """The vertex j with Delta^-1 a_i Delta = a_j."""
    return delta_automorphism(d)[i]


def center_generator_power(d: DynkinDiagram) -> int:
    """1 if Delta is central (w0 = -1), else 2."""
    return 1 if all(conjugation_by_delta(d, v) == v for v in d.vertices) else 2


@dataclass(frozen=True)
class InnEquality:
    equal: bool
    witness: int | None
    # the centre is generated by Delta ** modulus
    modulus: int

    @property
    def quotient(self) -> str:
        return "Delta" if self.modulus == 1 else "Delta^2"


def inn_equal(w1: ArtinWord, w2: ArtinWord) -> InnEquality:
    """Equality modulo the centre: ``w1 w2^-1 = Delta^k``; returns the witness k.

    When Delta is not central the centre is generated by Delta^2 and k must be even.
    """
    _same_diagram(w1, w2)
    modulus = center_generator_power(w1.diagram)
    p, factors = _nf_key(w1 * w2.inverse())
    if factors or p % modulus:
        return InnEquality(False, None, modulus)
    return InnEquality(True, p, modulus)


def sum_of_simple_lengths(nf: GarsideNormalForm) -> int:
    t = _tables(nf.diagram)
    return sum(t.length(t.from_weyl(w)) for w in nf.simples)
