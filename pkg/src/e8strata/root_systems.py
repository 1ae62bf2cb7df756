"""Simply-laced Dynkin diagrams, root systems and Weyl groups in exact integer arithmetic.

Roots live in simple-root coordinates: the simple root attached to the vertex at
position ``k`` of ``DynkinDiagram.vertices`` is the ``k``-th standard basis vector.
Weyl group elements are integer matrices acting on column vectors in those
coordinates.

Vertex numbering follows Bourbaki:

* ``A_n``: the chain 1 - 2 - ... - n.
* ``D_n``: the chain 1 - 2 - ... - (n-1), with n attached to n-2.
* ``E_n``: the chain 1 - 3 - 4 - ... - n, with 2 attached to 4.

Nothing downstream depends on the convention; diagrams given by explicit edge
lists are classified up to isomorphism and keep their own labels.
"""

from __future__ import annotations

import functools
import json
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

Matrix = tuple[tuple[int, ...], ...]


class DiagramError(ValueError):
    """Raised for family/rank combinations or edge sets outside A_n, D_n, E_6, E_7, E_8."""


# --------------------------------------------------------------------------
# Diagrams


@dataclass(frozen=True)
class DynkinDiagram:
    family: str
    rank: int
    vertices: tuple[int, ...]
    edges: frozenset[frozenset[int]]

    def __post_init__(self):
        if self.family not in ("A", "D", "E"):
            raise DiagramError(f"unknown family {self.family!r}; expected A, D or E")
        if len(self.vertices) != self.rank or sorted(self.vertices) != list(range(1, self.rank + 1)):
            raise DiagramError(f"vertices must be a permutation of 1..{self.rank}")
        for e in self.edges:
            if len(e) != 2 or not e <= set(self.vertices):
                raise DiagramError(f"bad edge {sorted(e)}")
        fam, rk = classify_tree(self.vertices, [tuple(e) for e in self.edges])
        if rk != self.rank or (fam != self.family and not (self.family == "D" and self.rank == 3 and fam == "A")):
            raise DiagramError(f"edge set is of type {fam}{rk}, not {self.family}{self.rank}")

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def index(self, label: int) -> int:
        """Position of a vertex label in ``vertices``."""
        try:
            return self.vertices.index(label)
        except ValueError:
            raise DiagramError(f"{label} is not a vertex of {self.name}") from None

    def adjacent(self, i: int, j: int) -> bool:
        return frozenset((i, j)) in self.edges

    def neighbours(self, label: int) -> list[int]:
        return sorted(v for v in self.vertices if self.adjacent(label, v))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(e)) for e in self.edges)

    def relabel(self, perm: dict[int, int]) -> DynkinDiagram:
        """Diagram with every label ``v`` replaced by ``perm[v]``."""
        edges = frozenset(frozenset(perm[v] for v in e) for e in self.edges)
        return DynkinDiagram(self.family, self.rank, tuple(range(1, self.rank + 1)), edges)

    def __str__(self):
        return self.name


def _standard_edges(family: str, rank: int) -> list[tuple[int, int]]:
    if family == "A":
        return [(i, i + 1) for i in range(1, rank)]
    if family == "D":
        return [(i, i + 1) for i in range(1, rank - 1)] + [(rank - 2, rank)]
    return [(1, 3)] + [(i, i + 1) for i in range(3, rank)] + [(2, 4)]


def build_diagram(family: str, rank: int) -> DynkinDiagram:
    family = family.upper()
    if family == "A" and rank >= 1:
        pass
    elif family == "D" and rank >= 3:
        pass
    elif family == "E" and rank in (6, 7, 8):
        pass
    else:
        raise DiagramError(
            f"{family}{rank} is not admitted: need A_n (n>=1), D_n (n>=3) or E_6, E_7, E_8"
        )
    edges = frozenset(frozenset(e) for e in _standard_edges(family, rank))
    return DynkinDiagram(family, rank, tuple(range(1, rank + 1)), edges)


def classify_tree(vertices: Sequence[int], edges: Iterable[tuple[int, int]]) -> tuple[str, int]:
    """Return ``(family, rank)`` of a simply-laced tree, or raise DiagramError."""
    verts = list(vertices)
    vset = set(verts)
    if len(vset) != len(verts) or not verts:
        raise DiagramError("vertex labels must be distinct and nonempty")
    adj: dict[int, set[int]] = {v: set() for v in verts}
    seen = set()
    for i, j in edges:
        if i == j:
            raise DiagramError(f"self-loop at {i}")
        if i not in vset or j not in vset:
            raise DiagramError(f"edge ({i}, {j}) uses an unknown vertex")
        key = frozenset((i, j))
        if key in seen:
            raise DiagramError(f"multiple edge between {i} and {j}")
        seen.add(key)
        adj[i].add(j)
        adj[j].add(i)
    n = len(verts)
    if len(seen) != n - 1:
        raise DiagramError(f"a tree on {n} vertices has {n - 1} edges, got {len(seen)}")
    stack, reached = [verts[0]], {verts[0]}
    while stack:
        v = stack.pop()
        for w in adj[v] - reached:
            reached.add(w)
            stack.append(w)
    if len(reached) != n:
        raise DiagramError("edge set is not connected")

    branch = [v for v in verts if len(adj[v]) >= 3]
    if not branch:
        return "A", n
    if len(branch) > 1 or len(adj[branch[0]]) > 3:
        raise DiagramError("not a Dynkin tree: more than one branch point or a vertex of degree > 3")
    centre = branch[0]
    arms = []
    for start in adj[centre]:
        length, prev, cur = 1, centre, start
        while True:
            nxt = adj[cur] - {prev}
            if not nxt:
                break
            prev, cur = cur, nxt.pop()
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return "D", n
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return "E", n
    raise DiagramError(f"branch arms {arms} do not form an A, D or E diagram")


def diagram_from_edges(vertices: Sequence[int], edges: Iterable[Sequence[int]]) -> DynkinDiagram:
    edge_list = [tuple(e) for e in edges]
    if any(len(e) != 2 for e in edge_list):
        raise DiagramError("edges must be pairs")
    family, rank = classify_tree(vertices, edge_list)
    if sorted(vertices) != list(range(1, rank + 1)):
        raise DiagramError(f"vertices must be labelled 1..{rank}")
    return DynkinDiagram(family, rank, tuple(range(1, rank + 1)),
                         frozenset(frozenset(e) for e in edge_list))


_NAME = re.compile(r"^\s*([ADEade])\s*(\d+)\s*$")


def parse_diagram(text: str) -> DynkinDiagram:
    """Parse ``E8``/``A5``/``D4`` or a JSON object ``{"vertices": [...], "edges": [[i, j], ...]}``."""
    m = _NAME.match(text)
    if m:
        return build_diagram(m.group(1).upper(), int(m.group(2)))
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        raise DiagramError(f"cannot parse diagram {text!r}") from None
    if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
        raise DiagramError("JSON diagram needs 'vertices' and 'edges'")
    return diagram_from_edges(data["vertices"], data["edges"])


# --------------------------------------------------------------------------
# Small exact matrix helpers


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def mat_vec(a: Matrix, v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def mat_inverse(a: Matrix) -> Matrix:
    """Exact inverse of a unimodular integer matrix."""
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        p = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    inv = []
    for row in aug:
        vals = row[n:]
        if any(x.denominator != 1 for x in vals):
            raise ValueError("inverse is not integral")
        inv.append(tuple(int(x) for x in vals))
    return tuple(inv)


def determinant(a: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free determinant."""
    m = [list(row) for row in a]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            p = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if p is None:
                return 0
            m[k], m[p] = m[p], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def charpoly(a: Matrix) -> list[int]:
    """Characteristic polynomial det(tI - a), coefficients from constant term up.

    Faddeev-LeVerrier over the rationals; the result is integral for integer input.
    """
    n = len(a)
    A = [[Fraction(x) for x in row] for row in a]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    M = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        AM = [[sum(A[i][t] * M[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            AM[i][i] += coeffs[n - k + 1]
        M = AM
        AMk = [[sum(A[i][t] * M[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        coeffs[n - k] = -sum(AMk[i][i] for i in range(n)) / k
    return [int(c) for c in coeffs]


# --------------------------------------------------------------------------
# Root systems and Weyl elements


def cartan_matrix(d: DynkinDiagram) -> Matrix:
    return tuple(
        tuple(2 if i == j else (-1 if d.adjacent(i, j) else 0) for j in d.vertices)
        for i in d.vertices
    )


def is_negative_root(v: Sequence[int]) -> bool:
    # coefficients of a root all share one sign
    return sum(v) < 0


@dataclass(frozen=True)
class WeylElement:
    matrix: Matrix

    @property
    def rank(self) -> int:
        return len(self.matrix)

    @functools.cached_property
    def inverse_matrix(self) -> Matrix:
        return mat_inverse(self.matrix)

    def inverse(self) -> WeylElement:
        return WeylElement(self.inverse_matrix)

    def __mul__(self, other: WeylElement) -> WeylElement:
        return WeylElement(mat_mul(self.matrix, other.matrix))

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        return mat_vec(self.matrix, v)

    def is_identity(self) -> bool:
        return self.matrix == identity_matrix(self.rank)

    def is_minus_identity(self) -> bool:
        return self.matrix == tuple(tuple(-x for x in row) for row in identity_matrix(self.rank))

    def permutes(self, roots: Iterable[Sequence[int]]) -> bool:
        """Whether the matrix maps the full root set (positives and negatives) onto itself."""
        pos = {tuple(r) for r in roots}
        allr = pos | {tuple(-x for x in r) for r in pos}
        return {self.apply(r) for r in allr} == allr


@dataclass(frozen=True)
class RootSystem:
    diagram: DynkinDiagram
    cartan_matrix: Matrix
    simple_roots: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.diagram.rank

    def length(self, w: WeylElement) -> int:
        """Number of positive roots sent to negative roots."""
        return sum(is_negative_root(w.apply(r)) for r in self.positive_roots)


def simple_reflection(d: DynkinDiagram, label: int) -> WeylElement:
    k = d.index(label)
    C = cartan_matrix(d)
    n = d.rank
    rows = [list(r) for r in identity_matrix(n)]
    for j in range(n):
        rows[k][j] -= C[k][j]
    return WeylElement(tuple(tuple(r) for r in rows))


@functools.lru_cache(maxsize=None)
def enumerate_positive_roots(d: DynkinDiagram) -> RootSystem:
    C = cartan_matrix(d)
    n = d.rank
    simple = identity_matrix(n)
    found = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                pairing = sum(C[i][j] * beta[j] for j in range(n))
                if pairing == 0:
                    continue
                gamma = list(beta)
                gamma[i] -= pairing
                gamma = tuple(gamma)
                if min(gamma) >= 0 and gamma not in found:
                    found.add(gamma)
                    nxt.append(gamma)
        frontier = nxt
    roots = tuple(sorted(found, key=lambda r: (sum(r), tuple(-x for x in r))))
    return RootSystem(d, C, simple, roots)


def weyl_descents(w: WeylElement, side: str = "left", d: DynkinDiagram | None = None) -> set[int]:
    """Descent set of ``w`` as vertex labels (positions+1 when no diagram is given).

    Right descents: ``{s : w(alpha_s) < 0}``; left descents: ``{s : w^-1(alpha_s) < 0}``.
    """
    if side == "right":
        m = w.matrix
    elif side == "left":
        m = w.inverse_matrix
    else:
        raise ValueError("side must be 'left' or 'right'")
    labels = d.vertices if d is not None else tuple(range(1, w.rank + 1))
    return {labels[k] for k in range(w.rank) if is_negative_root([row[k] for row in m])}


def reduced_word(w: WeylElement, d: DynkinDiagram) -> list[int]:
    """Lexicographically first reduced word, peeled off by smallest left descent."""
    word = []
    refl = {v: simple_reflection(d, v) for v in d.vertices}
    while True:
        desc = weyl_descents(w, "left", d)
        if not desc:
            return word
        s = min(desc)
        word.append(s)
        w = refl[s] * w


def element_from_word(d: DynkinDiagram, word: Iterable[int]) -> WeylElement:
    w = WeylElement(identity_matrix(d.rank))
    for s in word:
        w = w * simple_reflection(d, s)
    return w


@functools.lru_cache(maxsize=None)
def longest_word(d: DynkinDiagram) -> tuple[int, ...]:
    """Reduced word of w0 found by greedy ascent: append any non-descent until none is left."""
    n = d.rank
    C = cartan_matrix(d)
    # columns of the matrix, so right multiplication by s only touches s and its neighbours
    cols = [list(c) for c in identity_matrix(n)]
    word = []
    while True:
        s = next((k for k in range(n) if not is_negative_root(cols[k])), None)
        if s is None:
            return tuple(word)
        word.append(d.vertices[s])
        old = cols[s]
        for j in range(n):
            if C[s][j] == -1:
                cols[j] = [a + b for a, b in zip(cols[j], old)]
        cols[s] = [-a for a in old]


@functools.lru_cache(maxsize=None)
def longest_element(d: DynkinDiagram) -> WeylElement:
    return element_from_word(d, longest_word(d))


def coxeter_element(d: DynkinDiagram, order: Sequence[int] | None = None) -> WeylElement:
    return element_from_word(d, order if order is not None else d.vertices)


def multiplicative_order(m: Matrix, bound: int | None = None) -> int | None:
    """Least k >= 1 with m^k = I, or None if it exceeds ``bound``."""
    one = identity_matrix(len(m))
    p, k = m, 1
    while p != one:
        if bound is not None and k >= bound:
            return None
        p = mat_mul(p, m)
        k += 1
    return k


@functools.lru_cache(maxsize=None)
def coxeter_number(d: DynkinDiagram) -> int:
    return multiplicative_order(coxeter_element(d).matrix)


# --------------------------------------------------------------------------
# Exponents and invariant degrees


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Division of integer polynomials (low-to-high coefficients) by a monic divisor."""
    num = list(num)
    dq = len(den) - 1
    if len(num) - 1 < dq:
        return [0], num
    q = [0] * (len(num) - dq)
    for k in range(len(num) - 1, dq - 1, -1):
        c = num[k]
        if c:
            q[k - dq] = c
            for t in range(dq + 1):
                num[k - dq + t] -= c * den[t]
    rem = num[:dq] or [0]
    while len(rem) > 1 and rem[-1] == 0:
        rem.pop()
    return q, rem


@functools.lru_cache(maxsize=None)
def cyclotomic(k: int) -> tuple[int, ...]:
    poly = [-1] + [0] * (k - 1) + [1]
    for d in range(1, k):
        if k % d == 0:
            poly, rem = _poly_divmod(poly, list(cyclotomic(d)))
            assert rem == [0]
    return tuple(poly)


class FactorisationError(ArithmeticError):
    pass


def exponents(d: DynkinDiagram) -> list[int]:
    """Exponents m_j, read off the cyclotomic factorisation of the Coxeter element's char poly."""
    h = coxeter_number(d)
    p = charpoly(coxeter_element(d).matrix)
    exps = []
    for k in sorted(k for k in range(1, h + 1) if h % k == 0):
        phi = list(cyclotomic(k))
        while len(p) >= len(phi):
            q, rem = _poly_divmod(p, phi)
            if rem != [0]:
                break
            p = q
            # primitive k-th roots e^{2 pi i j/k} = e^{2 pi i (j h/k)/h}
            exps.extend(j * (h // k) for j in range(1, k + 1) if math.gcd(j, k) == 1)
    if p != [1]:
        raise FactorisationError(f"char poly of a Coxeter element of {d.name} left cofactor {p}")
    return sorted(exps)


@functools.lru_cache(maxsize=None)
def _invariant_degrees(d: DynkinDiagram) -> tuple[int, ...]:
    degs = tuple(m + 1 for m in exponents(d))
    if sum(x - 1 for x in degs) != len(enumerate_positive_roots(d).positive_roots):
        raise FactorisationError(f"degrees {degs} of {d.name} do not sum to the number of positive roots")
    return degs


def invariant_degrees(d: DynkinDiagram) -> list[int]:
    return list(_invariant_degrees(d))


def delta_automorphism(d: DynkinDiagram) -> dict[int, int]:
    """Diagram automorphism induced by -w0: w0(alpha_i) = -alpha_{sigma(i)}."""
    w0 = longest_element(d)
    out = {}
    for k, label in enumerate(d.vertices):
        image = w0.apply(identity_matrix(d.rank)[k])
        j = next(t for t, c in enumerate(image) if c)
        assert image[j] == -1 and sum(image) == -1
        out[label] = d.vertices[j]
    return out
