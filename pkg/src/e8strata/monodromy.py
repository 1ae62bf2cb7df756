"""Homology-level monodromy: symplectic transvections attached to an oriented tree.

Each vertex i stands for a curve class c_i; the pairing <c_i, c_j> is the edge
sign for adjacent i < j and 0 for non-adjacent vertices. The generator a_i acts
by the transvection x -> x + <x, c_i> c_i.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from typing import Mapping

from .artin_garside import ArtinWord, _positions, _tables, garside_element, normal_form
from .root_systems import DiagramError, DynkinDiagram, Matrix, determinant, identity_matrix, mat_mul, multiplicative_order

DEFAULT_SAFETY_BOUND = 14
DEFAULT_BUDGET_SECONDS = 300.0
DEFAULT_ORDER_BOUND = 10**4

Edge = tuple[int, int]


def budget_seconds() -> float:
    return float(os.environ.get("E8STRATA_BUDGET_SECONDS", DEFAULT_BUDGET_SECONDS))


@dataclass(frozen=True)
class SymplecticConfig:
    diagram: DynkinDiagram
    orientation: tuple[tuple[Edge, int], ...]
    gram: Matrix

    def __post_init__(self):
        n = self.diagram.rank
        g = self.gram
        for i in range(n):
            for j in range(n):
                if g[i][j] != -g[j][i] or g[i][j] not in (-1, 0, 1):
                    raise ValueError("gram must be skew with entries in {-1, 0, 1}")
                adjacent = self.diagram.adjacent(self.diagram.vertices[i], self.diagram.vertices[j])
                if bool(g[i][j]) != adjacent:
                    raise ValueError("gram support must equal the adjacency of the diagram")

    @property
    def rank(self) -> int:
        return self.diagram.rank

    @property
    def determinant(self) -> int:
        return determinant(self.gram)

    @property
    def unimodular(self) -> bool:
        return abs(self.determinant) == 1

    def sign(self, i: int, j: int) -> int:
        return dict(self.orientation)[(min(i, j), max(i, j))]

    def pairing(self, x, y) -> int:
        n = self.rank
        return sum(x[i] * self.gram[i][j] * y[j] for i in range(n) for j in range(n) if self.gram[i][j])


def build_config(d: DynkinDiagram, orientation: Mapping[Edge, int] | None = None) -> SymplecticConfig:
    """Gram matrix of an oriented diagram; ``None`` gives +1 on every edge i < j."""
    edges = d.sorted_edges()
    if orientation is None:
        signs = {e: 1 for e in edges}
    else:
        signs = {(min(a, b), max(a, b)): s for (a, b), s in orientation.items()}
        if set(signs) != set(edges):
            raise DiagramError(
                f"orientation keys {sorted(signs)} do not match the edges {edges} of {d.name}"
            )
        bad = [e for e, s in signs.items() if s not in (1, -1)]
        if bad:
            raise DiagramError(f"edge signs must be +1 or -1, got {[signs[e] for e in bad]}")
    n = d.rank
    gram = [[0] * n for _ in range(n)]
    for (a, b), s in signs.items():
        i, j = d.index(a), d.index(b)
        gram[i][j], gram[j][i] = s, -s
    return SymplecticConfig(d, tuple(sorted(signs.items())), tuple(tuple(r) for r in gram))


def flip_edge(cfg: SymplecticConfig, edge: Edge) -> SymplecticConfig:
    e = (min(edge), max(edge))
    signs = dict(cfg.orientation)
    if e not in signs:
        raise DiagramError(f"{edge} is not an edge of {cfg.diagram.name}")
    signs[e] = -signs[e]
    return build_config(cfg.diagram, signs)


def _transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def _preserves(m: Matrix, gram: Matrix) -> bool:
    return mat_mul(mat_mul(_transpose(m), gram), m) == tuple(tuple(r) for r in gram)


@dataclass(frozen=True)
class RepMatrix:
    matrix: Matrix
    gram: Matrix = field(repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "matrix", tuple(tuple(r) for r in self.matrix))
        if not _preserves(self.matrix, self.gram):
            raise ArithmeticError("matrix does not preserve the intersection form")

    def __mul__(self, other: RepMatrix) -> RepMatrix:
        return RepMatrix(mat_mul(self.matrix, other.matrix), self.gram)

    def is_identity(self) -> bool:
        return self.matrix == identity_matrix(len(self.matrix))

    @property
    def determinant(self) -> int:
        return determinant(self.matrix)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.matrix]


def _transvection_matrix(gram: Matrix, i: int, sign: int = 1) -> Matrix:
    # column j is e_j + sign * <e_j, c_i> e_i; the inverse is the same with sign -1
    n = len(gram)
    rows = [list(r) for r in identity_matrix(n)]
    for j in range(n):
        rows[i][j] += sign * gram[j][i]
    return tuple(tuple(r) for r in rows)


def transvection(cfg: SymplecticConfig, i: int) -> RepMatrix:
    """Image of the generator labelled ``i``."""
    return RepMatrix(_transvection_matrix(cfg.gram, cfg.diagram.index(i)), cfg.gram)


def _letter_matrices(cfg: SymplecticConfig) -> dict[int, Matrix]:
    """Signed 1-based vertex positions -> matrices of generators and inverses."""
    out = {}
    for k in range(cfg.rank):
        out[k + 1] = _transvection_matrix(cfg.gram, k)
        out[-(k + 1)] = _transvection_matrix(cfg.gram, k, -1)
    return out


def rep_word(cfg: SymplecticConfig, w: ArtinWord) -> RepMatrix:
    if w.diagram != cfg.diagram:
        raise DiagramError(f"word over {w.diagram.name} but configuration over {cfg.diagram.name}")
    mats = _letter_matrices(cfg)
    m = identity_matrix(cfg.rank)
    for p in _positions(w):
        m = mat_mul(m, mats[p])
    return RepMatrix(m, cfg.gram)


@dataclass(frozen=True)
class RelationCheck:
    pair: Edge
    kind: str  # "braid" or "commutation"
    holds: bool


@dataclass(frozen=True)
class RelationReport:
    relations: tuple[RelationCheck, ...]
    generators_preserve_form: bool
    generators_unimodular: bool
    gram_determinant: int

    @property
    def all_pass(self) -> bool:
        return all(r.holds for r in self.relations) and self.generators_preserve_form and self.generators_unimodular

    def count(self, kind: str) -> int:
        return sum(1 for r in self.relations if r.kind == kind)

    def to_json(self) -> dict:
        return {
            "relations": [{"pair": list(r.pair), "kind": r.kind, "holds": r.holds} for r in self.relations],
            "braid_relations": self.count("braid"),
            "commutation_relations": self.count("commutation"),
            "generators_preserve_form": self.generators_preserve_form,
            "generators_determinant_one": self.generators_unimodular,
            "gram_determinant": self.gram_determinant,
            "all_pass": self.all_pass,
        }


def check_geometric_relations(cfg: SymplecticConfig) -> RelationReport:
    d = cfg.diagram
    gens = {v: _transvection_matrix(cfg.gram, d.index(v)) for v in d.vertices}
    checks = []
    for a_pos, a in enumerate(d.vertices):
        for b in d.vertices[a_pos + 1:]:
            A, B = gens[a], gens[b]
            if d.adjacent(a, b):
                holds = mat_mul(mat_mul(A, B), A) == mat_mul(mat_mul(B, A), B)
                checks.append(RelationCheck((a, b), "braid", holds))
            else:
                checks.append(RelationCheck((a, b), "commutation", mat_mul(A, B) == mat_mul(B, A)))
    return RelationReport(
        tuple(checks),
        all(_preserves(m, cfg.gram) for m in gens.values()),
        all(determinant(m) == 1 for m in gens.values()),
        cfg.determinant,
    )


@dataclass(frozen=True)
class DeltaImage:
    matrix: RepMatrix
    # None means the order exceeds the bound
    order: int | None
    bound: int


def delta_image(cfg: SymplecticConfig, bound: int = DEFAULT_ORDER_BOUND) -> DeltaImage:
    m = rep_word(cfg, garside_element(cfg.diagram))
    return DeltaImage(m, multiplicative_order(m.matrix, bound), bound)


@dataclass(frozen=True)
class KernelSearchResult:
    words: tuple[ArtinWord, ...]
    max_length: int
    # every word of length <= explored_length has been accounted for
    explored_length: int
    complete: bool
    elements_visited: int


def _times_letter(m: list[list[int]], gram: Matrix, p: int) -> tuple[tuple[int, ...], ...]:
    # m * T^{+-1}: only row i of T differs from the identity, so column j gains s*gram[j][i]*col_i
    i = abs(p) - 1
    s = 1 if p > 0 else -1
    n = len(gram)
    coeffs = [(j, s * gram[j][i]) for j in range(n) if gram[j][i]]
    out = []
    for row in m:
        r = list(row)
        for j, c in coeffs:
            r[j] += c * row[i]
        out.append(tuple(r))
    return tuple(out)


def kernel_search(
    cfg: SymplecticConfig,
    max_length: int,
    budget: float | None = None,
    safety_bound: int = DEFAULT_SAFETY_BOUND,
) -> KernelSearchResult:
    """Group elements of word length <= max_length acting trivially on homology.

    Meet in the middle: grow balls of group elements (keyed by Garside normal
    form) and look for two distinct elements u, v with equal matrices; then
    u v^-1 is a nontrivial kernel element. Any kernel element of length L splits
    into halves of lengths ceil(L/2) and floor(L/2), so balls of radius
    ceil(max_length/2) find all of them. Results are deduplicated by normal form
    and each is reported by its shortest word (ties broken lexicographically).
    """
    if max_length < 0:
        raise ValueError("max_length must be nonnegative")
    if max_length > safety_bound:
        raise ValueError(f"max_length {max_length} exceeds the safety bound {safety_bound}")
    budget = budget_seconds() if budget is None else budget
    deadline = time.monotonic() + budget
    d = cfg.diagram
    t = _tables(d)
    n = d.rank
    letters = [p for k in range(1, n + 1) for p in (k, -k)]
    one = identity_matrix(n)

    # ball element: normal-form key -> (word as positions, nf, matrix)
    seen: dict = {t.key(0, []): ((), (0, []), one)}
    by_matrix: dict[Matrix, list] = {one: [()]}
    frontier = [t.key(0, [])]
    found: dict = {}
    radius_needed = (max_length + 1) // 2
    explored = 0
    complete = True

    def record(u: tuple, v: tuple) -> None:
        # u v^-1 with |u| + |v| <= max_length
        if len(u) + len(v) > max_length:
            return
        word = u + tuple(-a for a in reversed(v))
        p, factors = t.word_normal_form(list(word))
        key = t.key(p, factors)
        if key == (0, ()):
            return
        best = found.get(key)
        cand = (len(word), word)
        if best is None or cand < best:
            found[key] = cand

    for radius in range(1, radius_needed + 1):
        nxt = []
        for key in frontier:
            word, (p, factors), m = seen[key]
            for a in letters:
                if word and a == -word[-1]:
                    continue
                p2, f2 = t.mul_letter(p, factors, a)
                k2 = t.key(p2, f2)
                if k2 in seen:
                    continue
                m2 = _times_letter(m, cfg.gram, a)
                w2 = word + (a,)
                seen[k2] = (w2, (p2, f2), m2)
                nxt.append(k2)
                partners = by_matrix.setdefault(m2, [])
                for other in partners:
                    record(w2, other)
                    record(other, w2)
                partners.append(w2)
            if time.monotonic() > deadline:
                complete = False
                break
        if not complete:
            break
        frontier = nxt
        # all kernel elements of length <= 2 * radius - 1 are now found; 2 * radius once
        # pairs across the full radius are in (they are, since records happen on insert)
        explored = min(max_length, 2 * radius)
    if max_length == 0:
        explored = 0
    words = tuple(
        ArtinWord(tuple(d.vertices[abs(a) - 1] * (1 if a > 0 else -1) for a in w), d)
        for _, w in sorted(found.values())
    )
    return KernelSearchResult(words, max_length, explored, complete, len(seen))


@dataclass(frozen=True)
class KernelCertificate:
    group_trivial: bool
    homology_trivial: bool

    @property
    def valid(self) -> bool:
        return not self.group_trivial and self.homology_trivial


def verify_kernel_certificate(cfg: SymplecticConfig, w: ArtinWord) -> KernelCertificate:
    nf = normal_form(w)
    return KernelCertificate(nf.delta_power == 0 and not nf.simples, rep_word(cfg, w).is_identity())
