"""Plane curve germs: Milnor algebras, versal deformations and smoothness of fibres."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .groebner import contains_one
from .polynomials import BivariatePoly, Monomial, graded_lex_key, monomial_str, parse_poly
from .root_systems import DynkinDiagram

DEFAULT_MAX_TRUNCATION = 64


class NonIsolatedSingularityError(ValueError):
    """The local algebra keeps growing: the critical point at the origin is not isolated."""


def max_truncation() -> int:
    return int(os.environ.get("E8STRATA_MAX_TRUNCATION", DEFAULT_MAX_TRUNCATION))


@dataclass(frozen=True)
class MilnorData:
    milnor_number: int
    basis: tuple[Monomial, ...]
    # truncation degree at which the dimension stabilised
    truncation: int


def _local_key(m: Monomial) -> tuple[int, int]:
    # smaller key = leading: lowest degree first, then the larger power of x
    return m[0] + m[1], -m[0]


def _truncated_quotient(fx: BivariatePoly, fy: BivariatePoly, N: int) -> list[Monomial]:
    """Standard monomials of C[x,y] / ((f_x, f_y) + m^N) for the local degree order."""
    pivots: dict[Monomial, dict[Monomial, Fraction]] = {}
    for g in (fx, fy):
        if not g:
            continue
        low = g.order()
        for d in range(N - low):
            for a in range(d + 1):
                row = {m: c for m, c in g.shift(a, d - a).terms.items() if m[0] + m[1] < N}
                while row:
                    lead = min(row, key=_local_key)
                    piv = pivots.get(lead)
                    if piv is None:
                        c = row[lead]
                        pivots[lead] = {m: v / c for m, v in row.items()}
                        break
                    c = row[lead]
                    for m, v in piv.items():
                        nv = row.get(m, 0) - c * v
                        if nv:
                            row[m] = nv
                        else:
                            row.pop(m, None)
    return [(a, d - a) for d in range(N) for a in range(d + 1) if (a, d - a) not in pivots]


def milnor(f: BivariatePoly, bound: int | None = None) -> MilnorData:
    """Milnor number and monomial basis of the local algebra at the origin.

    Computes dim C[x,y]/((f_x, f_y) + m^N) for N = 1, 2, ...; by Nakayama the first
    repeat is the final value.
    """
    if f.coefficient(0, 0) != 0:
        raise ValueError(f"{f} does not vanish at the origin")
    bound = bound or max_truncation()
    fx, fy = f.diff("x"), f.diff("y")
    prev = None
    for N in range(1, bound + 1):
        basis = _truncated_quotient(fx, fy, N)
        if prev is not None and len(basis) == len(prev):
            ordered = tuple(sorted(basis, key=graded_lex_key))
            return MilnorData(len(basis), ordered, N)
        prev = basis
    raise NonIsolatedSingularityError(
        f"local algebra of {f} still growing at truncation degree {bound}; the singularity is not isolated"
    )


def germ_for_diagram(d: DynkinDiagram, convention: str = "shifted") -> BivariatePoly:
    """Germ attached to a root system.

    ``convention="shifted"`` gives x^2 + y^(n+2) for A_n; ``"classical"`` gives
    x^2 + y^(n+1), whose Milnor number is n. D and E germs agree in both.
    """
    n = d.rank
    if d.family == "A":
        if convention == "shifted":
            return parse_poly(f"x^2+y^{n + 2}")
        if convention == "classical":
            return parse_poly(f"x^2+y^{n + 1}")
        raise ValueError(f"unknown convention {convention!r}")
    if d.family == "D":
        return parse_poly(f"y*(x^2+y^{n - 2})")
    return {6: parse_poly("x^3+y^4"), 7: parse_poly("x*(x^2+y^3)"), 8: parse_poly("x^3+y^5")}[n]


def monomial_curve(a: int, b: int) -> BivariatePoly:
    """x^b - y^a, the image of t -> (t^a, t^b).

    For (3, 5) this is x^5 - y^3, which is x^3 + y^5 after swapping and rescaling
    the coordinates; versal deformation spaces are unchanged by such a change.
    """
    if not (0 < a < b):
        raise ValueError("need 0 < a < b")
    if math.gcd(a, b) != 1:
        raise ValueError(f"generators {a}, {b} are not coprime")
    return BivariatePoly({(b, 0): 1, (0, a): -1})


@dataclass(frozen=True)
class VersalFamily:
    base_germ: BivariatePoly
    parameters: tuple[tuple[str, Monomial], ...]

    @property
    def dimension(self) -> int:
        return len(self.parameters)

    def specialize(self, s: Sequence) -> BivariatePoly:
        if len(s) != len(self.parameters):
            raise ValueError(f"expected {len(self.parameters)} parameters, got {len(s)}")
        F = self.base_germ
        for (_, m), c in zip(self.parameters, s):
            F = F + BivariatePoly.monomial(m[0], m[1], Fraction(c))
        return F

    def to_json(self) -> dict:
        return {
            "base": str(self.base_germ),
            "parameters": [{"name": name, "monomial": monomial_str(m)} for name, m in self.parameters],
        }


def build_versal(f: BivariatePoly) -> VersalFamily:
    data = milnor(f)
    return VersalFamily(f, tuple((f"s{k + 1}", m) for k, m in enumerate(data.basis)))


def fiber_is_smooth(fam: VersalFamily, s: Sequence) -> bool:
    """Whether the affine curve F(x, y, s) = 0 is smooth, i.e. 1 is in (F, F_x, F_y)."""
    F = fam.specialize(s)
    return contains_one([F, F.diff("x"), F.diff("y")])


def parse_rational_vector(line: str) -> list[Fraction]:
    try:
        return [Fraction(tok.strip()) for tok in line.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse rational vector {line!r}") from None


@dataclass(frozen=True)
class OrbitDescriptor:
    closes: bool
    quotient_order: int


def orbit_descriptor(degrees: Sequence[int]) -> OrbitDescriptor:
    """Half-turn path in a weighted C*-orbit.

    Following lambda = h(t) then i*h(t), with h(t) = (1-t) + it, multiplies the d-th
    coordinate by i^(2d) = (-1)^d, so the path closes exactly when every weight is
    even. The orbit is C* modulo the gcd-th roots of unity.
    """
    if not degrees:
        raise ValueError("need at least one degree")
    if any(d <= 0 for d in degrees):
        raise ValueError("degrees must be positive")
    return OrbitDescriptor(all(d % 2 == 0 for d in degrees), math.gcd(*degrees))
