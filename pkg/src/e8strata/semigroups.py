"""Numerical semigroups, Weierstrass gap sequences and spin parity in genus 4."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator


class SemigroupError(ValueError):
    pass


@dataclass(frozen=True)
class NumericalSemigroup:
    generators: tuple[int, ...]
    gaps: tuple[int, ...]

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def frobenius(self) -> int | None:
        return self.gaps[-1] if self.gaps else None

    def __contains__(self, n: int) -> bool:
        return n >= 0 and n not in self.gaps


@dataclass(frozen=True)
class GapSequence:
    gaps: tuple[int, ...]

    def __post_init__(self):
        gaps = tuple(sorted(set(self.gaps)))
        if len(gaps) != len(self.gaps):
            raise SemigroupError("gap numbers must be distinct")
        object.__setattr__(self, "gaps", gaps)
        g = len(gaps)
        if g and gaps[0] != 1:
            raise SemigroupError("1 is a gap in every positive genus")
        if any(x <= 0 for x in gaps):
            raise SemigroupError("gap numbers are positive")
        if g and gaps[-1] > 2 * g - 1:
            raise SemigroupError(f"gap {gaps[-1]} exceeds 2g - 1 = {2 * g - 1}")
        bad = _closure_violation(gaps)
        if bad is not None:
            a, b = bad
            raise SemigroupError(f"complement is not a semigroup: {a} + {b} = {a + b} is a gap")

    @property
    def genus(self) -> int:
        return len(self.gaps)


def _closure_violation(gaps: tuple[int, ...]) -> tuple[int, int] | None:
    gapset = set(gaps)
    top = max(gaps, default=0)
    nongaps = [n for n in range(1, top + 1) if n not in gapset]
    for i, a in enumerate(nongaps):
        for b in nongaps[i:]:
            if a + b in gapset:
                return a, b
    return None


def _sieve(gens: Iterable[int], bound: int) -> list[bool]:
    reach = [False] * (bound + 1)
    reach[0] = True
    gens = sorted(set(gens))
    for n in range(1, bound + 1):
        reach[n] = any(g <= n and reach[n - g] for g in gens)
    return reach


def frobenius_bound(gens: list[int]) -> int:
    """An integer above every gap: ab - a - b + 1 for two generators, else Schur's a_min * a_max."""
    if len(gens) == 1:
        return 1
    if len(gens) == 2:
        a, b = gens
        return a * b - a - b + 1
    return gens[0] * gens[-1]


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    gens = sorted(set(int(g) for g in gens))
    if not gens or gens[0] <= 0:
        raise SemigroupError("generators must be positive and nonempty")
    if reduce(math.gcd, gens) != 1:
        raise SemigroupError(f"gcd of {gens} is not 1, so there are infinitely many gaps")
    bound = frobenius_bound(gens)
    reach = _sieve(gens, bound)
    gaps = tuple(n for n in range(1, bound + 1) if not reach[n])
    return NumericalSemigroup(minimal_generators(gaps), gaps)


def minimal_generators(gaps: Iterable[int]) -> tuple[int, ...]:
    """Positive nongaps that are not a sum of two positive nongaps."""
    gapset = set(gaps)
    top = max(gapset, default=0)

    def nongap(n: int) -> bool:
        return n > 0 and n not in gapset

    m = next(n for n in range(1, top + 2) if nongap(n))
    # the Apery set of m lies below top + m
    return tuple(
        n for n in range(m, top + m + 1)
        if nongap(n) and not any(nongap(a) and nongap(n - a) for a in range(1, n // 2 + 1))
    )


def gaps_to_semigroup(gs: GapSequence) -> NumericalSemigroup:
    return NumericalSemigroup(minimal_generators(gs.gaps), gs.gaps)


@dataclass(frozen=True)
class SpinParity:
    h0: int
    parity: str


def spin_parity(gs: GapSequence) -> SpinParity:
    """h0 of the theta characteristic (g-1)p: the number of gaps that are at least g."""
    g = gs.genus
    h0 = sum(1 for x in gs.gaps if x >= g)
    return SpinParity(h0, "even" if h0 % 2 == 0 else "odd")


HYPERELLIPTIC = "hyperelliptic"
EVEN = "even_component"
ODD = "odd_component"
NOT_MINIMAL = "not_minimal"


def classify_genus4(gs: GapSequence) -> str:
    """Which component of the minimal stratum in genus 4 a Weierstrass point lands in.

    A differential vanishing to order 6 at p exists iff 7 is a gap; among those,
    {1,3,5,7} is the hyperelliptic sequence and the others split by spin parity.
    """
    if gs.genus != 4:
        raise SemigroupError(f"classification is for genus 4, got genus {gs.genus}")
    if 7 not in gs.gaps:
        return NOT_MINIMAL
    if gs.gaps == (1, 3, 5, 7):
        return HYPERELLIPTIC
    return EVEN if spin_parity(gs).parity == "even" else ODD


def hyperelliptic_gaps(g: int) -> GapSequence:
    return GapSequence(tuple(range(1, 2 * g, 2)))


def all_gap_sequences(genus: int) -> Iterator[GapSequence]:
    """Every gap sequence of the given genus, by brute force over subsets of 1..2g-1."""
    from itertools import combinations

    if genus == 0:
        yield GapSequence(())
        return
    for rest in combinations(range(2, 2 * genus), genus - 1):
        gaps = (1,) + rest
        if _closure_violation(gaps) is None:
            yield GapSequence(gaps)
