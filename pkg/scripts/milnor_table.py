"""Milnor numbers of the germs attached to each diagram, in both A_n conventions."""

from __future__ import annotations

from e8strata.polynomials import monomial_str
from e8strata.root_systems import parse_diagram
from e8strata.singularities import germ_for_diagram, milnor

NAMES = ["A1", "A2", "A3", "A4", "D4", "D5", "D6", "E6", "E7", "E8"]


def main() -> None:
    for name in NAMES:
        d = parse_diagram(name)
        for convention in ("classical", "shifted") if d.family == "A" else ("classical",):
            f = germ_for_diagram(d, convention)
            data = milnor(f)
            basis = ", ".join(monomial_str(m) for m in data.basis)
            print(f"{name:3} {convention:9} {str(f):16} mu={data.milnor_number:2d}  [{basis}]")


if __name__ == "__main__":
    main()
