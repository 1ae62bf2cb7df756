"""Order of the homological image of Delta and of the Coxeter word, per diagram."""

from __future__ import annotations

import argparse

from e8strata.artin_garside import ArtinWord
from e8strata.monodromy import build_config, delta_image, rep_word
from e8strata.root_systems import coxeter_number, multiplicative_order, parse_diagram


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("diagrams", nargs="*", default=["A1", "A2", "A3", "A4", "D4", "D5", "D6", "E6", "E7", "E8"])
    args = p.parse_args()
    print(f"{'diagram':8} {'h':>3} {'det':>4} {'ord(c)':>7} {'ord(Delta)':>10}")
    for name in args.diagrams:
        d = parse_diagram(name)
        cfg = build_config(d)
        c = rep_word(cfg, ArtinWord(tuple(d.vertices), d))
        order = delta_image(cfg).order
        print(f"{name:8} {coxeter_number(d):>3} {cfg.determinant:>4} {multiplicative_order(c.matrix, 10**4) or 'inf':>7} {order or 'inf':>10}")


if __name__ == "__main__":
    main()
