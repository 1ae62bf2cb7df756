"""Grow the homological kernel search length by length and log counts and timings."""

from __future__ import annotations

import argparse
import time

from e8strata.monodromy import build_config, kernel_search
from e8strata.root_systems import parse_diagram


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("diagram", nargs="?", default="E8")
    p.add_argument("--max-len", type=int, default=8)
    p.add_argument("--budget-seconds", type=float, default=300.0)
    args = p.parse_args()
    cfg = build_config(parse_diagram(args.diagram))
    for length in range(0, args.max_len + 1, 2):
        start = time.perf_counter()
        res = kernel_search(cfg, length, budget=args.budget_seconds)
        elapsed = time.perf_counter() - start
        print(f"len<={length:2d} found={len(res.words):4d} visited={res.elements_visited:7d} "
              f"complete={res.complete} {elapsed:7.2f}s")
        for w in res.words[:5]:
            print("   ", w)
        if not res.complete:
            break


if __name__ == "__main__":
    main()
