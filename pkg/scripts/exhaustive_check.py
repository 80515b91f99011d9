#!/usr/bin/env python3
"""Compare the solver against both brute-force perimeter oracles, exhaustively.

With the x-path fixed to the identity (any instance relabels to this form),
every y-path permutation of each requested size is solved and checked against
the placement oracle and, optionally, the 0/1-extent oracle. Mismatches are
printed as JSON lines; the exit status is 1 if any were found.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
import time
from dataclasses import dataclass

from wmge.embedder import solve_min_perimeter
from wmge.oracle import min_perimeter_by_extents, min_perimeter_by_placement
from wmge.pathpair import PathPair


@dataclass
class Config:
    sizes: list[int]
    extents: bool = False


def run(cfg: Config) -> int:
    failures = 0
    for n in cfg.sizes:
        t0 = time.perf_counter()
        hist: dict[int, int] = {}
        for py in itertools.permutations(range(n)):
            p = PathPair(tuple(range(n)), py)
            solved = solve_min_perimeter(p).perimeter
            placed = min_perimeter_by_placement(p).optimum
            by_ext = min_perimeter_by_extents(p).optimum if cfg.extents else placed
            hist[solved] = hist.get(solved, 0) + 1
            if not solved == placed == by_ext:
                failures += 1
                print(json.dumps({"py": py, "solve": solved, "placement": placed,
                                  "extents": by_ext}))
        dt = time.perf_counter() - t0
        spread = ", ".join(f"{k}:{v}" for k, v in sorted(hist.items()))
        print(f"n={n}: {sum(hist.values())} instances in {dt:.1f}s, perimeters {{{spread}}}")
    print(f"mismatches: {failures}")
    return 1 if failures else 0


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("sizes", nargs="*", type=int, default=[4, 5, 6])
    ap.add_argument("--extents", action="store_true", help="also run the extent oracle")
    args = ap.parse_args(argv)
    return run(Config(args.sizes, args.extents))


if __name__ == "__main__":
    sys.exit(main())
