#!/usr/bin/env python3
"""Wall-clock scaling of the minimum-perimeter solver on random instances.

Prints one row per size with the best-of-k solve time and the local growth
exponent log(t2/t1)/log(n2/n1) against the previous row. Matching dominates
asymptotically, so exponents should sit at or below 1.5.
"""

from __future__ import annotations

import argparse
import gc
import math
import random
import time
from dataclasses import dataclass

from wmge.embedder import solve_min_perimeter
from wmge.pathpair import PathPair


@dataclass
class Config:
    sizes: list[int]
    repeats: int = 3
    seed: int = 0


def random_instance(rng: random.Random, n: int) -> PathPair:
    px, py = list(range(n)), list(range(n))
    rng.shuffle(px)
    rng.shuffle(py)
    return PathPair(tuple(px), tuple(py))


def best_time(p: PathPair, repeats: int) -> tuple[float, int]:
    best, perim = math.inf, 0
    for _ in range(repeats):
        gc.collect()
        t0 = time.perf_counter()
        res = solve_min_perimeter(p, validate=False)
        best = min(best, time.perf_counter() - t0)
        perim = res.perimeter
    return best, perim


def main(argv: list[str] | None = None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("sizes", nargs="*", type=int,
                    default=[1_000, 3_000, 10_000, 30_000, 100_000, 300_000])
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    cfg = Config(**vars(ap.parse_args(argv)))

    rng = random.Random(cfg.seed)
    prev = None
    print(f"{'n':>9} {'seconds':>9} {'perim/n':>8} {'exponent':>8}")
    for n in cfg.sizes:
        t, perim = best_time(random_instance(rng, n), cfg.repeats)
        exp = "" if prev is None else f"{math.log(t / prev[1]) / math.log(n / prev[0]):8.2f}"
        print(f"{n:>9} {t:9.3f} {perim / n:8.3f} {exp:>8}")
        prev = (n, t)


if __name__ == "__main__":
    main()
