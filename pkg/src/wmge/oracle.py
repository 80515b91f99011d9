"""Brute-force ground truth at desk scale.

Nothing here touches the constraint graph or the matching code: perimeter is
searched over raw monotone placements or raw 0/1 extent vectors, covers over
vertex subsets, and every candidate drawing is judged by the geometry checker.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Iterator

from .geometry import GridEmbedding, Point, check_unit_length, check_wmge, metrics
from .matching import BipartiteGraph, VertexCover
from .pathpair import PathPair

DEFAULT_CEILING = 10_000_000
TOTAL_LENGTH_TOL = 1e-9


class SearchSpaceExceeded(RuntimeError):
    """Enumeration would examine more candidates than the configured ceiling."""


class Objective(str, Enum):
    PERIMETER = "PERIMETER"
    MAX_EDGE = "MAX_EDGE"
    TOTAL_LENGTH = "TOTAL_LENGTH"
    UNIT_FEASIBLE = "UNIT_FEASIBLE"
    MIN_COVER = "MIN_COVER"


@dataclass(frozen=True)
class OracleResult:
    objective: Objective
    optimum: int | float | bool | None
    witness: GridEmbedding | VertexCover | None
    search_space: int
    ties: int = 1

    def to_json(self) -> dict:
        doc: dict = {
            "objective": self.objective.value,
            "optimum": self.optimum,
            "search_space": self.search_space,
            "ties": self.ties,
        }
        if isinstance(self.witness, GridEmbedding):
            doc["witness"] = {"points": [list(pt) for pt in self.witness.points]}
        elif isinstance(self.witness, VertexCover):
            doc["witness"] = {"a": self.witness.a_members, "b": self.witness.b_members}
        else:
            doc["witness"] = None
        return doc


class _Budget:
    def __init__(self, ceiling: int):
        self.ceiling = ceiling
        self.used = 0

    def spend(self, k: int = 1) -> None:
        self.used += k
        if self.used > self.ceiling:
            raise SearchSpaceExceeded(f"more than {self.ceiling} candidates")


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of ``parts`` nonnegative ints summing to ``total``, lexicographic."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def _prefix_place(order: tuple[int, ...], steps: tuple[int, ...]) -> list[int]:
    coord = [0] * len(order)
    acc = 0
    coord[order[0]] = 0
    for v, s in zip(order[1:], steps):
        acc += s
        coord[v] = acc
    return coord


# --- perimeter -----------------------------------------------------------------


def min_perimeter_by_placement(
    p: PathPair, max_side: int | None = None, ceiling: int = DEFAULT_CEILING
) -> OracleResult:
    """Smallest perimeter over all monotone integer placements within the grid bound.

    Translating so both paths start at coordinate 0 loses nothing, after which a
    placement is exactly a pair of nonnegative step vectors along the two paths.
    Candidates are visited by increasing width + height, so the first valid
    semiperimeter level is optimal.
    """
    n = p.n
    if max_side is None:
        max_side = n - 1
    budget = _Budget(ceiling)
    if n == 1:
        return OracleResult(Objective.PERIMETER, 0, GridEmbedding(((0, 0),)), 1)
    for semi in range(2 * max_side + 1):
        for w in range(max(0, semi - max_side), min(semi, max_side) + 1):
            xs_all = [_prefix_place(p.pi_x, st) for st in compositions(w, n - 1)]
            for ysteps in compositions(semi - w, n - 1):
                ys = _prefix_place(p.pi_y, ysteps)
                for xs in xs_all:
                    budget.spend()
                    pts = tuple(zip(xs, ys))
                    if len(set(pts)) < n:
                        continue
                    emb = GridEmbedding(pts, provenance="oracle-placement")
                    if check_wmge(p, emb).valid:
                        return OracleResult(Objective.PERIMETER, 2 * semi, emb, budget.used)
    return OracleResult(Objective.PERIMETER, None, None, budget.used)


def extent_constraints_hold(p: PathPair, dx, dy) -> bool:
    """The three extent-constraint families, straight from their definitions."""
    n = p.n
    for i in range(1, n - 1):
        a, v, b = p.pi_x[i - 1], p.pi_x[i], p.pi_x[i + 1]
        before = p.pos_y[a] < p.pos_y[v], p.pos_y[b] < p.pos_y[v]
        if before[0] == before[1] and dx[i - 1] + dx[i] < 1:
            return False
    for i in range(1, n - 1):
        a, v, b = p.pi_y[i - 1], p.pi_y[i], p.pi_y[i + 1]
        before = p.pos_x[a] < p.pos_x[v], p.pos_x[b] < p.pos_x[v]
        if before[0] == before[1] and dy[i - 1] + dy[i] < 1:
            return False
    for i in range(n - 1):
        for j in range(n - 1):
            if {p.pi_x[i], p.pi_x[i + 1]} == {p.pi_y[j], p.pi_y[j + 1]}:
                if dx[i] + dy[j] < 1:
                    return False
    return True


def min_perimeter_by_extents(p: PathPair, ceiling: int = DEFAULT_CEILING) -> OracleResult:
    """Smallest 2 * (sum of 0/1 extents) whose reconstruction passes the checker."""
    m = p.n - 1
    budget = _Budget(ceiling)
    if m == 0:
        return OracleResult(Objective.PERIMETER, 0, GridEmbedding(((0, 0),)), 1)
    slots = 2 * m
    for k in range(slots + 1):
        for ones in combinations(range(slots), k):
            budget.spend()
            bits = [0] * slots
            for s in ones:
                bits[s] = 1
            dx, dy = bits[:m], bits[m:]
            if not extent_constraints_hold(p, dx, dy):
                continue
            xs = _prefix_place(p.pi_x, tuple(dx))
            ys = _prefix_place(p.pi_y, tuple(dy))
            emb = GridEmbedding(tuple(zip(xs, ys)), provenance="oracle-extents")
            if check_wmge(p, emb).valid:
                return OracleResult(Objective.PERIMETER, 2 * k, emb, budget.used)
    return OracleResult(Objective.PERIMETER, None, None, budget.used)


# --- vertex cover ----------------------------------------------------------------


def min_cover_bruteforce(
    g: BipartiteGraph, max_vertices: int = 24, ceiling: int = DEFAULT_CEILING
) -> OracleResult:
    """Minimum vertex cover by increasing cover size.

    For each size k, a bounded search tree decides whether k vertices suffice:
    pick the first uncovered edge and branch on which endpoint joins. Uses no
    matching theory, so it stays independent of the Konig route.
    """
    total = g.a_count + g.b_count
    if total > max_vertices:
        raise SearchSpaceExceeded(f"{total} vertices exceeds the limit of {max_vertices}")
    edges = [(a, g.a_count + b) for a, b in g.edges()]
    budget = _Budget(ceiling)
    chosen = [False] * total

    def search(k: int) -> bool:
        budget.spend()
        for u, w in edges:
            if not chosen[u] and not chosen[w]:
                break
        else:
            return True
        if k == 0:
            return False
        for z in (u, w):
            chosen[z] = True
            if search(k - 1):
                return True
            chosen[z] = False
        return False

    for k in range(total + 1):
        if search(k):
            cover = VertexCover(tuple(chosen[: g.a_count]), tuple(chosen[g.a_count :]))
            return OracleResult(Objective.MIN_COVER, k, cover, budget.used)
    raise AssertionError("the full vertex set is always a cover")


# --- general objectives (no monotonicity) ------------------------------------------


def _grid(max_side: int) -> list[Point]:
    return [(x, y) for x in range(max_side + 1) for y in range(max_side + 1)]


def _adjacency_by_rank(p: PathPair) -> list[list[int]]:
    # for the i-th vertex of the x-path: earlier x-path vertices it shares an edge with
    rank = p.pos_x
    back: list[list[int]] = [[] for _ in range(p.n)]
    for order in (p.pi_x, p.pi_y):
        for a, b in zip(order, order[1:]):
            u, v = (a, b) if rank[a] < rank[b] else (b, a)
            if u not in back[v]:
                back[v].append(u)
    return back


def min_objective_bruteforce(
    p: PathPair,
    objective: Objective,
    max_side: int = 3,
    ceiling: int = DEFAULT_CEILING,
) -> OracleResult:
    """Minimize the longest edge (exact squared) or the total length over all
    injective placements in a (max_side+1)^2 grid whose drawing passes the
    strict-planarity check. Branch-and-bound prunes partial placements that
    already exceed the incumbent.
    """
    if objective not in (Objective.MAX_EDGE, Objective.TOTAL_LENGTH):
        raise ValueError(f"unsupported objective {objective}")
    grid = _grid(max_side)
    back = _adjacency_by_rank(p)
    budget = _Budget(ceiling)
    pos: dict[int, Point] = {}
    used: set[Point] = set()
    best: list = [math.inf, None, 0]  # value, witness, ties
    is_max = objective is Objective.MAX_EDGE

    def visit(i: int, partial: float) -> None:
        budget.spend()
        if i == p.n:
            emb = GridEmbedding(tuple(pos[v] for v in range(p.n)), provenance="oracle-objective")
            if not check_wmge(p, emb, strict_planarity=True).valid:
                return
            if is_max:
                if partial < best[0]:
                    best[:] = [partial, emb, 1]
                elif partial == best[0]:
                    best[2] += 1
            else:
                total = metrics(p, emb).total_length
                if total < best[0] - TOTAL_LENGTH_TOL:
                    best[:] = [total, emb, 1]
                elif total <= best[0] + TOTAL_LENGTH_TOL:
                    best[2] += 1
            return
        v = p.pi_x[i]
        for pt in grid:
            if pt in used:
                continue
            cost = partial
            for u in back[v]:
                q = pos[u]
                sq = (q[0] - pt[0]) ** 2 + (q[1] - pt[1]) ** 2
                cost = max(cost, sq) if is_max else cost + math.sqrt(sq)
            if cost > best[0] + (0 if is_max else TOTAL_LENGTH_TOL):
                continue
            pos[v] = pt
            used.add(pt)
            visit(i + 1, cost)
            used.discard(pt)
            del pos[v]

    visit(0, 0)
    value, witness, ties = best
    if witness is None:
        return OracleResult(objective, None, None, budget.used, 0)
    if is_max:
        value = int(value)
    return OracleResult(objective, value, witness, budget.used, ties)


def unit_length_feasible(
    p: PathPair, max_side: int = 3, ceiling: int = DEFAULT_CEILING
) -> OracleResult:
    """Is there a strict-planar drawing in the grid with every edge of length 1?"""
    grid = _grid(max_side)
    back = _adjacency_by_rank(p)
    budget = _Budget(ceiling)
    pos: dict[int, Point] = {}
    used: set[Point] = set()

    def visit(i: int) -> GridEmbedding | None:
        budget.spend()
        if i == p.n:
            emb = GridEmbedding(tuple(pos[v] for v in range(p.n)), provenance="oracle-unit")
            ok = check_unit_length(p, emb) and check_wmge(p, emb, strict_planarity=True).valid
            return emb if ok else None
        v = p.pi_x[i]
        for pt in grid:
            if pt in used:
                continue
            if any(abs(pos[u][0] - pt[0]) + abs(pos[u][1] - pt[1]) != 1 for u in back[v]):
                continue
            pos[v] = pt
            used.add(pt)
            found = visit(i + 1)
            used.discard(pt)
            del pos[v]
            if found is not None:
                return found
        return None

    witness = visit(0)
    return OracleResult(Objective.UNIT_FEASIBLE, witness is not None, witness, budget.used)


# --- rational segment intersection ---------------------------------------------------


def segment_intersection_rational(a: Point, b: Point, c: Point, d: Point):
    """Common points of closed segments ab and cd by solving the parametric system
    a + t(b-a) = c + s(d-c) over the rationals.

    Returns 0, 1 or ``math.inf`` points, and the point itself when unique.
    """
    if a == b and c == d:
        return (1, (Fraction(a[0]), Fraction(a[1]))) if a == c else (0, None)
    if a == b:
        a, b, c, d = c, d, a, b
    rx, ry = Fraction(b[0] - a[0]), Fraction(b[1] - a[1])
    sx, sy = Fraction(d[0] - c[0]), Fraction(d[1] - c[1])
    qx, qy = Fraction(c[0] - a[0]), Fraction(c[1] - a[1])
    denom = rx * sy - ry * sx
    if denom != 0:
        t = (qx * sy - qy * sx) / denom
        s = (qx * ry - qy * rx) / denom
        if 0 <= t <= 1 and 0 <= s <= 1:
            return 1, (a[0] + t * rx, a[1] + t * ry)
        return 0, None
    if qx * ry - qy * rx != 0:
        return 0, None  # parallel, distinct lines
    # collinear (or cd a single point on line ab): project onto ab's parameter
    rr = rx * rx + ry * ry
    t0 = (qx * rx + qy * ry) / rr
    t1 = t0 + (sx * rx + sy * ry) / rr
    lo, hi = max(min(t0, t1), Fraction(0)), min(max(t0, t1), Fraction(1))
    if lo > hi:
        return 0, None
    if lo == hi:
        return 1, (a[0] + lo * rx, a[1] + lo * ry)
    return math.inf, None
