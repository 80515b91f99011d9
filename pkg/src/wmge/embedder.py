"""Minimum-perimeter weakly monotone grid embedding, and the rank-placement baseline.

Pipeline: path pair -> constraint graph -> maximum matching -> Konig cover ->
0/1 extents -> prefix-sum coordinates. A covered constraint-graph vertex means
its path edge gets extent 1 along that path's axis.
"""

from __future__ import annotations

import gc
from contextlib import contextmanager
from dataclasses import dataclass
from itertools import accumulate

from .constraint_graph import ConstraintGraph, build_constraint_graph
from .geometry import GridEmbedding, Metrics, ValidationReport, check_wmge, metrics
from .matching import VertexCover, hopcroft_karp, konig_cover
from .pathpair import DerivedStructure, PathPair, Side, derive

# the pairwise checker is quadratic in the worst case; skip it by default above this
AUTO_VALIDATE_MAX_N = 2000


class ExtentError(ValueError):
    """Extent assignment or cover that violates the extent constraints."""


@dataclass(frozen=True)
class ExtentAssignment:
    d_x: tuple[int, ...]
    d_y: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.d_x) + sum(self.d_y)

    def clamped(self) -> ExtentAssignment:
        return ExtentAssignment(
            tuple(min(d, 1) for d in self.d_x), tuple(min(d, 1) for d in self.d_y)
        )


def extent_violations(
    p: PathPair, e: ExtentAssignment, d: DerivedStructure | None = None
) -> list[tuple[str, int]]:
    """Violated extent constraints as (family, vertex or x-edge index) pairs."""
    if len(e.d_x) != p.n - 1 or len(e.d_y) != p.n - 1:
        raise ExtentError(f"need {p.n - 1} extents per path")
    if any(v < 0 for v in e.d_x) or any(v < 0 for v in e.d_y):
        raise ExtentError("extents must be nonnegative")
    d = d or derive(p)
    bad = []
    for v in d.switch_x:
        i = p.pos_x[v]
        if e.d_x[i - 1] + e.d_x[i] < 1:
            bad.append(("switch_x", v))
    for v in d.switch_y:
        i = p.pos_y[v]
        if e.d_y[i - 1] + e.d_y[i] < 1:
            bad.append(("switch_y", v))
    for s in d.shared_edges:
        if e.d_x[s.x_index] + e.d_y[s.y_index] < 1:
            bad.append(("shared", s.x_index))
    return bad


def extents_from_cover(g: ConstraintGraph, c: VertexCover) -> ExtentAssignment:
    """0/1 extents from a cover of ``g.to_bipartite()``'s color classes."""
    a_ids, b_ids = g.color_classes
    if len(c.in_cover_a) != len(a_ids) or len(c.in_cover_b) != len(b_ids):
        raise ExtentError("cover does not match the constraint graph's color classes")
    covered = [False] * len(g.vertices)
    for k, flag in zip(a_ids, c.in_cover_a):
        covered[k] = flag
    for k, flag in zip(b_ids, c.in_cover_b):
        covered[k] = flag
    for u, w in g.all_edges():
        if not (covered[u] or covered[w]):
            raise ExtentError(f"cover misses constraint-graph edge {u}-{w}")
    m = g.n_edges
    return ExtentAssignment(
        tuple(int(f) for f in covered[:m]), tuple(int(f) for f in covered[m:])
    )


def coordinates_from_extents(
    p: PathPair, e: ExtentAssignment, d: DerivedStructure | None = None
) -> GridEmbedding:
    bad = extent_violations(p, e, d)
    if bad:
        raise ExtentError(f"extent constraints violated: {bad[:5]}")
    x = [0] * p.n
    y = [0] * p.n
    # prefix sums along each path, the y-path summed in its own order
    for v, acc in zip(p.pi_x[1:], accumulate(e.d_x)):
        x[v] = acc
    for v, acc in zip(p.pi_y[1:], accumulate(e.d_y)):
        y[v] = acc
    return GridEmbedding(tuple(zip(x, y)), provenance="min-perimeter")


@dataclass(frozen=True)
class SolveResult:
    embedding: GridEmbedding
    extents: ExtentAssignment
    metrics: Metrics
    matching_size: int
    cover_size: int
    report: ValidationReport | None

    @property
    def perimeter(self) -> int:
        return 2 * self.extents.total


def solve_min_perimeter(p: PathPair, *, validate: bool | None = None) -> SolveResult:
    """Minimum-perimeter WMGE of ``p``.

    ``validate=None`` runs the geometry checker on the output when
    ``p.n <= AUTO_VALIDATE_MAX_N``; a failed check raises.
    """
    with _gc_paused():
        return _solve(p, validate)


@contextmanager
def _gc_paused():
    # the pipeline allocates ~10 containers per vertex and no cycles; generational
    # collection passes over them roughly double the wall time at n = 1e5
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if was_enabled:
            gc.enable()


def _solve(p: PathPair, validate: bool | None) -> SolveResult:
    d = derive(p)
    g = build_constraint_graph(p, d)
    bg, _, _ = g.to_bipartite()
    matching = hopcroft_karp(bg)
    cover = konig_cover(bg, matching)
    ext = extents_from_cover(g, cover)
    emb = coordinates_from_extents(p, ext, d)
    met = metrics(p, emb)
    if not met.perimeter == 2 * ext.total == 2 * cover.size:
        raise AssertionError("perimeter does not match the cover size")

    if validate is None:
        validate = p.n <= AUTO_VALIDATE_MAX_N
    report = None
    if validate:
        report = check_wmge(p, emb)
        if not report.valid:
            raise AssertionError(f"solver produced an invalid embedding: {report.first()}")
    return SolveResult(emb, ext, met, matching.size, cover.size, report)


def brass_baseline(p: PathPair) -> GridEmbedding:
    """Rank placement: each vertex sits at (rank on x-path, rank on y-path)."""
    return GridEmbedding(tuple(zip(p.pos_x, p.pos_y)), provenance="rank-baseline")


def side_extents(e: ExtentAssignment, side: Side) -> tuple[int, ...]:
    return e.d_x if side is Side.X else e.d_y
