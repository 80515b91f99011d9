"""Exact integer validation of simultaneous embeddings, plus drawing metrics.

All predicates work on Python ints (orientation by cross product); the only
non-integer value ever produced is the rational crossing point of two properly
crossing segments, and that is kept as a pair of Fractions.
"""

from __future__ import annotations

import bisect
import json
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np

from .pathpair import InstanceError, PathPair, Side

Point = tuple[int, int]


class ViolationKind(str, Enum):
    DUPLICATE_POINT = "DUPLICATE_POINT"
    NON_MONOTONE_X = "NON_MONOTONE_X"
    NON_MONOTONE_Y = "NON_MONOTONE_Y"
    VERTEX_ON_EDGE_INTERIOR = "VERTEX_ON_EDGE_INTERIOR"
    SEGMENT_OVERLAP = "SEGMENT_OVERLAP"
    DOUBLE_CROSSING = "DOUBLE_CROSSING"
    EDGE_CROSSING_AT_NON_VERTEX = "EDGE_CROSSING_AT_NON_VERTEX"


_KIND_ORDER = {k: i for i, k in enumerate(ViolationKind)}


@dataclass(frozen=True)
class GridEmbedding:
    points: tuple[Point, ...]
    provenance: str = "input"

    def __post_init__(self) -> None:
        pts = tuple((x, y) for x, y in self.points)
        for pt in pts:
            if type(pt[0]) is not int or type(pt[1]) is not int:
                raise InstanceError(f"non-integer grid point {pt!r}")
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return len(self.points)

    def translated(self, dx: int, dy: int) -> GridEmbedding:
        return GridEmbedding(tuple((x + dx, y + dy) for x, y in self.points), self.provenance)

    def width(self) -> int:
        xs = [x for x, _ in self.points]
        return max(xs) - min(xs) if xs else 0

    def height(self) -> int:
        ys = [y for _, y in self.points]
        return max(ys) - min(ys) if ys else 0

    def perimeter(self) -> int:
        return 2 * (self.width() + self.height())


# --- exact predicates ---------------------------------------------------------


def orient(a: Point, b: Point, c: Point) -> int:
    """Twice the signed area of abc: >0 left turn, <0 right turn, 0 collinear."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def strictly_inside(p: Point, a: Point, b: Point) -> bool:
    """p lies on segment ab and differs from both endpoints."""
    if orient(a, b, p) != 0:
        return False
    lo, hi = (a, b) if a <= b else (b, a)
    # on a common line, lexicographic order is the order along the line
    return lo < p < hi


class Contact(int, Enum):
    NONE = 0
    POINT = 1
    OVERLAP = 2


def segment_contact(
    a: Point, b: Point, c: Point, d: Point
) -> tuple[Contact, tuple[Fraction, Fraction] | None]:
    """Intersection of closed segments ab and cd.

    Returns (NONE, None), (POINT, p) with p exact, or (OVERLAP, None) when the
    segments share infinitely many points.
    """
    if a == b or c == d:
        return _degenerate_contact(a, b, c, d)
    d1 = orient(c, d, a)
    d2 = orient(c, d, b)
    d3 = orient(a, b, c)
    d4 = orient(a, b, d)
    if d1 == 0 and d2 == 0:
        lo = max(min(a, b), min(c, d))
        hi = min(max(a, b), max(c, d))
        if lo < hi:
            return Contact.OVERLAP, None
        if lo == hi:
            return Contact.POINT, _frac(lo)
        return Contact.NONE, None
    if (d1 > 0 and d2 > 0) or (d1 < 0 and d2 < 0):
        return Contact.NONE, None
    if (d3 > 0 and d4 > 0) or (d3 < 0 and d4 < 0):
        return Contact.NONE, None
    if d1 == 0:
        return Contact.POINT, _frac(a)
    if d2 == 0:
        return Contact.POINT, _frac(b)
    if d3 == 0:
        return Contact.POINT, _frac(c)
    if d4 == 0:
        return Contact.POINT, _frac(d)
    t = Fraction(d1, d1 - d2)
    return Contact.POINT, (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))


def _degenerate_contact(a, b, c, d):
    if a == b and c == d:
        return (Contact.POINT, _frac(a)) if a == c else (Contact.NONE, None)
    if a == b:
        a, b, c, d = c, d, a, b
    # c == d is a point, ab a proper segment
    if c == a or c == b or strictly_inside(c, a, b):
        return Contact.POINT, _frac(c)
    return Contact.NONE, None


def _frac(p: Point) -> tuple[Fraction, Fraction]:
    return Fraction(p[0]), Fraction(p[1])


# --- segments of a simultaneous embedding ---------------------------------------


class Segment(NamedTuple):
    """One drawn segment; a shared edge carries an owner on both sides."""

    u: int
    v: int
    x_index: int | None
    y_index: int | None

    @property
    def shared(self) -> bool:
        return self.x_index is not None and self.y_index is not None

    def owner(self) -> str:
        if self.shared:
            return "SHARED"
        return f"X{self.x_index}" if self.x_index is not None else f"Y{self.y_index}"


def segments_of(p: PathPair) -> list[Segment]:
    """Distinct segments, shared vertex pairs collapsed into one."""
    pi_x, pi_y, pos_x = p.pi_x, p.pi_y, p.pos_x
    segs = [Segment(pi_x[i], pi_x[i + 1], i, None) for i in range(p.n - 1)]
    for j in range(p.n - 1):
        u, v = pi_y[j], pi_y[j + 1]
        i, k = pos_x[u], pos_x[v]
        if i - k == 1 or k - i == 1:
            segs[min(i, k)] = segs[min(i, k)]._replace(y_index=j)
        else:
            segs.append(Segment(u, v, None, j))
    return segs


# --- validation ----------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    witness: tuple

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "witness": _jsonable(self.witness)}


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return int(obj) if obj.denominator == 1 else str(obj)
    if isinstance(obj, (tuple, list)):
        return [_jsonable(o) for o in obj]
    return obj


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]
    mode: str = "wmge"
    cross_path_crossings: int = 0
    pairs_examined: int = field(default=0, compare=False)

    @property
    def valid(self) -> bool:
        return not self.violations

    def first(self) -> Violation | None:
        return self.violations[0] if self.violations else None

    def kinds(self) -> set[ViolationKind]:
        return {v.kind for v in self.violations}

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "mode": self.mode,
            "violations": [v.to_json() for v in self.violations],
            "cross_path_crossings": self.cross_path_crossings,
        }


def check_wmge(
    p: PathPair,
    emb: GridEmbedding,
    *,
    strict_planarity: bool = False,
    forbid_cross_path_crossings: bool = False,
) -> ValidationReport:
    """Validate an embedding of a path pair.

    WMGE mode (default) checks distinct points, weak x-monotonicity of the
    x-path and weak y-monotonicity of the y-path, no vertex inside a foreign
    edge, and that any two segments meet in at most one point. Strict-planarity
    mode drops monotonicity and additionally rejects proper crossings between
    edges of the same path. Proper crossings between the two paths are only
    counted unless ``forbid_cross_path_crossings`` is set.
    """
    if emb.n != p.n:
        raise InstanceError(f"embedding has {emb.n} points, instance has {p.n} vertices")
    pts = emb.points
    found: list[Violation] = []

    seen: dict[Point, list[int]] = {}
    for v, pt in enumerate(pts):
        seen.setdefault(pt, []).append(v)
    for pt, group in seen.items():
        if len(group) > 1:
            found.append(Violation(ViolationKind.DUPLICATE_POINT, (tuple(group), pt)))

    if not strict_planarity:
        for i in range(p.n - 1):
            u, v = p.pi_x[i], p.pi_x[i + 1]
            if pts[u][0] > pts[v][0]:
                found.append(Violation(ViolationKind.NON_MONOTONE_X, (i, u, v)))
        for i in range(p.n - 1):
            u, v = p.pi_y[i], p.pi_y[i + 1]
            if pts[u][1] > pts[v][1]:
                found.append(Violation(ViolationKind.NON_MONOTONE_Y, (i, u, v)))

    segs = segments_of(p)

    # vertices strictly inside a segment; candidates pulled by x-range
    by_x = sorted((pts[v], v) for v in range(p.n))
    keys = [pt for pt, _ in by_x]
    for s in segs:
        a, b = pts[s.u], pts[s.v]
        if a == b:
            continue
        lo_x, hi_x = min(a[0], b[0]), max(a[0], b[0])
        start = bisect.bisect_left(keys, (lo_x, -math.inf))
        stop = bisect.bisect_right(keys, (hi_x, math.inf))
        for pt, w in by_x[start:stop]:
            if w != s.u and w != s.v and strictly_inside(pt, a, b):
                found.append(
                    Violation(ViolationKind.VERTEX_ON_EDGE_INTERIOR, (w, s.u, s.v))
                )

    crossings = 0
    examined = 0
    boxes = []
    for k, s in enumerate(segs):
        a, b = pts[s.u], pts[s.v]
        boxes.append((min(a[0], b[0]), max(a[0], b[0]), min(a[1], b[1]), max(a[1], b[1]), k))
    boxes.sort()
    for i, (x0, x1, y0, y1, k) in enumerate(boxes):
        s = segs[k]
        a, b = pts[s.u], pts[s.v]
        for j in range(i + 1, len(boxes)):
            x0b, _, y0b, y1b, kk = boxes[j]
            if x0b > x1:
                break
            if y0b > y1 or y1b < y0:
                continue
            t = segs[kk]
            examined += 1
            c, d = pts[t.u], pts[t.v]
            contact, at = segment_contact(a, b, c, d)
            if contact is Contact.NONE:
                continue
            pair = tuple(sorted(((s.u, s.v), (t.u, t.v))))
            common = {s.u, s.v} & {t.u, t.v}
            if contact is Contact.OVERLAP:
                kind = ViolationKind.DOUBLE_CROSSING if common else ViolationKind.SEGMENT_OVERLAP
                found.append(Violation(kind, pair))
                continue
            # single contact point: fine at a common vertex; a vertex on the other
            # segment or two coinciding vertices are reported above
            if any(at == _frac(q) for q in (a, b, c, d)):
                continue
            same_path = (s.x_index is not None and t.x_index is not None) or (
                s.y_index is not None and t.y_index is not None
            )
            if same_path:
                if strict_planarity:
                    found.append(
                        Violation(ViolationKind.EDGE_CROSSING_AT_NON_VERTEX, pair + (at,))
                    )
            else:
                crossings += 1
                if forbid_cross_path_crossings:
                    found.append(
                        Violation(ViolationKind.EDGE_CROSSING_AT_NON_VERTEX, pair + (at,))
                    )

    found.sort(key=lambda v: (_KIND_ORDER[v.kind], repr(v.witness)))
    return ValidationReport(
        tuple(found),
        mode="strict" if strict_planarity else "wmge",
        cross_path_crossings=crossings,
        pairs_examined=examined,
    )


def check_unit_length(p: PathPair, emb: GridEmbedding) -> bool:
    """Every edge of either path has squared length exactly 1."""
    pts = emb.points
    for s in segments_of(p):
        (ax, ay), (bx, by) = pts[s.u], pts[s.v]
        if (ax - bx) ** 2 + (ay - by) ** 2 != 1:
            return False
    return True


# --- metrics -------------------------------------------------------------------


@dataclass(frozen=True)
class Metrics:
    width: int
    height: int
    perimeter: int
    max_sq_edge: int
    total_length: float
    total_length_exact: bool = False

    def to_json(self) -> dict:
        return {
            "perimeter": self.perimeter,
            "width": self.width,
            "height": self.height,
            "max_sq_edge": self.max_sq_edge,
            "total_length": self.total_length,
            "total_length_approximate": not self.total_length_exact,
        }


def metrics(p: PathPair, emb: GridEmbedding) -> Metrics:
    """Perimeter, exact max squared edge length and (float) total edge length.

    A shared edge is one segment and counts once.
    """
    if p.n == 1:
        return Metrics(0, 0, 0, 0, 0.0, True)
    pts = np.array(emb.points, dtype=object if _needs_bigint(emb) else np.int64)
    pi_x, pi_y, pos_x, _ = p.arrays()
    # y-edges whose endpoints are also x-neighbors coincide with an x-edge
    own_y = np.abs(np.diff(pos_x[pi_y])) != 1
    u = np.concatenate([pi_x[:-1], pi_y[:-1][own_y]])
    v = np.concatenate([pi_x[1:], pi_y[1:][own_y]])
    delta = pts[u] - pts[v]
    sq = (delta[:, 0] * delta[:, 0] + delta[:, 1] * delta[:, 1]).tolist()
    lengths = [math.sqrt(q) for q in sq]
    w, h = emb.width(), emb.height()
    return Metrics(
        width=w,
        height=h,
        perimeter=2 * (w + h),
        max_sq_edge=int(max(sq)),
        total_length=math.fsum(lengths),
        total_length_exact=all(math.isqrt(q) ** 2 == q for q in sq),
    )


def _needs_bigint(emb: GridEmbedding) -> bool:
    # squared lengths must stay below 2**63
    lim = 1 << 30
    return any(not -lim < c < lim for pt in emb.points for c in pt)


# --- embedding document ----------------------------------------------------------


def embedding_to_json(p: PathPair, emb: GridEmbedding, extra: dict | None = None) -> dict:
    m = metrics(p, emb)
    doc: dict = {
        "points": [list(pt) for pt in emb.points],
        "metrics": {"perimeter": m.perimeter, "width": m.width, "height": m.height},
        "provenance": emb.provenance,
    }
    if p.labels is not None:
        doc["labels"] = list(p.labels)
    if extra:
        doc.update(extra)
    return doc


def parse_embedding(text: str) -> GridEmbedding:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"malformed embedding JSON: {exc}") from None
    if not isinstance(doc, dict) or not isinstance(doc.get("points"), list):
        raise InstanceError("embedding document needs a 'points' list")
    pts: list[Point] = []
    for pt in doc["points"]:
        if not isinstance(pt, Sequence) or isinstance(pt, str) or len(pt) != 2:
            raise InstanceError(f"bad point {pt!r}; expected [x, y]")
        pts.append((pt[0], pt[1]))
    return GridEmbedding(tuple(pts), provenance=str(doc.get("provenance", "input")))
