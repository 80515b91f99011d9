"""Path pair model: two directed paths over one shared vertex set.

Vertices are dense integer ids ``0..n-1``. ``pi_x[i]`` is the i-th vertex of
the x-path, ``pi_y[i]`` the i-th vertex of the y-path.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple, Sequence

import numpy as np


class InstanceError(ValueError):
    """Raised for malformed or inconsistent instance documents."""


class Side(str, Enum):
    X = "X"
    Y = "Y"


class Alignment(str, Enum):
    POSITIVE = "POSITIVE"
    NEGATIVE = "NEGATIVE"


class PathEdge(NamedTuple):
    side: Side
    index: int
    endpoints: tuple[int, int]


@dataclass(frozen=True)
class SharedEdge:
    """Vertex pair consecutive on both paths, with its edge index on each."""

    pair: frozenset[int]
    x_index: int
    y_index: int


@dataclass(frozen=True)
class PathPair:
    pi_x: tuple[int, ...]
    pi_y: tuple[int, ...]
    labels: tuple[str, ...] | None = None
    pos_x: tuple[int, ...] = field(init=False, repr=False, compare=False)
    pos_y: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        pi_x = tuple(self.pi_x)
        pi_y = tuple(self.pi_y)
        n = len(pi_x)
        if n < 1:
            raise InstanceError("instance needs at least one vertex")
        if len(pi_y) != n:
            raise InstanceError(f"length mismatch: px has {n} ids, py has {len(pi_y)}")
        object.__setattr__(self, "pi_x", pi_x)
        object.__setattr__(self, "pi_y", pi_y)
        object.__setattr__(self, "pos_x", _inverse(pi_x, "px"))
        object.__setattr__(self, "pos_y", _inverse(pi_y, "py"))
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != n:
                raise InstanceError("label count does not match vertex count")
            object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return len(self.pi_x)

    def order(self, side: Side) -> tuple[int, ...]:
        return self.pi_x if side is Side.X else self.pi_y

    def edges(self, side: Side) -> list[PathEdge]:
        pi = self.order(side)
        return [PathEdge(side, i, (pi[i], pi[i + 1])) for i in range(self.n - 1)]

    def arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """pi_x, pi_y, pos_x, pos_y as integer arrays."""
        return tuple(np.asarray(a, dtype=np.intp) for a in (self.pi_x, self.pi_y, self.pos_x, self.pos_y))

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def to_json(self) -> dict:
        if self.labels is None:
            return {"n": self.n, "px": list(self.pi_x), "py": list(self.pi_y)}
        lab = self.labels
        return {
            "n": self.n,
            "px": [lab[v] for v in self.pi_x],
            "py": [lab[v] for v in self.pi_y],
        }


def _inverse(pi: tuple[int, ...], name: str) -> tuple[int, ...]:
    n = len(pi)
    pos = [-1] * n
    if all(type(v) is int for v in pi) and min(pi) >= 0 and max(pi) < n:
        for i, v in enumerate(pi):
            pos[v] = i
        if -1 not in pos:
            return tuple(pos)
        pos = [-1] * n
    # slow path, only to name the offending id
    for i, v in enumerate(pi):
        if isinstance(v, bool) or not isinstance(v, int):
            raise InstanceError(f"{name}: vertex id {v!r} is not an integer")
        if not 0 <= v < n:
            raise InstanceError(f"{name}: vertex id {v} out of range 0..{n - 1}")
        if pos[v] != -1:
            raise InstanceError(f"{name}: duplicate vertex id {v}")
        pos[v] = i
    return tuple(pos)


@dataclass(frozen=True)
class DerivedStructure:
    switch_x: tuple[int, ...]
    switch_y: tuple[int, ...]
    shared_edges: tuple[SharedEdge, ...]
    align_x: tuple[Alignment, ...]
    align_y: tuple[Alignment, ...]

    def alignment(self, edge: PathEdge) -> Alignment:
        return (self.align_x if edge.side is Side.X else self.align_y)[edge.index]


def derive(p: PathPair) -> DerivedStructure:
    """Switch vertices, shared edges and edge alignments, in ascending rank order."""
    pi_x, pi_y, pos_x, pos_y = p.arrays()
    # rank of each path's vertices on the other path
    ry = pos_y[pi_x]
    rx = pos_x[pi_y]
    align_x, up_x = _alignments(ry)
    align_y, up_y = _alignments(rx)
    switch_x = tuple(pi_x[1:-1][up_x[:-1] != up_x[1:]].tolist())
    switch_y = tuple(pi_y[1:-1][up_y[:-1] != up_y[1:]].tolist())

    step = np.abs(np.diff(ry))
    shared = tuple(
        SharedEdge(frozenset((int(pi_x[i]), int(pi_x[i + 1]))), i, int(min(ry[i], ry[i + 1])))
        for i in np.flatnonzero(step == 1).tolist()
    )
    return DerivedStructure(switch_x, switch_y, shared, align_x, align_y)


def _alignments(other_rank: np.ndarray) -> tuple[tuple[Alignment, ...], np.ndarray]:
    # an edge is positive iff the other path visits its endpoints in the same order;
    # a vertex is a switch exactly when the alignment flips across it
    up = other_rank[1:] > other_rank[:-1]
    lookup = (Alignment.NEGATIVE, Alignment.POSITIVE)
    return tuple(lookup[b] for b in up.tolist()), up


def _coerce_ids(px: Sequence, py: Sequence, n: int | None) -> PathPair:
    if n is not None and (len(px) != n or len(py) != n):
        raise InstanceError(
            f"length mismatch: n={n} but px has {len(px)} ids and py has {len(py)}"
        )
    if all(isinstance(v, int) and not isinstance(v, bool) for v in list(px) + list(py)):
        return PathPair(tuple(px), tuple(py))
    # arbitrary labels: dense ids follow first appearance on the x-path
    labels = [str(v) for v in px]
    index: dict[str, int] = {}
    for lab in labels:
        if lab in index:
            raise InstanceError(f"px: duplicate vertex id {lab}")
        index[lab] = len(index)
    ys = []
    for v in py:
        lab = str(v)
        if lab not in index:
            raise InstanceError(f"py: vertex id {lab} does not occur in px")
        ys.append(index[lab])
    return PathPair(tuple(range(len(labels))), tuple(ys), labels=tuple(labels))


def parse_instance(text: str) -> PathPair:
    """Parse a JSON (``{"n", "px", "py"}``) or plain-text (``PX:``/``PY:``) instance."""
    stripped = text.strip()
    if not stripped:
        raise InstanceError("empty instance document")
    if stripped[0] in "{[":
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise InstanceError(f"malformed JSON: {exc}") from None
        if not isinstance(doc, dict):
            raise InstanceError("instance must be a JSON object")
        for key in ("px", "py"):
            if key not in doc:
                raise InstanceError(f"missing key {key!r}")
            if not isinstance(doc[key], list):
                raise InstanceError(f"{key} must be a list")
        n = doc.get("n")
        if n is not None and (isinstance(n, bool) or not isinstance(n, int) or n < 1):
            raise InstanceError(f"n must be a positive integer, got {n!r}")
        return _coerce_ids(doc["px"], doc["py"], n)

    rows: dict[str, list] = {}
    for line in stripped.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, rest = line.partition(":")
        key = head.strip().upper()
        if not sep or key not in ("PX", "PY"):
            raise InstanceError(f"unexpected line {line!r}; expected 'PX: ...' or 'PY: ...'")
        if key in rows:
            raise InstanceError(f"repeated {key} line")
        rows[key] = [_token(t) for t in rest.split()]
    if set(rows) != {"PX", "PY"}:
        raise InstanceError("plain-text instance needs both a PX and a PY line")
    return _coerce_ids(rows["PX"], rows["PY"], None)


def _token(t: str) -> int | str:
    try:
        return int(t)
    except ValueError:
        return t
