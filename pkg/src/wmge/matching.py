"""Hopcroft-Karp maximum matching and Konig minimum vertex cover.

Generic over any bipartite graph given as A-side adjacency lists. Everything is
list-indexed and iterative so graphs with a few hundred thousand vertices stay
well inside Python's recursion limit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

NONE = -1
_INF = 1 << 60


class MatchingError(RuntimeError):
    """A matching handed to Konig's construction admits an augmenting path."""


@dataclass(frozen=True)
class BipartiteGraph:
    a_count: int
    b_count: int
    adjacency: Sequence[Sequence[int]]

    def __post_init__(self) -> None:
        if len(self.adjacency) != self.a_count:
            raise ValueError("adjacency needs one row per A vertex")
        for a, row in enumerate(self.adjacency):
            if len(set(row)) != len(row):
                raise ValueError(f"duplicate edge at A vertex {a}")
            for b in row:
                if not 0 <= b < self.b_count:
                    raise ValueError(f"B index {b} out of range at A vertex {a}")

    @classmethod
    def from_edges(cls, a_count: int, b_count: int, edges) -> BipartiteGraph:
        adj: list[list[int]] = [[] for _ in range(a_count)]
        for a, b in edges:
            adj[a].append(b)
        return cls(a_count, b_count, [sorted(row) for row in adj])

    def edges(self):
        for a, row in enumerate(self.adjacency):
            for b in row:
                yield a, b


@dataclass(frozen=True)
class Matching:
    match_a: tuple[int, ...]
    match_b: tuple[int, ...]

    @property
    def size(self) -> int:
        return sum(1 for b in self.match_a if b != NONE)

    def pairs(self) -> list[tuple[int, int]]:
        return [(a, b) for a, b in enumerate(self.match_a) if b != NONE]


@dataclass(frozen=True)
class VertexCover:
    in_cover_a: tuple[bool, ...]
    in_cover_b: tuple[bool, ...]

    @property
    def size(self) -> int:
        return sum(self.in_cover_a) + sum(self.in_cover_b)

    @property
    def a_members(self) -> list[int]:
        return [a for a, c in enumerate(self.in_cover_a) if c]

    @property
    def b_members(self) -> list[int]:
        return [b for b, c in enumerate(self.in_cover_b) if c]


def hopcroft_karp(g: BipartiteGraph) -> Matching:
    """Maximum-cardinality matching.

    Each phase builds BFS layers from all free A vertices, then augments along
    vertex-disjoint shortest paths, trying free A roots and neighbors in
    ascending index order, so the result depends only on the adjacency order.
    """
    adj = g.adjacency
    na = g.a_count
    match_a = [NONE] * na
    match_b = [NONE] * g.b_count

    while True:
        dist = [_INF] * na
        queue = [a for a in range(na) if match_a[a] == NONE]
        for a in queue:
            dist[a] = 0
        shortest = _INF
        head = 0
        while head < len(queue):
            a = queue[head]
            head += 1
            da = dist[a]
            if da >= shortest:
                continue
            for b in adj[a]:
                a2 = match_b[b]
                if a2 == NONE:
                    if shortest == _INF:
                        shortest = da + 1
                elif dist[a2] == _INF:
                    dist[a2] = da + 1
                    queue.append(a2)
        if shortest == _INF:
            break

        cursor = [0] * na
        for root in range(na):
            if match_a[root] != NONE:
                continue
            stack = [root]
            via: list[int] = []
            while stack:
                a = stack[-1]
                row = adj[a]
                i = cursor[a]
                nxt = dist[a] + 1
                pushed = False
                augmented = False
                while i < len(row):
                    b = row[i]
                    i += 1
                    a2 = match_b[b]
                    if a2 == NONE:
                        if nxt == shortest:
                            via.append(b)
                            augmented = True
                            break
                    elif dist[a2] == nxt:
                        via.append(b)
                        stack.append(a2)
                        pushed = True
                        break
                cursor[a] = i
                if augmented:
                    for a_k, b_k in zip(stack, via):
                        match_a[a_k] = b_k
                        match_b[b_k] = a_k
                    break
                if not pushed:
                    # dead end for the rest of this phase
                    dist[a] = _INF
                    stack.pop()
                    if via:
                        via.pop()

    return Matching(tuple(match_a), tuple(match_b))


def konig_cover(g: BipartiteGraph, m: Matching) -> VertexCover:
    """Minimum vertex cover from a maximum matching.

    Z is everything reachable from unmatched A vertices along alternating paths
    (unmatched edges A->B, matched edges B->A); the cover is (A - Z) + (B & Z).
    """
    match_a, match_b = m.match_a, m.match_b
    adj = g.adjacency
    z_a = [False] * g.a_count
    z_b = [False] * g.b_count
    queue = [a for a in range(g.a_count) if match_a[a] == NONE]
    for a in queue:
        z_a[a] = True
    head = 0
    while head < len(queue):
        a = queue[head]
        head += 1
        mate = match_a[a]
        for b in adj[a]:
            if b == mate or z_b[b]:
                continue
            z_b[b] = True
            a2 = match_b[b]
            if a2 == NONE:
                raise MatchingError(
                    f"augmenting path ends at B vertex {b}; matching is not maximum"
                )
            if not z_a[a2]:
                z_a[a2] = True
                queue.append(a2)

    cover = VertexCover(tuple(not z for z in z_a), tuple(z_b))
    if not verify_cover(g, cover) or cover.size != m.size:
        raise MatchingError("Konig construction produced an invalid cover")
    return cover


def verify_cover(g: BipartiteGraph, c: VertexCover) -> bool:
    in_a, in_b = c.in_cover_a, c.in_cover_b
    return all(in_a[a] or in_b[b] for a, b in g.edges())


def verify_matching(g: BipartiteGraph, m: Matching) -> bool:
    if len(m.match_a) != g.a_count or len(m.match_b) != g.b_count:
        return False
    for a, b in enumerate(m.match_a):
        if b == NONE:
            continue
        if m.match_b[b] != a or b not in g.adjacency[a]:
            return False
    return all(a == NONE or m.match_a[a] == b for b, a in enumerate(m.match_b))
