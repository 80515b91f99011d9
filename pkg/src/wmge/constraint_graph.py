"""Constraint graph: one vertex per path edge, edges for switch pairs and shared links.

Vertex ``i`` (``0 <= i < n-1``) stands for x-edge ``i``; vertex ``n-1+j`` for
y-edge ``j``. The bipartition is read off the edge alignments instead of being
searched for: a switch pair always joins edges of opposite alignment, and a
shared link joins two incarnations of one vertex pair (same alignment) across
sides, so coloring by ``side XOR alignment`` is proper.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import NamedTuple

from .matching import BipartiteGraph
from .pathpair import Alignment, DerivedStructure, PathPair, Side


class Color(str, Enum):
    A = "A"
    B = "B"


class CgVertex(NamedTuple):
    side: Side
    edge_index: int
    alignment: Alignment
    color: Color


def color_of(side: Side, alignment: Alignment) -> Color:
    positive = alignment is Alignment.POSITIVE
    return Color.A if (side is Side.X) == positive else Color.B


_COLOR = {(s, a): color_of(s, a) for s in Side for a in Alignment}


@dataclass(frozen=True)
class ConstraintGraph:
    n: int
    align_x: tuple[Alignment, ...]
    align_y: tuple[Alignment, ...]
    edges_ex: tuple[tuple[int, int], ...]
    edges_ey: tuple[tuple[int, int], ...]
    edges_m: tuple[tuple[int, int], ...]

    @property
    def n_edges(self) -> int:
        return self.n - 1

    def vid(self, side: Side, edge_index: int) -> int:
        return edge_index if side is Side.X else self.n_edges + edge_index

    @cached_property
    def vertices(self) -> tuple[CgVertex, ...]:
        """V_X (one per x-edge) followed by V_Y (one per y-edge)."""
        out = [CgVertex(Side.X, i, a, _COLOR[Side.X, a]) for i, a in enumerate(self.align_x)]
        out += [CgVertex(Side.Y, j, a, _COLOR[Side.Y, a]) for j, a in enumerate(self.align_y)]
        return tuple(out)

    def all_edges(self) -> list[tuple[int, int]]:
        """Every edge as a pair of vertex ids.

        The order (x switch pairs, shared links, y switch pairs) is relied on:
        appending neighbors in this order yields sorted neighbor lists.
        """
        off = self.n_edges
        out = list(self.edges_ex)
        out += [(i, off + j) for i, j in self.edges_m]
        out += [(off + i, off + j) for i, j in self.edges_ey]
        return out

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        rows: list[list[int]] = [[] for _ in range(2 * self.n_edges)]
        for u, w in self.all_edges():
            rows[u].append(w)
            rows[w].append(u)
        return tuple(tuple(r) for r in rows)

    @cached_property
    def color_classes(self) -> tuple[list[int], list[int]]:
        """Vertex ids of color A and of color B, ascending."""
        pos = Alignment.POSITIVE
        off = self.n_edges
        a_ids = [i for i, a in enumerate(self.align_x) if a is pos]
        b_ids = [i for i, a in enumerate(self.align_x) if a is not pos]
        a_ids += [off + j for j, a in enumerate(self.align_y) if a is not pos]
        b_ids += [off + j for j, a in enumerate(self.align_y) if a is pos]
        return a_ids, b_ids

    def to_bipartite(self) -> tuple[BipartiteGraph, list[int], list[int]]:
        """Map onto a generic bipartite graph via the stored coloring.

        Returns the graph plus the vertex ids behind each A index and each B index.
        """
        a_ids, b_ids = self.color_classes
        index = [0] * (2 * self.n_edges)
        is_a = [False] * (2 * self.n_edges)
        for i, k in enumerate(a_ids):
            index[k] = i
            is_a[k] = True
        for i, k in enumerate(b_ids):
            index[k] = i
        rows: list[list[int]] = [[] for _ in a_ids]
        for u, w in self.all_edges():
            if is_a[u]:
                rows[index[u]].append(index[w])
            else:
                rows[index[w]].append(index[u])
        return BipartiteGraph(len(a_ids), len(b_ids), rows), a_ids, b_ids


def build_constraint_graph(p: PathPair, d: DerivedStructure) -> ConstraintGraph:
    # switch vertex at rank i joins the edges on either side of it
    edges_ex = tuple((p.pos_x[v] - 1, p.pos_x[v]) for v in d.switch_x)
    edges_ey = tuple((p.pos_y[v] - 1, p.pos_y[v]) for v in d.switch_y)
    edges_m = tuple((s.x_index, s.y_index) for s in d.shared_edges)
    return ConstraintGraph(p.n, d.align_x, d.align_y, edges_ex, edges_ey, edges_m)


def bfs_two_coloring(g: ConstraintGraph) -> list[int] | None:
    """Independent 2-coloring by breadth-first search; None if an odd cycle exists."""
    color = [-1] * len(g.vertices)
    for root in range(len(g.vertices)):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def verify_bipartite(g: ConstraintGraph) -> bool:
    """Check the alignment coloring is proper and agrees with BFS per component."""
    verts = g.vertices
    for u, w in g.all_edges():
        if verts[u].color is verts[w].color:
            return False
    bfs = bfs_two_coloring(g)
    if bfs is None:
        return False
    # within a component, the two colorings agree everywhere or disagree everywhere
    for u, w in g.all_edges():
        same_u = (verts[u].color is Color.A) == (bfs[u] == 0)
        same_w = (verts[w].color is Color.A) == (bfs[w] == 0)
        if same_u != same_w:
            return False
    return True


def export_dot(g: ConstraintGraph, name: str = "constraint_graph") -> str:
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for k, v in enumerate(g.vertices):
        label = f"{'x' if v.side is Side.X else 'y'}{v.edge_index}"
        colour = "blue" if v.side is Side.X else "red"
        lines.append(
            f'  {label} [color={colour}, label="{label}", '
            f'tooltip="{v.alignment.value} / {v.color.value}"];'
        )
    for i, j in g.edges_ex:
        lines.append(f"  x{i} -- x{j} [color=blue];")
    for i, j in g.edges_ey:
        lines.append(f"  y{i} -- y{j} [color=red];")
    for i, j in g.edges_m:
        lines.append(f"  x{i} -- y{j} [color=purple, style=bold];")
    lines.append("}")
    return "\n".join(lines) + "\n"
