"""SVG 1.1 drawing of a simultaneous embedding on its grid."""

from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

from .geometry import GridEmbedding, segments_of
from .pathpair import PathPair


@dataclass
class RenderStyle:
    cell: int = 40
    margin: int = 30
    x_color: str = "blue"
    y_color: str = "lightcoral"
    shared_color: str = "purple"
    grid_color: str = "#dddddd"
    vertex_radius: float = 4.0
    stroke_width: float = 2.5


def render_svg(p: PathPair, emb: GridEmbedding, style: RenderStyle | None = None) -> str:
    st = style or RenderStyle()
    xs = [x for x, _ in emb.points]
    ys = [y for _, y in emb.points]
    x0, y0 = min(xs), min(ys)
    w, h = max(xs) - x0, max(ys) - y0
    width = 2 * st.margin + w * st.cell
    height = 2 * st.margin + h * st.cell

    def gx(x: int) -> int:
        return st.margin + (x - x0) * st.cell

    def gy(y: int) -> int:
        return st.margin + (y - y0) * st.cell

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        # geometry in y-up coordinates; labels are placed outside the flip
        f'<g id="drawing" transform="matrix(1 0 0 -1 0 {height})">',
        f'<g id="grid" stroke="{st.grid_color}" stroke-width="1">',
    ]
    for i in range(w + 1):
        out.append(f'<line x1="{gx(x0 + i)}" y1="{gy(y0)}" x2="{gx(x0 + i)}" y2="{gy(y0 + h)}"/>')
    for j in range(h + 1):
        out.append(f'<line x1="{gx(x0)}" y1="{gy(y0 + j)}" x2="{gx(x0 + w)}" y2="{gy(y0 + j)}"/>')
    out.append("</g>")

    out.append(f'<g id="edges" stroke-width="{st.stroke_width}" stroke-linecap="round">')
    for s in segments_of(p):
        (ax, ay), (bx, by) = emb.points[s.u], emb.points[s.v]
        if s.shared:
            color, cls = st.shared_color, "shared"
        elif s.x_index is not None:
            color, cls = st.x_color, "px"
        else:
            color, cls = st.y_color, "py"
        out.append(
            f'<line class="{cls}" x1="{gx(ax)}" y1="{gy(ay)}" x2="{gx(bx)}" y2="{gy(by)}" '
            f'stroke="{color}"/>'
        )
    out.append("</g>")

    out.append('<g id="vertices" fill="black">')
    for x, y in emb.points:
        out.append(f'<circle cx="{gx(x)}" cy="{gy(y)}" r="{st.vertex_radius}"/>')
    out.append("</g>")
    out.append("</g>")

    out.append('<g id="labels" font-family="sans-serif" font-size="12" fill="black">')
    for v, (x, y) in enumerate(emb.points):
        out.append(
            f'<text x="{gx(x) + 6}" y="{height - gy(y) - 6}">{escape(p.label(v))}</text>'
        )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
