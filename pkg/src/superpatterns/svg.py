"""Schematic SVG rendering of drawings.

True heights are q**e and far too large to plot, so the picture places each
vertex at height ``e * y_scale``.  That transform bends straight lines, so the
picture is only an illustration; planarity is certified on exact coordinates.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

from .geometry import Drawing


def drawing_to_svg(
    drawing: Drawing,
    x_scale: float = 40.0,
    y_scale: float = 40.0,
    margin: float = 30.0,
    show_supergraph: bool = False,
) -> str:
    pts = drawing.points
    width = margin * 2 + x_scale * max(p.x for p in pts.values())
    height = margin * 2 + y_scale * max(p.y_exp for p in pts.values())

    def xy(v):
        p = pts[v]
        return margin + x_scale * (p.x - 1), height - margin - y_scale * (p.y_exp - 1)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}">',
        "<!-- schematic layout: y = exponent * scale, not the exact point heights. "
        "Crossing-freeness is verified with exact integer arithmetic only. -->",
        f"<title>{escape(f'{drawing.graph.n} vertices, q = {drawing.q}')}</title>",
    ]
    if show_supergraph:
        own = set(drawing.graph.edges())
        for u, v in drawing.supergraph.edges():
            if (u, v) in own:
                continue
            (x1, y1), (x2, y2) = xy(u), xy(v)
            out.append(
                f'<line x1="{x1:.1f}" y1="{y1:.1f}" x2="{x2:.1f}" y2="{y2:.1f}" '
                'stroke="#bbb" stroke-dasharray="4 3"/>'
            )
    for u, v in drawing.graph.edges():
        (x1, y1), (x2, y2) = xy(u), xy(v)
        out.append(f'<line x1="{x1:.1f}" y1="{y1:.1f}" x2="{x2:.1f}" y2="{y2:.1f}" stroke="black"/>')
    for v in sorted(pts):
        x, y = xy(v)
        out.append(f'<circle cx="{x:.1f}" cy="{y:.1f}" r="5" fill="white" stroke="black"/>')
        out.append(f'<text x="{x + 7:.1f}" y="{y - 7:.1f}" font-size="11">{v}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
