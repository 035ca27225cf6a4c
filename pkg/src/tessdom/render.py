"""SVG rendering of tile arrangements.

One <polygon> element per tile of the m x n patch, selected tiles filled
with the highlight colour.  Torus and open patches draw identically (the
wrap is noted in the legend); a Klein graph is drawn as the unrolled n x n
parallelogram of both triangle layers, with the identification explained
in the legend.  Write-only: nothing parses these files back.
"""

from __future__ import annotations

from .catalog import cluster_spec
from .halfdom import Selection
from .quotient import QuotientGraph

FILL_OFF = "#f2efe9"
FILL_ON = "#4f86c6"
STROKE = "#333333"


def _tile_polygons(graph: QuotientGraph):
    """Yields (vertex id, polygon points) for every drawn tile."""
    spec = cluster_spec(graph.kind)
    v1, v2 = spec.v1, spec.v2
    n = graph.n
    if graph.quotient == "klein":
        for i in range(n):
            for j in range(n):
                ox = i * v1[0] + j * v2[0]
                oy = i * v1[1] + j * v2[1]
                for k, outline in enumerate(spec.outlines, start=1):
                    if k == 1:
                        rep = i * n + j
                    else:
                        rep = ((n - 1 - i) % n) * n + ((n - 1 - j) % n)
                    yield rep, [(x + ox, y + oy) for x, y in outline]
        return
    size = spec.cluster_size
    for i in range(graph.m):
        for j in range(n):
            ox = i * v1[0] + j * v2[0]
            oy = i * v1[1] + j * v2[1]
            for k, outline in enumerate(spec.outlines, start=1):
                vid = (i * n + j) * size + (k - 1)
                yield vid, [(x + ox, y + oy) for x, y in outline]


def _legend(graph: QuotientGraph) -> str:
    if graph.quotient == "torus":
        return (f"torus quotient T({graph.kind}, {graph.m}x{graph.n}): "
                "opposite sides of the drawn patch are identified")
    if graph.quotient == "klein":
        return (f"klein quotient K({graph.kind}, {graph.n}): tile (i, j, 2) "
                "is identified with tile (n-1-i, n-1-j, 1); both copies of "
                "each representative are drawn")
    return f"open patch G({graph.kind}, {graph.m}x{graph.n})"


def render_svg(graph: QuotientGraph, selection: Selection | None = None,
               scale: float = 36.0) -> str:
    """Self-contained SVG document for the graph, selection highlighted."""
    if selection is not None and selection.graph != graph:
        raise ValueError("selection belongs to a different graph")
    bits = selection.selected if selection is not None else None

    polys = list(_tile_polygons(graph))
    xs = [x for _, pts in polys for x, _ in pts]
    ys = [y for _, pts in polys for _, y in pts]
    pad = 0.6
    x0, y0 = min(xs) - pad, min(ys) - pad
    x1, y1 = max(xs) + pad, max(ys) + pad + 1.0  # room for the legend line
    width = (x1 - x0) * scale
    height = (y1 - y0) * scale

    def sx(x: float) -> float:
        return (x - x0) * scale

    def sy(y: float) -> float:
        # flip: tiling coordinates grow upward, SVG grows downward
        return (y1 - y) * scale

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1f}" '
        f'height="{height:.1f}" viewBox="0 0 {width:.1f} {height:.1f}">',
    ]
    for vid, pts in polys:
        fill = FILL_ON if bits is not None and bits[vid] else FILL_OFF
        coords = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in pts)
        out.append(f'<polygon points="{coords}" fill="{fill}" '
                   f'stroke="{STROKE}" stroke-width="1"/>')
    out.append(f'<text x="4" y="{height - 6:.1f}" font-family="sans-serif" '
               f'font-size="{scale * 0.45:.1f}">{_legend(graph)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
