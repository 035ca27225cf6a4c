"""Catalog of the 11 edge-to-edge regular and semi-regular plane tessellations.

Each tessellation is described by its minimal translational cluster: a short
list of tiles (side counts), the adjacency between tiles of the same cluster
(``intra_edges``) and between tiles of neighbouring clusters (``inter_edges``,
tagged with a lattice offset), plus planar outlines and the two translation
vectors used only for rendering.

The adjacency tables below are hand-encoded.  They are cross-checked three
ways: ``validate_cluster`` enforces the degree and tile-ratio identities,
``scripts/derive_adjacency.py`` re-derives every table from the polygon
geometry by exact edge matching, and the torus builders in
:mod:`tessdom.quotient` verify that expanded degrees equal side counts.
Adjacency is never derived from geometry at runtime.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)

#: Canonical kind names, in fixed catalog order.
CANONICAL_ORDER = (
    "4.4.4.4",
    "6.6.6",
    "3.3.3.3.3.3",
    "3.3.3.4.4",
    "3.6.3.6",
    "3.4.6.4",
    "4.8.8",
    "4.6.12",
    "3.12.12",
    "3.3.4.3.4",
    "3.3.3.3.6",
)

Point = tuple[float, float]
Offset = tuple[int, int]


def catalog() -> tuple[str, ...]:
    """The 11 tessellation kinds, canonical names, fixed order."""
    return CANONICAL_ORDER


def _expand_power_token(token: str) -> list[int]:
    token = token.strip()
    if "^" in token:
        base, _, exp = token.partition("^")
        return [int(base)] * int(exp)
    return [int(token)]


def normalize_kind(text: str) -> str:
    """Normalize a vertex-arrangement label to its canonical catalog name.

    Accepts canonical dot-separated names ("3.4.6.4") as well as tuple-style
    labels with power notation, e.g. "(4,3,3,4,3)", "(8^2,4)", "(3^6)".
    The canonical form is the lexicographically smallest rotation of the
    cyclic sequence or of its reversal.

    Raises ValueError for anything that is not one of the 11 kinds.
    """
    raw = text.strip().strip("()").replace(" ", "")
    if not raw:
        raise ValueError("empty tessellation name")
    seq: list[int] = []
    try:
        for token in raw.replace(".", ",").split(","):
            seq.extend(_expand_power_token(token))
    except ValueError:
        raise ValueError(f"cannot parse tessellation name: {text!r}") from None
    best: tuple[int, ...] | None = None
    for candidate in (seq, list(reversed(seq))):
        for shift in range(len(candidate)):
            rot = tuple(candidate[shift:] + candidate[:shift])
            if best is None or rot < best:
                best = rot
    assert best is not None
    name = ".".join(str(s) for s in best)
    if name not in CANONICAL_ORDER:
        raise ValueError(f"unknown tessellation: {text!r} (normalized {name!r})")
    return name


def vertex_arrangement(kind: str) -> tuple[int, ...]:
    """Polygon side counts around a vertex, per the canonical name."""
    return tuple(int(tok) for tok in normalize_kind(kind).split("."))


# ----------------------------------------------------------------------
# Cluster data
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class ClusterSpec:
    """Minimal translational cluster of one tessellation.

    tiles        -- ordered (tile_index k >= 1, side count) pairs
    intra_edges  -- unordered tile-index pairs adjacent within one cluster
    inter_edges  -- (a, b, (di, dj)): tile a of cluster (i, j) is adjacent to
                    tile b of cluster (i + di, j + dj)
    outlines     -- per-tile planar polygon, rendering only
    v1, v2       -- translation vectors of the cluster lattice, rendering only
    """

    kind: str
    tiles: tuple[tuple[int, int], ...]
    intra_edges: tuple[tuple[int, int], ...]
    inter_edges: tuple[tuple[int, int, Offset], ...]
    outlines: tuple[tuple[Point, ...], ...]
    v1: Point
    v2: Point

    @property
    def cluster_size(self) -> int:
        return len(self.tiles)

    @property
    def sides(self) -> tuple[int, ...]:
        return tuple(s for _, s in self.tiles)

    def incident_counts(self) -> list[int]:
        """Adjacency incidences per tile over the periodic extension."""
        counts = [0] * self.cluster_size
        for a, b in self.intra_edges:
            counts[a - 1] += 1
            counts[b - 1] += 1
        for a, b, _ in self.inter_edges:
            counts[a - 1] += 1
            counts[b - 1] += 1
        return counts


def _pt(cx: float, cy: float, r: float, deg: float) -> Point:
    a = math.radians(deg)
    return (cx + r * math.cos(a), cy + r * math.sin(a))


def _poly(cx: float, cy: float, r: float, degs: list[float]) -> tuple[Point, ...]:
    return tuple(_pt(cx, cy, r, d) for d in degs)


def _regular(cx: float, cy: float, sides: int, first_deg: float) -> tuple[Point, ...]:
    r = 1.0 / (2.0 * math.sin(math.pi / sides))
    return _poly(cx, cy, r, [first_deg + 360.0 * k / sides for k in range(sides)])


def _rot(p: Point, deg: float) -> Point:
    a = math.radians(deg)
    return (p[0] * math.cos(a) - p[1] * math.sin(a),
            p[0] * math.sin(a) + p[1] * math.cos(a))


def _rot_poly(poly: tuple[Point, ...], deg: float) -> tuple[Point, ...]:
    return tuple(_rot(p, deg) for p in poly)


def _geometry(kind: str) -> tuple[tuple[tuple[Point, ...], ...], Point, Point]:
    """Tile outlines for cluster (0, 0) plus translation vectors (edge length 1)."""
    if kind == "4.4.4.4":
        sq = ((0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0))
        return (sq,), (1.0, 0.0), (0.0, 1.0)

    if kind == "6.6.6":
        return (_regular(0, 0, 6, 0),), (1.5, SQRT3 / 2), (0.0, SQRT3)

    if kind == "3.3.3.3.3.3":
        low = ((0.0, 0.0), (1.0, 0.0), (0.5, SQRT3 / 2))
        up = ((1.0, 0.0), (1.5, SQRT3 / 2), (0.5, SQRT3 / 2))
        return (low, up), (1.0, 0.0), (0.5, SQRT3 / 2)

    if kind == "3.3.3.4.4":
        h = 1.0 + SQRT3 / 2
        sq = ((0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0))
        up = ((0.0, 1.0), (1.0, 1.0), (0.5, h))
        down = ((1.0, 1.0), (1.5, h), (0.5, h))
        return (sq, up, down), (1.0, 0.0), (-0.5, h)

    if kind == "3.6.3.6":
        hexa = _regular(0, 0, 6, 0)
        up = ((1.0, 0.0), (1.5, SQRT3 / 2), (0.5, SQRT3 / 2))
        down = ((1.0, 0.0), (0.5, -SQRT3 / 2), (1.5, -SQRT3 / 2))
        return (hexa, up, down), (2.0, 0.0), (1.0, SQRT3)

    if kind == "3.4.6.4":
        hexa = _regular(0, 0, 6, 0)
        u = (SQRT3 / 2, 0.5)  # outward normal of the upper-right hexagon edge
        sq_a = ((1.0, 0.0), (1.0 + u[0], u[1]),
                (0.5 + u[0], SQRT3 / 2 + u[1]), (0.5, SQRT3 / 2))
        tri_a = ((0.5, SQRT3 / 2), (0.5 + u[0], SQRT3 / 2 + u[1]), (0.5, 1 + SQRT3 / 2))
        sq_b = ((0.5, SQRT3 / 2), (0.5, 1 + SQRT3 / 2),
                (-0.5, 1 + SQRT3 / 2), (-0.5, SQRT3 / 2))
        tri_c = ((-0.5, SQRT3 / 2), (-0.5, 1 + SQRT3 / 2), (-0.5 - u[0], SQRT3 / 2 + u[1]))
        sq_c = ((-0.5, SQRT3 / 2), (-0.5 - u[0], SQRT3 / 2 + u[1]),
                (-1.0 - u[0], u[1]), (-1.0, 0.0))
        s = SQRT3 + 1.0
        v1 = (s * SQRT3 / 2, s / 2)
        v2 = (0.0, s)
        return (hexa, sq_a, tri_a, sq_b, tri_c, sq_c), v1, v2

    if kind == "4.8.8":
        s = 1.0 + SQRT2
        c = s / 2
        h = SQRT2 / 2
        sq = ((c + h, c), (c, c + h), (c - h, c), (c, c - h))
        octa = ((c, -0.5), (c, 0.5), (0.5, c), (-0.5, c),
                (-c, 0.5), (-c, -0.5), (-0.5, -c), (0.5, -c))
        return (sq, octa), (s, 0.0), (0.0, s)

    if kind == "4.6.12":
        s = 3.0 + SQRT3
        v1 = (s, 0.0)
        v2 = (s / 2, s * SQRT3 / 2)
        cu = ((v1[0] + v2[0]) / 3, (v1[1] + v2[1]) / 3)
        cw = (2 * cu[0], 2 * cu[1])
        dod = _regular(0, 0, 12, 15)
        hex_u = _regular(cu[0], cu[1], 6, 0)
        hex_w = _regular(cw[0], cw[1], 6, 0)
        corners = [(-0.5, -0.5), (0.5, -0.5), (0.5, 0.5), (-0.5, 0.5)]
        sq_a = tuple((s / 2 + x, 0.0 + y) for x, y in corners)
        sq_b = tuple((v2[0] / 2 + p[0], v2[1] / 2 + p[1])
                     for p in (_rot(c, 60) for c in corners))
        cc = ((v2[0] - v1[0]) / 2, (v2[1] - v1[1]) / 2)
        sq_c = tuple((cc[0] + p[0], cc[1] + p[1])
                     for p in (_rot(c, 120) for c in corners))
        return (dod, hex_u, hex_w, sq_a, sq_b, sq_c), v1, v2

    if kind == "3.12.12":
        s = 2.0 + SQRT3
        v1 = (s, 0.0)
        v2 = (s / 2, s * SQRT3 / 2)
        cu = ((v1[0] + v2[0]) / 3, (v1[1] + v2[1]) / 3)
        cw = (2 * cu[0], 2 * cu[1])
        dod = _regular(0, 0, 12, 15)
        r3 = 1.0 / SQRT3
        tri_u = _poly(cu[0], cu[1], r3, [30, 150, 270])
        tri_w = _poly(cw[0], cw[1], r3, [90, 210, 330])
        return (dod, tri_u, tri_w), v1, v2

    if kind == "3.3.4.3.4":
        lat = math.sqrt(2.0 + SQRT3)
        h = SQRT2 / 2
        sq1 = _poly(0, 0, h, [330, 60, 150, 240])
        sq2 = _poly(lat / 2, lat / 2, h, [300, 30, 120, 210])
        a = _pt(0, 0, h, 330)
        b = _pt(0, 0, h, 60)
        c = _pt(lat / 2, lat / 2, h, 300)
        d = _pt(lat / 2, -lat / 2, h, 30)
        tri_a = (a, c, b)
        tri_b = (a, d, c)
        tri_a2 = _rot_poly(tri_a, 90)
        tri_b2 = _rot_poly(tri_b, 90)
        return (sq1, sq2, tri_a, tri_b, tri_a2, tri_b2), (lat, 0.0), (0.0, lat)

    if kind == "3.3.3.3.6":
        v1 = (1.5 * SQRT3, 0.5)
        v2 = (SQRT3 / 2, 2.5)
        hexa = _regular(0, 0, 6, 30)

        def vtx(j: int) -> Point:
            return _pt(0, 0, 1.0, 30 + 60 * j)

        def apex(j: int) -> Point:
            return _pt(0, 0, SQRT3, 60 * j)

        ring = tuple((vtx(j - 1), apex(j), vtx(j)) for j in range(6))
        free0 = (vtx(5), (SQRT3, -1.0), apex(0))
        free1 = tuple(_rot(p, 60) for p in free0)
        return (hexa,) + ring + (free0, free1), v1, v2

    raise ValueError(f"unknown tessellation: {kind!r}")


# Hand-encoded adjacency data, frozen; regenerate / cross-check with
# scripts/derive_adjacency.py.  Inter edges are canonical: the representative
# of {(a, b, o), (b, a, -o)} with the smallest (a, b, o) tuple.
_ADJACENCY: dict[str, tuple[tuple[tuple[int, int], ...],
                            tuple[tuple[int, int, Offset], ...]]] = {
    "4.4.4.4": (
        (),
        ((1, 1, (-1, 0)), (1, 1, (0, -1))),
    ),
    "6.6.6": (
        (),
        ((1, 1, (-1, 0)), (1, 1, (-1, 1)), (1, 1, (0, -1))),
    ),
    "3.3.3.3.3.3": (
        ((1, 2),),
        ((1, 2, (-1, 0)), (1, 2, (0, -1))),
    ),
    "3.3.3.4.4": (
        ((1, 2), (2, 3)),
        ((1, 1, (-1, 0)), (1, 3, (-1, -1)), (2, 3, (-1, 0))),
    ),
    "3.6.3.6": (
        ((1, 2), (1, 3)),
        ((1, 2, (-1, 0)), (1, 2, (0, -1)), (1, 3, (-1, 0)), (1, 3, (-1, 1))),
    ),
    "3.4.6.4": (
        ((1, 2), (1, 4), (1, 6), (2, 3), (3, 4), (4, 5), (5, 6)),
        ((1, 2, (-1, 0)), (1, 4, (0, -1)), (1, 6, (1, -1)),
         (2, 5, (1, -1)), (3, 6, (1, 0))),
    ),
    "4.8.8": (
        ((1, 2),),
        ((1, 2, (0, 1)), (1, 2, (1, 0)), (1, 2, (1, 1)),
         (2, 2, (-1, 0)), (2, 2, (0, -1))),
    ),
    "4.6.12": (
        ((1, 2), (1, 4), (1, 5), (1, 6), (2, 4), (2, 5)),
        ((1, 2, (-1, 0)), (1, 2, (0, -1)), (1, 3, (-1, -1)), (1, 3, (-1, 0)),
         (1, 3, (0, -1)), (1, 4, (-1, 0)), (1, 5, (0, -1)), (1, 6, (1, -1)),
         (2, 6, (1, 0)), (3, 4, (0, 1)), (3, 5, (1, 0)), (3, 6, (1, 0))),
    ),
    "3.12.12": (
        ((1, 2),),
        ((1, 1, (-1, 0)), (1, 1, (-1, 1)), (1, 1, (0, -1)),
         (1, 2, (-1, 0)), (1, 2, (0, -1)),
         (1, 3, (-1, -1)), (1, 3, (-1, 0)), (1, 3, (0, -1))),
    ),
    "3.3.4.3.4": (
        ((1, 3), (1, 5), (2, 3), (2, 6), (3, 4), (5, 6)),
        ((1, 4, (-1, 0)), (1, 6, (0, -1)), (2, 4, (0, 1)), (2, 5, (1, 0))),
    ),
    "3.3.3.3.6": (
        ((1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (2, 8), (3, 9)),
        ((2, 5, (1, 0)), (3, 6, (0, 1)), (4, 7, (-1, 1)), (4, 8, (-1, 1)),
         (5, 9, (-1, 0)), (6, 8, (-1, 0)), (7, 9, (0, -1))),
    ),
}

_SPEC_CACHE: dict[str, ClusterSpec] = {}


def cluster_spec(kind: str) -> ClusterSpec:
    """Cluster data for one tessellation kind (aliases accepted)."""
    name = normalize_kind(kind)
    if name not in _SPEC_CACHE:
        outlines, v1, v2 = _geometry(name)
        intra, inter = _ADJACENCY[name]
        tiles = tuple((k + 1, len(outline)) for k, outline in enumerate(outlines))
        _SPEC_CACHE[name] = ClusterSpec(
            kind=name, tiles=tiles, intra_edges=intra, inter_edges=inter,
            outlines=outlines, v1=v1, v2=v2,
        )
    return _SPEC_CACHE[name]


def validate_cluster(spec: ClusterSpec) -> list[str]:
    """Check every ClusterSpec invariant; returns diagnostics (empty = valid)."""
    diags: list[str] = []
    size = spec.cluster_size
    for k, s in spec.tiles:
        if not (1 <= k <= size):
            diags.append(f"tile index {k} out of range 1..{size}")
        if s < 3:
            diags.append(f"tile {k}: side count {s} < 3")
    indices = [k for k, _ in spec.tiles]
    if indices != list(range(1, size + 1)):
        diags.append("tile indices are not 1..cluster_size in order")
        return diags

    for a, b in spec.intra_edges:
        if not (1 <= a <= size and 1 <= b <= size):
            diags.append(f"intra edge ({a},{b}) references unknown tile")
        if a == b:
            diags.append(f"intra edge ({a},{b}) is a self pair")
    for a, b, (di, dj) in spec.inter_edges:
        if not (1 <= a <= size and 1 <= b <= size):
            diags.append(f"inter edge ({a},{b},{(di, dj)}) references unknown tile")
        if (di, dj) == (0, 0):
            diags.append(f"inter edge ({a},{b}) has zero offset")
        if di not in (-1, 0, 1) or dj not in (-1, 0, 1):
            diags.append(f"inter edge ({a},{b},{(di, dj)}): offset outside {{-1,0,1}}^2")

    sides = spec.sides
    counts = spec.incident_counts()
    for k, s in spec.tiles:
        if counts[k - 1] != s:
            diags.append(
                f"degree != sides for tile {k}: {counts[k - 1]} incidences, {s} sides")

    if sum(sides) % 2 != 0:
        diags.append("handshake violated: total side count per cluster is odd")

    # Vertex-configuration identity: n_s * s / c_s must be the same for every
    # polygon size s (it equals the number of tiling vertices per cluster).
    arrangement = vertex_arrangement(spec.kind)
    occur: dict[int, int] = {}
    for s in arrangement:
        occur[s] = occur.get(s, 0) + 1
    tile_count: dict[int, int] = {}
    for _, s in spec.tiles:
        tile_count[s] = tile_count.get(s, 0) + 1
    if set(occur) != set(tile_count):
        diags.append("ratio violates vertex-configuration identity: "
                     "tile sizes differ from the vertex arrangement")
    else:
        ratios = {s: (tile_count[s] * s, occur[s]) for s in occur}
        vals = {num * math.prod(d for _, d in ratios.values()) // den
                for num, den in ratios.values()}
        if len(vals) > 1:
            diags.append("ratio violates vertex-configuration identity")
    return diags
