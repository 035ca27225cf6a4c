"""Finite tile-adjacency multigraphs under open, toroidal and Klein boundaries.

A quotient graph has one vertex per tile of an m x n grid of clusters.
Vertex ids are row-major in (i, j, k), so witnesses and tie-breaking are
reproducible.  Adjacency is stored as a sorted neighbour list per vertex;
parallel edges repeat and an ordinary self-loop contributes two entries to
its own list (degree +2).

The Klein quotient of the triangular tessellation folds the 2n^2-vertex torus
in half: tile (i, j, 2) is identified with tile (n-1-i, n-1-j, 1) and each
vertex keeps the image of its own three-neighbour list.  A fold edge (an edge
mapped onto itself) therefore contributes a single self-entry, which keeps
every Klein graph exactly 3-regular for all n, odd or even.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .catalog import ClusterSpec, cluster_spec, normalize_kind

QUOTIENTS = ("open", "torus", "klein")


@dataclass(frozen=True)
class VertexRecord:
    id: int
    i: int
    j: int
    k: int
    sides: int


@dataclass(frozen=True)
class QuotientGraph:
    kind: str
    m: int
    n: int
    quotient: str
    vertices: tuple[VertexRecord, ...]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def cluster(self) -> ClusterSpec:
        return cluster_spec(self.kind)

    def edge_records(self) -> list[tuple[int, int]]:
        """Unordered edge list; parallel edges repeat, a self-entry of v in
        its own list yields one (v, v) record.  Ordinary self-loops (two
        entries) therefore produce two records."""
        records: list[tuple[int, int]] = []
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if v > u:
                    records.append((u, v))
                elif v == u:
                    records.append((u, u))
        # every (u, u) entry was seen once per list entry
        return sorted(records)

    def num_edge_records(self) -> int:
        return len(self.edge_records())


def _grid_vertices(spec: ClusterSpec, m: int, n: int) -> tuple[VertexRecord, ...]:
    size = spec.cluster_size
    recs = []
    for i in range(m):
        for j in range(n):
            for k, s in spec.tiles:
                vid = (i * n + j) * size + (k - 1)
                recs.append(VertexRecord(vid, i, j, k, s))
    return tuple(recs)


def _vid(n: int, size: int, i: int, j: int, k: int) -> int:
    return (i * n + j) * size + (k - 1)


def _check_dims(m: int, n: int) -> None:
    if m < 1 or n < 1:
        raise ValueError(f"grid dimensions must be >= 1, got {m} x {n}")


def build_torus(kind: str, m: int, n: int) -> QuotientGraph:
    """Toroidal quotient: inter-cluster offsets wrap modulo (m, n).

    Wrapped offsets that coincide create parallel edges; a tile adjacent to
    itself after wrapping gets a self-loop counting 2 toward its degree.
    """
    _check_dims(m, n)
    name = normalize_kind(kind)
    spec = cluster_spec(name)
    size = spec.cluster_size
    adj: list[list[int]] = [[] for _ in range(m * n * size)]
    for i in range(m):
        for j in range(n):
            for a, b in spec.intra_edges:
                u = _vid(n, size, i, j, a)
                v = _vid(n, size, i, j, b)
                adj[u].append(v)
                adj[v].append(u)
            for a, b, (di, dj) in spec.inter_edges:
                u = _vid(n, size, i, j, a)
                v = _vid(n, size, (i + di) % m, (j + dj) % n, b)
                adj[u].append(v)
                adj[v].append(u)
    return QuotientGraph(name, m, n, "torus", _grid_vertices(spec, m, n),
                         tuple(tuple(sorted(nbrs)) for nbrs in adj))


def build_open(kind: str, m: int, n: int) -> QuotientGraph:
    """Open m x n patch: inter-cluster edges leaving the grid are dropped."""
    _check_dims(m, n)
    name = normalize_kind(kind)
    spec = cluster_spec(name)
    size = spec.cluster_size
    adj: list[list[int]] = [[] for _ in range(m * n * size)]
    for i in range(m):
        for j in range(n):
            for a, b in spec.intra_edges:
                u = _vid(n, size, i, j, a)
                v = _vid(n, size, i, j, b)
                adj[u].append(v)
                adj[v].append(u)
            for a, b, (di, dj) in spec.inter_edges:
                i2, j2 = i + di, j + dj
                if 0 <= i2 < m and 0 <= j2 < n:
                    u = _vid(n, size, i, j, a)
                    v = _vid(n, size, i2, j2, b)
                    adj[u].append(v)
                    adj[v].append(u)
    return QuotientGraph(name, m, n, "open", _grid_vertices(spec, m, n),
                         tuple(tuple(sorted(nbrs)) for nbrs in adj))


def build_klein_3_6(n: int) -> QuotientGraph:
    """Klein-bottle quotient of the triangular-tessellation torus T(3^6, n).

    Vertex (i, j, 2) is merged into representative (n-1-i, n-1-j, 1), both
    taken modulo n; the result has n^2 vertices and is 3-regular as a
    multigraph (fold edges count once, see module docstring).
    """
    _check_dims(n, n)
    torus = build_torus("3.3.3.3.3.3", n, n)

    def rep(vid: int) -> int:
        r = torus.vertices[vid]
        if r.k == 1:
            return r.i * n + r.j
        return ((n - 1 - r.i) % n) * n + ((n - 1 - r.j) % n)

    adj: list[list[int]] = [[] for _ in range(n * n)]
    recs = []
    for i in range(n):
        for j in range(n):
            vid = (i * n + j) * 2  # torus id of (i, j, 1)
            kid = i * n + j
            recs.append(VertexRecord(kid, i, j, 1, 3))
            adj[kid] = sorted(rep(w) for w in torus.adjacency[vid])
    return QuotientGraph("3.3.3.3.3.3", n, n, "klein", tuple(recs),
                         tuple(tuple(nbrs) for nbrs in adj))


def build_graph(kind: str, m: int, n: int, quotient: str) -> QuotientGraph:
    """Dispatch on quotient name; klein requires kind 3^6 and m == n."""
    if quotient not in QUOTIENTS:
        raise ValueError(f"unknown quotient {quotient!r}, want one of {QUOTIENTS}")
    if quotient == "torus":
        return build_torus(kind, m, n)
    if quotient == "open":
        return build_open(kind, m, n)
    name = normalize_kind(kind)
    if name != "3.3.3.3.3.3":
        raise ValueError("the klein quotient is defined only for 3.3.3.3.3.3")
    if m != n:
        raise ValueError("the klein quotient requires m == n")
    return build_klein_3_6(n)


def degree_histogram(graph: QuotientGraph) -> dict[int, int]:
    """Multigraph degree -> vertex count (a self-loop contributes 2)."""
    return dict(sorted(Counter(len(nbrs) for nbrs in graph.adjacency).items()))


def torus_vertex_id(graph: QuotientGraph, i: int, j: int, k: int) -> int:
    """Vertex id of tile k of cluster (i, j) in a torus/open graph."""
    size = graph.cluster().cluster_size
    if graph.quotient == "klein":
        size = 1
        if k != 1:
            raise ValueError("klein representatives all have tile index 1")
        return (i % graph.n) * graph.n + (j % graph.n)
    return ((i % graph.m) * graph.n + (j % graph.n)) * size + (k - 1)


def lift_klein_selection(klein: QuotientGraph, selected_ids: list[int],
                         torus: QuotientGraph) -> list[int]:
    """Pull a Klein-quotient selection back to the torus of the same n.

    Each Klein representative (i, j, 1) expands to the torus pair
    (i, j, 1) and (n-1-i, n-1-j, 2); feasibility and density carry over
    because the torus constraints are exactly the folded ones.
    """
    if klein.quotient != "klein" or torus.quotient != "torus":
        raise ValueError("expected a klein graph and a torus graph")
    if torus.kind != "3.3.3.3.3.3" or torus.m != klein.n or torus.n != klein.n:
        raise ValueError("torus must be T(3^6, n) with the klein quotient's n")
    n = klein.n
    out: list[int] = []
    for kid in selected_ids:
        i, j = divmod(kid, n)
        out.append((i * n + j) * 2)  # (i, j, 1)
        i2, j2 = (n - 1 - i) % n, (n - 1 - j) % n
        out.append((i2 * n + j2) * 2 + 1)  # (i2, j2, 2)
    return sorted(out)
