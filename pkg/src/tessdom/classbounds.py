"""Aggregated class-LP upper bounds on half-domination density.

Summing the per-vertex inequality over all vertices of one tile class turns
the vertex system into a tiny LP in per-class density variables
y_a = (selected fraction of class a, relative to all tiles):

    (d_a - floor(d_a/2)) y_a + sum_b M[b][a] y_b  <=  d_a count_a / K
    0 <= y_a <= count_a / K                        (class capacity)

where M[b][a] is the number of class-a neighbours of a class-b vertex,
count_a the class size per cluster and K the cluster size.  Maximizing
sum_a y_a gives an exact rational upper bound on the density of any
half-dependent set on any torus quotient, hence on the limiting density.

The incidence data is derived from the built 3 x 3 torus rather than
hand-coded, so it inherits the catalog's validation.  Polygon-granularity
classes that are not neighbourhood-uniform (e.g. the triangles of 3.3.3.3.6,
some touching the hexagon and some not) trigger an automatic fallback to
position granularity, which is always uniform by translation transitivity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .catalog import cluster_spec, normalize_kind
from .halfdom import half_cap
from .quotient import build_torus
from .simplex import LinearSystem, lp_solve

_POLYGON_NAMES = {3: "triangle", 4: "square", 6: "hexagon", 8: "octagon",
                  12: "dodecagon"}

GRANULARITIES = ("polygon", "position")


def polygon_name(sides: int) -> str:
    return _POLYGON_NAMES.get(sides, f"{sides}-gon")


@dataclass(frozen=True)
class ClassIncidence:
    """Neighbour-class incidence of one tessellation's torus graph."""

    kind: str
    granularity: str
    labels: tuple[str, ...]
    counts: tuple[int, ...]    # tiles per cluster in each class
    degrees: tuple[int, ...]
    matrix: tuple[tuple[int, ...], ...]  # matrix[a][b]: class-b nbrs of a class-a vertex
    uniform: tuple[bool, ...]

    @property
    def cluster_size(self) -> int:
        return sum(self.counts)

    @property
    def all_uniform(self) -> bool:
        return all(self.uniform)


@dataclass(frozen=True)
class BoundReport:
    """Provenance-tagged rational density bound."""

    kind: str
    value: Fraction
    provenance: str  # aggregated-lp | pinned | weighted-lp | solver-exact
    certificate: dict = field(default_factory=dict)
    notes: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not (0 <= self.value <= 1):
            raise ValueError(f"density bound {self.value} outside [0, 1]")


def class_incidence(kind: str, granularity: str = "polygon") -> ClassIncidence:
    """Classify the 3 x 3 torus vertices and count neighbour classes.

    position: one class per tile index k (uniform by construction).
    polygon:  one class per polygon size; classes whose members disagree on
              their neighbour-class profile are flagged non-uniform.
    """
    if granularity not in GRANULARITIES:
        raise ValueError(f"granularity must be one of {GRANULARITIES}")
    name = normalize_kind(kind)
    spec = cluster_spec(name)
    graph = build_torus(name, 3, 3)

    if granularity == "position":
        keys = [k for k, _ in spec.tiles]
        labels = tuple(f"tile{k}" for k in keys)
        class_of_vertex = [rec.k for rec in graph.vertices]
        counts = tuple(1 for _ in keys)
        degrees = tuple(s for _, s in spec.tiles)
    else:
        keys = sorted({s for _, s in spec.tiles})
        labels = tuple(polygon_name(s) for s in keys)
        class_of_vertex = [rec.sides for rec in graph.vertices]
        counts = tuple(sum(1 for _, s in spec.tiles if s == key) for key in keys)
        degrees = tuple(keys)

    index = {key: a for a, key in enumerate(keys)}
    nclasses = len(keys)
    profiles: list[dict[int, tuple[int, ...]]] = [dict() for _ in range(nclasses)]
    for v, nbrs in enumerate(graph.adjacency):
        a = index[class_of_vertex[v]]
        prof = [0] * nclasses
        for w in nbrs:
            prof[index[class_of_vertex[w]]] += 1
        profiles[a][v] = tuple(prof)

    matrix = []
    uniform = []
    for a in range(nclasses):
        rows = set(profiles[a].values())
        uniform.append(len(rows) == 1)
        matrix.append(next(iter(sorted(rows))))
    return ClassIncidence(name, granularity, labels, counts, degrees,
                          tuple(matrix), tuple(uniform))


def class_lp_system(inc: ClassIncidence) -> tuple[LinearSystem, tuple[Fraction, ...]]:
    """The aggregated LP (rows + capacity upper bounds) and its capacities."""
    if not inc.all_uniform:
        raise ValueError("aggregated rows need uniform classes")
    K = inc.cluster_size
    nc = len(inc.labels)
    caps = tuple(Fraction(c, K) for c in inc.counts)
    rows = []
    for a in range(nc):
        d = inc.degrees[a]
        coeffs = [Fraction(inc.matrix[b][a]) for b in range(nc)]
        coeffs[a] += d - half_cap(d)
        rows.append((coeffs, Fraction(d * inc.counts[a], K)))
    return LinearSystem.make(nc, rows, upper=list(caps)), caps


def aggregated_lp_bound(kind: str, granularity: str = "polygon") -> BoundReport:
    """Exact rational upper bound on the half-domination density of one kind.

    Falls back from polygon to position granularity when a polygon class is
    not uniform, recording the fallback in the report notes.
    """
    name = normalize_kind(kind)
    notes: list[str] = []
    inc = class_incidence(name, granularity)
    if granularity == "polygon" and not inc.all_uniform:
        flagged = [lab for lab, u in zip(inc.labels, inc.uniform) if not u]
        notes.append("non-uniform polygon classes "
                     f"({', '.join(flagged)}); fell back to position granularity")
        inc = class_incidence(name, "position")
    system, _ = class_lp_system(inc)
    sol = lp_solve(system, [1] * len(inc.labels))
    cert = {lab: x for lab, x in zip(inc.labels, sol.x)}
    cert["granularity"] = inc.granularity
    return BoundReport(kind=name, value=sol.value, provenance="aggregated-lp",
                       certificate=cert, notes=tuple(notes))
