"""Half-domination model on quotient graphs.

A selection S is half-dependent when every selected vertex v has at most
floor(d(v)/2) selected neighbours, counted with edge multiplicity; d(v) is
the multigraph degree.  A self-loop on a selected vertex counts itself
twice, a Klein fold entry once (see tessdom.quotient).

The per-vertex inequality

    (d(v) - floor(d(v)/2)) x_v + sum_{w ~ v} x_w <= d(v)

is equivalent, over 0/1 assignments, to the half-dependence condition: for
x_v = 1 it says the selected-neighbour count stays below the cap, for
x_v = 0 it is vacuous.  ``constraint_system`` emits exactly these rows.

The deficiency of a vertex is its slack below the cap (selected) or below
full degree (unselected); the global deficiency is the vertex average.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .quotient import QuotientGraph
from .simplex import LinearSystem


@dataclass(frozen=True)
class Selection:
    graph: QuotientGraph
    selected: tuple[bool, ...]

    def __post_init__(self) -> None:
        if len(self.selected) != self.graph.num_vertices:
            raise ValueError(
                f"selection length {len(self.selected)} != vertex count "
                f"{self.graph.num_vertices}")

    @staticmethod
    def from_ids(graph: QuotientGraph, ids) -> "Selection":
        bits = [False] * graph.num_vertices
        for v in ids:
            if not 0 <= v < graph.num_vertices:
                raise ValueError(f"vertex id {v} out of range")
            bits[v] = True
        return Selection(graph, tuple(bits))

    @staticmethod
    def empty(graph: QuotientGraph) -> "Selection":
        return Selection(graph, (False,) * graph.num_vertices)

    def ids(self) -> tuple[int, ...]:
        return tuple(v for v, b in enumerate(self.selected) if b)

    @property
    def count(self) -> int:
        return sum(self.selected)


@dataclass(frozen=True)
class DeficiencyReport:
    delta: tuple[int, ...]
    global_delta: Fraction

    @property
    def max_delta(self) -> int:
        return max(self.delta)


def _check_match(graph: QuotientGraph, sel: Selection) -> None:
    if sel.graph is not graph and sel.graph != graph:
        raise ValueError("selection belongs to a different graph")


def half_cap(degree: int) -> int:
    """Selected-neighbour cap of a degree-d vertex; the single code point
    where the half-domination threshold floor(d/2) lives."""
    return degree // 2


def caps(graph: QuotientGraph) -> list[int]:
    """Half-domination caps per vertex."""
    return [half_cap(len(nbrs)) for nbrs in graph.adjacency]


def selected_neighbor_counts(graph: QuotientGraph, sel: Selection) -> list[int]:
    """Selected-neighbour multiplicity per vertex (self entries included)."""
    _check_match(graph, sel)
    bits = sel.selected
    return [sum(1 for w in nbrs if bits[w]) for nbrs in graph.adjacency]


def is_half_dependent(graph: QuotientGraph, sel: Selection) -> bool:
    _check_match(graph, sel)
    bits = sel.selected
    for v, nbrs in enumerate(graph.adjacency):
        if not bits[v]:
            continue
        cap = half_cap(len(nbrs))
        cnt = 0
        for w in nbrs:
            if bits[w]:
                cnt += 1
                if cnt > cap:
                    return False
    return True


def density(graph: QuotientGraph, sel: Selection) -> Fraction:
    """|selected| / |V| in lowest terms."""
    _check_match(graph, sel)
    if graph.num_vertices == 0:
        raise ValueError("density of an empty graph is undefined")
    return Fraction(sel.count, graph.num_vertices)


def deficiency(graph: QuotientGraph, sel: Selection) -> DeficiencyReport:
    """Per-vertex slack delta_v and global average Delta.

    delta_v = (selected-neighbour count) - floor(d(v)/2)  if v is selected,
              (selected-neighbour count) - d(v)           otherwise.

    A selection is half-dependent iff max_v delta_v <= 0, and for feasible
    selections Delta depends only on the selected degree profile:
    Delta |V| = sum_{v in S} (d(v) + ceil(d(v)/2)) - sum_v d(v).
    """
    counts = selected_neighbor_counts(graph, sel)
    bits = sel.selected
    delta = []
    for v, nbrs in enumerate(graph.adjacency):
        d = len(nbrs)
        delta.append(counts[v] - (half_cap(d) if bits[v] else d))
    total = sum(delta)
    return DeficiencyReport(tuple(delta),
                            Fraction(total, graph.num_vertices))


def constraint_system(graph: QuotientGraph) -> LinearSystem:
    """One row per vertex; 0/1 points satisfy it iff half-dependent.

    Row v: (d(v) - floor(d(v)/2)) x_v + sum over adjacency entries of x_w
    <= d(v).  Self entries land on the x_v coefficient, so an ordinary
    self-loop adds 2 x_v and a Klein fold entry adds x_v.
    """
    n = graph.num_vertices
    rows = []
    for v, nbrs in enumerate(graph.adjacency):
        d = len(nbrs)
        coeffs = [0] * n
        coeffs[v] = d - half_cap(d)
        for w in nbrs:
            coeffs[w] += 1
        rows.append((coeffs, d))
    return LinearSystem.make(n, rows, integral=[True] * n)
