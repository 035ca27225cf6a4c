import random

import pytest

from tessdom.catalog import catalog, cluster_spec
from tessdom.halfdom import Selection
from tessdom.quotient import build_klein_3_6, build_open, build_torus
from tessdom.solver import _add, _can_add, _neighbor_tables


def small_instances(max_vertices=20, include_klein=True):
    """All catalog quotient graphs with at most max_vertices vertices."""
    out = []
    for kind in catalog():
        size = cluster_spec(kind).cluster_size
        for m in range(1, 5):
            for n in range(1, 5):
                if m * n * size <= max_vertices:
                    out.append((kind, m, n, "torus"))
                    out.append((kind, m, n, "open"))
    if include_klein:
        for n in (2, 3, 4):
            out.append(("3.3.3.3.3.3", n, n, "klein"))
    return out


def build(kind, m, n, quotient):
    if quotient == "klein":
        return build_klein_3_6(n)
    if quotient == "torus":
        return build_torus(kind, m, n)
    return build_open(kind, m, n)


def random_feasible_selection(graph, rng: random.Random) -> Selection:
    """Greedy over a random order, stopping early at a random quota."""
    adj, caps, selfm, uniq = _neighbor_tables(graph)
    order = list(range(graph.num_vertices))
    rng.shuffle(order)
    quota = rng.randrange(graph.num_vertices + 1)
    cnt = [0] * graph.num_vertices
    selected = [False] * graph.num_vertices
    taken = 0
    for v in order:
        if taken >= quota:
            break
        if _can_add(v, cnt, selected, caps, selfm, uniq):
            _add(v, cnt, selected, adj)
            taken += 1
    return Selection(graph, tuple(selected))


@pytest.fixture
def rng():
    return random.Random(20240817)
