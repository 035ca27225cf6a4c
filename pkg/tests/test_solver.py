import random
from fractions import Fraction

import pytest

from tessdom.halfdom import Selection, constraint_system, is_half_dependent
from tessdom.quotient import build_klein_3_6, build_torus
from tessdom.simplex import lp_optimum
from tessdom.solver import (density_table, pinned_density_bound, solve_exact,
                            weighted_density_bound)

from conftest import build, small_instances


def test_triangular_2x2_optimum():
    res = solve_exact(build_torus("3.3.3.3.3.3", 2, 2))
    assert res.best_cardinality == 4
    assert res.density == Fraction(1, 2)
    assert res.optimal


def test_rhombitrihexagonal_1x1_optimum():
    res = solve_exact(build_torus("3.4.6.4", 1, 1))
    assert res.best_cardinality == 3
    assert res.density == Fraction(1, 2)
    assert res.optimal


def test_klein_4_optimum_and_ten_infeasible():
    g = build_klein_3_6(4)
    res = solve_exact(g, method="brute")
    assert res.best_cardinality == 9 and res.optimal
    assert res.density == Fraction(9, 16)


def test_brute_cap_enforced():
    g = build_torus("3.3.3.3.3.3", 4, 4)  # 32 vertices
    with pytest.raises(ValueError):
        solve_exact(g, method="brute")
    with pytest.raises(ValueError):
        solve_exact(g, method="nonsense")


def test_forced_zero_validation():
    g = build_torus("4.4.4.4", 2, 2)
    with pytest.raises(ValueError):
        solve_exact(g, forced_zero=[99])


def test_witness_is_feasible_and_matches_cardinality():
    for kind, m, n, quot in [("3.6.3.6", 2, 2, "torus"),
                             ("4.8.8", 2, 2, "torus"),
                             ("3.3.3.3.3.3", 3, 3, "klein")]:
        g = build(kind, m, n, quot)
        res = solve_exact(g, time_limit=60)
        assert is_half_dependent(g, res.witness)
        assert res.witness.count == res.best_cardinality


def test_deterministic_witness_reproducible():
    g = build_torus("3.3.3.4.4", 3, 3)
    r1 = solve_exact(g, method="bnb", deterministic=True, time_limit=60)
    r2 = solve_exact(g, method="bnb", deterministic=True, time_limit=60)
    assert r1.witness.ids() == r2.witness.ids()
    assert r1.best_cardinality == r2.best_cardinality


def test_brute_returns_lexicographically_smallest_witness():
    g = build_torus("3.6.3.6", 2, 2)
    res = solve_exact(g, method="brute")
    # re-enumerate: no maximum selection is lexicographically smaller
    n = g.num_vertices
    best = list(res.witness.ids())
    for mask in range(1 << n):
        ids = [v for v in range(n) if (mask >> v) & 1]
        if len(ids) != res.best_cardinality or ids >= best:
            continue
        assert not is_half_dependent(g, Selection.from_ids(g, ids))


def test_target_mode_stops_early():
    g = build_torus("3.3.3.3.3.3", 4, 4)
    res = solve_exact(g, method="bnb", target=Fraction(1, 2), time_limit=60)
    assert res.density >= Fraction(1, 2)
    assert res.status == "lower_bound_only"


def test_oracle_equivalence_small_sample(rng):
    instances = small_instances(max_vertices=18)
    rng.shuffle(instances)
    for kind, m, n, quot in instances[:12]:
        g = build(kind, m, n, quot)
        rb = solve_exact(g, method="brute")
        rn = solve_exact(g, method="bnb", time_limit=60)
        assert rb.best_cardinality == rn.best_cardinality, (kind, m, n, quot)
        assert rb.optimal and rn.optimal
        relax = lp_optimum(constraint_system(g), [1] * g.num_vertices)
        assert relax >= rb.best_cardinality


def test_bnb_without_lp_bound_agrees():
    for kind, m, n in [("3.3.3.3.3.3", 3, 3), ("3.6.3.6", 2, 2)]:
        g = build_torus(kind, m, n)
        with_lp = solve_exact(g, method="bnb", time_limit=60)
        without = solve_exact(g, method="bnb", time_limit=60, use_lp=False)
        assert with_lp.best_cardinality == without.best_cardinality
        assert with_lp.optimal and without.optimal


def test_divisibility_monotonicity_2_divides_4():
    r2 = solve_exact(build_torus("3.3.3.3.3.3", 2, 2))
    r4 = solve_exact(build_torus("3.3.3.3.3.3", 4, 4), time_limit=120)
    assert r2.optimal and r4.optimal
    assert r2.density <= r4.density


def test_pinned_bound_reduces_to_plain_solve():
    g = build_torus("3.3.3.3.3.3", 2, 2)
    plain = solve_exact(g)
    rep = pinned_density_bound(g, [])
    assert rep.value == plain.density
    assert rep.provenance == "pinned"


def test_pinned_bound_rejects_degenerate_inputs():
    g = build_torus("4.4.4.4", 2, 2)
    with pytest.raises(ValueError):
        pinned_density_bound(g, range(4))
    with pytest.raises(ValueError):
        pinned_density_bound(g, [17])


def test_pinned_bound_respects_zero_set():
    g = build_torus("3.3.3.3.3.3", 2, 2)
    rep = pinned_density_bound(g, [0, 1])
    assert not set(rep.certificate["witness_ids"]) & {0, 1}
    assert rep.value == Fraction(rep.certificate["cardinality"], 6)


def test_weighted_bound_uniform_weights_equal_lp_over_n():
    g = build_torus("6.6.6", 3, 3)
    rep = weighted_density_bound(g, [1] * 9)
    assert rep.value == Fraction(2, 3)
    assert rep.provenance == "weighted-lp"


def test_weighted_bound_single_vertex_weight():
    g = build_torus("6.6.6", 2, 2)
    w = [0] * 4
    w[0] = 1
    rep = weighted_density_bound(g, w)
    assert rep.value == 1  # x_0 = 1 alone satisfies its row


def test_weighted_bound_input_validation():
    g = build_torus("4.4.4.4", 2, 2)
    with pytest.raises(ValueError):
        weighted_density_bound(g, [0, 0, 0, 0])
    with pytest.raises(ValueError):
        weighted_density_bound(g, [1, -1, 0, 0])
    with pytest.raises(ValueError):
        weighted_density_bound(g, [1, 1])


def test_density_table_runs_cells():
    cells = density_table("3.3.3.3.3.3", "torus", [2, 3], time_limit=60)
    assert [c.density for c in cells] == [Fraction(1, 2), Fraction(5, 9)]
    assert all(c.status == "optimal" for c in cells)
    assert [c.size for c in cells] == [(2, 2), (3, 3)]


def test_optimum_dominates_1000_random_greedy_runs(rng):
    from tessdom.solver import _add, _can_add, _neighbor_tables
    g = build_torus("3.3.3.4.4", 2, 2)
    res = solve_exact(g, method="brute")
    adj, caps, selfm, uniq = _neighbor_tables(g)
    best_greedy = 0
    for _ in range(1000):
        order = list(range(g.num_vertices))
        rng.shuffle(order)
        cnt = [0] * g.num_vertices
        sel = [False] * g.num_vertices
        for v in order:
            if _can_add(v, cnt, sel, caps, selfm, uniq):
                _add(v, cnt, sel, adj)
        best_greedy = max(best_greedy, sum(sel))
    assert res.best_cardinality >= best_greedy


def test_budget_expiry_returns_lower_bound_status():
    # large enough that a hundredth of a second cannot close the search
    g = build_torus("3.3.3.3.3.3", 7, 7)
    res = solve_exact(g, method="bnb", time_limit=0.01)
    assert res.status == "lower_bound_only"
    assert is_half_dependent(g, res.witness)
