from fractions import Fraction

import pytest

from tessdom.catalog import catalog, cluster_spec
from tessdom.classbounds import (aggregated_lp_bound, class_incidence,
                                 class_lp_system)
from tessdom.simplex import LinearSystem, lp_optimum

EXPECTED_BOUNDS = {
    "6.6.6": Fraction(2, 3),
    "3.3.3.3.3.3": Fraction(3, 5),
    "3.3.3.4.4": Fraction(13, 21),
    "3.6.3.6": Fraction(2, 3),
    "3.4.6.4": Fraction(19, 30),
    "3.12.12": Fraction(7, 9),
    # derived with the same machinery; equal to the sharp witnesses
    "4.4.4.4": Fraction(2, 3),
    "4.8.8": Fraction(3, 4),
    "4.6.12": Fraction(5, 6),
    "3.3.4.3.4": Fraction(2, 3),
    "3.3.3.3.6": Fraction(2, 3),
}


@pytest.mark.parametrize("kind", sorted(EXPECTED_BOUNDS))
def test_aggregated_bounds(kind):
    assert aggregated_lp_bound(kind).value == EXPECTED_BOUNDS[kind]


def test_certificates_match_published_optimizers():
    cert = aggregated_lp_bound("3.3.3.4.4").certificate
    assert cert["square"] == Fraction(5, 21)
    assert cert["triangle"] == Fraction(8, 21)
    cert = aggregated_lp_bound("3.4.6.4").certificate
    assert (cert["triangle"], cert["square"], cert["hexagon"]) == \
        (Fraction(1, 5), Fraction(3, 10), Fraction(2, 15))
    cert = aggregated_lp_bound("3.6.3.6").certificate
    assert cert["triangle"] == Fraction(2, 3) and cert["hexagon"] == 0


def test_polygon_incidences():
    inc = class_incidence("3.3.3.4.4", "polygon")
    by = dict(zip(inc.labels, inc.matrix))
    assert by["square"] == (2, 2)  # (triangle nbrs, square nbrs) in label order
    idx = {lab: i for i, lab in enumerate(inc.labels)}
    assert inc.matrix[idx["square"]][idx["triangle"]] == 2
    assert inc.matrix[idx["square"]][idx["square"]] == 2
    assert inc.matrix[idx["triangle"]][idx["square"]] == 1
    assert inc.matrix[idx["triangle"]][idx["triangle"]] == 2
    assert inc.counts[idx["square"]] == 1 and inc.counts[idx["triangle"]] == 2

    inc = class_incidence("3.6.3.6", "polygon")
    idx = {lab: i for i, lab in enumerate(inc.labels)}
    assert inc.matrix[idx["hexagon"]][idx["triangle"]] == 6
    assert inc.matrix[idx["triangle"]][idx["hexagon"]] == 3
    assert inc.matrix[idx["triangle"]][idx["triangle"]] == 0


def test_snub_trihexagonal_triangles_are_non_uniform():
    inc = class_incidence("3.3.3.3.6", "polygon")
    idx = {lab: i for i, lab in enumerate(inc.labels)}
    assert not inc.uniform[idx["triangle"]]
    assert inc.uniform[idx["hexagon"]]
    rep = aggregated_lp_bound("3.3.3.3.6", "polygon")
    assert rep.certificate["granularity"] == "position"
    assert any("fell back" in note for note in rep.notes)


@pytest.mark.parametrize("kind", catalog())
@pytest.mark.parametrize("granularity", ["polygon", "position"])
def test_incidence_identities(kind, granularity):
    inc = class_incidence(kind, granularity)
    if granularity == "position":
        assert inc.all_uniform  # translation transitivity
    nc = len(inc.labels)
    for a in range(nc):
        if inc.uniform[a]:
            assert sum(inc.matrix[a]) == inc.degrees[a]
        for b in range(nc):
            if inc.uniform[a] and inc.uniform[b]:
                # edges counted from both sides agree
                assert inc.counts[a] * inc.matrix[a][b] == \
                    inc.counts[b] * inc.matrix[b][a]


@pytest.mark.parametrize("kind", catalog())
def test_position_bound_never_weaker_than_polygon(kind):
    pos = aggregated_lp_bound(kind, "position").value
    poly_inc = class_incidence(kind, "polygon")
    if poly_inc.all_uniform:
        poly = aggregated_lp_bound(kind, "polygon").value
        assert pos <= poly


@pytest.mark.parametrize("kind", catalog())
def test_position_rows_aggregate_to_polygon_rows(kind):
    """Summing position-class rows within one polygon class reproduces the
    polygon-class rows exactly (uniform kinds only)."""
    poly = class_incidence(kind, "polygon")
    if not poly.all_uniform:
        return
    pos = class_incidence(kind, "position")
    spec = cluster_spec(kind)
    sides_of_tile = dict(spec.tiles)
    poly_sys, _ = class_lp_system(poly)
    pos_sys, _ = class_lp_system(pos)
    poly_idx = {lab: i for i, lab in enumerate(poly.labels)}
    from tessdom.classbounds import polygon_name
    group_of = [poly_idx[polygon_name(sides_of_tile[k + 1])]
                for k in range(len(pos.labels))]
    nclasses = len(poly.labels)
    for a_poly in range(nclasses):
        members = [k for k in range(len(pos.labels)) if group_of[k] == a_poly]
        pcoeffs, prhs = poly_sys.rows[a_poly]
        rhs = Fraction(0)
        summed = [Fraction(0)] * len(pos.labels)
        for k in members:
            coeffs, r = pos_sys.rows[k]
            rhs += r
            for k2, c in enumerate(coeffs):
                summed[k2] += c
        assert rhs == prhs
        # the summed row is constant on each polygon class and equals the
        # polygon-row coefficient there, so it IS the polygon row in the
        # aggregated variables
        for k2, c in enumerate(summed):
            assert c == pcoeffs[group_of[k2]]


def test_capacity_rows_are_required_for_truncated_hexagonal():
    inc = class_incidence("3.12.12", "polygon")
    system, caps = class_lp_system(inc)
    idx = {lab: i for i, lab in enumerate(inc.labels)}
    rep = aggregated_lp_bound("3.12.12")
    assert rep.certificate["triangle"] == caps[idx["triangle"]] == Fraction(2, 3)
    # without the capacity upper bounds the LP exceeds 7/9
    uncapped = LinearSystem.make(
        system.num_vars, [(list(c), r) for c, r in system.rows])
    assert lp_optimum(uncapped, [1] * system.num_vars) > Fraction(7, 9)


def test_bound_report_fields():
    rep = aggregated_lp_bound("6.6.6")
    assert rep.provenance == "aggregated-lp"
    assert 0 <= rep.value <= 1
    assert rep.kind == "6.6.6"


@pytest.mark.parametrize("kind", catalog())
def test_aggregated_bound_dominates_solved_torus_densities(kind):
    from tessdom.quotient import build_torus
    from tessdom.solver import solve_exact
    bound = aggregated_lp_bound(kind).value
    size = cluster_spec(kind).cluster_size
    for m, n in [(1, 1), (2, 2), (1, 3), (2, 3)]:
        if m * n * size > 30:
            continue
        res = solve_exact(build_torus(kind, m, n), method="brute")
        assert res.optimal and res.density <= bound, (kind, m, n)
