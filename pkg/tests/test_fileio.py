from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tessdom.classbounds import aggregated_lp_bound
from tessdom.fileio import (FormatError, bound_from_text, bound_to_text,
                            deserialize, format_fraction, graph_from_text,
                            graph_to_text, parse_fraction,
                            selection_from_text, selection_to_text, serialize)
from tessdom.halfdom import Selection, density, is_half_dependent
from tessdom.quotient import build_klein_3_6, build_torus
from tessdom.solver import solve_exact

from conftest import build, random_feasible_selection, small_instances


def test_graph_round_trip():
    g = build_torus("3.6.3.6", 2, 2)
    assert graph_from_text(graph_to_text(g)) == g


def test_klein_graph_round_trip_preserves_fold_entries():
    for n in (1, 2, 3, 5):
        g = build_klein_3_6(n)
        assert graph_from_text(graph_to_text(g)) == g


@settings(deadline=None, max_examples=30)
@given(st.sampled_from(small_instances(max_vertices=30)),
       st.randoms(use_true_random=False))
def test_round_trips_hold_generally(instance, pyrng):
    g = build(*instance)
    assert deserialize(serialize(g)) == g
    sel = random_feasible_selection(g, pyrng)
    assert deserialize(serialize(sel), graph=g) == sel


def test_solver_witness_selection_round_trip():
    g = build_torus("3.3.3.3.3.3", 4, 4)
    res = solve_exact(g, time_limit=60)
    text = selection_to_text(res.witness)
    sel = selection_from_text(text, g)
    assert sel == res.witness
    assert density(g, sel) == Fraction(9, 16)
    assert is_half_dependent(g, sel)


def test_selection_header_mismatch_rejected():
    g = build_torus("4.4.4.4", 2, 2)
    other = build_torus("4.4.4.4", 2, 3)
    text = selection_to_text(Selection.from_ids(g, [0, 1]))
    with pytest.raises(FormatError, match="does not match"):
        selection_from_text(text, other)


def test_selection_id_out_of_range():
    g = build_torus("4.4.4.4", 2, 2)
    text = selection_to_text(Selection.from_ids(g, [0])).replace("s 0", "s 9")
    with pytest.raises(FormatError, match="out of range"):
        selection_from_text(text, g)


def test_edge_endpoint_out_of_range():
    g = build_torus("4.4.4.4", 2, 2)
    text = graph_to_text(g).replace("e 0 1", "e 0 99")
    with pytest.raises(FormatError, match="out of range"):
        graph_from_text(text)


def test_malformed_fraction_reports_location():
    with pytest.raises(FormatError, match="line 7"):
        parse_fraction("7/0", line_no=7)
    with pytest.raises(FormatError, match="malformed"):
        parse_fraction("x/y", line_no=1)


def test_fraction_formatting_lowest_terms():
    assert format_fraction(Fraction(18, 32)) == "9/16"
    assert format_fraction(Fraction(4, 2)) == "2"
    assert parse_fraction("9/16") == Fraction(9, 16)
    assert parse_fraction("-3") == -3


def test_bound_report_round_trip():
    rep = aggregated_lp_bound("3.4.6.4")
    back = bound_from_text(bound_to_text(rep))
    assert back.value == rep.value == Fraction(19, 30)
    assert back.provenance == "aggregated-lp"
    assert back.certificate["triangle"] == Fraction(1, 5)


def test_wrong_header_rejected():
    with pytest.raises(FormatError, match="header"):
        graph_from_text("tessdom-selection/1\nkind 4.4.4.4\n")
    with pytest.raises(FormatError):
        deserialize("who knows\n")


def test_serialize_dispatch_rejects_unknown():
    with pytest.raises(TypeError):
        serialize(42)


def test_deserialize_selection_requires_graph():
    g = build_torus("4.4.4.4", 2, 2)
    text = selection_to_text(Selection.empty(g))
    with pytest.raises(ValueError):
        deserialize(text)


def test_truncated_document_reports_line():
    g = build_torus("4.4.4.4", 2, 2)
    text = "\n".join(graph_to_text(g).splitlines()[:-2]) + "\n"
    with pytest.raises(FormatError, match="line"):
        graph_from_text(text)
