"""tessdom: exact half-domination densities on plane-tessellation tile graphs.

Builds the tile-adjacency graphs of the 11 regular and semi-regular
edge-to-edge tessellations under open, toroidal and Klein boundary
treatment, maximizes half-dependent sets exactly, and derives exact
rational density upper bounds (aggregated class LPs, pinned and weighted
bounds) together with deficiency statistics.
"""

from .catalog import (CANONICAL_ORDER, ClusterSpec, catalog, cluster_spec,
                      normalize_kind, validate_cluster, vertex_arrangement)
from .classbounds import (BoundReport, ClassIncidence, aggregated_lp_bound,
                          class_incidence)
from .fileio import (FormatError, deserialize, graph_from_text, graph_to_text,
                     selection_from_text, selection_to_text, serialize)
from .halfdom import (DeficiencyReport, Selection, constraint_system,
                      deficiency, density, is_half_dependent)
from .quotient import (QuotientGraph, VertexRecord, build_graph,
                       build_klein_3_6, build_open, build_torus,
                       degree_histogram, lift_klein_selection,
                       torus_vertex_id)
from .render import render_svg
from .simplex import LinearSystem, LpSolution, lp_optimum, lp_solve
from .solver import (OptResult, density_table, pinned_density_bound,
                     solve_exact, weighted_density_bound)
from .tables import TableSpec, reproduce_table

__version__ = "0.1.0"

__all__ = [
    "CANONICAL_ORDER", "BoundReport", "ClassIncidence", "ClusterSpec",
    "DeficiencyReport", "FormatError", "LinearSystem", "LpSolution",
    "OptResult", "QuotientGraph", "Selection", "TableSpec", "VertexRecord",
    "aggregated_lp_bound", "build_graph", "build_klein_3_6", "build_open",
    "build_torus", "catalog", "class_incidence", "cluster_spec",
    "constraint_system", "deficiency", "degree_histogram", "density",
    "density_table", "deserialize", "graph_from_text", "graph_to_text",
    "is_half_dependent", "lift_klein_selection", "lp_optimum", "lp_solve",
    "normalize_kind", "pinned_density_bound", "render_svg",
    "reproduce_table", "selection_from_text", "selection_to_text",
    "serialize", "solve_exact", "torus_vertex_id", "validate_cluster",
    "vertex_arrangement", "weighted_density_bound",
]
