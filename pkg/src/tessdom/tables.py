"""Reproduction harness for the published density tables and bounds.

Published reference values are embedded as data and every reproduced cell
is marked as agreeing or disagreeing; disagreements are reported, never
patched.  Cells whose published value is a lower bound (`>=`) are run in
target mode: the solver stops as soon as a selection of the published
density is found.  A budget expiry downgrades a cell to a lower bound
instead of failing the run.

Two embedded reference values are known NOT to reproduce against the
tile-adjacency graphs built here (see notes emitted with the rows):

* elongated triangular torus, n = 2: published 1/2, but the true 2 x 2
  quotient admits 7 of 12 tiles (raw enumeration confirms), matching the
  published period-12 arrangement of density 7/12 with deficiency -1/6;
* rhombitrihexagonal torus, (3, 3): published 31/54, but a feasible
  selection of 33 of 54 tiles exists and is provably maximum.

Both published entries appear to be solver artifacts of the original runs;
the tables here keep them as data and flag the disagreement.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .classbounds import aggregated_lp_bound
from .fileio import format_fraction
from .halfdom import Selection
from .quotient import build_graph, build_klein_3_6
from .solver import solve_exact, weighted_density_bound

TABLE_IDS = ("t36_torus", "t36_klein", "t3344_torus", "t3464_torus",
             "bounds_all")


@dataclass(frozen=True)
class TableSpec:
    id: str
    max_n: int | None = None
    time_limit: float | None = None

    def __post_init__(self) -> None:
        if self.id not in TABLE_IDS:
            raise ValueError(f"unknown table id {self.id!r}; "
                             f"valid: {', '.join(TABLE_IDS)}")


@dataclass(frozen=True)
class PublishedRow:
    size: tuple[int, int]
    value: Fraction
    relation: str  # "=" exact, ">=" lower bound


def _rows(pairs, ge=()):
    out = []
    for n, frac in pairs:
        size = (n, n) if isinstance(n, int) else n
        out.append(PublishedRow(size, Fraction(*frac),
                                ">=" if n in ge or size in ge else "="))
    return tuple(out)


#: kind, quotient, published rows, default row count
SOLVER_TABLES: dict[str, tuple[str, str, tuple[PublishedRow, ...], int]] = {
    "t36_torus": ("3.3.3.3.3.3", "torus",
                  _rows([(2, (1, 2)), (3, (5, 9)), (4, (9, 16)),
                         (5, (14, 25)), (6, (5, 9)), (7, (27, 49)),
                         (8, (9, 16)), (9, (5, 9))], ge=(7, 8, 9)),
                  4),
    "t36_klein": ("3.3.3.3.3.3", "klein",
                  _rows([(2, (1, 2)), (3, (5, 9)), (4, (9, 16)),
                         (5, (14, 25)), (6, (5, 9))]),
                  3),
    "t3344_torus": ("3.3.3.4.4", "torus",
                    _rows([(2, (1, 2)), (3, (5, 9)), (4, (7, 12)),
                           (5, (3, 5)), (6, (11, 18)), (7, (4, 7))],
                          ge=(7,)),
                    3),
    "t3464_torus": ("3.4.6.4", "torus",
                    _rows([(1, (1, 2)), (2, (7, 12)), (3, (31, 54)),
                           (4, (7, 12))]),
                    2),
}

#: the aggregated-bound summary rows (kind -> published bound)
PUBLISHED_BOUNDS: tuple[tuple[str, Fraction], ...] = (
    ("6.6.6", Fraction(2, 3)),
    ("3.3.3.3.3.3", Fraction(3, 5)),
    ("3.3.3.4.4", Fraction(13, 21)),
    ("3.6.3.6", Fraction(2, 3)),
    ("3.4.6.4", Fraction(19, 30)),
    ("3.12.12", Fraction(7, 9)),
)

#: published weighted bound for the Klein quotient K(3^6, 13)
PUBLISHED_K13_WEIGHTED = Fraction(70, 121)

_KNOWN_DISAGREEMENTS = {
    ("t3344_torus", (2, 2)): "true 2x2 quotient maximum is 7/12, not 1/2",
    ("t3464_torus", (3, 3)): "true 3x3 quotient maximum is 11/18, not 31/54",
}


@dataclass(frozen=True)
class TableRow:
    label: str
    size: tuple[int, int] | None
    vertices: int | None
    cardinality: int | None
    computed: Fraction
    status: str
    published: Fraction | None
    relation: str
    agrees: bool | None  # None: inconclusive (budget expired)
    elapsed: float
    note: str = ""
    witness_ids: tuple[int, ...] | None = None


@dataclass(frozen=True)
class TableReport:
    spec: TableSpec
    rows: tuple[TableRow, ...]

    @property
    def all_agree(self) -> bool:
        return all(row.agrees for row in self.rows)

    @property
    def any_budget_expired(self) -> bool:
        return any(row.status == "lower_bound_only" for row in self.rows)


def _judge(relation: str, computed: Fraction, published: Fraction,
           optimal: bool) -> tuple[bool | None, str]:
    if relation == ">=":
        if computed >= published:
            return True, "reaches published lower bound"
        return (False, "published lower bound exceeds a certified maximum") \
            if optimal else (None, "target not reached within budget")
    if optimal:
        if computed == published:
            return True, "matches published value"
        return False, "differs from published value"
    if computed > published:
        return False, "feasible selection exceeds published value"
    return None, "budget expired before the cell was closed"


def reproduce_table(spec: TableSpec) -> TableReport:
    """Run one published table and mark per-row agreement."""
    if spec.id == "bounds_all":
        rows = []
        for kind, published in PUBLISHED_BOUNDS:
            rep = aggregated_lp_bound(kind)
            agrees = rep.value == published
            rows.append(TableRow(
                label=kind, size=None, vertices=None, cardinality=None,
                computed=rep.value, status="optimal", published=published,
                relation="=", agrees=agrees, elapsed=0.0,
                note="matches published value" if agrees
                else "differs from published value"))
        return TableReport(spec, tuple(rows))

    kind, quotient, published_rows, default_count = SOLVER_TABLES[spec.id]
    chosen = published_rows[:default_count]
    if spec.max_n is not None:
        chosen = tuple(r for r in published_rows if r.size[1] <= spec.max_n)
    rows = []
    for prow in chosen:
        m, n = prow.size
        graph = build_graph(kind, m, n, quotient)
        target = prow.value if prow.relation == ">=" else None
        res = solve_exact(graph, method="auto", time_limit=spec.time_limit,
                          target=target)
        agrees, note = _judge(prow.relation, res.density, prow.value,
                              res.optimal)
        known = _KNOWN_DISAGREEMENTS.get((spec.id, (m, n)))
        if known and agrees is False:
            note += f" (known discrepancy: {known})"
        rows.append(TableRow(
            label=f"{kind} {quotient} {m}x{n}", size=(m, n),
            vertices=graph.num_vertices, cardinality=res.best_cardinality,
            computed=res.density, status=res.status, published=prow.value,
            relation=prow.relation, agrees=agrees, elapsed=res.elapsed,
            note=note, witness_ids=res.witness.ids()))
    return TableReport(spec, tuple(rows))


@dataclass(frozen=True)
class BoundReportWithNote:
    report: object
    note: str


def klein13_interior_weighted_bound() -> BoundReportWithNote:
    """Weighted LP bound on K(3^6, 13), unit weights on the 11 x 11 interior
    of the unrolled parallelogram; compared against the published 70/121."""
    graph = build_klein_3_6(13)
    weights = [1 if (1 <= r.i <= 11 and 1 <= r.j <= 11) else 0
               for r in graph.vertices]
    rep = weighted_density_bound(graph, weights)
    if rep.value == PUBLISHED_K13_WEIGHTED:
        note = "matches published value 70/121"
    else:
        note = (f"differs from published 70/121: exact LP optimum is "
                f"{format_fraction(rep.certificate['lp_value'])} over 121 "
                "weighted tiles; the published value evidently came from "
                "an integral solve, not the LP relaxation")
    return BoundReportWithNote(rep, note)


def report_to_json(report: TableReport) -> str:
    """Machine-readable form; deterministic (no timings, fixed order)."""
    doc = {
        "format": "tessdom-table/1",
        "table": report.spec.id,
        "rows": [
            {
                "label": row.label,
                "size": list(row.size) if row.size else None,
                "vertices": row.vertices,
                "cardinality": row.cardinality,
                "computed": format_fraction(row.computed),
                "status": row.status,
                "published": format_fraction(row.published)
                if row.published is not None else None,
                "relation": row.relation,
                "agrees": row.agrees,
                "note": row.note,
                "witness": list(row.witness_ids)
                if row.witness_ids is not None else None,
            }
            for row in report.rows
        ],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def format_report(report: TableReport) -> str:
    lines = [f"table {report.spec.id}"]
    for row in report.rows:
        parts = [f"  {row.label:28s}"]
        if row.cardinality is not None:
            parts.append(f"{row.cardinality}/{row.vertices} =")
        value = format_fraction(row.computed)
        if row.status == "lower_bound_only":
            value = f">= {value} (lower bound)"
        parts.append(f"{value:18s}")
        if row.published is not None:
            parts.append(f"published {row.relation} "
                         f"{format_fraction(row.published):8s}")
        flag = {True: "ok", False: "MISMATCH", None: "inconclusive"}[row.agrees]
        parts.append(flag)
        if row.note:
            parts.append(f"[{row.note}]")
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


def write_witness_files(report: TableReport, directory) -> list[str]:
    """Store one re-verifiable selection file per solver row; returns paths."""
    from pathlib import Path

    from .fileio import selection_to_text
    out = []
    if report.spec.id == "bounds_all":
        return out
    kind, quotient, _, _ = SOLVER_TABLES[report.spec.id]
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    for row in report.rows:
        if row.witness_ids is None:
            continue
        m, n = row.size
        graph = build_graph(kind, m, n, quotient)
        sel = Selection.from_ids(graph, row.witness_ids)
        path = directory / f"{report.spec.id}_{m}x{n}.sel"
        path.write_text(selection_to_text(sel), encoding="utf-8")
        out.append(str(path))
    return out
