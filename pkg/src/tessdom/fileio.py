"""Flat-file serialization for graphs, selections and bound reports.

All documents are UTF-8 line-oriented text with a versioned header line:

tessdom-graph/1        vertex table and edge list of a quotient graph;
                       parallel edges repeat, and `e v v` carries one
                       adjacency entry of v to itself (an ordinary
                       self-loop therefore appears as two such records,
                       a Klein fold edge as one).
tessdom-selection/1    graph header fields plus the sorted selected ids;
                       loaders reject a selection whose header does not
                       match the graph it is applied to.
tessdom-bound/1        provenance-tagged rational bound with certificate.

Fractions are rendered `p/q` in lowest terms (or a bare integer).
Round-trips are exact: deserialize(serialize(x)) equals x structurally.
"""

from __future__ import annotations

from fractions import Fraction

from .catalog import normalize_kind
from .classbounds import BoundReport
from .halfdom import Selection
from .quotient import QUOTIENTS, QuotientGraph, VertexRecord

GRAPH_HEADER = "tessdom-graph/1"
SELECTION_HEADER = "tessdom-selection/1"
BOUND_HEADER = "tessdom-bound/1"


class FormatError(ValueError):
    """Malformed document; message carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def format_fraction(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str, line_no: int = 0) -> Fraction:
    try:
        if "/" in text:
            num, _, den = text.partition("/")
            d = int(den)
            if d <= 0:
                raise ValueError
            return Fraction(int(num), d)
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError):
        raise FormatError(line_no, f"malformed fraction {text!r}") from None


class _Reader:
    def __init__(self, text: str):
        self.lines = text.splitlines()
        self.pos = 0

    def next(self) -> tuple[int, str]:
        while self.pos < len(self.lines):
            self.pos += 1
            line = self.lines[self.pos - 1].strip()
            if line and not line.startswith("#"):
                return self.pos, line
        raise FormatError(len(self.lines), "unexpected end of document")

    def expect_field(self, name: str) -> tuple[int, str]:
        no, line = self.next()
        key, _, value = line.partition(" ")
        if key != name:
            raise FormatError(no, f"expected field {name!r}, found {key!r}")
        return no, value.strip()


def _header_fields(graph: QuotientGraph) -> list[str]:
    return [f"kind {graph.kind}",
            f"quotient {graph.quotient}",
            f"m {graph.m}",
            f"n {graph.n}"]


def graph_to_text(graph: QuotientGraph) -> str:
    out = [GRAPH_HEADER]
    out.extend(_header_fields(graph))
    out.append(f"vertices {graph.num_vertices}")
    for rec in graph.vertices:
        out.append(f"v {rec.id} {rec.i} {rec.j} {rec.k} {rec.sides}")
    records = graph.edge_records()
    out.append(f"edges {len(records)}")
    for u, v in records:
        out.append(f"e {u} {v}")
    return "\n".join(out) + "\n"


def _read_common_header(r: _Reader):
    no, kind = r.expect_field("kind")
    try:
        kind = normalize_kind(kind)
    except ValueError as exc:
        raise FormatError(no, str(exc)) from None
    no, quotient = r.expect_field("quotient")
    if quotient not in QUOTIENTS:
        raise FormatError(no, f"unknown quotient {quotient!r}")
    no, m = r.expect_field("m")
    no2, n = r.expect_field("n")
    try:
        m, n = int(m), int(n)
    except ValueError:
        raise FormatError(no2, "grid dimensions must be integers") from None
    no, count = r.expect_field("vertices")
    try:
        count = int(count)
    except ValueError:
        raise FormatError(no, "vertex count must be an integer") from None
    return kind, quotient, m, n, count


def graph_from_text(text: str) -> QuotientGraph:
    r = _Reader(text)
    no, header = r.next()
    if header != GRAPH_HEADER:
        raise FormatError(no, f"expected header {GRAPH_HEADER!r}")
    kind, quotient, m, n, count = _read_common_header(r)
    records = []
    for idx in range(count):
        no, line = r.next()
        parts = line.split()
        if len(parts) != 6 or parts[0] != "v":
            raise FormatError(no, "expected vertex line `v id i j k sides`")
        try:
            vid, i, j, k, sides = (int(p) for p in parts[1:])
        except ValueError:
            raise FormatError(no, "vertex fields must be integers") from None
        if vid != idx:
            raise FormatError(no, f"vertex ids must be dense; expected {idx}, got {vid}")
        records.append(VertexRecord(vid, i, j, k, sides))
    no, value = r.expect_field("edges")
    try:
        num_edges = int(value)
    except ValueError:
        raise FormatError(no, "edge count must be an integer") from None
    adj: list[list[int]] = [[] for _ in range(count)]
    for _ in range(num_edges):
        no, line = r.next()
        parts = line.split()
        if len(parts) != 3 or parts[0] != "e":
            raise FormatError(no, "expected edge line `e u v`")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise FormatError(no, "edge endpoints must be integers") from None
        if not (0 <= u < count and 0 <= v < count):
            raise FormatError(no, f"vertex id out of range in edge ({u}, {v})")
        adj[u].append(v)
        if v != u:
            adj[v].append(u)
    return QuotientGraph(kind, m, n, quotient, tuple(records),
                         tuple(tuple(sorted(a)) for a in adj))


def selection_to_text(sel: Selection) -> str:
    graph = sel.graph
    out = [SELECTION_HEADER]
    out.extend(_header_fields(graph))
    out.append(f"vertices {graph.num_vertices}")
    ids = sel.ids()
    out.append(f"selected {len(ids)}")
    for v in ids:
        out.append(f"s {v}")
    return "\n".join(out) + "\n"


def selection_ids_from_text(text: str):
    """Parse a selection document; returns (header dict, sorted ids)."""
    r = _Reader(text)
    no, header = r.next()
    if header != SELECTION_HEADER:
        raise FormatError(no, f"expected header {SELECTION_HEADER!r}")
    kind, quotient, m, n, count = _read_common_header(r)
    no, value = r.expect_field("selected")
    try:
        n_sel = int(value)
    except ValueError:
        raise FormatError(no, "selected count must be an integer") from None
    ids = []
    for _ in range(n_sel):
        no, line = r.next()
        parts = line.split()
        if len(parts) != 2 or parts[0] != "s":
            raise FormatError(no, "expected selection line `s id`")
        try:
            v = int(parts[1])
        except ValueError:
            raise FormatError(no, "vertex id must be an integer") from None
        if not 0 <= v < count:
            raise FormatError(no, f"vertex id out of range: {v} >= {count}")
        ids.append(v)
    header_info = {"kind": kind, "quotient": quotient, "m": m, "n": n,
                   "vertices": count}
    return header_info, sorted(ids)


def selection_from_text(text: str, graph: QuotientGraph) -> Selection:
    """Attach a selection document to its graph; headers must match."""
    info, ids = selection_ids_from_text(text)
    mismatches = []
    for key, actual in (("kind", graph.kind), ("quotient", graph.quotient),
                        ("m", graph.m), ("n", graph.n),
                        ("vertices", graph.num_vertices)):
        if info[key] != actual:
            mismatches.append(f"{key}: file {info[key]!r} vs graph {actual!r}")
    if mismatches:
        raise FormatError(1, "selection header does not match graph: "
                          + "; ".join(mismatches))
    return Selection.from_ids(graph, ids)


def bound_to_text(report: BoundReport) -> str:
    out = [BOUND_HEADER,
           f"kind {report.kind}",
           f"provenance {report.provenance}",
           f"value {format_fraction(report.value)}"]
    for note in report.notes:
        out.append(f"note {note}")
    for key in sorted(report.certificate, key=str):
        val = report.certificate[key]
        if isinstance(val, (Fraction, int)):
            val = format_fraction(Fraction(val))
        out.append(f"cert {key} {val}")
    return "\n".join(out) + "\n"


def bound_from_text(text: str) -> BoundReport:
    r = _Reader(text)
    no, header = r.next()
    if header != BOUND_HEADER:
        raise FormatError(no, f"expected header {BOUND_HEADER!r}")
    no, kind = r.expect_field("kind")
    no, provenance = r.expect_field("provenance")
    no, value = r.expect_field("value")
    val = parse_fraction(value, no)
    notes = []
    cert: dict = {}
    while True:
        try:
            no, line = r.next()
        except FormatError:
            break
        key, _, rest = line.partition(" ")
        if key == "note":
            notes.append(rest)
        elif key == "cert":
            name, _, raw = rest.partition(" ")
            try:
                cert[name] = parse_fraction(raw, no)
            except FormatError:
                cert[name] = raw
        else:
            raise FormatError(no, f"unexpected line {line!r}")
    return BoundReport(kind=kind, value=val, provenance=provenance,
                       certificate=cert, notes=tuple(notes))


def serialize(obj) -> str:
    """Dispatch on the object type; see module docstring for formats."""
    if isinstance(obj, QuotientGraph):
        return graph_to_text(obj)
    if isinstance(obj, Selection):
        return selection_to_text(obj)
    if isinstance(obj, BoundReport):
        return bound_to_text(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def deserialize(text: str, graph: QuotientGraph | None = None):
    """Inverse of serialize; selections need their graph to attach to."""
    first = text.lstrip().splitlines()[0].strip() if text.strip() else ""
    if first == GRAPH_HEADER:
        return graph_from_text(text)
    if first == SELECTION_HEADER:
        if graph is None:
            raise ValueError("deserializing a selection requires its graph")
        return selection_from_text(text, graph)
    if first == BOUND_HEADER:
        return bound_from_text(text)
    raise FormatError(1, f"unrecognized document header {first!r}")
