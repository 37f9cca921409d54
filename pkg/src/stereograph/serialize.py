"""Serialization: the two JSON graph formats, DOT export, census CSV.

The bit form ("stereograph-v1") is the canonical output everywhere; the
edge form ("stereograph-edges-v1") is accepted on input and validated
structurally. Vertex names are "u<side>.<pair>".
"""

from __future__ import annotations

import json
from typing import Mapping

from .errors import DomainError, LengthMismatch, ParseError
from .generators import CensusRow
from .graphs import Graph
from .merge import MergeStep
from .model import (
    StereotypeGraph,
    from_edge_list,
    from_pattern,
    parse_vertex_name,
    vertex_name,
    vertex_pair_side,
)

FORMAT_BITS = "stereograph-v1"
FORMAT_EDGES = "stereograph-edges-v1"


def graph_to_dict(g: StereotypeGraph, meta: Mapping[str, object] | None = None) -> dict:
    doc: dict = {"format": FORMAT_BITS, "n": g.n, "pattern": list(g.bits)}
    if meta:
        doc["meta"] = dict(meta)
    return doc


def graph_to_json(g: StereotypeGraph, meta: Mapping[str, object] | None = None) -> str:
    return json.dumps(graph_to_dict(g, meta))


def graph_from_dict(doc: object) -> StereotypeGraph:
    """Parse either JSON form into a validated stereotype graph.

    Malformed documents raise ParseError; structurally invalid edge sets
    raise NotAStereotypeGraph with the violated clause.
    """
    if not isinstance(doc, dict):
        raise ParseError("graph document must be a JSON object")
    fmt = doc.get("format")
    n = doc.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError(f"'n' must be a positive integer, got {n!r}")
    if fmt == FORMAT_BITS:
        pattern = doc.get("pattern")
        if not isinstance(pattern, list) or not all(b in (0, 1) for b in pattern):
            raise ParseError("'pattern' must be a list of 0/1 bits")
        try:
            return from_pattern(n, pattern)
        except (LengthMismatch, DomainError) as exc:
            raise ParseError(str(exc)) from exc
    if fmt == FORMAT_EDGES:
        return from_edge_list(n, _parse_named_edges(doc))
    raise ParseError(f"unknown format {fmt!r}")


def _parse_named_edges(doc: dict) -> list[tuple[int, int]]:
    raw = doc.get("edges")
    if not isinstance(raw, list):
        raise ParseError("'edges' must be a list of name pairs")
    edges = []
    for item in raw:
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise ParseError(f"bad edge entry {item!r}")
        try:
            edges.append((parse_vertex_name(item[0]), parse_vertex_name(item[1])))
        except (DomainError, TypeError) as exc:
            raise ParseError(f"bad edge entry {item!r}: {exc}") from exc
    return edges


def graph_from_json(text: str) -> StereotypeGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return graph_from_dict(doc)


def raw_graph_from_dict(doc: object) -> tuple[int, Graph]:
    """Parse either form into (n, plain labeled graph) without requiring
    structural validity; used to produce full validation reports."""
    if not isinstance(doc, dict):
        raise ParseError("graph document must be a JSON object")
    n = doc.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError(f"'n' must be a positive integer, got {n!r}")
    fmt = doc.get("format")
    if fmt == FORMAT_BITS:
        return n, graph_from_dict(doc).graph
    if fmt == FORMAT_EDGES:
        try:
            return n, Graph.from_edges(2 * n, _parse_named_edges(doc))
        except DomainError as exc:
            raise ParseError(str(exc)) from exc
    raise ParseError(f"unknown format {fmt!r}")


def to_dot(g: StereotypeGraph) -> str:
    """Graphviz text with in-pair edges tagged kind=pair (black) and cross
    edges kind=cross (blue); output is byte-deterministic."""
    lines = ["graph stereograph {"]
    for v in range(g.vertex_count):
        lines.append(f'  "{vertex_name(v)}";')
    for u, v in sorted(g.graph.edges):
        same_pair = vertex_pair_side(u)[0] == vertex_pair_side(v)[0]
        kind = "pair" if same_pair else "cross"
        color = "black" if same_pair else "blue"
        lines.append(
            f'  "{vertex_name(u)}" -- "{vertex_name(v)}" [kind={kind}, color={color}];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def census_to_csv(rows: list[CensusRow]) -> str:
    out = ["n,k,labeled_count,iso_class_count"]
    for row in sorted(rows, key=lambda r: (r.n, r.k)):
        out.append(f"{row.n},{row.k},{row.labeled_count},{row.iso_class_count}")
    return "\n".join(out) + "\n"


def merge_steps_to_jsonable(steps: tuple[MergeStep, ...]) -> list[dict]:
    return [
        {
            "merged": list(step.merged_pair),
            "classes": [
                [vertex_name(v) for v in sorted(side)] for side in step.classes
            ],
        }
        for step in steps
    ]


__all__ = [
    "FORMAT_BITS",
    "FORMAT_EDGES",
    "census_to_csv",
    "graph_from_dict",
    "graph_from_json",
    "graph_to_dict",
    "graph_to_json",
    "merge_steps_to_jsonable",
    "raw_graph_from_dict",
    "to_dot",
]
