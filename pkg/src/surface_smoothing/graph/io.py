"""Graph file formats.

Line format (UTF-8)::

    # comment
    vertex <id> <weight> <genus>
    edge <id> <id>

Vertices must be declared before the edges that use them.  The JSON form is
``{"vertices": [{"id", "weight", "genus"}], "edges": [[id, id]]}``.
"""
from __future__ import annotations

import json
import logging
import re
from pathlib import Path

from pydantic import BaseModel, Field, ValidationError

from surface_smoothing.core.errors import GraphFormatError
from surface_smoothing.graph.model import ResolutionGraph, Vertex

logger = logging.getLogger(__name__)

_ID = re.compile(r"^[A-Za-z0-9_]+$")


class VertexSpec(BaseModel):
    id: str
    weight: int
    genus: int = 0


class GraphDocument(BaseModel):
    schema_version: int = Field(default=1, alias="schema")
    vertices: list[VertexSpec]
    edges: list[tuple[str, str]] = []

    model_config = {"populate_by_name": True}


def _int_token(token: str, what: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"line {lineno}: {what} must be an integer, got {token!r}") from None


def _parse_lines(text: str) -> ResolutionGraph:
    vertices: list[Vertex] = []
    declared: set[str] = set()
    edges: list[tuple[str, str]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        keyword, args = parts[0].lower(), parts[1:]

        if keyword == "vertex":
            if len(args) not in (2, 3):
                raise GraphFormatError(f"line {lineno}: expected 'vertex <id> <weight> <genus>'")
            vid = args[0]
            if not _ID.match(vid):
                raise GraphFormatError(f"line {lineno}: invalid vertex id {vid!r}")
            if vid in declared:
                raise GraphFormatError(f"line {lineno}: duplicate vertex id: {vid}")
            weight = _int_token(args[1], "weight", lineno)
            genus = _int_token(args[2], "genus", lineno) if len(args) == 3 else 0
            if weight >= 0:
                raise GraphFormatError(f"line {lineno}: vertex {vid}: weight must be <= -1, got {weight}")
            if genus < 0:
                raise GraphFormatError(f"line {lineno}: vertex {vid}: genus must be >= 0, got {genus}")
            declared.add(vid)
            vertices.append(Vertex(vid, weight, genus))

        elif keyword == "edge":
            if len(args) != 2:
                raise GraphFormatError(f"line {lineno}: expected 'edge <id> <id>'")
            a, b = args
            if a == b:
                raise GraphFormatError(f"line {lineno}: self-loop at vertex {a}")
            for end in (a, b):
                if end not in declared:
                    raise GraphFormatError(f"line {lineno}: edge references unknown vertex {end}")
            if (a, b) in edges or (b, a) in edges:
                raise GraphFormatError(f"line {lineno}: duplicate edge {a} {b}")
            edges.append((a, b))

        else:
            raise GraphFormatError(f"line {lineno}: unknown directive {parts[0]!r}")

    return ResolutionGraph(tuple(vertices), tuple(edges))


def _parse_json(text: str) -> ResolutionGraph:
    try:
        doc = GraphDocument.model_validate_json(text)
    except ValidationError as exc:
        raise GraphFormatError(f"invalid graph document: {exc}") from exc
    return document_to_graph(doc)


def document_to_graph(doc: GraphDocument) -> ResolutionGraph:
    return ResolutionGraph(
        tuple(Vertex(v.id, v.weight, v.genus) for v in doc.vertices),
        tuple((a, b) for a, b in doc.edges),
    )


def parse_graph(text: str) -> ResolutionGraph:
    """Parse either graph format; JSON is recognised by a leading ``{``."""
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    return _parse_lines(text)


def load_graph(path: Path) -> ResolutionGraph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise GraphFormatError(f"cannot read graph file {path}: {exc}") from exc
    graph = parse_graph(text)
    logger.info("Loaded %d-vertex graph from %s", len(graph), path)
    return graph


def graph_to_document(graph: ResolutionGraph) -> GraphDocument:
    return GraphDocument(
        vertices=[VertexSpec(id=v.id, weight=v.weight, genus=v.genus) for v in graph],
        edges=[(a, b) for a, b in graph.edges],
    )


def format_graph(graph: ResolutionGraph, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(graph_to_document(graph).model_dump(by_alias=True), indent=2)
    lines = [f"vertex {v.id} {v.weight} {v.genus}" for v in graph]
    lines += [f"edge {a} {b}" for a, b in graph.edges]
    return "\n".join(lines) + "\n"
