"""Dual graphs of stable marked curves: data model, JSON parsing, validation.

A dual graph has one vertex per irreducible component (with its geometric
genus and a curve model for the normalization), one edge per node (loops
allowed), one leg per marked point, and an optional puncture count per
vertex for quasiprojective components.

Input schema (JSON)::

    {"vertices": [{"id": "v1", "genus": 1, "model": {"type": "symbolic"},
                   "punctures": 0}],
     "edges": [["v1", "v1"]],
     "legs": ["v1"]}

Model objects: ``{"type": "symbolic"}``, ``{"type": "p1"}``,
``{"type": "elliptic", "trace": a}``, and
``{"type": "weil", "numerator": [1, ...]}``; each may carry an ``"id"`` to
share one generator namespace between vertices (default: the vertex id).
``model`` defaults to symbolic, ``punctures`` to 0, ``edges``/``legs`` to
empty.

Non-loop edges are stored with endpoints in vertex-id order; this fixes the
orientation along which exceptional chains are read.  For a loop, the two
half-edges are distinguished and chains are read from the first slot.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Iterable, NamedTuple

from .ring import MODEL_ID_RE


class GraphError(ValueError):
    """Raised for schema violations, invalid references, or unstable input."""


@dataclass(frozen=True)
class CurveModel:
    """The normalization of one component.

    ``symbolic``, ``elliptic``, and ``weil`` models contribute free
    symmetric-power generators ``c[name,d]`` to series coefficients;
    elliptic and weil additionally carry the data a point-count measure
    needs to realize those generators.  ``p1`` expands concretely in the
    Lefschetz class.
    """

    kind: str
    name: str
    genus: int
    trace: int | None = None
    numerator: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if not MODEL_ID_RE.fullmatch(self.name):
            raise GraphError(f"invalid model id: {self.name!r}")
        if self.genus < 0:
            raise GraphError("genus must be nonnegative")

    @classmethod
    def symbolic(cls, name: str, genus: int) -> CurveModel:
        return cls("symbolic", name, genus)

    @classmethod
    def projective_line(cls, name: str) -> CurveModel:
        return cls("p1", name, 0)

    @classmethod
    def elliptic(cls, name: str, trace: int) -> CurveModel:
        return cls("elliptic", name, 1, trace=trace)

    @classmethod
    def weil(cls, name: str, numerator: Iterable[int], genus: int) -> CurveModel:
        coeffs = tuple(int(c) for c in numerator)
        if not coeffs or coeffs[0] != 1:
            raise GraphError(f"weil numerator must have constant term 1: {coeffs}")
        if len(coeffs) - 1 > 2 * genus:
            raise GraphError(
                f"weil numerator degree {len(coeffs) - 1} exceeds 2*genus = {2 * genus}"
            )
        return cls("weil", name, genus, numerator=coeffs)

    @property
    def has_free_generators(self) -> bool:
        return self.kind != "p1"


@dataclass(frozen=True)
class Vertex:
    id: str
    genus: int
    model: CurveModel
    punctures: int = 0


@dataclass(frozen=True)
class DualGraph:
    """Validated dual graph; immutable and freely shareable."""

    vertices: tuple[Vertex, ...]
    edges: tuple[tuple[str, str], ...]
    legs: tuple[str, ...]

    @cached_property
    def _vertex_map(self) -> dict[str, Vertex]:
        return {v.id: v for v in self.vertices}

    @cached_property
    def _valences(self) -> dict[str, int]:
        val = {v.id: 0 for v in self.vertices}
        for u, w in self.edges:
            val[u] += 1
            val[w] += 1
        return val

    @cached_property
    def _legs_at(self) -> dict[str, int]:
        legs = {v.id: 0 for v in self.vertices}
        for vid in self.legs:
            legs[vid] += 1
        return legs

    def vertex(self, vid: str) -> Vertex:
        return self._vertex_map[vid]

    def valence(self, vid: str) -> int:
        """Edge endpoints at the vertex; a loop counts twice."""
        return self._valences[vid]

    def legs_at(self, vid: str) -> int:
        return self._legs_at[vid]

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_legs(self) -> int:
        return len(self.legs)


class VertexCounts(NamedTuple):
    valence: int
    legs: int
    punctures: int


class GraphCounts(NamedTuple):
    num_edges: int
    num_legs: int
    per_vertex: dict[str, VertexCounts]


def counts(graph: DualGraph) -> GraphCounts:
    """Edge/leg totals and per-vertex (valence, legs, punctures)."""
    per_vertex = {
        v.id: VertexCounts(graph.valence(v.id), graph.legs_at(v.id), v.punctures)
        for v in graph.vertices
    }
    return GraphCounts(graph.num_edges, graph.num_legs, per_vertex)


def total_genus(graph: DualGraph) -> int:
    """Arithmetic genus: sum of vertex genera plus the first Betti number."""
    return sum(v.genus for v in graph.vertices) + graph.num_edges - len(graph.vertices) + 1


def parse_graph(source: str | bytes | dict, *, allow_unstable: bool = False) -> DualGraph:
    """Parse and validate a dual graph from JSON text or a decoded dict.

    ``allow_unstable`` skips the stability inequality, but only for a
    single-vertex graph without edges (the smooth case).
    """
    if isinstance(source, (str, bytes)):
        try:
            data = json.loads(source)
        except json.JSONDecodeError as exc:
            raise GraphError(f"invalid JSON: {exc}") from None
    else:
        data = source
    if not isinstance(data, dict):
        raise GraphError("graph document must be a JSON object")
    unknown = set(data) - {"vertices", "edges", "legs"}
    if unknown:
        raise GraphError(f"unknown top-level keys: {sorted(unknown)}")

    raw_vertices = data.get("vertices")
    if not isinstance(raw_vertices, list) or not raw_vertices:
        raise GraphError("'vertices' must be a nonempty list")
    vertices = tuple(_parse_vertex(item) for item in raw_vertices)
    ids = [v.id for v in vertices]
    if len(set(ids)) != len(ids):
        raise GraphError("duplicate vertex ids")
    known = set(ids)

    edges = []
    for item in data.get("edges", []):
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise GraphError(f"edge must be a pair of vertex ids: {item!r}")
        u, w = item
        for end in (u, w):
            if end not in known:
                raise GraphError(f"edge references unknown vertex id {end!r}")
        edges.append((u, w) if u <= w else (w, u))

    legs = []
    for vid in data.get("legs", []):
        if vid not in known:
            raise GraphError(f"leg references unknown vertex id {vid!r}")
        legs.append(vid)

    graph = DualGraph(vertices, tuple(edges), tuple(legs))
    _validate(graph, allow_unstable=allow_unstable)
    return graph


def load_graph(path: str, *, allow_unstable: bool = False) -> DualGraph:
    with open(path, encoding="utf-8") as handle:
        return parse_graph(handle.read(), allow_unstable=allow_unstable)


def _parse_vertex(item: Any) -> Vertex:
    if not isinstance(item, dict):
        raise GraphError(f"vertex must be an object: {item!r}")
    unknown = set(item) - {"id", "genus", "model", "punctures"}
    if unknown:
        raise GraphError(f"unknown vertex keys: {sorted(unknown)}")
    vid = item.get("id")
    if not isinstance(vid, str) or not MODEL_ID_RE.fullmatch(vid):
        raise GraphError(f"invalid vertex id: {vid!r}")
    genus = item.get("genus")
    if not isinstance(genus, int) or genus < 0:
        raise GraphError(f"vertex {vid!r}: genus must be a nonnegative integer")
    punctures = item.get("punctures", 0)
    if not isinstance(punctures, int) or punctures < 0:
        raise GraphError(f"vertex {vid!r}: punctures must be a nonnegative integer")
    model = _parse_model(item.get("model", {"type": "symbolic"}), vid, genus)
    return Vertex(vid, genus, model, punctures)


def _parse_model(item: Any, vid: str, genus: int) -> CurveModel:
    if not isinstance(item, dict):
        raise GraphError(f"vertex {vid!r}: model must be an object")
    kind = item.get("type")
    name = item.get("id", vid)
    if not isinstance(name, str):
        raise GraphError(f"vertex {vid!r}: model id must be a string")
    allowed = {
        "symbolic": {"type", "id"},
        "p1": {"type", "id"},
        "elliptic": {"type", "id", "trace"},
        "weil": {"type", "id", "numerator"},
    }
    if kind not in allowed:
        raise GraphError(f"vertex {vid!r}: unknown model type {kind!r}")
    unknown = set(item) - allowed[kind]
    if unknown:
        raise GraphError(f"vertex {vid!r}: unknown model keys: {sorted(unknown)}")
    try:
        if kind == "symbolic":
            model = CurveModel.symbolic(name, genus)
        elif kind == "p1":
            model = CurveModel.projective_line(name)
        elif kind == "elliptic":
            trace = item.get("trace")
            if not isinstance(trace, int):
                raise GraphError(f"vertex {vid!r}: elliptic model needs integer 'trace'")
            model = CurveModel.elliptic(name, trace)
        else:
            numerator = item.get("numerator")
            if not isinstance(numerator, list) or not all(
                isinstance(c, int) for c in numerator
            ):
                raise GraphError(
                    f"vertex {vid!r}: weil model needs an integer list 'numerator'"
                )
            model = CurveModel.weil(name, numerator, genus)
    except GraphError:
        raise
    except ValueError as exc:
        raise GraphError(f"vertex {vid!r}: {exc}") from None
    if model.genus != genus:
        raise GraphError(
            f"vertex {vid!r}: model genus {model.genus} does not match vertex genus {genus}"
        )
    return model


def _validate(graph: DualGraph, *, allow_unstable: bool) -> None:
    # Connectivity (legs attach to vertices, they connect nothing).
    adjacency: dict[str, set[str]] = {v.id: set() for v in graph.vertices}
    for u, w in graph.edges:
        adjacency[u].add(w)
        adjacency[w].add(u)
    seen = {graph.vertices[0].id}
    queue = [graph.vertices[0].id]
    while queue:
        for nxt in adjacency[queue.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    if len(seen) != len(graph.vertices):
        missing = sorted(set(adjacency) - seen)
        raise GraphError(f"graph is not connected: unreachable vertices {missing}")

    skip_stability = allow_unstable and len(graph.vertices) == 1 and not graph.edges
    if skip_stability:
        return
    for v in graph.vertices:
        # Punctures are excluded: stability is that of the compactified curve.
        slack = 2 * v.genus - 2 + graph.valence(v.id) + graph.legs_at(v.id)
        if slack <= 0:
            raise GraphError(
                f"unstable vertex {v.id!r}: 2*genus - 2 + valence + legs = {slack}"
                " (must be positive); pass allow_unstable for smooth one-vertex input"
            )


def graph_to_json(graph: DualGraph) -> dict:
    """Schema-shaped dict; ``parse_graph`` of the result returns an equal graph."""
    vertices = []
    for v in graph.vertices:
        model: dict[str, Any] = {"type": v.model.kind}
        if v.model.name != v.id:
            model["id"] = v.model.name
        if v.model.kind == "elliptic":
            model["trace"] = v.model.trace
        elif v.model.kind == "weil":
            model["numerator"] = list(v.model.numerator)
        vertices.append(
            {"id": v.id, "genus": v.genus, "model": model, "punctures": v.punctures}
        )
    return {
        "vertices": vertices,
        "edges": [list(edge) for edge in graph.edges],
        "legs": list(graph.legs),
    }
