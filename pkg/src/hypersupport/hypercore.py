"""Hypergraph data model: twin classes, covering, removal and shrinking.

A hypergraph is a vertex set plus a family of vertex subsets (hyperedges).
Hyperedges of size at most one and duplicate hyperedges carry no information
for support finding and are dropped on construction.  All stored sequences
are kept in canonical (lexicographic) order so that equal hypergraphs
serialize identically.

Everything here is immutable after construction and all operations are pure,
so values can be shared freely across threads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import InputError

Vertex = str
Hyperedge = tuple[Vertex, ...]


@dataclass(frozen=True)
class Hypergraph:
    """Immutable hypergraph with canonically ordered vertices and hyperedges.

    ``dropped_count`` records how many raw hyperedges were discarded by the
    builder (size <= 1 or duplicate); it is diagnostic only and excluded
    from equality.
    """

    vertices: tuple[Vertex, ...]
    hyperedges: tuple[Hyperedge, ...]
    dropped_count: int = field(default=0, compare=False)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.hyperedges)

    def vertex_set(self) -> frozenset[Vertex]:
        return frozenset(self.vertices)

    def to_json_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "hyperedges": [list(edge) for edge in self.hyperedges],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "Hypergraph":
        if not isinstance(data, Mapping):
            raise InputError("hypergraph JSON must be an object")
        try:
            vertices = data["vertices"]
            hyperedges = data["hyperedges"]
        except KeyError as missing:
            raise InputError(f"hypergraph JSON lacks key {missing}")
        if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
            raise InputError("'vertices' must be a list of strings")
        if not isinstance(hyperedges, list):
            raise InputError("'hyperedges' must be a list of vertex arrays")
        for edge in hyperedges:
            if not isinstance(edge, list) or not all(isinstance(v, str) for v in edge):
                raise InputError("each hyperedge must be a list of vertex ids")
        return build_hypergraph(vertices, hyperedges)


@dataclass(frozen=True)
class TwinPartition:
    """Partition of the vertex set into classes of equal hyperedge incidence."""

    classes: tuple[tuple[Vertex, ...], ...]
    class_of: Mapping[Vertex, int]

    def class_members(self, v: Vertex) -> tuple[Vertex, ...]:
        return self.classes[self.class_of[v]]

    def are_twins(self, u: Vertex, v: Vertex) -> bool:
        return self.class_of[u] == self.class_of[v]

    def nontrivial_classes(self) -> tuple[tuple[Vertex, ...], ...]:
        return tuple(c for c in self.classes if len(c) > 1)


def build_hypergraph(vertices: Iterable[Vertex], raw_hyperedges: Iterable[Iterable[Vertex]]) -> Hypergraph:
    """Normalize raw input into a canonical :class:`Hypergraph`.

    Hyperedges of size <= 1 and duplicates are dropped silently (their count
    is reported via ``dropped_count``).  Any hyperedge vertex missing from
    ``vertices`` is an input error.
    """
    vertex_tuple = tuple(sorted(set(vertices)))
    known = set(vertex_tuple)
    seen: set[Hyperedge] = set()
    kept: list[Hyperedge] = []
    dropped = 0
    for raw in raw_hyperedges:
        members = sorted(set(raw))
        for v in members:
            if v not in known:
                raise InputError(f"hyperedge vertex {v!r} is not a declared vertex")
        edge = tuple(members)
        if len(edge) <= 1 or edge in seen:
            dropped += 1
            continue
        seen.add(edge)
        kept.append(edge)
    kept.sort()
    return Hypergraph(vertex_tuple, tuple(kept), dropped)


def incident_hyperedges(hypergraph: Hypergraph, v: Vertex) -> frozenset[int]:
    """Indices of the hyperedges containing ``v``."""
    if v not in hypergraph.vertex_set():
        raise InputError(f"unknown vertex {v!r}")
    return frozenset(i for i, edge in enumerate(hypergraph.hyperedges) if v in edge)


def _incidence_map(hypergraph: Hypergraph) -> dict[Vertex, set[int]]:
    incidence: dict[Vertex, set[int]] = {v: set() for v in hypergraph.vertices}
    for i, edge in enumerate(hypergraph.hyperedges):
        for v in edge:
            incidence[v].add(i)
    return incidence


def twin_partition(hypergraph: Hypergraph) -> TwinPartition:
    """Group vertices by identical incidence, by partition refinement.

    Starting from the single all-vertices class, each hyperedge in turn
    splits every class into members inside and outside the hyperedge, which
    yields exactly the classes of the equal-incidence relation in time
    linear in the total hypergraph size.
    """
    classes: list[list[Vertex]] = [list(hypergraph.vertices)] if hypergraph.vertices else []
    for edge in hypergraph.hyperedges:
        members = set(edge)
        refined: list[list[Vertex]] = []
        for cls in classes:
            inside = [v for v in cls if v in members]
            outside = [v for v in cls if v not in members]
            if inside:
                refined.append(inside)
            if outside:
                refined.append(outside)
        classes = refined
    canonical = tuple(sorted(tuple(sorted(cls)) for cls in classes))
    class_of = {v: i for i, cls in enumerate(canonical) for v in cls}
    return TwinPartition(canonical, class_of)


def covers(hypergraph: Hypergraph, v: Vertex, u: Vertex) -> bool:
    """True when every hyperedge containing ``u`` also contains ``v``."""
    known = hypergraph.vertex_set()
    for w in (v, u):
        if w not in known:
            raise InputError(f"unknown vertex {w!r}")
    incidence = _incidence_map(hypergraph)
    return incidence[u] <= incidence[v]


def remove_vertices(hypergraph: Hypergraph, removed: Iterable[Vertex]) -> Hypergraph:
    """The hypergraph after deleting ``removed`` from every hyperedge.

    Hyperedges that shrink to size <= 1 disappear, as do duplicates that
    arise from the deletion.
    """
    removed_set = set(removed)
    known = hypergraph.vertex_set()
    for v in removed_set:
        if v not in known:
            raise InputError(f"unknown vertex {v!r}")
    remaining = [v for v in hypergraph.vertices if v not in removed_set]
    shrunk = [[v for v in edge if v not in removed_set] for edge in hypergraph.hyperedges]
    return build_hypergraph(remaining, shrunk)


def shrink(hypergraph: Hypergraph, keep: Iterable[Vertex]) -> Hypergraph:
    """The subhypergraph shrunken to ``keep``: remove everything else."""
    keep_set = set(keep)
    known = hypergraph.vertex_set()
    for v in keep_set:
        if v not in known:
            raise InputError(f"unknown vertex {v!r}")
    return remove_vertices(hypergraph, known - keep_set)


def is_connected(hypergraph: Hypergraph) -> bool:
    """Connectivity of the bipartite incidence graph (vertices vs hyperedges).

    The empty hypergraph is not connected; a single vertex without
    hyperedges is.
    """
    if not hypergraph.vertices:
        return False
    incidence = _incidence_map(hypergraph)
    start = hypergraph.vertices[0]
    seen_vertices = {start}
    seen_edges: set[int] = set()
    queue: deque[tuple[str, object]] = deque([("v", start)])
    while queue:
        kind, item = queue.popleft()
        if kind == "v":
            for i in incidence[item]:
                if i not in seen_edges:
                    seen_edges.add(i)
                    queue.append(("e", i))
        else:
            for v in hypergraph.hyperedges[item]:
                if v not in seen_vertices:
                    seen_vertices.add(v)
                    queue.append(("v", v))
    return len(seen_vertices) == hypergraph.n


def hypergraphs_equal(a: Hypergraph, b: Hypergraph) -> bool:
    return a.vertices == b.vertices and a.hyperedges == b.hyperedges


__all__ = [
    "Hypergraph",
    "TwinPartition",
    "build_hypergraph",
    "incident_hyperedges",
    "twin_partition",
    "covers",
    "remove_vertices",
    "shrink",
    "is_connected",
    "hypergraphs_equal",
]
