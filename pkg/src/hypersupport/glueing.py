"""Boundaried graphs, edge bipartitions, signatures and gluing.

An edge bipartition (A, B) of a graph separates it at its middle set, the
vertices touching both sides.  Two bipartitions of a support glue well when
they agree on a signature built from three parts: the twin classes present
on the A side, the twin class of each labeled middle vertex, and, per
hyperedge, which middle vertices the B side connects inside the hyperedge.
Gluing the A side of one bipartition onto the B side of a later one from a
nested chain then yields a representative support for the hypergraph again;
this module makes that check executable.

Whether the glued graph keeps a small outerplanarity number is only
guaranteed for chains derived from sphere-embedding machinery that is out
of scope here, so :func:`glue_support_check` measures planarity and layer
counts of the glued graph instead of asserting them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

from .budget import Budget, BudgetExhausted, Unknown, default_budget
from .errors import DomainError, InputError
from .hypercore import Hypergraph, TwinPartition
from .planegeom import SimpleGraph, edge_key, is_planar, make_graph, outerplanarity_number

Edge = tuple[str, str]


@dataclass(frozen=True)
class BoundariedGraph:
    """A graph with a labeled boundary: labels are 1..b, each used once."""

    graph: SimpleGraph
    boundary: frozenset[str]
    labeling: tuple[tuple[str, int], ...]

    @classmethod
    def make(cls, graph: SimpleGraph, labeling: Mapping[str, int]) -> "BoundariedGraph":
        boundary = frozenset(labeling)
        if not boundary <= graph.vertex_set():
            raise InputError("boundary vertices must belong to the graph")
        labels = sorted(labeling.values())
        if labels != list(range(1, len(boundary) + 1)):
            raise InputError("boundary labeling must be a bijection onto 1..b")
        return cls(graph, boundary, tuple(sorted(labeling.items())))

    @property
    def b(self) -> int:
        return len(self.boundary)

    def label_of(self) -> dict[str, int]:
        return dict(self.labeling)

    def vertex_with_label(self, j: int) -> str:
        for v, label in self.labeling:
            if label == j:
                return v
        raise InputError(f"no boundary vertex holds label {j}")


@dataclass(frozen=True)
class EdgeBipartition:
    """Edge sets A and B partitioning E(G), with a labeled middle set."""

    a_side: frozenset[Edge]
    b_side: frozenset[Edge]
    labeling: tuple[tuple[str, int], ...]

    def label_of(self) -> dict[str, int]:
        return dict(self.labeling)

    @property
    def middle_size(self) -> int:
        return len(self.labeling)

    def to_json_dict(self) -> dict:
        return {
            "A": [list(e) for e in sorted(self.a_side)],
            "B": [list(e) for e in sorted(self.b_side)],
            "labeling": {v: j for v, j in self.labeling},
        }


@dataclass(frozen=True)
class Signature:
    """Signature (T, phi, C) of an edge bipartition of a support.

    ``twin_classes_left`` is the set of twin-class ids on the A side;
    ``phi`` maps label j (position j-1) to the twin class of the middle
    vertex labeled j; ``gamma`` holds, per hyperedge, the sorted pairs of
    labels connected through the B side inside that hyperedge, including
    the reflexive pair of every middle vertex lying in the hyperedge.
    """

    twin_classes_left: frozenset[int]
    phi: tuple[int, ...]
    gamma: tuple[tuple[tuple[int, int], ...], ...]

    def to_json_dict(self) -> dict:
        return {
            "T": sorted(self.twin_classes_left),
            "phi": {str(j + 1): cls for j, cls in enumerate(self.phi)},
            "C": {str(f): [list(p) for p in pairs] for f, pairs in enumerate(self.gamma)},
        }


def middle_set(graph: SimpleGraph, a_side: Iterable[Edge], b_side: Iterable[Edge]) -> frozenset[str]:
    """Vertices incident with at least one edge on each side."""
    a = {edge_key(*e) for e in a_side}
    b = {edge_key(*e) for e in b_side}
    if a & b or (a | b) != graph.edge_set():
        raise InputError("the two edge sets must bipartition the graph's edges")
    a_vertices = {v for e in a for v in e}
    b_vertices = {v for e in b for v in e}
    return frozenset(a_vertices & b_vertices)


def edge_induced(graph: SimpleGraph, edges: Iterable[Edge]) -> SimpleGraph:
    """Subgraph on exactly the endpoints of ``edges``."""
    chosen = {edge_key(*e) for e in edges}
    unknown = chosen - graph.edge_set()
    if unknown:
        raise InputError(f"edges {sorted(unknown)} are not in the graph")
    vertices = {v for e in chosen for v in e}
    return make_graph(vertices, chosen)


def canonical_bipartition(graph: SimpleGraph, a_side: Iterable[Edge]) -> EdgeBipartition:
    """Bipartition with B = E \\ A and the middle set labeled canonically."""
    a = frozenset(edge_key(*e) for e in a_side)
    b = frozenset(graph.edge_set() - a)
    middle = sorted(middle_set(graph, a, b))
    labeling = tuple((v, j + 1) for j, v in enumerate(middle))
    return EdgeBipartition(a, b, labeling)


def glue(first: BoundariedGraph, second: BoundariedGraph) -> SimpleGraph:
    """Disjoint union with boundary vertices identified label-wise.

    Each boundary vertex of the second graph melts into the equally labeled
    vertex of the first, which keeps the first graph's id.  Interior
    vertices of the second graph that happen to share a name with anything
    on the first side are renamed with a ``~2`` suffix to keep the union
    disjoint.  Parallel edges collapse.
    """
    if first.b != second.b:
        raise InputError("boundaries must have equal size to glue")
    label_to_first = {j: first.vertex_with_label(j) for j in range(1, first.b + 1)}
    second_labels = second.label_of()
    taken = set(first.graph.vertices)
    rename: dict[str, str] = {}
    for v in second.graph.vertices:
        if v in second.boundary:
            rename[v] = label_to_first[second_labels[v]]
        elif v in taken:
            fresh = v
            while fresh in taken:
                fresh += "~2"
            rename[v] = fresh
            taken.add(fresh)
        else:
            rename[v] = v
            taken.add(v)
    vertices = list(first.graph.vertices) + [rename[v] for v in second.graph.vertices]
    edges = list(first.graph.edges) + [
        (rename[u], rename[v]) for u, v in second.graph.edges
    ]
    return make_graph(set(vertices), edges)


def compute_signature(
    hypergraph: Hypergraph,
    graph: SimpleGraph,
    bipartition: EdgeBipartition,
    twins: TwinPartition,
) -> Signature:
    """Evaluate the signature of an edge bipartition of a support.

    The caller attests that ``graph`` is a representative planar support of
    ``hypergraph``; twin-class ids come from ``twins``.  Two middle
    vertices are related under a hyperedge when both lie in it and the
    B-side subgraph induced by the hyperedge's B-side vertices connects
    them; a middle vertex lying in the hyperedge is always related to
    itself.
    """
    a, b = bipartition.a_side, bipartition.b_side
    middle = middle_set(graph, a, b)
    label_of = bipartition.label_of()
    if set(label_of) != set(middle):
        raise InputError("labeling domain must equal the middle set")
    ell = len(middle)
    by_label = {j: v for v, j in label_of.items()}

    a_vertices = {v for e in a for v in e}
    twin_left = frozenset(twins.class_of[v] for v in a_vertices)
    phi = tuple(twins.class_of[by_label[j]] for j in range(1, ell + 1))

    b_vertices = {v for e in b for v in e}
    gamma = []
    for edge in hypergraph.hyperedges:
        members = set(edge)
        inside = members & b_vertices
        component = _components_within(b, inside)
        pairs = set()
        labels_in_edge = [j for j in range(1, ell + 1) if by_label[j] in members]
        for j in labels_in_edge:
            pairs.add((j, j))
        for j, k in itertools.combinations(labels_in_edge, 2):
            if component[by_label[j]] == component[by_label[k]]:
                pairs.add((j, k) if j <= k else (k, j))
        gamma.append(tuple(sorted(pairs)))
    return Signature(twin_left, phi, tuple(gamma))


def _components_within(edges: frozenset[Edge], keep: set[str]) -> dict[str, int]:
    parent = {v: v for v in keep}

    def find(v: str) -> str:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in edges:
        if u in keep and v in keep:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
    roots = {}
    labels = {}
    for v in sorted(keep):
        root = find(v)
        if root not in roots:
            roots[root] = len(roots)
        labels[v] = roots[root]
    return labels


def nested_bipartitions(
    graph: SimpleGraph, width_cap: int, budget: int | None = None
) -> list[EdgeBipartition]:
    """A longest found chain A_1 < A_2 < ... with middle sets <= width_cap.

    Chain elements are proper nonempty edge subsets growing one edge at a
    time; extensions minimizing the next middle set are tried first.  The
    search backtracks under a node budget and keeps the longest chain seen
    (ties broken by canonical order), so the result is deterministic but
    only guaranteed maximal when the budget survives the full search.
    """
    if width_cap < 0:
        raise DomainError("width_cap must be >= 0")
    tracker = Budget(budget if budget is not None else default_budget())
    all_edges = sorted(graph.edge_set())
    if len(all_edges) < 2:
        return []
    incident: dict[str, set[Edge]] = {v: set() for v in graph.vertices}
    for e in all_edges:
        incident[e[0]].add(e)
        incident[e[1]].add(e)

    def width(a: frozenset[Edge]) -> int:
        count = 0
        for v in graph.vertices:
            inc = incident[v]
            ina = inc & a
            if ina and len(ina) < len(inc):
                count += 1
        return count

    best: list[frozenset[Edge]] = []

    def extendable(a: frozenset[Edge]) -> list[frozenset[Edge]]:
        options = []
        for e in all_edges:
            if e in a:
                continue
            grown = a | {e}
            if len(grown) == len(all_edges):
                continue
            w = width(grown)
            if w <= width_cap:
                options.append((w, e, grown))
        options.sort(key=lambda item: (item[0], item[1]))
        return [grown for _, _, grown in options]

    def dfs(chain: list[frozenset[Edge]]) -> None:
        nonlocal best
        tracker.spend()
        if len(chain) > len(best):
            best = list(chain)
        for grown in extendable(chain[-1]):
            chain.append(grown)
            dfs(chain)
            chain.pop()

    try:
        starts = []
        for e in all_edges:
            a = frozenset([e])
            w = width(a)
            if w <= width_cap:
                starts.append((w, e, a))
        starts.sort(key=lambda item: (item[0], item[1]))
        for _, _, a in starts:
            dfs([a])
    except BudgetExhausted:
        pass
    return [canonical_bipartition(graph, a) for a in best]


@dataclass(frozen=True)
class GlueReport:
    """Outcome of gluing the A side of one bipartition to the B side of another."""

    glued: SimpleGraph
    vertex_count_identity: bool
    is_representative_support: bool
    planar: bool
    outerplanarity: int | Unknown | None

    def to_json_dict(self) -> dict:
        outer: int | str | None
        if isinstance(self.outerplanarity, Unknown):
            outer = "unknown"
        else:
            outer = self.outerplanarity
        return {
            "glued_graph": self.glued.to_json_dict(),
            "vertex_count_identity": self.vertex_count_identity,
            "is_representative_support": self.is_representative_support,
            "planar": self.planar,
            "outerplanarity": outer,
        }


def glue_support_check(
    hypergraph: Hypergraph,
    graph: SimpleGraph,
    bp_i: EdgeBipartition,
    bp_j: EdgeBipartition,
    twins: TwinPartition,
    budget: int | None = None,
) -> GlueReport:
    """Glue across two equal-signature bipartitions and report what survived.

    The bipartitions must come from one nested chain (A_i contained in A_j)
    with equal middle-set sizes and equal signatures; a mismatch is a
    precondition error.  Support of the shrunken hypergraph is expected to
    hold and is reported; planarity and the layer count of the glued graph
    are measured, not asserted.
    """
    if not bp_i.a_side <= bp_j.a_side:
        raise InputError("bipartitions must be nested (A_i inside A_j)")
    if bp_i.middle_size != bp_j.middle_size:
        raise DomainError("middle sets must have equal size to glue")
    sig_i = compute_signature(hypergraph, graph, bp_i, twins)
    sig_j = compute_signature(hypergraph, graph, bp_j, twins)
    if sig_i != sig_j:
        raise DomainError("signatures differ; the gluing guarantee does not apply")

    left = BoundariedGraph.make(edge_induced(graph, bp_i.a_side), bp_i.label_of())
    right = BoundariedGraph.make(edge_induced(graph, bp_j.b_side), bp_j.label_of())
    glued = glue(left, right)
    if not glued.vertex_set() <= hypergraph.vertex_set():
        raise InputError("gluing escaped the hypergraph's vertex set; sides overlap badly")

    identity = len(glued.vertices) == (
        len(left.graph.vertices) + len(right.graph.vertices) - bp_i.middle_size
    )
    from .supports import is_representative_support

    representative = is_representative_support(glued, hypergraph)
    planar = is_planar(glued)
    outer: int | Unknown | None = None
    if planar:
        outer = outerplanarity_number(glued, budget)
    return GlueReport(glued, identity, representative, planar, outer)


__all__ = [
    "BoundariedGraph",
    "EdgeBipartition",
    "Signature",
    "GlueReport",
    "middle_set",
    "edge_induced",
    "canonical_bipartition",
    "glue",
    "compute_signature",
    "nested_bipartitions",
    "glue_support_check",
]
