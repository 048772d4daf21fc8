"""Support verification and exhaustive r-outerplanar support search.

A support for a hypergraph is a graph on the same vertices in which every
hyperedge induces a connected subgraph.  A representative support may live
on a vertex subset as long as every omitted vertex is covered by a kept one;
attaching the omitted vertices as pendants of covering vertices turns any
representative support into a full support without adding layers.

The search restricts candidate edges to pairs lying inside some hyperedge:
deleting any other edge from a support leaves every induced hyperedge
subgraph untouched, so within-hyperedge pairs suffice (this pruning step is
validated by randomized tests).  Candidates are explored by increasing edge
count, lexicographically within a count, with edges of size-two hyperedges
fixed upfront; the answer is therefore deterministic and the first
certificate has the minimum edge count.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import networkx as nx

from .budget import Budget, BudgetExhausted, SearchStats, Unknown, default_budget
from .errors import DomainError, InputError
from .hypercore import (
    Hypergraph,
    _incidence_map,
    is_connected,
    shrink,
    twin_partition,
)
from .planegeom import (
    PlaneEmbedding,
    SimpleGraph,
    connected_components,
    edge_key,
    embedding_from_networkx,
    find_layered_embedding,
    is_planar,
    layer_decomposition,
    make_graph,
)


class _PlanarOnly:
    def __repr__(self) -> str:
        return "PLANAR_ONLY"


#: Ask for any planar support, i.e. r >= n (every planar graph on n vertices
#: is n-outerplanar).
PLANAR_ONLY = _PlanarOnly()


@dataclass(frozen=True)
class SupportCertificate:
    """A verified support together with an optional embedding witness."""

    graph: SimpleGraph
    embedding: PlaneEmbedding | None = None
    layers_used: int | None = None

    def to_json_dict(self) -> dict:
        data = self.graph.to_json_dict()
        if self.embedding is not None:
            data = self.embedding.to_json_dict()
        if self.layers_used is not None:
            data["layers_used"] = self.layers_used
        return data


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a support search: found / none / unknown, plus counters."""

    status: str
    certificate: SupportCertificate | None
    stats: SearchStats

    @property
    def found(self) -> bool:
        return self.status == "found"


def is_support(graph: SimpleGraph, hypergraph: Hypergraph) -> bool:
    """True when every hyperedge induces a connected subgraph of ``graph``."""
    if graph.vertex_set() != hypergraph.vertex_set():
        raise InputError("support check needs identical vertex sets")
    adj = graph.adjacency()
    for edge in hypergraph.hyperedges:
        members = set(edge)
        start = edge[0]
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w in members and w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(members):
            return False
    return True


def is_representative_support(graph: SimpleGraph, hypergraph: Hypergraph) -> bool:
    """Support on a vertex subset whose omitted vertices are all covered.

    Covering is containment of hyperedge incidences: a kept vertex w covers
    an omitted vertex u when every hyperedge containing u contains w.
    """
    kept = graph.vertex_set()
    universe = hypergraph.vertex_set()
    if not kept <= universe:
        return False
    incidence = _incidence_map(hypergraph)
    for u in universe - kept:
        if not any(incidence[u] <= incidence[w] for w in kept):
            return False
    return is_support(graph, shrink(hypergraph, kept))


def extend_representative(graph: SimpleGraph, hypergraph: Hypergraph) -> SimpleGraph:
    """Grow a representative support to a full support by pendant attachment.

    Every omitted vertex becomes a degree-one neighbor of the canonically
    smallest kept vertex covering it.  The result is checked to be a
    support before it is returned.
    """
    if not is_representative_support(graph, hypergraph):
        raise DomainError("extend_representative needs a representative support")
    incidence = _incidence_map(hypergraph)
    kept = sorted(graph.vertex_set())
    extra = []
    for u in hypergraph.vertices:
        if u in graph.vertex_set():
            continue
        anchor = next(w for w in kept if incidence[u] <= incidence[w])
        extra.append((u, anchor))
    extended = make_graph(hypergraph.vertices, list(graph.edges) + extra)
    assert is_support(extended, hypergraph), "pendant extension must yield a support"
    return extended


def remove_twin_from_support(graph: SimpleGraph, v: str) -> SimpleGraph:
    """Drop a degree-one vertex from a support.

    With deg(v) = 1 the vertex is never a cut vertex of an induced hyperedge
    subgraph, so the result supports the hypergraph with v removed.
    """
    if v not in graph.vertex_set():
        raise InputError(f"unknown vertex {v!r}")
    if graph.degree(v) != 1:
        raise DomainError("only degree-one vertices can be dropped this way")
    return graph.without_vertices([v])


# ---------------------------------------------------------------------------
# Exhaustive search over within-hyperedge edge subsets
# ---------------------------------------------------------------------------


class _SupportSearch:
    """Iterative-deepening DFS over subsets of within-hyperedge pairs.

    Partial assignments die when a hyperedge can no longer be connected
    with the chosen plus still-undecided edges, or when the chosen edges
    are already non-planar (both conditions are monotone).
    """

    def __init__(self, hypergraph: Hypergraph, r, budget: Budget):
        self.hypergraph = hypergraph
        self.budget = budget
        self.stats = SearchStats()
        n = hypergraph.n
        self.planar_only = r is PLANAR_ONLY or (isinstance(r, int) and r >= n)
        self.r = None if self.planar_only else r

        candidate_set: set[tuple[str, str]] = set()
        forced_set: set[tuple[str, str]] = set()
        for edge in hypergraph.hyperedges:
            for u, v in itertools.combinations(edge, 2):
                candidate_set.add(edge_key(u, v))
            if len(edge) == 2:
                forced_set.add(edge_key(edge[0], edge[1]))
        self.candidates = sorted(candidate_set)
        self.edge_id = {e: i for i, e in enumerate(self.candidates)}
        self.forced_mask = 0
        for e in forced_set:
            self.forced_mask |= 1 << self.edge_id[e]
        self.free = [e for e in self.candidates if e not in forced_set]
        self.free_bits = [1 << self.edge_id[e] for e in self.free]
        # suffix masks: all free edges from position p onward
        self.tail = [0] * (len(self.free) + 1)
        for p in range(len(self.free) - 1, -1, -1):
            self.tail[p] = self.tail[p + 1] | self.free_bits[p]

        # per hyperedge: local vertex count and its candidate edges
        self.hyper_local = []
        for edge in hypergraph.hyperedges:
            local = {v: i for i, v in enumerate(edge)}
            members = [
                (self.edge_id[edge_key(u, v)], local[u], local[v])
                for u, v in itertools.combinations(edge, 2)
            ]
            self.hyper_local.append((len(edge), members))

        self.popcount_cap = len(self.candidates) if n < 3 else min(len(self.candidates), 3 * n - 6)

    def _connectable(self, avail: int) -> bool:
        for size, members in self.hyper_local:
            parent = list(range(size))

            def find(x: int) -> int:
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            parts = size
            for eid, lu, lv in members:
                if avail >> eid & 1:
                    ru, rv = find(lu), find(lv)
                    if ru != rv:
                        parent[ru] = rv
                        parts -= 1
                        if parts == 1:
                            break
            if parts != 1:
                return False
        return True

    def _planar_mask(self, mask: int) -> bool:
        count = mask.bit_count()
        if count < 9:
            return True
        n = self.hypergraph.n
        if n >= 3 and count > 3 * n - 6:
            return False
        g = nx.Graph()
        for e, i in self.edge_id.items():
            if mask >> i & 1:
                g.add_edge(*e)
        ok, _ = nx.check_planarity(g, counterexample=False)
        return bool(ok)

    def _mask_graph(self, mask: int) -> SimpleGraph:
        return make_graph(
            self.hypergraph.vertices,
            [e for e, i in self.edge_id.items() if mask >> i & 1],
        )

    def _leaf(self, chosen: int) -> SupportCertificate | None:
        self.stats.leaves_checked += 1
        if not self._connectable(chosen):
            # with nothing undecided this is exactly the support test
            self.stats.count_prune("support")
            return None
        graph = self._mask_graph(chosen)
        # planarity of every chosen set was checked on the way down
        return self._certify(graph)

    def _certify(self, graph: SimpleGraph) -> SupportCertificate | None:
        rotations: dict[str, tuple[str, ...]] = {}
        outer_walks: list = []
        for comp in connected_components(graph):
            sub = graph.induced(comp)
            if self.planar_only:
                emb = embedding_from_networkx(sub)
                if emb is None:
                    return None
            else:
                found = find_layered_embedding(sub, self.r, self.budget)
                if found is None:
                    self.stats.count_prune("layers")
                    return None
                if isinstance(found, Unknown):
                    raise BudgetExhausted("embedding enumeration ran out of budget")
                emb, _ = found
            rotations.update(emb.rotation)
            outer_walks.extend(emb.outer_walks)
        embedding = PlaneEmbedding(graph, rotations, tuple(sorted(outer_walks)))
        layers = layer_decomposition(embedding).count
        return SupportCertificate(graph, embedding, layers)

    def _dfs(self, p: int, need: int, chosen: int) -> SupportCertificate | None:
        self.budget.spend()
        self.stats.nodes_expanded += 1
        if need == 0:
            return self._leaf(chosen)
        if len(self.free) - p < need:
            return None
        inc = chosen | self.free_bits[p]
        if self._planar_mask(inc):
            result = self._dfs(p + 1, need - 1, inc)
            if result is not None:
                return result
        else:
            self.stats.count_prune("planarity")
        if self._connectable(chosen | self.tail[p + 1]):
            return self._dfs(p + 1, need, chosen)
        self.stats.count_prune("connectivity")
        return None

    def run(self) -> SearchResult:
        forced_count = self.forced_mask.bit_count()
        try:
            if not self._connectable(self.forced_mask | self.tail[0]):
                # some hyperedge cannot be connected even with every candidate
                return SearchResult("none", None, self.stats)
            if not self._planar_mask(self.forced_mask):
                return SearchResult("none", None, self.stats)
            for k in range(forced_count, self.popcount_cap + 1):
                certificate = self._dfs(0, k - forced_count, self.forced_mask)
                if certificate is not None:
                    return SearchResult("found", certificate, self.stats)
        except BudgetExhausted:
            return SearchResult("unknown", None, self.stats)
        return SearchResult("none", None, self.stats)


def find_r_outerplanar_support(
    hypergraph: Hypergraph, r, budget: int | None = None
) -> SearchResult:
    """Search for an r-outerplanar (or merely planar) support.

    ``r`` is an integer >= 1 or :data:`PLANAR_ONLY`.  The hypergraph must be
    connected.  Returns the first certificate in canonical order, ``none``
    after exhausting the candidate space, or ``unknown`` on budget
    exhaustion; counters for the exhaustive claim ride along in ``stats``.
    """
    if not is_connected(hypergraph):
        raise InputError("support search needs a connected hypergraph")
    _validate_r(r)
    tracker = Budget(budget if budget is not None else default_budget())
    return _SupportSearch(hypergraph, r, tracker).run()


def _validate_r(r) -> None:
    if r is PLANAR_ONLY:
        return
    if not isinstance(r, int) or isinstance(r, bool) or r < 1:
        raise DomainError("r must be an integer >= 1 or PLANAR_ONLY")


def find_min_representative_support(
    hypergraph: Hypergraph, r, budget: int | None = None
) -> SearchResult:
    """Smallest-vertex-set representative r-outerplanar support.

    Candidate vertex sets are tried in increasing size.  Twins are
    interchangeable, so only one representative per twin-class count vector
    is examined: the canonically smallest members of each class.  Every
    candidate must cover all omitted vertices before the per-candidate edge
    search runs on the shrunken hypergraph.
    """
    if not is_connected(hypergraph):
        raise InputError("support search needs a connected hypergraph")
    _validate_r(r)
    tracker = Budget(budget if budget is not None else default_budget())
    twins = twin_partition(hypergraph)
    classes = twins.classes
    incidence = _incidence_map(hypergraph)
    class_incidence = [incidence[cls[0]] for cls in classes]
    sizes = [len(cls) for cls in classes]
    stats = SearchStats()
    try:
        for target in range(1, hypergraph.n + 1):
            for counts in _count_vectors(sizes, target):
                kept: list[str] = []
                for cls, k in zip(classes, counts):
                    kept.extend(cls[:k])
                if not _covers_all(counts, class_incidence):
                    continue
                shrunken = shrink(hypergraph, kept)
                inner = _SupportSearch(shrunken, r, tracker)
                result = inner.run()
                _merge_stats(stats, inner.stats)
                if result.status == "found":
                    return SearchResult("found", result.certificate, stats)
    except BudgetExhausted:
        return SearchResult("unknown", None, stats)
    return SearchResult("none", None, stats)


def _count_vectors(sizes: list[int], target: int):
    """All per-class keep counts summing to ``target``, in lexicographic order."""
    ranges = [range(min(s, target) + 1) for s in sizes]
    for counts in itertools.product(*ranges):
        if sum(counts) == target:
            yield counts


def _covers_all(counts, class_incidence) -> bool:
    kept_ids = [i for i, k in enumerate(counts) if k > 0]
    for i, k in enumerate(counts):
        if k > 0:
            continue
        needed = class_incidence[i]
        if not any(needed <= class_incidence[j] for j in kept_ids):
            return False
    return True


def _merge_stats(into: SearchStats, other: SearchStats) -> None:
    into.nodes_expanded += other.nodes_expanded
    into.leaves_checked += other.leaves_checked
    for kind, count in other.prunes.items():
        into.prunes[kind] = into.prunes.get(kind, 0) + count


__all__ = [
    "PLANAR_ONLY",
    "SupportCertificate",
    "SearchResult",
    "is_support",
    "is_representative_support",
    "extend_representative",
    "remove_twin_from_support",
    "find_r_outerplanar_support",
    "find_min_representative_support",
]
