"""Simple graphs, plane embeddings, layer decompositions, outerplanarity.

Embeddings are combinatorial: a rotation system (cyclic neighbor order per
vertex) plus a designated outer face.  Face tracing turns a rotation system
into face walks; the Euler face count is the planarity certificate for a
rotation system.  Layer decompositions peel outer-face vertices until the
graph is empty; a graph is r-outerplanar when some embedding peels away in
at most r rounds.

Outerplanarity is decided by exhaustive rotation-system enumeration under a
node budget.  There is deliberately no polynomial-time outerplanarity-index
algorithm here; desk-scale instances are the target and budget exhaustion
is reported as an explicit Unknown, never coerced to a boolean.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import networkx as nx

from .budget import Budget, BudgetExhausted, Unknown, default_budget
from .errors import DomainError, EmbeddingError, InputError

Vertex = str
Edge = tuple[Vertex, Vertex]
DirectedEdge = tuple[Vertex, Vertex]
Walk = tuple[DirectedEdge, ...]


def edge_key(u: Vertex, v: Vertex) -> Edge:
    """Canonical (sorted) form of an undirected edge."""
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class SimpleGraph:
    """Immutable simple graph with canonically ordered vertices and edges."""

    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertex_set(self) -> frozenset[Vertex]:
        return frozenset(self.vertices)

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def adjacency(self) -> dict[Vertex, tuple[Vertex, ...]]:
        nbrs: dict[Vertex, list[Vertex]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return {v: tuple(sorted(ns)) for v, ns in nbrs.items()}

    def degree(self, v: Vertex) -> int:
        return sum(1 for e in self.edges if v in e)

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return edge_key(u, v) in self.edge_set()

    def induced(self, keep: Iterable[Vertex]) -> "SimpleGraph":
        keep_set = set(keep)
        return make_graph(
            [v for v in self.vertices if v in keep_set],
            [e for e in self.edges if e[0] in keep_set and e[1] in keep_set],
        )

    def without_vertices(self, drop: Iterable[Vertex]) -> "SimpleGraph":
        drop_set = set(drop)
        return self.induced(v for v in self.vertices if v not in drop_set)

    def with_edges(self, extra: Iterable[tuple[Vertex, Vertex]]) -> "SimpleGraph":
        return make_graph(self.vertices, list(self.edges) + [tuple(e) for e in extra])

    def to_json_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [list(e) for e in self.edges],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "SimpleGraph":
        if not isinstance(data, Mapping):
            raise InputError("graph JSON must be an object")
        try:
            vertices = data["vertices"]
            edges = data["edges"]
        except KeyError as missing:
            raise InputError(f"graph JSON lacks key {missing}")
        if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
            raise InputError("'vertices' must be a list of strings")
        if not isinstance(edges, list):
            raise InputError("'edges' must be a list of vertex pairs")
        pairs = []
        for e in edges:
            if not isinstance(e, list) or len(e) != 2 or not all(isinstance(v, str) for v in e):
                raise InputError("each edge must be a pair of vertex ids")
            pairs.append((e[0], e[1]))
        return make_graph(vertices, pairs)


def make_graph(vertices: Iterable[Vertex], edges: Iterable[tuple[Vertex, Vertex]]) -> SimpleGraph:
    """Normalize to a canonical :class:`SimpleGraph`.

    Parallel edges collapse; self-loops and unknown endpoints are input
    errors.
    """
    vertex_tuple = tuple(sorted(set(vertices)))
    known = set(vertex_tuple)
    canon: set[Edge] = set()
    for u, v in edges:
        if u == v:
            raise InputError(f"self-loop at {u!r} is not allowed")
        if u not in known or v not in known:
            raise InputError(f"edge ({u!r}, {v!r}) uses an undeclared vertex")
        canon.add(edge_key(u, v))
    return SimpleGraph(vertex_tuple, tuple(sorted(canon)))


def connected_components(graph: SimpleGraph) -> tuple[tuple[Vertex, ...], ...]:
    adj = graph.adjacency()
    seen: set[Vertex] = set()
    comps: list[tuple[Vertex, ...]] = []
    for start in graph.vertices:
        if start in seen:
            continue
        queue = deque([start])
        seen.add(start)
        comp = [start]
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(tuple(sorted(comp)))
    return tuple(comps)


def is_graph_connected(graph: SimpleGraph) -> bool:
    return len(connected_components(graph)) <= 1


def is_planar(graph: SimpleGraph) -> bool:
    """Planarity of a simple graph.

    Graphs violating the edge-count bound m > 3n - 6 (n >= 3) are rejected
    without search; graphs with fewer than 9 edges are always planar (the
    smallest non-planar graphs need 9).  The remaining cases go to a
    linear-time planarity test.
    """
    n, m = graph.n, graph.m
    if n >= 3 and m > 3 * n - 6:
        return False
    if m < 9:
        return True
    g = nx.Graph()
    g.add_nodes_from(graph.vertices)
    g.add_edges_from(graph.edges)
    ok, _ = nx.check_planarity(g, counterexample=False)
    return bool(ok)


def bridges_and_cut_vertices(graph: SimpleGraph) -> tuple[frozenset[Edge], frozenset[Vertex]]:
    """Classical DFS lowpoint computation, linear time."""
    adj = graph.adjacency()
    disc: dict[Vertex, int] = {}
    low: dict[Vertex, int] = {}
    parent: dict[Vertex, Vertex | None] = {}
    bridges: set[Edge] = set()
    cuts: set[Vertex] = set()
    counter = itertools.count()

    for root in graph.vertices:
        if root in disc:
            continue
        parent[root] = None
        root_children = 0
        # iterative DFS: (vertex, iterator over neighbors)
        disc[root] = low[root] = next(counter)
        stack = [(root, iter(adj[root]))]
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if w not in disc:
                    parent[w] = v
                    if v == root:
                        root_children += 1
                    disc[w] = low[w] = next(counter)
                    stack.append((w, iter(adj[w])))
                    advanced = True
                    break
                elif w != parent[v]:
                    low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                p = parent[v]
                if p is not None:
                    low[p] = min(low[p], low[v])
                    if low[v] > disc[p]:
                        bridges.add(edge_key(p, v))
                    if p != root and low[v] >= disc[p]:
                        cuts.add(p)
        if root_children >= 2:
            cuts.add(root)
    return frozenset(bridges), frozenset(cuts)


# ---------------------------------------------------------------------------
# Rotation systems and face tracing
# ---------------------------------------------------------------------------


def _normalize_walk(walk: Walk) -> Walk:
    pivot = walk.index(min(walk))
    return walk[pivot:] + walk[:pivot]


def _trace_walks(rotation: Mapping[Vertex, tuple[Vertex, ...]]) -> tuple[list[Walk], dict[DirectedEdge, int]]:
    """All face walks of a rotation system.

    The successor of directed edge (u, v) is (v, w) where w follows u in the
    rotation at v.  The successor map permutes directed edges, so the orbits
    are the closed face walks and each directed edge lies in exactly one.
    """
    index_of = {v: {u: i for i, u in enumerate(nbrs)} for v, nbrs in rotation.items()}
    walks: list[Walk] = []
    walk_of: dict[DirectedEdge, int] = {}
    directed = sorted((v, w) for v, nbrs in rotation.items() for w in nbrs)
    for start in directed:
        if start in walk_of:
            continue
        walk: list[DirectedEdge] = []
        edge = start
        while edge not in walk_of:
            walk_of[edge] = len(walks)
            walk.append(edge)
            a, b = edge
            nbrs = rotation[b]
            edge = (b, nbrs[(index_of[b][a] + 1) % len(nbrs)])
        assert edge == start, "successor orbit must close at its start"
        walks.append(_normalize_walk(tuple(walk)))
    return walks, {de: walk_of[de] for de in walk_of}


@dataclass(frozen=True)
class Face:
    """A face of an embedding.

    The outer face of a disconnected embedding consists of one boundary walk
    per edge-bearing component (components are embedded side by side) plus
    every isolated vertex.
    """

    walks: tuple[Walk, ...]
    isolated: frozenset[Vertex]
    is_outer: bool

    def vertex_set(self) -> frozenset[Vertex]:
        verts = {u for walk in self.walks for (u, _) in walk}
        return frozenset(verts | self.isolated)


@dataclass(eq=False)
class PlaneEmbedding:
    """A validated rotation system with a designated outer face.

    ``outer_walks`` holds one normalized face walk per edge-bearing
    component; isolated vertices always lie in the outer face.
    """

    graph: SimpleGraph
    rotation: dict[Vertex, tuple[Vertex, ...]]
    outer_walks: tuple[Walk, ...]

    def isolated_vertices(self) -> frozenset[Vertex]:
        return frozenset(v for v in self.graph.vertices if not self.rotation[v])

    def to_json_dict(self) -> dict:
        data = self.graph.to_json_dict()
        data["rotation"] = {v: list(nbrs) for v, nbrs in sorted(self.rotation.items())}
        walks = [_walk_vertex_list(w) for w in self.outer_walks]
        data["outer_face"] = walks[0] if len(walks) == 1 else walks
        return data

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "PlaneEmbedding":
        graph = SimpleGraph.from_json_dict(data)
        if "rotation" not in data or "outer_face" not in data:
            raise InputError("embedding JSON needs 'rotation' and 'outer_face'")
        rotation = data["rotation"]
        if not isinstance(rotation, Mapping):
            raise InputError("'rotation' must map vertices to neighbor lists")
        rot = {}
        for v, nbrs in rotation.items():
            if not isinstance(nbrs, list) or not all(isinstance(w, str) for w in nbrs):
                raise InputError("rotation entries must be lists of vertex ids")
            rot[v] = tuple(nbrs)
        outer = data["outer_face"]
        if outer and isinstance(outer[0], list):
            outer_faces = [list(w) for w in outer]
        else:
            outer_faces = [list(outer)] if outer else []
        return plane_embedding(graph, rot, outer_faces if len(outer_faces) != 1 else outer_faces[0])


def _walk_vertex_list(walk: Walk) -> list[Vertex]:
    return [u for (u, _) in walk]


def _vertex_list_to_walk(vertices: Sequence[Vertex]) -> Walk:
    if len(vertices) < 2:
        raise InputError("a face walk needs at least two vertices")
    cycle = list(vertices) + [vertices[0]]
    return _normalize_walk(tuple((cycle[i], cycle[i + 1]) for i in range(len(vertices))))


def plane_embedding(
    graph: SimpleGraph,
    rotation: Mapping[Vertex, Sequence[Vertex]],
    outer_face: Sequence,
) -> PlaneEmbedding:
    """Validate a rotation system and outer-face choice into an embedding.

    ``outer_face`` is a face walk given as a vertex list (or a list of such
    walks, one per edge-bearing component).  The rotation must list exactly
    the neighbors of each vertex, the traced faces must satisfy Euler's
    formula on every component, and every outer walk must be one of the
    traced faces.
    """
    rot = {v: tuple(rotation.get(v, ())) for v in graph.vertices}
    if set(rotation.keys()) - set(graph.vertices):
        raise EmbeddingError("rotation mentions vertices outside the graph")
    adj = graph.adjacency()
    for v in graph.vertices:
        if tuple(sorted(rot[v])) != adj[v]:
            raise EmbeddingError(f"rotation at {v!r} does not list its neighbors exactly once")

    walks, _ = _trace_walks(rot)
    _check_euler_per_component(graph, walks)

    if outer_face and not isinstance(outer_face[0], (list, tuple)):
        outer_lists = [list(outer_face)]
    else:
        outer_lists = [list(w) for w in outer_face]

    edge_bearing = [comp for comp in connected_components(graph) if len(comp) > 1 or graph.induced(comp).m > 0]
    if not outer_lists:
        if edge_bearing:
            raise EmbeddingError("an outer face walk is required when the graph has edges")
        return PlaneEmbedding(graph, rot, ())

    traced = {w: i for i, w in enumerate(walks)}
    outer_walks = []
    for vertex_list in outer_lists:
        walk = _vertex_list_to_walk(vertex_list)
        if walk not in traced:
            raise EmbeddingError(f"outer face {vertex_list!r} is not a face of this rotation system")
        outer_walks.append(walk)
    if len(set(outer_walks)) != len(outer_walks):
        raise EmbeddingError("duplicate outer face walks")
    comp_of_vertex = {}
    for i, comp in enumerate(edge_bearing):
        for v in comp:
            comp_of_vertex[v] = i
    covered = {comp_of_vertex[w[0][0]] for w in outer_walks}
    if len(outer_walks) != len(edge_bearing) or covered != set(range(len(edge_bearing))):
        raise EmbeddingError("need exactly one outer walk per edge-bearing component")
    return PlaneEmbedding(graph, rot, tuple(sorted(outer_walks)))


def _check_euler_per_component(graph: SimpleGraph, walks: list[Walk]) -> None:
    comps = connected_components(graph)
    comp_of = {}
    for i, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = i
    walk_count = [0] * len(comps)
    for walk in walks:
        walk_count[comp_of[walk[0][0]]] += 1
    for i, comp in enumerate(comps):
        sub = graph.induced(comp)
        if sub.m == 0:
            continue
        if sub.n - sub.m + walk_count[i] != 2:
            raise EmbeddingError(
                f"rotation system is not planar on component containing {comp[0]!r}"
                f" (Euler count {sub.n}-{sub.m}+{walk_count[i]} != 2)"
            )


def trace_faces(embedding: PlaneEmbedding) -> tuple[Face, ...]:
    """Faces of the embedding, the outer face first.

    The face count f satisfies n - m + f = 1 + c where c is the number of
    connected components (the outer face is shared by all components).
    """
    walks, _ = _trace_walks(embedding.rotation)
    outer_set = set(embedding.outer_walks)
    isolated = embedding.isolated_vertices()
    faces = [Face(tuple(sorted(outer_set)), isolated, True)]
    for walk in walks:
        if walk not in outer_set:
            faces.append(Face((walk,), frozenset(), False))
    graph = embedding.graph
    c = len(connected_components(graph))
    if graph.n - graph.m + len(faces) != 1 + c:
        raise EmbeddingError("face count violates Euler's formula")
    return tuple(faces)


# ---------------------------------------------------------------------------
# Layer decompositions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LayerDecomposition:
    layers: tuple[frozenset[Vertex], ...]

    @property
    def count(self) -> int:
        return len(self.layers)


def layer_decomposition(embedding: PlaneEmbedding) -> LayerDecomposition:
    """Peel outer-face vertices until nothing remains.

    Each round removes the vertices on the current outer face, keeps the
    induced rotations, re-traces the faces, and selects as new outer face of
    each remaining component the face whose region absorbed the old outer
    region.  Deleting a vertex merges all faces around it into the outer
    region, so the absorbing faces are exactly those containing a directed
    edge whose previous face visited a deleted vertex.
    """
    rot = dict(embedding.rotation)
    outer_walks = embedding.outer_walks
    layers: list[frozenset[Vertex]] = []
    while rot:
        walks, walk_of = _trace_walks(rot)
        isolated = {v for v, nbrs in rot.items() if not nbrs}
        on_outer = {u for walk in outer_walks for (u, _) in walk}
        layer = frozenset(on_outer | isolated)
        if not layer:
            raise EmbeddingError("peeling stalled; embedding state is inconsistent")
        layers.append(layer)

        touched = [any(u in layer or v in layer for (u, v) in walk) for walk in walks]
        new_rot = {
            v: tuple(w for w in nbrs if w not in layer)
            for v, nbrs in rot.items()
            if v not in layer
        }
        if not new_rot:
            break
        new_walks, _ = _trace_walks(new_rot)
        new_outer = [
            walk
            for walk in new_walks
            if any(touched[walk_of[de]] for de in walk)
        ]
        remaining = make_graph(new_rot.keys(), [de for w in new_walks for de in w])
        bearing = sum(1 for comp in connected_components(remaining) if remaining.induced(comp).m > 0)
        if len(new_outer) != bearing:
            raise EmbeddingError("peeling found an ambiguous outer face; embedding state is inconsistent")
        rot = new_rot
        outer_walks = tuple(sorted(new_outer))
    return LayerDecomposition(tuple(layers))


def _layer_count_by_face_distance(
    rotation: Mapping[Vertex, tuple[Vertex, ...]],
    walks: list[Walk],
    outer_walk_ids: set[int],
) -> int:
    """Number of layers via alternating vertex/face BFS from the outer face.

    A vertex lies in layer i exactly when the shortest alternating
    vertex-face path from it to the outer face passes i faces.  This agrees
    with peeling (cross-checked in the tests) and is cheap enough to sit in
    the inner loop of embedding enumeration.
    """
    walk_vertices = [frozenset(u for (u, _) in walk) for walk in walks]
    vertex_walks: dict[Vertex, list[int]] = {v: [] for v in rotation}
    for wid, verts in enumerate(walk_vertices):
        for v in verts:
            vertex_walks[v].append(wid)

    assigned: set[Vertex] = set()
    seen_walks = set(outer_walk_ids)
    frontier = set()
    for wid in outer_walk_ids:
        frontier |= walk_vertices[wid]
    frontier |= {v for v, nbrs in rotation.items() if not nbrs}
    levels = 0
    while frontier:
        levels += 1
        assigned |= frontier
        next_walks = {
            wid
            for v in frontier
            for wid in vertex_walks[v]
            if wid not in seen_walks
        }
        seen_walks |= next_walks
        frontier = set()
        for wid in next_walks:
            frontier |= walk_vertices[wid] - assigned
    if len(assigned) != len(rotation):
        raise EmbeddingError("face-distance sweep did not reach every vertex")
    return levels


# ---------------------------------------------------------------------------
# Outerplanarity by exhaustive embedding enumeration
# ---------------------------------------------------------------------------


def _rotation_choices(graph: SimpleGraph) -> tuple[tuple[Vertex, ...], list[list[tuple[Vertex, ...]]]]:
    """Per-vertex cyclic orders, canonically enumerated.

    Cyclic orders are the same up to rotation, so the first (smallest)
    neighbor is pinned and the remaining neighbors are permuted in
    lexicographic order; vertices of degree <= 2 have a single cyclic order.
    """
    adj = graph.adjacency()
    order = graph.vertices
    choices: list[list[tuple[Vertex, ...]]] = []
    for v in order:
        nbrs = adj[v]
        if len(nbrs) <= 2:
            choices.append([nbrs])
        else:
            head, rest = nbrs[0], nbrs[1:]
            choices.append([(head,) + perm for perm in itertools.permutations(rest)])
    return order, choices


def _enumerate_component_layers(
    graph: SimpleGraph,
    budget: Budget,
    stop_at: int | None,
    floor: int = 1,
    seed: tuple[int, PlaneEmbedding] | None = None,
) -> tuple[int | None, PlaneEmbedding | None, bool]:
    """Minimum layer count over all embeddings of a connected planar graph.

    Returns (best count, witness embedding, exact) where exact is False only
    if ``stop_at`` short-circuited the sweep.  ``floor`` is a proven lower
    bound letting an exact sweep stop as soon as it is met; ``seed`` is an
    already-known embedding bounding the answer from above.
    """
    if graph.m == 0:
        # single vertex; the lone layer is the vertex itself
        emb = PlaneEmbedding(graph, {v: () for v in graph.vertices}, ())
        return 1, emb, True
    order, choices = _rotation_choices(graph)
    best: int | None = None
    witness: PlaneEmbedding | None = None
    if seed is not None:
        best, witness = seed
    for combo in itertools.product(*choices):
        budget.spend()
        rotation = dict(zip(order, combo))
        walks, _ = _trace_walks(rotation)
        if graph.n - graph.m + len(walks) != 2:
            continue  # rotation system of positive genus
        for wid, walk in enumerate(walks):
            count = _layer_count_by_face_distance(rotation, walks, {wid})
            if best is None or count < best:
                best = count
                witness = PlaneEmbedding(graph, rotation, (walk,))
                if stop_at is not None and best <= stop_at:
                    return best, witness, False
                if best <= floor:
                    return best, witness, True
    return best, witness, True


def _apex_outerplanar_witness(graph: SimpleGraph) -> PlaneEmbedding | None:
    """Outerplanarity decided exactly via the apex characterization.

    A graph is outerplanar if and only if adding one vertex adjacent to
    everything keeps it planar: the apex sits in a face seeing every vertex.
    Returns a one-layer witness embedding, or None when the graph is not
    outerplanar.  The graph must be connected.
    """
    if graph.m == 0:
        return PlaneEmbedding(graph, {v: () for v in graph.vertices}, ())
    g = nx.Graph()
    g.add_nodes_from(graph.vertices)
    g.add_edges_from(graph.edges)
    apex = ("apex",)  # tuple node cannot collide with string vertices
    g.add_edges_from((apex, v) for v in graph.vertices)
    ok, emb = nx.check_planarity(g)
    if not ok:
        return None
    data = emb.get_data()
    rotation = {
        v: tuple(w for w in data.get(v, []) if w != apex) for v in graph.vertices
    }
    walks, _ = _trace_walks(rotation)
    everyone = set(graph.vertices)
    for walk in walks:
        if {u for (u, _) in walk} == everyone:
            return PlaneEmbedding(graph, rotation, (walk,))
    raise EmbeddingError("apex removal left no all-vertex face; embedding corrupt")


def _component_min_layers(
    graph: SimpleGraph,
    budget: Budget,
    stop_at: int | None,
) -> tuple[int | None, PlaneEmbedding | None]:
    """Fast paths plus exhaustive enumeration for one connected planar graph.

    The apex test settles layer count 1 exactly in both directions.  A
    library embedding with its best outer face settles count 2 exactly (the
    apex refusal is a lower bound of 2) and often short-circuits ``stop_at``;
    everything else falls through to the budgeted rotation sweep.
    """
    apex_witness = _apex_outerplanar_witness(graph)
    if apex_witness is not None:
        return 1, apex_witness
    if stop_at == 1:
        return None, None  # definitely not outerplanar
    emb = embedding_from_networkx(graph)
    assert emb is not None, "caller guarantees planarity"
    walks, _ = _trace_walks(emb.rotation)
    outer_id = walks.index(emb.outer_walks[0])
    bound = _layer_count_by_face_distance(emb.rotation, walks, {outer_id})
    if bound == 2:
        return 2, emb
    if stop_at is not None and bound <= stop_at:
        return bound, emb
    value, witness, _ = _enumerate_component_layers(
        graph, budget, stop_at, floor=2, seed=(bound, emb)
    )
    return value, witness


def outerplanarity_number(graph: SimpleGraph, budget: int | None = None) -> int | Unknown:
    """Minimum r over all embeddings such that r peeling rounds empty G.

    Components are embedded side by side sharing the outer face, so the
    number for a disconnected graph is the maximum over its components.
    Budget exhaustion yields Unknown carrying the best upper bound found.
    """
    if not is_planar(graph):
        raise DomainError("outerplanarity is defined for planar graphs only")
    if graph.n == 0:
        return 0
    tracker = Budget(budget if budget is not None else default_budget())
    overall = 0
    done = 0
    comps = connected_components(graph)
    try:
        for comp in comps:
            sub = graph.induced(comp)
            value, _ = _component_min_layers(sub, tracker, stop_at=None)
            assert value is not None, "a planar connected graph always embeds"
            done += 1
            overall = max(overall, value)
    except BudgetExhausted:
        best = overall if done == len(comps) else None
        return Unknown(nodes_expanded=tracker.spent, best_bound=best)
    return overall


def is_r_outerplanar(graph: SimpleGraph, r: int, budget: int | None = None) -> bool | Unknown:
    """True when some embedding peels away within r rounds.

    Short-circuits on the first witness per component; non-planar graphs are
    never r-outerplanar.
    """
    if not isinstance(r, int) or r < 1:
        raise DomainError("r must be an integer >= 1")
    if not is_planar(graph):
        return False
    if graph.n == 0:
        return True
    tracker = Budget(budget if budget is not None else default_budget())
    try:
        for comp in connected_components(graph):
            sub = graph.induced(comp)
            value, _ = _component_min_layers(sub, tracker, stop_at=r)
            if value is None or value > r:
                return False
    except BudgetExhausted:
        return Unknown(nodes_expanded=tracker.spent)
    return True


def find_layered_embedding(
    graph: SimpleGraph, r: int, budget: Budget
) -> tuple[PlaneEmbedding, int] | None | Unknown:
    """A deterministic embedding of a connected graph with <= r layers, if any."""
    if not is_planar(graph):
        return None
    try:
        value, witness = _component_min_layers(graph, budget, stop_at=r)
    except BudgetExhausted:
        return Unknown(nodes_expanded=budget.spent)
    if value is None or value > r:
        return None
    assert witness is not None
    return witness, value


def embedding_from_networkx(graph: SimpleGraph) -> PlaneEmbedding | None:
    """Some planar embedding of a connected graph, outer face minimizing layers.

    Used for planarity-only certificates where any embedding will do; the
    outer face is chosen to make the reported layer count small without an
    exhaustive sweep.
    """
    if graph.m == 0:
        if graph.n == 0:
            return PlaneEmbedding(graph, {}, ())
        return PlaneEmbedding(graph, {v: () for v in graph.vertices}, ())
    g = nx.Graph()
    g.add_nodes_from(graph.vertices)
    g.add_edges_from(graph.edges)
    ok, emb = nx.check_planarity(g)
    if not ok:
        return None
    data = emb.get_data()
    rotation = {v: tuple(data.get(v, [])) for v in graph.vertices}
    walks, _ = _trace_walks(rotation)
    best_wid = 0
    best_count = None
    for wid in range(len(walks)):
        count = _layer_count_by_face_distance(rotation, walks, {wid})
        if best_count is None or count < best_count:
            best_count = count
            best_wid = wid
    return PlaneEmbedding(graph, rotation, (walks[best_wid],))


__all__ = [
    "SimpleGraph",
    "PlaneEmbedding",
    "LayerDecomposition",
    "Face",
    "edge_key",
    "make_graph",
    "connected_components",
    "is_graph_connected",
    "is_planar",
    "bridges_and_cut_vertices",
    "plane_embedding",
    "trace_faces",
    "layer_decomposition",
    "outerplanarity_number",
    "is_r_outerplanar",
    "find_layered_embedding",
    "embedding_from_networkx",
]
