"""Built-in instances and seeded random hypergraph generation.

The ``fig2`` instance is a 12-vertex hypergraph with a twin pair {t, t'}
that admits a 2-outerplanar support, yet loses all planar supports when one
twin is removed.  The solid size-two hyperedges pin the skeleton (a K4 plus
two anchored chains); eight five-vertex hyperedges force the twins to act
as conduits on both sides of the skeleton.

``scaled_twin_family(ell)`` wires ell renamed copies of the fig2 instance
to a hub vertex so that the twin class grows to size 2*ell while a planar
support still exists; deleting any twin destroys all planar supports.

All generators are pure functions of their arguments.
"""

from __future__ import annotations

import random

from .errors import DomainError
from .hypercore import Hypergraph, build_hypergraph, is_connected
from .planegeom import PlaneEmbedding, SimpleGraph, make_graph, plane_embedding, trace_faces

_FIG2_BASE = ("a", "b", "c", "d", "t", "t'", "ub", "uc", "ud", "va", "vb", "vd")

_FIG2_SOLID_PAIRS = (
    # K4 on a, b, c, d
    ("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d"),
    # chain a - va - vd - vb - b, anchored to d through vd
    ("a", "va"), ("va", "vd"), ("vb", "vd"), ("b", "vb"), ("d", "vd"),
    # chain b - ub - ud - uc - c, anchored to d through ud
    ("b", "ub"), ("ub", "ud"), ("uc", "ud"), ("c", "uc"), ("d", "ud"),
)

_FIG2_FIVE_SETS = (
    ("a", "va", "t", "t'", "c"),
    ("a", "vb", "t", "t'", "c"),
    ("b", "va", "t", "t'", "c"),
    ("b", "vb", "t", "t'", "c"),
    ("b", "ub", "t", "t'", "a"),
    ("b", "uc", "t", "t'", "a"),
    ("c", "ub", "t", "t'", "a"),
    ("c", "uc", "t", "t'", "a"),
)

_FIG2_TWIN_EDGES = (
    ("t", "a"), ("t", "b"), ("t", "va"), ("t", "vb"),
    ("t'", "b"), ("t'", "c"), ("t'", "ub"), ("t'", "uc"),
)

# Cyclic (counterclockwise) neighbor orders of the reference drawing of the
# fig2 support.  The drawing is one faithful reading of the intended
# embedding; it is validated by the 2-layer acceptance check, not trusted.
_FIG2_ROTATION = {
    "a": ("c", "d", "va", "t", "b"),
    "b": ("a", "t", "vb", "d", "ub", "t'", "c"),
    "c": ("b", "t'", "uc", "d", "a"),
    "d": ("ud", "b", "vd", "a", "c"),
    "t": ("vb", "b", "a", "va"),
    "t'": ("b", "ub", "uc", "c"),
    "ub": ("b", "ud", "t'"),
    "uc": ("t'", "ud", "c"),
    "ud": ("ub", "d", "uc"),
    "va": ("vd", "t", "a"),
    "vb": ("b", "t", "vd"),
    "vd": ("vb", "va", "d"),
}


def fig2_hypergraph() -> Hypergraph:
    """The 12-vertex instance whose twin pair cannot be dropped."""
    return build_hypergraph(_FIG2_BASE, list(_FIG2_SOLID_PAIRS) + list(_FIG2_FIVE_SETS))


def fig2_support() -> tuple[SimpleGraph, PlaneEmbedding]:
    """The reference support of the fig2 instance with its 2-layer embedding."""
    graph = make_graph(_FIG2_BASE, list(_FIG2_SOLID_PAIRS) + list(_FIG2_TWIN_EDGES))
    probe = PlaneEmbedding(graph, {v: tuple(ns) for v, ns in _FIG2_ROTATION.items()}, ())
    walks, _ = _trace_rotation(probe)
    outer = [w for w in walks if {u for (u, _) in w} == {"a", "b", "c"}]
    assert len(outer) == 1, "reference rotation must have a unique a-b-c face"
    embedding = plane_embedding(graph, _FIG2_ROTATION, [u for (u, _) in outer[0]])
    return graph, embedding


def _trace_rotation(embedding: PlaneEmbedding):
    from .planegeom import _trace_walks

    return _trace_walks(embedding.rotation)


def _copy_name(base: str, i: int) -> str:
    return f"{base}.{i}"


def scaled_twin_family(ell: int) -> Hypergraph:
    """ell wired copies of the fig2 instance sharing the hub vertex ``vstar``.

    The twin class T collects all 2*ell t-vertices; eight hyperedges span
    every copy, the hub, and T.
    """
    if not isinstance(ell, int) or ell < 1:
        raise DomainError("ell must be an integer >= 1")
    hub = "vstar"
    vertices = [hub] + [_copy_name(base, i) for i in range(1, ell + 1) for base in _FIG2_BASE]
    hyperedges: list[list[str]] = []
    for i in range(1, ell + 1):
        for u, v in _FIG2_SOLID_PAIRS:
            hyperedges.append([_copy_name(u, i), _copy_name(v, i)])
        for base in ("a", "b", "c"):
            hyperedges.append([_copy_name(base, i), hub])

    def group(base: str) -> list[str]:
        return [_copy_name(base, i) for i in range(1, ell + 1)]

    twins = group("t") + group("t'")
    for first, second, middle in (
        ("a", "c", "va"), ("a", "c", "vb"),
        ("b", "c", "va"), ("b", "c", "vb"),
        ("b", "a", "ub"), ("b", "a", "uc"),
        ("c", "a", "ub"), ("c", "a", "uc"),
    ):
        hyperedges.append(group(first) + group(second) + group(middle) + twins + [hub])
    return build_hypergraph(vertices, hyperedges)


def scaled_twin_family_support(ell: int) -> SimpleGraph:
    """Planar support for :func:`scaled_twin_family`: copies fanned around the hub.

    Construction is checked on the spot: the result must support the family
    and be planar.
    """
    if not isinstance(ell, int) or ell < 1:
        raise DomainError("ell must be an integer >= 1")
    hub = "vstar"
    vertices = [hub] + [_copy_name(base, i) for i in range(1, ell + 1) for base in _FIG2_BASE]
    edges: list[tuple[str, str]] = []
    for i in range(1, ell + 1):
        for u, v in list(_FIG2_SOLID_PAIRS) + list(_FIG2_TWIN_EDGES):
            edges.append((_copy_name(u, i), _copy_name(v, i)))
        for base in ("a", "b", "c"):
            edges.append((_copy_name(base, i), hub))
    graph = make_graph(vertices, edges)

    from .planegeom import is_planar
    from .supports import is_support

    assert is_support(graph, scaled_twin_family(ell)), "family support construction broke"
    assert is_planar(graph), "family support must stay planar"
    return graph


def random_hypergraph(n: int, m: int, max_edge_size: int, seed: int) -> Hypergraph:
    """Seeded connected hypergraph with m distinct hyperedges of size 2..max.

    Deterministic in the seed.  Raises when the parameters cannot be met
    (too many hyperedges requested, or no connected draw found within the
    attempt bound).
    """
    if n < 1 or m < 1 or max_edge_size < 1:
        raise DomainError("n, m and max_edge_size must be >= 1")
    top = min(max_edge_size, n)
    if top < 2:
        raise DomainError("hyperedges need at least two vertices")
    available = _count_subsets(n, top)
    if m > available:
        raise DomainError(f"cannot pick {m} distinct hyperedges; only {available} exist")
    vertices = [f"v{i:02d}" for i in range(1, n + 1)]
    rng = random.Random(seed)
    for _ in range(200):
        chosen: set[tuple[str, ...]] = set()
        guard = 0
        while len(chosen) < m and guard < 200 * m + 200:
            guard += 1
            size = rng.randint(2, top)
            edge = tuple(sorted(rng.sample(vertices, size)))
            chosen.add(edge)
        if len(chosen) < m:
            continue
        candidate = build_hypergraph(vertices, sorted(chosen))
        if is_connected(candidate):
            return candidate
    raise DomainError(
        f"no connected hypergraph with n={n}, m={m}, max_edge_size={max_edge_size} "
        f"found for seed {seed}"
    )


def _count_subsets(n: int, top: int) -> int:
    total = 0
    binom = 1
    for k in range(1, top + 1):
        binom = binom * (n - k + 1) // k
        if k >= 2:
            total += binom
        if total > 10**9:
            break
    return total


__all__ = [
    "fig2_hypergraph",
    "fig2_support",
    "scaled_twin_family",
    "scaled_twin_family_support",
    "random_hypergraph",
]
