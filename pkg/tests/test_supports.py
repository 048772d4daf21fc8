"""Support checks, representative supports, and the exhaustive search."""

from __future__ import annotations

import itertools

import pytest

from hypersupport import (
    DomainError,
    InputError,
    PLANAR_ONLY,
    build_hypergraph,
    extend_representative,
    fig2_hypergraph,
    fig2_support,
    find_min_representative_support,
    find_r_outerplanar_support,
    is_planar,
    is_r_outerplanar,
    is_representative_support,
    is_support,
    make_graph,
    random_hypergraph,
    remove_twin_from_support,
    remove_vertices,
    shrink,
)
from oracles import unpruned_support_search


def test_is_support_fig2():
    h = fig2_hypergraph()
    g, _ = fig2_support()
    assert is_support(g, h)


def test_is_support_empty_graph_fails():
    h = build_hypergraph(["a", "b"], [["a", "b"]])
    g = make_graph(["a", "b"], [])
    assert not is_support(g, h)


def test_is_support_clique_always_works():
    for seed in range(4):
        h = random_hypergraph(5, 3, 4, seed)
        clique = make_graph(h.vertices, itertools.combinations(h.vertices, 2))
        assert is_support(clique, h)


def test_is_support_needs_same_vertices():
    h = build_hypergraph(["a", "b", "c"], [["a", "b"]])
    g = make_graph(["a", "b"], [("a", "b")])
    with pytest.raises(InputError):
        is_support(g, h)


def test_representative_support_full_support_counts():
    h = fig2_hypergraph()
    g, _ = fig2_support()
    assert is_representative_support(g, h)


def test_representative_support_fig2_minus_twin():
    h = fig2_hypergraph()
    g, _ = fig2_support()
    trimmed = g.without_vertices(["t'"])
    # t covers t', but dropping t' strands ub and uc inside the five-vertex
    # hyperedges that ran through t', so the support half of the check fails
    from hypersupport import covers, shrink

    assert covers(h, "t", "t'")
    assert not is_support(trimmed, shrink(h, trimmed.vertices))
    assert not is_representative_support(trimmed, h)
    # rerouting the u-side through t repairs it (planarity not required here)
    repaired = trimmed.with_edges([("t", "ub"), ("t", "uc")])
    assert is_representative_support(repaired, h)


def test_representative_support_uncovered_vertex():
    h = build_hypergraph(["a", "b", "c"], [["a", "b"], ["b", "c"]])
    lonely = make_graph(["a"], [])
    assert not is_representative_support(lonely, h)


def test_extend_representative_identity_when_complete():
    h = fig2_hypergraph()
    g, _ = fig2_support()
    assert extend_representative(g, h) == g


def test_extend_representative_reattaches_twin():
    h = fig2_hypergraph()
    g, _ = fig2_support()
    trimmed = g.without_vertices(["t'"]).with_edges([("t", "ub"), ("t", "uc")])
    grown = extend_representative(trimmed, h)
    assert is_support(grown, h)
    assert grown.degree("t'") == 1
    assert grown.has_edge("t'", "t")  # t is the only vertex covering t'


def test_extend_representative_star_case():
    h = build_hypergraph(["a", "b", "c"], [["a", "b", "c"]])
    core = make_graph(["a"], [])
    star = extend_representative(core, h)
    assert sorted(star.edges) == [("a", "b"), ("a", "c")]


def test_extend_representative_rejects_nonrepresentative():
    h = build_hypergraph(["a", "b", "c"], [["a", "b"], ["b", "c"]])
    with pytest.raises(DomainError):
        extend_representative(make_graph(["a"], []), h)


def test_remove_twin_from_support():
    h = fig2_hypergraph()
    g, _ = fig2_support()
    trimmed = g.without_vertices(["t'"]).with_edges([("t", "ub"), ("t", "uc")])
    grown = extend_representative(trimmed, h)
    back = remove_twin_from_support(grown, "t'")
    assert is_support(back, remove_vertices(h, ["t'"]))

    path = make_graph(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert remove_twin_from_support(path, "c").edges == (("a", "b"),)
    with pytest.raises(DomainError):
        remove_twin_from_support(path, "b")


def test_remove_twin_single_edge():
    g = make_graph(["u", "v"], [("u", "v")])
    left = remove_twin_from_support(g, "v")
    assert left.vertices == ("u",) and left.m == 0


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------


def test_search_cycle_hypergraph_forced_edges_suffice():
    h = build_hypergraph(list("abcd"), [["a", "b"], ["b", "c"], ["c", "d"], ["a", "d"]])
    res = find_r_outerplanar_support(h, 1)
    assert res.status == "found"
    assert res.certificate.graph.edges == (("a", "b"), ("a", "d"), ("b", "c"), ("c", "d"))
    assert res.certificate.layers_used == 1


def test_search_fig2_positive_r2():
    res = find_r_outerplanar_support(fig2_hypergraph(), 2, budget=5_000_000)
    assert res.status == "found"
    cert = res.certificate
    assert is_support(cert.graph, fig2_hypergraph())
    assert is_planar(cert.graph)
    assert cert.layers_used <= 2
    assert cert.embedding is not None


def test_search_fig2_negative_planar_only():
    h = remove_vertices(fig2_hypergraph(), ["t"])
    res = find_r_outerplanar_support(h, PLANAR_ONLY, budget=50_000_000)
    assert res.status == "none"
    assert res.stats.nodes_expanded > 0


def test_search_rejects_disconnected():
    h = build_hypergraph(list("abcd"), [["a", "b"], ["c", "d"]])
    with pytest.raises(InputError):
        find_r_outerplanar_support(h, 1)


def test_search_unknown_on_tiny_budget():
    res = find_r_outerplanar_support(fig2_hypergraph(), 2, budget=3)
    assert res.status == "unknown"


def test_search_single_vertex_hypergraph():
    h = build_hypergraph(["a"], [])
    res = find_r_outerplanar_support(h, 1)
    assert res.status == "found"
    assert res.certificate.graph.vertices == ("a",)
    assert res.certificate.layers_used == 1


def test_planar_only_equals_large_r():
    for seed in range(5):
        h = random_hypergraph(5, 3, 3, seed)
        a = find_r_outerplanar_support(h, PLANAR_ONLY)
        b = find_r_outerplanar_support(h, h.n + 3)
        assert a.status == b.status
        if a.status == "found":
            assert a.certificate.graph == b.certificate.graph


def test_edge_pruning_soundness_randomized():
    # deleting all edges outside every hyperedge keeps a support a support
    import random

    for seed in range(20):
        rng = random.Random(seed)
        h = random_hypergraph(n=5 + seed % 3, m=3, max_edge_size=4, seed=seed)
        res = find_r_outerplanar_support(h, PLANAR_ONLY)
        if res.status != "found":
            continue
        base = res.certificate.graph
        all_pairs = list(itertools.combinations(h.vertices, 2))
        extra = [e for e in all_pairs if rng.random() < 0.3]
        padded = base.with_edges(extra)
        assert is_support(padded, h)
        inside = {
            tuple(sorted((u, v)))
            for edge in h.hyperedges
            for u, v in itertools.combinations(edge, 2)
        }
        pruned = make_graph(h.vertices, [e for e in padded.edges if e in inside])
        assert is_support(pruned, h)
        assert set(pruned.edges) <= set(padded.edges)


@pytest.mark.parametrize("seed", range(25))
def test_search_agrees_with_unpruned_oracle_planar(seed):
    h = random_hypergraph(n=4 + seed % 3, m=2 + seed % 3, max_edge_size=4, seed=100 + seed)
    from oracles import candidate_edges

    cand, forced = candidate_edges(h)
    if len(cand) - len(forced) > 14:
        pytest.skip("free candidate set too large for the unpruned oracle")
    status, edges = unpruned_support_search(h, PLANAR_ONLY)
    res = find_r_outerplanar_support(h, PLANAR_ONLY)
    assert res.status == ("found" if status == "found" else "none")
    if status == "found":
        assert tuple(sorted(res.certificate.graph.edge_set())) == edges


@pytest.mark.parametrize("seed", range(12))
def test_search_agrees_with_unpruned_oracle_r(seed):
    h = random_hypergraph(n=4 + seed % 2, m=2 + seed % 2, max_edge_size=3, seed=300 + seed)
    from oracles import candidate_edges

    cand, forced = candidate_edges(h)
    if len(cand) - len(forced) > 10:
        pytest.skip("free candidate set too large for the unpruned oracle")
    r = 1 + seed % 2
    status, edges = unpruned_support_search(h, r)
    res = find_r_outerplanar_support(h, r)
    assert res.status == ("found" if status == "found" else "none")
    if status == "found":
        assert tuple(sorted(res.certificate.graph.edge_set())) == edges


# ---------------------------------------------------------------------------
# minimum representative supports
# ---------------------------------------------------------------------------


def test_min_rep_path_hypergraph():
    # in a path-supported hypergraph the inner neighbor of an end vertex
    # always covers it, so both ends are droppable here
    h = build_hypergraph(list("abcd"), [["a", "b"], ["b", "c"], ["c", "d"]])
    res = find_min_representative_support(h, 1)
    assert res.status == "found"
    assert res.certificate.graph.vertices == ("b", "c")
    assert is_representative_support(res.certificate.graph, h)


def test_min_rep_nothing_removable_without_covering():
    # the four-cycle instance has no covering pair at all, so every vertex
    # is needed
    h = build_hypergraph(list("abcd"), [["a", "b"], ["b", "c"], ["c", "d"], ["a", "d"]])
    res = find_min_representative_support(h, 1)
    assert res.status == "found"
    assert res.certificate.graph.vertices == ("a", "b", "c", "d")


def test_min_rep_single_hyperedge_of_twins():
    # all three vertices are twins; one vertex covers the other two and the
    # shrunken instance needs no edges at all
    h = build_hypergraph(list("abc"), [["a", "b", "c"]])
    res = find_min_representative_support(h, 1)
    assert res.status == "found"
    assert res.certificate.graph.vertices == ("a",)
    assert is_representative_support(res.certificate.graph, h)


def test_min_rep_result_is_representative():
    for seed in range(8):
        h = random_hypergraph(5, 3, 3, seed)
        res = find_min_representative_support(h, 2)
        if res.status == "found":
            assert is_representative_support(res.certificate.graph, h)


def test_min_rep_minimality_against_brute_force():
    # brute force over all vertex subsets, not just twin-class multisets
    for seed in range(6):
        h = random_hypergraph(5, 3, 3, seed + 40)
        res = find_min_representative_support(h, PLANAR_ONLY)
        if res.status != "found":
            continue
        best = res.certificate.graph.n
        smaller_exists = False
        for size in range(0, best):
            for keep in itertools.combinations(h.vertices, size):
                sub = shrink(h, keep)
                inner = unpruned_support_search(sub, PLANAR_ONLY)
                if inner[0] != "found":
                    continue
                g = make_graph(sub.vertices, inner[1])
                if is_representative_support(g, h):
                    smaller_exists = True
        assert not smaller_exists
