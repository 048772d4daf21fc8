"""Deterministic DOT export of graphs, optionally decorated by a hypergraph."""

from __future__ import annotations

from .hypercore import Hypergraph
from .planegeom import SimpleGraph

# fixed palette, cycled by hyperedge index
_PALETTE = (
    "#1b9e77", "#d95f02", "#7570b3", "#e7298a",
    "#66a61e", "#e6ab02", "#a6761d", "#666666",
)


def export_dot(graph: SimpleGraph, hypergraph: Hypergraph | None = None) -> str:
    """Render a graph as DOT text.

    With a hypergraph, every vertex label lists its hyperedge memberships
    (by index) and every edge is colored by the smallest hyperedge
    containing both endpoints, cycling a fixed palette.  Output is
    deterministic: canonical vertex and edge order, stable colors.
    """
    lines = ["graph support {"]
    memberships: dict[str, list[int]] = {v: [] for v in graph.vertices}
    if hypergraph is not None:
        for i, edge in enumerate(hypergraph.hyperedges):
            for v in edge:
                if v in memberships:
                    memberships[v].append(i)
    for v in graph.vertices:
        if hypergraph is not None:
            tags = ",".join(f"F{i}" for i in memberships[v])
            label = f"{v}\\n{tags}" if tags else v
            lines.append(f'  "{v}" [label="{label}"];')
        else:
            lines.append(f'  "{v}";')
    for u, v in graph.edges:
        color = None
        if hypergraph is not None:
            containing = [
                i for i, edge in enumerate(hypergraph.hyperedges)
                if u in edge and v in edge
            ]
            if containing:
                color = _PALETTE[containing[0] % len(_PALETTE)]
        if color is not None:
            lines.append(f'  "{u}" -- "{v}" [color="{color}"];')
        else:
            lines.append(f'  "{u}" -- "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


__all__ = ["export_dot"]
