"""Deciding and constructing r-outerplanar supports for hypergraphs.

A support for a hypergraph is a graph on the same vertex set in which every
hyperedge induces a connected subgraph; a hypergraph has a subdivision-style
drawing exactly when it has a planar support.  This package provides the
hypergraph and plane-embedding machinery, exhaustive support search with
auditable exhaustion counters, the twin-class size threshold reduction, and
the edge-bipartition signature and gluing toolkit, plus a CLI front end.
"""

from .budget import DEFAULT_BUDGET, SearchStats, Unknown, default_budget
from .dot import export_dot
from .errors import DomainError, EmbeddingError, HypersupportError, InputError
from .glueing import (
    BoundariedGraph,
    EdgeBipartition,
    GlueReport,
    Signature,
    canonical_bipartition,
    compute_signature,
    edge_induced,
    glue,
    glue_support_check,
    middle_set,
    nested_bipartitions,
)
from .hypercore import (
    Hypergraph,
    TwinPartition,
    build_hypergraph,
    covers,
    incident_hyperedges,
    is_connected,
    remove_vertices,
    shrink,
    twin_partition,
)
from .instances import (
    fig2_hypergraph,
    fig2_support,
    random_hypergraph,
    scaled_twin_family,
    scaled_twin_family_support,
)
from .kernel import (
    PsiThreshold,
    Removal,
    kernel_vertex_bound_log2,
    psi_log2,
    rule1_apply,
)
from .planegeom import (
    Face,
    LayerDecomposition,
    PlaneEmbedding,
    SimpleGraph,
    bridges_and_cut_vertices,
    is_planar,
    is_r_outerplanar,
    layer_decomposition,
    make_graph,
    outerplanarity_number,
    plane_embedding,
    trace_faces,
)
from .supports import (
    PLANAR_ONLY,
    SearchResult,
    SupportCertificate,
    extend_representative,
    find_min_representative_support,
    find_r_outerplanar_support,
    is_representative_support,
    is_support,
    remove_twin_from_support,
)

__version__ = "0.1.0"
