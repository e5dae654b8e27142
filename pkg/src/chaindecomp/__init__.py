"""Linear-time 2-vertex- and 2-edge-connectivity tests via chain decompositions.

Quick use::

    >>> from chaindecomp import build, check
    >>> check(build(4, [(0, 1), (1, 2), (2, 3), (3, 0)])).text
    '2-CONNECTED'

The DFS and chain kernels run from a compiled extension when it is built and
fall back to pure Python otherwise; :data:`BACKEND` names the active one.
"""

from ._backend import DEFAULT as BACKEND
from ._backend import available as available_backends
from .chains import Chain, ChainDecomposition, ChainKind, decompose, unvisited_edges
from .components import (
    BlockCutTree,
    EarCertificate,
    EarKind,
    EdgePartition,
    block_cut_tree,
    blocks,
    certify_ear_decomposition,
    two_edge_connected_components,
)
from .connectivity import (
    ConnectivityReport,
    Verdict,
    analyze,
    check,
    check_via_theorem3,
    find_bridges,
    find_cut_vertices,
)
from .dfs import DfsResult, EdgeClass, is_connected, is_in_subtree, run_dfs
from .errors import (
    EmptyGraphError,
    GraphError,
    InvalidParams,
    NotConnectedError,
    ParallelEdgeError,
    ParseError,
    PreconditionViolated,
    SelfLoopError,
    TooSmallError,
    VertexOutOfRangeError,
)
from .graph import Edge, Format, Graph, build, min_degree, parse, read_graph, serialize, simplify

__version__ = "0.1.0"
