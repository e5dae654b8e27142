"""2-edge- and 2-vertex-connectivity verdicts, bridges and cut vertices.

The verdict follows the chain test: an edge outside every chain is a bridge,
and any cycle chain besides the first one starts at a cut vertex.  Graphs
with fewer than three vertices are classified from the definitions
directly, since a chain decomposition needs ``n >= 3``.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field

import numpy as np

from .chains import ChainDecomposition, decompose, unvisited_edges
from .dfs import DfsResult, is_connected, run_dfs
from .errors import NotConnectedError
from .graph import Graph, min_degree

__all__ = [
    "ConnectivityReport",
    "Verdict",
    "analyze",
    "check",
    "check_via_theorem3",
    "find_bridges",
    "find_cut_vertices",
]


class Verdict(enum.Enum):
    NOT_CONNECTED = ("NOT CONNECTED", 3)
    NOT_TWO_EDGE_CONNECTED = ("NOT 2-EDGE-CONNECTED", 2)
    TWO_EDGE_CONNECTED_ONLY = ("2-EDGE-CONNECTED BUT NOT 2-CONNECTED", 1)
    TWO_CONNECTED = ("2-CONNECTED", 0)

    def __init__(self, text, exit_code):
        self.text = text
        self.exit_code = exit_code

    @classmethod
    def from_text(cls, text: str) -> Verdict:
        for v in cls:
            if v.text == text:
                return v
        raise ValueError(text)

    @property
    def two_edge_connected(self) -> bool:
        return self in (Verdict.TWO_EDGE_CONNECTED_ONLY, Verdict.TWO_CONNECTED)

    def __str__(self) -> str:
        return self.text


@dataclass
class ConnectivityReport:
    verdict: Verdict
    bridges: list[int]
    cut_vertices: list[int]
    chain_stats: dict
    dfs: DfsResult | None = None
    decomposition: ChainDecomposition | None = None
    timing: dict = field(default_factory=dict)


def find_bridges(g: Graph, c: ChainDecomposition) -> list[int]:
    """Edges contained in no chain, in id order."""
    return unvisited_edges(g, c)


def find_cut_vertices(g: Graph, c: ChainDecomposition, bridges) -> list[int]:
    """Sorted cut vertices of a connected graph.

    A vertex qualifies if it starts a cycle chain other than ``C_1``, or if it
    ends a bridge and has degree at least 2.  The degree condition is what
    keeps leaves out when the graph has vertices of degree 1.
    """
    cut = np.zeros(g.n, dtype=bool)
    b = np.asarray(bridges, dtype=np.int64)
    if len(b):
        deg = g.degrees
        for ends in (g.edge_u[b], g.edge_v[b]):
            cut[ends[deg[ends] >= 2]] = True
    extra = np.flatnonzero(c.is_cycle)
    extra = extra[extra > 0]
    cut[c.verts[c.vptr[extra]]] = True
    return np.flatnonzero(cut).tolist()


def analyze(g: Graph, root: int = 0, backend: str | None = None) -> ConnectivityReport:
    """Run the full check and keep its intermediate structures."""
    timing = {}
    if g.n == 0:
        return ConnectivityReport(Verdict.NOT_CONNECTED, [], [], _stats(None), timing=timing)
    t0 = time.perf_counter()
    d = run_dfs(g, root, backend)
    t1 = time.perf_counter()
    timing["dfs_ms"] = (t1 - t0) * 1e3
    if not is_connected(d):
        return ConnectivityReport(Verdict.NOT_CONNECTED, [], [], _stats(None), d, timing=timing)
    if g.n < 3:
        # connected with one or two vertices: a lone vertex or K_2, whose edge is a bridge
        return ConnectivityReport(Verdict.NOT_TWO_EDGE_CONNECTED, list(range(g.m)), [],
                                  _stats(None), d, timing=timing)
    c = decompose(g, d, backend)
    t2 = time.perf_counter()
    timing["chains_ms"] = (t2 - t1) * 1e3
    bridges = find_bridges(g, c)
    cut = find_cut_vertices(g, c, bridges)
    if bridges:
        verdict = Verdict.NOT_TWO_EDGE_CONNECTED
    elif c.extra_cycles():
        verdict = Verdict.TWO_EDGE_CONNECTED_ONLY
    else:
        verdict = Verdict.TWO_CONNECTED
    timing["verdict_ms"] = (time.perf_counter() - t2) * 1e3
    return ConnectivityReport(verdict, bridges, cut, _stats(c), d, c, timing)


def _stats(c: ChainDecomposition | None) -> dict:
    if c is None:
        return {"chains": 0, "cycles": 0, "paths": 0}
    return {"chains": len(c), "cycles": c.cycle_count, "paths": c.path_count}


def check(g: Graph, root: int = 0, backend: str | None = None) -> Verdict:
    """Classify ``g``; the fast path skips bridge and cut-vertex extraction."""
    if g.n == 0:
        return Verdict.NOT_CONNECTED
    d = run_dfs(g, root, backend)
    if not is_connected(d):
        return Verdict.NOT_CONNECTED
    if g.n < 3:
        return Verdict.NOT_TWO_EDGE_CONNECTED
    c = decompose(g, d, backend)
    if np.any(c.edge_chain < 0):
        return Verdict.NOT_TWO_EDGE_CONNECTED
    if np.count_nonzero(c.is_cycle[1:]):
        return Verdict.TWO_EDGE_CONNECTED_ONLY
    return Verdict.TWO_CONNECTED


def check_via_theorem3(g: Graph, root: int = 0, backend: str | None = None) -> bool:
    """2-connectivity from minimum degree and cycle count alone.

    ``g`` is 2-connected iff every vertex has degree at least 2 and ``C_1`` is
    the only cycle chain.  Edge coverage is never consulted.
    """
    d = run_dfs(g, root, backend)
    if not is_connected(d):
        raise NotConnectedError(f"DFS reached {d.reached} of {g.n} vertices")
    if min_degree(g) < 2:
        return False
    # minimum degree 2 on a simple graph forces n >= 3
    c = decompose(g, d, backend)
    cycles = np.flatnonzero(c.is_cycle)
    return len(cycles) == 1 and cycles[0] == 0
