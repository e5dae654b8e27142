"""Chain decomposition of a connected graph from a DFS tree.

Vertices are processed in ascending DFI order.  Every backedge starting at
the current vertex ``v`` yields one chain: ``v``, the backedge's other end,
then parent steps until a vertex that is already visited.  Chains are
numbered from 1 in the order they are produced.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass

import numpy as np

from . import _backend
from .dfs import DfsResult, is_connected
from .errors import NotConnectedError, TooSmallError
from .graph import Graph

__all__ = ["Chain", "ChainDecomposition", "ChainKind", "decompose", "unvisited_edges"]

# decompose() verifies the chain-count identity on every call and records it here
CHAIN_COUNT_CHECKS: Counter = Counter()


class ChainKind(str, enum.Enum):
    CYCLE = "cycle"
    PATH = "path"


@dataclass(frozen=True)
class Chain:
    index: int
    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]
    kind: ChainKind

    @property
    def source_backedge(self) -> int:
        return self.edge_ids[0]

    @property
    def first(self) -> int:
        return self.vertices[0]

    @property
    def last(self) -> int:
        return self.vertices[-1]

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "kind": self.kind.value,
            "vertices": list(self.vertices),
            "edges": list(self.edge_ids),
        }


class ChainDecomposition:
    """Ordered chains ``C_1 .. C_k`` with per-edge and per-vertex ownership.

    The flat arrays are the kernel output and use 0-based chain numbers with
    ``-1`` for "none"; the accessor methods speak 1-based indices like
    :attr:`Chain.index`.  :class:`Chain` objects are materialised lazily.
    """

    def __init__(self, dfs: DfsResult, vptr, verts, eptr, edges, edge_chain, vertex_chain, is_cycle):
        self.dfs = dfs
        self.vptr = vptr
        self.verts = verts
        self.eptr = eptr
        self.edges = edges
        self.edge_chain = edge_chain
        self.vertex_chain = vertex_chain
        self.is_cycle = is_cycle.astype(bool)
        self._chains = None

    def __len__(self) -> int:
        return len(self.is_cycle)

    def _make(self, c: int) -> Chain:
        verts = tuple(self.verts[self.vptr[c]:self.vptr[c + 1]].tolist())
        edges = tuple(self.edges[self.eptr[c]:self.eptr[c + 1]].tolist())
        kind = ChainKind.CYCLE if verts[0] == verts[-1] else ChainKind.PATH
        return Chain(c + 1, verts, edges, kind)

    @property
    def chains(self) -> list[Chain]:
        if self._chains is None:
            self._chains = [self._make(c) for c in range(len(self))]
        return self._chains

    def __iter__(self):
        return iter(self.chains)

    def __getitem__(self, i: int) -> Chain:
        """The chain with 1-based index ``i``."""
        if not 1 <= i <= len(self):
            raise IndexError(i)
        return self.chains[i - 1] if self._chains is not None else self._make(i - 1)

    def chain_of_edge(self, e: int) -> int | None:
        c = int(self.edge_chain[e])
        return c + 1 if c >= 0 else None

    def first_chain_of_vertex(self, v: int) -> int | None:
        c = int(self.vertex_chain[v])
        return c + 1 if c >= 0 else None

    def first_vertex(self, i: int) -> int:
        return int(self.verts[self.vptr[i - 1]])

    @property
    def cycle_count(self) -> int:
        return int(np.count_nonzero(self.is_cycle))

    @property
    def path_count(self) -> int:
        return len(self) - self.cycle_count

    def extra_cycles(self) -> list[int]:
        """1-based indices of cycle chains other than ``C_1``."""
        idx = np.flatnonzero(self.is_cycle) + 1
        return idx[idx > 1].tolist()


def decompose(g: Graph, d: DfsResult, backend: str | None = None) -> ChainDecomposition:
    if g.n < 3:
        raise TooSmallError(f"chain decomposition needs at least 3 vertices, got {g.n}")
    if not is_connected(d) or d.n != g.n:
        raise NotConnectedError(f"DFS reached {d.reached} of {g.n} vertices")
    k = _backend.kernels(backend)
    arrays = k.chains(g.n, g.m, d.order, d.parent, d.parent_edge, d.backedge_offsets,
                      d.backedges, g.edge_u, g.edge_v)
    for a in arrays:
        a.setflags(write=False)
    c = ChainDecomposition(d, *arrays)
    expected = g.m - g.n + 1
    CHAIN_COUNT_CHECKS["checked"] += 1
    if len(c) != expected:
        CHAIN_COUNT_CHECKS["violations"] += 1
        raise AssertionError(f"{len(c)} chains, expected |E| - |V| + 1 = {expected}")
    return c


def unvisited_edges(g: Graph, c: ChainDecomposition) -> list[int]:
    return np.flatnonzero(c.edge_chain < 0).tolist()
