"""Depth-first search trees with edge classification.

Tree edges are oriented from child to parent (towards the root); backedges
are oriented away from the root, so a backedge *starts* at its ancestor
endpoint.  ``backedge_from(v)`` lists the backedges starting at ``v`` in the
order they appear in ``v``'s adjacency list.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import _backend
from .errors import EmptyGraphError
from .graph import Graph

__all__ = ["DfsResult", "EdgeClass", "is_connected", "is_in_subtree", "run_dfs"]


class EdgeClass(enum.IntEnum):
    UNREACHED = 0
    TREE = 1
    BACK = 2


@dataclass(frozen=True, eq=False)
class DfsResult:
    """DFS tree rooted at ``root``.

    ``dfi[v]`` is ``-1`` for vertices the search never reached, as are
    ``parent[v]`` and ``parent_edge[v]`` for those and for the root.
    ``order`` lists reached vertices by ascending DFI and ``subtree_size[v]``
    counts ``v`` and its descendants, so ``T(x)`` is the DFI interval
    ``[dfi[x], dfi[x] + subtree_size[x])``.
    """

    root: int
    dfi: np.ndarray
    parent: np.ndarray
    parent_edge: np.ndarray
    order: np.ndarray
    subtree_size: np.ndarray
    edge_kind: np.ndarray
    backedge_offsets: np.ndarray
    backedges: np.ndarray

    @property
    def n(self) -> int:
        return len(self.dfi)

    @property
    def reached(self) -> int:
        return len(self.order)

    @property
    def visited(self) -> np.ndarray:
        return self.dfi >= 0

    def edge_class(self, e: int) -> EdgeClass:
        return EdgeClass(int(self.edge_kind[e]))

    def backedge_from(self, v: int) -> list[int]:
        return self.backedges[self.backedge_offsets[v]:self.backedge_offsets[v + 1]].tolist()

    @property
    def tree_edge_count(self) -> int:
        return int(np.count_nonzero(self.edge_kind == EdgeClass.TREE))

    @property
    def backedge_count(self) -> int:
        return len(self.backedges)


def run_dfs(g: Graph, root: int = 0, backend: str | None = None) -> DfsResult:
    if g.n == 0:
        raise EmptyGraphError()
    if not 0 <= root < g.n:
        raise ValueError(f"root {root} outside 0..{g.n - 1}")
    k = _backend.kernels(backend)
    arrays = k.dfs(g.n, g.offsets, g.targets, g.edge_ids, g.m, int(root))
    for a in arrays:
        a.setflags(write=False)
    return DfsResult(int(root), *arrays)


def is_connected(d: DfsResult) -> bool:
    return d.reached == d.n


def is_in_subtree(d: DfsResult, x: int, y: int) -> bool:
    """True iff ``y`` lies in the subtree of ``x`` (``x`` included)."""
    dx, dy = int(d.dfi[x]), int(d.dfi[y])
    if dx < 0 or dy < 0:
        raise ValueError("both vertices must be reached by the search")
    return dx <= dy < dx + int(d.subtree_size[x])
