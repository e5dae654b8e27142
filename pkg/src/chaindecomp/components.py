"""2-edge-connected components, blocks, the block-cut tree and ear certificates."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import _backend
from .chains import ChainDecomposition
from .connectivity import Verdict
from .errors import PreconditionViolated
from .graph import Graph

__all__ = [
    "BlockCutTree",
    "BlockNode",
    "CutNode",
    "EarCertificate",
    "EarKind",
    "EdgePartition",
    "TwoEdgeComponents",
    "block_cut_tree",
    "blocks",
    "certify_ear_decomposition",
    "two_edge_connected_components",
]


@dataclass(frozen=True)
class EdgePartition:
    """Groups of edge ids; ``group_of[e]`` is ``-1`` for ungrouped edges.

    ``vertex_groups[i]`` holds the sorted endpoints of the edges in group ``i``.
    """

    groups: list[list[int]]
    group_of: np.ndarray
    vertex_groups: list[list[int]]

    @property
    def trivial(self) -> list[bool]:
        # a single-edge block is a K_2, i.e. a bridge
        return [len(grp) == 1 for grp in self.groups]

    def as_sets(self) -> set[frozenset[int]]:
        return {frozenset(grp) for grp in self.groups}


def _partition(g: Graph, label: np.ndarray, keep: np.ndarray) -> EdgePartition:
    """Group the edges with ``keep`` set by ``label``; groups ordered by smallest edge id."""
    ids = np.flatnonzero(keep)
    group_of = np.full(g.m, -1, dtype=np.int64)
    if len(ids) == 0:
        return EdgePartition([], group_of, [])
    _, first, inverse = np.unique(label[ids], return_index=True, return_inverse=True)
    rank = np.empty(len(first), dtype=np.int64)
    rank[np.argsort(first, kind="stable")] = np.arange(len(first))
    gid = rank[inverse]
    group_of[ids] = gid
    order = np.argsort(gid, kind="stable")
    bounds = np.searchsorted(gid[order], np.arange(len(first) + 1))
    groups = []
    vgroups = []
    for i in range(len(first)):
        es = ids[order[bounds[i]:bounds[i + 1]]]
        groups.append(es.tolist())
        vgroups.append(np.unique(np.concatenate([g.edge_u[es], g.edge_v[es]])).tolist())
    return EdgePartition(groups, group_of, vgroups)


@dataclass(frozen=True)
class TwoEdgeComponents:
    components: list[list[int]]
    component_of: np.ndarray
    edges: EdgePartition

    def bridge_tree_edges(self, g: Graph, bridges) -> list[tuple[int, int]]:
        """Edges of the graph obtained by contracting every component."""
        cu = self.component_of[g.edge_u[bridges]]
        cv = self.component_of[g.edge_v[bridges]]
        return list(zip(cu.tolist(), cv.tolist()))


def two_edge_connected_components(g: Graph, bridges, backend: str | None = None) -> TwoEdgeComponents:
    """Connected components of ``g`` once its bridges are removed."""
    usable = np.ones(g.m, dtype=np.uint8)
    usable[np.asarray(bridges, dtype=np.int64)] = 0
    comp = _backend.kernels(backend).label_components(g.n, g.offsets, g.targets, g.edge_ids, usable)
    order = np.argsort(comp, kind="stable")
    bounds = np.searchsorted(comp[order], np.arange(int(comp.max(initial=-1)) + 2))
    components = [order[bounds[i]:bounds[i + 1]].tolist() for i in range(len(bounds) - 1)]
    edges = _partition(g, comp[g.edge_u], usable.astype(bool))
    return TwoEdgeComponents(components, comp, edges)


def blocks(g: Graph, c: ChainDecomposition | None, backend: str | None = None) -> EdgePartition:
    """Partition of all edges into blocks; bridges come out as singleton groups.

    ``c`` may be ``None`` for graphs too small to decompose, in which case
    every edge is its own block.
    """
    if c is None or len(c) == 0:
        return _partition(g, np.arange(g.m), np.ones(g.m, dtype=bool))
    roots = _backend.kernels(backend).block_roots(
        g.m, c.vptr, c.verts, c.eptr, c.edges, c.is_cycle.astype(np.uint8), c.dfs.parent_edge
    )
    return _partition(g, roots, np.ones(g.m, dtype=bool))


@dataclass(frozen=True)
class BlockNode:
    block: int


@dataclass(frozen=True)
class CutNode:
    vertex: int


@dataclass(frozen=True)
class BlockCutTree:
    nodes: list
    edges: list[tuple[int, int]]

    def is_forest(self) -> bool:
        parent = list(range(len(self.nodes)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.edges:
            ra, rb = find(a), find(b)
            if ra == rb:
                return False
            parent[ra] = rb
        return True

    def is_tree(self) -> bool:
        # a graph without edges has no blocks, hence an empty tree
        return not self.nodes or (self.is_forest() and len(self.edges) == len(self.nodes) - 1)

    def to_json(self) -> dict:
        nodes = [
            {"type": "block", "block": nd.block} if isinstance(nd, BlockNode)
            else {"type": "cut", "vertex": nd.vertex}
            for nd in self.nodes
        ]
        return {"nodes": nodes, "edges": [list(e) for e in self.edges]}


def block_cut_tree(blocks: EdgePartition, cut_vertices) -> BlockCutTree:
    """Bipartite tree joining each cut vertex to every block that contains it."""
    nodes: list = [BlockNode(i) for i in range(len(blocks.groups))]
    cut_index = {}
    for v in sorted(set(cut_vertices)):
        cut_index[v] = len(nodes)
        nodes.append(CutNode(v))
    edges = []
    for i, verts in enumerate(blocks.vertex_groups):
        for v in verts:
            j = cut_index.get(v)
            if j is not None:
                edges.append((j, i))
    edges.sort()
    return BlockCutTree(nodes, edges)


class EarKind(str, enum.Enum):
    EAR = "ear"
    OPEN_EAR = "open_ear"


@dataclass(frozen=True)
class EarCertificate:
    valid: bool
    kind: EarKind
    violations: list[tuple[int, str]]

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "kind": self.kind.value,
            "violations": [{"chain": i, "reason": r} for i, r in self.violations],
        }


def certify_ear_decomposition(g: Graph, c: ChainDecomposition, verdict: Verdict) -> EarCertificate:
    """Check that the chains form an ear decomposition (open if 2-connected).

    Conditions: ``C_1`` is a cycle, chains use every edge exactly once and
    walk along real edges without repeating a vertex, and each later chain
    starts and ends on earlier chains while its interior vertices are new.
    The open variant additionally requires distinct endpoints.  Violations
    are ``(chain index, reason)`` pairs; index 0 stands for the whole
    decomposition.
    """
    if not verdict.two_edge_connected:
        raise PreconditionViolated(f"ear decomposition requires a 2-edge-connected graph, got {verdict.text}")
    kind = EarKind.OPEN_EAR if verdict is Verdict.TWO_CONNECTED else EarKind.EAR
    k = len(c)
    if k == 0:
        return EarCertificate(False, kind, [(0, "no chains")])

    verts, edges = c.verts, c.edges
    vlen, elen = np.diff(c.vptr), np.diff(c.eptr)
    bad_len = np.flatnonzero(elen != vlen - 1)
    if len(bad_len):
        return EarCertificate(False, kind, [(int(i) + 1, "vertex and edge counts disagree") for i in bad_len])

    violations = []

    def flag(chain_ids, reason):
        violations.extend((int(i) + 1, reason) for i in np.unique(chain_ids))

    chain_at = np.repeat(np.arange(k), vlen)
    first_pos, last_pos = c.vptr[:-1], c.vptr[1:] - 1
    is_first = np.zeros(len(verts), dtype=bool)
    is_last = np.zeros(len(verts), dtype=bool)
    is_first[first_pos] = True
    is_last[last_pos] = True
    first_v, last_v = verts[first_pos], verts[last_pos]
    closed = first_v == last_v

    step = np.flatnonzero(~is_last)
    a, b = verts[step], verts[step + 1]
    eu, ev = g.edge_u[edges], g.edge_v[edges]
    flag(chain_at[step][~(((eu == a) & (ev == b)) | ((eu == b) & (ev == a)))], "step does not follow its edge")

    _, once = np.unique(edges, return_index=True)
    again = np.ones(len(edges), dtype=bool)
    again[once] = False
    flag(np.repeat(np.arange(k), elen)[again], "edge already used")

    # a cycle's closing vertex is its start again and does not count as a repeat
    own = ~(is_last & closed[chain_at])
    key = chain_at[own] * g.n + verts[own]
    _, once = np.unique(key, return_index=True)
    again = np.ones(len(key), dtype=bool)
    again[once] = False
    flag(chain_at[own][again], "chain repeats a vertex")

    if not closed[0]:
        violations.append((1, "first chain is not a cycle"))
    present, first_seen = np.unique(verts, return_index=True)
    born = np.full(g.n, k, dtype=np.int64)
    born[present] = chain_at[first_seen]
    later = np.arange(1, k)
    flag(later[(born[first_v[1:]] >= later) | (born[last_v[1:]] >= later)], "endpoint not on an earlier chain")
    inner = np.flatnonzero(~is_first & ~is_last)
    flag(chain_at[inner][born[verts[inner]] < chain_at[inner]], "interior vertex on an earlier chain")
    if kind is EarKind.OPEN_EAR:
        flag(later[closed[1:]], "ear is closed")

    violations.sort(key=lambda x: x[0])
    missing = g.m - len(np.unique(edges))
    if missing:
        violations.append((0, f"{missing} edge(s) in no chain"))
    if len(present) != g.n:
        violations.append((0, f"{g.n - len(present)} vertex(es) in no chain"))
    return EarCertificate(not violations, kind, violations)
