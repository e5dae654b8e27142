"""Immutable simple undirected graphs, their construction, and file formats.

A :class:`Graph` stores its edges as two endpoint arrays plus a CSR adjacency
(``offsets``, ``targets``, ``edge_ids``).  The adjacency of every vertex lists
its incident edges in input order unless a permuted copy was requested; the
DFS explores neighbours in exactly this order.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    EmptyGraphError,
    ParallelEdgeError,
    ParseError,
    SelfLoopError,
    VertexOutOfRangeError,
)

__all__ = [
    "Edge",
    "Format",
    "Graph",
    "build",
    "min_degree",
    "parse",
    "read_graph",
    "serialize",
    "simplify",
]


class Format(str, enum.Enum):
    EDGELIST = "edgelist"
    DIMACS = "dimacs"


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    id: int

    def other(self, x: int) -> int:
        return self.v if x == self.u else self.u


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Use :func:`build` (or :func:`parse`) to construct one; the constructor
    trusts its arguments.
    """

    __slots__ = ("n", "edge_u", "edge_v", "offsets", "targets", "edge_ids", "labels", "_edges", "_adj")

    def __init__(self, n, edge_u, edge_v, offsets, targets, edge_ids, labels=None):
        self.n = int(n)
        self.edge_u = _frozen(edge_u)
        self.edge_v = _frozen(edge_v)
        self.offsets = _frozen(offsets)
        self.targets = _frozen(targets)
        self.edge_ids = _frozen(edge_ids)
        self.labels = tuple(labels) if labels is not None else None
        self._edges = None
        self._adj = None

    @property
    def m(self) -> int:
        return len(self.edge_u)

    @property
    def edges(self) -> list[Edge]:
        if self._edges is None:
            self._edges = [
                Edge(u, v, i) for i, (u, v) in enumerate(zip(self.edge_u.tolist(), self.edge_v.tolist()))
            ]
        return self._edges

    @property
    def adjacency(self) -> list[list[tuple[int, int]]]:
        """Per-vertex list of ``(neighbour, edge id)`` in exploration order."""
        if self._adj is None:
            off = self.offsets.tolist()
            tg = self.targets.tolist()
            ei = self.edge_ids.tolist()
            self._adj = [list(zip(tg[off[v]:off[v + 1]], ei[off[v]:off[v + 1]])) for v in range(self.n)]
        return self._adj

    def pairs(self) -> list[tuple[int, int]]:
        return list(zip(self.edge_u.tolist(), self.edge_v.tolist()))

    def degree(self, v: int) -> int:
        return int(self.offsets[v + 1] - self.offsets[v])

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.offsets)

    def label(self, v: int):
        return self.labels[v] if self.labels is not None else v

    def permuted_adjacency(self, rng: np.random.Generator) -> Graph:
        """Copy of this graph with every adjacency list shuffled independently."""
        deg = self.degrees
        owner = np.repeat(np.arange(self.n), deg)
        order = np.lexsort((rng.random(len(owner)), owner))
        return Graph(
            self.n, self.edge_u.copy(), self.edge_v.copy(), self.offsets.copy(),
            self.targets[order], self.edge_ids[order], self.labels,
        )

    def relabeled(self, perm: Sequence[int]) -> Graph:
        """Copy with vertex ``v`` renamed ``perm[v]``; edge ids are kept."""
        p = np.asarray(perm, dtype=np.int64)
        if sorted(p.tolist()) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        return build(self.n, np.column_stack([p[self.edge_u], p[self.edge_v]]))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _first_index(mask: np.ndarray) -> int | None:
    idx = np.flatnonzero(mask)
    return int(idx[0]) if len(idx) else None


def build(n: int, edge_pairs, labels: Sequence | None = None) -> Graph:
    """Validate ``edge_pairs`` and return the graph; edge ids follow input order.

    Raises the error belonging to the first offending pair in input order.
    """
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    pairs = np.asarray(edge_pairs, dtype=np.int64)
    if pairs.size == 0:
        pairs = pairs.reshape(0, 2)
    if pairs.ndim != 2 or pairs.shape[1] != 2:
        raise ValueError("edge_pairs must be a sequence of vertex pairs")
    u = np.ascontiguousarray(pairs[:, 0])
    v = np.ascontiguousarray(pairs[:, 1])
    m = len(u)

    candidates = []
    i = _first_index((u < 0) | (u >= n) | (v < 0) | (v >= n))
    if i is not None:
        candidates.append((i, VertexOutOfRangeError((int(u[i]), int(v[i])), n)))
    i = _first_index(u == v)
    if i is not None:
        candidates.append((i, SelfLoopError((int(u[i]), int(v[i])))))
    if m > 1:
        key = np.minimum(u, v) * max(n, 1) + np.maximum(u, v)
        _, first = np.unique(key, return_index=True)
        if len(first) < m:
            dup = np.ones(m, dtype=bool)
            dup[first] = False
            i = _first_index(dup)
            candidates.append((i, ParallelEdgeError((int(u[i]), int(v[i])))))
    if candidates:
        raise min(candidates, key=lambda c: c[0])[1]

    src = np.empty(2 * m, dtype=np.int64)
    dst = np.empty(2 * m, dtype=np.int64)
    src[0::2], src[1::2] = u, v
    dst[0::2], dst[1::2] = v, u
    arc_edge = np.repeat(np.arange(m, dtype=np.int64), 2)
    order = np.argsort(src, kind="stable")
    offsets = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=offsets[1:])
    if labels is not None and len(labels) != n:
        raise ValueError("need exactly one label per vertex")
    return Graph(n, u, v, offsets, dst[order], arc_edge[order], labels)


def simplify(edge_pairs: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    """Drop self-loops and repeated unordered pairs, keeping first occurrences.

    Core algorithms never call this; it is offered to callers holding multigraphs.
    """
    seen = set()
    out = []
    for a, b in edge_pairs:
        key = (a, b) if a < b else (b, a)
        if a == b or key in seen:
            continue
        seen.add(key)
        out.append((a, b))
    return out


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise EmptyGraphError()
    return int(g.degrees.min())


def _ints(tokens, lineno, expected):
    if len(tokens) != expected:
        raise ParseError(lineno, f"expected {expected} integer(s), got {len(tokens)} token(s)")
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(lineno, f"non-integer token in {' '.join(tokens)!r}") from None


_PLAIN_EDGELIST = re.compile(r"\s*\d+[ \t]*\n(?:[ \t]*\d+[ \t]+\d+[ \t]*\n|[ \t]*\n)*\s*")


def _parse_edgelist(text: str) -> Graph:
    if "#" not in text and _PLAIN_EDGELIST.fullmatch(text if text.endswith("\n") else text + "\n"):
        # comment-free, well-formed input: tokenise in one go
        tokens = np.array(text.split(), dtype=np.int64)
        return build(int(tokens[0]), tokens[1:].reshape(-1, 2))
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        tokens = line.split()
        if not tokens:
            continue
        if n is None:
            (n,) = _ints(tokens, lineno, 1)
            if n < 0:
                raise ParseError(lineno, "negative vertex count")
        else:
            pairs.append(_ints(tokens, lineno, 2))
    if n is None:
        raise ParseError(0, "missing vertex count line")
    return build(n, pairs)


def _parse_dimacs(text: str) -> Graph:
    n = m = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        tag = tokens[0]
        if tag == "p":
            if n is not None:
                raise ParseError(lineno, "duplicate problem line")
            if len(tokens) != 4 or tokens[1] != "edge":
                raise ParseError(lineno, "problem line must read 'p edge <n> <m>'")
            n, m = _ints(tokens[2:], lineno, 2)
        elif tag == "e":
            if n is None:
                raise ParseError(lineno, "edge line before problem line")
            a, b = _ints(tokens[1:], lineno, 2)
            pairs.append((a - 1, b - 1))
        else:
            raise ParseError(lineno, f"unknown line type {tag!r}")
    if n is None:
        raise ParseError(0, "missing problem line")
    if len(pairs) != m:
        raise ParseError(0, f"problem line announces {m} edges, found {len(pairs)}")
    return build(n, pairs, labels=range(1, n + 1))


def parse(text: str, format: Format | str = Format.EDGELIST) -> Graph:
    fmt = Format(format)
    if fmt is Format.DIMACS:
        return _parse_dimacs(text)
    return _parse_edgelist(text)


def read_graph(path: str | Path, format: Format | str = Format.EDGELIST) -> Graph:
    return parse(Path(path).read_text(), format)


def serialize(g: Graph) -> str:
    """EdgeList text: the vertex count, then one ``u v`` line per edge in id order."""
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.pairs())
    return "\n".join(lines) + "\n"
