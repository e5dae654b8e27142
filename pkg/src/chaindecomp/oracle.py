"""Brute-force reference answers and reproducible test graphs.

Every oracle here works from the vertex count and the edge pair list alone,
builds its own adjacency sets, and applies the textbook definition by
deleting an edge or a vertex and re-testing reachability.  Nothing is shared
with the DFS/chain code path.

Random families draw from ``numpy.random.Generator`` seeded with ``PCG64``;
:data:`RNG_ALGORITHM` names it for reports.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .components import EdgePartition
from .connectivity import Verdict
from .errors import InvalidParams
from .graph import Graph, build

__all__ = [
    "FIXTURES",
    "RNG_ALGORITHM",
    "ExhaustiveLabeled",
    "NamedFixture",
    "RandomConnected",
    "RandomGnm",
    "RandomTwoConnected",
    "brute_blocks",
    "brute_blocks_by_cycles",
    "brute_bridges",
    "brute_classify",
    "brute_cut_vertices",
    "brute_is_connected",
    "fixture",
    "generate",
]

RNG_ALGORITHM = "numpy.random.PCG64"


def _adjacency(n, pairs, skip_edge=None, skip_vertex=None):
    adj = [set() for _ in range(n)]
    for i, (a, b) in enumerate(pairs):
        if i == skip_edge or a == skip_vertex or b == skip_vertex:
            continue
        adj[a].add(b)
        adj[b].add(a)
    return adj


def _reach(adj, start, skip_vertex=None):
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in seen and y != skip_vertex:
                seen.add(y)
                queue.append(y)
    return seen


def _components(adj, skip_vertex=None):
    comp = {}
    c = 0
    for s in range(len(adj)):
        if s == skip_vertex or s in comp:
            continue
        for x in _reach(adj, s, skip_vertex):
            comp[x] = c
        c += 1
    return comp, c


def brute_is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return len(_reach(_adjacency(g.n, g.pairs()), 0)) == g.n


def brute_bridges(g: Graph) -> list[int]:
    """Edges whose deletion disconnects the graph."""
    pairs = g.pairs()
    out = []
    for i in range(len(pairs)):
        adj = _adjacency(g.n, pairs, skip_edge=i)
        if len(_reach(adj, 0)) != g.n:
            out.append(i)
    return out


def brute_cut_vertices(g: Graph) -> list[int]:
    """Vertices whose deletion disconnects the remaining graph."""
    pairs = g.pairs()
    out = []
    for v in range(g.n):
        if g.n <= 2:
            break
        adj = _adjacency(g.n, pairs, skip_vertex=v)
        start = 1 if v == 0 else 0
        if len(_reach(adj, start, skip_vertex=v)) != g.n - 1:
            out.append(v)
    return out


def brute_classify(g: Graph) -> Verdict:
    if not brute_is_connected(g):
        return Verdict.NOT_CONNECTED
    if g.n < 2 or brute_bridges(g):
        return Verdict.NOT_TWO_EDGE_CONNECTED
    if g.n < 3 or brute_cut_vertices(g):
        return Verdict.TWO_EDGE_CONNECTED_ONLY
    return Verdict.TWO_CONNECTED


def _edge_partition(g: Graph, label: list[int]) -> EdgePartition:
    groups: dict[int, list[int]] = {}
    for e, lab in enumerate(label):
        groups.setdefault(lab, []).append(e)
    ordered = sorted(groups.values(), key=lambda grp: grp[0])
    group_of = np.full(g.m, -1, dtype=np.int64)
    vgroups = []
    pairs = g.pairs()
    for i, grp in enumerate(ordered):
        group_of[grp] = i
        vgroups.append(sorted({x for e in grp for x in pairs[e]}))
    return EdgePartition(ordered, group_of, vgroups)


def brute_blocks(g: Graph) -> EdgePartition:
    """Blocks by delete-vertex refinement.

    Start from one group per connected component.  For every vertex ``x``,
    split groups so two edges stay together only if their endpoints other
    than ``x`` remain connected in ``G - x``.
    """
    pairs = g.pairs()
    adj = _adjacency(g.n, pairs)
    comp, _ = _components(adj)
    label = [(comp[a],) for a, _ in pairs]
    for x in range(g.n):
        cx, _ = _components(adj, skip_vertex=x)
        # an edge at x is represented by its other endpoint's component
        label = [lab + (cx[b] if a == x else cx[a],) for lab, (a, b) in zip(label, pairs)]
    canon = {}
    return _edge_partition(g, [canon.setdefault(lab, len(canon)) for lab in label])


def _on_common_cycle(adj, e, f):
    """Is there a simple cycle through both edges ``e`` and ``f``?

    Exhaustive search over simple paths from one end of ``e`` back to the
    other that avoid ``e`` itself and use ``f``.
    """
    a, b = e
    fe = frozenset(f)

    def walk(x, visited, used_f):
        for y in adj[x]:
            if x == b and y == a and len(visited) == 1:
                continue
            hit = used_f or frozenset((x, y)) == fe
            if y == a:
                if hit and len(visited) >= 2:
                    return True
                continue
            if y in visited:
                continue
            visited.add(y)
            if walk(y, visited, hit):
                return True
            visited.remove(y)
        return False

    return walk(b, {b}, False)


def brute_blocks_by_cycles(g: Graph) -> EdgePartition:
    """Blocks as the closure of "two edges lie on a common simple cycle".

    Exponential; meant for graphs with at most about six vertices.
    """
    pairs = g.pairs()
    adj = _adjacency(g.n, pairs)
    parent = list(range(len(pairs)))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for i, j in itertools.combinations(range(len(pairs)), 2):
        if find(i) != find(j) and _on_common_cycle(adj, pairs[i], pairs[j]):
            parent[find(j)] = find(i)
    return _edge_partition(g, [find(i) for i in range(len(pairs))])


def _petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return 10, outer + spokes + inner


FIXTURES = {
    "triangle": (3, [(0, 1), (1, 2), (2, 0)]),
    "path3": (3, [(0, 1), (1, 2)]),
    "bowtie": (5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]),
    "k4": (4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    "c5": (5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
    "star": (4, [(0, 1), (0, 2), (0, 3)]),
    "triangle-pendant": (4, [(0, 1), (1, 2), (2, 0), (0, 3)]),
    "petersen": _petersen(),
}


def fixture(name: str) -> Graph:
    try:
        n, pairs = FIXTURES[name]
    except KeyError:
        raise InvalidParams(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}") from None
    return build(n, pairs)


@dataclass(frozen=True)
class ExhaustiveLabeled:
    n: int


@dataclass(frozen=True)
class RandomGnm:
    n: int
    m: int
    seed: int
    count: int = 1


@dataclass(frozen=True)
class RandomTwoConnected:
    n: int
    extra_chords: int
    seed: int
    count: int = 1


@dataclass(frozen=True)
class RandomConnected:
    """Connected G(n, m) samples with ``n`` drawn from ``min_n..max_n``.

    ``m`` is drawn from ``n - 1 .. min(n(n-1)/2, 3n)`` and disconnected draws
    are rejected.
    """

    max_n: int
    count: int
    seed: int
    min_n: int = 1


@dataclass(frozen=True)
class NamedFixture:
    name: str


MAX_EXHAUSTIVE_N = 7


def _all_pairs(n):
    iu, ju = np.triu_indices(n, k=1)
    return np.column_stack([iu, ju])


def _exhaustive(n):
    if not 0 <= n <= MAX_EXHAUSTIVE_N:
        raise InvalidParams(f"exhaustive enumeration supports 0 <= n <= {MAX_EXHAUSTIVE_N}")
    pairs = [tuple(p) for p in _all_pairs(n).tolist()]
    for mask in range(1 << len(pairs)):
        yield build(n, [p for k, p in enumerate(pairs) if mask >> k & 1])


def _gnm(rng, n, m):
    total = n * (n - 1) // 2
    if n < 0 or not 0 <= m <= total:
        raise InvalidParams(f"need 0 <= m <= {total} for n={n}, got m={m}")
    chosen = rng.choice(total, size=m, replace=False)
    return build(n, _all_pairs(n)[chosen])


def _sample_chords(rng, n, k, taken):
    """``k`` distinct random unordered pairs whose keys are not in ``taken``."""
    total = n * (n - 1) // 2
    if total <= 4_000_000:
        pairs = _all_pairs(n)
        keys = pairs[:, 0] * n + pairs[:, 1]
        free = pairs[~np.isin(keys, taken)]
        return free[rng.choice(len(free), size=k, replace=False)]
    got = np.empty((0, 2), dtype=np.int64)
    got_keys = np.empty(0, dtype=np.int64)
    while len(got) < k:
        need = k - len(got)
        a = rng.integers(0, n, size=2 * need + 16)
        b = rng.integers(0, n, size=2 * need + 16)
        lo, hi = np.minimum(a, b), np.maximum(a, b)
        keys = lo * n + hi
        ok = (lo != hi) & ~np.isin(keys, taken) & ~np.isin(keys, got_keys)
        keys, lo, hi = keys[ok], lo[ok], hi[ok]
        _, first = np.unique(keys, return_index=True)
        first.sort()
        first = first[:need]
        got = np.concatenate([got, np.column_stack([lo[first], hi[first]])])
        got_keys = np.concatenate([got_keys, keys[first]])
    return got


def random_two_connected(rng: np.random.Generator, n: int, extra_chords: int) -> Graph:
    """Hamiltonian cycle through a random vertex order plus distinct random chords."""
    if n < 3:
        raise InvalidParams("a 2-connected graph needs n >= 3")
    if not 0 <= extra_chords <= n * (n - 1) // 2 - n:
        raise InvalidParams(f"n={n} admits at most {n * (n - 1) // 2 - n} chords")
    perm = rng.permutation(n)
    cyc = np.column_stack([perm, np.roll(perm, -1)])
    taken = np.minimum(cyc[:, 0], cyc[:, 1]) * n + np.maximum(cyc[:, 0], cyc[:, 1])
    chords = _sample_chords(rng, n, extra_chords, taken)
    pairs = np.concatenate([cyc, chords])
    return build(n, pairs[rng.permutation(len(pairs))])


def _random_connected(rng, fam: RandomConnected):
    if not 1 <= fam.min_n <= fam.max_n:
        raise InvalidParams("need 1 <= min_n <= max_n")
    for _ in range(fam.count):
        n = int(rng.integers(fam.min_n, fam.max_n + 1))
        hi = min(n * (n - 1) // 2, 3 * n)
        m = int(rng.integers(max(n - 1, 0), hi + 1))
        while True:
            g = _gnm(rng, n, m)
            if brute_is_connected(g):
                yield g
                break


def generate(family) -> Iterator[Graph]:
    """Deterministic stream of graphs for ``family``."""
    if isinstance(family, ExhaustiveLabeled):
        return _exhaustive(family.n)
    if isinstance(family, NamedFixture):
        return iter([fixture(family.name)])
    rng = np.random.default_rng(family.seed)
    if isinstance(family, RandomGnm):
        return (_gnm(rng, family.n, family.m) for _ in range(family.count))
    if isinstance(family, RandomTwoConnected):
        # validate eagerly so bad parameters fail at the call site
        if family.n < 3 or family.extra_chords > family.n * (family.n - 1) // 2 - family.n:
            raise InvalidParams(f"bad parameters {family}")
        return (random_two_connected(rng, family.n, family.extra_chords) for _ in range(family.count))
    if isinstance(family, RandomConnected):
        return _random_connected(rng, family)
    raise InvalidParams(f"unknown family {family!r}")
