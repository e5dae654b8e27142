import pytest
from hypothesis import given
from hypothesis import strategies as st

from chaindecomp import (
    ChainKind,
    EdgeClass,
    NotConnectedError,
    TooSmallError,
    build,
    decompose,
    run_dfs,
    unvisited_edges,
)
from chaindecomp.oracle import fixture
from strategies import connected_graphs


def _reference_chains(g, d):
    """The traversal written out over plain dicts, one backedge at a time."""
    by_dfi = sorted(range(g.n), key=lambda v: d.dfi[v])
    visited = set()
    out = []
    for v in by_dfi:
        for w, e in g.adjacency[v]:
            if d.edge_class(e) is not EdgeClass.BACK or d.dfi[w] < d.dfi[v]:
                continue
            verts, edges = [v], [e]
            visited.add(v)
            x = w
            verts.append(x)
            while x not in visited:
                visited.add(x)
                edges.append(int(d.parent_edge[x]))
                x = int(d.parent[x])
                verts.append(x)
            out.append((tuple(verts), tuple(edges)))
    return out


def _decompose(g, root=0, backend=None):
    return decompose(g, run_dfs(g, root, backend), backend)


def test_triangle_single_cycle(triangle, backend):
    for root in range(3):
        c = _decompose(triangle, root, backend)
        assert len(c) == 1
        ch = c[1]
        assert ch.kind is ChainKind.CYCLE
        assert sorted(ch.edge_ids) == [0, 1, 2]
        assert len(ch.vertices) == 4 and ch.first == ch.last


def test_path_has_no_chains(path3, backend):
    c = _decompose(path3, 0, backend)
    assert len(c) == 0
    assert [c.chain_of_edge(e) for e in range(2)] == [None, None]
    assert unvisited_edges(path3, c) == [0, 1]


def test_bowtie_hand_trace(bowtie, backend):
    # edges 0:(0,1) 1:(1,2) 2:(2,0) 3:(2,3) 4:(3,4) 5:(4,2); DFS from 0 visits 0,1,2,3,4.
    # backedge 2 starts at 0 and walks 0,2,1,0; backedge 5 starts at 2 and walks 2,4,3,2.
    c = _decompose(bowtie, 0, backend)
    assert [(ch.vertices, ch.edge_ids, ch.kind) for ch in c] == [
        ((0, 2, 1, 0), (2, 1, 0), ChainKind.CYCLE),
        ((2, 4, 3, 2), (5, 4, 3), ChainKind.CYCLE),
    ]


@pytest.mark.parametrize("root", range(5))
def test_bowtie_two_cycles_from_any_root(bowtie, root):
    c = _decompose(bowtie, root)
    assert len(c) == 2
    assert c.cycle_count == 2


def test_unvisited_edges_examples(triangle, pendant):
    assert unvisited_edges(triangle, _decompose(triangle)) == []
    assert unvisited_edges(pendant, _decompose(pendant)) == [3]


def test_preconditions(two_edges):
    with pytest.raises(NotConnectedError):
        decompose(two_edges, run_dfs(two_edges))
    g = build(2, [(0, 1)])
    with pytest.raises(TooSmallError):
        decompose(g, run_dfs(g))


def test_k4_chain_sequence(k4):
    c = _decompose(k4)
    assert [(ch.vertices, ch.kind) for ch in c] == [
        ((0, 2, 1, 0), ChainKind.CYCLE),
        ((0, 3, 2), ChainKind.PATH),
        ((1, 3), ChainKind.PATH),
    ]


@given(connected_graphs(min_n=3), st.data())
def test_matches_reference_traversal(g, data):
    root = data.draw(st.integers(0, g.n - 1))
    d = run_dfs(g, root)
    c = decompose(g, d)
    assert [(ch.vertices, ch.edge_ids) for ch in c] == _reference_chains(g, d)


def _check_invariants(g):
    d = run_dfs(g)
    c = decompose(g, d)
    assert len(c) == g.m - g.n + 1
    if len(c):
        assert c[1].kind is ChainKind.CYCLE
    used = set()
    seen = set()
    # with a bridge, a later chain can start on a fresh vertex
    ear_like = not unvisited_edges(g, c)
    for ch in c:
        assert d.edge_class(ch.source_backedge) is EdgeClass.BACK
        assert all(d.edge_class(e) is EdgeClass.TREE for e in ch.edge_ids[1:])
        assert ch.first in {g.edges[ch.source_backedge].u, g.edges[ch.source_backedge].v}
        assert ch.source_backedge in d.backedge_from(ch.first)
        for a, b, e in zip(ch.vertices, ch.vertices[1:], ch.edge_ids):
            assert {a, b} == {g.edges[e].u, g.edges[e].v}
            assert c.chain_of_edge(e) == ch.index
        assert (ch.kind is ChainKind.CYCLE) == (ch.first == ch.last)
        assert not used & set(ch.edge_ids)
        used |= set(ch.edge_ids)
        if ch.index > 1:
            # interior always new; ends already visited once edges are all covered
            assert not seen & set(ch.vertices[1:-1])
            assert ch.last in seen or ch.last == ch.first
            if ear_like:
                assert ch.first in seen
        seen |= set(ch.vertices)
    assert used | set(unvisited_edges(g, c)) == set(range(g.m))
    assert not used & set(unvisited_edges(g, c))


@given(connected_graphs(min_n=3))
def test_decomposition_invariants(g):
    _check_invariants(g)


@given(connected_graphs(min_n=3))
def test_deterministic(g):
    d = run_dfs(g)
    assert [(ch.vertices, ch.edge_ids) for ch in decompose(g, d)] == [
        (ch.vertices, ch.edge_ids) for ch in decompose(g, d)
    ]


def test_vertex_first_chain(k4):
    c = _decompose(k4)
    assert [c.first_chain_of_vertex(v) for v in range(4)] == [1, 1, 1, 2]
    assert c.first_vertex(3) == 1


def test_getitem_bounds(triangle):
    c = _decompose(triangle)
    with pytest.raises(IndexError):
        c[0]
    with pytest.raises(IndexError):
        c[2]


def test_petersen_counts():
    g = fixture("petersen")
    c = _decompose(g)
    assert len(c) == 15 - 10 + 1
    assert c.cycle_count == 1


def test_cycle_behind_bridge_starts_on_fresh_vertex():
    # triangle 0-1-2, bridge 0-3, triangle 3-4-5: the second cycle starts at 3
    g = build(6, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 5), (5, 3)])
    c = _decompose(g)
    assert [ch.kind for ch in c] == [ChainKind.CYCLE, ChainKind.CYCLE]
    assert c[2].first == 3 and 3 not in c[1].vertices
    _check_invariants(g)
