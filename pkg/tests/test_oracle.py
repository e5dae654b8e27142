import itertools

import pytest

from chaindecomp import InvalidParams, Verdict, build, serialize
from chaindecomp.oracle import (
    FIXTURES,
    ExhaustiveLabeled,
    NamedFixture,
    RandomConnected,
    RandomGnm,
    RandomTwoConnected,
    brute_blocks,
    brute_blocks_by_cycles,
    brute_bridges,
    brute_classify,
    brute_cut_vertices,
    brute_is_connected,
    fixture,
    generate,
)


def test_is_connected_examples(triangle, two_edges):
    assert brute_is_connected(triangle)
    assert not brute_is_connected(two_edges)
    assert brute_is_connected(build(1, []))
    assert not brute_is_connected(build(0, []))


def test_bridges_examples(path3, k4, pendant):
    assert brute_bridges(path3) == [0, 1]
    assert brute_bridges(k4) == []
    assert brute_bridges(pendant) == [3]


def test_cut_vertices_examples(bowtie):
    assert brute_cut_vertices(bowtie) == [2]
    assert brute_cut_vertices(fixture("c5")) == []
    assert brute_cut_vertices(fixture("star")) == [0]
    assert brute_cut_vertices(build(2, [(0, 1)])) == []


def test_classify_examples(triangle, bowtie):
    assert brute_classify(build(2, [(0, 1)])) is Verdict.NOT_TWO_EDGE_CONNECTED
    assert brute_classify(triangle) is Verdict.TWO_CONNECTED
    assert brute_classify(bowtie) is Verdict.TWO_EDGE_CONNECTED_ONLY


def test_blocks_examples(bowtie, path3, k4):
    assert brute_blocks(bowtie).groups == [[0, 1, 2], [3, 4, 5]]
    assert brute_blocks(path3).groups == [[0], [1]]
    assert brute_blocks(k4).groups == [[0, 1, 2, 3, 4, 5]]


@pytest.mark.parametrize("n, total, connected", [(1, 1, 1), (2, 2, 1), (3, 8, 4), (4, 64, 38), (5, 1024, 728)])
def test_exhaustive_counts(n, total, connected):
    # connected labeled graphs: 1, 1, 4, 38, 728 (OEIS A001187)
    gs = list(generate(ExhaustiveLabeled(n)))
    assert len(gs) == total == 2 ** (n * (n - 1) // 2)
    assert sum(brute_is_connected(g) for g in gs) == connected
    assert len({serialize(g) for g in gs}) == total


def test_exhaustive_n3_connected_by_hand():
    # on 3 vertices the connected graphs are the three paths and the triangle
    conn = [frozenset(map(frozenset, g.pairs())) for g in generate(ExhaustiveLabeled(3)) if brute_is_connected(g)]
    pairs = [frozenset(p) for p in itertools.combinations(range(3), 2)]
    expected = {frozenset(s) for s in itertools.combinations(pairs, 2)} | {frozenset(pairs)}
    assert set(conn) == expected


def test_random_two_connected():
    (g,) = generate(RandomTwoConnected(10, 5, seed=3))
    assert g.m == 15
    assert brute_classify(g) is Verdict.TWO_CONNECTED


def test_random_two_connected_always_two_connected():
    for g in generate(RandomTwoConnected(9, 4, seed=11, count=200)):
        assert brute_classify(g) is Verdict.TWO_CONNECTED


def test_random_two_connected_large_uses_rejection_sampler():
    from chaindecomp.oracle import random_two_connected
    import numpy as np
    g = random_two_connected(np.random.default_rng(0), 5000, 20000)
    assert g.m == 25000 and g.n == 5000


def test_named_fixture():
    (g,) = generate(NamedFixture("bowtie"))
    assert (g.n, g.m) == (5, 6)
    assert set(FIXTURES) == {"triangle", "path3", "bowtie", "k4", "c5", "star", "triangle-pendant", "petersen"}
    with pytest.raises(InvalidParams):
        fixture("nope")


@pytest.mark.parametrize(
    "family",
    [
        RandomGnm(8, 10, seed=5, count=20),
        RandomTwoConnected(8, 6, seed=5, count=20),
        RandomConnected(9, 20, seed=5),
    ],
)
def test_generation_reproducible(family):
    a = [serialize(g) for g in generate(family)]
    b = [serialize(g) for g in generate(family)]
    assert a == b
    assert len(a) == 20


def test_gnm_edge_count():
    for g in generate(RandomGnm(7, 9, seed=1, count=10)):
        assert (g.n, g.m) == (7, 9)


def test_random_connected_is_connected():
    for g in generate(RandomConnected(10, 100, seed=2)):
        assert brute_is_connected(g)
        assert 1 <= g.n <= 10


@pytest.mark.parametrize(
    "family",
    [
        RandomGnm(4, 7, seed=0),
        RandomTwoConnected(2, 0, seed=0),
        RandomTwoConnected(5, 6, seed=0),
        ExhaustiveLabeled(9),
        RandomConnected(0, 5, seed=0),
    ],
)
def test_invalid_params(family):
    with pytest.raises(InvalidParams):
        list(generate(family))


def test_block_oracles_agree_exhaustively():
    for n in range(1, 6):
        for g in generate(ExhaustiveLabeled(n)):
            if brute_is_connected(g):
                assert brute_blocks(g).as_sets() == brute_blocks_by_cycles(g).as_sets(), serialize(g)
