"""Hypothesis strategies for small simple graphs."""

import itertools

from hypothesis import strategies as st

from chaindecomp import build


@st.composite
def edge_lists(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    flips = draw(st.lists(st.booleans(), min_size=len(chosen), max_size=len(chosen)))
    return n, [(b, a) if f else (a, b) for (a, b), f in zip(chosen, flips)]


@st.composite
def graphs(draw, min_n=1, max_n=9):
    n, pairs = draw(edge_lists(min_n, max_n))
    return build(n, pairs)


@st.composite
def connected_graphs(draw, min_n=1, max_n=9):
    """A random spanning tree plus arbitrary extra edges, under a random labelling."""
    n = draw(st.integers(min_n, max_n))
    perm = draw(st.permutations(range(n)))
    tree = [(perm[i], perm[draw(st.integers(0, i - 1))]) for i in range(1, n)]
    have = {frozenset(e) for e in tree}
    rest = [p for p in itertools.combinations(range(n), 2) if frozenset(p) not in have]
    extra = draw(st.lists(st.sampled_from(rest), unique=True)) if rest else []
    edges = draw(st.permutations(tree + extra))
    return build(n, edges)
