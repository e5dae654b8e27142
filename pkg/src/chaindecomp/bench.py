"""Wall-clock timing of the verdict path (DFS, chains, verdict)."""

from __future__ import annotations

import statistics
import time

import numpy as np

from .connectivity import check
from .graph import Graph
from .oracle import random_two_connected


def time_check(g: Graph, backend: str | None = None, repeat: int = 5) -> float:
    """Median seconds for one ``check`` call over ``repeat`` runs."""
    if repeat < 1:
        raise ValueError("repeat must be at least 1")
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        check(g, backend=backend)
        times.append(time.perf_counter() - t)
    return statistics.median(times)


def bench_sizes(sizes, chords_per_vertex: float, seed: int, repeat: int, backends) -> list[dict]:
    rng = np.random.default_rng(seed)
    rows = []
    for n in sizes:
        g = random_two_connected(rng, n, int(round(chords_per_vertex * n)))
        for b in backends:
            med = time_check(g, b, repeat)
            rows.append({"n": g.n, "m": g.m, "median_ms": med * 1e3,
                         "per_edge_ns": med * 1e9 / max(g.m, 1), "backend": b})
    return rows
