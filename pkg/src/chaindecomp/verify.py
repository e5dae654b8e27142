"""Cross-checks of the chain-based results against the brute-force oracles."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from . import oracle
from .components import block_cut_tree, blocks, certify_ear_decomposition
from .connectivity import Verdict, analyze, check_via_theorem3
from .graph import Graph, serialize

BLOCKS_MAX_N = 10


def compare(g: Graph, root: int = 0, backend: str | None = None, blocks_max_n: int = BLOCKS_MAX_N,
            _flip_verdict: bool = False) -> list[str]:
    """Every disagreement between the fast path and the oracles on ``g``."""
    res = analyze(g, root, backend)
    verdict = res.verdict
    if _flip_verdict:
        verdict = Verdict.TWO_CONNECTED if verdict is not Verdict.TWO_CONNECTED else Verdict.NOT_CONNECTED
    expected = oracle.brute_classify(g)
    problems = []
    if verdict is not expected:
        problems.append(f"verdict {verdict.text!r} != oracle {expected.text!r}")
    if expected is Verdict.NOT_CONNECTED:
        return problems
    if res.bridges != oracle.brute_bridges(g):
        problems.append(f"bridges {res.bridges} != oracle {oracle.brute_bridges(g)}")
    if res.cut_vertices != oracle.brute_cut_vertices(g):
        problems.append(f"cut vertices {res.cut_vertices} != oracle {oracle.brute_cut_vertices(g)}")
    if g.n >= 3 and check_via_theorem3(g, root, backend) != (expected is Verdict.TWO_CONNECTED):
        problems.append("minimum-degree/cycle test disagrees with the oracle")
    c = res.decomposition
    if g.n <= blocks_max_n:
        bl = blocks(g, c, backend)
        if bl.as_sets() != oracle.brute_blocks(g).as_sets():
            problems.append("blocks differ from oracle")
        bct = block_cut_tree(bl, res.cut_vertices)
        if not bct.is_tree():
            problems.append("block-cut tree is not a tree")
    if c is not None and expected.two_edge_connected:
        cert = certify_ear_decomposition(g, c, expected)
        if not cert.valid:
            problems.append(f"ear certificate invalid: {cert.violations}")
    return problems


@dataclass
class Summary:
    graphs: int = 0
    mismatches: int = 0
    verdicts: dict = field(default_factory=dict)
    first_counterexample: str | None = None
    first_problems: list[str] = field(default_factory=list)

    def line(self) -> str:
        return f"{self.graphs} graphs, {self.mismatches} mismatches"


def run(graphs: Iterable[Graph], backend: str | None = None, inject_fault: bool = False,
        blocks_max_n: int = BLOCKS_MAX_N) -> Summary:
    s = Summary()
    for g in graphs:
        problems = compare(g, backend=backend, blocks_max_n=blocks_max_n,
                           _flip_verdict=inject_fault and s.graphs == 0)
        s.graphs += 1
        v = oracle.brute_classify(g).text
        s.verdicts[v] = s.verdicts.get(v, 0) + 1
        if problems:
            s.mismatches += 1
            if s.first_counterexample is None:
                s.first_counterexample = serialize(g)
                s.first_problems = problems
    return s
