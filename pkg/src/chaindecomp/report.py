"""Assembles the JSON-ready report printed by the command-line tool."""

from __future__ import annotations

import json
import time
from importlib import resources

from ._backend import DEFAULT as _DEFAULT_BACKEND
from .components import block_cut_tree, blocks, certify_ear_decomposition, two_edge_connected_components
from .connectivity import analyze
from .graph import Graph


def load_schema() -> dict:
    return json.loads(resources.files(__package__).joinpath("report_schema.json").read_text())


def make_report(g: Graph, *, source: str, fmt: str, root: int = 0, parse_ms: float = 0.0,
                with_chains: bool = False, backend: str | None = None) -> dict:
    t0 = time.perf_counter()
    res = analyze(g, root, backend)
    t1 = time.perf_counter()
    c = res.decomposition
    connected = res.dfs is not None and res.dfs.reached == g.n and g.n > 0

    rep = {
        "input": {"n": g.n, "m": g.m, "source": source, "format": fmt},
        "backend": backend or _DEFAULT_BACKEND,
        "root": root,
        "verdict": res.verdict.text,
        "bridges": res.bridges,
        "cut_vertices": res.cut_vertices,
        "chain_stats": res.chain_stats,
        "chains": [ch.to_json() for ch in c] if (with_chains and c is not None) else None,
        "two_edge_components": None,
        "blocks": None,
        "block_cut_tree": None,
        "ear_decomposition": None,
    }
    if g.labels is not None:
        rep["input"]["labels"] = list(g.labels)
    if connected:
        tec = two_edge_connected_components(g, res.bridges, backend)
        rep["two_edge_components"] = tec.components
        bl = blocks(g, c, backend)
        rep["blocks"] = [
            {"edges": es, "vertices": vs, "trivial": triv}
            for es, vs, triv in zip(bl.groups, bl.vertex_groups, bl.trivial)
        ]
        rep["block_cut_tree"] = block_cut_tree(bl, res.cut_vertices).to_json()
        if c is not None and res.verdict.two_edge_connected:
            rep["ear_decomposition"] = certify_ear_decomposition(g, c, res.verdict).to_json()
    t2 = time.perf_counter()
    rep["timing"] = {
        "parse_ms": parse_ms,
        "dfs_ms": res.timing.get("dfs_ms", 0.0),
        "chains_ms": res.timing.get("chains_ms", 0.0),
        "verdict_ms": (t1 - t0) * 1e3,
        "components_ms": (t2 - t1) * 1e3,
        "total_ms": parse_ms + (t2 - t0) * 1e3,
    }
    return rep


def format_text(rep: dict, labels=None) -> str:
    """Human-readable rendering; the first line is the verdict string alone."""

    def names(vs):
        if not vs:
            return "none"
        return " ".join(str(labels[v] if labels else v) for v in vs)

    inp = rep["input"]
    st = rep["chain_stats"]
    lines = [
        rep["verdict"],
        f"graph: n={inp['n']} m={inp['m']} source={inp['source']} root={rep['root']}",
        f"bridges (edge ids): {' '.join(map(str, rep['bridges'])) or 'none'}",
        f"cut vertices: {names(rep['cut_vertices'])}",
        f"chains: {st['chains']} ({st['cycles']} cycle(s), {st['paths']} path(s))",
    ]
    if rep["blocks"] is not None:
        trivial = sum(b["trivial"] for b in rep["blocks"])
        lines.append(f"blocks: {len(rep['blocks'])} ({trivial} trivial)")
        lines.append(f"2-edge-connected components: {len(rep['two_edge_components'])}")
    ear = rep["ear_decomposition"]
    if ear is not None:
        state = "valid" if ear["valid"] else f"INVALID ({len(ear['violations'])} violations)"
        lines.append(f"ear decomposition: {ear['kind']} {state}")
    t = rep["timing"]
    lines.append(
        f"time: parse {t['parse_ms']:.1f} ms, dfs {t['dfs_ms']:.1f} ms, "
        f"chains {t['chains_ms']:.1f} ms, total {t['total_ms']:.1f} ms"
    )
    return "\n".join(lines)
