"""Pure-Python kernels; same signatures and outputs as the compiled ``_kernels``.

All kernels take and return flat numpy int64 arrays.  Internally they work on
Python lists, which is much faster than indexing numpy arrays element-wise.
"""

import numpy as np

UNREACHED, TREE, BACK = 0, 1, 2


def _i64(xs):
    return np.asarray(xs, dtype=np.int64)


def dfs(n, offsets, targets, edge_ids, m, root):
    """Iterative DFS from ``root``.

    Returns ``(dfi, parent, parent_edge, order, size, edge_kind, bk_offsets,
    bk_edges)``; see :mod:`chaindecomp.dfs` for the meaning of each array.
    """
    off = offsets.tolist()
    tg = targets.tolist()
    ei = edge_ids.tolist()
    dfi = [-1] * n
    parent = [-1] * n
    pedge = [-1] * n
    size = [0] * n
    kind = [UNREACHED] * m
    order = [root]
    dfi[root] = 0
    cursor = off[:n]
    stack = [root]
    counter = 1
    while stack:
        v = stack[-1]
        i = cursor[v]
        end = off[v + 1]
        pe = pedge[v]
        descended = False
        while i < end:
            w = tg[i]
            e = ei[i]
            i += 1
            if e == pe:
                continue
            if dfi[w] < 0:
                kind[e] = TREE
                dfi[w] = counter
                counter += 1
                parent[w] = v
                pedge[w] = e
                order.append(w)
                stack.append(w)
                descended = True
                break
            kind[e] = BACK
        cursor[v] = i
        if not descended:
            stack.pop()
            size[v] = counter - dfi[v]

    bk_off = [0] * (n + 1)
    bk = []
    for v in range(n):
        dv = dfi[v]
        if dv >= 0:
            hi = dv + size[v]
            for i in range(off[v], off[v + 1]):
                e = ei[i]
                if kind[e] == BACK:
                    dw = dfi[tg[i]]
                    if dw > dv:
                        if dw >= hi:
                            raise RuntimeError(f"edge {e} is a cross edge; DFS invariant broken")
                        bk.append(e)
        bk_off[v + 1] = len(bk)
    return (_i64(dfi), _i64(parent), _i64(pedge), _i64(order), _i64(size),
            np.asarray(kind, dtype=np.int8), _i64(bk_off), _i64(bk))


def chains(n, m, order, parent, parent_edge, bk_offsets, bk_edges, edge_u, edge_v):
    """Chain traversal over backedges, vertices taken in ascending DFI order.

    Returns ``(vptr, verts, eptr, edges, edge_chain, vertex_chain, is_cycle)``.
    Chain ``c`` (0-based) owns ``verts[vptr[c]:vptr[c+1]]`` and
    ``edges[eptr[c]:eptr[c+1]]``.  ``vertex_chain[x]`` is the chain that first
    marked ``x`` visited, ``-1`` if none; ``edge_chain`` likewise for edges.
    """
    par = parent.tolist()
    pedge = parent_edge.tolist()
    bo = bk_offsets.tolist()
    bk = bk_edges.tolist()
    eu = edge_u.tolist()
    ev = edge_v.tolist()
    edge_chain = [-1] * m
    vchain = [-1] * n
    vptr = [0]
    eptr = [0]
    verts = []
    edges = []
    cyc = []
    c = 0
    for v in order.tolist():
        for j in range(bo[v], bo[v + 1]):
            e = bk[j]
            if vchain[v] < 0:
                vchain[v] = c
            x = ev[e] if eu[e] == v else eu[e]
            verts.append(v)
            verts.append(x)
            edges.append(e)
            edge_chain[e] = c
            while vchain[x] < 0:
                vchain[x] = c
                f = pedge[x]
                edge_chain[f] = c
                edges.append(f)
                x = par[x]
                verts.append(x)
            cyc.append(1 if x == v else 0)
            vptr.append(len(verts))
            eptr.append(len(edges))
            c += 1
    return (_i64(vptr), _i64(verts), _i64(eptr), _i64(edges), _i64(edge_chain),
            _i64(vchain), np.asarray(cyc, dtype=np.uint8))


def _find(p, x):
    root = x
    while p[root] != root:
        root = p[root]
    while p[x] != root:
        p[x], x = root, p[x]
    return root


def block_roots(m, vptr, verts, eptr, edges, is_cycle, parent_edge):
    """Union-find over edge ids grouping each chain with the block it hangs off.

    A chain's edges share its generating cycle.  A path chain ending at ``y``
    additionally joins the block of ``y``'s parent edge, which lies on the
    same cycle.  Edges outside every chain stay singletons.  Returns the
    representative of every edge.
    """
    p = list(range(m))
    ep = eptr.tolist()
    ed = edges.tolist()
    vp = vptr.tolist()
    vs = verts.tolist()
    pe = parent_edge.tolist()
    cyc = is_cycle.tolist()
    for c in range(len(cyc)):
        first = _find(p, ed[ep[c]])
        for j in range(ep[c] + 1, ep[c + 1]):
            r = _find(p, ed[j])
            if r != first:
                p[r] = first
        if not cyc[c]:
            r = _find(p, pe[vs[vp[c + 1] - 1]])
            if r != first:
                p[r] = first
    return _i64([_find(p, e) for e in range(m)])


def label_components(n, offsets, targets, edge_ids, usable):
    """Connected components using only edges with ``usable[e]`` set.

    Components are numbered in order of their smallest vertex.
    """
    off = offsets.tolist()
    tg = targets.tolist()
    ei = edge_ids.tolist()
    ok = usable.tolist()
    comp = [-1] * n
    c = 0
    for s in range(n):
        if comp[s] >= 0:
            continue
        comp[s] = c
        stack = [s]
        while stack:
            v = stack.pop()
            for i in range(off[v], off[v + 1]):
                w = tg[i]
                if comp[w] < 0 and ok[ei[i]]:
                    comp[w] = c
                    stack.append(w)
        c += 1
    return _i64(comp)
