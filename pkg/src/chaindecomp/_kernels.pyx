# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for DFS, chain traversal, block grouping and component labels.

Signatures and outputs match ``_pykernels`` exactly.
"""

import numpy as np
cimport numpy as cnp

cnp.import_array()

ctypedef cnp.int64_t i64

cdef enum:
    UNREACHED = 0
    TREE = 1
    BACK = 2


def dfs(Py_ssize_t n, const i64[::1] offsets, const i64[::1] targets,
        const i64[::1] edge_ids, Py_ssize_t m, Py_ssize_t root):
    # int32 dfi and per-arc flags keep the random-access working set small
    dfi_a = np.full(n, -1, dtype=np.int32)
    parent_a = np.full(n, -1, dtype=np.int64)
    pedge_a = np.full(n, -1, dtype=np.int64)
    size_a = np.zeros(n, dtype=np.int64)
    order_a = np.empty(n, dtype=np.int64)
    kind_a = np.zeros(m, dtype=np.int8)
    arc_a = np.zeros(offsets[n], dtype=np.int8)
    cursor_a = np.array(offsets[:n], dtype=np.int64)
    stack_a = np.empty(max(n, 1), dtype=np.int64)
    cdef cnp.int32_t[::1] dfi = dfi_a
    cdef i64[::1] parent = parent_a
    cdef i64[::1] pedge = pedge_a
    cdef i64[::1] size = size_a
    cdef i64[::1] order = order_a
    cdef cnp.int8_t[::1] kind = kind_a
    cdef cnp.int8_t[::1] arc = arc_a
    cdef i64[::1] cursor = cursor_a
    cdef i64[::1] stack = stack_a
    cdef Py_ssize_t top = 0, counter = 1
    cdef i64 v, w, e, pe, i, end
    cdef bint descended

    stack[0] = root
    dfi[root] = 0
    order[0] = root
    with nogil:
        while top >= 0:
            v = stack[top]
            i = cursor[v]
            end = offsets[v + 1]
            pe = pedge[v]
            descended = False
            while i < end:
                w = targets[i]
                e = edge_ids[i]
                i += 1
                if e == pe:
                    continue
                if dfi[w] < 0:
                    kind[e] = TREE
                    dfi[w] = <cnp.int32_t>counter
                    order[counter] = w
                    counter += 1
                    parent[w] = v
                    pedge[w] = e
                    top += 1
                    stack[top] = w
                    descended = True
                    break
                if dfi[w] > dfi[v]:
                    arc[i - 1] = BACK
                kind[e] = BACK
            cursor[v] = i
            if not descended:
                top -= 1
                size[v] = counter - dfi[v]

    bk_off_a = np.zeros(n + 1, dtype=np.int64)
    bk_a = np.empty(m, dtype=np.int64)
    cdef i64[::1] bk_off = bk_off_a
    cdef i64[::1] bk = bk_a
    cdef Py_ssize_t nb = 0
    cdef i64 dv, dw, hi, bad = -1
    with nogil:
        for v in range(n):
            dv = dfi[v]
            if dv >= 0:
                hi = dv + size[v]
                for i in range(offsets[v], offsets[v + 1]):
                    if arc[i] == BACK:
                        dw = dfi[targets[i]]
                        if dw >= hi:
                            bad = edge_ids[i]
                            break
                        bk[nb] = edge_ids[i]
                        nb += 1
                if bad >= 0:
                    break
            bk_off[v + 1] = nb
    if bad >= 0:
        raise RuntimeError(f"edge {bad} is a cross edge; DFS invariant broken")
    return (dfi_a.astype(np.int64), parent_a, pedge_a, order_a[:counter].copy(), size_a, kind_a,
            bk_off_a, bk_a[:nb].copy())


def chains(Py_ssize_t n, Py_ssize_t m, const i64[::1] order, const i64[::1] parent,
           const i64[::1] parent_edge, const i64[::1] bk_offsets, const i64[::1] bk_edges,
           const i64[::1] edge_u, const i64[::1] edge_v):
    cdef Py_ssize_t k = bk_edges.shape[0]
    vptr_a = np.zeros(k + 1, dtype=np.int64)
    eptr_a = np.zeros(k + 1, dtype=np.int64)
    # every vertex is entered at most once after its chain start, plus start and stop per chain
    verts_a = np.empty(n + 2 * k, dtype=np.int64)
    edges_a = np.empty(m, dtype=np.int64)
    edge_chain_a = np.full(m, -1, dtype=np.int64)
    vchain_a = np.full(n, -1, dtype=np.int64)
    cyc_a = np.zeros(k, dtype=np.uint8)
    cdef i64[::1] vptr = vptr_a
    cdef i64[::1] eptr = eptr_a
    cdef i64[::1] verts = verts_a
    cdef i64[::1] edges = edges_a
    cdef i64[::1] edge_chain = edge_chain_a
    cdef i64[::1] vchain = vchain_a
    cdef cnp.uint8_t[::1] cyc = cyc_a
    cdef Py_ssize_t nv = 0, ne = 0, c = 0, t, j
    cdef i64 v, x, e, f
    with nogil:
        for t in range(order.shape[0]):
            v = order[t]
            for j in range(bk_offsets[v], bk_offsets[v + 1]):
                e = bk_edges[j]
                if vchain[v] < 0:
                    vchain[v] = c
                x = edge_v[e] if edge_u[e] == v else edge_u[e]
                verts[nv] = v
                verts[nv + 1] = x
                nv += 2
                edges[ne] = e
                ne += 1
                edge_chain[e] = c
                while vchain[x] < 0:
                    vchain[x] = c
                    f = parent_edge[x]
                    edge_chain[f] = c
                    edges[ne] = f
                    ne += 1
                    x = parent[x]
                    verts[nv] = x
                    nv += 1
                cyc[c] = 1 if x == v else 0
                c += 1
                vptr[c] = nv
                eptr[c] = ne
    return (vptr_a, verts_a[:nv].copy(), eptr_a, edges_a[:ne].copy(), edge_chain_a,
            vchain_a, cyc_a)


cdef inline i64 _find(i64[::1] p, i64 x) noexcept nogil:
    cdef i64 root = x, nxt
    while p[root] != root:
        root = p[root]
    while p[x] != root:
        nxt = p[x]
        p[x] = root
        x = nxt
    return root


def block_roots(Py_ssize_t m, const i64[::1] vptr, const i64[::1] verts, const i64[::1] eptr,
                const i64[::1] edges, const cnp.uint8_t[::1] is_cycle, const i64[::1] parent_edge):
    p_a = np.arange(m, dtype=np.int64)
    cdef i64[::1] p = p_a
    cdef Py_ssize_t c, j
    cdef i64 first, r
    with nogil:
        for c in range(is_cycle.shape[0]):
            first = _find(p, edges[eptr[c]])
            for j in range(eptr[c] + 1, eptr[c + 1]):
                r = _find(p, edges[j])
                if r != first:
                    p[r] = first
            if not is_cycle[c]:
                r = _find(p, parent_edge[verts[vptr[c + 1] - 1]])
                if r != first:
                    p[r] = first
        for j in range(m):
            p[j] = _find(p, j)
    return p_a


def label_components(Py_ssize_t n, const i64[::1] offsets, const i64[::1] targets,
                     const i64[::1] edge_ids, const cnp.uint8_t[::1] usable):
    comp_a = np.full(n, -1, dtype=np.int64)
    stack_a = np.empty(max(n, 1), dtype=np.int64)
    cdef i64[::1] comp = comp_a
    cdef i64[::1] stack = stack_a
    cdef Py_ssize_t s, top, i
    cdef i64 c = 0, v, w
    with nogil:
        for s in range(n):
            if comp[s] >= 0:
                continue
            comp[s] = c
            stack[0] = s
            top = 0
            while top >= 0:
                v = stack[top]
                top -= 1
                for i in range(offsets[v], offsets[v + 1]):
                    w = targets[i]
                    if comp[w] < 0 and usable[edge_ids[i]]:
                        comp[w] = c
                        top += 1
                        stack[top] = w
            c += 1
    return comp_a
