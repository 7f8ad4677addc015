# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled gluing kernels; same contract as ``_kernels_py``."""
import array


cdef inline int _find(int[::1] parent, int[::1] par, int i, int* p_out):
    cdef int p = 0, j = i, root, q, nxt, nq
    while parent[j] != j:
        p ^= par[j]
        j = parent[j]
    root = j
    j = i
    q = p
    while parent[j] != j:
        nxt = parent[j]
        nq = q ^ par[j]
        parent[j] = root
        par[j] = q
        j = nxt
        q = nq
    p_out[0] = p
    return root


def parity_union(int n, edges):
    cdef int[::1] parent = _ints(n)
    cdef int[::1] par = _ints(n)
    cdef int[::1] bad = _ints(n)
    cdef int i, a, b, want, ra, rb, pa = 0, pb = 0, e, m = len(edges)
    for i in range(n):
        parent[i] = i
    for e in range(0, m, 3):
        a = edges[e]
        b = edges[e + 1]
        want = edges[e + 2]
        ra = _find(parent, par, a, &pa)
        rb = _find(parent, par, b, &pb)
        if ra == rb:
            if pa ^ pb != want:
                bad[ra] = 1
            continue
        parent[rb] = ra
        par[rb] = pa ^ pb ^ want
        bad[ra] |= bad[rb]
    root = [0] * n
    parity = [0] * n
    for i in range(n):
        root[i] = _find(parent, par, i, &pa)
        parity[i] = pa
    return root, parity, [bad[root[i]] for i in range(n)]


cdef int[::1] _ints(int n):
    return array.array("i", bytes(4 * n)) if n else array.array("i", [0])


def trace_cycles(free_, fwd_, glued_, node_piece_, parity_):
    cdef int n = len(free_)
    cdef int[::1] free = _as_ints(free_)
    cdef int[::1] fwd = _as_ints(fwd_)
    cdef int[::1] glued = _as_ints(glued_)
    cdef int[::1] node_piece = _as_ints(node_piece_)
    cdef int[::1] parity = _as_ints(parity_)
    cdef int[::1] seen = _ints(n)
    cdef int start, v, w, u, g, d, agree, consistent
    out = []
    for start in range(0, n, 2):
        if glued[start] >= 0 or seen[start]:
            continue
        nodes = []
        agree = -1
        consistent = 1
        v = start
        while True:
            seen[v] = 1
            nodes.append(v)
            w = v ^ 1
            seen[w] = 1
            while True:
                d = fwd[w] ^ parity[node_piece[w]]
                if agree < 0:
                    agree = d
                elif agree != d:
                    consistent = 0
                u = free[w]
                g = glued[u]
                if g < 0:
                    break
                seen[u] = 1
                seen[g] = 1
                w = g
            v = u
            if v == start:
                break
        out.append((nodes, agree, consistent, start))
    for start in range(n):
        if seen[start]:
            continue
        agree = -1
        consistent = 1
        w = start
        while True:
            seen[w] = 1
            d = fwd[w] ^ parity[node_piece[w]]
            if agree < 0:
                agree = d
            elif agree != d:
                consistent = 0
            u = free[w]
            seen[u] = 1
            w = glued[u]
            if w == start:
                break
        out.append(([], agree, consistent, start))
    return out


cdef int[::1] _as_ints(seq):
    if len(seq) == 0:
        return array.array("i", [0])
    return array.array("i", seq)
