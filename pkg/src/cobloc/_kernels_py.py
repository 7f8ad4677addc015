"""Pure-Python gluing kernels.

Both functions work on flat integer lists so that the compiled twin in
``_kernels.pyx`` can share the exact same contract.

Boundary nodes.  Every arc occurrence ``o`` owns two nodes, ``2*o`` (its
parameter-0 end) and ``2*o + 1`` (its parameter-1 end).  ``free[v]`` is the
node joined to ``v`` by a free boundary arc, ``fwd[v]`` is 1 when leaving
``v`` along that free arc follows the owning piece's walk direction, and
``glued[v]`` is the node identified with ``v`` by an interval gluing, or -1
when the occurrence survives into the result.
"""


def parity_union(n, edges):
    """Union-find with a Z/2 label per element.

    ``edges`` is a flat list ``[a0, b0, p0, a1, b1, p1, ...]`` asking for
    ``x[a] ^ x[b] == p``.  Returns ``(root, parity, bad)`` where ``parity[i]``
    is ``x[i] ^ x[root[i]]`` and ``bad[r]`` is 1 if the system on root ``r``
    is inconsistent.
    """
    parent = list(range(n))
    par = [0] * n
    bad = [0] * n

    def find(i):
        p = 0
        j = i
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
        return root, p

    for e in range(0, len(edges), 3):
        a, b, want = edges[e], edges[e + 1], edges[e + 2]
        ra, pa = find(a)
        rb, pb = find(b)
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
        root[i], parity[i] = find(i)
    return root, parity, [bad[root[i]] for i in range(n)]


def trace_cycles(free, fwd, glued, node_piece, parity):
    """Walk the boundary of a glued surface.

    Returns a list of cycles ``(nodes, agree, consistent, anchor)``: ``nodes`` are the
    entry nodes of surviving arcs in walking order (empty for a window),
    ``agree`` is 1 when the walk follows the orientation of the piece labelled
    0 in its parity class, and ``consistent`` is 0 if different free arcs
    disagreed about that (only meaningful on orientable components).
    ``anchor`` is some node on the cycle.
    """
    n = len(free)
    seen = [0] * n
    out = []
    # cycles through at least one surviving arc
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
    # windows created by gluing
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
