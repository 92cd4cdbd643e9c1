"""Pure-Python kernels for fault-masked shortest paths and stretch scans.

This is the fallback used when the compiled extension is unavailable (or
when FAULTSPAN_PURE=1). It mirrors faultspan._kernels._ckern operation for
operation: same vertex scan orders, same tie-breaking, same order of float
additions, so both backends return identical values and witnesses.

The hot object is a Context pairing a sparse subgraph (CSR adjacency) with
the dense matrix of metric distances that defines the complete host graph.
Fault edges are masked through an n*n byte workspace that every entry point
restores to zeros before returning.
"""

from __future__ import annotations

import math

IMPLEMENTATION = "python"

INF = math.inf


class Context:
    __slots__ = ("n", "indptr", "nbrs", "wts", "dmat", "mask",
                 "_dist_g", "_dist_k", "_done")

    def __init__(self, n, edges, dmat_flat):
        adj = [[] for _ in range(n)]
        for u, v, w in edges:
            adj[u].append((v, w))
            adj[v].append((u, w))
        indptr = [0]
        nbrs = []
        wts = []
        for u in range(n):
            adj[u].sort()
            for v, w in adj[u]:
                nbrs.append(v)
                wts.append(w)
            indptr.append(len(nbrs))
        self.n = n
        self.indptr = indptr
        self.nbrs = nbrs
        self.wts = wts
        self.dmat = dmat_flat
        self.mask = bytearray(n * n)
        self._dist_g = [INF] * n
        self._dist_k = [INF] * n
        self._done = bytearray(n)


def make_context(n, edges, dmat_flat):
    """edges: iterable of (u, v, w); dmat_flat: row-major n*n distances."""
    return Context(n, edges, list(dmat_flat))


def _dijkstra_sparse(ctx, src, dist):
    # Array-scan Dijkstra on the CSR subgraph, honoring the fault mask.
    n = ctx.n
    indptr, nbrs, wts, mask = ctx.indptr, ctx.nbrs, ctx.wts, ctx.mask
    done = ctx._done
    for i in range(n):
        dist[i] = INF
        done[i] = 0
    dist[src] = 0.0
    for _ in range(n):
        u = -1
        best = INF
        for v in range(n):
            if not done[v] and dist[v] < best:
                best = dist[v]
                u = v
        if u < 0:
            break
        done[u] = 1
        du = dist[u]
        base = u * n
        for k in range(indptr[u], indptr[u + 1]):
            v = nbrs[k]
            if mask[base + v]:
                continue
            nd = du + wts[k]
            if nd < dist[v]:
                dist[v] = nd


def _dijkstra_dense(ctx, src, dist):
    # Same loop over the implicit complete graph with metric weights.
    n = ctx.n
    dmat, mask = ctx.dmat, ctx.mask
    done = ctx._done
    for i in range(n):
        dist[i] = INF
        done[i] = 0
    dist[src] = 0.0
    for _ in range(n):
        u = -1
        best = INF
        for v in range(n):
            if not done[v] and dist[v] < best:
                best = dist[v]
                u = v
        if u < 0:
            break
        done[u] = 1
        du = dist[u]
        base = u * n
        for v in range(n):
            if v == u or done[v] or mask[base + v]:
                continue
            nd = du + dmat[base + v]
            if nd < dist[v]:
                dist[v] = nd


def _scan_pairs(ctx):
    """Max ratio of subgraph over host distances under the current mask.

    Returns (max_ratio, wp, wq, inf_pairs, pairs_checked). Pairs that are
    unreachable in the host as well contribute nothing; pairs reachable in
    the host but not in the subgraph count as ratio +inf. The witness is
    the first pair (lexicographic, p < q) attaining the maximum.
    """
    n = ctx.n
    dist_g, dist_k = ctx._dist_g, ctx._dist_k
    max_ratio = 0.0
    wp = -1
    wq = -1
    inf_pairs = 0
    pairs = 0
    for src in range(n):
        _dijkstra_sparse(ctx, src, dist_g)
        _dijkstra_dense(ctx, src, dist_k)
        for v in range(src + 1, n):
            den = dist_k[v]
            if den == INF:
                continue
            pairs += 1
            num = dist_g[v]
            if num == INF:
                inf_pairs += 1
                ratio = INF
            else:
                ratio = num / den
            if ratio > max_ratio:
                max_ratio = ratio
                wp = src
                wq = v
    if wp < 0:
        max_ratio = 1.0
    return max_ratio, wp, wq, inf_pairs, pairs


def stretch_eval(ctx, fu, fv):
    """Evaluate the stretch of the subgraph vs the host with faults removed.

    fu, fv: endpoint sequences of the fault edges (masked in both graphs).
    """
    n = ctx.n
    mask = ctx.mask
    for i in range(len(fu)):
        u = fu[i]
        v = fv[i]
        mask[u * n + v] = 1
        mask[v * n + u] = 1
    try:
        return _scan_pairs(ctx)
    finally:
        for i in range(len(fu)):
            u = fu[i]
            v = fv[i]
            mask[u * n + v] = 0
            mask[v * n + u] = 0


def verify_exhaustive(ctx, eu, ev, f):
    """Scan every subset of the candidate edges with induced degree <= f.

    Subsets are visited in lexicographic order of their sorted index tuples
    (the empty set first). Returns (count, pairs_total, max_ratio, wp, wq,
    best_subset) where best_subset is the index tuple of the first subset
    attaining the maximum ratio.
    """
    n = ctx.n
    m = len(eu)
    mask = ctx.mask
    deg = [0] * n
    cur = []
    state = [0, 0, 0.0, -1, -1, ()]  # count, pairs, ratio, wp, wq, best

    def visit(start):
        state[0] += 1
        ratio, wp, wq, _infp, pairs = _scan_pairs(ctx)
        state[1] += pairs
        if ratio > state[2]:
            state[2] = ratio
            state[3] = wp
            state[4] = wq
            state[5] = tuple(cur)
        for j in range(start, m):
            u = eu[j]
            v = ev[j]
            if deg[u] < f and deg[v] < f:
                deg[u] += 1
                deg[v] += 1
                mask[u * n + v] = 1
                mask[v * n + u] = 1
                cur.append(j)
                visit(j + 1)
                cur.pop()
                deg[u] -= 1
                deg[v] -= 1
                mask[u * n + v] = 0
                mask[v * n + u] = 0

    visit(0)
    count, pairs_total, max_ratio, wp, wq, best = state
    if wp < 0:
        max_ratio = 1.0
    return count, pairs_total, max_ratio, wp, wq, best


def count_bounded_subsets(n, eu, ev, f, cap):
    """Count edge subsets with induced max degree <= f, stopping at cap."""
    m = len(eu)
    deg = [0] * n
    total = 0

    def visit(start):
        nonlocal total
        total += 1
        if total >= cap:
            return
        for j in range(start, m):
            u = eu[j]
            v = ev[j]
            if deg[u] < f and deg[v] < f:
                deg[u] += 1
                deg[v] += 1
                visit(j + 1)
                deg[u] -= 1
                deg[v] -= 1
                if total >= cap:
                    return

    visit(0)
    return total


def count_disconnecting(n, eu, ev, f, cap):
    """Over the same subset stream, count subsets whose removal disconnects
    the complete graph on n vertices. Returns (visited, disconnected)."""
    m = len(eu)
    deg = [0] * n
    mask = bytearray(n * n)
    seen = bytearray(n)
    queue = [0] * n
    total = 0
    bad = 0

    def connected():
        for i in range(n):
            seen[i] = 0
        seen[0] = 1
        queue[0] = 0
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            base = u * n
            for v in range(n):
                if not seen[v] and v != u and not mask[base + v]:
                    seen[v] = 1
                    queue[tail] = v
                    tail += 1
        return tail == n

    def visit(start):
        nonlocal total, bad
        total += 1
        if not connected():
            bad += 1
        if total >= cap:
            return
        for j in range(start, m):
            u = eu[j]
            v = ev[j]
            if deg[u] < f and deg[v] < f:
                deg[u] += 1
                deg[v] += 1
                mask[u * n + v] = 1
                mask[v * n + u] = 1
                visit(j + 1)
                deg[u] -= 1
                deg[v] -= 1
                mask[u * n + v] = 0
                mask[v * n + u] = 0
                if total >= cap:
                    return

    if n > 0:
        visit(0)
    return total, bad
