# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels for fault-masked shortest paths and stretch scans.

Mirrors faultspan._kernels._pykern operation for operation (same scan
orders, same tie-breaking, same order of float additions); both backends
return identical values and witnesses. See _pykern for the semantics.
"""

from libc.stdlib cimport free, malloc

IMPLEMENTATION = "c"

cdef double INF = float("inf")


cdef class Context:
    cdef int n
    cdef int *indptr
    cdef int *nbrs
    cdef double *wts
    cdef double *dmat
    cdef unsigned char *mask
    cdef double *dist_g
    cdef double *dist_k
    cdef unsigned char *done

    def __cinit__(self, int n, edges, dmat_flat):
        cdef int m = len(edges)
        cdef long nn = <long>n * n
        cdef int idx, u, v
        cdef double w
        self.n = n
        self.indptr = <int *>malloc((n + 1) * sizeof(int))
        self.nbrs = <int *>malloc(max(1, 2 * m) * sizeof(int))
        self.wts = <double *>malloc(max(1, 2 * m) * sizeof(double))
        self.dmat = <double *>malloc(max(1, nn) * sizeof(double))
        self.mask = <unsigned char *>malloc(max(1, nn) * sizeof(unsigned char))
        self.dist_g = <double *>malloc(max(1, n) * sizeof(double))
        self.dist_k = <double *>malloc(max(1, n) * sizeof(double))
        self.done = <unsigned char *>malloc(max(1, n) * sizeof(unsigned char))
        if (self.indptr == NULL or self.nbrs == NULL or self.wts == NULL
                or self.dmat == NULL or self.mask == NULL
                or self.dist_g == NULL or self.dist_k == NULL
                or self.done == NULL):
            raise MemoryError()
        adj = [[] for _ in range(n)]
        for e in edges:
            u = e[0]
            v = e[1]
            w = e[2]
            adj[u].append((v, w))
            adj[v].append((u, w))
        idx = 0
        self.indptr[0] = 0
        for u in range(n):
            adj[u].sort()
            for nb in adj[u]:
                self.nbrs[idx] = nb[0]
                self.wts[idx] = nb[1]
                idx += 1
            self.indptr[u + 1] = idx
        cdef long i
        for i in range(nn):
            self.dmat[i] = dmat_flat[i]
            self.mask[i] = 0

    def __dealloc__(self):
        free(self.indptr)
        free(self.nbrs)
        free(self.wts)
        free(self.dmat)
        free(self.mask)
        free(self.dist_g)
        free(self.dist_k)
        free(self.done)


cdef struct ScanResult:
    double ratio
    int wp
    int wq
    long inf_pairs
    long pairs


cdef void _dijkstra_sparse(Context ctx, int src) noexcept:
    cdef int n = ctx.n
    cdef int i, u, v, k, base
    cdef double best, du, nd
    for i in range(n):
        ctx.dist_g[i] = INF
        ctx.done[i] = 0
    ctx.dist_g[src] = 0.0
    for i in range(n):
        u = -1
        best = INF
        for v in range(n):
            if not ctx.done[v] and ctx.dist_g[v] < best:
                best = ctx.dist_g[v]
                u = v
        if u < 0:
            break
        ctx.done[u] = 1
        du = ctx.dist_g[u]
        base = u * n
        for k in range(ctx.indptr[u], ctx.indptr[u + 1]):
            v = ctx.nbrs[k]
            if ctx.mask[base + v]:
                continue
            nd = du + ctx.wts[k]
            if nd < ctx.dist_g[v]:
                ctx.dist_g[v] = nd


cdef void _dijkstra_dense(Context ctx, int src) noexcept:
    cdef int n = ctx.n
    cdef int i, u, v, base
    cdef double best, du, nd
    for i in range(n):
        ctx.dist_k[i] = INF
        ctx.done[i] = 0
    ctx.dist_k[src] = 0.0
    for i in range(n):
        u = -1
        best = INF
        for v in range(n):
            if not ctx.done[v] and ctx.dist_k[v] < best:
                best = ctx.dist_k[v]
                u = v
        if u < 0:
            break
        ctx.done[u] = 1
        du = ctx.dist_k[u]
        base = u * n
        for v in range(n):
            if v == u or ctx.done[v] or ctx.mask[base + v]:
                continue
            nd = du + ctx.dmat[base + v]
            if nd < ctx.dist_k[v]:
                ctx.dist_k[v] = nd


cdef ScanResult _scan_pairs(Context ctx) noexcept:
    cdef ScanResult r
    cdef int n = ctx.n
    cdef int src, v
    cdef double num, den, ratio
    r.ratio = 0.0
    r.wp = -1
    r.wq = -1
    r.inf_pairs = 0
    r.pairs = 0
    for src in range(n):
        _dijkstra_sparse(ctx, src)
        _dijkstra_dense(ctx, src)
        for v in range(src + 1, n):
            den = ctx.dist_k[v]
            if den == INF:
                continue
            r.pairs += 1
            num = ctx.dist_g[v]
            if num == INF:
                r.inf_pairs += 1
                ratio = INF
            else:
                ratio = num / den
            if ratio > r.ratio:
                r.ratio = ratio
                r.wp = src
                r.wq = v
    return r


def make_context(n, edges, dmat_flat):
    """edges: iterable of (u, v, w); dmat_flat: row-major n*n distances."""
    return Context(n, list(edges), list(dmat_flat))


def stretch_eval(Context ctx, fu, fv):
    """Evaluate the stretch of the subgraph vs the host with faults removed.

    fu, fv: endpoint sequences of the fault edges (masked in both graphs).
    """
    cdef int n = ctx.n
    cdef int k = len(fu)
    cdef int i, u, v
    for i in range(k):
        u = fu[i]
        v = fv[i]
        ctx.mask[u * n + v] = 1
        ctx.mask[v * n + u] = 1
    cdef ScanResult r = _scan_pairs(ctx)
    for i in range(k):
        u = fu[i]
        v = fv[i]
        ctx.mask[u * n + v] = 0
        ctx.mask[v * n + u] = 0
    cdef double ratio = r.ratio
    if r.wp < 0:
        ratio = 1.0
    return (ratio, r.wp, r.wq, r.inf_pairs, r.pairs)


cdef struct BestState:
    long count
    long pairs_total
    double ratio
    int wp
    int wq
    int best_len


cdef void _visit(Context ctx, int start, int m, int *eu, int *ev, int f,
                 int *deg, int *cur, int cur_len, int *best,
                 BestState *st) noexcept:
    cdef ScanResult r = _scan_pairs(ctx)
    cdef int i, j, u, v
    st.count += 1
    st.pairs_total += r.pairs
    if r.ratio > st.ratio:
        st.ratio = r.ratio
        st.wp = r.wp
        st.wq = r.wq
        st.best_len = cur_len
        for i in range(cur_len):
            best[i] = cur[i]
    for j in range(start, m):
        u = eu[j]
        v = ev[j]
        if deg[u] < f and deg[v] < f:
            deg[u] += 1
            deg[v] += 1
            ctx.mask[u * ctx.n + v] = 1
            ctx.mask[v * ctx.n + u] = 1
            cur[cur_len] = j
            _visit(ctx, j + 1, m, eu, ev, f, deg, cur, cur_len + 1, best, st)
            deg[u] -= 1
            deg[v] -= 1
            ctx.mask[u * ctx.n + v] = 0
            ctx.mask[v * ctx.n + u] = 0


def verify_exhaustive(Context ctx, eu, ev, f):
    """Scan every subset of the candidate edges with induced degree <= f.

    Same subset order and return contract as the pure backend: (count,
    pairs_total, max_ratio, wp, wq, best_subset).
    """
    cdef int n = ctx.n
    cdef int m = len(eu)
    cdef int i
    cdef int *c_eu = <int *>malloc(max(1, m) * sizeof(int))
    cdef int *c_ev = <int *>malloc(max(1, m) * sizeof(int))
    cdef int *deg = <int *>malloc(max(1, n) * sizeof(int))
    cdef int *cur = <int *>malloc(max(1, m) * sizeof(int))
    cdef int *best = <int *>malloc(max(1, m) * sizeof(int))
    if (c_eu == NULL or c_ev == NULL or deg == NULL or cur == NULL
            or best == NULL):
        free(c_eu)
        free(c_ev)
        free(deg)
        free(cur)
        free(best)
        raise MemoryError()
    for i in range(m):
        c_eu[i] = eu[i]
        c_ev[i] = ev[i]
    for i in range(n):
        deg[i] = 0
    cdef BestState st
    st.count = 0
    st.pairs_total = 0
    st.ratio = 0.0
    st.wp = -1
    st.wq = -1
    st.best_len = 0
    _visit(ctx, 0, m, c_eu, c_ev, f, deg, cur, 0, best, &st)
    best_subset = tuple(best[i] for i in range(st.best_len))
    cdef double max_ratio = st.ratio
    if st.wp < 0:
        max_ratio = 1.0
    out = (st.count, st.pairs_total, max_ratio, st.wp, st.wq, best_subset)
    free(c_eu)
    free(c_ev)
    free(deg)
    free(cur)
    free(best)
    return out


cdef long _count_visit(int start, int m, int *eu, int *ev, int f, int *deg,
                       long total, long cap) noexcept:
    cdef int j, u, v
    total += 1
    if total >= cap:
        return total
    for j in range(start, m):
        u = eu[j]
        v = ev[j]
        if deg[u] < f and deg[v] < f:
            deg[u] += 1
            deg[v] += 1
            total = _count_visit(j + 1, m, eu, ev, f, deg, total, cap)
            deg[u] -= 1
            deg[v] -= 1
            if total >= cap:
                return total
    return total


def count_bounded_subsets(n, eu, ev, f, cap):
    """Count edge subsets with induced max degree <= f, stopping at cap."""
    cdef int m = len(eu)
    cdef int cn = n
    cdef int cf = f
    cdef long ccap = cap
    cdef int i
    cdef int *c_eu = <int *>malloc(max(1, m) * sizeof(int))
    cdef int *c_ev = <int *>malloc(max(1, m) * sizeof(int))
    cdef int *deg = <int *>malloc(max(1, cn) * sizeof(int))
    if c_eu == NULL or c_ev == NULL or deg == NULL:
        free(c_eu)
        free(c_ev)
        free(deg)
        raise MemoryError()
    for i in range(m):
        c_eu[i] = eu[i]
        c_ev[i] = ev[i]
    for i in range(cn):
        deg[i] = 0
    cdef long total = _count_visit(0, m, c_eu, c_ev, cf, deg, 0, ccap)
    free(c_eu)
    free(c_ev)
    free(deg)
    return total


cdef struct DisconnectState:
    long total
    long bad


cdef bint _complete_connected(int n, unsigned char *mask,
                              unsigned char *seen, int *queue) noexcept:
    cdef int i, u, v, head, tail, base
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


cdef void _disconnect_visit(int start, int m, int *eu, int *ev, int f,
                            int *deg, int n, unsigned char *mask,
                            unsigned char *seen, int *queue, long cap,
                            DisconnectState *st) noexcept:
    cdef int j, u, v
    st.total += 1
    if not _complete_connected(n, mask, seen, queue):
        st.bad += 1
    if st.total >= cap:
        return
    for j in range(start, m):
        u = eu[j]
        v = ev[j]
        if deg[u] < f and deg[v] < f:
            deg[u] += 1
            deg[v] += 1
            mask[u * n + v] = 1
            mask[v * n + u] = 1
            _disconnect_visit(j + 1, m, eu, ev, f, deg, n, mask, seen,
                              queue, cap, st)
            deg[u] -= 1
            deg[v] -= 1
            mask[u * n + v] = 0
            mask[v * n + u] = 0
            if st.total >= cap:
                return


def count_disconnecting(n, eu, ev, f, cap):
    """Over the same subset stream, count subsets whose removal disconnects
    the complete graph on n vertices. Returns (visited, disconnected)."""
    cdef int cn = n
    cdef int m = len(eu)
    cdef int cf = f
    cdef long ccap = cap
    cdef int i
    if cn == 0:
        return (0, 0)
    cdef int *c_eu = <int *>malloc(max(1, m) * sizeof(int))
    cdef int *c_ev = <int *>malloc(max(1, m) * sizeof(int))
    cdef int *deg = <int *>malloc(cn * sizeof(int))
    cdef unsigned char *mask = <unsigned char *>malloc(
        <long>cn * cn * sizeof(unsigned char))
    cdef unsigned char *seen = <unsigned char *>malloc(
        cn * sizeof(unsigned char))
    cdef int *queue = <int *>malloc(cn * sizeof(int))
    if (c_eu == NULL or c_ev == NULL or deg == NULL or mask == NULL
            or seen == NULL or queue == NULL):
        free(c_eu)
        free(c_ev)
        free(deg)
        free(mask)
        free(seen)
        free(queue)
        raise MemoryError()
    for i in range(m):
        c_eu[i] = eu[i]
        c_ev[i] = ev[i]
    for i in range(cn):
        deg[i] = 0
    cdef long j
    for j in range(<long>cn * cn):
        mask[j] = 0
    cdef DisconnectState st
    st.total = 0
    st.bad = 0
    _disconnect_visit(0, m, c_eu, c_ev, cf, deg, cn, mask, seen, queue,
                      ccap, &st)
    out = (st.total, st.bad)
    free(c_eu)
    free(c_ev)
    free(deg)
    free(mask)
    free(seen)
    free(queue)
    return out
