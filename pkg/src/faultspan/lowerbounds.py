"""Tightness instances for the fortification bounds, evaluated in exact
rational arithmetic.

Two families: a four-point collinear instance whose two-edge matching
drives the f=1 stretch to exactly 3-eps, and a layered-cluster instance
(f >= 3) where faulting every edge inside the first cluster forces the
fortified graph to a detour of length exactly 2f while the host keeps the
direct edge of weight 1+eps, so the ratio is at least f.

All distances in these instances are sums of rationals; construction and
evaluation run on fractions.Fraction so the acceptance checks are
slack-free. Floating-point twins of the graphs and metric are also built
for use with the generic verification harness.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import EpsOutOfRange, FOutOfRange, ValidationResult, Violation
from .graph import FaultSet, WeightedGraph, canon_edge
from .metric import Metric, explicit_from_matrix

ExactEdges = dict[tuple[int, int], Fraction]


def _exact_sssp(n: int, edges: ExactEdges, src: int,
                banned: frozenset = frozenset()) -> list[Optional[Fraction]]:
    adj: list[list[tuple[int, Fraction]]] = [[] for _ in range(n)]
    for (u, v), w in edges.items():
        if (u, v) in banned:
            continue
        adj[u].append((v, w))
        adj[v].append((u, w))
    dist: list[Optional[Fraction]] = [None] * n
    dist[src] = Fraction(0)
    heap = [(Fraction(0), src)]
    done = [False] * n
    while heap:
        du, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        for v, w in adj[u]:
            nd = du + w
            if dist[v] is None or nd < dist[v]:
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    return dist


def _exact_apsp(n: int, edges: ExactEdges) -> list[list[Optional[Fraction]]]:
    dist: list[list[Optional[Fraction]]] = [[None] * n for _ in range(n)]
    for i in range(n):
        dist[i][i] = Fraction(0)
    for (u, v), w in edges.items():
        dist[u][v] = w
        dist[v][u] = w
    for k in range(n):
        row_k = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik is None:
                continue
            row_i = dist[i]
            for j in range(n):
                dkj = row_k[j]
                if dkj is None:
                    continue
                alt = dik + dkj
                if row_i[j] is None or alt < row_i[j]:
                    row_i[j] = alt
    return dist


def _exact_complete(closure: list[list[Fraction]]) -> ExactEdges:
    n = len(closure)
    return {(u, v): closure[u][v] for u in range(n) for v in range(u + 1, n)}


def _exact_fortify(n: int, closure: list[list[Fraction]],
                   base_edges: ExactEdges, f: int) -> ExactEdges:
    """Detour fortification with exact sums, so ties break by point id
    regardless of how small eps is."""
    out = dict(base_edges)
    take = max(0, min(2 * f - 1, n - 2))
    for a, b in sorted(base_edges):
        cands = sorted(
            (c for c in range(n) if c != a and c != b),
            key=lambda c: (closure[a][c] + closure[c][b], c))[:take]
        for c in cands:
            for x, y in ((a, c), (c, b)):
                key = canon_edge(x, y)
                if key not in out:
                    out[key] = closure[key[0]][key[1]]
    return out


def _float_graph(n: int, edges: ExactEdges) -> WeightedGraph:
    return WeightedGraph(
        n, [(u, v, float(w)) for (u, v), w in sorted(edges.items())])


@dataclass
class MatchingLBInstance:
    """Four collinear points whose fortified path, minus the two-edge
    matching {p,a},{b,q}, stretches the (p,q) pair to exactly 3-eps."""

    eps: Fraction
    eps_prime: Fraction
    points: tuple[Fraction, ...]
    metric: Metric
    g_prime: WeightedGraph
    fortified: WeightedGraph
    fault: FaultSet
    expected_ratio: Fraction
    spanner_dist: Fraction
    host_dist: Fraction
    ratio: Fraction


def matching_lb_instance(eps) -> MatchingLBInstance:
    """Build the f=1 tightness instance for any eps in (0, 1)."""
    eps = Fraction(eps)
    if not Fraction(0) < eps < Fraction(1):
        raise EpsOutOfRange(f"eps must lie in (0, 1), got {eps}")
    ep = eps / (4 - 2 * eps)
    coords = (Fraction(0), ep, 1 + ep, 1 + 2 * ep)
    n = 4
    closure = [[abs(coords[i] - coords[j]) for j in range(n)] for i in range(n)]
    base: ExactEdges = {(0, 1): closure[0][1], (1, 2): closure[1][2],
                        (2, 3): closure[2][3]}
    fortified_exact = _exact_fortify(n, closure, base, 1)
    fault_edges = [(0, 1), (2, 3)]
    banned = frozenset(fault_edges)

    spanner_dist = _exact_sssp(n, fortified_exact, 0, banned)[3]
    host_dist = _exact_sssp(n, _exact_complete(closure), 0, banned)[3]
    ratio = spanner_dist / host_dist

    metric = explicit_from_matrix(
        [[float(closure[i][j]) for j in range(n)] for i in range(n)])
    return MatchingLBInstance(
        eps=eps,
        eps_prime=ep,
        points=coords,
        metric=metric,
        g_prime=_float_graph(n, base),
        fortified=_float_graph(n, fortified_exact),
        fault=FaultSet(fault_edges, 1),
        expected_ratio=3 - eps,
        spanner_dist=spanner_dist,
        host_dist=host_dist,
        ratio=ratio,
    )


@dataclass
class GeneralLBInstance:
    """Layered-cluster instance showing the general fortification loses a
    factor of at least f: clusters B_1..B_f of 2f points each hang between
    consecutive hub points b_0..b_f, and the fault removes every fortified
    edge inside the hub set."""

    f: int
    eps: Fraction
    host: WeightedGraph
    metric: Metric
    g_prime: WeightedGraph
    fortified: WeightedGraph
    fault: FaultSet
    hubs: tuple[int, ...]
    clusters: tuple[tuple[int, ...], ...]
    spanner_dist: Fraction
    host_dist: Fraction
    ratio: Fraction
    # exact data reused by check_observations
    _host_exact: ExactEdges
    _g_prime_exact: ExactEdges
    _fortified_exact: ExactEdges
    _closure: list[list[Fraction]]


def general_lb_instance(f: int, eps) -> GeneralLBInstance:
    """Build the general tightness instance for f >= 3, eps in (0, 1/(f-2))."""
    if f < 3:
        raise FOutOfRange(f"f must be >= 3, got {f}")
    eps = Fraction(eps)
    if not Fraction(0) < eps < Fraction(1, f - 2):
        raise EpsOutOfRange(f"eps must lie in (0, 1/{f - 2}), got {eps}")

    hubs = tuple(range(f + 1))
    clusters = []
    next_id = f + 1
    for _ in range(f):
        clusters.append(tuple(range(next_id, next_id + 2 * f)))
        next_id += 2 * f
    n = next_id

    one = Fraction(1)
    host: ExactEdges = {}
    host[(0, f)] = 1 + eps
    host[(0, 1)] = one
    host[(f - 1, f)] = one
    for j in range(1, f - 1):
        host[(j, j + 1)] = eps
    for i in range(1, f + 1):
        block = clusters[i - 1]
        for a_idx in range(len(block)):
            for b_idx in range(a_idx + 1, len(block)):
                host[(block[a_idx], block[b_idx])] = eps
        for x in block:
            host[canon_edge(x, i - 1)] = one
            host[canon_edge(x, i)] = one

    closure = _exact_apsp(n, host)
    g_prime_exact = {e: w for e, w in host.items() if e != (0, f)}
    fortified_exact = _exact_fortify(n, closure, g_prime_exact, f)
    fault_edges = [e for e in fortified_exact if e[0] <= f and e[1] <= f]

    banned = frozenset(fault_edges)
    spanner_dist = _exact_sssp(n, fortified_exact, 0, banned)[f]
    host_dist = _exact_sssp(n, _exact_complete(closure), 0, banned)[f]
    ratio = spanner_dist / host_dist

    metric = explicit_from_matrix(
        [[float(closure[i][j]) for j in range(n)] for i in range(n)])
    return GeneralLBInstance(
        f=f,
        eps=eps,
        host=_float_graph(n, host),
        metric=metric,
        g_prime=_float_graph(n, g_prime_exact),
        fortified=_float_graph(n, fortified_exact),
        fault=FaultSet(fault_edges, f),
        hubs=hubs,
        clusters=tuple(clusters),
        spanner_dist=spanner_dist,
        host_dist=host_dist,
        ratio=ratio,
        _host_exact=host,
        _g_prime_exact=g_prime_exact,
        _fortified_exact=fortified_exact,
        _closure=closure,
    )


def check_observations(inst: GeneralLBInstance) -> ValidationResult:
    """Exact structural checks of the general instance:

    - host_edge_not_shortest: every host edge realizes the metric distance;
    - base_stretch_exceeded: the base graph is a 3-spanner of the metric;
    - extremes_adjacent: the fortified graph has no direct {b_0, b_f} edge;
    - cross_cluster_edge: the fortified graph never joins two different
      clusters directly.
    """
    violations = []
    n = len(inst._closure)
    closure = inst._closure

    for (u, v), w in sorted(inst._host_exact.items()):
        if closure[u][v] != w:
            violations.append(Violation(
                "host_edge_not_shortest", (u, v),
                f"edge weight {w} but shortest path {closure[u][v]}"))

    base_apsp = _exact_apsp(n, inst._g_prime_exact)
    for i in range(n):
        for j in range(i + 1, n):
            if base_apsp[i][j] is None or base_apsp[i][j] > 3 * closure[i][j]:
                violations.append(Violation(
                    "base_stretch_exceeded", (i, j),
                    f"base distance {base_apsp[i][j]} exceeds 3x metric "
                    f"{3 * closure[i][j]}"))

    if (0, inst.f) in inst._fortified_exact:
        violations.append(Violation(
            "extremes_adjacent", (0, inst.f),
            "fortified graph contains the direct hub-to-hub edge"))

    cluster_of = {}
    for ci, block in enumerate(inst.clusters):
        for x in block:
            cluster_of[x] = ci
    for u, v in sorted(inst._fortified_exact):
        cu = cluster_of.get(u)
        cv = cluster_of.get(v)
        if cu is not None and cv is not None and cu != cv:
            violations.append(Violation(
                "cross_cluster_edge", (u, v),
                f"edge joins cluster {cu} and cluster {cv}"))

    return ValidationResult(violations)
