"""Detour fortification for arbitrary metric spanners, plus the greedy
baseline spanner.

Fortification takes any t-spanner G' and, for every edge {a,b}, wires a and
b to the 2f-1 points c with the smallest detour sums |ac|+|cb|. The result
tolerates any fault set of maximum degree f at the cost of a constant-factor
stretch blowup (3t when f=1, (8f+2)t in general) and at most (4f-1) times
the edges.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

from .errors import FOutOfRange
from .graph import WeightedGraph, canon_edge


@dataclass(frozen=True)
class DetourSet:
    """For an edge {a,b}: the candidate relay points, ordered by
    non-decreasing detour sum |ac|+|cb| with point-id tie-break."""

    edge: tuple[int, int]
    candidates: tuple[int, ...]


def _bounded_graph_dist(adj, src: int, dst: int, bound: float) -> float:
    """Dijkstra distance from src to dst, abandoning paths longer than bound."""
    dist = {src: 0.0}
    heap = [(0.0, src)]
    while heap:
        du, u = heapq.heappop(heap)
        if du > dist.get(u, math.inf):
            continue
        if u == dst:
            return du
        for v, w in adj[u]:
            nd = du + w
            if nd <= bound and nd < dist.get(v, math.inf):
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    return dist.get(dst, math.inf)


def greedy_spanner(m, t: float) -> WeightedGraph:
    """Greedy t-spanner: scan pairs by non-decreasing distance (ties by
    (min id, max id)) and keep a pair iff the graph built so far stretches
    it by more than t."""
    if t < 1:
        raise ValueError(f"stretch parameter t must be >= 1, got {t}")
    n = m.n
    d = m.distance_matrix()
    pairs = sorted(
        (float(d[u, v]), u, v) for u in range(n) for v in range(u + 1, n))
    adj: list[list[tuple[int, float]]] = [[] for _ in range(n)]
    edges = []
    for w, u, v in pairs:
        bound = t * w
        if _bounded_graph_dist(adj, u, v, bound) > bound:
            edges.append((u, v, w))
            adj[u].append((v, w))
            adj[v].append((u, w))
    return WeightedGraph(n, edges)


def detour_candidates(m, a: int, b: int, f: int) -> DetourSet:
    """The first min(2f-1, n-2) points of S minus {a,b}, sorted by
    (detour sum, point id)."""
    if a == b:
        raise ValueError("endpoints must be distinct")
    d = m.distance_matrix()
    take = max(0, min(2 * f - 1, m.n - 2))
    order = sorted(
        (c for c in range(m.n) if c != a and c != b),
        key=lambda c: (d[a, c] + d[c, b], c))
    return DetourSet(canon_edge(a, b), tuple(order[:take]))


def fortify(m, g_prime: WeightedGraph, f: int) -> WeightedGraph:
    """Add, for each edge {a,b} of g_prime, the star edges {a,c} and {c,b}
    over the detour candidates of {a,b}. At most (4f-1) * |E'| edges."""
    n = m.n
    if not 1 <= f <= (n - 1) / 2:
        raise FOutOfRange(
            f"f must satisfy 1 <= f <= (n-1)/2 = {(n - 1) / 2}, got {f}")
    if g_prime.n != n:
        raise ValueError("g_prime must be defined on the metric's points")
    d = m.distance_matrix()
    weights = {canon_edge(u, v): w for u, v, w in g_prime.edge_list()}
    for a, b, _w in g_prime.edge_list():
        for c in detour_candidates(m, a, b, f).candidates:
            for x, y in ((a, c), (c, b)):
                key = canon_edge(x, y)
                if key not in weights:
                    weights[key] = float(d[x, y])
    return WeightedGraph(n, [(u, v, w) for (u, v), w in sorted(weights.items())])
