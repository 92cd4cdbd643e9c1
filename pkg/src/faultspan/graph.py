"""Weighted undirected graphs, degree-bounded fault sets, and the stretch
evaluator comparing a subgraph against the complete metric-induced host.

The central quantity is the worst ratio, over point pairs, of the
shortest-path distance in ``g`` minus a fault set to the shortest-path
distance in the complete host graph minus the same fault set. Unreachable
is represented by ``math.inf`` throughout.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Iterable, Optional

from ._kernels import get_backend
from .errors import FaultNotSubset

Edge = tuple[int, int]


def canon_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class WeightedGraph:
    """Immutable undirected graph with positive edge weights.

    Vertices are the point ids 0..n-1. No self-loops, no duplicate edges.
    """

    __slots__ = ("_n", "_w", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, float]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self._n = int(n)
        self._w: dict[Edge, float] = {}
        for u, v, w in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of vertex range [0,{n})")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            w = float(w)
            if not (w > 0.0) or math.isinf(w):
                raise ValueError(f"edge ({u},{v}) has non-positive weight {w}")
            key = canon_edge(u, v)
            if key in self._w:
                raise ValueError(f"duplicate edge {key}")
            self._w[key] = w
        self._adj = None

    @property
    def n(self) -> int:
        return self._n

    @property
    def num_edges(self) -> int:
        return len(self._w)

    def edge_list(self) -> list[tuple[int, int, float]]:
        """Edges as (u, v, weight) with u < v, sorted lexicographically."""
        return [(u, v, self._w[(u, v)]) for (u, v) in sorted(self._w)]

    def edge_pairs(self) -> list[Edge]:
        return sorted(self._w)

    def has_edge(self, u: int, v: int) -> bool:
        return canon_edge(u, v) in self._w

    def weight(self, u: int, v: int) -> float:
        return self._w[canon_edge(u, v)]

    def neighbors(self, u: int) -> list[tuple[int, float]]:
        if self._adj is None:
            adj: list[list[tuple[int, float]]] = [[] for _ in range(self._n)]
            for (a, b), w in self._w.items():
                adj[a].append((b, w))
                adj[b].append((a, w))
            for row in adj:
                row.sort()
            self._adj = adj
        return self._adj[u]

    def __contains__(self, pair) -> bool:
        u, v = pair
        return self.has_edge(u, v)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self._n == other._n and self._w == other._w

    def __hash__(self):
        return hash((self._n, frozenset(self._w.items())))

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self._n}, edges={self.num_edges})"


def max_fault_degree(edges: Iterable[Edge], n: Optional[int] = None) -> int:
    """Maximum, over vertices, of the number of incident edges in the set."""
    deg: dict[int, int] = {}
    for u, v in edges:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    return max(deg.values(), default=0)


@dataclass(frozen=True)
class FaultSet:
    """Edge subset whose induced maximum degree stays within the budget f."""

    edges: frozenset[Edge]
    f: int

    def __init__(self, edges: Iterable[Edge], f: int):
        canon = frozenset(canon_edge(u, v) for u, v in edges)
        if f < 0:
            raise ValueError("degree budget f must be >= 0")
        deg = max_fault_degree(canon)
        if deg > f:
            raise ValueError(
                f"fault set has maximum degree {deg}, exceeding budget {f}")
        object.__setattr__(self, "edges", canon)
        object.__setattr__(self, "f", f)

    @property
    def size(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


@dataclass
class StretchReport:
    """Worst observed stretch ratio with the witnesses that attain it."""

    max_ratio: float
    witness_pair: Optional[Edge]
    witness_fault: Optional[FaultSet]
    pairs_checked: int
    faults_checked: int
    mode: str


def complete_graph(m) -> WeightedGraph:
    """The complete graph on the metric's points, edge weights = distances."""
    d = m.distance_matrix()
    n = m.n
    edges = [(u, v, float(d[u, v])) for u in range(n) for v in range(u + 1, n)]
    return WeightedGraph(n, edges)


def _check_fault_subset(g: WeightedGraph, fault_edges) -> list[Edge]:
    pairs = []
    for u, v in fault_edges:
        key = canon_edge(u, v)
        if key not in g._w:
            raise FaultNotSubset(f"fault edge {key} is not an edge of the graph")
        pairs.append(key)
    return pairs


def shortest_path_dist(g: WeightedGraph, fault: FaultSet, u: int, v: int) -> float:
    """Exact shortest-path length in g with the fault edges masked.

    Returns math.inf when v is unreachable from u. Binary-heap Dijkstra.
    """
    banned = frozenset(_check_fault_subset(g, fault.edges))
    if u == v:
        return 0.0
    dist = {u: 0.0}
    heap = [(0.0, u)]
    done = set()
    while heap:
        du, x = heapq.heappop(heap)
        if x in done:
            continue
        if x == v:
            return du
        done.add(x)
        for y, w in g.neighbors(x):
            if canon_edge(x, y) in banned:
                continue
            nd = du + w
            if nd < dist.get(y, math.inf):
                dist[y] = nd
                heapq.heappush(heap, (nd, y))
    return math.inf


class StretchEvaluator:
    """Repeated stretch evaluations of one metric-weighted graph against
    its complete host, across many fault sets.

    Precomputes the kernel context (CSR adjacency plus the dense metric
    matrix) once; each evaluate() call costs one all-pairs pass per graph.
    """

    def __init__(self, g: WeightedGraph, metric, backend=None):
        if g.n != metric.n:
            raise ValueError(
                f"graph has {g.n} vertices but metric has {metric.n} points")
        self._impl = backend if backend is not None else get_backend()
        self._g = g
        self._metric = metric
        self._edges = g.edge_list()
        dmat = metric.distance_matrix()
        self._ctx = self._impl.make_context(g.n, self._edges,
                                            dmat.ravel().tolist())

    @property
    def graph(self) -> WeightedGraph:
        return self._g

    @property
    def metric(self):
        return self._metric

    def evaluate(self, fault_edges) -> tuple[float, Optional[Edge], int, int]:
        """Max ratio under one fault set.

        Returns (max_ratio, witness_pair, inf_pairs, pairs_checked); the
        witness is None when no pair is reachable in the host.
        """
        pairs = _check_fault_subset(self._g, fault_edges)
        fu = [p[0] for p in pairs]
        fv = [p[1] for p in pairs]
        ratio, wp, wq, inf_pairs, checked = self._impl.stretch_eval(
            self._ctx, fu, fv)
        witness = (wp, wq) if wp >= 0 else None
        return ratio, witness, inf_pairs, checked

    def exhaustive_scan(self, f: int):
        """Evaluate every subset of the graph's edges with max degree <= f.

        Returns (count, pairs_total, max_ratio, witness_pair, best_edges).
        """
        eu = [u for u, v, _w in self._edges]
        ev = [v for u, v, _w in self._edges]
        count, pairs_total, ratio, wp, wq, best_idx = (
            self._impl.verify_exhaustive(self._ctx, eu, ev, f))
        witness = (wp, wq) if wp >= 0 else None
        best_edges = [(eu[i], ev[i]) for i in best_idx]
        return count, pairs_total, ratio, witness, best_edges


def stretch(g: WeightedGraph, fault: FaultSet, m) -> tuple[float, Optional[Edge]]:
    """Worst ratio of g-minus-fault distances over host-minus-fault
    distances, over all point pairs; +inf when a pair is separated in g
    but not in the host. Returns (max_ratio, witness_pair)."""
    ratio, witness, _inf_pairs, _checked = StretchEvaluator(g, m).evaluate(
        fault.edges)
    return ratio, witness
