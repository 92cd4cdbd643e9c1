"""Fair split tree, well-separated pair decomposition, and the bipartite
spanner built from it.

A WSPD with separation ratio c partitions all point pairs into pairs of
sets (A_i, B_i) with |A_i B_i| >= c * max(diam A_i, diam B_i), each
unordered point pair covered exactly once. The spanner picks up to 2f+1
representatives per side and wires them completely, which keeps a short
detour alive under any fault set of maximum degree f.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .errors import (
    BadParams,
    DuplicatePoints,
    EpsOutOfRange,
    ValidationResult,
    Violation,
)
from .graph import WeightedGraph, canon_edge
from .metric import EuclideanPoints, euclidean_metric


@dataclass
class SplitTreeNode:
    points: tuple[int, ...]
    box_lo: np.ndarray
    box_hi: np.ndarray
    left: Optional["SplitTreeNode"] = None
    right: Optional["SplitTreeNode"] = None

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    @property
    def box_diameter(self) -> float:
        side = self.box_hi - self.box_lo
        return float(math.sqrt(float((side * side).sum())))


@dataclass
class SplitTree:
    root: SplitTreeNode
    points: EuclideanPoints

    def leaves(self) -> list[SplitTreeNode]:
        out = []
        stack = [self.root]
        while stack:
            node = stack.pop()
            if node.is_leaf:
                out.append(node)
            else:
                stack.append(node.right)
                stack.append(node.left)
        return out


@dataclass(frozen=True)
class WSPair:
    """One well-separated pair: two disjoint point-id sets."""

    a: tuple[int, ...]
    b: tuple[int, ...]


@dataclass
class WSPD:
    pairs: list[WSPair]
    c: float

    @property
    def size(self) -> int:
        return len(self.pairs)


def build_split_tree(pts: EuclideanPoints) -> SplitTree:
    """Fair split tree: recursively halve the tight bounding box
    perpendicular to its longest side, down to singleton leaves."""
    coords = pts.coords
    n = len(pts)
    if n < 1:
        raise BadParams("need at least one point")
    if len(np.unique(coords, axis=0)) != n:
        raise DuplicatePoints("points must be pairwise distinct")

    def build(ids: list[int]) -> SplitTreeNode:
        sub = coords[ids]
        lo = sub.min(axis=0)
        hi = sub.max(axis=0)
        if len(ids) == 1:
            return SplitTreeNode(tuple(ids), lo, hi)
        axis = int(np.argmax(hi - lo))
        mid = (lo[axis] + hi[axis]) / 2.0
        left_ids = [i for i in ids if coords[i, axis] <= mid]
        right_ids = [i for i in ids if coords[i, axis] > mid]
        if not left_ids or not right_ids:
            # Degenerate rounding (midpoint collapsed onto an endpoint):
            # fall back to a median split along the same axis.
            order = sorted(ids, key=lambda i: (coords[i, axis], i))
            half = len(order) // 2
            left_ids, right_ids = order[:half], order[half:]
        return SplitTreeNode(tuple(sorted(ids)), lo, hi,
                             build(left_ids), build(right_ids))

    return SplitTree(build(list(range(n))), pts)


def _box_distance(u: SplitTreeNode, v: SplitTreeNode) -> float:
    gap = np.maximum(0.0, np.maximum(u.box_lo - v.box_hi, v.box_lo - u.box_hi))
    return float(math.sqrt(float((gap * gap).sum())))


def compute_wspd(tree: SplitTree, c: float) -> WSPD:
    """Standard recursive pairing over the split tree.

    A candidate node pair is emitted once their boxes are well-separated
    (a conservative test: box separation implies point separation); else
    the node with the larger box diameter is split.
    """
    if not c > 0:
        raise BadParams(f"separation ratio must be positive, got {c}")
    pairs: list[WSPair] = []

    def find_ws(u: SplitTreeNode, v: SplitTreeNode):
        du = u.box_diameter
        dv = v.box_diameter
        if _box_distance(u, v) >= c * max(du, dv):
            pairs.append(WSPair(u.points, v.points))
            return
        if du >= dv:
            find_ws(u.left, v)
            find_ws(u.right, v)
        else:
            find_ws(u, v.left)
            find_ws(u, v.right)

    def find_pairs(node: SplitTreeNode):
        if node.is_leaf:
            return
        find_pairs(node.left)
        find_pairs(node.right)
        find_ws(node.left, node.right)

    find_pairs(tree.root)
    return WSPD(pairs, c)


def verify_wspd(w: WSPD, m) -> ValidationResult:
    """Exact checks of both WSPD invariants against a metric: separation
    of every pair (min cross distance vs max intra diameter) and
    exactly-once coverage of all unordered point pairs."""
    d = m.distance_matrix()
    n = m.n
    violations = []
    for idx, pair in enumerate(w.pairs):
        a = list(pair.a)
        b = list(pair.b)
        if set(a) & set(b):
            violations.append(Violation(
                "SeparationViolation", (idx,), "sides are not disjoint"))
            continue
        cross = d[np.ix_(a, b)]
        diam_a = d[np.ix_(a, a)].max() if len(a) > 1 else 0.0
        diam_b = d[np.ix_(b, b)].max() if len(b) > 1 else 0.0
        sep = cross.min()
        need = w.c * max(diam_a, diam_b)
        if sep < need:
            violations.append(Violation(
                "SeparationViolation", (idx,),
                f"|AB|={sep!r} < c*max(diam)={need!r}"))
    counts = np.zeros((n, n), dtype=np.int64)
    for pair in w.pairs:
        a = list(pair.a)
        b = list(pair.b)
        counts[np.ix_(a, b)] += 1
        counts[np.ix_(b, a)] += 1
    for i in range(n):
        for j in range(i + 1, n):
            if counts[i, j] != 1:
                violations.append(Violation(
                    "CoverageViolation", (i, j),
                    f"pair covered {counts[i, j]} times"))
    return ValidationResult(violations)


def _representatives(ids: tuple[int, ...], f: int) -> list[int]:
    # Smallest 2f+1 point ids, for determinism; any choice works.
    return sorted(ids)[: 2 * f + 1]


def _bipartite_edges(pairs: Iterable[WSPair], d, f: int):
    weights: dict[tuple[int, int], float] = {}
    for pair in pairs:
        for p in _representatives(pair.a, f):
            for q in _representatives(pair.b, f):
                key = canon_edge(p, q)
                if key not in weights:
                    weights[key] = float(d[key[0], key[1]])
    return [(u, v, w) for (u, v), w in sorted(weights.items())]


def wspd_spanner(pts: EuclideanPoints, f: int, eps: float) -> WeightedGraph:
    """Faulty-degree spanner from a WSPD with separation ratio c = 2+4/eps:
    all edges between up to 2f+1 representatives of each side of every
    pair. At most (2f+1)^2 * size edges; stretch at most 1+eps under any
    fault set of maximum degree f (f = 0 gives the classic WSPD spanner)."""
    if not eps > 0:
        raise EpsOutOfRange(f"eps must be positive, got {eps}")
    if f < 0:
        raise BadParams(f"f must be >= 0, got {f}")
    if len(pts) < 2:
        raise BadParams("need at least two points")
    metric = euclidean_metric(pts)
    wspd = compute_wspd(build_split_tree(pts), 2.0 + 4.0 / eps)
    edges = _bipartite_edges(wspd.pairs, metric.distance_matrix(), f)
    return WeightedGraph(len(pts), edges)


def wspd_spanner_from_pairs(metric, pairs, f: int) -> WeightedGraph:
    """Same construction over an externally supplied decomposition (for
    metrics where we do not build the split tree ourselves, e.g. unit-disk
    graph metrics)."""
    if f < 0:
        raise BadParams(f"f must be >= 0, got {f}")
    pair_list = list(pairs.pairs if isinstance(pairs, WSPD) else pairs)
    pair_list = [p if isinstance(p, WSPair) else WSPair(tuple(p[0]), tuple(p[1]))
                 for p in pair_list]
    edges = _bipartite_edges(pair_list, metric.distance_matrix(), f)
    return WeightedGraph(metric.n, edges)
