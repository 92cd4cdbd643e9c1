"""Finite metric spaces: explicit matrices, Euclidean point sets, and
shortest-path closures of weighted graphs.

Points are dense integer ids 0..n-1 assigned in input order. Every
constructed Metric satisfies the metric axioms; the triangle inequality is
accepted up to a 1e-9 relative slack to absorb floating-point roundoff in
Euclidean and closure distances (larger violations are hard errors).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import (
    BadParams,
    DimensionMismatch,
    Disconnected,
    DuplicatePoints,
    IdentityViolation,
    NegativeDistance,
    NonSymmetric,
    NonzeroDiagonal,
    TriangleViolation,
    ValidationResult,
    Violation,
)
from .graph import WeightedGraph

TRIANGLE_RTOL = 1e-9


@dataclass(frozen=True)
class EuclideanPoints:
    """A point set in R^dim; coords has one row of dim coordinates per point."""

    dim: int
    coords: np.ndarray

    def __post_init__(self):
        coords = np.asarray(self.coords, dtype=np.float64)
        if self.dim < 1:
            raise DimensionMismatch(f"dim must be positive, got {self.dim}")
        if coords.ndim != 2 or coords.shape[1] != self.dim:
            raise DimensionMismatch(
                f"expected coordinate rows of length {self.dim}, "
                f"got array of shape {coords.shape}")
        if not np.all(np.isfinite(coords)):
            raise BadParams("coordinates must be finite")
        coords = coords.copy()
        coords.flags.writeable = False
        object.__setattr__(self, "coords", coords)

    @classmethod
    def from_rows(cls, rows) -> "EuclideanPoints":
        lengths = {len(r) for r in rows}
        if len(lengths) > 1:
            raise DimensionMismatch(
                f"rows have inconsistent lengths {sorted(lengths)}")
        if not rows:
            raise DimensionMismatch("empty point list")
        dim = lengths.pop()
        return cls(dim, np.asarray(rows, dtype=np.float64).reshape(len(rows), dim))

    def __len__(self) -> int:
        return self.coords.shape[0]


def _pairwise_distances(coords: np.ndarray) -> np.ndarray:
    diff = coords[:, None, :] - coords[None, :, :]
    return np.sqrt((diff * diff).sum(axis=-1))


class Metric:
    """Symmetric finite distance oracle over n point ids.

    kind is one of 'explicit', 'euclidean', 'graph_closure'. Immutable
    after construction; concurrent reads are safe.
    """

    __slots__ = ("_dmat", "_kind", "_points")

    def __init__(self, dmat: np.ndarray, kind: str,
                 points: Optional[EuclideanPoints] = None):
        dmat = np.array(dmat, dtype=np.float64, order="C", copy=True)
        dmat.flags.writeable = False
        self._dmat = dmat
        self._kind = kind
        self._points = points

    @property
    def n(self) -> int:
        return self._dmat.shape[0]

    @property
    def kind(self) -> str:
        return self._kind

    @property
    def points(self) -> Optional[EuclideanPoints]:
        return self._points

    def dist(self, p: int, q: int) -> float:
        return float(self._dmat[p, q])

    def distance_matrix(self) -> np.ndarray:
        """The full n-by-n distance matrix (read-only view)."""
        return self._dmat

    def __repr__(self) -> str:
        return f"Metric(n={self.n}, kind={self._kind!r})"


def _first_violation(d: np.ndarray) -> Optional[Violation]:
    """First metric-axiom violation in check order: symmetry, identity,
    positivity/negativity, then all n^3 triangle inequalities."""
    n = d.shape[0]
    asym = np.argwhere(d != d.T)
    if len(asym):
        i, j = (int(x) for x in asym[0])
        return Violation("NonSymmetric", (i, j),
                         f"d({i},{j})={d[i, j]!r} but d({j},{i})={d[j, i]!r}")
    diag = np.diagonal(d)
    nz = np.nonzero(diag)[0]
    if len(nz):
        i = int(nz[0])
        return Violation("NonzeroDiagonal", (i,), f"d({i},{i})={d[i, i]!r}")
    neg = np.argwhere(d < 0)
    if len(neg):
        i, j = (int(x) for x in neg[0])
        return Violation("NegativeDistance", (i, j), f"d({i},{j})={d[i, j]!r}")
    offdiag_zero = np.argwhere((d == 0) & ~np.eye(n, dtype=bool))
    if len(offdiag_zero):
        i, j = (int(x) for x in offdiag_zero[0])
        return Violation("IdentityViolation", (i, j),
                         f"d({i},{j})=0 for distinct points")
    # Vectorized scan first; locate the lexicographically first triple only
    # when a violation exists.
    best = d.copy()
    for k in range(n):
        np.minimum(best, d[:, k][:, None] + d[k, :][None, :], out=best)
    if np.any(d > best * (1.0 + TRIANGLE_RTOL)):
        for i in range(n):
            for j in range(i + 1, n):
                dij = d[i, j]
                for k in range(n):
                    if k == i or k == j:
                        continue
                    via = d[i, k] + d[k, j]
                    if dij > via * (1.0 + TRIANGLE_RTOL):
                        return Violation(
                            "TriangleViolation", (i, j, k),
                            f"d({i},{j})={dij!r} > d({i},{k})+d({k},{j})={via!r}")
    return None


_VIOLATION_EXC = {
    "NonSymmetric": NonSymmetric,
    "NonzeroDiagonal": NonzeroDiagonal,
    "NegativeDistance": NegativeDistance,
    "IdentityViolation": IdentityViolation,
    "TriangleViolation": TriangleViolation,
}


def verify_metric(m: Metric) -> ValidationResult:
    """Check symmetry, identity, positivity, and all triangle inequalities
    (with the 1e-9 relative slack); the result carries the first violation."""
    v = _first_violation(m.distance_matrix())
    return ValidationResult([v] if v is not None else [])


def explicit_from_matrix(matrix) -> Metric:
    """Metric from an explicit n-by-n distance matrix; fully validated."""
    d = np.asarray(matrix, dtype=np.float64)
    if d.ndim != 2 or d.shape[0] != d.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {d.shape}")
    if not np.all(np.isfinite(d)):
        raise BadParams("distance matrix entries must be finite")
    v = _first_violation(d)
    if v is not None:
        raise _VIOLATION_EXC[v.kind](str(v))
    return Metric(d, "explicit")


def euclidean_metric(points: EuclideanPoints) -> Metric:
    """Metric of pairwise Euclidean distances. Rejects duplicate points
    (they would break the positivity axiom)."""
    if len(points) < 1:
        raise BadParams("need at least one point")
    d = _pairwise_distances(points.coords)
    dup = np.argwhere((d == 0) & ~np.eye(len(points), dtype=bool))
    if len(dup):
        i, j = (int(x) for x in dup[0])
        raise DuplicatePoints(f"points {i} and {j} coincide")
    return Metric(d, "euclidean", points)


def graph_closure_metric(g: WeightedGraph) -> Metric:
    """Metric of all-pairs shortest-path distances of a connected graph."""
    n = g.n
    d = np.full((n, n), np.inf)
    np.fill_diagonal(d, 0.0)
    for u, v, w in g.edge_list():
        d[u, v] = w
        d[v, u] = w
    for k in range(n):
        np.minimum(d, d[:, k][:, None] + d[k, :][None, :], out=d)
    unreachable = np.argwhere(np.isinf(d))
    if len(unreachable):
        i, j = (int(x) for x in unreachable[0])
        raise Disconnected(f"no path between points {i} and {j}")
    return Metric(d, "graph_closure")


def unit_disk_graph(points: EuclideanPoints) -> WeightedGraph:
    """Edges between all point pairs at Euclidean distance <= 1 (boundary
    included), weighted by that distance."""
    d = _pairwise_distances(points.coords)
    n = len(points)
    edges = [(u, v, float(d[u, v]))
             for u in range(n) for v in range(u + 1, n) if d[u, v] <= 1.0]
    return WeightedGraph(n, edges)
