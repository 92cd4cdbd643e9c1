"""Planar cone covers and the degree-fault-hardened Yao and Theta graphs.

Both graphs connect every point, in every cone of angular width <= theta,
to its 2f+1 best targets inside that cone: nearest by Euclidean distance
(Yao) or nearest by projection onto the cone's reference ray (Theta).
With 0 < theta < pi/4 either graph keeps stretch 1/(cos theta - sin theta)
under every fault set of maximum degree f.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BadParams, DimensionMismatch, EpsOutOfRange, ThetaOutOfRange
from .graph import WeightedGraph, canon_edge
from .metric import EuclideanPoints, euclidean_metric

TWO_PI = 2.0 * math.pi
# Relative slack when counting sectors, so that e.g. theta = pi/6 yields
# exactly ceil(2*pi / theta) = 12 despite roundoff in the quotient.
_CEIL_SLACK = 1e-9


@dataclass(frozen=True)
class ConeRay:
    """Reference ray of one cone: its index and direction angle (radians)."""

    cone: int
    direction: float


@dataclass(frozen=True)
class ConeCover:
    """k = ceil(2*pi/theta) equal half-open sectors covering the plane.

    Sector i spans [i*width, (i+1)*width); its reference ray is the
    bisector. Points exactly on a boundary belong to the sector whose
    start angle they match; near-boundary classification is deterministic
    up to floating-point rounding of the angle.
    """

    theta: float
    k: int
    width: float

    def start(self, i: int) -> float:
        return i * self.width

    def bisector(self, i: int) -> float:
        return (i + 0.5) * self.width

    @property
    def rays(self) -> list[ConeRay]:
        return [ConeRay(i, self.bisector(i)) for i in range(self.k)]

    def sector_index(self, angle: float) -> int:
        """Sector containing a direction given as an angle in [0, 2*pi)."""
        idx = int(angle // self.width)
        if idx >= self.k:
            idx = self.k - 1
        elif idx < 0:
            idx = 0
        return idx


def cone_cover_2d(theta: float) -> ConeCover:
    """Cover of the plane by equal sectors of width 2*pi/k <= theta."""
    if not 0.0 < theta < math.pi / 4.0:
        raise ThetaOutOfRange(
            f"theta must lie strictly inside (0, pi/4), got {theta}")
    k = int(math.ceil(TWO_PI / theta - _CEIL_SLACK))
    return ConeCover(theta, k, TWO_PI / k)


def theta_for_eps(eps: float) -> float:
    """Largest cone angle theta < pi/4 whose stretch bound
    1/(cos theta - sin theta) stays within 1+eps.

    Closed form: cos theta - sin theta = sqrt(2) * cos(theta + pi/4), so
    theta = arccos(1 / (sqrt(2) * (1 + eps))) - pi/4.
    """
    if not eps > 0:
        raise EpsOutOfRange(f"eps must be positive, got {eps}")
    theta = math.acos(1.0 / (math.sqrt(2.0) * (1.0 + eps))) - math.pi / 4.0
    return min(theta, math.pi / 4.0 - 1e-12)


def _normalized_angle(dy: float, dx: float) -> float:
    a = math.atan2(dy, dx)
    if a < 0.0:
        a += TWO_PI
    return a


def _cone_graph(pts: EuclideanPoints, theta: float, f: int, by_projection: bool
                ) -> WeightedGraph:
    if pts.dim != 2:
        raise DimensionMismatch(
            f"cone spanners are implemented for dim=2, got dim={pts.dim}")
    if f < 0:
        raise BadParams(f"f must be >= 0, got {f}")
    cover = cone_cover_2d(theta)
    metric = euclidean_metric(pts)  # also rejects duplicate points
    d = metric.distance_matrix()
    coords = pts.coords
    n = len(pts)
    limit = 2 * f + 1
    weights: dict[tuple[int, int], float] = {}
    for p in range(n):
        buckets: dict[int, list[tuple[float, int]]] = {}
        for q in range(n):
            if q == p:
                continue
            dx = float(coords[q, 0] - coords[p, 0])
            dy = float(coords[q, 1] - coords[p, 1])
            cone = cover.sector_index(_normalized_angle(dy, dx))
            if by_projection:
                phi = cover.bisector(cone)
                rank = dx * math.cos(phi) + dy * math.sin(phi)
            else:
                rank = float(d[p, q])
            buckets.setdefault(cone, []).append((rank, q))
        for ranked in buckets.values():
            ranked.sort()
            for _rank, q in ranked[:limit]:
                key = canon_edge(p, q)
                if key not in weights:
                    weights[key] = float(d[key[0], key[1]])
    return WeightedGraph(n, [(u, v, w) for (u, v), w in sorted(weights.items())])


def yao_graph(pts: EuclideanPoints, theta: float, f: int) -> WeightedGraph:
    """Yao graph variant: per point and cone, edges to the min(2f+1, .)
    points of the cone nearest in Euclidean distance (ties by point id)."""
    return _cone_graph(pts, theta, f, by_projection=False)


def theta_graph(pts: EuclideanPoints, theta: float, f: int) -> WeightedGraph:
    """Theta graph variant: like yao_graph, but candidates are ranked by
    the length of their orthogonal projection onto the cone's bisector ray
    (ties by point id)."""
    return _cone_graph(pts, theta, f, by_projection=True)
