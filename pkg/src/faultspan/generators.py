"""Deterministic input generators for experiments and tests."""

from __future__ import annotations

import math

import numpy as np

from .errors import BadParams
from .graph import WeightedGraph
from .metric import EuclideanPoints, Metric, graph_closure_metric

KINDS = ("uniform", "clustered", "circle", "grid")


def generate_points(kind: str, n: int, dim: int, seed: int) -> EuclideanPoints:
    """Seeded point sets: uniform in [0,1]^dim, Gaussian clusters, the unit
    circle (dim=2 only), or an integer grid."""
    if n < 1 or dim < 1:
        raise BadParams(f"need n >= 1 and dim >= 1, got n={n}, dim={dim}")
    rng = np.random.default_rng(seed)
    if kind == "uniform":
        coords = rng.random((n, dim))
    elif kind == "clustered":
        k = max(1, round(math.sqrt(n)))
        centers = rng.random((k, dim))
        labels = rng.integers(0, k, size=n)
        coords = centers[labels] + rng.normal(scale=0.05, size=(n, dim))
    elif kind == "circle":
        if dim != 2:
            raise BadParams("circle generator requires dim=2")
        angles = 2.0 * math.pi * np.arange(n) / n
        coords = np.stack([np.cos(angles), np.sin(angles)], axis=1)
    elif kind == "grid":
        side = math.ceil(n ** (1.0 / dim))
        axes = np.meshgrid(*[np.arange(side)] * dim, indexing="ij")
        coords = np.stack([a.ravel() for a in axes], axis=1)[:n].astype(float)
    else:
        raise BadParams(f"unknown point kind {kind!r}; choose from {KINDS}")
    return EuclideanPoints(dim, coords)


def random_metric(n: int, seed: int) -> Metric:
    """Random non-Euclidean metric: the shortest-path closure of a complete
    graph with seeded weights in [0.5, 2.0]. Valid by construction."""
    if n < 2:
        raise BadParams(f"need n >= 2, got n={n}")
    rng = np.random.default_rng(seed)
    edges = [(u, v, float(rng.uniform(0.5, 2.0)))
             for u in range(n) for v in range(u + 1, n)]
    return graph_closure_metric(WeightedGraph(n, edges))
