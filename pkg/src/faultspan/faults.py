"""Fault-set generation (exhaustive, sampled, adversarial) and the
end-to-end verification harness for claimed faulty-degree stretch bounds.

Exhaustive modes visit every edge subset of induced maximum degree <= f
exactly once and are the empirical oracle; they are gated behind a size
guard because the quantifier is exponential. Sampled and adversarial modes
report their coverage honestly and never claim proof.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from ._kernels import get_backend
from .errors import BadParams
from .graph import (
    FaultSet,
    StretchEvaluator,
    StretchReport,
    WeightedGraph,
)

PASS_RTOL = 1e-9
EXHAUSTIVE_EDGE_LIMIT = 24       # guard for general f
MATCHING_COUNT_LIMIT = 10 ** 7   # guard for f == 1


@dataclass(frozen=True)
class FaultEnumeration:
    """How to roam the space of fault sets.

    mode: 'exhaustive' | 'matchings' | 'sampled' | 'adversarial'.
    budget: samples to draw (sampled) or ascent rounds (adversarial).
    force_exhaustive overrides the instance-size guard.
    """

    mode: str
    budget: int = 10_000
    seed: int = 0
    force_exhaustive: bool = False


@dataclass
class VerificationReport:
    claimed_t: float
    observed_max: StretchReport
    verdict: str      # 'pass' | 'fail'
    coverage: str     # 'exact' | 'sampled'

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


def enumerate_fault_sets(g: WeightedGraph, f: int) -> Iterator[FaultSet]:
    """Yield every F subseteq E(g) with induced max degree <= f exactly
    once (the empty set first, then lexicographic on sorted edge-index
    tuples), by backtracking with per-endpoint degree pruning."""
    if f < 0:
        raise BadParams(f"f must be >= 0, got {f}")
    edges = g.edge_pairs()
    m = len(edges)
    deg = [0] * g.n
    cur: list[tuple[int, int]] = []

    def rec(start: int) -> Iterator[FaultSet]:
        yield FaultSet(cur, f)
        for j in range(start, m):
            u, v = edges[j]
            if deg[u] < f and deg[v] < f:
                deg[u] += 1
                deg[v] += 1
                cur.append(edges[j])
                yield from rec(j + 1)
                cur.pop()
                deg[u] -= 1
                deg[v] -= 1

    return rec(0)


def enumerate_matchings(g: WeightedGraph) -> Iterator[FaultSet]:
    """The degree-1 fault sets are exactly the matchings of g."""
    return enumerate_fault_sets(g, 1)


def sample_fault_set(g: WeightedGraph, f: int, seed: int) -> FaultSet:
    """Random greedy fault set: shuffle the edges with the seeded RNG and
    add each edge both of whose endpoint budgets allow it. The result is
    maximal with respect to the shuffle order and deterministic per seed."""
    if f < 0:
        raise BadParams(f"f must be >= 0, got {f}")
    edges = g.edge_pairs()
    random.Random(seed).shuffle(edges)
    deg = [0] * g.n
    picked = []
    for u, v in edges:
        if deg[u] < f and deg[v] < f:
            deg[u] += 1
            deg[v] += 1
            picked.append((u, v))
    return FaultSet(picked, f)


def _adversarial(evaluator: StretchEvaluator, f: int, rounds: int):
    """Greedy ascent; returns (fault_edges, ratio, witness, evals, pairs)."""
    g = evaluator.graph
    edges = g.edge_pairs()
    deg = [0] * g.n
    current: list[tuple[int, int]] = []
    ratio, witness, _inf, pairs_total = evaluator.evaluate(current)
    evals = 1
    for _ in range(rounds):
        best_edge = None
        best_ratio = ratio
        best_witness = witness
        for u, v in edges:
            if (u, v) in current or deg[u] >= f or deg[v] >= f:
                continue
            cand_ratio, cand_witness, _i, pairs = evaluator.evaluate(
                current + [(u, v)])
            evals += 1
            pairs_total += pairs
            if cand_ratio > best_ratio:
                best_ratio = cand_ratio
                best_edge = (u, v)
                best_witness = cand_witness
        if best_edge is None:
            break
        current.append(best_edge)
        deg[best_edge[0]] += 1
        deg[best_edge[1]] += 1
        ratio = best_ratio
        witness = best_witness
    return current, ratio, witness, evals, pairs_total


def adversarial_fault_set(g: WeightedGraph, f: int, m, rounds: int) -> FaultSet:
    """Heuristic attacker: starting from the empty set, repeatedly add the
    budget-respecting edge that maximizes the current stretch; stop at a
    local maximum or after the given number of rounds."""
    if f < 0:
        raise BadParams(f"f must be >= 0, got {f}")
    current = _adversarial(StretchEvaluator(g, m), f, rounds)[0]
    return FaultSet(current, f)


def exhaustive_within_guard(g: WeightedGraph, f: int, backend=None) -> bool:
    """Whether exhaustive enumeration is allowed by the default size guard:
    f=1 requires the matching count to stay within 10^7; general f requires
    at most 24 edges. f=0 enumerates only the empty set and always passes."""
    if f == 0:
        return True
    if f == 1:
        impl = backend if backend is not None else get_backend()
        eu = [u for u, _v in g.edge_pairs()]
        ev = [v for _u, v in g.edge_pairs()]
        count = impl.count_bounded_subsets(
            g.n, eu, ev, 1, MATCHING_COUNT_LIMIT + 1)
        return count <= MATCHING_COUNT_LIMIT
    return g.num_edges <= EXHAUSTIVE_EDGE_LIMIT


def verify_faulty_degree_spanner(g: WeightedGraph, m, f: int,
                                 claimed_t: float,
                                 enumeration: FaultEnumeration
                                 ) -> VerificationReport:
    """Maximize stretch(g, F, m) over the requested fault-set enumeration
    and compare against claimed_t (with 1e-9 relative pass slack)."""
    evaluator = StretchEvaluator(g, m)
    mode = enumeration.mode

    if mode in ("exhaustive", "matchings"):
        eff_f = 1 if mode == "matchings" else f
        if not enumeration.force_exhaustive and not exhaustive_within_guard(g, eff_f):
            raise BadParams(
                f"instance too large for exhaustive enumeration "
                f"(edges={g.num_edges}, f={eff_f}); use sampled/adversarial "
                f"modes or force_exhaustive")
        count, pairs_total, ratio, witness, best_edges = (
            evaluator.exhaustive_scan(eff_f))
        report = StretchReport(ratio, witness, FaultSet(best_edges, eff_f),
                               pairs_total, count, "exhaustive")
        coverage = "exact"
    elif mode == "sampled":
        best_ratio, best_witness, _inf, pairs = evaluator.evaluate([])
        best_fault = FaultSet([], f)
        pairs_total = pairs
        for i in range(enumeration.budget):
            fault = sample_fault_set(g, f, enumeration.seed + i)
            ratio, witness, _inf, pairs = evaluator.evaluate(fault.edges)
            pairs_total += pairs
            if ratio > best_ratio:
                best_ratio = ratio
                best_witness = witness
                best_fault = fault
        report = StretchReport(best_ratio, best_witness, best_fault,
                               pairs_total, enumeration.budget + 1, "sampled")
        coverage = "sampled"
    elif mode == "adversarial":
        edges, ratio, witness, evals, pairs_total = _adversarial(
            evaluator, f, enumeration.budget)
        report = StretchReport(ratio, witness, FaultSet(edges, f),
                               pairs_total, evals, "sampled")
        coverage = "sampled"
    else:
        raise BadParams(f"unknown enumeration mode {mode!r}")

    verdict = ("pass" if report.max_ratio <= claimed_t * (1.0 + PASS_RTOL)
               else "fail")
    return VerificationReport(float(claimed_t), report, verdict, coverage)
