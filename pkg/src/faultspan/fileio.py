"""JSON and CSV readers/writers for points, metrics, graphs, fault sets,
decompositions, and reports.

Formats:
  points JSON   {"dim": d, "points": [[...], ...]}
  points CSV    one point per row, dim columns, no header
  metric JSON   n x n matrix (list of rows)
  graph JSON    {"n": n, "edges": [[u, v, w], ...]}
  faults JSON   {"f": f, "edges": [[u, v], ...]}
  WSPD JSON     {"c": c, "pairs": [{"A": [...], "B": [...]}, ...]}
Reports are emitted as JSON objects mirroring the dataclass fields.
"""

from __future__ import annotations

import csv
import json
import math
from pathlib import Path

from .errors import BadParams
from .faults import VerificationReport
from .graph import FaultSet, StretchReport, WeightedGraph
from .metric import EuclideanPoints, Metric, explicit_from_matrix
from .wspd import WSPD, WSPair


def _dump(obj, path) -> None:
    Path(path).write_text(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def save_points(points: EuclideanPoints, path, fmt: str = "json") -> None:
    if fmt == "json":
        _dump({"dim": points.dim, "points": points.coords.tolist()}, path)
    elif fmt == "csv":
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            for row in points.coords.tolist():
                writer.writerow(row)
    else:
        raise BadParams(f"unknown points format {fmt!r}")


def load_points(path) -> EuclideanPoints:
    path = Path(path)
    if path.suffix.lower() == ".csv":
        with open(path, newline="") as fh:
            rows = [[float(x) for x in row] for row in csv.reader(fh) if row]
        return EuclideanPoints.from_rows(rows)
    data = json.loads(path.read_text())
    return EuclideanPoints(int(data["dim"]), data["points"])


def save_explicit_metric(m: Metric, path) -> None:
    _dump(m.distance_matrix().tolist(), path)


def load_explicit_metric(path) -> Metric:
    return explicit_from_matrix(json.loads(Path(path).read_text()))


def save_graph(g: WeightedGraph, path) -> None:
    _dump({"n": g.n, "edges": [[u, v, w] for u, v, w in g.edge_list()]}, path)


def load_graph(path) -> WeightedGraph:
    data = json.loads(Path(path).read_text())
    return WeightedGraph(int(data["n"]),
                         [(int(u), int(v), float(w))
                          for u, v, w in data["edges"]])


def save_fault_set(fault: FaultSet, path) -> None:
    _dump({"f": fault.f, "edges": [list(e) for e in fault.sorted_edges()]},
          path)


def load_fault_set(path) -> FaultSet:
    data = json.loads(Path(path).read_text())
    return FaultSet([(int(u), int(v)) for u, v in data["edges"]],
                    int(data["f"]))


def save_wspd(w: WSPD, path) -> None:
    _dump({"c": w.c,
           "pairs": [{"A": sorted(p.a), "B": sorted(p.b)} for p in w.pairs]},
          path)


def load_wspd(path) -> WSPD:
    data = json.loads(Path(path).read_text())
    pairs = [WSPair(tuple(int(x) for x in p["A"]),
                    tuple(int(x) for x in p["B"]))
             for p in data["pairs"]]
    return WSPD(pairs, float(data["c"]))


def _json_ratio(x: float):
    return "inf" if math.isinf(x) else x


def stretch_report_to_dict(r: StretchReport) -> dict:
    return {
        "max_ratio": _json_ratio(r.max_ratio),
        "witness_pair": list(r.witness_pair) if r.witness_pair else None,
        "witness_fault": ({"f": r.witness_fault.f,
                           "edges": [list(e)
                                     for e in r.witness_fault.sorted_edges()]}
                          if r.witness_fault is not None else None),
        "pairs_checked": r.pairs_checked,
        "faults_checked": r.faults_checked,
        "mode": r.mode,
    }


def verification_report_to_dict(r: VerificationReport) -> dict:
    return {
        "claimed_t": r.claimed_t,
        "observed_max": stretch_report_to_dict(r.observed_max),
        "verdict": r.verdict,
        "coverage": r.coverage,
    }


def save_verification_report(r: VerificationReport, path) -> None:
    _dump(verification_report_to_dict(r), path)
