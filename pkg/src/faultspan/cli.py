"""Command-line front end: generate inputs, build spanners, verify claimed
stretch bounds, emit the tightness instances, and run benchmark tables.

Exit codes: 0 all requested checks pass, 1 a verification failed, 2 usage
or parameter error, 3 internal error. Data goes to --out (or stdout);
progress and log lines go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import fileio
from ._kernels import active_implementation
from .cones import theta_for_eps, theta_graph, yao_graph
from .errors import BadParams, FaultspanError
from .faults import FaultEnumeration, verify_faulty_degree_spanner
from .generators import KINDS, generate_points
from .lowerbounds import (
    check_observations,
    general_lb_instance,
    matching_lb_instance,
)
from .metric import euclidean_metric, graph_closure_metric
from .spanners import fortify, greedy_spanner
from .wspd import wspd_spanner

DEFAULT_SEED = 1729


def _log(msg: str) -> None:
    print(msg, file=sys.stderr)


def _emit_text(text: str, out) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _emit_json(obj, out) -> None:
    _emit_text(json.dumps(obj, indent=2, sort_keys=True) + "\n", out)


def _load_metric(args):
    if getattr(args, "points", None):
        return euclidean_metric(fileio.load_points(args.points))
    if getattr(args, "metric", None):
        return fileio.load_explicit_metric(args.metric)
    if getattr(args, "metric_graph", None):
        return graph_closure_metric(fileio.load_graph(args.metric_graph))
    raise BadParams("provide a metric via --points, --metric, or --metric-graph")


def cmd_gen(args) -> int:
    points = generate_points(args.kind, args.n, args.dim, args.seed)
    if args.out:
        fileio.save_points(points, args.out, args.format)
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        for row in points.coords.tolist():
            writer.writerow(row)
        sys.stdout.write(buf.getvalue())
    else:
        _emit_json({"dim": points.dim, "points": points.coords.tolist()}, None)
    _log(f"gen: {args.kind} n={args.n} dim={args.dim} seed={args.seed}")
    return 0


def _build_graph(args, metric, points):
    method = args.method
    if method == "greedy":
        return greedy_spanner(metric, args.t)
    if method == "fortify":
        if args.base != "greedy":
            raise BadParams(f"unknown base spanner {args.base!r}")
        return fortify(metric, greedy_spanner(metric, args.t), args.f)
    if points is None:
        raise BadParams(f"method {method!r} requires --points input")
    if method == "wspd":
        if args.eps is None:
            raise BadParams("wspd requires --eps")
        return wspd_spanner(points, args.f, args.eps)
    if method in ("yao", "theta"):
        if (args.theta is None) == (args.eps is None):
            raise BadParams(f"{method} requires exactly one of --theta/--eps")
        theta = args.theta if args.theta is not None else theta_for_eps(args.eps)
        builder = yao_graph if method == "yao" else theta_graph
        return builder(points, theta, args.f)
    raise BadParams(f"unknown method {method!r}")


def cmd_build(args) -> int:
    points = fileio.load_points(args.points) if args.points else None
    metric = (euclidean_metric(points) if points is not None
              else _load_metric(args))
    g = _build_graph(args, metric, points)
    if args.out:
        fileio.save_graph(g, args.out)
    else:
        _emit_json({"n": g.n, "edges": [[u, v, w] for u, v, w in g.edge_list()]},
                   None)
    _log(f"build: method={args.method} n={g.n} edges={g.num_edges}")
    return 0


def _parse_mode(text: str) -> FaultEnumeration:
    name, _, arg = text.partition(":")
    if name in ("exhaustive", "matchings"):
        return FaultEnumeration(name)
    if name == "sample":
        return FaultEnumeration("sampled", budget=int(arg) if arg else 10_000)
    if name == "adversarial":
        return FaultEnumeration("adversarial", budget=int(arg) if arg else 16)
    raise BadParams(f"unknown mode {text!r}")


def cmd_verify(args) -> int:
    g = fileio.load_graph(args.graph)
    metric = _load_metric(args)
    enumeration = _parse_mode(args.mode)
    enumeration = FaultEnumeration(enumeration.mode, enumeration.budget,
                                   args.seed, args.force_exhaustive)
    report = verify_faulty_degree_spanner(g, metric, args.f, args.t,
                                          enumeration)
    _emit_json(fileio.verification_report_to_dict(report), args.out)
    _log(f"verify: mode={enumeration.mode} observed="
         f"{report.observed_max.max_ratio:.9g} claimed={args.t} "
         f"verdict={report.verdict}")
    return 0 if report.passed else 1


def _frac_str(x: Fraction) -> str:
    return str(x)


def cmd_lowerbound(args) -> int:
    if args.which == "matching":
        if args.eps is None:
            raise BadParams("matching lower bound requires --eps")
        inst = matching_lb_instance(args.eps)
        tight = inst.ratio == inst.expected_ratio
        _emit_json({
            "which": "matching",
            "eps": _frac_str(inst.eps),
            "eps_prime": _frac_str(inst.eps_prime),
            "points": [_frac_str(c) for c in inst.points],
            "fortified_edges": [list(e) for e in
                                sorted((u, v) for u, v, _ in
                                       inst.fortified.edge_list())],
            "fault": [list(e) for e in inst.fault.sorted_edges()],
            "spanner_dist": _frac_str(inst.spanner_dist),
            "host_dist": _frac_str(inst.host_dist),
            "ratio": _frac_str(inst.ratio),
            "expected_ratio": _frac_str(inst.expected_ratio),
            "tight": tight,
            "arithmetic": "exact-rational",
        }, args.out)
        _log(f"lowerbound matching: ratio={inst.ratio} "
             f"expected={inst.expected_ratio} tight={tight}")
        return 0 if tight else 1
    if args.which == "general":
        if args.f is None:
            raise BadParams("general lower bound requires --f")
        eps = args.eps if args.eps is not None else Fraction(1, 25 * (args.f - 2))
        inst = general_lb_instance(args.f, eps)
        obs = check_observations(inst)
        ok = (inst.spanner_dist == 2 * inst.f and inst.ratio >= inst.f
              and obs.ok)
        _emit_json({
            "which": "general",
            "f": inst.f,
            "eps": _frac_str(inst.eps),
            "n": inst.metric.n,
            "fortified_edge_count": inst.fortified.num_edges,
            "fault_size": inst.fault.size,
            "spanner_dist": _frac_str(inst.spanner_dist),
            "host_dist": _frac_str(inst.host_dist),
            "ratio": _frac_str(inst.ratio),
            "ratio_at_least_f": inst.ratio >= inst.f,
            "observations": [str(v) for v in obs.violations],
            "observations_ok": obs.ok,
            "ok": ok,
            "arithmetic": "exact-rational",
        }, args.out)
        _log(f"lowerbound general: f={inst.f} spanner_dist={inst.spanner_dist} "
             f"ratio={inst.ratio} ok={ok}")
        return 0 if ok else 1
    raise BadParams(f"unknown lower bound {args.which!r}")


def cmd_bench(args) -> int:
    methods = [m for m in args.methods.split(",") if m]
    if not methods:
        raise BadParams("empty method list")
    sizes = [int(x) for x in args.sizes.split(",") if x]
    fs = [int(x) for x in args.f.split(",") if x]
    rows = []
    for method in sorted(methods):
        for n in sizes:
            for f in fs:
                points = generate_points("uniform", n, 2, args.seed + n)
                metric = euclidean_metric(points)
                started = time.perf_counter()
                if method == "greedy":
                    g = greedy_spanner(metric, args.t)
                    param = f"t={args.t}"
                elif method == "fortify":
                    g = fortify(metric, greedy_spanner(metric, args.t),
                                max(1, f))
                    param = f"t={args.t}"
                elif method == "wspd":
                    g = wspd_spanner(points, f, args.eps)
                    param = f"eps={args.eps}"
                elif method in ("yao", "theta"):
                    builder = yao_graph if method == "yao" else theta_graph
                    g = builder(points, theta_for_eps(args.eps), f)
                    param = f"eps={args.eps}"
                else:
                    raise BadParams(f"unknown method {method!r}")
                build_ms = (time.perf_counter() - started) * 1000.0
                report = verify_faulty_degree_spanner(
                    g, metric, f, float("inf"),
                    FaultEnumeration("sampled", budget=args.budget,
                                     seed=args.seed))
                rows.append([
                    method, n, f, param, g.num_edges,
                    f"{build_ms:.3f}" if args.timing else "0",
                    f"{report.observed_max.max_ratio:.9g}",
                    report.observed_max.mode,
                ])
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["method", "n", "f", "param", "edge_count", "build_ms",
                     "verified_max_stretch", "mode"])
    writer.writerows(rows)
    _emit_text(buf.getvalue(), args.out)
    _log(f"bench: {len(rows)} rows (kernel={active_implementation()})")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="faultspan",
        description="Build and verify spanners resilient to degree-bounded "
                    "edge faults.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a point set")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--out")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("build", help="build a spanner")
    p.add_argument("--method", required=True,
                   choices=("greedy", "fortify", "wspd", "yao", "theta"))
    p.add_argument("--points")
    p.add_argument("--metric")
    p.add_argument("--metric-graph", dest="metric_graph")
    p.add_argument("--f", type=int, default=1)
    p.add_argument("--t", type=float, default=2.0)
    p.add_argument("--eps", type=float, default=None)
    p.add_argument("--theta", type=float, default=None)
    p.add_argument("--base", default="greedy")
    p.add_argument("--out")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="verify a claimed stretch bound")
    p.add_argument("--graph", required=True)
    p.add_argument("--points")
    p.add_argument("--metric")
    p.add_argument("--metric-graph", dest="metric_graph")
    p.add_argument("--f", type=int, required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--mode", default="sample:10000",
                   help="exhaustive | matchings | sample:<k> | adversarial[:r]")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--force-exhaustive", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lowerbound", help="emit a tightness instance")
    p.add_argument("--which", choices=("matching", "general"), required=True)
    p.add_argument("--f", type=int, default=None)
    p.add_argument("--eps", type=Fraction, default=None,
                   help="rational, e.g. 1/10")
    p.add_argument("--out")
    p.set_defaults(func=cmd_lowerbound)

    p = sub.add_parser("bench", help="edge-count / stretch benchmark table")
    p.add_argument("--methods", default="fortify,wspd,theta",
                   help="comma-separated subset of "
                        "greedy,fortify,wspd,yao,theta")
    p.add_argument("--sizes", default="30,50")
    p.add_argument("--f", default="1,2")
    p.add_argument("--t", type=float, default=2.0)
    p.add_argument("--eps", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--budget", type=int, default=200)
    p.add_argument("--timing", action="store_true",
                   help="measure build_ms (off by default so output is "
                        "byte-reproducible)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BadParams as exc:
        _log(f"error: {exc}")
        return 2
    except FaultspanError as exc:
        _log(f"error: {exc}")
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        _log(f"internal error: {type(exc).__name__}: {exc}")
        return 3


if __name__ == "__main__":
    sys.exit(main())
