"""Command-line surface: generators, weight reports, bound verification,
simplex maximization, support reduction, and verification campaigns.

Exit codes: 0 success, 1 usage or parse errors, 2 mathematical-invariant
violations (which always indicate an implementation bug).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .graphs import (
    Graph,
    Graph6Error,
    complete_graph,
    cycle_graph,
    empty_graph,
    parse_edge_list,
    parse_graph6,
    random_gnp,
    turan_graph,
    write_graph6,
)
from .lagrangian import (
    SimplexPoint,
    WeightScheme,
    grid_oracle,
    lagrangian_maximum,
    objective_value,
    support_reduce,
)
from .sweep import (
    DEFAULT_LAGRANGIAN_CAP,
    DEFAULT_SWEEP_CAP,
    DEFAULT_TIGHT_CAP,
    SweepStats,
    fuzz_random,
    sweep_all_graphs,
    turan_bound_campaign,
)
from .weights import InvariantViolation, TheoremViolation, weight_report

USAGE_ERROR = 1
VIOLATION_ERROR = 2


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"invalid rational {text!r}; expected p or p/q") from None


def _parse_mode(text: str) -> WeightScheme:
    if text == "clique":
        return WeightScheme.clique_weighted()
    if text == "constant":
        return WeightScheme.constant(1)
    if text.startswith("constant:"):
        return WeightScheme.constant(_parse_rational(text.split(":", 1)[1]))
    raise ValueError(f"invalid mode {text!r}; expected clique or constant:c")


def _read_graphs(source: str, input_format: str) -> list[Graph]:
    if source == "-":
        text = sys.stdin.read()
    else:
        text = Path(source).read_text()
    fmt = input_format
    if fmt == "auto":
        fmt = "graph6"
        for line in text.splitlines():
            if line.strip():
                tokens = line.split()
                if len(tokens) == 2 and all(t.lstrip("-").isdigit() for t in tokens):
                    fmt = "edgelist"
                break
    if fmt == "edgelist":
        return [parse_edge_list(text)]
    graphs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            graphs.append(parse_graph6(line))
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from None
    if not graphs:
        raise ValueError("no graphs found in input")
    return graphs


def _emit(args, envelope: dict, human: list[str], tsv: list[list[str]]) -> None:
    if args.format == "json":
        print(json.dumps(envelope, sort_keys=True, indent=2))
    elif args.format == "tsv":
        for row in tsv:
            print("\t".join(row))
    else:
        for line in human:
            print(line)


def _stats_dict(stats: SweepStats) -> dict:
    return {
        "n": stats.n,
        "graphs_checked": stats.graphs_checked,
        "violations": stats.violations,
        "min_slack": str(stats.min_slack),
        "tight_count": stats.tight_count,
        "tight_examples": list(stats.tight_examples),
        "max_total_weight": str(stats.max_total_weight),
    }


def _stats_views(stats: SweepStats, header: str) -> tuple[list[str], list[list[str]]]:
    human = [
        header,
        f"  graphs checked   {stats.graphs_checked}",
        f"  violations       {stats.violations}",
        f"  min slack        {stats.min_slack}",
        f"  tight graphs     {stats.tight_count}",
        f"  max total        {stats.max_total_weight}",
    ]
    human.extend(f"  tight example    {g6}" for g6 in stats.tight_examples)
    tsv = [["stats", str(stats.n), str(stats.graphs_checked), str(stats.violations),
            str(stats.min_slack), str(stats.tight_count), str(stats.max_total_weight)]]
    tsv.extend(["tight", g6] for g6 in stats.tight_examples)
    return human, tsv


def _cmd_gen(args) -> int:
    if args.kind == "turan":
        g = turan_graph(args.n, args.r)
    elif args.kind == "complete":
        g = complete_graph(args.n)
    elif args.kind == "empty":
        g = empty_graph(args.n)
    elif args.kind == "cycle":
        g = cycle_graph(args.n)
    else:
        g = random_gnp(args.n, _parse_rational(args.p), args.seed)
    print(write_graph6(g))
    return 0


def _cmd_weights(args) -> int:
    graphs = _read_graphs(args.input, args.input_format)
    reports = []
    human: list[str] = []
    tsv: list[list[str]] = []
    for idx, g in enumerate(graphs, 1):
        rep = weight_report(g)
        reports.append({
            "n": rep.n,
            "edge_count": len(rep.records),
            "records": [{"u": r.u, "v": r.v, "r": r.r, "w": str(r.w)} for r in rep.records],
            "total": str(rep.total),
            "bound": str(rep.bound),
            "slack": str(rep.slack),
            "tight": rep.tight,
        })
        human.append(f"graph {idx}: n={rep.n} edges={len(rep.records)}")
        human.append("  u v r w")
        human.extend(f"  {r.u} {r.v} {r.r} {r.w}" for r in rep.records)
        human.append(f"  total {rep.total}")
        human.append(f"  bound {rep.bound}")
        human.append(f"  slack {rep.slack}{'  (tight)' if rep.tight else ''}")
        tsv.extend([["edge", str(idx), str(r.u), str(r.v), str(r.r), str(r.w)] for r in rep.records])
        tsv.append(["summary", str(idx), str(rep.n), str(len(rep.records)),
                    str(rep.total), str(rep.bound), str(rep.slack)])
    _emit(args, {"command": "weights", "reports": reports}, human, tsv)
    return 0


def _cmd_verify(args) -> int:
    graphs = _read_graphs(args.input, args.input_format)
    reports = []
    human: list[str] = []
    tsv: list[list[str]] = []
    for idx, g in enumerate(graphs, 1):
        rep = weight_report(g)
        if rep.slack < 0:
            raise TheoremViolation(
                f"total weight {rep.total} exceeds bound {rep.bound} on graph {idx}", rep)
        reports.append({
            "n": rep.n,
            "edge_count": len(rep.records),
            "total": str(rep.total),
            "bound": str(rep.bound),
            "slack": str(rep.slack),
            "tight": rep.tight,
        })
        human.append(f"graph {idx}: n={rep.n} slack={rep.slack} "
                     f"(total {rep.total}, bound {rep.bound}) OK")
        tsv.append(["verify", str(idx), str(rep.n), str(rep.total), str(rep.bound), str(rep.slack)])
    _emit(args, {"command": "verify", "reports": reports}, human, tsv)
    return 0


def _scheme_dict(scheme: WeightScheme) -> dict:
    out = {"mode": scheme.mode}
    if scheme.mode == "constant":
        out["constant"] = str(scheme.c)
    return out


def _cmd_lagrangian(args) -> int:
    scheme = _parse_mode(args.mode)
    graphs = _read_graphs(args.input, args.input_format)
    reports = []
    human: list[str] = []
    tsv: list[list[str]] = []
    for idx, g in enumerate(graphs, 1):
        out = lagrangian_maximum(g, scheme)
        reports.append({
            "n": g.n,
            "maximum": str(out.maximum),
            "support": list(out.support.vertices),
            "witness": [str(c) for c in out.witness.coords],
            "candidates": [
                {"clique": list(c.clique.vertices), "status": c.status,
                 "value": None if c.value is None else str(c.value)}
                for c in out.candidates
            ],
        })
        human.append(f"graph {idx}: maximum {out.maximum}")
        human.append(f"  support {','.join(map(str, out.support.vertices))}")
        human.append(f"  witness {','.join(str(c) for c in out.witness.coords)}")
        human.append(f"  candidates {len(out.candidates)}")
        if args.ledger:
            for c in out.candidates:
                val = "-" if c.value is None else str(c.value)
                human.append(f"    {','.join(map(str, c.clique.vertices))} {c.status} {val}")
        tsv.append(["lagrangian", str(idx), str(out.maximum),
                    ",".join(map(str, out.support.vertices)),
                    ",".join(str(c) for c in out.witness.coords)])
    envelope = {"command": "lagrangian", "scheme": _scheme_dict(scheme), "reports": reports}
    _emit(args, envelope, human, tsv)
    return 0


def _start_point(spec_text: str, n: int) -> SimplexPoint:
    if spec_text == "uniform":
        if n < 1:
            raise ValueError("uniform start point needs at least one vertex")
        return SimplexPoint.uniform(n)
    coords = tuple(_parse_rational(t) for t in spec_text.split(","))
    if len(coords) != n:
        raise ValueError(f"start point has {len(coords)} coordinates, graph has {n}")
    return SimplexPoint(coords)


def _cmd_reduce(args) -> int:
    scheme = _parse_mode(args.mode)
    graphs = _read_graphs(args.input, args.input_format)
    reports = []
    human: list[str] = []
    tsv: list[list[str]] = []
    for idx, g in enumerate(graphs, 1):
        start = _start_point(args.start, g.n)
        final, trace = support_reduce(g, scheme, start)
        f_start = objective_value(g, scheme, start)
        f_final = objective_value(g, scheme, final)
        reports.append({
            "n": g.n,
            "start": [str(c) for c in start.coords],
            "final": [str(c) for c in final.coords],
            "objective_start": str(f_start),
            "objective_final": str(f_final),
            "steps": [
                {"i": s.i, "j": s.j, "s_i": str(s.s_i), "s_j": str(s.s_j),
                 "f_before": str(s.f_before), "f_after": str(s.f_after),
                 "point_after": [str(c) for c in s.point_after.coords]}
                for s in trace
            ],
        })
        human.append(f"graph {idx}: steps {len(trace)}")
        for s in trace:
            human.append(f"  move {s.j}->{s.i}  s_i={s.s_i} s_j={s.s_j} "
                         f"f {s.f_before} -> {s.f_after}")
        human.append(f"  final {','.join(str(c) for c in final.coords)}")
        human.append(f"  objective {f_start} -> {f_final}")
        for s in trace:
            tsv.append(["step", str(idx), str(s.i), str(s.j), str(s.s_i), str(s.s_j),
                        str(s.f_before), str(s.f_after)])
        tsv.append(["final", str(idx), ",".join(str(c) for c in final.coords), str(f_final)])
    envelope = {"command": "reduce", "scheme": _scheme_dict(scheme), "reports": reports}
    _emit(args, envelope, human, tsv)
    return 0


def _cmd_oracle(args) -> int:
    scheme = _parse_mode(args.mode)
    graphs = _read_graphs(args.input, args.input_format)
    reports = []
    human: list[str] = []
    tsv: list[list[str]] = []
    for idx, g in enumerate(graphs, 1):
        value = grid_oracle(g, scheme, args.grid)
        reports.append({"n": g.n, "value": str(value)})
        human.append(f"graph {idx}: grid maximum {value} (resolution {args.grid})")
        tsv.append(["oracle", str(idx), str(value)])
    envelope = {"command": "oracle", "scheme": _scheme_dict(scheme),
                "resolution": args.grid, "reports": reports}
    _emit(args, envelope, human, tsv)
    return 0


def _cmd_sweep(args) -> int:
    stats = sweep_all_graphs(args.n, cap=args.cap, jobs=args.jobs, tight_cap=args.tight_cap)
    human, tsv = _stats_views(stats, f"sweep n={args.n}: all {stats.graphs_checked} labeled graphs")
    envelope = {"command": "sweep", "params": {"n": args.n}, "stats": _stats_dict(stats)}
    _emit(args, envelope, human, tsv)
    return 0


def _cmd_fuzz(args) -> int:
    p = _parse_rational(args.p)
    stats = fuzz_random(args.n, p, args.count, args.seed, lagrangian_cap=args.lagrangian_cap)
    human, tsv = _stats_views(
        stats, f"fuzz n={args.n} p={p} count={args.count} seed={args.seed}")
    envelope = {
        "command": "fuzz",
        "params": {"n": args.n, "p": str(p), "count": args.count, "seed": args.seed},
        "stats": _stats_dict(stats),
    }
    _emit(args, envelope, human, tsv)
    return 0


def _cmd_campaign(args) -> int:
    stats = turan_bound_campaign(args.n, args.r, args.count, args.seed)
    human, tsv = _stats_views(
        stats, f"campaign n={args.n} r={args.r} count={args.count} seed={args.seed}")
    envelope = {
        "command": "campaign",
        "params": {"n": args.n, "r": args.r, "count": args.count, "seed": args.seed},
        "stats": _stats_dict(stats),
    }
    _emit(args, envelope, human, tsv)
    return 0


def _add_io_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("input", nargs="?", default="-",
                     help="input file, or - for standard input (default)")
    sub.add_argument("--input-format", choices=["auto", "graph6", "edgelist"],
                     default="auto", help="input format (default: auto-detect)")
    _add_format_option(sub)


def _add_format_option(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=["human", "tsv", "json"], default="human",
                     help="output format (default: human)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="turanweights",
        description="Exact clique-weighted edge bounds and simplex maximization on graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a graph, emitted as one graph6 line")
    gen_sub = gen.add_subparsers(dest="kind", required=True)
    g_turan = gen_sub.add_parser("turan", help="balanced complete multipartite graph")
    g_turan.add_argument("n", type=int)
    g_turan.add_argument("r", type=int)
    g_complete = gen_sub.add_parser("complete")
    g_complete.add_argument("n", type=int)
    g_empty = gen_sub.add_parser("empty")
    g_empty.add_argument("n", type=int)
    g_cycle = gen_sub.add_parser("cycle")
    g_cycle.add_argument("n", type=int)
    g_gnp = gen_sub.add_parser("gnp", help="G(n,p) with exact rational p")
    g_gnp.add_argument("n", type=int)
    g_gnp.add_argument("p")
    g_gnp.add_argument("--seed", type=int, default=0)
    gen.set_defaults(func=_cmd_gen)

    weights = sub.add_parser("weights", help="per-edge clique numbers and weights")
    _add_io_options(weights)
    weights.set_defaults(func=_cmd_weights)

    verify = sub.add_parser("verify", help="check total weight <= n^2/4 exactly")
    _add_io_options(verify)
    verify.set_defaults(func=_cmd_verify)

    lagr = sub.add_parser("lagrangian", help="exact maximum of the weighted form over the simplex")
    _add_io_options(lagr)
    lagr.add_argument("--mode", default="clique",
                      help="weighting: clique, or constant:c (default: clique)")
    lagr.add_argument("--ledger", action="store_true",
                      help="include the full candidate ledger in human output")
    lagr.set_defaults(func=_cmd_lagrangian)

    reduce_p = sub.add_parser("reduce", help="shift mass until the support induces a clique")
    _add_io_options(reduce_p)
    reduce_p.add_argument("--start", default="uniform",
                          help="start point: uniform, or comma-separated rationals")
    reduce_p.add_argument("--mode", default="clique",
                          help="weighting: clique, or constant:c (default: clique)")
    reduce_p.set_defaults(func=_cmd_reduce)

    oracle = sub.add_parser("oracle", help="exhaustive grid lower bound for the simplex maximum")
    _add_io_options(oracle)
    oracle.add_argument("--grid", type=int, required=True, help="grid resolution D")
    oracle.add_argument("--mode", default="clique",
                        help="weighting: clique, or constant:c (default: clique)")
    oracle.set_defaults(func=_cmd_oracle)

    swp = sub.add_parser("sweep", help="verify the bound on every labeled graph on n vertices")
    swp.add_argument("--n", type=int, required=True)
    swp.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    swp.add_argument("--cap", type=int, default=DEFAULT_SWEEP_CAP,
                     help=f"refuse n above this cap (default {DEFAULT_SWEEP_CAP})")
    swp.add_argument("--tight-cap", type=int, default=DEFAULT_TIGHT_CAP,
                     help="max tight examples to record")
    _add_format_option(swp)
    swp.set_defaults(func=_cmd_sweep)

    fuzz = sub.add_parser("fuzz", help="verify the bound on seeded G(n,p) draws")
    fuzz.add_argument("--n", type=int, required=True)
    fuzz.add_argument("--p", required=True, help="edge probability, exact rational")
    fuzz.add_argument("--count", type=int, required=True)
    fuzz.add_argument("--seed", type=int, required=True)
    fuzz.add_argument("--lagrangian-cap", type=int, default=DEFAULT_LAGRANGIAN_CAP,
                      help="also check the simplex-maximum chain when n is at most this")
    _add_format_option(fuzz)
    fuzz.set_defaults(func=_cmd_fuzz)

    camp = sub.add_parser("campaign",
                          help="edge bound on random spanning subgraphs of a Turan graph")
    camp.add_argument("--n", type=int, required=True)
    camp.add_argument("--r", type=int, required=True)
    camp.add_argument("--count", type=int, required=True)
    camp.add_argument("--seed", type=int, required=True)
    _add_format_option(camp)
    camp.set_defaults(func=_cmd_campaign)

    return parser


def _emit_error(fmt: str | None, kind: str, exc: Exception) -> None:
    if fmt == "json":
        payload = {"error": {"kind": kind, "message": str(exc)}}
        print(json.dumps(payload, sort_keys=True), file=sys.stderr)
    else:
        print(f"turanweights: {kind}: {exc}", file=sys.stderr)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help and 2 for usage errors; fold the latter
        # into the usage-error code so 2 stays reserved for violations
        return 0 if exc.code == 0 else USAGE_ERROR
    fmt = getattr(args, "format", None)
    try:
        return args.func(args)
    except InvariantViolation as exc:
        _emit_error(fmt, "invariant-violation", exc)
        return VIOLATION_ERROR
    except (ValueError, OSError) as exc:
        _emit_error(fmt, "usage", exc)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
