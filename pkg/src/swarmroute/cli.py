"""Command-line surface.

Subcommands: gen, sp, mst, pso, decode, bench. Node ids are 1-based here
and in graph files; the library is 0-based internally. Every randomized
subcommand takes a required --seed, so identical invocations produce
identical output (timing lines and figure files aside).

Exit codes: 0 success, 1 bad input or usage, 2 no-solution outcome
(unreachable destination, no spanning tree, dead-end decode, or a swarm
run that never found a valid path).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bench import (
    GenerationError,
    InstanceSpec,
    format_csv,
    generate_instance,
    parse_suite_file,
    run_suite,
)
from .decoder import decode, format_trace
from .exact import kruskal_mst, prim_mst, shortest_path
from .graph import GraphError, format_graph, format_weight, load_graph
from .router import JitterConfig, RoutingProblem, format_run_report, solve
from .swarm import SwarmConfig

_DEFAULTS = SwarmConfig()


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; 2 is reserved for
    # no-solution outcomes here, so remap usage errors to 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="swarmroute",
        description=(
            "Shortest paths and spanning trees on weighted graphs, exactly or "
            "with a particle-swarm router, plus instance generation and "
            "benchmarking."
        ),
    )
    sub = parser.add_subparsers(dest="command", metavar="command")

    gen = sub.add_parser("gen", help="generate a seeded random graph file")
    gen.add_argument(
        "--generator",
        required=True,
        choices=["erdos_renyi", "grid", "complete"],
        help="random model",
    )
    gen.add_argument("--nodes", required=True, type=int, help="node count (grid: row count)")
    gen.add_argument(
        "--p",
        type=float,
        default=None,
        help="edge probability (erdos_renyi) or column count (grid)",
    )
    gen.add_argument("--weight-low", type=float, default=1.0, help="min edge weight")
    gen.add_argument("--weight-high", type=float, default=10.0, help="max edge weight (exclusive)")
    gen.add_argument("--seed", required=True, type=int, help="rng seed")
    gen.add_argument(
        "--allow-disconnected",
        action="store_true",
        help="skip the connectivity rejection loop",
    )
    gen.add_argument("--out", default=None, help="output file (default stdout)")
    gen.set_defaults(func=cmd_gen)

    sp = sub.add_parser("sp", help="exact shortest path")
    sp.add_argument("graph", help="graph file")
    _add_endpoint_flags(sp)
    sp.set_defaults(func=cmd_sp)

    mst = sub.add_parser("mst", help="exact minimum spanning tree")
    mst.add_argument("graph", help="graph file")
    mst.add_argument("--algo", required=True, choices=["prim", "kruskal"])
    mst.set_defaults(func=cmd_mst)

    pso = sub.add_parser("pso", help="particle-swarm shortest-path search")
    pso.add_argument("graph", help="graph file")
    _add_endpoint_flags(pso)
    _add_swarm_flags(pso, include_target=True)
    pso.add_argument(
        "--jitter",
        type=float,
        default=None,
        metavar="AMPLITUDE",
        help="perturb weights along each decoded path by a uniform factor in [1-A, 1+A]",
    )
    pso.add_argument("--timing", action="store_true", help="append wall_time_ms to the report")
    pso.add_argument("--plot", default=None, metavar="FILE", help="also render the convergence trace to FILE")
    pso.set_defaults(func=cmd_pso)

    dec = sub.add_parser("decode", help="decode a priority vector into a path")
    dec.add_argument("graph", help="graph file")
    dec.add_argument(
        "--priorities",
        required=True,
        help="comma-separated priority per node, e.g. '2,6,4,9,5,7'",
    )
    _add_endpoint_flags(dec)
    dec.set_defaults(func=cmd_decode)

    bench = sub.add_parser("bench", help="compare the swarm router against the exact oracle")
    bench.add_argument("suite", help="suite file: 'generator n p weight_low weight_high seed' per line")
    _add_swarm_flags(bench, include_target=False)
    bench.add_argument("--repeats", type=int, default=5, help="runs per instance, distinct seeds")
    bench.add_argument("--jobs", type=int, default=1, help="parallel workers")
    bench.add_argument("--out", default=None, help="CSV output file (default stdout)")
    bench.add_argument(
        "--plot-dir",
        default=None,
        metavar="DIR",
        help="also render summary figures into DIR",
    )
    bench.set_defaults(func=cmd_bench)
    return parser


def _add_endpoint_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--from", dest="origin", required=True, type=int, help="origin node (1-based)")
    sub.add_argument("--to", dest="destination", required=True, type=int, help="destination node (1-based)")


def _add_swarm_flags(sub: argparse.ArgumentParser, include_target: bool) -> None:
    sub.add_argument("--seed", required=True, type=int, help="rng seed")
    sub.add_argument("--pop", type=int, default=_DEFAULTS.population, help="swarm size")
    sub.add_argument("--iters", type=int, default=_DEFAULTS.max_iterations, help="iteration budget")
    sub.add_argument("--w", type=float, default=_DEFAULTS.inertia_w, help="inertia weight")
    sub.add_argument("--c1", type=float, default=_DEFAULTS.cognitive_c1, help="cognitive coefficient")
    sub.add_argument("--c2", type=float, default=_DEFAULTS.social_c2, help="social coefficient")
    sub.add_argument("--vmax", type=float, default=None, help="velocity clamp (default 0.5 * init range)")
    sub.add_argument("--init-low", type=float, default=_DEFAULTS.init_low, help="position init lower bound")
    sub.add_argument("--init-high", type=float, default=_DEFAULTS.init_high, help="position init upper bound")
    sub.add_argument("--repulsion", action="store_true", help="enable pairwise repulsion")
    sub.add_argument(
        "--repulsion-strength",
        type=float,
        default=_DEFAULTS.repulsion_strength,
        help="repulsion magnitude scale",
    )
    if include_target:
        sub.add_argument("--target", type=float, default=None, help="early-exit fitness target")


def _swarm_config(args: argparse.Namespace) -> SwarmConfig:
    return SwarmConfig(
        population=args.pop,
        max_iterations=args.iters,
        inertia_w=args.w,
        cognitive_c1=args.c1,
        social_c2=args.c2,
        vmax=args.vmax,
        init_low=args.init_low,
        init_high=args.init_high,
        seed=args.seed,
        repulsion_enabled=args.repulsion,
        repulsion_strength=args.repulsion_strength,
        target_fitness=getattr(args, "target", None),
    )


def _to_internal(g, node_1based: int, flag: str) -> int:
    v = node_1based - 1
    if not (0 <= v < g.node_count):
        raise GraphError(f"{flag} node {node_1based} out of range 1..{g.node_count}")
    return v


def _write_out(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def cmd_gen(args) -> int:
    p = args.p
    if p is None:
        if args.generator in ("erdos_renyi", "grid"):
            raise ValueError(f"--p is required for generator {args.generator}")
        p = 1.0
    spec = InstanceSpec(
        generator=args.generator,
        n=args.nodes,
        p=p,
        weight_low=args.weight_low,
        weight_high=args.weight_high,
        seed=args.seed,
        require_connected=not args.allow_disconnected,
    )
    _write_out(format_graph(generate_instance(spec)), args.out)
    return 0


def cmd_sp(args) -> int:
    g = load_graph(args.graph)
    origin = _to_internal(g, args.origin, "--from")
    destination = _to_internal(g, args.destination, "--to")
    result = shortest_path(g, origin, destination)
    if not result.valid:
        print("no path")
        return 2
    print(" ".join(str(v + 1) for v in result.nodes))
    print(f"weight {format_weight(result.total_weight)}")
    return 0


def cmd_mst(args) -> int:
    g = load_graph(args.graph)
    if g.directed:
        raise GraphError("minimum spanning tree requires an undirected graph")
    if not g.is_connected():
        print("no spanning tree")
        return 2
    result = prim_mst(g) if args.algo == "prim" else kruskal_mst(g)
    for e in result.edges:
        print(f"{e.u + 1} {e.v + 1} {format_weight(e.weight)}")
    print(f"weight {format_weight(result.total_weight)}")
    return 0


def cmd_pso(args) -> int:
    g = load_graph(args.graph)
    problem = RoutingProblem(
        g,
        _to_internal(g, args.origin, "--from"),
        _to_internal(g, args.destination, "--to"),
    )
    jitter = JitterConfig(args.jitter) if args.jitter is not None else None
    report = solve(problem, _swarm_config(args), jitter)
    sys.stdout.write(format_run_report(problem, report, jitter, include_timing=args.timing))
    if args.plot:
        from . import plots

        written = plots.plot_convergence(report, args.plot)
        print(f"wrote {written}", file=sys.stderr)
    return 0 if report.best_path.valid else 2


def cmd_decode(args) -> int:
    g = load_graph(args.graph)
    try:
        priorities = [float(tok) for tok in args.priorities.split(",")]
    except ValueError:
        raise ValueError(
            f"--priorities must be comma-separated numbers, got {args.priorities!r}"
        ) from None
    result, trace = decode(
        priorities,
        g,
        _to_internal(g, args.origin, "--from"),
        _to_internal(g, args.destination, "--to"),
    )
    sys.stdout.write(format_trace(priorities, trace))
    if not result.valid:
        return 2
    print(f"weight {format_weight(result.total_weight)}")
    return 0


def cmd_bench(args) -> int:
    specs = parse_suite_file(Path(args.suite).read_text(encoding="utf-8"))
    suite = run_suite(specs, _swarm_config(args), repeats=args.repeats, jobs=args.jobs)
    _write_out(format_csv(suite), args.out)
    if args.plot_dir:
        from . import plots

        for written in plots.plot_suite(suite, args.plot_dir):
            print(f"wrote {written}", file=sys.stderr)
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "func"):
        parser.print_usage(sys.stderr)
        return 1
    try:
        return args.func(args)
    except (ValueError, OSError, GenerationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
