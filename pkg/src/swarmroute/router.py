"""Particle-swarm shortest-path solver.

Each particle's position is a per-node priority vector; fitness is the
weight of the decoded path, with dead ends mapped to a penalty larger than
any valid path weight. An optional jitter mode perturbs the weights seen
along each decoded path (a transient overlay, never a mutation of the
graph) to emulate fluctuating link costs.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from .decoder import decode
from .graph import PathResult, WeightedGraph, format_weight
from .swarm import SwarmConfig, init_swarm, step


@dataclass(frozen=True)
class RoutingProblem:
    graph: WeightedGraph
    origin: int
    destination: int

    def __post_init__(self):
        self.graph.check_node(self.origin)
        self.graph.check_node(self.destination)
        if self.origin == self.destination:
            raise ValueError("origin and destination must differ")


@dataclass(frozen=True)
class JitterConfig:
    """Per-iteration link-cost perturbation: each edge on a decoded path has
    its weight scaled by a fresh uniform factor in [1 - amplitude,
    1 + amplitude], floored at zero."""

    amplitude: float

    def __post_init__(self):
        if not (math.isfinite(self.amplitude) and self.amplitude >= 0):
            raise ValueError(f"jitter amplitude must be finite and >= 0, got {self.amplitude}")


@dataclass(frozen=True)
class RunReport:
    """Outcome of one solve run.

    ``gbest_trace`` holds the best fitness seen up to each iteration
    (entry 0 is the post-initialization value) and is non-increasing.
    ``best_path`` is decoded from the final gbest position against the
    unperturbed graph, so with jitter enabled its weight can differ from
    the last trace entry; without jitter they agree exactly.
    ``wall_time`` is excluded from equality comparisons.
    """

    best_path: PathResult
    gbest_trace: tuple[float, ...]
    iterations_run: int
    invalid_decode_count: int
    wall_time: float = field(compare=False)
    config_echo: SwarmConfig


def default_penalty(g: WeightedGraph) -> float:
    """1 + total edge weight: strictly above any simple path's weight."""
    return 1.0 + g.total_edge_weight()


def route_fitness(
    priorities,
    problem: RoutingProblem,
    penalty: float,
    unreached_weight: float = 0.0,
) -> float:
    """Weight of the decoded path, or for dead ends the penalty plus
    ``unreached_weight`` per node the walk never reached (zero by default,
    so a plain dead end costs exactly ``penalty``)."""
    result, _ = decode(priorities, problem.graph, problem.origin, problem.destination)
    if result.valid:
        return result.total_weight
    unreached = problem.graph.node_count - len(result.nodes)
    return penalty + unreached_weight * unreached


def apply_weight_jitter(
    g: WeightedGraph,
    path: PathResult,
    jitter: JitterConfig,
    rng: np.random.Generator,
) -> dict[tuple[int, int], float]:
    """Build a transient weight overlay for the edges along ``path``.

    Draws one uniform factor per traversed edge, in path order. Undirected
    edges appear under both orientations. The graph itself is untouched.
    """
    overlay: dict[tuple[int, int], float] = {}
    nodes = path.nodes
    for a, b in zip(nodes, nodes[1:]):
        factor = rng.uniform(1.0 - jitter.amplitude, 1.0 + jitter.amplitude)
        w = max(0.0, g.edge_weight(a, b) * factor)
        overlay[(a, b)] = w
        if not g.directed:
            overlay[(b, a)] = w
    return overlay


def overlay_path_weight(
    g: WeightedGraph, nodes: tuple[int, ...], overlay: dict[tuple[int, int], float]
) -> float:
    total = 0.0
    for a, b in zip(nodes, nodes[1:]):
        total += overlay.get((a, b), g.edge_weight(a, b))
    return total


def solve(
    problem: RoutingProblem,
    config: SwarmConfig,
    jitter: JitterConfig | None = None,
) -> RunReport:
    """Run the swarm on the routing problem and report the best path found.

    The swarm minimizes ``route_fitness`` over priority vectors of dimension
    node_count. Early exit as soon as gbest reaches config.target_fitness.
    Jitter draws come from a generator seeded separately from the swarm's,
    so toggling jitter never shifts the swarm's own random sequence.
    Deterministic for a fixed (problem, config, jitter) triple.
    """
    g = problem.graph
    started = time.perf_counter()

    amplitude = jitter.amplitude if jitter is not None else 0.0
    # With jitter the overlay can inflate a valid path by (1 + amplitude),
    # so scale the penalty floor accordingly to keep every dead end worse
    # than every valid decode.
    penalty = 1.0 + (1.0 + amplitude) * g.total_edge_weight()
    jitter_rng = np.random.default_rng([config.seed, 1])

    invalid_count = 0

    def fitness(position: np.ndarray) -> float:
        nonlocal invalid_count
        result, _ = decode(position, g, problem.origin, problem.destination)
        if not result.valid:
            invalid_count += 1
            return penalty
        if jitter is None:
            return result.total_weight
        overlay = apply_weight_jitter(g, result, jitter, jitter_rng)
        return overlay_path_weight(g, result.nodes, overlay)

    state = init_swarm(config, g.node_count, fitness)
    trace = [state.gbest_fitness]

    def hit_target() -> bool:
        return (
            config.target_fitness is not None
            and state.gbest_fitness <= config.target_fitness
        )

    iterations = 0
    while iterations < config.max_iterations and not hit_target():
        step(state, fitness, config)
        iterations += 1
        trace.append(state.gbest_fitness)

    best_path, _ = decode(state.gbest_position, g, problem.origin, problem.destination)
    return RunReport(
        best_path=best_path,
        gbest_trace=tuple(trace),
        iterations_run=iterations,
        invalid_decode_count=invalid_count,
        wall_time=time.perf_counter() - started,
        config_echo=config,
    )


def format_run_report(
    problem: RoutingProblem,
    report: RunReport,
    jitter: JitterConfig | None = None,
    include_timing: bool = False,
) -> str:
    """Serialize a RunReport as one key=value pair per line.

    Node ids are 1-based. Timing is off by default so that identical seeds
    produce byte-identical records.
    """
    cfg = report.config_echo
    lines = [
        f"origin={problem.origin + 1}",
        f"destination={problem.destination + 1}",
        f"valid={'true' if report.best_path.valid else 'false'}",
        f"path={' '.join(str(v + 1) for v in report.best_path.nodes)}",
        f"weight={format_weight(report.best_path.total_weight)}",
        f"iterations_run={report.iterations_run}",
        f"invalid_decodes={report.invalid_decode_count}",
        f"seed={cfg.seed}",
        f"population={cfg.population}",
        f"max_iterations={cfg.max_iterations}",
        f"inertia_w={format_weight(cfg.inertia_w)}",
        f"cognitive_c1={format_weight(cfg.cognitive_c1)}",
        f"social_c2={format_weight(cfg.social_c2)}",
        f"vmax={format_weight(cfg.vmax)}",
    ]
    if jitter is not None:
        lines.append(f"jitter_amplitude={format_weight(jitter.amplitude)}")
    lines.append(
        "gbest_trace=" + " ".join(format_weight(v) for v in report.gbest_trace)
    )
    if include_timing:
        lines.append(f"wall_time_ms={report.wall_time * 1000.0:.3f}")
    return "\n".join(lines) + "\n"
