"""swarmroute: exact and particle-swarm solvers for weighted-graph routing.

The library has three layers. ``graph`` and ``exact`` give classical,
deterministic answers (Dijkstra-style shortest path, Prim and Kruskal
spanning trees, a brute-force enumeration oracle). ``swarm``, ``decoder``
and ``router`` implement a stochastic alternative: particles carry one
real priority per node, a greedy walk turns priorities into paths, and
path weight is the fitness. ``bench`` measures the stochastic solver
against the exact one on seeded random instances.
"""

from .bench import (
    BenchResult,
    GenerationError,
    InstanceSpec,
    SuiteResult,
    SuiteSummary,
    format_csv,
    generate_instance,
    parse_suite_file,
    run_suite,
)
from .decoder import DecodeStep, DecodeTrace, decode, format_trace
from .exact import (
    MstResult,
    UnionFind,
    brute_force_shortest_path,
    is_spanning_tree,
    kruskal_mst,
    prim_mst,
    shortest_path,
)
from .graph import (
    Edge,
    GraphError,
    GraphFormatError,
    PathResult,
    WeightedGraph,
    format_graph,
    load_graph,
    parse_graph,
)
from .router import (
    JitterConfig,
    RoutingProblem,
    RunReport,
    apply_weight_jitter,
    default_penalty,
    format_run_report,
    route_fitness,
    solve,
)
from .swarm import Particle, SwarmConfig, SwarmState, init_swarm, step

__version__ = "0.1.0"

__all__ = [
    "BenchResult",
    "DecodeStep",
    "DecodeTrace",
    "Edge",
    "GenerationError",
    "GraphError",
    "GraphFormatError",
    "InstanceSpec",
    "JitterConfig",
    "MstResult",
    "Particle",
    "PathResult",
    "RoutingProblem",
    "RunReport",
    "SuiteResult",
    "SuiteSummary",
    "SwarmConfig",
    "SwarmState",
    "UnionFind",
    "WeightedGraph",
    "apply_weight_jitter",
    "brute_force_shortest_path",
    "decode",
    "default_penalty",
    "format_csv",
    "format_graph",
    "format_run_report",
    "format_trace",
    "generate_instance",
    "init_swarm",
    "is_spanning_tree",
    "kruskal_mst",
    "load_graph",
    "parse_graph",
    "parse_suite_file",
    "prim_mst",
    "route_fitness",
    "run_suite",
    "shortest_path",
    "solve",
    "step",
]
