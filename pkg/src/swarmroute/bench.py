"""Benchmark harness: seeded random instances, exact oracle on each, swarm
router run against it, CSV out.

Every (instance, repeat) cell derives its own router seed from
(base seed, instance index, repeat index), so the suite is reproducible
end to end while repeats still vary the stochastic part. Success means the
router returned a path whose weight matches the exact optimum within
SUCCESS_TOL; a router result *better* than the oracle is impossible and
aborts the suite, because it can only mean a solver bug.
"""

from __future__ import annotations

import math
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from .exact import shortest_path
from .graph import WeightedGraph, format_weight
from .router import RoutingProblem, solve
from .swarm import SwarmConfig

SUCCESS_TOL = 1e-9
GENERATORS = ("erdos_renyi", "grid", "complete")
MAX_GENERATION_ATTEMPTS = 1000

CSV_HEADER = (
    "instance_id,generator,n,m,seed,repeat,exact_weight,pso_weight,"
    "success,iters_to_opt,invalid_rate,exact_ms,pso_ms"
)


class GenerationError(RuntimeError):
    """Instance generation failed (e.g. connectivity rejection cap hit)."""


@dataclass(frozen=True)
class InstanceSpec:
    """One random-graph recipe.

    ``p`` is the edge probability for erdos_renyi and the column count for
    grid (``n`` being the row count there); complete ignores it. Weights
    are uniform in [weight_low, weight_high).
    """

    generator: str
    n: int
    p: float
    weight_low: float
    weight_high: float
    seed: int
    require_connected: bool = True

    def __post_init__(self):
        if self.generator not in GENERATORS:
            raise ValueError(
                f"unknown generator {self.generator!r}, expected one of {GENERATORS}"
            )
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.generator == "erdos_renyi" and not (0 < self.p <= 1):
            raise ValueError(f"edge probability must be in (0, 1], got {self.p}")
        if self.generator == "grid" and (self.p != int(self.p) or self.p < 1):
            raise ValueError(f"grid column count must be a positive integer, got {self.p}")
        if not (0 <= self.weight_low < self.weight_high):
            raise ValueError(
                f"weight range must satisfy 0 <= low < high, got "
                f"[{self.weight_low}, {self.weight_high})"
            )
        if self.seed < 0:
            raise ValueError("seed must be non-negative")


@dataclass(frozen=True)
class BenchResult:
    instance_id: int
    generator: str
    n: int
    m: int
    seed: int
    repeat: int
    exact_weight: float
    pso_weight: float
    success: bool
    iterations_to_optimum: int | None
    invalid_decode_rate: float
    exact_ms: float
    pso_ms: float


@dataclass(frozen=True)
class SuiteSummary:
    runs: int
    successes: int
    success_rate: float
    mean_instance_success_rate: float
    median_instance_success_rate: float
    mean_iters_to_opt: float
    mean_invalid_rate: float
    mean_approx_ratio: float
    mean_exact_ms: float
    mean_pso_ms: float


@dataclass(frozen=True)
class SuiteResult:
    results: tuple[BenchResult, ...]
    errors: tuple[str, ...]
    summary: SuiteSummary


def generate_instance(spec: InstanceSpec) -> WeightedGraph:
    """Deterministic graph from the instance description's own seed.

    With require_connected, disconnected draws are rejected and redrawn
    from the same stream, up to MAX_GENERATION_ATTEMPTS.
    """
    rng = np.random.default_rng(spec.seed)
    for _ in range(MAX_GENERATION_ATTEMPTS):
        g = _generate_once(spec, rng)
        if not spec.require_connected or g.is_connected():
            return g
    raise GenerationError(
        f"no connected instance after {MAX_GENERATION_ATTEMPTS} attempts "
        f"(generator={spec.generator}, n={spec.n}, p={spec.p}, seed={spec.seed})"
    )


def _generate_once(spec: InstanceSpec, rng: np.random.Generator) -> WeightedGraph:
    def weight() -> float:
        return float(rng.uniform(spec.weight_low, spec.weight_high))

    edges: list[tuple[int, int, float]] = []
    if spec.generator == "erdos_renyi":
        node_count = spec.n
        for u in range(node_count):
            for v in range(u + 1, node_count):
                if rng.random() < spec.p:
                    edges.append((u, v, weight()))
    elif spec.generator == "complete":
        node_count = spec.n
        for u in range(node_count):
            for v in range(u + 1, node_count):
                edges.append((u, v, weight()))
    else:  # grid
        rows, cols = spec.n, int(spec.p)
        node_count = rows * cols
        for r in range(rows):
            for c in range(cols):
                u = r * cols + c
                if c + 1 < cols:
                    edges.append((u, u + 1, weight()))
                if r + 1 < rows:
                    edges.append((u, u + cols, weight()))
    return WeightedGraph(node_count, edges, directed=False)


def derive_run_seed(base_seed: int, instance_id: int, repeat: int) -> int:
    """Independent 64-bit router seed for one (instance, repeat) cell."""
    return int(
        np.random.SeedSequence((base_seed, instance_id, repeat)).generate_state(
            1, np.uint64
        )[0]
    )


def _run_cell(
    args: tuple[InstanceSpec, int, int, SwarmConfig],
) -> tuple[str, BenchResult | tuple[int, str]]:
    """Worker for one (instance, repeat) cell; picklable for process pools."""
    spec, instance_id, repeat, config = args
    try:
        g = generate_instance(spec)
        if g.node_count < 2:
            raise GenerationError(f"instance has {g.node_count} node(s); routing needs 2")
        origin, destination = 0, g.node_count - 1

        t0 = time.perf_counter()
        exact = shortest_path(g, origin, destination)
        exact_ms = (time.perf_counter() - t0) * 1000.0
        if not exact.valid:
            raise GenerationError("exact oracle found no path (instance disconnected)")
    except GenerationError as exc:
        return ("error", (instance_id, str(exc)))

    run_config = replace(
        config,
        seed=derive_run_seed(config.seed, instance_id, repeat),
        target_fitness=exact.total_weight + SUCCESS_TOL,
    )
    report = solve(RoutingProblem(g, origin, destination), run_config)

    pso_weight = report.best_path.total_weight
    if pso_weight < exact.total_weight - SUCCESS_TOL:
        raise RuntimeError(
            f"router beat the exact oracle ({pso_weight} < {exact.total_weight}) "
            f"on instance {instance_id}; this is a solver bug"
        )
    success = report.best_path.valid and pso_weight <= exact.total_weight + SUCCESS_TOL
    evaluations = run_config.population * (report.iterations_run + 1)
    return (
        "ok",
        BenchResult(
            instance_id=instance_id,
            generator=spec.generator,
            n=g.node_count,
            m=g.edge_count,
            seed=spec.seed,
            repeat=repeat,
            exact_weight=exact.total_weight,
            pso_weight=pso_weight,
            success=success,
            iterations_to_optimum=report.iterations_run if success else None,
            invalid_decode_rate=report.invalid_decode_count / evaluations,
            exact_ms=exact_ms,
            pso_ms=report.wall_time * 1000.0,
        ),
    )


def run_suite(
    specs: list[InstanceSpec],
    config: SwarmConfig,
    repeats: int,
    jobs: int = 1,
) -> SuiteResult:
    """Run every instance x repeat cell and aggregate.

    The router seed of each cell comes from derive_run_seed and its early
    exit target is pinned to the exact optimum, so iterations_to_optimum
    means what it says. Generation failures are recorded per instance and
    do not abort the rest of the suite. Cells execute in parallel when
    jobs > 1; output order is (instance, repeat) regardless.
    """
    if repeats < 0:
        raise ValueError("repeats must be >= 0")
    tasks = [
        (spec, instance_id, repeat, config)
        for instance_id, spec in enumerate(specs)
        for repeat in range(repeats)
    ]
    if jobs > 1 and tasks:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_run_cell, tasks))
    else:
        outcomes = [_run_cell(t) for t in tasks]

    results: list[BenchResult] = []
    errors: list[str] = []
    seen_errors: set[tuple[int, str]] = set()
    for kind, payload in outcomes:
        if kind == "ok":
            results.append(payload)
        else:
            if payload not in seen_errors:
                seen_errors.add(payload)
                errors.append(f"instance {payload[0]}: {payload[1]}")
    return SuiteResult(tuple(results), tuple(errors), summarize(results))


def summarize(results: list[BenchResult]) -> SuiteSummary:
    runs = len(results)
    successes = sum(1 for r in results if r.success)
    per_instance: dict[int, list[bool]] = {}
    for r in results:
        per_instance.setdefault(r.instance_id, []).append(r.success)
    instance_rates = [
        sum(flags) / len(flags) for flags in per_instance.values()
    ]
    iters = [
        r.iterations_to_optimum for r in results if r.iterations_to_optimum is not None
    ]
    ratios = [
        r.pso_weight / r.exact_weight
        for r in results
        if math.isfinite(r.pso_weight) and r.exact_weight > 0
    ]
    return SuiteSummary(
        runs=runs,
        successes=successes,
        success_rate=successes / runs if runs else math.nan,
        mean_instance_success_rate=(
            statistics.fmean(instance_rates) if instance_rates else math.nan
        ),
        median_instance_success_rate=(
            statistics.median(instance_rates) if instance_rates else math.nan
        ),
        mean_iters_to_opt=statistics.fmean(iters) if iters else math.nan,
        mean_invalid_rate=(
            statistics.fmean(r.invalid_decode_rate for r in results)
            if results
            else math.nan
        ),
        mean_approx_ratio=statistics.fmean(ratios) if ratios else math.nan,
        mean_exact_ms=(
            statistics.fmean(r.exact_ms for r in results) if results else math.nan
        ),
        mean_pso_ms=(
            statistics.fmean(r.pso_ms for r in results) if results else math.nan
        ),
    )


def _csv_row(r: BenchResult) -> str:
    return ",".join(
        [
            str(r.instance_id),
            r.generator,
            str(r.n),
            str(r.m),
            str(r.seed),
            str(r.repeat),
            format_weight(r.exact_weight),
            format_weight(r.pso_weight),
            "1" if r.success else "0",
            "" if r.iterations_to_optimum is None else str(r.iterations_to_optimum),
            f"{r.invalid_decode_rate:.6f}",
            f"{r.exact_ms:.3f}",
            f"{r.pso_ms:.3f}",
        ]
    )


def format_csv(suite: SuiteResult) -> str:
    """Full CSV report: header, one row per run, error comments, then the
    aggregate summary as trailing comment lines. The *_ms columns and the
    timing summary line are wall-clock and thus the only non-reproducible
    parts."""
    s = suite.summary
    lines = [CSV_HEADER]
    lines += [_csv_row(r) for r in suite.results]
    lines += [f"# error: {e}" for e in suite.errors]
    lines.append(
        f"# summary: runs={s.runs} successes={s.successes} "
        f"success_rate={_fmt_stat(s.success_rate)}"
    )
    lines.append(
        f"# summary: mean_instance_success_rate={_fmt_stat(s.mean_instance_success_rate)} "
        f"median_instance_success_rate={_fmt_stat(s.median_instance_success_rate)}"
    )
    lines.append(
        f"# summary: mean_iters_to_opt={_fmt_stat(s.mean_iters_to_opt)} "
        f"mean_invalid_rate={_fmt_stat(s.mean_invalid_rate)} "
        f"mean_approx_ratio={_fmt_stat(s.mean_approx_ratio)}"
    )
    lines.append(
        f"# summary: mean_exact_ms={_fmt_stat(s.mean_exact_ms)} "
        f"mean_pso_ms={_fmt_stat(s.mean_pso_ms)}"
    )
    return "\n".join(lines) + "\n"


def _fmt_stat(x: float) -> str:
    return "nan" if math.isnan(x) else f"{x:.6f}"


def parse_suite_file(text: str) -> list[InstanceSpec]:
    """Parse a line-oriented suite file.

    Each record is `generator n p weight_low weight_high seed`; '#' lines
    and blank lines are skipped. ``p`` follows the InstanceSpec meaning per
    generator.
    """
    specs: list[InstanceSpec] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 6:
            raise ValueError(
                f"line {line_no}: expected 'generator n p weight_low weight_high seed', "
                f"got {len(parts)} field(s)"
            )
        try:
            spec = InstanceSpec(
                generator=parts[0],
                n=int(parts[1]),
                p=float(parts[2]),
                weight_low=float(parts[3]),
                weight_high=float(parts[4]),
                seed=int(parts[5]),
            )
        except ValueError as exc:
            raise ValueError(f"line {line_no}: {exc}") from None
        specs.append(spec)
    return specs
