import math

import numpy as np
import pytest

from conftest import WALKTHROUGH_PRIORITIES, complete_graph, unit_graph
from swarmroute import (
    GraphError,
    JitterConfig,
    RoutingProblem,
    SwarmConfig,
    WeightedGraph,
    apply_weight_jitter,
    default_penalty,
    format_run_report,
    route_fitness,
    shortest_path,
    solve,
)
from swarmroute.router import overlay_path_weight


class TestRoutingProblem:
    def test_same_endpoints_rejected(self, five_node_graph):
        with pytest.raises(ValueError, match="differ"):
            RoutingProblem(five_node_graph, 1, 1)

    def test_out_of_range_rejected(self, five_node_graph):
        with pytest.raises(GraphError):
            RoutingProblem(five_node_graph, 0, 9)


class TestRouteFitness:
    def test_walkthrough_vector(self, walkthrough_graph):
        problem = RoutingProblem(walkthrough_graph, 0, 5)
        value = route_fitness(WALKTHROUGH_PRIORITIES, problem, default_penalty(walkthrough_graph))
        assert value == 5.0

    def test_dead_end_costs_exactly_penalty(self):
        g = unit_graph(4, [(0, 1), (2, 3)])
        problem = RoutingProblem(g, 0, 2)
        penalty = default_penalty(g)
        assert route_fitness([0.1, 0.9, 0.5, 0.7], problem, penalty) == penalty

    def test_unreached_term(self):
        g = unit_graph(4, [(0, 1), (2, 3)])
        problem = RoutingProblem(g, 0, 2)
        # dead end after (0, 1): two of four nodes unreached
        value = route_fitness([0.1, 0.9, 0.5, 0.7], problem, 100.0, unreached_weight=3.0)
        assert value == 100.0 + 2 * 3.0

    def test_adjacent_destination(self):
        g = WeightedGraph(3, [(0, 1, 7.5), (1, 2, 1.0), (0, 2, 9.0)])
        problem = RoutingProblem(g, 0, 1)
        assert route_fitness([0.0, 10.0, 1.0], problem, 100.0) == 7.5

    def test_penalty_separates_invalid_from_valid(self):
        rng = np.random.default_rng(88)
        g = unit_graph(6, [(0, 1), (1, 5), (0, 2), (2, 3), (3, 4)])  # node 4 dangles off
        problem = RoutingProblem(g, 0, 5)
        penalty = default_penalty(g)
        valid_values, invalid_values = [], []
        for _ in range(300):
            value = route_fitness(rng.uniform(-1, 1, size=6), problem, penalty)
            (invalid_values if value >= penalty else valid_values).append(value)
        assert valid_values and invalid_values  # both behaviors exercised
        assert max(valid_values) < min(invalid_values)


def test_default_penalty(five_node_graph):
    assert default_penalty(five_node_graph) == 1.0 + 8.0


class TestSolve:
    def test_finds_optimum_on_small_graph(self, five_node_graph):
        problem = RoutingProblem(five_node_graph, 0, 4)
        hits = 0
        for seed in range(50):
            cfg = SwarmConfig(
                population=20, max_iterations=200, seed=seed, target_fitness=2.0
            )
            report = solve(problem, cfg)
            if report.best_path.valid and report.best_path.total_weight == 2.0:
                hits += 1
        assert hits >= 45

    def test_single_edge_graph_immediate(self):
        g = WeightedGraph(2, [(0, 1, 4.5)])
        cfg = SwarmConfig(population=5, max_iterations=10, seed=3, target_fitness=4.5)
        report = solve(RoutingProblem(g, 0, 1), cfg)
        assert report.iterations_run == 0
        assert report.best_path.total_weight == 4.5
        assert report.invalid_decode_count == 0

    def test_target_fitness_early_exit(self, five_node_graph):
        problem = RoutingProblem(five_node_graph, 0, 4)
        exact = shortest_path(five_node_graph, 0, 4).total_weight
        cfg = SwarmConfig(population=20, max_iterations=300, seed=1, target_fitness=exact)
        report = solve(problem, cfg)
        assert report.iterations_run <= 300
        assert report.gbest_trace[-1] <= exact

    def test_deterministic_reports(self, five_node_graph):
        problem = RoutingProblem(five_node_graph, 0, 4)
        cfg = SwarmConfig(population=15, max_iterations=60, seed=21)
        a = solve(problem, cfg)
        b = solve(problem, cfg)
        assert a == b  # wall_time excluded from comparison
        assert a.gbest_trace == b.gbest_trace

    def test_trace_non_increasing_and_matches_best(self, five_node_graph):
        problem = RoutingProblem(five_node_graph, 0, 3)
        for seed in range(10):
            report = solve(problem, SwarmConfig(population=10, max_iterations=40, seed=seed))
            trace = report.gbest_trace
            assert all(x >= y for x, y in zip(trace, trace[1:]))
            assert len(trace) == report.iterations_run + 1
            if report.best_path.valid:
                assert report.best_path.total_weight == trace[-1]

    def test_no_invalid_decodes_on_complete_graph(self):
        rng = np.random.default_rng(55)
        g = complete_graph(rng, 8)
        report = solve(
            RoutingProblem(g, 0, 7), SwarmConfig(population=10, max_iterations=30, seed=9)
        )
        assert report.invalid_decode_count == 0

    def test_never_beats_exact(self, five_node_graph):
        exact = shortest_path(five_node_graph, 0, 4).total_weight
        for seed in range(20):
            report = solve(
                RoutingProblem(five_node_graph, 0, 4),
                SwarmConfig(population=8, max_iterations=50, seed=seed),
            )
            if report.best_path.valid:
                assert report.best_path.total_weight >= exact - 1e-9


class TestJitter:
    def test_negative_amplitude_rejected(self):
        with pytest.raises(ValueError):
            JitterConfig(-0.1)

    def test_zero_amplitude_overlay_equals_base(self, five_node_graph):
        path = shortest_path(five_node_graph, 0, 4)
        overlay = apply_weight_jitter(
            five_node_graph, path, JitterConfig(0.0), np.random.default_rng(1)
        )
        for (a, b), w in overlay.items():
            assert w == five_node_graph.edge_weight(a, b)

    def test_overlay_reproducible(self, five_node_graph):
        path = shortest_path(five_node_graph, 0, 4)
        one = apply_weight_jitter(five_node_graph, path, JitterConfig(0.5), np.random.default_rng(2))
        two = apply_weight_jitter(five_node_graph, path, JitterConfig(0.5), np.random.default_rng(2))
        assert one == two

    def test_overlay_never_negative(self):
        g = WeightedGraph(3, [(0, 1, 5.0), (1, 2, 5.0)])
        path = shortest_path(g, 0, 2)
        rng = np.random.default_rng(3)
        for _ in range(200):
            overlay = apply_weight_jitter(g, path, JitterConfig(2.0), rng)
            assert all(w >= 0.0 for w in overlay.values())

    def test_graph_not_mutated(self, five_node_graph):
        path = shortest_path(five_node_graph, 0, 4)
        apply_weight_jitter(five_node_graph, path, JitterConfig(1.0), np.random.default_rng(4))
        assert all(e.weight == 1.0 for e in five_node_graph.edges())

    def test_overlay_covers_both_orientations(self, five_node_graph):
        path = shortest_path(five_node_graph, 0, 4)
        overlay = apply_weight_jitter(
            five_node_graph, path, JitterConfig(0.5), np.random.default_rng(5)
        )
        for a, b in zip(path.nodes, path.nodes[1:]):
            assert (a, b) in overlay and (b, a) in overlay
            assert overlay[(a, b)] == overlay[(b, a)]

    def test_overlay_path_weight_falls_back_to_base(self, five_node_graph):
        nodes = (0, 1, 4)
        assert overlay_path_weight(five_node_graph, nodes, {}) == 2.0
        assert overlay_path_weight(five_node_graph, nodes, {(0, 1): 0.25}) == 1.25

    def test_solve_with_jitter_deterministic(self, five_node_graph):
        problem = RoutingProblem(five_node_graph, 0, 4)
        cfg = SwarmConfig(population=10, max_iterations=30, seed=12)
        a = solve(problem, cfg, JitterConfig(0.4))
        b = solve(problem, cfg, JitterConfig(0.4))
        assert a == b

    def test_zero_amplitude_matches_no_jitter(self, five_node_graph):
        # jitter draws come from their own stream, so amplitude 0 must
        # reproduce the jitter-free trajectory exactly
        problem = RoutingProblem(five_node_graph, 0, 4)
        cfg = SwarmConfig(population=10, max_iterations=30, seed=12)
        plain = solve(problem, cfg)
        zero = solve(problem, cfg, JitterConfig(0.0))
        assert plain.gbest_trace == zero.gbest_trace
        assert plain.best_path == zero.best_path


class TestReportFormat:
    def test_key_order_and_values(self, five_node_graph):
        problem = RoutingProblem(five_node_graph, 0, 4)
        cfg = SwarmConfig(population=10, max_iterations=20, seed=7)
        report = solve(problem, cfg)
        text = format_run_report(problem, report)
        keys = [line.split("=", 1)[0] for line in text.strip().splitlines()]
        assert keys == [
            "origin",
            "destination",
            "valid",
            "path",
            "weight",
            "iterations_run",
            "invalid_decodes",
            "seed",
            "population",
            "max_iterations",
            "inertia_w",
            "cognitive_c1",
            "social_c2",
            "vmax",
            "gbest_trace",
        ]
        record = dict(line.split("=", 1) for line in text.strip().splitlines())
        assert record["origin"] == "1" and record["destination"] == "5"
        assert record["valid"] == "true"
        assert record["seed"] == "7"

    def test_timing_line_is_opt_in(self, five_node_graph):
        problem = RoutingProblem(five_node_graph, 0, 4)
        report = solve(problem, SwarmConfig(population=5, max_iterations=5, seed=1))
        assert "wall_time_ms" not in format_run_report(problem, report)
        timed = format_run_report(problem, report, include_timing=True)
        assert timed.strip().splitlines()[-1].startswith("wall_time_ms=")

    def test_jitter_amplitude_echoed(self, five_node_graph):
        problem = RoutingProblem(five_node_graph, 0, 4)
        jitter = JitterConfig(0.25)
        report = solve(problem, SwarmConfig(population=5, max_iterations=5, seed=1), jitter)
        assert "jitter_amplitude=0.25" in format_run_report(problem, report, jitter)
