"""Exact solvers: shortest path, minimum spanning trees, and a brute-force
path-enumeration oracle for testing.

All tie-breaks are pinned so results are identical across platforms:
equal-weight shortest paths resolve to the lexicographically smallest node
sequence, and MST candidate edges are ordered by (weight, u, v).
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

from .graph import Edge, GraphError, PathResult, WeightedGraph

# Simple-path enumeration is factorial in node count; hard cap.
BRUTE_FORCE_NODE_LIMIT = 12


@dataclass(frozen=True)
class MstResult:
    """Spanning tree edges (canonical (u, v) order) and their summed weight.

    A valid result has exactly node_count - 1 edges forming a single
    acyclic component; ``is_spanning_tree`` checks that with union-find.
    """

    edges: tuple[Edge, ...]
    total_weight: float


class UnionFind:
    """Disjoint sets over 0..n-1 with path compression and union by rank."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True


def shortest_path(g: WeightedGraph, origin: int, destination: int) -> PathResult:
    """Minimum-total-weight simple path from origin to destination.

    Expands a solved-node frontier through a priority queue holding
    (distance, path, node) labels, so the extraction order itself breaks
    weight ties toward the lexicographically smallest node sequence.
    Unreachable destinations yield ``valid=False`` with infinite weight.
    """
    g.check_node(origin)
    g.check_node(destination)
    if origin == destination:
        return PathResult((origin,), 0.0, True)

    finalized = [False] * g.node_count
    heap: list[tuple[float, tuple[int, ...], int]] = [(0.0, (origin,), origin)]
    while heap:
        dist, path, u = heapq.heappop(heap)
        if finalized[u]:
            continue
        if u == destination:
            return PathResult(path, dist, True)
        finalized[u] = True
        for v, w in g.neighbors(u):
            if not finalized[v]:
                heapq.heappush(heap, (dist + w, path + (v,), v))
    return PathResult((), math.inf, False)


def brute_force_shortest_path(g: WeightedGraph, origin: int, destination: int) -> PathResult:
    """Enumerate every simple origin->destination path and return the best
    (weight, node sequence) pair. Same tie-break as ``shortest_path``."""
    if g.node_count > BRUTE_FORCE_NODE_LIMIT:
        raise ValueError(
            f"brute force is limited to {BRUTE_FORCE_NODE_LIMIT} nodes, "
            f"graph has {g.node_count}"
        )
    g.check_node(origin)
    g.check_node(destination)
    if origin == destination:
        return PathResult((origin,), 0.0, True)

    best: tuple[float, tuple[int, ...]] | None = None
    visited = [False] * g.node_count
    visited[origin] = True
    prefix = [origin]

    def extend(u: int, dist: float) -> None:
        nonlocal best
        for v, w in g.neighbors(u):
            if visited[v]:
                continue
            d = dist + w
            # Prune strictly-worse prefixes only: equal-weight branches may
            # still win the lexicographic tie-break.
            if best is not None and d > best[0]:
                continue
            if v == destination:
                candidate = (d, tuple(prefix) + (v,))
                if best is None or candidate < best:
                    best = candidate
            else:
                visited[v] = True
                prefix.append(v)
                extend(v, d)
                prefix.pop()
                visited[v] = False

    extend(origin, 0.0)
    if best is None:
        return PathResult((), math.inf, False)
    return PathResult(best[1], best[0], True)


def _check_mst_input(g: WeightedGraph) -> None:
    if g.directed:
        raise GraphError("minimum spanning tree requires an undirected graph")
    if not g.is_connected():
        raise GraphError("graph is not connected; no spanning tree exists")


def _finish_mst(chosen: list[Edge]) -> MstResult:
    ordered = tuple(sorted(chosen, key=lambda e: (e.u, e.v)))
    # fsum is order-insensitive up to correct rounding, so two trees with the
    # same weight multiset report bit-identical totals.
    return MstResult(ordered, math.fsum(e.weight for e in ordered))


def prim_mst(g: WeightedGraph) -> MstResult:
    """Grow a spanning tree from node 0, always taking the lightest frontier
    edge; ties resolve by smallest (weight, u, v)."""
    _check_mst_input(g)
    in_tree = [False] * g.node_count
    in_tree[0] = True
    heap: list[tuple[float, int, int, int]] = []

    def push_frontier(u: int) -> None:
        for v, w in g.neighbors(u):
            if not in_tree[v]:
                a, b = (u, v) if u < v else (v, u)
                heapq.heappush(heap, (w, a, b, v))

    push_frontier(0)
    chosen: list[Edge] = []
    while heap and len(chosen) < g.node_count - 1:
        w, a, b, v = heapq.heappop(heap)
        if in_tree[v]:
            continue
        in_tree[v] = True
        chosen.append(Edge(a, b, w))
        push_frontier(v)
    return _finish_mst(chosen)


def kruskal_mst(g: WeightedGraph) -> MstResult:
    """Scan edges in (weight, u, v) order, keeping those that join two
    different union-find components."""
    _check_mst_input(g)
    uf = UnionFind(g.node_count)
    chosen: list[Edge] = []
    for e in sorted(g.edges(), key=lambda e: (e.weight, e.u, e.v)):
        if uf.union(e.u, e.v):
            chosen.append(e)
            if len(chosen) == g.node_count - 1:
                break
    return _finish_mst(chosen)


def is_spanning_tree(edges, node_count: int) -> bool:
    """Union-find check: exactly n-1 edges, acyclic, one component."""
    if len(edges) != node_count - 1:
        return False
    uf = UnionFind(node_count)
    for e in edges:
        if not uf.union(e.u, e.v):
            return False  # cycle
    root = uf.find(0)
    return all(uf.find(v) == root for v in range(node_count))
