"""Weighted-graph data model and the edge-list text file format.

Nodes are 0-based integers internally; the text format and the CLI use
1-based ids. Graphs are immutable once constructed and safe to share
between threads or worker processes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable


class GraphError(ValueError):
    """Invalid graph input: bad endpoint, weight, or edge."""


class GraphFormatError(ValueError):
    """Malformed graph file. Carries the offending 1-based line number."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    weight: float


@dataclass(frozen=True)
class PathResult:
    """A walk outcome: node sequence, its summed weight, and validity.

    Invalid results (unreachable target, dead-ended decode) carry the
    nodes reached so far and an infinite weight; consumers that need a
    finite penalty substitute their own.
    """

    nodes: tuple[int, ...]
    total_weight: float
    valid: bool


class WeightedGraph:
    """Simple graph (no self-loops, no parallel edges) with non-negative
    finite edge weights.

    Adjacency lists are stored sorted by neighbor id. This pins every
    downstream tie-break (path decoding, shortest-path candidate order)
    to one deterministic ordering.
    """

    __slots__ = ("node_count", "directed", "edge_count", "_adj", "_weights")

    def __init__(
        self,
        node_count: int,
        edges: Iterable[tuple[int, int, float]] = (),
        directed: bool = False,
    ):
        if node_count < 1:
            raise GraphError(f"node_count must be a positive integer, got {node_count!r}")
        self.node_count = int(node_count)
        self.directed = bool(directed)

        weights: dict[tuple[int, int], float] = {}
        count = 0
        for u, v, w in edges:
            w = float(w)
            if not (0 <= u < node_count) or not (0 <= v < node_count):
                raise GraphError(
                    f"edge ({u}, {v}) has an endpoint outside 0..{node_count - 1}"
                )
            if u == v:
                raise GraphError(f"self-loop ({u}, {v}) not allowed")
            if not math.isfinite(w) or w < 0:
                raise GraphError(
                    f"edge ({u}, {v}) has weight {w!r}; weights must be finite and >= 0"
                )
            if (u, v) in weights:
                raise GraphError(f"duplicate edge ({u}, {v})")
            weights[(u, v)] = w
            if not directed:
                weights[(v, u)] = w
            count += 1
        self.edge_count = count
        self._weights = weights

        adj: list[list[tuple[int, float]]] = [[] for _ in range(node_count)]
        for (u, v), w in weights.items():
            adj[u].append((v, w))
        self._adj = tuple(tuple(sorted(nbrs)) for nbrs in adj)

    def check_node(self, u: int) -> None:
        if not (0 <= u < self.node_count):
            raise GraphError(f"node {u} outside 0..{self.node_count - 1}")

    def neighbors(self, u: int) -> tuple[tuple[int, float], ...]:
        """Adjacency of ``u`` as (neighbor, weight) pairs, ascending by id."""
        self.check_node(u)
        return self._adj[u]

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._weights

    def edge_weight(self, u: int, v: int) -> float:
        try:
            return self._weights[(u, v)]
        except KeyError:
            raise GraphError(f"no edge ({u}, {v})") from None

    def edges(self) -> list[Edge]:
        """Canonical edge list: u < v for undirected graphs, sorted by (u, v)."""
        if self.directed:
            pairs = sorted(self._weights)
        else:
            pairs = sorted(pair for pair in self._weights if pair[0] < pair[1])
        return [Edge(u, v, self._weights[(u, v)]) for u, v in pairs]

    def total_edge_weight(self) -> float:
        return math.fsum(e.weight for e in self.edges())

    def is_connected(self) -> bool:
        """True iff every node is reachable from node 0, ignoring direction."""
        if self.directed:
            undirected: list[set[int]] = [set() for _ in range(self.node_count)]
            for u, v in self._weights:
                undirected[u].add(v)
                undirected[v].add(u)
            reach = undirected.__getitem__
        else:
            adj = self._adj

            def reach(u: int):
                return (v for v, _ in adj[u])

        seen = [False] * self.node_count
        seen[0] = True
        stack = [0]
        while stack:
            u = stack.pop()
            for v in reach(u):
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        return all(seen)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return (
            self.node_count == other.node_count
            and self.directed == other.directed
            and self._weights == other._weights
        )

    def __repr__(self) -> str:
        kind = "directed" if self.directed else "undirected"
        return f"WeightedGraph({self.node_count} nodes, {self.edge_count} edges, {kind})"


def format_weight(w: float) -> str:
    """Render a weight compactly: integral values without a trailing .0,
    everything else via repr (which round-trips through float())."""
    if not math.isfinite(w):
        return "nan" if math.isnan(w) else ("inf" if w > 0 else "-inf")
    if w == int(w) and abs(w) < 1e15:
        return str(int(w))
    return repr(w)


def format_graph(g: WeightedGraph) -> str:
    """Serialize to the canonical text form: header, then edges sorted by
    (u, v) with 1-based ids. Parsing this text reproduces the graph."""
    kind = "d" if g.directed else "u"
    lines = [f"p {g.node_count} {g.edge_count} {kind}"]
    for e in g.edges():
        lines.append(f"{e.u + 1} {e.v + 1} {format_weight(e.weight)}")
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> WeightedGraph:
    """Parse the edge-list text format.

    The format is line-oriented UTF-8: '#' lines are comments, the first
    non-comment line is a header ``p <node_count> <edge_count> <u|d>``,
    followed by exactly ``edge_count`` lines ``<u> <v> <weight>`` with
    1-based node ids and decimal weights.
    """
    node_count = 0
    declared = 0
    directed = False
    saw_header = False
    edges: list[tuple[int, int, float]] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if not saw_header:
            if fields[0] != "p" or len(fields) != 4:
                raise GraphFormatError("expected header 'p <nodes> <edges> <u|d>'", line_no)
            try:
                node_count = int(fields[1])
                declared = int(fields[2])
            except ValueError:
                raise GraphFormatError("non-integer node or edge count in header", line_no) from None
            if fields[3] not in ("u", "d"):
                raise GraphFormatError(f"graph kind must be 'u' or 'd', got {fields[3]!r}", line_no)
            directed = fields[3] == "d"
            saw_header = True
            continue
        if len(fields) != 3:
            raise GraphFormatError("expected edge line '<u> <v> <weight>'", line_no)
        try:
            u, v = int(fields[0]), int(fields[1])
            w = float(fields[2])
        except ValueError:
            raise GraphFormatError(f"cannot parse edge line {line!r}", line_no) from None
        if u < 1 or v < 1 or u > node_count or v > node_count:
            raise GraphFormatError(f"node id out of range 1..{node_count} on edge ({u}, {v})", line_no)
        if not math.isfinite(w) or w < 0:
            raise GraphFormatError(f"negative or non-finite weight {fields[2]} on edge ({u}, {v})", line_no)
        edges.append((u - 1, v - 1, w))

    if not saw_header:
        raise GraphFormatError("missing header line 'p <nodes> <edges> <u|d>'")
    if len(edges) != declared:
        raise GraphFormatError(f"header declares {declared} edges, file has {len(edges)}")
    return WeightedGraph(node_count, edges, directed=directed)


def load_graph(path) -> WeightedGraph:
    """Read and parse a graph file from ``path``."""
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())
