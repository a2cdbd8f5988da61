"""Turn a per-node priority vector into a concrete path.

The walk starts at the origin and repeatedly moves to the unvisited
neighbor of the current node holding the highest priority value (ties go
to the lowest node id). Reaching the destination is a success; running out
of unvisited neighbors is a dead end, reported as an invalid PathResult
for the caller to penalize. There is no backtracking by design: a cheap
fail-fast keeps invalid decodes from eating compute.

Only the relative order of priorities matters, so any strictly monotone
transform of the vector decodes to the identical path.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import inf

import numpy as np

from .graph import PathResult, WeightedGraph

OUTCOME_SUCCESS = "success"
OUTCOME_DEAD_END = "dead_end"

MASK_CELL = "●"  # '●' marks visited nodes in trace tables


@dataclass(frozen=True)
class DecodeStep:
    """One selection: step 0 places the origin, later steps pick a node."""

    index: int
    chosen: int
    partial_path: tuple[int, ...]


@dataclass(frozen=True)
class DecodeTrace:
    steps: tuple[DecodeStep, ...]
    outcome: str  # OUTCOME_SUCCESS or OUTCOME_DEAD_END


def decode(
    priorities,
    g: WeightedGraph,
    origin: int,
    destination: int,
) -> tuple[PathResult, DecodeTrace]:
    """Greedy highest-priority walk from origin toward destination.

    Args:
        priorities: real vector, one component per graph node.
        g: the graph to walk.
        origin: start node (0-based).
        destination: target node (0-based).

    Returns:
        (PathResult, DecodeTrace). On a dead end the PathResult carries the
        nodes reached so far, infinite weight, and valid=False.

    Raises:
        ValueError: wrong priority dimension or NaN priorities.
        GraphError: origin or destination out of range.
    """
    vec = np.asarray(priorities, dtype=float)
    if vec.ndim != 1 or vec.shape[0] != g.node_count:
        raise ValueError(
            f"priority vector has shape {vec.shape}, expected ({g.node_count},)"
        )
    if np.isnan(vec).any():
        raise ValueError("priority vector contains NaN")
    g.check_node(origin)
    g.check_node(destination)

    visited = [False] * g.node_count
    visited[origin] = True
    path = [origin]
    steps = [DecodeStep(0, origin, (origin,))]
    if origin == destination:
        return PathResult((origin,), 0.0, True), DecodeTrace(tuple(steps), OUTCOME_SUCCESS)

    weight = 0.0
    current = origin
    while True:
        chosen = -1
        chosen_weight = 0.0
        best_priority = -inf
        # Neighbors come back sorted by id, so a strict > keeps the lowest
        # id on priority ties.
        for v, w in g.neighbors(current):
            if not visited[v] and vec[v] > best_priority:
                best_priority = vec[v]
                chosen = v
                chosen_weight = w
        if chosen < 0:
            return (
                PathResult(tuple(path), inf, False),
                DecodeTrace(tuple(steps), OUTCOME_DEAD_END),
            )
        visited[chosen] = True
        path.append(chosen)
        weight += chosen_weight
        steps.append(DecodeStep(len(steps), chosen, tuple(path)))
        if chosen == destination:
            return (
                PathResult(tuple(path), weight, True),
                DecodeTrace(tuple(steps), OUTCOME_SUCCESS),
            )
        current = chosen


def format_trace(priorities, trace: DecodeTrace) -> str:
    """Render a decode trace as a text table.

    One column per node (1-based header), a row with the raw priorities,
    then a row per step with visited nodes masked by '●' and the partial
    path appended. Ends with an outcome line.
    """
    from .graph import format_weight

    vec = np.asarray(priorities, dtype=float)
    n = vec.shape[0]
    prio_cells = [format_weight(float(x)) for x in vec]

    rows: list[tuple[str, list[str], str]] = []
    rows.append(("node", [str(i + 1) for i in range(n)], ""))
    rows.append(("priority", prio_cells, ""))
    for s in trace.steps:
        masked = set(s.partial_path)
        cells = [MASK_CELL if i in masked else prio_cells[i] for i in range(n)]
        path_text = " ".join(str(v + 1) for v in s.partial_path)
        rows.append((f"i{s.index}", cells, f"path: {path_text}"))

    label_w = max(len(r[0]) for r in rows)
    col_w = [
        max(len(rows[r][1][i]) for r in range(len(rows))) for i in range(n)
    ]
    lines = []
    for label, cells, suffix in rows:
        parts = [label.ljust(label_w)]
        parts += [cells[i].rjust(col_w[i]) for i in range(n)]
        line = "  ".join(parts)
        if suffix:
            line += "    " + suffix
        lines.append(line.rstrip())
    lines.append(f"outcome: {trace.outcome}")
    return "\n".join(lines) + "\n"
