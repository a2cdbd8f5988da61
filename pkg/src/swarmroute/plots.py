"""Figure rendering for run reports and bench suites.

Kept separate from the text/CSV emitters: those stay byte-reproducible,
figures are an opt-in view on the same data. matplotlib is imported
lazily so the CLI only pays for it when a plot is requested.
"""

from __future__ import annotations

import math
from pathlib import Path

from .bench import SuiteResult
from .router import RunReport


def _pyplot():
    import matplotlib

    matplotlib.use("Agg", force=False)
    import matplotlib.pyplot as plt

    return plt


def plot_convergence(report: RunReport, out_path) -> Path:
    """Render the per-iteration best-fitness trace to an image file."""
    plt = _pyplot()
    out = Path(out_path)
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.step(range(len(report.gbest_trace)), report.gbest_trace, where="post")
    ax.set_xlabel("iteration")
    ax.set_ylabel("best fitness (path weight)")
    ax.set_title(
        f"swarm convergence ({report.iterations_run} iterations, "
        f"final {report.gbest_trace[-1]:g})"
    )
    ax.grid(True, alpha=0.4)
    fig.tight_layout()
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return out


def plot_suite(suite: SuiteResult, out_dir) -> list[Path]:
    """Render suite-level figures into a directory.

    Writes a per-instance success-rate bar chart and a histogram of
    iterations-to-optimum over the successful runs. Returns the written
    paths (empty if the suite has no results).
    """
    if not suite.results:
        return []
    plt = _pyplot()
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    per_instance: dict[int, list[bool]] = {}
    for r in suite.results:
        per_instance.setdefault(r.instance_id, []).append(r.success)
    ids = sorted(per_instance)
    rates = [sum(per_instance[i]) / len(per_instance[i]) for i in ids]

    fig, ax = plt.subplots(figsize=(8, 4))
    ax.bar(ids, rates, width=0.8)
    ax.set_xlabel("instance id")
    ax.set_ylabel("success rate")
    ax.set_ylim(0, 1.05)
    overall = suite.summary.success_rate
    if not math.isnan(overall):
        ax.axhline(overall, linestyle="--", linewidth=1, label=f"overall {overall:.3f}")
        ax.legend()
    ax.set_title("optimum-hit rate per instance")
    fig.tight_layout()
    path = out / "suite_success_rate.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    written.append(path)

    iters = [
        r.iterations_to_optimum
        for r in suite.results
        if r.iterations_to_optimum is not None
    ]
    fig, ax = plt.subplots(figsize=(8, 4))
    if iters:
        ax.hist(iters, bins=min(30, max(5, len(set(iters)))), edgecolor="black")
    ax.set_xlabel("iterations to optimum")
    ax.set_ylabel("runs")
    ax.set_title(f"iterations to optimum over {len(iters)} successful runs")
    fig.tight_layout()
    path = out / "suite_iters_to_opt.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    written.append(path)
    return written
