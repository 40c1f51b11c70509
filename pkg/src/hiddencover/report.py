"""Benchmark report: predicate-count scaling table, CSV and figure output."""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass

from .generators import GenConfig, gen_funnel
from .solvers import solve_funnel, solve_funnel_vertices


@dataclass
class BenchRow:
    n: int
    instances: int
    full_predicates: int
    vertex_predicates: int
    full_seconds: float
    vertex_seconds: float

    @property
    def predicates_per_vertex(self) -> float:
        return self.full_predicates / (self.n * self.instances)


def run_bench(sizes: list[int], seed: int, reps: int = 5) -> list[BenchRow]:
    """Solve `reps` generated funnels per size; predicate counts are summed
    so the per-doubling ratio estimates the growth exponent.

    The same sub-seed is reused across sizes (common random numbers), so the
    instances at different sizes share their combinatorial structure and the
    ratio isolates growth in n rather than instance-to-instance variance.
    """
    rows = []
    for size in sizes:
        full_pred = vert_pred = 0
        full_sec = vert_sec = 0.0
        for r in range(reps):
            funnel = gen_funnel(GenConfig(n=size, seed=seed * 1_000_003 + 97 * r))
            t0 = time.perf_counter()
            sol = solve_funnel(funnel)
            full_sec += time.perf_counter() - t0
            full_pred += sol.stats.predicate_evaluations
            t0 = time.perf_counter()
            vsol = solve_funnel_vertices(funnel)
            vert_sec += time.perf_counter() - t0
            vert_pred += vsol.stats.predicate_evaluations
        rows.append(BenchRow(size, reps, full_pred, vert_pred, full_sec, vert_sec))
    return rows


def format_table(rows: list[BenchRow]) -> str:
    header = (f"{'n':>8} {'inst':>5} {'full_preds':>12} {'ratio':>7} "
              f"{'vert_preds':>12} {'ratio':>7} {'full_s':>9} {'vert_s':>9}")
    out = [header, "-" * len(header)]
    prev = None
    for row in rows:
        fr = f"{row.full_predicates / prev.full_predicates:.3f}" if prev else "-"
        vr = f"{row.vertex_predicates / prev.vertex_predicates:.3f}" if prev else "-"
        out.append(f"{row.n:>8} {row.instances:>5} {row.full_predicates:>12} {fr:>7} "
                   f"{row.vertex_predicates:>12} {vr:>7} "
                   f"{row.full_seconds:>9.4f} {row.vertex_seconds:>9.4f}")
        prev = row
    return "\n".join(out)


def write_csv(rows: list[BenchRow], path: str) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "instances", "full_predicates", "vertex_predicates",
                         "full_seconds", "vertex_seconds"])
        for row in rows:
            writer.writerow([row.n, row.instances, row.full_predicates,
                             row.vertex_predicates,
                             f"{row.full_seconds:.6f}", f"{row.vertex_seconds:.6f}"])


def write_figure(rows: list[BenchRow], path: str) -> None:
    """Log-log scaling plot of predicate counts with a slope-1 reference."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ns = [row.n for row in rows]
    full = [row.full_predicates / row.instances for row in rows]
    vert = [row.vertex_predicates / row.instances for row in rows]
    fig, ax = plt.subplots(figsize=(6, 4.5))
    ax.loglog(ns, full, "o-", label="hidden set + cover")
    ax.loglog(ns, vert, "s-", label="vertex variant")
    ref = [full[0] * n / ns[0] for n in ns]
    ax.loglog(ns, ref, "k--", linewidth=0.8, label="linear reference")
    ax.set_xlabel("vertices n")
    ax.set_ylabel("predicate evaluations per instance")
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
