"""Benchmark runner producing a CSV of solve times plus a scaling figure.

Instances come from a dedicated profile that is feasible by construction at
any size (every unselected item can be cut to density 1/cost, every selected
item raised past density 1), so the threshold scan always does full work and
the timings reflect the quadratic behaviour rather than early exits.
"""

from __future__ import annotations

import csv
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .core import (
    BinarySolution,
    CostWeights,
    FkpInstance,
    InvariantViolation,
    InverseInstance,
    Item,
    ModificationBounds,
    Norm,
    SolutionStatus,
)
from .inverse_l1 import ScanMode, solve_fifkp
from .inverse_linf import solve_linf

CSV_HEADER = ("n", "norm", "mode", "seed", "objective", "elapsed_ns")


@dataclass(frozen=True)
class BenchRecord:
    """One timed solve: sizes, configuration, exact objective, wall time."""

    n: int
    norm: str
    mode: str
    seed: int
    objective: str
    elapsed_ns: int

    def __post_init__(self) -> None:
        if self.elapsed_ns < 0:
            raise InvariantViolation("elapsed_ns must be nonnegative")


def bench_instance(n: int, seed: int, norm: Norm) -> InverseInstance:
    """Size-n instance of the benchmark profile, deterministic under the seed.

    Profits are uniform on [1, 100] and costs on [2, 100]; every selected
    item may raise its profit by four times its cost and every unselected
    item may cut its profit to 1, which pins the feasible threshold band to
    a superset of [1/2, 4] and leaves most item densities inside the scan
    interval, so the threshold scan touches a constant fraction of all
    (candidate, item) pairs. The l-infinity profile additionally moves costs
    by up to 3. The first item is always selected and the last always
    unselected so both sides are populated, and the budget equals the
    selected spending.
    """
    if n < 2:
        raise InvariantViolation("the benchmark profile needs n >= 2")
    rng = random.Random(seed)
    profits = [rng.randint(1, 100) for _ in range(n)]
    costs = [rng.randint(2, 100) for _ in range(n)]
    x = [rng.randint(0, 1) for _ in range(n)]
    x[0], x[-1] = 1, 0
    u_bar = [4 * costs[i] for i in range(n)]
    v_bar = [profits[i] - 1 for i in range(n)]
    if norm is Norm.LINF:
        lambda_bar = [rng.randint(0, 3) for _ in range(n)]
        mu_bar = [rng.randint(0, min(3, costs[i] - 1)) for i in range(n)]
    else:
        lambda_bar = [0] * n
        mu_bar = [0] * n
    weights = CostWeights(
        tuple(Fraction(rng.randint(1, 3)) for _ in range(n)),
        (Fraction(1),) * n,
    )
    budget = sum(costs[i] for i in range(n) if x[i])
    return InverseInstance(
        base=FkpInstance(tuple(Item(p, c) for p, c in zip(profits, costs)), budget),
        x_star=BinarySolution(tuple(x)),
        bounds=ModificationBounds(tuple(u_bar), tuple(v_bar), tuple(lambda_bar), tuple(mu_bar)),
        weights=weights,
        norm=norm,
    )


def run_bench(
    n_list: Sequence[int],
    norms: Sequence[str] = ("l1",),
    modes: Sequence[str] = ("paper",),
    seed: int = 0,
    out: Path | str | None = None,
) -> list[BenchRecord]:
    """Time one solve per (n, norm, mode) and optionally write the CSV.

    The CSV has the exact header ``n,norm,mode,seed,objective,elapsed_ns``
    and LF line endings. All modes of one (n, norm) pair share one instance
    (seeded by the run seed plus the pair index) so their objectives are
    comparable; the mode column is recorded for every row but only steers
    the l1 solver. Reruns with one seed reproduce the objective column.
    """
    records: list[BenchRecord] = []
    pair_index = 0
    for n in n_list:
        for norm_name in norms:
            norm = Norm(norm_name)
            inst_seed = seed + pair_index
            pair_index += 1
            inst = bench_instance(n, inst_seed, norm)
            for mode in modes:
                start = time.perf_counter_ns()
                if norm is Norm.L1:
                    result = solve_fifkp(inst, mode)  # type: ignore[arg-type]
                else:
                    result = solve_linf(inst)
                elapsed = time.perf_counter_ns() - start
                objective = (
                    str(result.objective)
                    if result.status is SolutionStatus.OPTIMAL
                    else "infeasible"
                )
                records.append(BenchRecord(n, norm_name, mode, inst_seed, objective, elapsed))
    if out is not None:
        write_csv(records, out)
    return records


def write_csv(records: Iterable[BenchRecord], out: Path | str) -> None:
    with open(out, "w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in records:
            writer.writerow([r.n, r.norm, r.mode, r.seed, r.objective, r.elapsed_ns])


def plot_scaling(records: Sequence[BenchRecord], out: Path | str) -> None:
    """Render elapsed time against n, one line per (norm, mode), to a file.

    A slope-2 guide through the first point of each series makes quadratic
    growth readable at a glance. Matplotlib is imported lazily so the solver
    paths never pay for it.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    groups: dict[tuple[str, str], list[BenchRecord]] = {}
    for r in records:
        groups.setdefault((r.norm, r.mode), []).append(r)

    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    for (norm, mode), rs in sorted(groups.items()):
        rs = sorted(rs, key=lambda r: r.n)
        ns = [r.n for r in rs]
        secs = [r.elapsed_ns / 1e9 for r in rs]
        ax.plot(ns, secs, marker="o", label=f"{norm}/{mode}")
        if len(ns) >= 2 and secs[0] > 0:
            guide = [secs[0] * (n / ns[0]) ** 2 for n in ns]
            ax.plot(ns, guide, linestyle=":", color="gray", linewidth=1)
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("items")
    ax.set_ylabel("seconds")
    ax.set_title("inverse solve time (dotted: quadratic guide)")
    ax.legend()
    fig.tight_layout()
    fig.savefig(out, dpi=120)
    plt.close(fig)
