"""Forward fractional-knapsack solver and the optimality-criterion checker.

The checker is the contract every inverse solver certifies against: a 0/1
vector is optimal for the fractional relaxation exactly when it spends the
budget to the last unit and every selected item's profit density is at least
every unselected item's.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .core import (
    BinarySolution,
    FkpInstance,
    FractionalSolution,
    LengthMismatch,
    ratio_of,
)


class Verdict(Enum):
    OPTIMAL = "optimal"
    BUDGET_MISMATCH = "budget_mismatch"
    RATIO_VIOLATION = "ratio_violation"


@dataclass(frozen=True)
class OptimalityReport:
    """Checker outcome: the verdict, the budget usage, and a violating pair if any.

    ``witness`` is a 0-based pair (i, j) with x*_i = 1, x*_j = 0 and
    ratio_i < ratio_j; it is present exactly when the verdict is
    RATIO_VIOLATION.
    """

    verdict: Verdict
    lhs_sum: int
    witness: tuple[int, int] | None = None

    @property
    def is_optimal(self) -> bool:
        return self.verdict is Verdict.OPTIMAL


def greedy_in_order(inst: FkpInstance, order: Sequence[int]) -> tuple[FractionalSolution, Fraction]:
    """Run the greedy fill taking items in the given index order.

    Takes each item fully while it fits, then at most one fractional piece;
    used by :func:`solve_greedy` with the ratio order and by the exhaustive
    forward oracle with every permutation.
    """
    values: list[Fraction] = [Fraction(0)] * inst.n
    remaining = inst.budget
    for i in order:
        if remaining <= 0:
            break
        cost = inst.items[i].cost
        if cost <= remaining:
            values[i] = Fraction(1)
            remaining -= cost
        else:
            values[i] = Fraction(remaining, cost)
            remaining = 0
    objective = sum(
        (inst.items[i].profit * values[i] for i in range(inst.n)), start=Fraction(0)
    )
    return FractionalSolution(tuple(values)), objective


def solve_greedy(inst: FkpInstance) -> tuple[FractionalSolution, Fraction]:
    """Optimal fractional solution by decreasing profit density.

    Ties between equal ratios are broken toward the lower index, which keeps
    the output deterministic; any tie order is optimal. If the whole item set
    fits in the budget the result is all ones.
    """
    order = sorted(range(inst.n), key=lambda i: ratio_of(inst.items[i]), reverse=True)
    return greedy_in_order(inst, order)


def check_optimality(inst: FkpInstance, x_star: BinarySolution) -> OptimalityReport:
    """Decide whether the 0/1 vector is optimal for the fractional relaxation.

    Condition (i), exact budget equality, is checked before condition (ii),
    the density ordering between selected and unselected items. The witness
    reported for a density violation is the (min-ratio selected, max-ratio
    unselected) pair, lowest indices first on ties.
    """
    if len(x_star.values) != inst.n:
        raise LengthMismatch(
            f"instance has {inst.n} items but x_star has {len(x_star.values)} entries"
        )
    lhs_sum = sum(inst.items[i].cost for i in x_star.ones())
    if lhs_sum != inst.budget:
        return OptimalityReport(Verdict.BUDGET_MISMATCH, lhs_sum)

    ones = x_star.ones()
    zeros = x_star.zeros()
    if not ones or not zeros:
        return OptimalityReport(Verdict.OPTIMAL, lhs_sum)
    i_min = min(ones, key=lambda i: ratio_of(inst.items[i]))
    j_max = max(zeros, key=lambda j: ratio_of(inst.items[j]))
    if ratio_of(inst.items[i_min]) < ratio_of(inst.items[j_max]):
        return OptimalityReport(Verdict.RATIO_VIOLATION, lhs_sum, (i_min, j_max))
    return OptimalityReport(Verdict.OPTIMAL, lhs_sum)
