"""Uniform-cost inverse solver under the l-infinity norm.

The objective is the largest single modification anywhere. Everything
reduces to one monotone question, "do modifications of size at most K
suffice?", answered exactly by :func:`feasible_at`; the solver
binary-searches the smallest such K.

Within a budget K the test is exact because each choice decomposes:
unselected items take their maximal admissible profit cut and cost raise
(which can only lower the density bar T the selected items must clear),
selected items take their maximal profit raise, and what remains is the
vector of selected items' cost deltas. Each delta is confined to an
integer interval (cuts capped by the cut bound and by cost positivity,
raises capped by the raise bound and by the density headroom over T), and
the budget constraint fixes the deltas' total, so feasibility is exactly
"the required total lies between the interval sums". Note the interval
test deliberately allows cuts and raises to coexist across selected items:
a net-zero shuffle (cut a strangled item, raise a slack one) preserves
budget equality and is sometimes the only way to meet the bar, so any test
that fixes a single direction per case understates feasibility; the
exhaustive oracle confirms both the completeness of this test and the
incompleteness of the direction-restricted one.

The pairwise machinery for the spend-equals-budget case (the least uniform
budget reconciling one conflicting pair, selected costs held fixed) ships
as :func:`pairwise_min_budget`; by the shuffle observation above it bounds
the true optimum from above but does not always attain it. The
water-filling construction for spreading a gap at minimax size ships as
:func:`repair_level`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .core import (
    InfeasibleRepair,
    InvariantViolation,
    InverseInstance,
    InverseSolution,
    ModificationVector,
    Norm,
    NotLInf,
)


class Case(Enum):
    EQUAL = "equal"
    DEFICIT = "deficit"
    SURPLUS = "surplus"


@dataclass(frozen=True)
class CaseKind:
    """Which budget case the instance falls in, with the exact gap size.

    :func:`classify_case` emits a positive gap exactly for the deficit and
    surplus kinds; a hand-built zero-gap deficit or surplus is tolerated as
    the degenerate input of :func:`repair_level`.
    """

    kind: Case
    gap: int

    def __post_init__(self) -> None:
        if self.gap < 0:
            raise InvariantViolation("gap must be nonnegative")
        if self.kind is Case.EQUAL and self.gap != 0:
            raise InvariantViolation("the equal case has no gap")


@dataclass(frozen=True)
class RepairPlan:
    """Water-filling assignment covering a budget gap at minimax entry size.

    Items in ``full_set`` sit at their cap (all below ``level``);
    ``n_at_level`` members of ``level_set`` take ``level`` and the rest take
    ``level - 1``, so the total equals the gap exactly.
    """

    level: int
    full_set: frozenset[int]
    level_set: frozenset[int]
    n_at_level: int

    def __post_init__(self) -> None:
        if not 0 <= self.n_at_level <= len(self.level_set):
            raise InvariantViolation("n_at_level must lie in [0, |level_set|]")


def linf_objective(mods: ModificationVector) -> int:
    """Largest entry across all four modification vectors; 0 when all zero."""
    return max(
        max(mods.u, default=0),
        max(mods.v, default=0),
        max(mods.lam, default=0),
        max(mods.mu, default=0),
    )


def classify_case(inv: InverseInstance) -> CaseKind:
    """Equal, deficit, or surplus, by the sign of budget minus selected spending."""
    spent = sum(inv.base.items[i].cost for i in inv.x_star.ones())
    if spent == inv.base.budget:
        return CaseKind(Case.EQUAL, 0)
    if spent < inv.base.budget:
        return CaseKind(Case.DEFICIT, inv.base.budget - spent)
    return CaseKind(Case.SURPLUS, spent - inv.base.budget)


def threshold_at(inv: InverseInstance, budget: int) -> Fraction | None:
    """Lowest density bar the unselected items can be pushed to with entries <= budget.

    Each unselected item takes its maximal admissible profit cut and cost
    raise, both of which monotonically lower its density; the bar is the
    maximum of the results. None when there are no unselected items.
    """
    best: Fraction | None = None
    for j in inv.x_star.zeros():
        item = inv.base.items[j]
        num = item.profit - min(budget, inv.bounds.v_bar[j])
        den = item.cost + min(budget, inv.bounds.lambda_bar[j])
        dens = Fraction(num, den)
        if best is None or dens > best:
            best = dens
    return best


def _lifted_profit(inv: InverseInstance, i: int, budget: int) -> int:
    return inv.base.items[i].profit + min(budget, inv.bounds.u_bar[i])


def _cost_delta_intervals(
    inv: InverseInstance, budget: int, bar: Fraction | None
) -> list[tuple[int, int]] | None:
    """Per selected item, the integer interval of admissible cost deltas.

    A delta below 0 is a cut (capped by the cut bound and by cost
    positivity), above 0 a raise (capped by the raise bound and by the
    largest cost still clearing the density bar). None when some item cannot
    clear the bar even at its cheapest admissible cost.
    """
    intervals = []
    for i in inv.x_star.ones():
        item = inv.base.items[i]
        lo = -min(budget, inv.bounds.mu_bar[i], item.cost - 1)
        hi = min(budget, inv.bounds.lambda_bar[i])
        if bar is not None:
            p = _lifted_profit(inv, i, budget)
            # Largest cost with p / cost >= bar, as a delta against the current cost.
            headroom = (p * bar.denominator) // bar.numerator - item.cost
            hi = min(hi, headroom)
        if lo > hi:
            return None
        intervals.append((lo, hi))
    return intervals


def feasible_at(inv: InverseInstance, budget: int) -> bool:
    """Whether some in-bound vector with entries at most ``budget`` makes x_star optimal.

    Exact: a vector exists iff the required total cost change over selected
    items (budget minus their spending, possibly zero or negative) lies
    between the sums of the per-item delta intervals. Monotone in the
    budget: the bar only drops, the lifted profits only rise, and every
    interval only widens, which is what licenses the binary search in
    :func:`solve_linf`.
    """
    bar = threshold_at(inv, budget)
    intervals = _cost_delta_intervals(inv, budget, bar)
    if intervals is None:
        return False
    required = inv.base.budget - sum(inv.base.items[i].cost for i in inv.x_star.ones())
    low = sum(lo for lo, _ in intervals)
    high = sum(hi for _, hi in intervals)
    return low <= required <= high


def pairwise_min_budget(inv: InverseInstance, i: int, j: int) -> int | None:
    """Least uniform budget reconciling selected item i with unselected item j.

    0 when the pair is already ordered (so a maximum over all pairs is well
    defined), None when even the full caps cannot reconcile it. Applies to
    the equal case, where selected items' costs stay fixed.
    """
    if inv.x_star.values[i] != 1 or inv.x_star.values[j] != 0:
        raise InvariantViolation("pairwise budgets take a selected i and an unselected j")
    pi, ci = inv.base.items[i].profit, inv.base.items[i].cost
    pj, cj = inv.base.items[j].profit, inv.base.items[j].cost
    u_cap, v_cap, lam_cap = inv.bounds.u_bar[i], inv.bounds.v_bar[j], inv.bounds.lambda_bar[j]

    def ordered(k: int) -> bool:
        return (pi + min(k, u_cap)) * (cj + min(k, lam_cap)) >= (pj - min(k, v_cap)) * ci

    if ordered(0):
        return 0
    hi = max(u_cap, v_cap, lam_cap)
    if not ordered(hi):
        return None
    lo = 0
    while lo < hi:
        mid = (lo + hi) // 2
        if ordered(mid):
            hi = mid
        else:
            lo = mid + 1
    return lo


def repair_level(inv: InverseInstance, kind: CaseKind) -> RepairPlan:
    """Smallest uniform level whose capped sum over selected items covers the gap.

    Deficit repairs raise selected costs within their raise caps; surplus
    repairs cut them within their cut caps (never below cost 1). The plan
    fills every item capped below the level, puts ``n_at_level`` items at the
    level and the rest of the level set one below, totalling the gap exactly;
    no assignment within the caps can cover the gap with a smaller maximum.
    """
    if kind.kind is Case.EQUAL:
        raise InvariantViolation("repair plans apply to deficit or surplus cases only")
    ones = inv.x_star.ones()
    if kind.kind is Case.DEFICIT:
        caps = {i: inv.bounds.lambda_bar[i] for i in ones}
    else:
        caps = {i: min(inv.bounds.mu_bar[i], inv.base.items[i].cost - 1) for i in ones}
    gap = kind.gap
    if gap == 0:
        return RepairPlan(0, frozenset(), frozenset(), 0)
    total = sum(caps.values())
    if total < gap:
        raise InfeasibleRepair(f"caps sum to {total}, less than the gap {gap}")

    def covered(level: int) -> int:
        return sum(min(cap, level) for cap in caps.values())

    lo, hi = 1, max(caps.values())
    while lo < hi:
        mid = (lo + hi) // 2
        if covered(mid) >= gap:
            hi = mid
        else:
            lo = mid + 1
    level = lo
    full = frozenset(i for i, cap in caps.items() if cap < level)
    level_set = frozenset(i for i, cap in caps.items() if cap >= level)
    n_at_level = gap - covered(level - 1)
    return RepairPlan(level, full, level_set, n_at_level)


def _extract(inv: InverseInstance, budget: int) -> ModificationVector:
    """One modification vector witnessing feasibility at the given budget.

    Unselected items take their maximal cuts and raises, selected items
    their maximal profit lifts; the selected cost deltas are any in-interval
    assignment totalling the required cost change, all of which are
    objective-equivalent under the uniform-cost norm.
    """
    n = inv.n
    u = [0] * n
    v = [0] * n
    lam = [0] * n
    mu = [0] * n
    for j in inv.x_star.zeros():
        v[j] = min(budget, inv.bounds.v_bar[j])
        lam[j] = min(budget, inv.bounds.lambda_bar[j])
    for i in inv.x_star.ones():
        u[i] = min(budget, inv.bounds.u_bar[i])

    bar = threshold_at(inv, budget)
    intervals = _cost_delta_intervals(inv, budget, bar)
    assert intervals is not None, "extraction requires a feasible budget"
    ones = list(inv.x_star.ones())
    required = inv.base.budget - sum(inv.base.items[i].cost for i in ones)
    # Start each delta at the in-interval point nearest zero, then push
    # greedily (ascending index) toward the ends until the total matches.
    deltas = [min(max(lo, 0), hi) for lo, hi in intervals]
    remaining = required - sum(deltas)
    for k, (lo, hi) in enumerate(intervals):
        if remaining == 0:
            break
        if remaining > 0:
            step = min(remaining, hi - deltas[k])
            deltas[k] += step
            remaining -= step
        else:
            step = min(-remaining, deltas[k] - lo)
            deltas[k] -= step
            remaining += step
    assert remaining == 0
    for i, delta in zip(ones, deltas):
        if delta >= 0:
            lam[i] = delta
        else:
            mu[i] = -delta
    return ModificationVector(tuple(u), tuple(v), tuple(lam), tuple(mu))


def solve_linf(inv: InverseInstance) -> InverseSolution:
    """Smallest maximum modification making x_star optimal, by binary search.

    The search runs over [0, largest cap]; if even the full caps fail the
    instance is infeasible. The reported objective is the minimal budget
    K; the extracted vector witnesses it (its largest entry is exactly K)
    but is not otherwise canonical among same-budget witnesses.
    """
    if inv.norm is not Norm.LINF:
        raise NotLInf(f"expected an l-infinity instance, got {inv.norm.value}")
    hi = inv.bounds.max_entry()
    if not feasible_at(inv, hi):
        return InverseSolution.infeasible()
    lo = 0
    while lo < hi:
        mid = (lo + hi) // 2
        if feasible_at(inv, mid):
            hi = mid
        else:
            lo = mid + 1
    mods = _extract(inv, lo)
    return InverseSolution.optimal(mods, Fraction(lo))
