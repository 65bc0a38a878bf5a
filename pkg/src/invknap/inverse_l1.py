"""Fixed-cost inverse solver under the l1 norm.

Costs stay fixed; integer profit changes (raises on selected items, cuts on
unselected ones) must make the prespecified solution optimal at minimum
weighted total change. The pipeline is: a feasibility test from the extreme
achievable densities L and U, a presolution that forces items outside
[L, U] to the boundary, and a scan of a parametric threshold t where every
selected density is lifted to at least t and every unselected density is cut
to at most t.

Two candidate sets for t ship. ``"paper"`` scans only the item densities
inside the search interval, which keeps the scan quadratic. ``"refined"``
additionally scans every point where some per-item ceiling term changes
value, i.e. every (profit + k)/cost in the interval; the piecewise-constant
objective can only jump there, so the refined scan is exact (selected-item
terms are left-continuous and unselected-item terms right-continuous, hence
the minimum over any closed interval is attained at such a point).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, NamedTuple

from .core import (
    BudgetMismatch,
    CostWeights,
    InverseInstance,
    InverseSolution,
    LengthMismatch,
    ModificationVector,
    Norm,
    NotL1,
    OutOfRange,
    ceil_rational,
    ratio_of,
)

ScanMode = Literal["paper", "refined"]


class FeasibilityBounds(NamedTuple):
    """Extreme achievable densities under the caps.

    ``lower`` is the least achievable maximum density over unselected items
    (None when there are none, i.e. unbounded below); ``upper`` is the
    greatest achievable minimum density over selected items (None when there
    are none). The instance is feasible exactly when lower <= upper.
    """

    lower: Fraction | None
    upper: Fraction | None
    feasible: bool


@dataclass(frozen=True)
class PresolveResult:
    """Forced boundary modifications and the state the scan runs on.

    ``z0`` holds the forced change per item (a raise for selected items whose
    density is below ``lower``, a cut for unselected items above ``upper``),
    ``adjusted_profits`` the profits after those changes, and ``base_cost``
    their weighted price. ``alpha``/``beta`` are the minimum selected and
    maximum unselected densities after adjustment; the scan interval is
    [alpha, beta] clipped to [lower, upper].
    """

    instance: InverseInstance
    lower: Fraction | None
    upper: Fraction | None
    z0: tuple[int, ...]
    base_cost: Fraction
    adjusted_profits: tuple[int, ...]
    alpha: Fraction | None
    beta: Fraction | None
    forced: frozenset[int]


def _require_budget_equality(inv: InverseInstance) -> None:
    spent = sum(inv.base.items[i].cost for i in inv.x_star.ones())
    if spent != inv.base.budget:
        raise BudgetMismatch(
            f"x_star spends {spent} but the budget is {inv.base.budget}; "
            "profit-only inversion requires exact budget equality"
        )


def feasibility_bounds(inv: InverseInstance) -> FeasibilityBounds:
    """L, U, and whether any in-cap profit modification can succeed.

    L is the largest cap-reduced density over unselected items, U the
    smallest cap-raised density over selected ones. Empty sides yield None
    (an unbounded extreme) rather than a fake numeric sentinel.
    """
    _require_budget_equality(inv)
    items = inv.base.items
    z_u = inv.bounds.u_bar
    z_v = inv.bounds.v_bar
    lower = max(
        (Fraction(items[j].profit - z_v[j], items[j].cost) for j in inv.x_star.zeros()),
        default=None,
    )
    upper = min(
        (Fraction(items[i].profit + z_u[i], items[i].cost) for i in inv.x_star.ones()),
        default=None,
    )
    feasible = lower is None or upper is None or lower <= upper
    return FeasibilityBounds(lower, upper, feasible)


def presolve(inv: InverseInstance) -> PresolveResult:
    """Force out-of-band items to the boundary and price those moves.

    Selected items with density below L are raised to the least integer
    profit reaching L; unselected items above U are cut to U likewise. The
    caps cannot be exceeded: L <= U bounds each forced change by the item's
    own cap.
    """
    fb = feasibility_bounds(inv)
    if not fb.feasible:
        raise OutOfRange("presolve requires a feasible instance (lower <= upper)")
    items = inv.base.items
    ones = set(inv.x_star.ones())
    z0 = [0] * inv.n
    adjusted = [item.profit for item in items]
    forced = set()
    for i, item in enumerate(items):
        if i in ones:
            if fb.lower is not None and ratio_of(item) < fb.lower:
                z0[i] = ceil_rational(item.cost * fb.lower - item.profit)
                adjusted[i] = item.profit + z0[i]
                forced.add(i)
        else:
            if fb.upper is not None and ratio_of(item) > fb.upper:
                z0[i] = ceil_rational(item.profit - item.cost * fb.upper)
                adjusted[i] = item.profit - z0[i]
                forced.add(i)
    base_cost = sum((inv.weights.w[i] * z0[i] for i in forced), start=Fraction(0))
    alpha = min((Fraction(adjusted[i], items[i].cost) for i in ones), default=None)
    beta = max(
        (Fraction(adjusted[j], items[j].cost) for j in range(inv.n) if j not in ones),
        default=None,
    )
    return PresolveResult(
        instance=inv,
        lower=fb.lower,
        upper=fb.upper,
        z0=tuple(z0),
        base_cost=base_cost,
        adjusted_profits=tuple(adjusted),
        alpha=alpha,
        beta=beta,
        forced=frozenset(forced),
    )


def _scan_interval(pre: PresolveResult) -> tuple[Fraction, Fraction] | None:
    """[max(lower, alpha), min(upper, beta)], or None when no conflict remains."""
    if pre.alpha is None or pre.beta is None:
        return None
    lo = pre.alpha if pre.lower is None else max(pre.lower, pre.alpha)
    hi = pre.beta if pre.upper is None else min(pre.upper, pre.beta)
    if lo > hi:
        return None
    return lo, hi


class _Scan:
    """Shared exact evaluator for the parametric objective.

    Per-item terms are accumulated as integers against a common denominator
    of all weight denominators, so evaluating one threshold costs a handful
    of integer operations per in-band item and no intermediate Fraction.
    """

    def __init__(self, pre: PresolveResult, weights: CostWeights):
        inv = pre.instance
        ones = set(inv.x_star.ones())
        interval = _scan_interval(pre)
        self.denom = math.lcm(*(x.denominator for x in weights.w)) if weights.w else 1
        # (cost, adjusted profit, scaled weight) for items whose density can
        # interact with an in-interval threshold.
        self.sel: list[tuple[int, int, int]] = []
        self.uns: list[tuple[int, int, int]] = []
        if interval is None:
            return
        lo, hi = interval
        for i, item in enumerate(inv.base.items):
            dens = Fraction(pre.adjusted_profits[i], item.cost)
            scaled_w = int(weights.w[i] * self.denom)
            if i in ones and dens < hi:
                self.sel.append((item.cost, pre.adjusted_profits[i], scaled_w))
            elif i not in ones and dens > lo:
                self.uns.append((item.cost, pre.adjusted_profits[i], scaled_w))

    def scaled_cost(self, t: Fraction) -> int:
        """The parametric objective at t, times the common weight denominator."""
        tn, td = t.numerator, t.denominator
        total = 0
        for c, p, sw in self.sel:
            delta = c * tn - p * td
            if delta > 0:
                total += sw * ((delta + td - 1) // td)
        for c, p, sw in self.uns:
            delta = p * td - c * tn
            if delta > 0:
                total += sw * ((delta + td - 1) // td)
        return total


def cost_at(pre: PresolveResult, weights: CostWeights, t: Fraction) -> Fraction:
    """Exact parametric objective at threshold t over the adjusted profits.

    Selected items below t pay for the least integer raise reaching t,
    unselected items above t for the least integer cut reaching it; items
    sitting exactly at t contribute nothing. Every implied per-item change
    stays within its residual cap because t is confined to [L, U].
    """
    t = Fraction(t)
    if pre.lower is not None and t < pre.lower:
        raise OutOfRange(f"t = {t} lies below the feasible threshold {pre.lower}")
    if pre.upper is not None and t > pre.upper:
        raise OutOfRange(f"t = {t} lies above the feasible threshold {pre.upper}")
    inv = pre.instance
    ones = set(inv.x_star.ones())
    denom = math.lcm(*(x.denominator for x in weights.w)) if weights.w else 1
    total = 0
    for i, item in enumerate(inv.base.items):
        p, c = pre.adjusted_profits[i], item.cost
        if i in ones:
            delta = ceil_rational(c * t - p)
        else:
            delta = ceil_rational(p - c * t)
        if delta > 0:
            assert pre.z0[i] + delta <= (
                inv.bounds.u_bar[i] if i in ones else inv.bounds.v_bar[i]
            ), "implied change escaped its cap despite t in [L, U]"
            total += int(weights.w[i] * denom) * delta
    return Fraction(total, denom)


def candidate_set(pre: PresolveResult, mode: ScanMode = "refined") -> list[Fraction]:
    """Sorted distinct thresholds the scan will evaluate.

    ``"paper"``: the adjusted item densities inside the scan interval plus
    its endpoints. ``"refined"``: additionally every (adjusted profit + k) /
    cost in the interval for integer k, i.e. each point where some per-item
    ceiling term changes value; always a superset of the paper set.
    """
    interval = _scan_interval(pre)
    if interval is None:
        return []
    lo, hi = interval
    inv = pre.instance
    ones = set(inv.x_star.ones())
    candidates: set[Fraction] = {lo, hi}
    in_band: list[int] = []
    for i, item in enumerate(inv.base.items):
        dens = Fraction(pre.adjusted_profits[i], item.cost)
        if (i in ones and dens <= hi) or (i not in ones and dens >= lo):
            in_band.append(i)
            if lo <= dens <= hi:
                candidates.add(dens)
    if mode == "refined":
        for i in in_band:
            p, c = pre.adjusted_profits[i], inv.base.items[i].cost
            k_lo = ceil_rational(c * lo - p)
            k_hi = math.floor(c * hi - p)
            candidates.update(Fraction(p + k, c) for k in range(k_lo, k_hi + 1))
    elif mode != "paper":
        raise ValueError(f"unknown scan mode {mode!r}")
    return sorted(candidates)


def l1_objective(mods: ModificationVector, weights: CostWeights) -> Fraction:
    """Weighted total change: sum of w*(u+v) + w_cost*(lambda+mu)."""
    if mods.n != len(weights.w):
        raise LengthMismatch(
            f"modification vector has {mods.n} entries, weights have {len(weights.w)}"
        )
    return sum(
        (
            weights.w[i] * (mods.u[i] + mods.v[i])
            + weights.w_cost[i] * (mods.lam[i] + mods.mu[i])
            for i in range(mods.n)
        ),
        start=Fraction(0),
    )


def _mods_at(pre: PresolveResult, t: Fraction) -> ModificationVector:
    """Per-item profit changes realizing threshold t on top of the forced ones."""
    inv = pre.instance
    ones = set(inv.x_star.ones())
    u = [0] * inv.n
    v = [0] * inv.n
    for i, item in enumerate(inv.base.items):
        p, c = pre.adjusted_profits[i], item.cost
        if i in ones:
            extra = max(0, ceil_rational(c * t - p))
            u[i] = pre.z0[i] + extra
        else:
            extra = max(0, ceil_rational(p - c * t))
            v[i] = pre.z0[i] + extra
    zero = (0,) * inv.n
    return ModificationVector(tuple(u), tuple(v), zero, zero)


def _forced_only_mods(pre: PresolveResult) -> ModificationVector:
    inv = pre.instance
    ones = set(inv.x_star.ones())
    u = [pre.z0[i] if i in ones else 0 for i in range(inv.n)]
    v = [0 if i in ones else pre.z0[i] for i in range(inv.n)]
    zero = (0,) * inv.n
    return ModificationVector(tuple(u), tuple(v), zero, zero)


def solve_fifkp(inv: InverseInstance, mode: ScanMode = "refined") -> InverseSolution:
    """Minimum-cost profit-only inversion via the threshold scan.

    Infeasible caps yield an infeasible status. Otherwise the objective is
    the forced-move cost plus the minimum parametric cost over the candidate
    thresholds; ties go to the smallest threshold, and the reconstructed
    modification vector leaves all costs untouched.
    """
    if inv.norm is not Norm.L1:
        raise NotL1(f"expected an l1 instance, got {inv.norm.value}")
    fb = feasibility_bounds(inv)
    if not fb.feasible:
        return InverseSolution.infeasible()
    pre = presolve(inv)
    candidates = candidate_set(pre, mode)
    if not candidates:
        return InverseSolution.optimal(_forced_only_mods(pre), pre.base_cost)
    scan = _Scan(pre, inv.weights)
    best_t = candidates[0]
    best_scaled = scan.scaled_cost(best_t)
    for t in candidates[1:]:
        scaled = scan.scaled_cost(t)
        if scaled < best_scaled:
            best_t, best_scaled = t, scaled
    objective = pre.base_cost + Fraction(best_scaled, scan.denom)
    return InverseSolution.optimal(_mods_at(pre, best_t), objective)
