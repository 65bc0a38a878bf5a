"""Profit-only inverse solver under the l1 norm."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from invknap import (
    BudgetMismatch,
    ModificationVector,
    NotL1,
    Norm,
    OutOfRange,
    SolutionStatus,
    apply_modifications,
    brute_inverse,
    candidate_set,
    ceil_rational,
    check_optimality,
    cost_at,
    feasibility_bounds,
    gen_random,
    l1_objective,
    presolve,
    solve_fifkp,
)
from helpers import demo5, make_inverse

F = Fraction


class TestFeasibilityBounds:
    def test_fixture_bounds(self):
        fb = feasibility_bounds(demo5())
        assert fb == (F(7, 10), F(11, 10), True)

    def test_zero_caps_on_an_optimal_target(self):
        inv = make_inverse([(4, 2), (1, 2)], [1, 0])
        fb = feasibility_bounds(inv)
        assert fb.feasible
        assert fb.lower <= fb.upper

    def test_small_caps_are_infeasible(self):
        inv = make_inverse([(1, 1), (9, 1)], [1, 0], u_bar=[1, 0], v_bar=[0, 1])
        fb = feasibility_bounds(inv)
        assert (fb.lower, fb.upper, fb.feasible) == (F(8), F(2), False)

    def test_empty_side_yields_open_extreme(self):
        inv = make_inverse([(2, 3), (1, 4)], [1, 1])
        fb = feasibility_bounds(inv)
        assert fb.lower is None and fb.feasible

    def test_budget_inequality_is_rejected(self):
        inv = make_inverse([(4, 2), (1, 2)], [1, 0], b=3)
        with pytest.raises(BudgetMismatch):
            feasibility_bounds(inv)


class TestPresolve:
    def test_fixture_forces_nothing(self):
        pre = presolve(demo5())
        assert pre.forced == frozenset()
        assert pre.base_cost == 0
        assert pre.z0 == (0,) * 5
        assert pre.adjusted_profits == (8, 7, 9, 10, 11)
        assert (pre.alpha, pre.beta) == (F(7, 10), F(11, 10))

    def test_optimal_target_forces_nothing(self):
        pre = presolve(make_inverse([(4, 2), (1, 2)], [1, 0]))
        assert pre.forced == frozenset()
        assert pre.base_cost == 0

    def test_selected_item_lifted_to_the_bound(self):
        # L = (5-1)/4 = 1, so the selected item (1, 2) is forced up by 1.
        inv = make_inverse([(1, 2), (5, 4)], [1, 0], u_bar=[2, 0], v_bar=[0, 1], b=2)
        pre = presolve(inv)
        assert pre.forced == frozenset({0})
        assert pre.z0 == (1, 0)
        assert pre.adjusted_profits == (2, 5)
        assert pre.base_cost == 1
        # every adjusted selected density reaches L, unselected stay at most U
        assert F(2, 2) >= pre.lower
        assert F(5, 4) <= pre.upper

    def test_forced_moves_stay_within_caps(self):
        rng = random.Random(23)
        for _ in range(100):
            inv = gen_random(rng.randint(1, 5), rng.randrange(2**32), profit_only=True)
            if not feasibility_bounds(inv).feasible:
                continue
            pre = presolve(inv)
            ones = set(inv.x_star.ones())
            for i in range(inv.n):
                cap = inv.bounds.u_bar[i] if i in ones else inv.bounds.v_bar[i]
                assert 0 <= pre.z0[i] <= cap
                if pre.z0[i]:
                    assert i in pre.forced


class TestCostAt:
    def test_fixture_values(self):
        inv = demo5()
        pre = presolve(inv)
        assert cost_at(pre, inv.weights, F(1)) == F(5, 2)
        assert cost_at(pre, inv.weights, F(9, 10)) == 3
        assert cost_at(pre, inv.weights, F(7, 10)) == 5
        assert cost_at(pre, inv.weights, F(11, 10)) == 3

    def test_all_densities_equal_cost_zero(self):
        inv = make_inverse([(2, 2), (3, 3)], [1, 0], u_bar=[2, 0], v_bar=[0, 2])
        pre = presolve(inv)
        assert cost_at(pre, inv.weights, F(1)) == 0

    def test_out_of_range_is_rejected(self):
        inv = demo5()
        pre = presolve(inv)
        with pytest.raises(OutOfRange):
            cost_at(pre, inv.weights, F(1, 2))
        with pytest.raises(OutOfRange):
            cost_at(pre, inv.weights, F(2))

    def test_accounting_matches_unadjusted_profits(self):
        # base_cost + C(t) equals the same ceiling sums taken over the
        # original profits, by the integer shift identity.
        rng = random.Random(31)
        checked = 0
        while checked < 40:
            inv = gen_random(rng.randint(2, 5), rng.randrange(2**32), profit_only=True)
            if not feasibility_bounds(inv).feasible:
                continue
            pre = presolve(inv)
            cands = candidate_set(pre, "refined")
            if not cands:
                continue
            checked += 1
            ones = set(inv.x_star.ones())
            for t in cands:
                direct = F(0)
                for i, item in enumerate(inv.base.items):
                    if i in ones:
                        delta = ceil_rational(item.cost * t - item.profit)
                    else:
                        delta = ceil_rational(item.profit - item.cost * t)
                    direct += inv.weights.w[i] * max(0, delta)
                assert pre.base_cost + cost_at(pre, inv.weights, t) == direct


class TestCandidateSet:
    def test_fixture_paper_candidates(self):
        pre = presolve(demo5())
        assert candidate_set(pre, "paper") == [F(7, 10), F(9, 10), F(1), F(11, 10)]

    def test_refined_is_a_superset_of_paper(self):
        rng = random.Random(41)
        for _ in range(50):
            inv = gen_random(rng.randint(1, 5), rng.randrange(2**32), profit_only=True)
            if not feasibility_bounds(inv).feasible:
                continue
            pre = presolve(inv)
            assert set(candidate_set(pre, "paper")) <= set(candidate_set(pre, "refined"))

    def test_no_conflict_leaves_nothing_to_scan(self):
        pre = presolve(make_inverse([(4, 2), (1, 2)], [1, 0]))
        assert pre.alpha > pre.beta
        assert candidate_set(pre, "paper") == []

    def test_objective_is_constant_between_refined_candidates(self):
        inv = demo5()
        pre = presolve(inv)
        cands = candidate_set(pre, "refined")
        for lo, hi in zip(cands, cands[1:]):
            third = (hi - lo) / 3
            assert cost_at(pre, inv.weights, lo + third) == cost_at(
                pre, inv.weights, lo + 2 * third
            )


class TestL1Objective:
    def test_zero(self):
        inv = demo5()
        assert l1_objective(ModificationVector.zero(5), inv.weights) == 0

    def test_fixture_weights(self):
        inv = demo5()
        mods = ModificationVector((0, 3, 0, 0, 0), (0, 0, 0, 0, 1), (0,) * 5, (0,) * 5)
        assert l1_objective(mods, inv.weights) == F(5, 2)

    def test_unit_profit_change(self):
        inv = demo5()
        mods = ModificationVector((1, 0, 0, 0, 0), (0,) * 5, (0,) * 5, (0,) * 5)
        assert l1_objective(mods, inv.weights) == 3


class TestSolveFifkp:
    def test_fixture_both_modes(self):
        inv = demo5()
        for mode in ("paper", "refined"):
            result = solve_fifkp(inv, mode)
            assert result.objective == F(5, 2)
            assert result.mods.u == (0, 3, 0, 0, 0)
            assert result.mods.v == (0, 0, 0, 0, 1)
            assert not any(result.mods.lam) and not any(result.mods.mu)

    def test_optimal_target_costs_nothing(self):
        result = solve_fifkp(make_inverse([(4, 2), (1, 2)], [1, 0]))
        assert result.objective == 0
        assert result.mods.is_zero()

    def test_infeasible_caps(self):
        inv = make_inverse([(1, 1), (9, 1)], [1, 0], u_bar=[1, 0], v_bar=[0, 1])
        assert solve_fifkp(inv).status is SolutionStatus.INFEASIBLE
        assert brute_inverse(inv).status is SolutionStatus.INFEASIBLE

    def test_norm_is_enforced(self):
        with pytest.raises(NotL1):
            solve_fifkp(demo5(norm=Norm.LINF))

    def test_matches_oracle_and_certifies(self):
        rng = random.Random(53)
        solved = 0
        while solved < 60:
            inv = gen_random(rng.randint(1, 5), rng.randrange(2**32), profit_only=True)
            refined = solve_fifkp(inv, "refined")
            paper = solve_fifkp(inv, "paper")
            oracle = brute_inverse(inv)
            assert refined.status == oracle.status
            if refined.status is SolutionStatus.INFEASIBLE:
                assert paper.status is SolutionStatus.INFEASIBLE
                continue
            solved += 1
            assert refined.objective == oracle.objective
            assert paper.objective >= refined.objective
            for result in (refined, paper):
                report = check_optimality(apply_modifications(inv, result.mods), inv.x_star)
                assert report.is_optimal
                assert l1_objective(result.mods, inv.weights) == result.objective

    def test_implied_changes_stay_in_caps_at_every_candidate(self):
        rng = random.Random(67)
        checked = 0
        while checked < 40:
            inv = gen_random(rng.randint(2, 5), rng.randrange(2**32), profit_only=True)
            if not feasibility_bounds(inv).feasible:
                continue
            pre = presolve(inv)
            cands = candidate_set(pre, "refined")
            if not cands:
                continue
            checked += 1
            ones = set(inv.x_star.ones())
            for t in cands:
                for i, item in enumerate(inv.base.items):
                    if i in ones:
                        z = pre.z0[i] + max(0, ceil_rational(item.cost * t - pre.adjusted_profits[i]))
                        assert z <= inv.bounds.u_bar[i]
                    else:
                        z = pre.z0[i] + max(0, ceil_rational(pre.adjusted_profits[i] - item.cost * t))
                        assert z <= inv.bounds.v_bar[i]
