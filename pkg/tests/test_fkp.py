"""Forward greedy solver and the optimality-criterion checker."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from invknap import (
    BinarySolution,
    FkpInstance,
    Item,
    LengthMismatch,
    Verdict,
    brute_fkp,
    check_optimality,
    solve_greedy,
)
from helpers import demo5


def inst(pairs, b):
    return FkpInstance(tuple(Item(p, c) for p, c in pairs), b)


class TestSolveGreedy:
    def test_two_item_split(self):
        solution, objective = solve_greedy(inst([(6, 3), (4, 4)], 5))
        assert solution.values == (Fraction(1), Fraction(1, 2))
        assert objective == 8

    def test_forced_fraction(self):
        solution, objective = solve_greedy(inst([(5, 2)], 1))
        assert solution.values == (Fraction(1, 2),)
        assert objective == Fraction(5, 2)

    def test_slack_budget_takes_everything(self):
        solution, objective = solve_greedy(inst([(3, 2), (1, 4)], 100))
        assert solution.values == (Fraction(1), Fraction(1))
        assert objective == 4

    def test_equal_ratio_ties_prefer_lower_index(self):
        solution, _ = solve_greedy(inst([(2, 2), (3, 3)], 2))
        assert solution.values == (Fraction(1), Fraction(0))

    def test_budget_usage_is_min_of_budget_and_total(self):
        rng = random.Random(3)
        for _ in range(200):
            n = rng.randint(1, 7)
            pairs = [(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(n)]
            b = rng.randint(0, 40)
            instance = inst(pairs, b) if b else FkpInstance(tuple(Item(*p) for p in pairs), 0)
            solution, _ = solve_greedy(instance)
            used = sum(item.cost * v for item, v in zip(instance.items, solution.values))
            assert used == min(b, instance.total_cost())


class TestCheckOptimality:
    def test_fixture_ratio_violation_with_witness(self):
        inv = demo5()
        report = check_optimality(inv.base, inv.x_star)
        assert report.verdict is Verdict.RATIO_VIOLATION
        assert report.lhs_sum == 25
        # min selected density 7/10 at index 1, max unselected 11/10 at index 4
        assert report.witness == (1, 4)

    def test_optimal(self):
        report = check_optimality(inst([(4, 2), (1, 2)], 2), BinarySolution((1, 0)))
        assert report.verdict is Verdict.OPTIMAL
        assert report.witness is None

    def test_budget_mismatch_checked_first(self):
        report = check_optimality(inst([(4, 2), (1, 2)], 3), BinarySolution((1, 0)))
        assert report.verdict is Verdict.BUDGET_MISMATCH
        assert report.lhs_sum == 2

    def test_slack_budget_all_ones_still_needs_equality(self):
        # Even when everything fits, spending less than b is a mismatch.
        report = check_optimality(inst([(4, 2), (1, 2)], 5), BinarySolution((1, 1)))
        assert report.verdict is Verdict.BUDGET_MISMATCH

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            check_optimality(inst([(4, 2)], 2), BinarySolution((1, 0)))


class TestAgainstExhaustiveForward:
    def test_small_random_instances(self):
        rng = random.Random(17)
        for _ in range(60):
            n = rng.randint(1, 6)
            pairs = [(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(n)]
            b = rng.randint(1, 30)
            instance = inst(pairs, b)
            greedy_solution, greedy_objective = solve_greedy(instance)
            _, best = brute_fkp(instance)
            assert greedy_objective == best
            interior = sum(1 for v in greedy_solution.values if 0 < v < 1)
            assert interior <= 1
