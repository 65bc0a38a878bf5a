"""Exhaustive ground-truth solvers.

``brute_inverse`` enumerates every in-bound integer modification vector and
keeps those that make the prespecified solution pass the optimality
criterion; ``brute_fkp`` maximizes the greedy fill over all item orderings.
Neither prunes anything: they are the arbiters of every equivalence test, so
correctness wins over speed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod

from .core import (
    FkpInstance,
    FractionalSolution,
    InvariantViolation,
    InverseInstance,
    InverseSolution,
    ModificationVector,
    Norm,
    OracleLimitExceeded,
    TooLarge,
)
from .fkp import greedy_in_order

DEFAULT_MAX_SPACE = 10_000_000

BRUTE_FKP_MAX_ITEMS = 8


@dataclass(frozen=True)
class OracleConfig:
    """Cap on the product of per-variable range sizes the oracle will enumerate."""

    max_space: int = DEFAULT_MAX_SPACE

    def __post_init__(self) -> None:
        if self.max_space < 1:
            raise InvariantViolation("max_space must be >= 1")


def enumeration_space(inv: InverseInstance) -> int:
    """Number of in-bound modification vectors, i.e. the product of (cap + 1) over all 4n caps."""
    b = inv.bounds
    return prod(
        (b.u_bar[i] + 1) * (b.v_bar[i] + 1) * (b.lambda_bar[i] + 1) * (b.mu_bar[i] + 1)
        for i in range(inv.n)
    )


def brute_inverse(inv: InverseInstance, cfg: OracleConfig | None = None) -> InverseSolution:
    """Minimum-objective modification vector by full enumeration.

    Enumeration is row-major: item 0's (u, v, lambda, mu) tuple varies
    slowest and each per-item tuple ascends in that component order, so ties
    on the objective resolve to the vector met first in that order. Bounds
    guarantee positivity of every modified parameter, hence no candidate is
    ever discarded for positivity.
    """
    cfg = cfg or OracleConfig()
    space = enumeration_space(inv)
    if space > cfg.max_space:
        raise OracleLimitExceeded(
            f"enumeration space {space} exceeds the configured limit {cfg.max_space}"
        )

    n = inv.n
    bounds = inv.bounds
    profits = [item.profit for item in inv.base.items]
    costs = [item.cost for item in inv.base.items]
    ones = list(inv.x_star.ones())
    zeros = list(inv.x_star.zeros())
    budget = inv.base.budget
    l1 = inv.norm is Norm.L1
    w = inv.weights.w
    w_cost = inv.weights.w_cost

    options: list[list[tuple[int, int, int, int]]] = []
    for i in range(n):
        options.append(
            [
                (u, v, lam, mu)
                for u in range(bounds.u_bar[i] + 1)
                for v in range(bounds.v_bar[i] + 1)
                for lam in range(bounds.lambda_bar[i] + 1)
                for mu in range(bounds.mu_bar[i] + 1)
            ]
        )

    best_obj = None
    best_combo = None
    for combo in itertools.product(*options):
        spent = 0
        for i in ones:
            o = combo[i]
            spent += costs[i] + o[2] - o[3]
        if spent != budget:
            continue
        # Largest unselected density first, then every selected density must clear it.
        max_num, max_den = None, None
        for j in zeros:
            o = combo[j]
            pj = profits[j] + o[0] - o[1]
            cj = costs[j] + o[2] - o[3]
            if max_num is None or pj * max_den > max_num * cj:
                max_num, max_den = pj, cj
        if max_num is not None:
            ok = True
            for i in ones:
                o = combo[i]
                pi = profits[i] + o[0] - o[1]
                ci = costs[i] + o[2] - o[3]
                if pi * max_den < max_num * ci:
                    ok = False
                    break
            if not ok:
                continue
        if l1:
            obj = sum(
                w[i] * (o[0] + o[1]) + w_cost[i] * (o[2] + o[3])
                for i, o in enumerate(combo)
            )
        else:
            obj = max(max(o) for o in combo)
        if best_obj is None or obj < best_obj:
            best_obj = obj
            best_combo = combo

    if best_combo is None:
        return InverseSolution.infeasible()
    mods = ModificationVector(
        tuple(o[0] for o in best_combo),
        tuple(o[1] for o in best_combo),
        tuple(o[2] for o in best_combo),
        tuple(o[3] for o in best_combo),
    )
    return InverseSolution.optimal(mods, Fraction(best_obj))


def brute_fkp(inst: FkpInstance) -> tuple[FractionalSolution, Fraction]:
    """Best greedy fill over all item orderings; equals the linear-program optimum.

    The density ordering is among the permutations, so the maximum matches
    the greedy solver; a zero budget yields the all-zero solution. Limited to
    8 items (40320 orderings).
    """
    if inst.n > BRUTE_FKP_MAX_ITEMS:
        raise TooLarge(
            f"exhaustive forward solve enumerates n! orderings; "
            f"{inst.n} items exceed the cap of {BRUTE_FKP_MAX_ITEMS} ({factorial(inst.n)} orderings)"
        )
    best: tuple[FractionalSolution, Fraction] | None = None
    for order in itertools.permutations(range(inst.n)):
        solution, objective = greedy_in_order(inst, order)
        if best is None or objective > best[1]:
            best = (solution, objective)
    assert best is not None
    return best
