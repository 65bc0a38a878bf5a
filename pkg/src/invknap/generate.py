"""Deterministic instance generators.

All randomness comes from Python's Mersenne Twister (``random.Random``)
seeded with the caller's 64-bit seed, so a (parameters, seed) pair pins the
instance bit for bit across runs and machines.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Literal

from .core import (
    BinarySolution,
    CostWeights,
    FkpInstance,
    InvariantViolation,
    InverseInstance,
    Item,
    ModificationBounds,
    Norm,
)
from .reduction import PartitionInstance

GenCase = Literal["equal", "deficit", "surplus"]


def gen_random(
    n: int,
    seed: int,
    max_value: int = 10,
    max_bound: int = 3,
    case: GenCase = "equal",
    profit_only: bool = False,
    norm: Norm = Norm.L1,
) -> InverseInstance:
    """Random inverse instance with uniform parameters.

    Profits and costs are uniform on [1, max_value]; each cap is uniform on
    [0, max_bound], clamped so modified parameters stay positive; weights are
    small rationals with denominator 1 or 2. The target solution always
    selects at least one item, and the budget equals its spending (so the
    instance is ready for profit-only inversion) unless ``case`` asks for a
    deficit or surplus, in which case the budget is offset by a small sampled
    gap. ``profit_only`` zeroes both cost caps.
    """
    if n < 1:
        raise InvariantViolation("n must be >= 1")
    rng = random.Random(seed)
    profits = [rng.randint(1, max_value) for _ in range(n)]
    costs = [rng.randint(1, max_value) for _ in range(n)]
    x = [rng.randint(0, 1) for _ in range(n)]
    if not any(x):
        x[rng.randrange(n)] = 1

    u_bar = [rng.randint(0, max_bound) for _ in range(n)]
    v_bar = [rng.randint(0, min(max_bound, profits[i] - 1)) for i in range(n)]
    if profit_only:
        lambda_bar = [0] * n
        mu_bar = [0] * n
    else:
        lambda_bar = [rng.randint(0, max_bound) for _ in range(n)]
        mu_bar = [rng.randint(0, min(max_bound, costs[i] - 1)) for i in range(n)]

    w = [Fraction(rng.randint(1, 3), rng.choice((1, 2))) for _ in range(n)]
    w_cost = [Fraction(rng.randint(1, 3), rng.choice((1, 2))) for _ in range(n)]

    spent = sum(costs[i] for i in range(n) if x[i])
    budget = spent
    if case == "deficit":
        budget = spent + rng.randint(1, max(1, max_bound))
    elif case == "surplus":
        room = spent - 1
        if room >= 1:
            budget = spent - rng.randint(1, min(room, max(1, max_bound)))
    elif case != "equal":
        raise InvariantViolation(f"unknown case {case!r}")

    return InverseInstance(
        base=FkpInstance(tuple(Item(p, c) for p, c in zip(profits, costs)), budget),
        x_star=BinarySolution(tuple(x)),
        bounds=ModificationBounds(tuple(u_bar), tuple(v_bar), tuple(lambda_bar), tuple(mu_bar)),
        weights=CostWeights(tuple(w), tuple(w_cost)),
        norm=norm,
    )


def gen_partition_values(n: int, seed: int, max_value: int = 6) -> PartitionInstance:
    """Random multiset of n positive integers with an even total.

    Values are uniform on [1, max_value]; the last value is resampled until
    the total comes out even, keeping the draw deterministic under the seed.
    """
    if n < 1:
        raise InvariantViolation("n must be >= 1")
    rng = random.Random(seed)
    values = [rng.randint(1, max_value) for _ in range(n)]
    while sum(values) % 2 != 0:
        values[-1] = rng.randint(1, max_value)
    return PartitionInstance.from_values(values)
