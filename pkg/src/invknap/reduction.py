"""Executable hardness gadget mapping partition questions to inverse instances.

Given positive integers summing to 2B, the gadget builds an inverse
instance with one item per value (profit 4a, cost 2a, profit-raise cap 4a,
cost-cut cap a) plus an unmodifiable sentinel of density 4, a budget of 3B,
and the all-but-sentinel target solution. The decision compares the least
l1 repair cost against 7B.

Note the collapse verified by the exhaustive tests: budget equality forces
the cost cuts to sum to exactly B, clearing the sentinel's density forces
u_i >= 4(a_i - mu_i), and the resulting cost 'sum of (4a_i - mu_i)' equals
7B for every admissible cut vector, not only for 0-or-full ones. Since cuts
summing to B always exist inside the caps, the decision answers yes for
every even-sum input, so it does not separate partitionable inputs from the
rest. The construction is kept exactly as stated; the equal-split question
itself is answered independently by :func:`has_equal_split`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import (
    BinarySolution,
    CostWeights,
    FkpInstance,
    InvalidPartition,
    InverseInstance,
    Item,
    ModificationBounds,
    Norm,
)
from .oracle import OracleConfig, brute_inverse


@dataclass(frozen=True)
class PartitionInstance:
    """Positive integers whose sum is exactly twice the half sum B."""

    values: tuple[int, ...]
    half_sum: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        if not self.values or any(a < 1 for a in self.values):
            raise InvalidPartition("values must be positive integers")
        if sum(self.values) != 2 * self.half_sum or self.half_sum < 1:
            raise InvalidPartition(
                f"values sum to {sum(self.values)}, expected twice the half sum {self.half_sum}"
            )

    @classmethod
    def from_values(cls, values: tuple[int, ...] | list[int]) -> "PartitionInstance":
        total = sum(values)
        if total % 2 != 0:
            raise InvalidPartition(f"values sum to {total}, which is odd")
        return cls(tuple(values), total // 2)


@dataclass(frozen=True)
class GadgetOutput:
    """The constructed inverse instance and the decision budget 7B."""

    instance: InverseInstance
    decision_budget: Fraction


def build_gadget(pp: PartitionInstance) -> GadgetOutput:
    """Instance with items (4a, 2a) per value, sentinel (4, 1), budget 3B.

    Per-value items may raise profit by up to 4a (unit price) or cut cost by
    up to a (price 3); the sentinel is frozen. The target selects every
    per-value item and skips the sentinel, which starts non-optimal: every
    per-value density is 2 against the sentinel's 4, and the target spends 4B
    against the budget 3B.
    """
    n = len(pp.values)
    items = [Item(4 * a, 2 * a) for a in pp.values] + [Item(4, 1)]
    bounds = ModificationBounds(
        u_bar=tuple(4 * a for a in pp.values) + (0,),
        v_bar=(0,) * (n + 1),
        lambda_bar=(0,) * (n + 1),
        mu_bar=tuple(pp.values) + (0,),
    )
    weights = CostWeights(
        w=(Fraction(1),) * (n + 1),
        w_cost=(Fraction(3),) * (n + 1),
    )
    instance = InverseInstance(
        base=FkpInstance(tuple(items), 3 * pp.half_sum),
        x_star=BinarySolution((1,) * n + (0,)),
        bounds=bounds,
        weights=weights,
        norm=Norm.L1,
    )
    return GadgetOutput(instance, Fraction(7 * pp.half_sum))


def has_equal_split(pp: PartitionInstance) -> bool:
    """Whether some subset of the values sums to the half sum, by direct enumeration."""
    reachable = {0}
    for a in pp.values:
        reachable |= {s + a for s in reachable if s + a <= pp.half_sum}
    return pp.half_sum in reachable


def decide_partition_via_gadget(pp: PartitionInstance, cfg: OracleConfig | None = None) -> bool:
    """Whether the gadget's exhaustive minimum repair cost is at most 7B.

    Raises :class:`~invknap.core.OracleLimitExceeded` when the gadget's
    enumeration space is beyond the oracle's configured limit.
    """
    gadget = build_gadget(pp)
    solution = brute_inverse(gadget.instance, cfg)
    return solution.objective is not None and solution.objective <= gadget.decision_budget
