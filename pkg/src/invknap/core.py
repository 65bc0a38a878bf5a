"""Exact arithmetic and the shared domain types used by every solver.

All numeric work runs on arbitrary-precision integers and
:class:`fractions.Fraction`, so ratio comparisons and objective values are
exact; no float ever enters an optimality decision. Every type in this
module is an immutable value object and every operation is a pure function,
so everything here is safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction


class InvKnapError(Exception):
    """Base class for every error raised by this package."""


class InvariantViolation(InvKnapError):
    """A domain value was constructed with data violating its invariants."""


class LengthMismatch(InvKnapError):
    """Per-item sequences of different lengths were combined."""


class BoundViolation(InvKnapError):
    """A modification exceeds its per-item cap."""


class NonPositiveResult(InvKnapError):
    """A modification would drive a profit or cost below 1."""


class BudgetMismatch(InvKnapError):
    """The prespecified solution does not spend the budget exactly."""


class NormMismatch(InvKnapError):
    """A solver was handed an instance tagged with the wrong norm."""


class NotL1(NormMismatch):
    """The instance is not tagged with the l1 norm."""


class NotLInf(NormMismatch):
    """The instance is not tagged with the l-infinity norm."""


class OutOfRange(InvKnapError):
    """A scan parameter lies outside its admissible interval."""


class InfeasibleRepair(InvKnapError):
    """The per-item caps cannot absorb the requested budget gap."""


class InvalidPartition(InvKnapError):
    """The value multiset does not split into two equal integer halves."""


class OracleLimitExceeded(InvKnapError):
    """The enumeration space exceeds the configured oracle limit."""


class TooLarge(InvKnapError):
    """The instance exceeds the exhaustive forward solver's size cap."""


class ParseError(InvKnapError):
    """An instance document is malformed."""


class Norm(Enum):
    """Objective norm of an inverse instance."""

    L1 = "l1"
    LINF = "linf"


@dataclass(frozen=True)
class Item:
    """One knapsack item: a positive integer profit and cost."""

    profit: int
    cost: int

    def __post_init__(self) -> None:
        if self.profit < 1 or self.cost < 1:
            raise InvariantViolation(
                f"item profit and cost must be >= 1, got ({self.profit}, {self.cost})"
            )


@dataclass(frozen=True)
class FkpInstance:
    """Items plus a budget, the data of a fractional knapsack problem.

    A budget of 0 is accepted so the exhaustive forward solver can probe the
    degenerate no-capacity case; the serialization layer and the generators
    insist on budget >= 1.
    """

    items: tuple[Item, ...]
    budget: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "items", tuple(self.items))
        if not self.items:
            raise InvariantViolation("an instance needs at least one item")
        if self.budget < 0:
            raise InvariantViolation(f"budget must be nonnegative, got {self.budget}")

    @property
    def n(self) -> int:
        return len(self.items)

    def total_cost(self) -> int:
        return sum(item.cost for item in self.items)


@dataclass(frozen=True)
class BinarySolution:
    """A 0/1 vector over the items; the prespecified solution of an inverse instance."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        if any(v not in (0, 1) for v in self.values):
            raise InvariantViolation("binary solution entries must be 0 or 1")

    def ones(self) -> tuple[int, ...]:
        """Indices selected by the solution (the set usually written I1)."""
        return tuple(i for i, v in enumerate(self.values) if v == 1)

    def zeros(self) -> tuple[int, ...]:
        """Indices left out by the solution (the set usually written I0)."""
        return tuple(i for i, v in enumerate(self.values) if v == 0)


@dataclass(frozen=True)
class FractionalSolution:
    """A vector in [0, 1]^n with at most one entry strictly between 0 and 1."""

    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))
        if any(v < 0 or v > 1 for v in self.values):
            raise InvariantViolation("fractional entries must lie in [0, 1]")
        interior = sum(1 for v in self.values if 0 < v < 1)
        if interior > 1:
            raise InvariantViolation(
                f"at most one entry may be strictly fractional, found {interior}"
            )


@dataclass(frozen=True)
class ModificationBounds:
    """Per-item caps on the four modification directions.

    ``u_bar``/``v_bar`` cap profit increases/decreases, ``lambda_bar``/
    ``mu_bar`` cap cost increases/decreases. The coupling with the items
    (``v_bar_i <= profit_i - 1`` and ``mu_bar_i <= cost_i - 1``, so modified
    parameters stay positive) is enforced by the owning
    :class:`InverseInstance`.
    """

    u_bar: tuple[int, ...]
    v_bar: tuple[int, ...]
    lambda_bar: tuple[int, ...]
    mu_bar: tuple[int, ...]

    def __post_init__(self) -> None:
        for name in ("u_bar", "v_bar", "lambda_bar", "mu_bar"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        lengths = {len(self.u_bar), len(self.v_bar), len(self.lambda_bar), len(self.mu_bar)}
        if len(lengths) != 1:
            raise LengthMismatch("all bound vectors must share one length")
        for name in ("u_bar", "v_bar", "lambda_bar", "mu_bar"):
            if any(x < 0 for x in getattr(self, name)):
                raise InvariantViolation(f"{name} entries must be nonnegative")

    @property
    def n(self) -> int:
        return len(self.u_bar)

    def max_entry(self) -> int:
        """Largest cap anywhere; an upper bound on any useful uniform budget."""
        return max(
            max(self.u_bar, default=0),
            max(self.v_bar, default=0),
            max(self.lambda_bar, default=0),
            max(self.mu_bar, default=0),
        )


@dataclass(frozen=True)
class ModificationVector:
    """Integer modifications per item: profit +u -v, cost +lambda -mu."""

    u: tuple[int, ...]
    v: tuple[int, ...]
    lam: tuple[int, ...]
    mu: tuple[int, ...]

    def __post_init__(self) -> None:
        for name in ("u", "v", "lam", "mu"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        lengths = {len(self.u), len(self.v), len(self.lam), len(self.mu)}
        if len(lengths) != 1:
            raise LengthMismatch("all modification vectors must share one length")
        for name in ("u", "v", "lam", "mu"):
            if any(x < 0 for x in getattr(self, name)):
                raise InvariantViolation(f"{name} entries must be nonnegative")

    @property
    def n(self) -> int:
        return len(self.u)

    def is_zero(self) -> bool:
        return not any(self.u) and not any(self.v) and not any(self.lam) and not any(self.mu)

    @classmethod
    def zero(cls, n: int) -> "ModificationVector":
        z = (0,) * n
        return cls(z, z, z, z)


@dataclass(frozen=True)
class CostWeights:
    """Per-item l1 prices: ``w`` per unit of profit change, ``w_cost`` per unit of cost change."""

    w: tuple[Fraction, ...]
    w_cost: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "w", tuple(Fraction(x) for x in self.w))
        object.__setattr__(self, "w_cost", tuple(Fraction(x) for x in self.w_cost))
        if len(self.w) != len(self.w_cost):
            raise LengthMismatch("weight vectors must share one length")
        if any(x < 0 for x in self.w) or any(x < 0 for x in self.w_cost):
            raise InvariantViolation("weights must be nonnegative")

    @classmethod
    def unit(cls, n: int) -> "CostWeights":
        ones = (Fraction(1),) * n
        return cls(ones, ones)


@dataclass(frozen=True)
class InverseInstance:
    """A knapsack instance, a target 0/1 solution, caps, prices, and a norm."""

    base: FkpInstance
    x_star: BinarySolution
    bounds: ModificationBounds
    weights: CostWeights
    norm: Norm

    def __post_init__(self) -> None:
        n = self.base.n
        if len(self.x_star.values) != n or self.bounds.n != n or len(self.weights.w) != n:
            raise LengthMismatch("items, x_star, bounds, and weights must share one length")
        for i, item in enumerate(self.base.items):
            if self.bounds.v_bar[i] > item.profit - 1:
                raise InvariantViolation(
                    f"v_bar[{i}] = {self.bounds.v_bar[i]} would allow profit {item.profit} to drop below 1"
                )
            if self.bounds.mu_bar[i] > item.cost - 1:
                raise InvariantViolation(
                    f"mu_bar[{i}] = {self.bounds.mu_bar[i]} would allow cost {item.cost} to drop below 1"
                )

    @property
    def n(self) -> int:
        return self.base.n


class SolutionStatus(Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class InverseSolution:
    """Outcome of an inverse solve: a modification vector and its objective, or infeasibility."""

    status: SolutionStatus
    mods: ModificationVector | None = None
    objective: Fraction | None = None

    def __post_init__(self) -> None:
        if self.status is SolutionStatus.OPTIMAL:
            if self.mods is None or self.objective is None:
                raise InvariantViolation("an optimal solution carries mods and an objective")
        elif self.mods is not None or self.objective is not None:
            raise InvariantViolation("an infeasible solution carries no mods or objective")

    @classmethod
    def optimal(cls, mods: ModificationVector, objective: Fraction) -> "InverseSolution":
        return cls(SolutionStatus.OPTIMAL, mods, Fraction(objective))

    @classmethod
    def infeasible(cls) -> "InverseSolution":
        return cls(SolutionStatus.INFEASIBLE)


def ratio_of(item: Item) -> Fraction:
    """Profit density profit/cost in canonical reduced form."""
    return Fraction(item.profit, item.cost)


def ceil_rational(q: Fraction | int) -> int:
    """Smallest integer >= q, exact for negative arguments.

    Computed as the floor division of (num + den - 1) by den, which is
    branch-free and correct for negative numerators because Python floor
    division rounds toward negative infinity.
    """
    q = Fraction(q)
    return (q.numerator + q.denominator - 1) // q.denominator


def apply_modifications(inv: InverseInstance, mods: ModificationVector) -> FkpInstance:
    """The modified instance with profits p+u-v and costs c+lambda-mu; budget unchanged.

    Raises :class:`NonPositiveResult` if any modified profit or cost would
    drop below 1 and :class:`BoundViolation` if any entry exceeds its cap;
    positivity is checked first so degenerate modifications are reported for
    what they do rather than for the cap they also break.
    """
    if mods.n != inv.n:
        raise LengthMismatch(f"expected {inv.n} modification entries, got {mods.n}")
    items = []
    for i, item in enumerate(inv.base.items):
        profit = item.profit + mods.u[i] - mods.v[i]
        cost = item.cost + mods.lam[i] - mods.mu[i]
        if profit < 1 or cost < 1:
            raise NonPositiveResult(
                f"item {i} would become ({profit}, {cost}); profits and costs must stay >= 1"
            )
        items.append((profit, cost))
    b = inv.bounds
    for i in range(inv.n):
        if (
            mods.u[i] > b.u_bar[i]
            or mods.v[i] > b.v_bar[i]
            or mods.lam[i] > b.lambda_bar[i]
            or mods.mu[i] > b.mu_bar[i]
        ):
            raise BoundViolation(f"modification of item {i} exceeds its cap")
    return FkpInstance(tuple(Item(p, c) for p, c in items), inv.base.budget)
