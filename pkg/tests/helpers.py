"""Shared builders for the test suite."""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from invknap import (
    BinarySolution,
    CostWeights,
    FkpInstance,
    InverseInstance,
    Item,
    ModificationBounds,
    Norm,
)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
DEMO5 = FIXTURES / "demo5.json"


def make_inverse(
    items,
    x_star,
    *,
    u_bar=None,
    v_bar=None,
    lambda_bar=None,
    mu_bar=None,
    w=None,
    w_cost=None,
    b=None,
    norm=Norm.L1,
) -> InverseInstance:
    """Inverse instance from (profit, cost) pairs with zero-default caps and unit weights.

    The budget defaults to the spending of x_star, which is what the
    profit-only solver requires.
    """
    items = tuple(Item(p, c) for p, c in items)
    n = len(items)
    zeros = (0,) * n
    if b is None:
        b = sum(items[i].cost for i in range(n) if x_star[i])
    return InverseInstance(
        base=FkpInstance(items, b),
        x_star=BinarySolution(tuple(x_star)),
        bounds=ModificationBounds(
            tuple(u_bar) if u_bar is not None else zeros,
            tuple(v_bar) if v_bar is not None else zeros,
            tuple(lambda_bar) if lambda_bar is not None else zeros,
            tuple(mu_bar) if mu_bar is not None else zeros,
        ),
        weights=CostWeights(
            tuple(Fraction(x) for x in w) if w is not None else (Fraction(1),) * n,
            tuple(Fraction(x) for x in w_cost) if w_cost is not None else (Fraction(1),) * n,
        ),
        norm=norm,
    )


def demo5(norm: Norm = Norm.L1) -> InverseInstance:
    """The shipped 5-item fixture: b = 25, x* = (1,1,0,1,0), caps (3,4,3,1,4)."""
    return make_inverse(
        [(8, 5), (7, 10), (9, 10), (10, 10), (11, 10)],
        [1, 1, 0, 1, 0],
        u_bar=[3, 4, 0, 1, 0],
        v_bar=[0, 0, 3, 0, 4],
        w=[3, Fraction(1, 2), Fraction(1, 2), 1, 1],
        b=25,
        norm=norm,
    )
