"""JSON instance documents: one object with a budget, an optional target
solution, and an item list.

Schema: ``{"b": int, "x_star": [0|1, ...], "items": [{"p": int, "c": int,
"u_bar": int, "v_bar": int, "lambda_bar": int, "mu_bar": int, "w": rational,
"w_cost": rational}, ...]}``. Rationals are ``"num/den"`` strings (bare
integers also accepted); floats are rejected to keep every value exact.
Field order never matters, unknown fields are rejected, omitted bounds
default to 0 and omitted weights to 1. Without ``x_star`` the document is a
bare forward instance and items may carry only ``p`` and ``c``.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .core import (
    BinarySolution,
    CostWeights,
    FkpInstance,
    InvariantViolation,
    InverseInstance,
    Item,
    ModificationBounds,
    Norm,
    ParseError,
)

_ITEM_REQUIRED = ("p", "c")
_ITEM_BOUNDS = ("u_bar", "v_bar", "lambda_bar", "mu_bar")
_ITEM_WEIGHTS = ("w", "w_cost")
_ITEM_FIELDS = frozenset(_ITEM_REQUIRED + _ITEM_BOUNDS + _ITEM_WEIGHTS)


def _as_int(value: object, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{where}: expected an integer, got {value!r}")
    return value


def _as_rational(value: object, where: str) -> Fraction:
    if isinstance(value, bool):
        raise ParseError(f"{where}: expected an integer or 'num/den' string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"{where}: not a valid rational: {value!r}") from exc
    raise ParseError(
        f"{where}: expected an integer or 'num/den' string, got {value!r} "
        "(floats are rejected to keep arithmetic exact)"
    )


def parse_instance(text: str, norm: Norm = Norm.L1) -> InverseInstance | FkpInstance:
    """Parse a document into an inverse instance, or a bare forward instance.

    The file format carries no norm; the caller chooses one (the command line
    passes its ``--norm`` flag). Violated domain invariants surface as
    :class:`~invknap.core.InvariantViolation` naming the broken rule, format
    problems as :class:`~invknap.core.ParseError` with field context.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ParseError("the top level must be a JSON object")
    unknown = set(doc) - {"b", "x_star", "items"}
    if unknown:
        raise ParseError(f"unknown top-level fields: {sorted(unknown)}")
    if "b" not in doc or "items" not in doc:
        raise ParseError("the document needs both 'b' and 'items'")

    budget = _as_int(doc["b"], "b")
    if budget < 1:
        raise InvariantViolation(f"b must be >= 1, got {budget}")
    raw_items = doc["items"]
    if not isinstance(raw_items, list):
        raise ParseError("'items' must be a list")
    if not raw_items:
        raise InvariantViolation("an instance needs at least one item")

    inverse_mode = "x_star" in doc
    items: list[Item] = []
    bounds: dict[str, list[int]] = {name: [] for name in _ITEM_BOUNDS}
    weights: dict[str, list[Fraction]] = {name: [] for name in _ITEM_WEIGHTS}
    for idx, raw in enumerate(raw_items):
        where = f"items[{idx}]"
        if not isinstance(raw, dict):
            raise ParseError(f"{where}: expected an object")
        unknown = set(raw) - _ITEM_FIELDS
        if unknown:
            raise ParseError(f"{where}: unknown fields: {sorted(unknown)}")
        if not inverse_mode and any(name in raw for name in _ITEM_BOUNDS + _ITEM_WEIGHTS):
            raise ParseError(
                f"{where}: modification fields require an 'x_star' at the top level"
            )
        for name in _ITEM_REQUIRED:
            if name not in raw:
                raise ParseError(f"{where}: missing required field '{name}'")
        items.append(Item(_as_int(raw["p"], f"{where}.p"), _as_int(raw["c"], f"{where}.c")))
        for name in _ITEM_BOUNDS:
            bounds[name].append(_as_int(raw.get(name, 0), f"{where}.{name}"))
        for name in _ITEM_WEIGHTS:
            weights[name].append(_as_rational(raw.get(name, 1), f"{where}.{name}"))

    base = FkpInstance(tuple(items), budget)
    if not inverse_mode:
        return base
    raw_x = doc["x_star"]
    if not isinstance(raw_x, list):
        raise ParseError("'x_star' must be a list of 0/1 entries")
    x_star = BinarySolution(tuple(_as_int(v, f"x_star[{i}]") for i, v in enumerate(raw_x)))
    return InverseInstance(
        base=base,
        x_star=x_star,
        bounds=ModificationBounds(
            tuple(bounds["u_bar"]),
            tuple(bounds["v_bar"]),
            tuple(bounds["lambda_bar"]),
            tuple(bounds["mu_bar"]),
        ),
        weights=CostWeights(tuple(weights["w"]), tuple(weights["w_cost"])),
        norm=norm,
    )


def _rational_str(x: Fraction) -> str:
    return str(x)


def instance_document(obj: InverseInstance | FkpInstance) -> dict:
    """The JSON-ready dict for an instance; inverse instances carry all fields."""
    if isinstance(obj, FkpInstance):
        return {
            "b": obj.budget,
            "items": [{"p": item.profit, "c": item.cost} for item in obj.items],
        }
    doc = {
        "b": obj.base.budget,
        "x_star": list(obj.x_star.values),
        "items": [
            {
                "p": item.profit,
                "c": item.cost,
                "u_bar": obj.bounds.u_bar[i],
                "v_bar": obj.bounds.v_bar[i],
                "lambda_bar": obj.bounds.lambda_bar[i],
                "mu_bar": obj.bounds.mu_bar[i],
                "w": _rational_str(obj.weights.w[i]),
                "w_cost": _rational_str(obj.weights.w_cost[i]),
            }
            for i, item in enumerate(obj.base.items)
        ],
    }
    return doc


def serialize_instance(obj: InverseInstance | FkpInstance) -> str:
    """UTF-8 JSON text; parsing it back yields an equal instance."""
    return json.dumps(instance_document(obj), indent=2) + "\n"
