"""Command-line interface.

Subcommands: ``solve`` and ``check`` for the forward problem, ``inverse``
and ``oracle`` for the inverse problem, ``gen`` for instance files, and
``bench`` for the timing CSV plus scaling figure. Results print as JSON on
stdout; exit codes are 0 (success), 2 (infeasible), 3 (invalid input) and
4 (oracle limit exceeded).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bench import run_bench, plot_scaling
from .core import (
    FkpInstance,
    InverseInstance,
    InvKnapError,
    Norm,
    OracleLimitExceeded,
    SolutionStatus,
    apply_modifications,
)
from .fkp import check_optimality, solve_greedy
from .generate import gen_random, gen_partition_values
from .inverse_l1 import solve_fifkp
from .inverse_linf import solve_linf
from .oracle import OracleConfig, brute_inverse
from .reduction import build_gadget
from .serialize import instance_document, parse_instance, serialize_instance

EXIT_OK = 0
EXIT_INFEASIBLE = 2
EXIT_INVALID = 3
EXIT_ORACLE_LIMIT = 4


def _emit(doc: dict) -> None:
    print(json.dumps(doc, indent=2))


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _load(path: str, norm: Norm = Norm.L1) -> InverseInstance | FkpInstance:
    text = Path(path).read_text(encoding="utf-8")
    return parse_instance(text, norm)


def _require_inverse(obj: InverseInstance | FkpInstance) -> InverseInstance:
    if isinstance(obj, FkpInstance):
        raise InvKnapError("this command needs an instance with an x_star")
    return obj


def _cmd_solve(args: argparse.Namespace) -> int:
    obj = _load(args.file)
    inst = obj.base if isinstance(obj, InverseInstance) else obj
    solution, objective = solve_greedy(inst)
    used = sum(item.cost * value for item, value in zip(inst.items, solution.values))
    _emit(
        {
            "objective": str(objective),
            "values": [str(v) for v in solution.values],
            "budget_used": str(used),
        }
    )
    return EXIT_OK


def _cmd_check(args: argparse.Namespace) -> int:
    inv = _require_inverse(_load(args.file))
    report = check_optimality(inv.base, inv.x_star)
    _emit(
        {
            "verdict": report.verdict.value,
            "lhs_sum": report.lhs_sum,
            "budget": inv.base.budget,
            "witness": list(report.witness) if report.witness else None,
        }
    )
    return EXIT_OK


def _solution_document(inv: InverseInstance, result) -> dict:
    mods = result.mods
    modified = apply_modifications(inv, mods)
    echo = instance_document(modified)
    echo["x_star"] = list(inv.x_star.values)
    verdict = check_optimality(modified, inv.x_star)
    return {
        "status": "optimal",
        "objective": str(result.objective),
        "mods": {
            "u": list(mods.u),
            "v": list(mods.v),
            "lambda": list(mods.lam),
            "mu": list(mods.mu),
        },
        "modified": echo,
        "check": verdict.verdict.value,
    }


def _cmd_inverse(args: argparse.Namespace) -> int:
    norm = Norm(args.norm)
    inv = _require_inverse(_load(args.file, norm))
    if norm is Norm.L1:
        result = solve_fifkp(inv, args.mode)
    else:
        result = solve_linf(inv)
    if result.status is SolutionStatus.INFEASIBLE:
        _emit({"status": "infeasible", "norm": args.norm})
        return EXIT_INFEASIBLE
    doc = _solution_document(inv, result)
    doc["norm"] = args.norm
    if norm is Norm.L1:
        doc["mode"] = args.mode
    _emit(doc)
    return EXIT_OK


def _cmd_oracle(args: argparse.Namespace) -> int:
    norm = Norm(args.norm)
    inv = _require_inverse(_load(args.file, norm))
    result = brute_inverse(inv, OracleConfig(max_space=args.max_space))
    if result.status is SolutionStatus.INFEASIBLE:
        _emit({"status": "infeasible", "norm": args.norm})
        return EXIT_INFEASIBLE
    doc = _solution_document(inv, result)
    doc["norm"] = args.norm
    _emit(doc)
    return EXIT_OK


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.kind == "random":
        inst = gen_random(
            n=args.n,
            seed=args.seed,
            max_value=args.max_value,
            max_bound=args.max_bound,
            case=args.case,
            profit_only=args.profit_only,
        )
        summary = {"path": args.out, "kind": "random", "n": args.n, "seed": args.seed}
    else:
        if args.values:
            values = [int(v) for v in args.values.split(",")]
            from .reduction import PartitionInstance

            pp = PartitionInstance.from_values(values)
        else:
            pp = gen_partition_values(args.n, args.seed, args.max_value)
        gadget = build_gadget(pp)
        inst = gadget.instance
        summary = {
            "path": args.out,
            "kind": "partition",
            "values": list(pp.values),
            "half_sum": pp.half_sum,
            "decision_budget": str(gadget.decision_budget),
        }
    Path(args.out).write_text(serialize_instance(inst), encoding="utf-8")
    _emit(summary)
    return EXIT_OK


def _cmd_bench(args: argparse.Namespace) -> int:
    n_list = [int(v) for v in args.n.split(",") if v]
    norms = [v for v in args.norms.split(",") if v]
    modes = [v for v in args.modes.split(",") if v]
    records = run_bench(n_list, norms, modes, args.seed, args.out)
    plot_path = None
    if not args.no_plot:
        plot_path = args.plot or str(Path(args.out).with_suffix(".png"))
        plot_scaling(records, plot_path)
    _emit({"out": args.out, "rows": len(records), "plot": plot_path})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="invknap",
        description="Exact fractional-knapsack solvers and their inverse variants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve the forward fractional knapsack greedily")
    p.add_argument("file")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("check", help="check whether x_star satisfies the optimality criterion")
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("inverse", help="solve the inverse problem")
    p.add_argument("--norm", choices=["l1", "linf"], required=True)
    p.add_argument("--mode", choices=["paper", "refined"], default="refined")
    p.add_argument("file")
    p.set_defaults(func=_cmd_inverse)

    p = sub.add_parser("oracle", help="exhaustive inverse solve (ground truth at desk scale)")
    p.add_argument("--norm", choices=["l1", "linf"], required=True)
    p.add_argument("--max-space", type=int, default=OracleConfig().max_space)
    p.add_argument("file")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("gen", help="generate an instance file")
    p.add_argument("kind", choices=["random", "partition"])
    p.add_argument("-o", "--out", required=True)
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-value", type=int, default=10)
    p.add_argument("--max-bound", type=int, default=3)
    p.add_argument("--case", choices=["equal", "deficit", "surplus"], default="equal")
    p.add_argument("--profit-only", action="store_true")
    p.add_argument("--values", help="comma-separated partition values (partition kind only)")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", help="time the solvers and write a CSV plus a scaling figure")
    p.add_argument("--n", required=True, help="comma-separated instance sizes")
    p.add_argument("--norms", default="l1,linf")
    p.add_argument("--modes", default="paper")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.add_argument("--plot", help="figure path (default: CSV path with .png)")
    p.add_argument("--no-plot", action="store_true")
    p.set_defaults(func=_cmd_bench)

    return parser


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OracleLimitExceeded as exc:
        return _fail(str(exc), EXIT_ORACLE_LIMIT)
    except (InvKnapError, OSError, ValueError) as exc:
        return _fail(str(exc), EXIT_INVALID)


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
