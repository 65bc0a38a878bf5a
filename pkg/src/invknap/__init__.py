"""Exact solvers for the fractional knapsack problem and its inverse variants.

The forward problem is solved greedily and certified by an optimality
criterion checker; the inverse problem (make a given 0/1 vector optimal by
bounded integer changes to profits and costs) is solved exactly under the
l1 norm with fixed costs and under the l-infinity norm, with exhaustive
brute-force oracles as ground truth at desk scale.
"""

from .core import (
    BinarySolution,
    BoundViolation,
    BudgetMismatch,
    CostWeights,
    FkpInstance,
    FractionalSolution,
    InfeasibleRepair,
    InvalidPartition,
    InvariantViolation,
    InverseInstance,
    InverseSolution,
    InvKnapError,
    Item,
    LengthMismatch,
    ModificationBounds,
    ModificationVector,
    NonPositiveResult,
    Norm,
    NormMismatch,
    NotL1,
    NotLInf,
    OracleLimitExceeded,
    OutOfRange,
    ParseError,
    SolutionStatus,
    TooLarge,
    apply_modifications,
    ceil_rational,
    ratio_of,
)
from .fkp import OptimalityReport, Verdict, check_optimality, solve_greedy
from .inverse_l1 import (
    FeasibilityBounds,
    PresolveResult,
    candidate_set,
    cost_at,
    feasibility_bounds,
    l1_objective,
    presolve,
    solve_fifkp,
)
from .inverse_linf import (
    Case,
    CaseKind,
    RepairPlan,
    classify_case,
    feasible_at,
    linf_objective,
    pairwise_min_budget,
    repair_level,
    solve_linf,
    threshold_at,
)
from .oracle import OracleConfig, brute_fkp, brute_inverse, enumeration_space
from .reduction import (
    GadgetOutput,
    PartitionInstance,
    build_gadget,
    decide_partition_via_gadget,
    has_equal_split,
)
from .generate import gen_partition_values, gen_random
from .serialize import instance_document, parse_instance, serialize_instance
from .bench import BenchRecord, bench_instance, plot_scaling, run_bench

__version__ = "0.1.0"

__all__ = [
    "BinarySolution",
    "BoundViolation",
    "BudgetMismatch",
    "CostWeights",
    "FkpInstance",
    "FractionalSolution",
    "InfeasibleRepair",
    "InvalidPartition",
    "InvariantViolation",
    "InverseInstance",
    "InverseSolution",
    "InvKnapError",
    "Item",
    "LengthMismatch",
    "ModificationBounds",
    "ModificationVector",
    "NonPositiveResult",
    "Norm",
    "NormMismatch",
    "NotL1",
    "NotLInf",
    "OracleLimitExceeded",
    "OutOfRange",
    "ParseError",
    "SolutionStatus",
    "TooLarge",
    "apply_modifications",
    "ceil_rational",
    "ratio_of",
    "OptimalityReport",
    "Verdict",
    "check_optimality",
    "solve_greedy",
    "FeasibilityBounds",
    "PresolveResult",
    "candidate_set",
    "cost_at",
    "feasibility_bounds",
    "l1_objective",
    "presolve",
    "solve_fifkp",
    "Case",
    "CaseKind",
    "RepairPlan",
    "classify_case",
    "feasible_at",
    "linf_objective",
    "pairwise_min_budget",
    "repair_level",
    "solve_linf",
    "threshold_at",
    "OracleConfig",
    "brute_fkp",
    "brute_inverse",
    "enumeration_space",
    "GadgetOutput",
    "PartitionInstance",
    "build_gadget",
    "decide_partition_via_gadget",
    "has_equal_split",
    "gen_partition_values",
    "gen_random",
    "instance_document",
    "parse_instance",
    "serialize_instance",
    "BenchRecord",
    "bench_instance",
    "plot_scaling",
    "run_bench",
    "__version__",
]
