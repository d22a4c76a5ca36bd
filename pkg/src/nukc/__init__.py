"""Two-radius covering with outliers, solved by round-or-cut.

The public surface mirrors the pipeline: model types, the greedy radius
partition, the firefighter reduction and its exact solver, the ellipsoid
engine, the well separated inner solver, and the outer feasibility solver
with its scale search.  Exact enumeration oracles and instance generators
support testing and experiments.
"""

from .bruteforce import (
    BruteForceResult,
    HullChecker,
    brute_2ff,
    brute_force_nukc,
    hull_coverage_vectors,
    validate_cut_on_hull,
)
from .clustering import HSResult, hs_partition
from .ellipsoid import (
    EllipsoidState,
    OracleContractError,
    Rounded,
    RoundOrCutConfig,
    RoundOrCutResult,
    Separating,
    default_max_iters,
    det_shrink_ratio,
    ellipsoid_update,
    initial_ellipsoid,
    run_round_or_cut,
)
from .firefighter import (
    TwoFFInstance,
    TwoFFSolution,
    covered_leaves,
    is_valuable,
    selection_value,
    solve_2ff,
)
from .generators import (
    PlantedTruth,
    graph_instance,
    planted_instance,
    planted_kcenter_instance,
    uniform_instance,
)
from .model import (
    CoverageVector,
    Cut,
    MetricError,
    MetricSpace,
    NUkCInstance,
    NUkCSolution,
    SizeGuardError,
    TheoryViolationError,
    WellSepNUkCInstance,
    ball,
    covered_points,
    eval_cut,
    verify_solution,
)
from .outer import (
    OptimizeResult,
    OuterOracle,
    SolveResult,
    enumerate_candidates,
    optimize,
    solve_feasibility,
)
from .presolve import coverage_upper_bound, greedy_cover
from .reduction import (
    FracFFSolution,
    frac_ff_solution,
    lift_ff_solution,
    reduce_to_firefighter,
    y_witnesses,
)
from .serialize import (
    SolutionRecord,
    instance_from_json,
    instance_to_json,
    solution_from_json,
    solution_to_json,
)
from .wellsep import (
    SolverConfig,
    WellSepResult,
    solve_wellsep,
    wellsep_separation_oracle,
)

__version__ = "0.1.0"

__all__ = [
    "BruteForceResult",
    "CoverageVector",
    "Cut",
    "EllipsoidState",
    "FracFFSolution",
    "HSResult",
    "HullChecker",
    "MetricError",
    "MetricSpace",
    "NUkCInstance",
    "NUkCSolution",
    "OptimizeResult",
    "OracleContractError",
    "OuterOracle",
    "PlantedTruth",
    "Rounded",
    "RoundOrCutConfig",
    "RoundOrCutResult",
    "Separating",
    "SizeGuardError",
    "SolutionRecord",
    "SolveResult",
    "SolverConfig",
    "TheoryViolationError",
    "TwoFFInstance",
    "TwoFFSolution",
    "WellSepNUkCInstance",
    "WellSepResult",
    "ball",
    "brute_2ff",
    "brute_force_nukc",
    "covered_leaves",
    "covered_points",
    "coverage_upper_bound",
    "default_max_iters",
    "det_shrink_ratio",
    "ellipsoid_update",
    "enumerate_candidates",
    "eval_cut",
    "frac_ff_solution",
    "graph_instance",
    "greedy_cover",
    "hs_partition",
    "hull_coverage_vectors",
    "initial_ellipsoid",
    "instance_from_json",
    "instance_to_json",
    "is_valuable",
    "lift_ff_solution",
    "optimize",
    "planted_instance",
    "planted_kcenter_instance",
    "reduce_to_firefighter",
    "run_round_or_cut",
    "selection_value",
    "solution_from_json",
    "solution_to_json",
    "solve_2ff",
    "solve_feasibility",
    "solve_wellsep",
    "uniform_instance",
    "validate_cut_on_hull",
    "verify_solution",
    "wellsep_separation_oracle",
    "y_witnesses",
]
