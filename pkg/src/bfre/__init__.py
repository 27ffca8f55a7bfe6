"""Solver for systems of bipolar fuzzy relational equations.

Systems of the form  A+ phi x  OR  A- phi (1 - x)  =  b  under an arbitrary
continuous t-norm phi: the feasible region is resolved exactly as a finite
union of boxes, and coordinate-monotone objectives are minimized globally
over it by comparing closed-form per-box corner candidates.
"""

from .intervals import EPS, IntervalUnion, set_tolerance
from .optimize import (
    Candidate,
    InfeasibleError,
    MonotoneObjective,
    check_monotone,
    global_optimum,
    jacobi_eigenvalues,
    local_candidate,
    objective_catalog,
)
from .oracle import breakpoint_grid, brute_force_min, grid_membership_check
from .resolution import (
    AdmissibleFunction,
    FeasibleBox,
    RegionResult,
    ResourceLimitError,
    count_bound,
    enumerate_admissible,
    feasible_region,
    solution_box,
)
from .simplify import ReductionState, RuleEvent, simplify_to_fixpoint
from .system import (
    BipolarSystem,
    CellAnalysis,
    FeasibilityVerdict,
    cell_sets,
    is_feasible_point,
    necessary_feasibility,
    residual,
    satisfies_equation,
)
from .tnorms import (
    TNORM_KINDS,
    ScalarEqSolution,
    TNormSpec,
    solve_scalar_eq,
    solve_scalar_eq_numeric,
    tnorm_eval,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissibleFunction",
    "BipolarSystem",
    "Candidate",
    "CellAnalysis",
    "EPS",
    "FeasibilityVerdict",
    "FeasibleBox",
    "InfeasibleError",
    "IntervalUnion",
    "MonotoneObjective",
    "RegionResult",
    "ReductionState",
    "ResourceLimitError",
    "RuleEvent",
    "ScalarEqSolution",
    "TNORM_KINDS",
    "TNormSpec",
    "breakpoint_grid",
    "brute_force_min",
    "cell_sets",
    "check_monotone",
    "count_bound",
    "enumerate_admissible",
    "feasible_region",
    "global_optimum",
    "grid_membership_check",
    "is_feasible_point",
    "jacobi_eigenvalues",
    "local_candidate",
    "necessary_feasibility",
    "objective_catalog",
    "residual",
    "satisfies_equation",
    "set_tolerance",
    "simplify_to_fixpoint",
    "solution_box",
    "solve_scalar_eq",
    "solve_scalar_eq_numeric",
    "tnorm_eval",
]
