"""Resolution of the feasible region as a finite union of boxes.

An admissible function assigns one witness column to every active equation
such that equations sharing a column keep a jointly non-empty restricted set.
Each admissible function generates a box: the Cartesian product of the joint
restricted sets on assigned columns, the column bounds on unassigned columns,
and the fixed-variable singletons.  The union of the boxes over all
admissible functions is exactly the feasible region; the boxes may overlap
and are emitted without deduplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .intervals import IntervalUnion, intersect_all
from .simplify import ReductionState, simplify_to_fixpoint
from .system import (
    BipolarSystem,
    CellAnalysis,
    FeasibilityVerdict,
    necessary_feasibility,
)

__all__ = [
    "AdmissibleFunction",
    "FeasibleBox",
    "RegionResult",
    "ResourceLimitError",
    "enumerate_admissible",
    "count_bound",
    "solution_box",
    "feasible_region",
    "COUNT_BOUND_CAP",
    "DEFAULT_MAX_ASSIGNMENTS",
]

#: Saturation sentinel for the admissible-count upper bound.
COUNT_BOUND_CAP = 10 ** 18

#: Default cap on the number of enumerated assignments.
DEFAULT_MAX_ASSIGNMENTS = 10 ** 6


class ResourceLimitError(RuntimeError):
    """Raised when enumeration or grid evaluation would exceed its cap."""


@dataclass(frozen=True)
class AdmissibleFunction:
    """A witness-column assignment, one column per active row.

    columns[k] is the column assigned to rows[k]; indices refer to the
    original system.  For every column used by several rows, the intersection
    of their restricted sets is non-empty.
    """

    rows: tuple[int, ...]
    columns: tuple[int, ...]

    def items(self) -> Iterator[tuple[int, int]]:
        return zip(self.rows, self.columns)

    def __len__(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class FeasibleBox:
    """One product box of the feasible region, tagged with its source.

    factors[j] is the admissible set for x_j: a singleton for fixed
    variables, the joint restricted set for assigned columns and the column
    bound otherwise.  Every factor is non-empty.
    """

    factors: tuple[IntervalUnion, ...]
    source: AdmissibleFunction
    fixed: tuple[tuple[int, float], ...]

    def contains(self, x: Sequence[float], eps: float | None = None) -> bool:
        return all(f.contains(x[j], eps) for j, f in enumerate(self.factors))


def enumerate_admissible(
    analysis: CellAnalysis,
    state: ReductionState,
    max_count: int = DEFAULT_MAX_ASSIGNMENTS,
) -> list[AdmissibleFunction]:
    """All admissible functions of the (reduced) problem, lexicographic.

    Depth-first search over active rows in ascending order, candidate
    columns in ascending order.  A branch extends only while the running
    per-column intersection of restricted sets stays non-empty, which is
    exactly the admissibility condition, so the output is complete.
    """
    rows = tuple(sorted(state.active_rows))
    candidates = [state.row_candidates(analysis, i) for i in rows]
    out: list[AdmissibleFunction] = []
    chosen: list[int] = []
    used: dict[int, list[IntervalUnion]] = {}

    def walk(k: int) -> None:
        if k == len(rows):
            if len(out) >= max_count:
                raise ResourceLimitError(
                    f"more than {max_count} admissible assignments; raise the cap"
                )
            out.append(AdmissibleFunction(rows, tuple(chosen)))
            return
        i = rows[k]
        for j in candidates[k]:
            stack = used.get(j)
            if stack is None:
                used[j] = [analysis.restricted[i][j]]
            else:
                joint = stack[-1] & analysis.restricted[i][j]
                if joint.is_empty:
                    continue
                stack.append(joint)
            chosen.append(j)
            walk(k + 1)
            chosen.pop()
            if len(used[j]) == 1:
                del used[j]
            else:
                used[j].pop()

    walk(0)
    return out


def count_bound(analysis: CellAnalysis, state: ReductionState) -> int:
    """Upper bound on the number of admissible functions: the product of the
    active rows' candidate counts, saturated at COUNT_BOUND_CAP."""
    bound = 1
    for i in state.active_rows:
        bound *= len(state.row_candidates(analysis, i))
        if bound >= COUNT_BOUND_CAP:
            return COUNT_BOUND_CAP
    return bound


def solution_box(
    e: AdmissibleFunction, analysis: CellAnalysis, state: ReductionState
) -> FeasibleBox:
    """Assemble the box generated by an admissible function."""
    assigned: dict[int, list[int]] = {}
    for i, j in e.items():
        assigned.setdefault(j, []).append(i)
    factors = []
    for j in range(analysis.n):
        if j in state.fixed:
            factors.append(IntervalUnion.point(state.fixed[j]))
        elif j in assigned:
            joint = intersect_all(analysis.restricted[i][j] for i in assigned[j])
            if joint.is_empty:
                raise RuntimeError(
                    f"assignment {e.columns} produced an empty factor at column {j}"
                )
            factors.append(joint)
        else:
            factors.append(analysis.col_bounds[j])
    return FeasibleBox(tuple(factors), e, tuple(sorted(state.fixed.items())))


@dataclass
class RegionResult:
    """Full pipeline output: verdict, reduction, assignments and boxes."""

    verdict: FeasibilityVerdict
    analysis: CellAnalysis
    reduction: ReductionState | None
    admissible: tuple[AdmissibleFunction, ...]
    boxes: tuple[FeasibleBox, ...]

    @property
    def is_feasible(self) -> bool:
        return self.verdict.ok and bool(self.boxes)


def feasible_region(
    system: BipolarSystem,
    *,
    simplify: bool = True,
    max_count: int = DEFAULT_MAX_ASSIGNMENTS,
) -> RegionResult:
    """Resolve the feasible region of a system end to end.

    Analysis, necessary feasibility checks, reduction to fixpoint (unless
    disabled), assignment enumeration and box assembly.  Infeasibility found
    by the necessary checks is reported in the verdict; an empty assignment
    set (possible for systems passing the necessary checks) yields no boxes,
    which also means infeasible.
    """
    analysis = CellAnalysis(system)
    verdict = necessary_feasibility(analysis)
    if not verdict.ok:
        return RegionResult(verdict, analysis, None, (), ())
    state = (
        simplify_to_fixpoint(analysis) if simplify else ReductionState.initial(analysis)
    )
    admissible = enumerate_admissible(analysis, state, max_count)
    boxes = tuple(solution_box(e, analysis, state) for e in admissible)
    return RegionResult(verdict, analysis, state, tuple(admissible), boxes)
