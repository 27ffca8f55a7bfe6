"""Region-preserving reduction of a system before enumeration.

Five rules fix variables, delete redundant equations and remove resolved
columns.  Each rule preserves the feasible region of the original system, so
they are applied in a fixed cycle (1 through 5) until a full cycle changes
nothing.

All rule predicates read the solution sets of the ORIGINAL analysis; deleting
a row or column only removes its index from the active sets.  Rebuilding the
sets from a physically reduced matrix would loosen the column bounds and
admit points that violate the deleted equations, so it is never done.  For
the same reason a deleted column is never cited by a later rule application:
witness columns are always drawn from the currently active set.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .intervals import IntervalUnion
from .system import CellAnalysis

__all__ = [
    "RuleEvent",
    "ReductionState",
    "apply_rule1",
    "apply_rule2",
    "apply_rule3",
    "apply_rule4",
    "apply_rule5",
    "simplify_to_fixpoint",
    "reduced_is_feasible",
]


@dataclass(frozen=True)
class RuleEvent:
    """One audit-log entry: which rule did what, and why."""

    rule: int
    action: str  # "fix" | "drop_row" | "drop_col"
    row: int | None = None
    col: int | None = None
    value: float | None = None
    why: str = ""

    def to_dict(self) -> dict:
        out: dict = {"rule": self.rule, "action": self.action}
        if self.row is not None:
            out["row"] = self.row
        if self.col is not None:
            out["col"] = self.col
        if self.value is not None:
            out["value"] = self.value
        if self.why:
            out["why"] = self.why
        return out


@dataclass
class ReductionState:
    """Active row/column index sets, fixed variables and the audit log.

    Indices always refer to the original system.  Fixed columns are exactly
    the deleted columns; their keys are disjoint from active_cols.
    """

    active_rows: list[int]
    active_cols: list[int]
    fixed: dict[int, float] = field(default_factory=dict)
    log: list[RuleEvent] = field(default_factory=list)

    @classmethod
    def initial(cls, analysis: CellAnalysis) -> "ReductionState":
        return cls(list(range(analysis.m)), list(range(analysis.n)))

    def row_candidates(self, analysis: CellAnalysis, i: int) -> list[int]:
        """Active columns that can witness equation i."""
        return [j for j in self.active_cols if not analysis.restricted[i][j].is_empty]

    def drop_row(self, i: int, rule: int, why: str) -> None:
        self.active_rows.remove(i)
        self.log.append(RuleEvent(rule, "drop_row", row=i, why=why))

    def fix_col(self, j: int, value: float, rule: int, why: str) -> None:
        self.active_cols.remove(j)
        self.fixed[j] = value
        self.log.append(RuleEvent(rule, "fix", col=j, value=value, why=why))


def apply_rule1(state: ReductionState, analysis: CellAnalysis) -> bool:
    """Equations with zero right-hand side are redundant: delete them."""
    changed = False
    for i in list(state.active_rows):
        if analysis.system.b[i] == 0.0:
            state.drop_row(i, 1, f"b[{i}] = 0")
            changed = True
    return changed


def apply_rule2(state: ReductionState, analysis: CellAnalysis) -> bool:
    """Singleton column bounds pin their variable.

    When a column bound collapses to a point k, every feasible solution has
    x_j = k; the column is resolved, and every equation whose restricted set
    at j contains k is already satisfied and can be deleted.
    """
    changed = False
    for j in list(state.active_cols):
        col = analysis.col_bounds[j]
        if not col.is_singleton:
            continue
        k = col.singleton_value
        state.fix_col(j, k, 2, f"column bound {j} is the single point {k:.12g}")
        for i in list(state.active_rows):
            if analysis.restricted[i][j].contains(k):
                state.drop_row(i, 2, f"x[{j}] = {k:.12g} witnesses equation {i}")
        changed = True
    return changed


def _find_dominated_row(
    state: ReductionState, analysis: CellAnalysis
) -> tuple[int, int] | None:
    """First (target, witness) pair where the witness row's restricted sets
    are contained in the target's on every active column.

    Identical rows tie-break by keeping the smaller index.
    """
    for i0 in state.active_rows:
        for i in state.active_rows:
            if i == i0:
                continue
            if not all(
                analysis.restricted[i][j].issubset(analysis.restricted[i0][j])
                for j in state.active_cols
            ):
                continue
            identical = all(
                analysis.restricted[i][j].approx_equals(analysis.restricted[i0][j])
                for j in state.active_cols
            )
            if identical and i > i0:
                continue
            return i0, i
    return None


def apply_rule3(state: ReductionState, analysis: CellAnalysis) -> bool:
    """Delete equations dominated by another equation.

    If some row i has restricted sets contained in row i0's everywhere, any
    point satisfying i also satisfies i0, so i0 is redundant.  Rows are
    deleted one at a time so the witness row always survives its target.
    """
    changed = False
    while True:
        found = _find_dominated_row(state, analysis)
        if found is None:
            return changed
        i0, i = found
        state.drop_row(i0, 3, f"restricted sets of row {i} contained in row {i0}'s")
        changed = True


def apply_rule4(state: ReductionState, analysis: CellAnalysis) -> bool:
    """Equations with a single witness column holding a single point pin it.

    If equation i0 can only be witnessed at column j0 and the restricted set
    there is the point k, feasibility forces x_j0 = k; fix it, resolve the
    column, and delete every equation witnessed by k at j0.
    """
    changed = False
    for i0 in list(state.active_rows):
        if i0 not in state.active_rows:
            continue
        candidates = state.row_candidates(analysis, i0)
        if len(candidates) != 1:
            continue
        j0 = candidates[0]
        cell = analysis.restricted[i0][j0]
        if not cell.is_singleton:
            continue
        k = cell.singleton_value
        state.fix_col(
            j0, k, 4, f"equation {i0} forces x[{j0}] = {k:.12g} (only witness)"
        )
        for i in list(state.active_rows):
            if analysis.restricted[i][j0].contains(k):
                state.drop_row(i, 4, f"x[{j0}] = {k:.12g} witnesses equation {i}")
        changed = True
    return changed


def apply_rule5(state: ReductionState, analysis: CellAnalysis) -> bool:
    """Delete equations whose restricted set fills an entire column bound.

    Such an equation is witnessed by every admissible value of that variable
    and constrains nothing.
    """
    changed = False
    for i0 in list(state.active_rows):
        for j0 in state.active_cols:
            col = analysis.col_bounds[j0]
            if col.is_empty:
                continue
            if analysis.restricted[i0][j0].approx_equals(col):
                state.drop_row(
                    i0, 5, f"restricted set at ({i0}, {j0}) equals column bound {j0}"
                )
                changed = True
                break
    return changed


_RULES = (apply_rule1, apply_rule2, apply_rule3, apply_rule4, apply_rule5)


def simplify_to_fixpoint(analysis: CellAnalysis) -> ReductionState:
    """Apply the rules in the cycle 1..5 until a full cycle changes nothing.

    Every change strictly shrinks the active index sets, so the loop runs at
    most m + n cycles.  The log is deterministic for a given input.
    """
    state = ReductionState.initial(analysis)
    while True:
        changed = False
        for rule in _RULES:
            if rule(state, analysis):
                changed = True
        if not changed:
            return state


def reduced_is_feasible(
    analysis: CellAnalysis,
    state: ReductionState,
    x,
    eps: float | None = None,
) -> bool:
    """Membership in the reduced problem: fixed coordinates must match, the
    active columns must respect their bounds, and every active equation needs
    an active witness column."""
    for j, k in state.fixed.items():
        if not IntervalUnion.point(k).contains(x[j], eps):
            return False
    if not all(analysis.col_bounds[j].contains(x[j], eps) for j in state.active_cols):
        return False
    return all(
        any(
            analysis.restricted[i][j].contains(x[j], eps)
            for j in state.active_cols
            if not analysis.restricted[i][j].is_empty
        )
        for i in state.active_rows
    )
