"""Independent brute-force verification of the resolution pipeline.

The only code shared with the pipeline is the point membership test; regions
and optima are re-derived by exhaustive evaluation over a breakpoint grid.
The grid contains every interval endpoint appearing in the analysis, so every
corner candidate the optimizer can produce is itself a grid point.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

from .optimize import MonotoneObjective
from .resolution import FeasibleBox, ResourceLimitError
from .system import CellAnalysis, is_feasible_point

__all__ = [
    "GridReport",
    "breakpoint_grid",
    "grid_membership_check",
    "brute_force_min",
    "DEFAULT_GRID_CAP",
]

#: Default cap on the number of evaluated grid points.
DEFAULT_GRID_CAP = 2_000_000


def _dedup_sorted(values: list[float], tol: float = 1e-12) -> list[float]:
    out: list[float] = []
    for v in sorted(values):
        if not out or v - out[-1] > tol:
            out.append(v)
    return out


def breakpoint_grid(analysis: CellAnalysis, step: float) -> list[list[float]]:
    """Per-column sorted value lists: every endpoint of every set touching
    the column, plus multiples of step in [0, 1]."""
    if step <= 0.0:
        raise ValueError("step must be positive")
    ticks = [k * step for k in range(int(1.0 / step) + 1)] + [1.0]
    grid = []
    for j in range(analysis.n):
        values = list(ticks)
        values.extend(analysis.col_bounds[j].endpoints())
        for i in range(analysis.m):
            values.extend(analysis.relaxed[i][j].endpoints())
            values.extend(analysis.exact[i][j].endpoints())
            values.extend(analysis.restricted[i][j].endpoints())
        grid.append(_dedup_sorted([min(1.0, max(0.0, v)) for v in values]))
    return grid


def _iter_grid(grid: Sequence[Sequence[float]], cap: int, seed: int):
    """Deterministic iterator over the grid: exhaustive when the Cartesian
    size fits the cap, seeded uniform subsampling otherwise."""
    total = 1
    for col in grid:
        total *= len(col)
    if total <= cap:
        return total, False, itertools.product(*grid)
    rng = random.Random(seed)
    points = (tuple(rng.choice(col) for col in grid) for _ in range(cap))
    return total, True, points


@dataclass
class GridReport:
    """Outcome of a grid sweep comparing two membership definitions."""

    total_points: int
    checked: int
    sampled: bool
    mismatches: list[tuple[tuple[float, ...], bool, bool]]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def grid_membership_check(
    analysis: CellAnalysis,
    boxes: Sequence[FeasibleBox],
    grid: Sequence[Sequence[float]],
    cap: int = DEFAULT_GRID_CAP,
    seed: int = 0,
    hard_cap: bool = False,
) -> GridReport:
    """Compare direct point feasibility against box-union membership on every
    grid point.  A correct resolution produces zero mismatches.

    With hard_cap=True a grid larger than the cap raises instead of being
    subsampled.
    """
    total, sampled, points = _iter_grid(grid, cap, seed)
    if sampled and hard_cap:
        raise ResourceLimitError(f"grid has {total} points, cap is {cap}")
    mismatches = []
    checked = 0
    for x in points:
        checked += 1
        feasible = is_feasible_point(analysis, x)
        in_union = any(box.contains(x) for box in boxes)
        if feasible != in_union:
            mismatches.append((x, feasible, in_union))
    return GridReport(total, checked, sampled, mismatches)


def brute_force_min(
    analysis: CellAnalysis,
    objective: MonotoneObjective,
    grid: Sequence[Sequence[float]],
    cap: int = DEFAULT_GRID_CAP,
    seed: int = 0,
) -> tuple[tuple[float, ...] | None, float | None]:
    """Minimum of the objective over feasible grid points.

    Returns (None, None) when no grid point is feasible.  Because the
    breakpoint grid contains every factor endpoint, the result equals the
    pipeline's global optimum whenever the corner-candidate selection is
    correct.
    """
    _, _, points = _iter_grid(grid, cap, seed)
    best_point: tuple[float, ...] | None = None
    best_value: float | None = None
    for x in points:
        if not is_feasible_point(analysis, x):
            continue
        v = objective(x)
        if best_value is None or v < best_value:
            best_point, best_value = tuple(x), v
    return best_point, best_value
