"""File-based front end: parse problem files, run the pipeline, emit reports.

Problem files are JSON with the fields

    m, n      -- dimensions
    a_plus    -- m x n row-major matrix of the positive coefficients
    a_minus   -- m x n row-major matrix of the negative coefficients
    b         -- length-m right-hand side
    tnorm     -- {"name": <catalog kind>, "param": <number, if parametric>}
    objective -- optional: {"name": ..., "params": {...},
                            "j_plus": [...], "j_minus": [...]}

All indices in files and reports are 0-based.  Reports are deterministic
JSON; numbers round-trip exactly.  Exit codes: 0 success, 1 error,
2 infeasible problem.
"""

from __future__ import annotations

import json
import sys
from typing import Any

import click

from . import intervals
from .optimize import (
    MonotoneObjective,
    check_monotone,
    global_optimum,
    objective_catalog,
)
from .oracle import breakpoint_grid, brute_force_min, grid_membership_check
from .resolution import (
    DEFAULT_MAX_ASSIGNMENTS,
    RegionResult,
    ResourceLimitError,
    count_bound,
    feasible_region,
)
from .simplify import ReductionState
from .system import BipolarSystem, CellAnalysis
from .tnorms import TNormSpec, solve_scalar_eq, solve_scalar_eq_numeric, tnorm_eval

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INFEASIBLE = 2


class ProblemFormatError(ValueError):
    """A problem file is malformed or fails validation."""


def parse_problem(path: str) -> tuple[BipolarSystem, MonotoneObjective | None]:
    """Load and validate a problem file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ProblemFormatError(f"{path}: invalid JSON ({exc})") from exc
    return problem_from_dict(data, origin=path)


def problem_from_dict(
    data: dict, origin: str = "<problem>"
) -> tuple[BipolarSystem, MonotoneObjective | None]:
    if not isinstance(data, dict):
        raise ProblemFormatError(f"{origin}: top level must be an object")
    for key in ("m", "n", "a_plus", "a_minus", "b", "tnorm"):
        if key not in data:
            raise ProblemFormatError(f"{origin}: missing field {key!r}")
    m, n = data["m"], data["n"]
    if not (isinstance(m, int) and isinstance(n, int) and m >= 1 and n >= 1):
        raise ProblemFormatError(f"{origin}: m and n must be positive integers")
    tn = data["tnorm"]
    if not isinstance(tn, dict) or "name" not in tn:
        raise ProblemFormatError(f"{origin}: tnorm must be an object with a 'name'")
    try:
        tnorm = TNormSpec(tn["name"], tn.get("param"))
    except ValueError as exc:
        raise ProblemFormatError(f"{origin}: {exc}") from exc
    try:
        system = BipolarSystem(
            tuple(tuple(row) for row in data["a_plus"]),
            tuple(tuple(row) for row in data["a_minus"]),
            tuple(data["b"]),
            tnorm,
        )
    except (TypeError, ValueError) as exc:
        raise ProblemFormatError(f"{origin}: {exc}") from exc
    if system.m != m or system.n != n:
        raise ProblemFormatError(
            f"{origin}: declared {m}x{n} but matrices are {system.m}x{system.n}"
        )
    objective = None
    if data.get("objective") is not None:
        spec = data["objective"]
        if not isinstance(spec, dict) or "name" not in spec:
            raise ProblemFormatError(f"{origin}: objective must be an object with a 'name'")
        try:
            objective = objective_catalog(
                spec["name"],
                n,
                spec.get("params") or {},
                j_plus=spec.get("j_plus"),
                j_minus=spec.get("j_minus"),
            )
        except ValueError as exc:
            raise ProblemFormatError(f"{origin}: {exc}") from exc
    return system, objective


def emit_problem(system: BipolarSystem, objective: MonotoneObjective | None = None) -> dict:
    """Serialize a system (and objective) back into the file schema."""
    out: dict[str, Any] = {
        "m": system.m,
        "n": system.n,
        "a_plus": [list(row) for row in system.a_plus],
        "a_minus": [list(row) for row in system.a_minus],
        "b": list(system.b),
        "tnorm": {"name": system.tnorm.kind},
    }
    if system.tnorm.param is not None:
        out["tnorm"]["param"] = system.tnorm.param
    if objective is not None:
        out["objective"] = {
            "name": objective.name,
            "params": dict(objective.params),
            "j_plus": sorted(objective.j_plus),
            "j_minus": sorted(objective.j_minus),
        }
    return out


# -- report building ---------------------------------------------------------


def _verdict_dict(result: RegionResult) -> dict:
    if not result.verdict.ok:
        return {"status": result.verdict.status, "index": result.verdict.index}
    if not result.boxes:
        return {"status": "no_admissible_assignment", "index": None}
    return {"status": "ok", "index": None}


def _reduction_dict(state: ReductionState, explain: bool) -> dict:
    out = {
        "fixed": {str(j): v for j, v in sorted(state.fixed.items())},
        "active_rows": list(state.active_rows),
        "active_cols": list(state.active_cols),
    }
    if explain:
        out["log"] = [ev.to_dict() for ev in state.log]
    return out


def _boxes_dict(result: RegionResult) -> list[dict]:
    return [
        {
            "rows": list(box.source.rows),
            "columns": list(box.source.columns),
            "factors": [f.to_pairs() for f in box.factors],
        }
        for box in result.boxes
    ]


def _region_report(result: RegionResult, explain: bool = False) -> dict:
    report: dict[str, Any] = {
        "status": "feasible" if result.is_feasible else "infeasible",
        "verdict": _verdict_dict(result),
    }
    if result.reduction is not None:
        report["reduction"] = _reduction_dict(result.reduction, explain)
        report["count_bound"] = count_bound(result.analysis, result.reduction)
    report["column_bounds"] = [c.to_pairs() for c in result.analysis.col_bounds]
    report["boxes"] = _boxes_dict(result)
    return report


def _echo(report: dict) -> None:
    click.echo(json.dumps(report, indent=2))


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(EXIT_ERROR)


def _load(path: str) -> tuple[BipolarSystem, MonotoneObjective | None]:
    try:
        return parse_problem(path)
    except ProblemFormatError as exc:
        _fail(str(exc))
        raise AssertionError  # unreachable


def _common_options(fn):
    fn = click.option(
        "--tol", type=float, default=None, help="Interval comparison tolerance override."
    )(fn)
    fn = click.option(
        "--max-e",
        type=int,
        default=DEFAULT_MAX_ASSIGNMENTS,
        show_default=True,
        help="Cap on the number of enumerated assignments.",
    )(fn)
    fn = click.option(
        "--no-simplify", is_flag=True, help="Skip the reduction rules before enumeration."
    )(fn)
    return fn


def _run_region(path: str, tol, max_e, no_simplify) -> RegionResult:
    system, _ = _load(path)
    if tol is not None:
        intervals.set_tolerance(tol)
    try:
        return feasible_region(system, simplify=not no_simplify, max_count=max_e)
    except ResourceLimitError as exc:
        _fail(str(exc))
        raise AssertionError


@click.group()
def main() -> None:
    """Solver for systems of bipolar fuzzy relational equations.

    Resolves the complete feasible region as a union of boxes under any
    catalog t-norm and globally minimizes coordinate-monotone objectives.
    """


@main.command()
@click.argument("problem", type=click.Path(exists=True, dir_okay=False))
@_common_options
def feasible(problem, tol, max_e, no_simplify) -> None:
    """Resolve the feasible region of PROBLEM and report its boxes."""
    result = _run_region(problem, tol, max_e, no_simplify)
    _echo(_region_report(result))
    sys.exit(EXIT_OK if result.is_feasible else EXIT_INFEASIBLE)


@main.command()
@click.argument("problem", type=click.Path(exists=True, dir_okay=False))
@click.option("--explain", is_flag=True, help="Include the rule audit log.")
@click.option("--tol", type=float, default=None, help="Interval comparison tolerance override.")
def simplify(problem, explain, tol) -> None:
    """Apply the reduction rules to PROBLEM and report the outcome."""
    system, _ = _load(problem)
    if tol is not None:
        intervals.set_tolerance(tol)
    from .simplify import simplify_to_fixpoint
    from .system import necessary_feasibility

    analysis = CellAnalysis(system)
    verdict = necessary_feasibility(analysis)
    if not verdict.ok:
        _echo({"status": "infeasible", "verdict": {"status": verdict.status, "index": verdict.index}})
        sys.exit(EXIT_INFEASIBLE)
    before = count_bound(analysis, ReductionState.initial(analysis))
    state = simplify_to_fixpoint(analysis)
    report = {
        "status": "ok",
        "reduction": _reduction_dict(state, explain),
        "count_bound_before": before,
        "count_bound_after": count_bound(analysis, state),
    }
    _echo(report)
    sys.exit(EXIT_OK)


@main.command()
@click.argument("problem", type=click.Path(exists=True, dir_okay=False))
@_common_options
def solve(problem, tol, max_e, no_simplify) -> None:
    """Resolve PROBLEM and minimize its objective over the region."""
    system, objective = _load(problem)
    if objective is None:
        _fail("problem file has no objective; 'solve' needs one")
    if tol is not None:
        intervals.set_tolerance(tol)
    try:
        result = feasible_region(system, simplify=not no_simplify, max_count=max_e)
    except ResourceLimitError as exc:
        _fail(str(exc))
        raise AssertionError
    report = _region_report(result)
    if not result.is_feasible:
        _echo(report)
        sys.exit(EXIT_INFEASIBLE)
    best, candidates = global_optimum(result.boxes, objective)
    report["candidates"] = [
        {"columns": list(c.source.columns), "point": list(c.point), "value": c.value}
        for c in candidates
    ]
    report["best"] = {
        "columns": list(best.source.columns),
        "point": list(best.point),
        "value": best.value,
    }
    _echo(report)
    sys.exit(EXIT_OK)


@main.command()
@click.argument("problem", type=click.Path(exists=True, dir_okay=False))
@click.option("--step", type=float, default=0.1, show_default=True, help="Grid step size.")
@click.option("--seed", type=int, default=0, show_default=True, help="Subsampling seed.")
@click.option("--cap", type=int, default=2_000_000, show_default=True, help="Grid point cap.")
@_common_options
def verify(problem, step, seed, cap, tol, max_e, no_simplify) -> None:
    """Cross-check the resolved region (and optimum) by brute force."""
    system, objective = _load(problem)
    if tol is not None:
        intervals.set_tolerance(tol)
    try:
        result = feasible_region(system, simplify=not no_simplify, max_count=max_e)
    except ResourceLimitError as exc:
        _fail(str(exc))
        raise AssertionError
    grid = breakpoint_grid(result.analysis, step)
    membership = grid_membership_check(result.analysis, result.boxes, grid, cap=cap, seed=seed)
    report: dict[str, Any] = {
        "status": "verified" if membership.ok else "mismatch",
        "grid": {
            "total_points": membership.total_points,
            "checked": membership.checked,
            "sampled": membership.sampled,
        },
        "membership_mismatches": [
            {"point": list(x), "feasible": f, "in_boxes": b}
            for x, f, b in membership.mismatches[:50]
        ],
    }
    if objective is not None:
        probe = check_monotone(objective, seed=seed)
        report["monotonicity_violations"] = len(probe)
        point, value = brute_force_min(result.analysis, objective, grid, cap=cap, seed=seed)
        report["brute_force"] = {
            "point": None if point is None else list(point),
            "value": value,
        }
        if result.is_feasible:
            best, _ = global_optimum(result.boxes, objective)
            report["pipeline_value"] = best.value
            if membership.sampled:
                # a sampled grid cannot certify equality, only the bound
                report["objective_check"] = "lower_bound"
                agree = value is None or value >= best.value - 1e-9
            else:
                report["objective_check"] = "exact"
                agree = value is not None and abs(best.value - value) <= 1e-9
            report["objective_agreement"] = agree
            if not agree:
                report["status"] = "mismatch"
    _echo(report)
    sys.exit(EXIT_OK if report["status"] == "verified" else EXIT_ERROR)


@main.command("tnorm-eval")
@click.argument("kind")
@click.argument("x", type=float)
@click.argument("y", type=float)
@click.option("--param", type=float, default=None, help="Family parameter, if any.")
@click.option(
    "--solve",
    "solve_eq",
    is_flag=True,
    help="Treat (X, Y) as (a, b) and solve phi(a, t) = b for t instead.",
)
def tnorm_eval_cmd(kind, x, y, param, solve_eq) -> None:
    """Evaluate phi(X, Y), or solve the scalar equation with --solve."""
    try:
        spec = TNormSpec(kind, param)
        if solve_eq:
            sol = solve_scalar_eq(spec, x, y)
            num = solve_scalar_eq_numeric(spec, x, y) if x >= y else sol
            _echo(
                {
                    "solution_set": sol.solution_set.to_pairs(),
                    "relaxed_set": sol.relaxed_set.to_pairs(),
                    "l": sol.l,
                    "u": sol.u,
                    "l_bisect": num.l,
                    "u_bisect": num.u,
                }
            )
        else:
            _echo({"value": tnorm_eval(spec, x, y)})
    except ValueError as exc:
        _fail(str(exc))
    sys.exit(EXIT_OK)


if __name__ == "__main__":
    main()
