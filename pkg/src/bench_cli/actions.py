"""Subcommand actions for the gqap-bench CLI."""

from __future__ import annotations

import argparse
from pathlib import Path
from typing import Callable

from src.bench_cli.doe import (
    best_summary,
    run_doe,
    solve_instance,
    write_records_csv,
)
from src.exact_milp import brute_force_optimum, build_lp_model, render_lp
from src.instance_model import generate_random_instance, load_instance, save_instance
from src.logger import logger
from src.models import DoeGrid, ExactResult, GaParams, GqapInstance, RunRecord
from src.models.run_record import format_number
from src.settings import DEFAULT_EXACT_LIMIT, DEFAULT_MAX_ITER


def _format_record(record: RunRecord) -> str:
    lines = [
        f"Instance: {record.instance_name}",
        f"Parameters: n_pop={record.n_pop} max_k={record.max_k} seed={record.seed}",
        f"Best assignment: {record.best_assignment.cop_form()}",
        f"Z_best (GA): {format_number(record.z_best_ga)}",
        f"Z_best after local search: {format_number(record.z_best_after_ls)}",
        f"Feasible: {'yes' if record.feasible_flag else 'no'}",
        f"Time: {record.elapsed_seconds:.2f} s",
    ]
    if record.z_reference is not None:
        percent = "n/a" if record.percent_dev is None else f"{record.percent_dev:.2f}%"
        lines.append(f"Z_reference: {format_number(record.z_reference)} ({percent})")
    return "\n".join(lines)


def cmd_solve(
    instance_path: str | Path,
    n_pop: int,
    max_k: int,
    max_iter: int = DEFAULT_MAX_ITER,
    seed: int = 0,
    local_search: bool = True,
    output_path: str | Path | None = None,
    z_reference: float | None = None,
) -> RunRecord:
    """Run the GA, then steepest descent on its best feasible solution."""
    inst = load_instance(instance_path)
    params = GaParams(n_pop=n_pop, max_k=max_k, max_iter=max_iter, seed=seed)
    logger.info("Solving '%s' with %s", inst.name, params)
    record = solve_instance(
        inst, params, local_search=local_search, z_reference=z_reference
    )
    if output_path is not None:
        write_records_csv([record], output_path)
    print(_format_record(record))
    return record


def format_exact_report(inst: GqapInstance, result: ExactResult) -> str:
    optimum = result.optimum
    lines = [
        f"Instance: {inst.name}",
        f"Optimal assignment: {optimum.cop_form()}",
        optimum.x_form(inst.location_count),
    ]
    for k in range(1, inst.location_count + 1):
        machines = optimum.machines_at(k)
        if machines:
            listed = ", ".join(str(i) for i in machines)
            lines.append(f"  location {k}: machines {listed}")
    lines.append(f"Z_opt: {format_number(result.z_opt)}")
    lines.append(
        f"Feasible assignments: {result.feasible_count} of {result.enumerated}"
    )
    return "\n".join(lines)


def cmd_exact(
    instance_path: str | Path, limit: int = DEFAULT_EXACT_LIMIT, workers: int = 1
) -> str:
    inst = load_instance(instance_path)
    result = brute_force_optimum(inst, limit=limit, workers=workers)
    report = format_exact_report(inst, result)
    print(report)
    return report


def cmd_export_lp(
    instance_path: str | Path, output_path: str | Path, counting_mode: bool = True
) -> Path:
    """Write the linearized model; counting mode keeps zero-cost w columns."""
    inst = load_instance(instance_path)
    model = build_lp_model(inst, omit_zero_w=not counting_mode)
    output_path = Path(output_path)
    output_path.write_text(render_lp(model), encoding="utf-8")
    stats = model.statistics()
    logger.info("Wrote LP model to %s (%s)", output_path, stats.describe())
    print(stats.describe())
    print(f"nonzeros={stats.nonzeros}")
    return output_path


def cmd_gen(
    machine_count: int, location_count: int, seed: int, output_path: str | Path
) -> Path:
    inst = generate_random_instance(machine_count, location_count, seed)
    output_path = Path(output_path)
    save_instance(inst, output_path)
    print(f"Wrote {machine_count}x{location_count} instance '{inst.name}'")
    return output_path


def cmd_doe(
    instance_path: str | Path,
    grid: DoeGrid,
    z_reference: float | None,
    output_csv: str | Path,
    max_iter: int = DEFAULT_MAX_ITER,
    workers: int = 1,
) -> list[RunRecord]:
    inst = load_instance(instance_path)
    rows = run_doe(
        inst, grid, z_reference=z_reference, max_iter=max_iter, workers=workers
    )
    write_records_csv(rows, output_csv)
    best = best_summary(rows)
    if best is not None:
        print("Best cell:")
        print(_format_record(best))
    return rows


def _run_solve(args: argparse.Namespace) -> None:
    cmd_solve(
        args.instance,
        n_pop=args.n_pop,
        max_k=args.max_k,
        max_iter=args.max_iter,
        seed=args.seed,
        local_search=not args.no_local_search,
        output_path=args.output,
        z_reference=args.z_ref,
    )


def _run_exact(args: argparse.Namespace) -> None:
    cmd_exact(args.instance, limit=args.limit, workers=args.workers)


def _run_export_lp(args: argparse.Namespace) -> None:
    cmd_export_lp(args.instance, args.output, counting_mode=not args.omit_zero_w)


def _run_gen(args: argparse.Namespace) -> None:
    cmd_gen(args.machines, args.locations, args.seed, args.output)


def _run_doe(args: argparse.Namespace) -> None:
    grid = DoeGrid(
        n_pop_levels=args.n_pop_levels,
        max_k_levels=args.max_k_levels,
        replicates=args.replicates,
        base_seed=args.seed,
    )
    cmd_doe(
        args.instance,
        grid,
        z_reference=args.z_ref,
        output_csv=args.output,
        max_iter=args.max_iter,
        workers=args.workers,
    )


ActionHandler = Callable[[argparse.Namespace], None]


ACTION_HANDLERS: dict[str, ActionHandler] = {
    "solve": _run_solve,
    "exact": _run_exact,
    "export-lp": _run_export_lp,
    "gen": _run_gen,
    "doe": _run_doe,
}


SUPPORTED_ACTIONS = tuple(ACTION_HANDLERS.keys())


def run_action(action: str, args: argparse.Namespace) -> None:
    handler = ACTION_HANDLERS.get(action)
    if handler is None:
        raise ValueError(
            f"Unknown action '{action}'. Expected one of {SUPPORTED_ACTIONS}"
        )
    logger.info("Starting %s", action)
    handler(args)
