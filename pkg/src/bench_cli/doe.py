"""GA + local search runs and the two-factor parameter study."""

from __future__ import annotations

import csv
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import groupby
from pathlib import Path
from typing import Iterable

from src.evaluation.cost import percent_deviation
from src.ga_engine.engine import run_ga
from src.local_search.steepest import steepest_descent
from src.logger import logger
from src.models import CSV_COLUMNS, DoeGrid, GaParams, GqapInstance, RunRecord
from src.settings import DEFAULT_MAX_ITER


def solve_instance(
    inst: GqapInstance,
    params: GaParams,
    local_search: bool = True,
    z_reference: float | None = None,
    replicate: int = 1,
) -> RunRecord:
    """GA, then steepest descent from its best feasible solution."""
    started = time.perf_counter()
    result = run_ga(inst, params)
    best, z_final = result.best_assignment, result.z_best
    if result.found_feasible and local_search:
        best, z_final = steepest_descent(inst, best)
    elapsed = time.perf_counter() - started

    percent = None
    if z_reference is not None and result.found_feasible:
        percent = percent_deviation(z_final, z_reference)
    return RunRecord(
        instance_name=inst.name,
        n_pop=params.n_pop,
        max_k=params.max_k,
        replicate=replicate,
        seed=params.seed,
        elapsed_seconds=elapsed,
        z_best_ga=result.z_best,
        z_best_after_ls=z_final,
        best_assignment=best,
        feasible_flag=result.found_feasible,
        z_reference=z_reference,
        percent_dev=percent,
    )


def _run_cell(
    inst: GqapInstance,
    grid: DoeGrid,
    cell: tuple[int, int, int],
    z_reference: float | None,
    max_iter: int,
) -> RunRecord:
    n_pop, max_k, replicate = cell
    params = GaParams(
        n_pop=n_pop,
        max_k=max_k,
        max_iter=max_iter,
        seed=grid.replicate_seed(n_pop, max_k, replicate),
    )
    record = solve_instance(
        inst, params, z_reference=z_reference, replicate=replicate
    )
    logger.info(
        "DOE run finished",
        extra={
            "context": {
                "n_pop": n_pop,
                "max_k": max_k,
                "replicate": replicate,
                "seed": params.seed,
                "z_best_after_ls": record.z_best_after_ls,
                "elapsed_seconds": round(record.elapsed_seconds, 4),
            }
        },
    )
    return record


def _cell_of(record: RunRecord) -> tuple[int, int]:
    return record.n_pop, record.max_k


def summarize_cells(records: Iterable[RunRecord]) -> list[RunRecord]:
    """Replicate rows followed by one summary row per parameter cell.

    The summary repeats the best replicate by quality (percent deviation when
    a reference is known, else cost), earliest replicate on ties. Elapsed
    time is not a tie-breaker, so reruns write the same summary rows.
    """
    ordered = sorted(records, key=lambda r: (r.n_pop, r.max_k, r.replicate))
    rows: list[RunRecord] = []
    for _, group in groupby(ordered, key=_cell_of):
        replicates = list(group)
        best = min(replicates, key=lambda r: (r.quality_key(), r.replicate))
        rows.extend(replicates)
        rows.append(best.model_copy(update={"is_summary": True}))
    return rows


def run_doe(
    inst: GqapInstance,
    grid: DoeGrid,
    z_reference: float | None = None,
    max_iter: int = DEFAULT_MAX_ITER,
    workers: int = 1,
) -> list[RunRecord]:
    """Every (n_pop, max_k, replicate) run plus the per-cell summaries.

    The row order does not depend on worker count or completion order.
    """
    runs = grid.runs()
    logger.info(
        "DOE on '%s': %s cells x %s replicates = %s runs",
        inst.name,
        len(grid.cells()),
        grid.replicates,
        len(runs),
    )
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_run_cell, inst, grid, cell, z_reference, max_iter)
                for cell in runs
            ]
            records = [future.result() for future in futures]
    else:
        records = [
            _run_cell(inst, grid, cell, z_reference, max_iter) for cell in runs
        ]
    return summarize_cells(records)


def best_summary(rows: Iterable[RunRecord]) -> RunRecord | None:
    summaries = [r for r in rows if r.is_summary]
    if not summaries:
        return None
    return min(summaries, key=lambda r: (r.quality_key(), r.n_pop, r.max_k))


def write_records_csv(records: Iterable[RunRecord], path: str | Path) -> Path:
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for record in records:
            writer.writerow(record.to_csv_row())
    logger.info("Wrote report to %s", path)
    return path


__all__ = [
    "best_summary",
    "run_doe",
    "solve_instance",
    "summarize_cells",
    "write_records_csv",
]
