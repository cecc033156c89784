"""Command-line front end and parameter-study harness."""

from src.bench_cli.actions import (
    ACTION_HANDLERS,
    SUPPORTED_ACTIONS,
    cmd_doe,
    cmd_exact,
    cmd_export_lp,
    cmd_gen,
    cmd_solve,
    format_exact_report,
)
from src.bench_cli.doe import (
    best_summary,
    run_doe,
    solve_instance,
    summarize_cells,
    write_records_csv,
)

__all__ = [
    "ACTION_HANDLERS",
    "SUPPORTED_ACTIONS",
    "best_summary",
    "cmd_doe",
    "cmd_exact",
    "cmd_export_lp",
    "cmd_gen",
    "cmd_solve",
    "format_exact_report",
    "run_doe",
    "solve_instance",
    "summarize_cells",
    "write_records_csv",
]
