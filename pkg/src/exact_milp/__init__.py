"""Exact oracle and linearized MILP export."""

from src.exact_milp.brute_force import (
    NoFeasibleAssignmentError,
    SearchSpaceTooLargeError,
    brute_force_optimum,
)
from src.exact_milp.lp_writer import (
    LinearModel,
    LinearRow,
    build_lp_model,
    lp_statistics,
    model_statistics,
    render_lp,
    write_lp,
)

__all__ = [
    "LinearModel",
    "LinearRow",
    "NoFeasibleAssignmentError",
    "SearchSpaceTooLargeError",
    "brute_force_optimum",
    "build_lp_model",
    "lp_statistics",
    "model_statistics",
    "render_lp",
    "write_lp",
]
