"""COP model: cost, loads, unfitness and feasibility of assignments."""

from src.evaluation.cost import (
    evaluate,
    is_feasible,
    location_loads,
    percent_deviation,
    total_cost,
    unfitness_of,
)

__all__ = [
    "evaluate",
    "is_feasible",
    "location_loads",
    "percent_deviation",
    "total_cost",
    "unfitness_of",
]
