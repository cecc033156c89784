"""Steady-state genetic algorithm for the GQAP."""

from src.ga_engine.engine import run_ga
from src.ga_engine.operators import (
    best_of,
    crossover_at,
    hold_tournament,
    init_population,
    one_point_crossover,
    repair_unfit,
    replace_into,
    swap_genes,
    swap_mutation,
    tournament_pair,
)

__all__ = [
    "best_of",
    "crossover_at",
    "hold_tournament",
    "init_population",
    "one_point_crossover",
    "repair_unfit",
    "replace_into",
    "run_ga",
    "swap_genes",
    "swap_mutation",
    "tournament_pair",
]
