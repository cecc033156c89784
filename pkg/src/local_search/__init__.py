"""Steepest-descent local search applied after the GA."""

from src.local_search.steepest import (
    best_feasible_neighbor,
    neighbors,
    steepest_descent,
)

__all__ = ["best_feasible_neighbor", "neighbors", "steepest_descent"]
