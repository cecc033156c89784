"""Steepest-descent neighborhood search over reassign and swap moves."""

from __future__ import annotations

from src.evaluation.cost import evaluate
from src.logger import logger
from src.models import Assignment, EvaluatedAssignment, GqapInstance, Neighborhood


def neighbors(inst: GqapInstance, s: Assignment) -> Neighborhood:
    """All single-machine reassignments, then all pairwise exchanges.

    Reassignments are ordered by machine then target location; exchanges by
    (i, j) with i < j, skipping pairs that share a location.
    """
    s.check_against(inst.machine_count, inst.location_count)
    base = s.slots
    moves: list[tuple[int, ...]] = []
    for i, current in enumerate(base):
        for k in range(1, inst.location_count + 1):
            if k != current:
                moves.append(base[:i] + (k,) + base[i + 1 :])
    m = len(base)
    for i in range(m):
        for j in range(i + 1, m):
            if base[i] != base[j]:
                swapped = list(base)
                swapped[i], swapped[j] = base[j], base[i]
                moves.append(tuple(swapped))
    return Neighborhood(base=s, moves=tuple(Assignment(slots=mv) for mv in moves))


def best_feasible_neighbor(
    inst: GqapInstance, s: Assignment
) -> EvaluatedAssignment | None:
    """Cheapest feasible neighbor, first in enumeration order on ties."""
    best: EvaluatedAssignment | None = None
    for move in neighbors(inst, s).moves:
        candidate = evaluate(inst, move)
        if candidate.feasible and (best is None or candidate.fitness < best.fitness):
            best = candidate
    return best


def steepest_descent(inst: GqapInstance, s: Assignment) -> tuple[Assignment, float]:
    """Move to the best strictly improving feasible neighbor until none is left.

    Infeasible starts are returned unchanged with their cost.
    """
    current = evaluate(inst, s)
    if not current.feasible:
        logger.debug("Local search skipped: start %s is infeasible", s)
        return s, current.fitness

    steps = 0
    while True:
        candidate = best_feasible_neighbor(inst, current.assignment)
        if candidate is None or not candidate.fitness < current.fitness:
            break
        steps += 1
        logger.debug(
            "Local search step %s: %s z=%s -> %s z=%s",
            steps,
            current.assignment,
            current.fitness,
            candidate.assignment,
            candidate.fitness,
        )
        current = candidate
    if steps:
        logger.info(
            "Local search made %s improving moves, z=%s", steps, current.fitness
        )
    return current.assignment, current.fitness


__all__ = ["best_feasible_neighbor", "neighbors", "steepest_descent"]
