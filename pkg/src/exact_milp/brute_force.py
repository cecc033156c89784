"""Exhaustive search for the optimum of small instances.

Assignments are visited in lexicographic order by depth-first search; a
subtree is pruned as soon as a location's load exceeds its capacity. Costs
are accumulated incrementally along the search path.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from src.evaluation.cost import evaluate, total_cost
from src.logger import logger
from src.models import Assignment, ExactResult, GqapInstance
from src.settings import DEFAULT_EXACT_LIMIT

# Costs closer than this count as tied; ties keep the earlier assignment.
COST_TOLERANCE = 1e-9


class SearchSpaceTooLargeError(ValueError):
    def __init__(self, machine_count: int, location_count: int, limit: int) -> None:
        self.required = location_count**machine_count
        self.limit = limit
        super().__init__(
            f"exhaustive search needs N^M = {location_count}^{machine_count} = "
            f"{self.required} enumerations, above the limit of {limit}"
        )


class NoFeasibleAssignmentError(RuntimeError):
    pass


@dataclass(frozen=True)
class _BranchResult:
    cost: float
    slots: tuple[int, ...] | None
    feasible_count: int
    enumerated: int


def _search_branch(inst: GqapInstance, first_location: int) -> _BranchResult:
    """Optimum among assignments with machine 1 at ``first_location`` (0-based)."""
    m, n = inst.machine_count, inst.location_count
    flow, distance = inst.flow, inst.distance
    assign_cost, requirement, capacity = (
        inst.assign_cost,
        inst.requirement,
        inst.capacity,
    )
    unit_cost = inst.unit_cost
    idx = np.zeros(m, dtype=np.intp)
    # Row d holds the loads of machines 1..d, summed in machine order like
    # loads_of_indices, so a leaf is feasible exactly when evaluate says so.
    loads = np.zeros((m + 1, n), dtype=np.float64)
    subtree = [n ** (m - depth - 1) for depth in range(m)]

    best_cost = float("inf")
    best_slots: tuple[int, ...] | None = None
    feasible_count = 0
    enumerated = 0

    def place(depth: int, k: int, partial: float) -> None:
        nonlocal best_cost, best_slots, feasible_count, enumerated
        if loads[depth, k] + requirement[depth] > capacity[k]:
            enumerated += subtree[depth]
            return
        placed = idx[:depth]
        cost = partial + assign_cost[depth, k]
        if depth:
            cost += unit_cost * float(
                flow[depth, :depth] @ distance[k, placed]
                + flow[:depth, depth] @ distance[placed, k]
            )
        idx[depth] = k
        loads[depth + 1] = loads[depth]
        loads[depth + 1, k] += requirement[depth]
        if depth == m - 1:
            enumerated += 1
            feasible_count += 1
            if cost < best_cost - COST_TOLERANCE:
                best_cost = cost
                best_slots = tuple(int(v) + 1 for v in idx)
        else:
            for nxt in range(n):
                place(depth + 1, nxt, cost)

    place(0, first_location, 0.0)
    return _BranchResult(best_cost, best_slots, feasible_count, enumerated)


def _single_location(inst: GqapInstance) -> ExactResult:
    only = Assignment(slots=(1,) * inst.machine_count)
    scored = evaluate(inst, only)
    if not scored.feasible:
        raise NoFeasibleAssignmentError(
            f"the only assignment of '{inst.name}' overloads location 1"
        )
    return ExactResult(
        optimum=only, z_opt=scored.fitness, feasible_count=1, enumerated=1
    )


def brute_force_optimum(
    inst: GqapInstance, limit: int = DEFAULT_EXACT_LIMIT, workers: int = 1
) -> ExactResult:
    """Cheapest feasible assignment over all N^M candidates.

    Ties go to the lexicographically smallest assignment. With ``workers`` > 1
    the branches of machine 1 are searched in separate processes and reduced
    in the same order, so the answer does not depend on the worker count.
    """
    if inst.search_space_size > limit:
        raise SearchSpaceTooLargeError(
            inst.machine_count, inst.location_count, limit
        )
    if inst.location_count == 1:
        return _single_location(inst)
    branches = range(inst.location_count)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_search_branch, [inst] * len(branches), branches))
    else:
        results = [_search_branch(inst, k) for k in branches]

    feasible_count = sum(r.feasible_count for r in results)
    enumerated = sum(r.enumerated for r in results)
    candidates = [r for r in results if r.slots is not None]
    if not candidates:
        raise NoFeasibleAssignmentError(
            f"no feasible assignment among {enumerated} candidates of '{inst.name}'"
        )
    # Branches cover increasing first genes, so the first minimum is the
    # lexicographically smallest optimum.
    winner = candidates[0]
    for result in candidates[1:]:
        if result.cost < winner.cost - COST_TOLERANCE:
            winner = result
    assert winner.slots is not None
    optimum = Assignment(slots=winner.slots)
    z_opt = total_cost(inst, optimum)
    logger.info(
        "Exact search on '%s': optimum %s z=%s (%s feasible of %s)",
        inst.name,
        optimum.cop_form(),
        z_opt,
        feasible_count,
        enumerated,
    )
    return ExactResult(
        optimum=optimum,
        z_opt=z_opt,
        feasible_count=feasible_count,
        enumerated=enumerated,
    )


__all__ = [
    "NoFeasibleAssignmentError",
    "SearchSpaceTooLargeError",
    "brute_force_optimum",
]
