"""Steady-state GA operators: initialization, selection, crossover,
mutation, repair and replacement.

Every random draw goes through ``rng.integers`` so a run is reproducible
from its seed. Positions passed to or reported by the operators are 1-based.
"""

from __future__ import annotations

import numpy as np

from src.evaluation.cost import evaluate, loads_of_indices
from src.models import (
    Assignment,
    EvaluatedAssignment,
    GaParams,
    GqapInstance,
    Population,
)


def init_population(
    inst: GqapInstance, params: GaParams, rng: np.random.Generator
) -> Population:
    """n_pop assignments with every slot drawn uniformly from 1..N.

    Members may be infeasible and may repeat.
    """
    shape = (params.n_pop, inst.machine_count)
    draws = rng.integers(0, inst.location_count, size=shape)
    return Population(
        members=tuple(
            evaluate(inst, Assignment.from_zero_based(row)) for row in draws
        )
    )


def best_member(pop: Population) -> EvaluatedAssignment:
    """Cheapest feasible member, else the least unfit one (first on ties)."""
    feasible = [m for m in pop.members if m.feasible]
    if feasible:
        return min(feasible, key=lambda m: m.fitness)
    return min(pop.members, key=lambda m: m.unfitness)


def best_of(pop: Population, params: GaParams) -> tuple[Assignment, float]:
    member = best_member(pop)
    z = member.fitness if member.feasible else params.sentinel_fitness
    return member.assignment, z


def _distinct_pair(rng: np.random.Generator, size: int) -> tuple[int, int]:
    first = int(rng.integers(size))
    second = int(rng.integers(size - 1))
    if second >= first:
        second += 1
    return first, second


def hold_tournament(
    pop: Population, rng: np.random.Generator
) -> tuple[EvaluatedAssignment, EvaluatedAssignment]:
    """Draw two distinct members; returns (winner, loser) on fitness alone."""
    a, b = _distinct_pair(rng, len(pop))
    first, second = pop.members[a], pop.members[b]
    if first.fitness <= second.fitness:
        return first, second
    return second, first


def tournament_pair(
    pop: Population, rng: np.random.Generator, params: GaParams
) -> tuple[Assignment, Assignment] | None:
    """Two parents from two tournaments, or None when no distinct second
    parent turned up within ``tournament_retry_cap`` attempts."""
    if len(pop) < 2:
        raise ValueError("tournament needs at least two members")
    parent1, _ = hold_tournament(pop, rng)
    for _ in range(params.tournament_retry_cap):
        parent2, _ = hold_tournament(pop, rng)
        if parent2.slots != parent1.slots:
            return parent1.assignment, parent2.assignment
    return None


def crossover_at(
    p1: Assignment, p2: Assignment, cut: int, first_orientation: bool
) -> Assignment:
    """Genes 1..cut from one parent and cut+1..M from the other."""
    m = len(p1)
    if len(p2) != m:
        raise ValueError(f"parents differ in length: {m} vs {len(p2)}")
    if not 1 <= cut <= m - 1:
        raise ValueError(f"cut point {cut} outside 1..{m - 1}")
    head, tail = (p1, p2) if first_orientation else (p2, p1)
    return Assignment(slots=head.slots[:cut] + tail.slots[cut:])


def one_point_crossover(
    p1: Assignment, p2: Assignment, rng: np.random.Generator
) -> Assignment:
    m = len(p1)
    if m < 2:
        raise ValueError("crossover needs at least two machines")
    cut = int(rng.integers(1, m))
    first_orientation = int(rng.integers(2)) == 0
    return crossover_at(p1, p2, cut, first_orientation)


def swap_genes(child: Assignment, j1: int, j2: int) -> Assignment:
    m = len(child)
    if not 1 <= j1 < j2 <= m:
        raise ValueError(
            f"positions must satisfy 1 <= j1 < j2 <= {m}, got {j1}, {j2}"
        )
    slots = list(child.slots)
    slots[j1 - 1], slots[j2 - 1] = slots[j2 - 1], slots[j1 - 1]
    return Assignment(slots=tuple(slots))


def swap_mutation(
    child: Assignment, rng: np.random.Generator
) -> tuple[Assignment, bool]:
    """Exchange two genes; the flag is False when both held the same location."""
    m = len(child)
    if m < 2:
        raise ValueError("mutation needs at least two machines")
    j1 = int(rng.integers(1, m))
    j2 = int(rng.integers(j1 + 1, m + 1))
    mutated = swap_genes(child, j1, j2)
    return mutated, mutated.slots != child.slots


def repair_unfit(
    inst: GqapInstance, child: Assignment, rng: np.random.Generator
) -> Assignment:
    """Move machines off overused locations where spare capacity allows.

    Overused locations are visited in ascending order. For each, one of its
    machines is picked at random and sent to the underused location with the
    most spare capacity (lowest index on ties) if that spare covers the
    machine's requirement. Feasible children come back untouched.
    """
    child.check_against(inst.machine_count, inst.location_count)
    idx = child.to_zero_based()
    extra = loads_of_indices(inst, idx) - inst.capacity
    if not np.any(extra > 0):
        return child

    under_used = np.flatnonzero(extra < 0)
    moved = False
    for location in np.flatnonzero(extra > 0):
        machines = np.flatnonzero(idx == location)
        if machines.size == 0:
            continue
        chosen = machines[int(rng.integers(machines.size))]
        if under_used.size == 0:
            continue
        target = under_used[np.argmin(extra[under_used])]
        if -extra[target] < inst.requirement[chosen]:
            continue
        idx[chosen] = target
        moved = True
        extra = loads_of_indices(inst, idx) - inst.capacity
        under_used = np.flatnonzero(extra < 0)
    return Assignment.from_zero_based(idx) if moved else child


def replace_into(
    pop: Population, child: EvaluatedAssignment, params: GaParams
) -> tuple[Population, bool]:
    """Insert a child, returning the new population and whether it entered.

    Duplicates never enter. While the population holds infeasible members the
    child replaces the most unfit one; otherwise a feasible child replaces the
    most costly member and an infeasible child is dropped. Ties go to the
    lowest index.
    """
    if pop.contains(child.assignment):
        return pop, False
    members = pop.members
    if pop.any_infeasible:
        victim = max(range(len(members)), key=lambda i: members[i].unfitness)
        return pop.with_member(victim, child), True
    if child.feasible:
        victim = max(range(len(members)), key=lambda i: members[i].fitness)
        return pop.with_member(victim, child), True
    return pop, False


__all__ = [
    "best_member",
    "best_of",
    "crossover_at",
    "hold_tournament",
    "init_population",
    "one_point_crossover",
    "repair_unfit",
    "replace_into",
    "swap_genes",
    "swap_mutation",
    "tournament_pair",
]
