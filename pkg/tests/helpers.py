"""Shared helpers for the test suite."""

from __future__ import annotations

from typing import Iterator

import numpy as np

from src.evaluation import evaluate
from src.instance_model import generate_random_instance
from src.models import Assignment, EvaluatedAssignment, GqapInstance, Population


class ScriptedRng:
    """Stands in for numpy's Generator, returning queued ``integers`` draws."""

    def __init__(self, *values: int) -> None:
        self.values = list(values)

    def integers(self, low, high=None, size=None):
        assert size is None, "scripted draws are scalar"
        if high is None:
            low, high = 0, low
        value = self.values.pop(0)
        assert low <= value < high, f"scripted {value} outside [{low}, {high})"
        return value

    @property
    def exhausted(self) -> bool:
        return not self.values


def scored(slots: str, fitness: float, unfitness: float) -> EvaluatedAssignment:
    return EvaluatedAssignment(
        assignment=Assignment(slots=tuple(int(v) for v in slots.split())),
        fitness=fitness,
        unfitness=unfitness,
        loads=(0.0, 0.0, 0.0, 0.0),
    )


def random_instances(
    count: int, seed: int, max_m: int = 6, max_n: int = 4
) -> Iterator[GqapInstance]:
    """Generated instances with M in 2..max_m and N in 2..max_n."""
    rng = np.random.default_rng(seed)
    for _ in range(count):
        m = int(rng.integers(2, max_m + 1))
        n = int(rng.integers(2, max_n + 1))
        yield generate_random_instance(m, n, int(rng.integers(0, 2**31)))


def random_population(
    inst: GqapInstance, size: int, rng: np.random.Generator
) -> Population:
    rows = rng.integers(0, inst.location_count, size=(size, inst.machine_count))
    return Population(
        members=tuple(evaluate(inst, Assignment.from_zero_based(r)) for r in rows)
    )


def naive_cost(inst: GqapInstance, s: Assignment) -> float:
    """Triple-loop reading of the cost model, independent of numpy indexing."""
    total = 0.0
    for i in range(1, inst.machine_count + 1):
        total += float(inst.assign_cost[i - 1][s[i] - 1])
        for j in range(1, inst.machine_count + 1):
            if i != j:
                flow = float(inst.flow[i - 1][j - 1])
                dist = float(inst.distance[s[i] - 1][s[j] - 1])
                total += inst.unit_cost * flow * dist
    return total


def naive_feasible(inst: GqapInstance, s: Assignment) -> bool:
    used = [0.0] * inst.location_count
    for i in range(1, inst.machine_count + 1):
        used[s[i] - 1] += float(inst.requirement[i - 1])
    return all(u <= float(c) for u, c in zip(used, inst.capacity))


def enumerate_optimum(inst: GqapInstance) -> tuple[Assignment, float] | None:
    """Plain itertools enumeration, lexicographic; a new best must win by 1e-9."""
    from itertools import product

    best: tuple[Assignment, float] | None = None
    locations = range(1, inst.location_count + 1)
    for slots in product(locations, repeat=inst.machine_count):
        s = Assignment(slots=slots)
        if not naive_feasible(inst, s):
            continue
        cost = naive_cost(inst, s)
        if best is None or cost < best[1] - 1e-9:
            best = (s, cost)
    return best
