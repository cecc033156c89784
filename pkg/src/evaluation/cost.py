"""Cost and capacity evaluation of assignments under the COP model.

TC(S) = sum_i a[i, S(i)] + unit_cost * sum_i sum_{j != i} f[i, j] * d[S(i), S(j)]

Both ordered pairs (i, j) and (j, i) contribute. Co-located machines use the
distance diagonal as given.
"""

from __future__ import annotations

import numpy as np

from src.models import Assignment, EvaluatedAssignment, GqapInstance


def _indices(inst: GqapInstance, s: Assignment) -> np.ndarray:
    s.check_against(inst.machine_count, inst.location_count)
    return s.to_zero_based()


def cost_of_indices(inst: GqapInstance, idx: np.ndarray) -> float:
    """TC for a zero-based location vector that is already known to be valid."""
    machines = np.arange(inst.machine_count)
    assign = inst.assign_cost[machines, idx].sum()
    pair = inst.flow * inst.distance[np.ix_(idx, idx)]
    pair[machines, machines] = 0.0
    return float(assign + inst.unit_cost * pair.sum())


def loads_of_indices(inst: GqapInstance, idx: np.ndarray) -> np.ndarray:
    return np.bincount(idx, weights=inst.requirement, minlength=inst.location_count)


def overuse(inst: GqapInstance, loads: np.ndarray) -> float:
    return float(np.maximum(loads - inst.capacity, 0.0).sum())


def total_cost(inst: GqapInstance, s: Assignment) -> float:
    """Assignment plus transport cost TC(S)."""
    return cost_of_indices(inst, _indices(inst, s))


def location_loads(inst: GqapInstance, s: Assignment) -> np.ndarray:
    """Space consumed at each location (length N, zero-based)."""
    return loads_of_indices(inst, _indices(inst, s))


def unfitness_of(inst: GqapInstance, s: Assignment) -> float:
    """Total capacity overuse; zero exactly when S is feasible."""
    return overuse(inst, location_loads(inst, s))


def is_feasible(inst: GqapInstance, s: Assignment) -> bool:
    return unfitness_of(inst, s) == 0


def evaluate(inst: GqapInstance, s: Assignment) -> EvaluatedAssignment:
    idx = _indices(inst, s)
    loads = loads_of_indices(inst, idx)
    return EvaluatedAssignment(
        assignment=s,
        fitness=cost_of_indices(inst, idx),
        unfitness=overuse(inst, loads),
        loads=tuple(float(v) for v in loads),
    )


def percent_deviation(z: float, z_ref: float) -> float:
    """Signed gap to a reference objective, in percent."""
    if z_ref <= 0:
        raise ValueError(f"reference objective must be positive, got {z_ref}")
    return 100.0 * (z - z_ref) / z_ref


__all__ = [
    "cost_of_indices",
    "evaluate",
    "is_feasible",
    "loads_of_indices",
    "location_loads",
    "overuse",
    "percent_deviation",
    "total_cost",
    "unfitness_of",
]
