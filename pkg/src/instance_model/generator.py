"""Random instances that are feasible by construction."""

from __future__ import annotations

import numpy as np

from src.logger import logger
from src.models import GqapInstance, InstanceRanges
from src.models.instance_ranges import Bounds


def _draw(
    rng: np.random.Generator, bounds: Bounds, size: int | tuple[int, int]
) -> np.ndarray:
    low, high = bounds
    return rng.integers(low, high + 1, size=size)


def generate_random_instance(
    machine_count: int,
    location_count: int,
    seed: int,
    ranges: InstanceRanges | None = None,
) -> GqapInstance:
    """Draw integer data for an M x N instance.

    Capacities are set from a hidden random assignment: each location gets
    the load that assignment puts on it plus a random slack, so at least one
    feasible assignment always exists. Flow and distance diagonals are zero
    and distances are symmetric. The result depends only on the arguments.
    """
    if machine_count < 1 or location_count < 1:
        raise ValueError(
            f"M and N must be positive, got M={machine_count}, N={location_count}"
        )
    if seed < 0:
        raise ValueError(f"seed must be non-negative, got {seed}")
    ranges = ranges or InstanceRanges()
    rng = np.random.default_rng(seed)
    m, n = machine_count, location_count

    assign_cost = _draw(rng, ranges.assign_cost, (m, n))
    flow = _draw(rng, ranges.flow, (m, m))
    np.fill_diagonal(flow, 0)
    upper = np.triu(_draw(rng, ranges.distance, (n, n)), k=1)
    distance = upper + upper.T
    requirement = _draw(rng, ranges.requirement, m)

    hidden = rng.integers(0, n, size=m)
    loads = np.bincount(hidden, weights=requirement, minlength=n)
    capacity = loads + _draw(rng, ranges.slack, n)

    instance = GqapInstance(
        machine_count=m,
        location_count=n,
        assign_cost=assign_cost,
        flow=flow,
        distance=distance,
        requirement=requirement,
        capacity=capacity,
        name=f"random-{m}x{n}-s{seed}",
    )
    logger.debug("Generated instance '%s'", instance.name)
    return instance


__all__ = ["generate_random_instance"]
