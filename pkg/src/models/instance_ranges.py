"""Bounds used by the random instance generator."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, model_validator

Bounds = tuple[int, int]


class InstanceRanges(BaseModel):
    """Inclusive integer bounds for each generated field.

    ``slack`` is the extra capacity added on top of the load a hidden
    feasible assignment puts on every location.
    """

    model_config = ConfigDict(frozen=True)

    assign_cost: Bounds = (0, 50)
    flow: Bounds = (0, 10)
    distance: Bounds = (1, 10)
    requirement: Bounds = (1, 10)
    slack: Bounds = (0, 10)

    @model_validator(mode="after")
    def check_bounds(self) -> "InstanceRanges":
        for name in ("assign_cost", "flow", "distance", "requirement", "slack"):
            low, high = getattr(self, name)
            if low < 0:
                raise ValueError(f"{name} lower bound must be >= 0, got {low}")
            if low > high:
                raise ValueError(f"{name} range is empty: min {low} > max {high}")
        return self


__all__ = ["Bounds", "InstanceRanges"]
