"""Exhaustive search outcome."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field

from src.models.assignment import Assignment


class ExactResult(BaseModel):
    """Proven optimum of a small instance.

    ``enumerated`` counts every assignment accounted for, including those
    discarded with a pruned subtree; ``feasible_count`` counts the feasible ones.
    """

    model_config = ConfigDict(frozen=True)

    optimum: Assignment
    z_opt: float
    feasible_count: int = Field(..., ge=1)
    enumerated: int = Field(..., ge=1)


__all__ = ["ExactResult"]
