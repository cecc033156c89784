"""Outcome of a GA run."""

from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field

from src.models.assignment import Assignment


class StopReason(str, Enum):
    ITER_CAP = "iter_cap"
    STALL = "stall"


class GaResult(BaseModel):
    """Best solution found plus the counters the stopping rule used."""

    model_config = ConfigDict(frozen=True)

    best_assignment: Assignment
    z_best: float
    found_feasible: bool
    iterations_run: int = Field(..., ge=0)
    k_at_stop: int = Field(..., ge=0)
    stop_reason: StopReason
    improvement_trace: tuple[tuple[int, float], ...] = ()
    elapsed: float = Field(default=0.0, ge=0)


__all__ = ["GaResult", "StopReason"]
