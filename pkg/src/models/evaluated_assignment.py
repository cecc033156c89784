"""Assignment together with its cost, capacity overuse and loads."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field

from src.models.assignment import Assignment


class EvaluatedAssignment(BaseModel):
    """An assignment scored by the COP model.

    ``fitness`` is the total cost TC(S); ``unfitness`` the summed overuse of
    location capacities, zero exactly when the assignment is feasible.
    """

    model_config = ConfigDict(frozen=True)

    assignment: Assignment
    fitness: float = Field(..., ge=0)
    unfitness: float = Field(..., ge=0)
    loads: tuple[float, ...]

    @property
    def feasible(self) -> bool:
        return self.unfitness == 0

    @property
    def slots(self) -> tuple[int, ...]:
        return self.assignment.slots


__all__ = ["EvaluatedAssignment"]
