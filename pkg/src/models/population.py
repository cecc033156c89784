"""Fixed-size GA population schema."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field

from src.models.assignment import Assignment
from src.models.evaluated_assignment import EvaluatedAssignment


class Population(BaseModel):
    """Evaluated members; replacement produces a new population of equal size."""

    model_config = ConfigDict(frozen=True)

    members: tuple[EvaluatedAssignment, ...] = Field(..., min_length=1)

    def __len__(self) -> int:
        return len(self.members)

    def contains(self, assignment: Assignment) -> bool:
        return any(m.assignment.slots == assignment.slots for m in self.members)

    @property
    def total_fitness(self) -> float:
        return float(sum(m.fitness for m in self.members))

    @property
    def total_unfitness(self) -> float:
        return float(sum(m.unfitness for m in self.members))

    @property
    def any_infeasible(self) -> bool:
        return any(not m.feasible for m in self.members)

    def with_member(self, index: int, member: EvaluatedAssignment) -> "Population":
        members = list(self.members)
        members[index] = member
        return Population(members=tuple(members))


__all__ = ["Population"]
