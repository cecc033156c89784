"""Candidate moves around an assignment."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, model_validator

from src.models.assignment import Assignment


class Neighborhood(BaseModel):
    model_config = ConfigDict(frozen=True)

    base: Assignment
    moves: tuple[Assignment, ...] = ()

    @model_validator(mode="after")
    def check_moves(self) -> "Neighborhood":
        for move in self.moves:
            if len(move) != len(self.base):
                raise ValueError("neighbor length differs from base")
            if move.slots == self.base.slots:
                raise ValueError("neighbor identical to base")
        return self

    def __len__(self) -> int:
        return len(self.moves)


__all__ = ["Neighborhood"]
