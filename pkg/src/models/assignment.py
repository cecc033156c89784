"""Machine-to-location assignment schema (the GA chromosome)."""

from __future__ import annotations

import operator
from typing import Any, Iterable

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator


class Assignment(BaseModel):
    """Sequence S where ``slots[i - 1] = k`` puts machine i at location k.

    Machines and locations are numbered from 1.
    """

    model_config = ConfigDict(frozen=True)

    slots: tuple[int, ...] = Field(..., min_length=1)

    @field_validator("slots", mode="before")
    @classmethod
    def coerce_slots(cls, value: Any) -> tuple[int, ...]:
        """Accept any sequence of integer-like location numbers."""
        try:
            return tuple(operator.index(v) for v in value)
        except TypeError as exc:
            raise ValueError("slots must be integer location numbers") from exc

    @field_validator("slots")
    @classmethod
    def validate_slots(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        """Ensure every machine sits at a location numbered from 1."""
        if any(k < 1 for k in value):
            raise ValueError("location numbers start at 1")
        return value

    @classmethod
    def of(cls, *slots: int) -> "Assignment":
        return cls(slots=slots)

    @classmethod
    def from_zero_based(cls, values: Iterable[int] | np.ndarray) -> "Assignment":
        return cls(slots=tuple(int(v) + 1 for v in values))

    def to_zero_based(self) -> np.ndarray:
        return np.asarray(self.slots, dtype=np.intp) - 1

    def __len__(self) -> int:
        return len(self.slots)

    def __getitem__(self, machine: int) -> int:
        """Location of a machine, both one-based."""
        if machine < 1 or machine > len(self.slots):
            raise IndexError(f"machine {machine} out of range 1..{len(self.slots)}")
        return self.slots[machine - 1]

    def check_against(self, machine_count: int, location_count: int) -> None:
        """Raise ValueError unless the assignment fits an M x N instance."""
        if len(self.slots) != machine_count:
            raise ValueError(
                f"assignment has {len(self.slots)} slots, expected {machine_count}"
            )
        too_far = [k for k in self.slots if k > location_count]
        if too_far:
            raise ValueError(
                f"location {too_far[0]} out of range 1..{location_count}"
            )

    def machines_at(self, location: int) -> list[int]:
        return [i for i, k in enumerate(self.slots, start=1) if k == location]

    def cop_form(self) -> str:
        return "(" + ", ".join(str(k) for k in self.slots) + ")"

    def x_form(self, location_count: int | None = None) -> str:
        """The binary-variable notation, e.g. ``x_13 = x_21 = 1``."""
        widest = max(len(self.slots), location_count or max(self.slots))
        sep = "_" if widest >= 10 else ""
        terms = [f"x_{i}{sep}{k}" for i, k in enumerate(self.slots, start=1)]
        return " = ".join(terms) + " = 1"

    def __str__(self) -> str:
        return " ".join(str(k) for k in self.slots)


__all__ = ["Assignment"]
