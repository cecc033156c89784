"""GQAP problem instance schema."""

from __future__ import annotations

import unicodedata
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

ARRAY_FIELDS = ("assign_cost", "flow", "distance", "requirement", "capacity")
_LINE_BREAKING = frozenset(("Cc", "Zl", "Zp"))


class GqapInstance(BaseModel):
    """Machines, capacitated locations and the cost data tying them together.

    ``flow[i, j]`` is the material moved from machine i to machine j,
    ``distance[k, l]`` the distance between locations k and l,
    ``assign_cost[i, k]`` the cost of installing machine i at location k,
    ``requirement[i]`` the space machine i needs and ``capacity[k]`` the space
    location k offers. ``unit_cost`` scales every flow-distance product.

    Arrays are stored zero-based and read-only; machine and location numbers
    shown to users are one-based.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    machine_count: int = Field(..., ge=1, description="Number of machines M.")
    location_count: int = Field(..., ge=1, description="Number of locations N.")
    assign_cost: np.ndarray = Field(..., description="M x N assignment costs.")
    flow: np.ndarray = Field(..., description="M x M flows between machines.")
    distance: np.ndarray = Field(..., description="N x N location distances.")
    requirement: np.ndarray = Field(..., description="Space requirement per machine.")
    capacity: np.ndarray = Field(..., description="Space capacity per location.")
    unit_cost: float = Field(default=1.0, ge=0, allow_inf_nan=False)
    name: str = ""

    @field_validator(*ARRAY_FIELDS, mode="before")
    @classmethod
    def as_readonly_array(cls, value: Any) -> np.ndarray:
        """Copy input into a read-only float64 array."""
        try:
            array = np.array(value, dtype=np.float64)
        except (TypeError, ValueError) as exc:
            raise ValueError(f"entries must be numeric ({exc})") from exc
        # Normalizes -0.0 so equal instances hash equally.
        array = array + 0.0
        array.setflags(write=False)
        return array

    @field_validator("name")
    @classmethod
    def validate_name(cls, value: str) -> str:
        """Ensure the name fits on the single ``# name:`` line of a file."""
        if any(unicodedata.category(ch) in _LINE_BREAKING for ch in value):
            raise ValueError("name must not contain line breaks or control characters")
        return value

    @model_validator(mode="after")
    def check_dimensions(self) -> "GqapInstance":
        m, n = self.machine_count, self.location_count
        expected = {
            "assign_cost": (m, n),
            "flow": (m, m),
            "distance": (n, n),
            "requirement": (m,),
            "capacity": (n,),
        }
        for field_name, shape in expected.items():
            array: np.ndarray = getattr(self, field_name)
            if array.shape != shape:
                raise ValueError(
                    f"{field_name} has shape {array.shape}, expected {shape}"
                )
            if not np.all(np.isfinite(array)):
                raise ValueError(f"{field_name} contains non-finite entries")
            if np.any(array < 0):
                raise ValueError(f"{field_name} contains negative entries")
        return self

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GqapInstance):
            return NotImplemented
        return (
            self.machine_count == other.machine_count
            and self.location_count == other.location_count
            and self.unit_cost == other.unit_cost
            and self.name == other.name
            and all(
                np.array_equal(getattr(self, f), getattr(other, f))
                for f in ARRAY_FIELDS
            )
        )

    def __hash__(self) -> int:
        return hash(
            (
                self.machine_count,
                self.location_count,
                self.unit_cost,
                self.name,
                *(getattr(self, f).tobytes() for f in ARRAY_FIELDS),
            )
        )

    @property
    def search_space_size(self) -> int:
        """Number of distinct assignments, N ** M."""
        return int(self.location_count) ** int(self.machine_count)


__all__ = ["ARRAY_FIELDS", "GqapInstance"]
