"""Size of the linearized MILP."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field


class ModelStats(BaseModel):
    model_config = ConfigDict(frozen=True)

    constraints: int = Field(..., ge=0)
    variables: int = Field(..., ge=0)
    binaries: int = Field(..., ge=0)
    nonzeros: int | None = Field(default=None, ge=0)

    def describe(self) -> str:
        return (
            f"constraints={self.constraints} variables={self.variables} "
            f"binaries={self.binaries}"
        )


__all__ = ["ModelStats"]
