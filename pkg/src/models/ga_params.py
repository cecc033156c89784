"""Genetic algorithm configuration schema."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field

from src.settings import DEFAULT_MAX_ITER

DEFAULT_SENTINEL_FITNESS = 9_999_999.0
DEFAULT_TOURNAMENT_RETRY_CAP = 50


class GaParams(BaseModel):
    """Parameters of one steady-state GA run."""

    model_config = ConfigDict(frozen=True)

    n_pop: int = Field(..., ge=2, description="Chromosomes in the population.")
    max_k: int = Field(
        ...,
        ge=1,
        description="Accepted children without improvement before stopping.",
    )
    max_iter: int = Field(default=DEFAULT_MAX_ITER, ge=1)
    seed: int = Field(default=0, ge=0)
    sentinel_fitness: float = Field(default=DEFAULT_SENTINEL_FITNESS, gt=0)
    tournament_retry_cap: int = Field(default=DEFAULT_TOURNAMENT_RETRY_CAP, ge=1)


__all__ = ["DEFAULT_SENTINEL_FITNESS", "DEFAULT_TOURNAMENT_RETRY_CAP", "GaParams"]
