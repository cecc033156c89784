"""Two-factor experiment design over population size and stall limit."""

from __future__ import annotations

import hashlib
from itertools import product

from pydantic import BaseModel, ConfigDict, Field, field_validator


class DoeGrid(BaseModel):
    model_config = ConfigDict(frozen=True)

    n_pop_levels: tuple[int, ...] = Field(..., min_length=1)
    max_k_levels: tuple[int, ...] = Field(..., min_length=1)
    replicates: int = Field(default=3, ge=1)
    base_seed: int = Field(default=0, ge=0)

    @field_validator("n_pop_levels")
    @classmethod
    def validate_n_pop(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        """Ensure each population level can hold two parents."""
        if any(level < 2 for level in value):
            raise ValueError("population sizes must be at least 2")
        return tuple(sorted(set(value)))

    @field_validator("max_k_levels")
    @classmethod
    def validate_max_k(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        """Ensure each stagnation limit is positive."""
        if any(level < 1 for level in value):
            raise ValueError("max_k levels must be at least 1")
        return tuple(sorted(set(value)))

    def cells(self) -> list[tuple[int, int]]:
        return list(product(self.n_pop_levels, self.max_k_levels))

    def runs(self) -> list[tuple[int, int, int]]:
        """(n_pop, max_k, replicate) triples in report order."""
        return [
            (n_pop, max_k, rep)
            for n_pop, max_k in self.cells()
            for rep in range(1, self.replicates + 1)
        ]

    def replicate_seed(self, n_pop: int, max_k: int, replicate: int) -> int:
        """First 4 bytes (big-endian) of SHA-256 over ``base:n_pop:max_k:rep``."""
        key = f"{self.base_seed}:{n_pop}:{max_k}:{replicate}".encode("ascii")
        return int.from_bytes(hashlib.sha256(key).digest()[:4], "big")


__all__ = ["DoeGrid"]
