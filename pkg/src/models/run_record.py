"""One benchmark result row."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.models.assignment import Assignment

CSV_COLUMNS = (
    "instance",
    "n_pop",
    "max_k",
    "replicate",
    "seed",
    "elapsed_seconds",
    "z_best_ga",
    "z_best_after_ls",
    "best_assignment",
    "feasible",
    "z_reference",
    "percent_dev",
)

SUMMARY_REPLICATE = "best"


def format_number(value: float) -> str:
    """Plain decimal text: integral values without a fraction, no separators."""
    if float(value).is_integer():
        return str(int(value))
    return repr(float(value))


class RunRecord(BaseModel):
    """A GA + local search run as reported in the benchmark CSV.

    Summary rows repeat the chosen replicate of a parameter cell with
    ``is_summary`` set; their replicate column reads ``best``.
    """

    model_config = ConfigDict(frozen=True)

    instance_name: str
    n_pop: int = Field(..., ge=2)
    max_k: int = Field(..., ge=1)
    replicate: int = Field(default=1, ge=1)
    seed: int = Field(..., ge=0)
    elapsed_seconds: float = Field(..., ge=0)
    z_best_ga: float
    z_best_after_ls: float
    best_assignment: Assignment
    feasible_flag: bool
    z_reference: float | None = None
    percent_dev: float | None = None
    is_summary: bool = False

    @model_validator(mode="after")
    def check_consistency(self) -> "RunRecord":
        if self.feasible_flag and self.z_best_after_ls > self.z_best_ga:
            raise ValueError("local search result is worse than the GA result")
        if self.percent_dev is not None and self.z_reference is None:
            raise ValueError("percent_dev requires z_reference")
        return self

    def quality_key(self) -> float:
        """Lower is better; infeasible runs sort last."""
        if not self.feasible_flag:
            return float("inf")
        if self.percent_dev is not None:
            return self.percent_dev
        return self.z_best_after_ls

    def to_csv_row(self) -> list[str]:
        if self.z_reference is None:
            percent = ""
        elif self.percent_dev is None:
            percent = "n/a"
        else:
            percent = f"{self.percent_dev:.2f}"
        return [
            self.instance_name,
            str(self.n_pop),
            str(self.max_k),
            SUMMARY_REPLICATE if self.is_summary else str(self.replicate),
            str(self.seed),
            f"{self.elapsed_seconds:.4f}",
            format_number(self.z_best_ga),
            format_number(self.z_best_after_ls),
            str(self.best_assignment),
            "true" if self.feasible_flag else "false",
            "" if self.z_reference is None else format_number(self.z_reference),
            percent,
        ]


__all__ = ["CSV_COLUMNS", "RunRecord", "SUMMARY_REPLICATE", "format_number"]
