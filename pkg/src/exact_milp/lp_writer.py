"""Linearized MILP of a GQAP instance, written in CPLEX LP format.

Variables: ``x_i_k`` (binary, machine i at location k) and ``w_i_j_k_l``
(continuous, >= 0) standing in for the product ``x_i_k * x_j_l`` for every
i != j and k != l. Rows: ``asg_i`` (each machine placed once), ``cap_k``
(location capacity) and ``lnk_i_j_k_l`` (x_i_k + x_j_l - w_i_j_k_l <= 1).
The objective sums a_ik x_i_k and unit_cost * f_ij * d_kl * w_i_j_k_l.

Pairs sharing a location have no w column, so the distance diagonal does
not reach the LP objective.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping

import numpy as np

from src.logger import logger
from src.models import GqapInstance, ModelStats


@dataclass(frozen=True)
class LinearRow:
    name: str
    terms: tuple[tuple[str, float], ...]
    sense: str
    rhs: float

    def lhs(self, values: Mapping[str, float]) -> float:
        return sum(coef * values.get(var, 0.0) for var, coef in self.terms)

    def satisfied(self, values: Mapping[str, float], tol: float = 1e-9) -> bool:
        lhs = self.lhs(values)
        if self.sense == "=":
            return abs(lhs - self.rhs) <= tol
        return lhs <= self.rhs + tol


@dataclass(frozen=True)
class LinearModel:
    name: str
    objective: tuple[tuple[str, float], ...]
    rows: tuple[LinearRow, ...]
    binaries: tuple[str, ...]
    continuous: tuple[str, ...]

    def statistics(self) -> ModelStats:
        nonzeros = sum(1 for row in self.rows for _, c in row.terms if c != 0)
        return ModelStats(
            constraints=len(self.rows),
            variables=len(self.binaries) + len(self.continuous),
            binaries=len(self.binaries),
            nonzeros=nonzeros,
        )

    def evaluate(self, values: Mapping[str, float]) -> float:
        return sum(coef * values.get(var, 0.0) for var, coef in self.objective)

    def violations(
        self, values: Mapping[str, float], tol: float = 1e-9
    ) -> list[str]:
        return [row.name for row in self.rows if not row.satisfied(values, tol)]


def x_name(i: int, k: int) -> str:
    return f"x_{i}_{k}"


def w_name(i: int, j: int, k: int, loc: int) -> str:
    return f"w_{i}_{j}_{k}_{loc}"


def model_statistics(machine_count: int, location_count: int) -> ModelStats:
    """Row and column counts of the linearized model for an M x N instance."""
    if machine_count < 1 or location_count < 1:
        raise ValueError("M and N must be positive")
    m, n = machine_count, location_count
    pairs = m * (m - 1) * n * (n - 1)
    return ModelStats(
        constraints=m + n + pairs,
        variables=m * n + pairs,
        binaries=m * n,
        nonzeros=2 * m * n + 3 * pairs,
    )


def _pairs(m: int, n: int) -> Iterable[tuple[int, int, int, int]]:
    """(i, j, k, loc), 1-based, i != j and k != loc, lexicographic."""
    machines = range(1, m + 1)
    locations = range(1, n + 1)
    for i, j, k, loc in product(machines, machines, locations, locations):
        if i != j and k != loc:
            yield i, j, k, loc


def build_lp_model(inst: GqapInstance, omit_zero_w: bool = False) -> LinearModel:
    """Assemble the linearized model.

    With ``omit_zero_w`` a w column whose objective coefficient is zero is
    dropped together with its linking row; the default keeps every column so
    counts match model_statistics.
    """
    m, n = inst.machine_count, inst.location_count
    if np.any(np.diag(inst.distance) != 0):
        logger.warning(
            "Instance '%s' has nonzero distance diagonal; the LP objective "
            "leaves out co-located transport cost",
            inst.name,
        )

    cells = list(product(range(1, m + 1), range(1, n + 1)))
    objective: list[tuple[str, float]] = []
    for i, k in cells:
        coef = float(inst.assign_cost[i - 1, k - 1])
        if coef != 0:
            objective.append((x_name(i, k), coef))

    links: list[LinearRow] = []
    continuous: list[str] = []
    for i, j, k, loc in _pairs(m, n):
        transport = inst.flow[i - 1, j - 1] * inst.distance[k - 1, loc - 1]
        coef = inst.unit_cost * float(transport)
        if coef == 0 and omit_zero_w:
            continue
        w = w_name(i, j, k, loc)
        continuous.append(w)
        if coef != 0:
            objective.append((w, coef))
        links.append(
            LinearRow(
                name=f"lnk_{i}_{j}_{k}_{loc}",
                terms=((x_name(i, k), 1.0), (x_name(j, loc), 1.0), (w, -1.0)),
                sense="<=",
                rhs=1.0,
            )
        )

    assignment_rows = [
        LinearRow(
            name=f"asg_{i}",
            terms=tuple((x_name(i, k), 1.0) for k in range(1, n + 1)),
            sense="=",
            rhs=1.0,
        )
        for i in range(1, m + 1)
    ]
    capacity_rows = [
        LinearRow(
            name=f"cap_{k}",
            terms=tuple(
                (x_name(i, k), float(inst.requirement[i - 1]))
                for i in range(1, m + 1)
            ),
            sense="<=",
            rhs=float(inst.capacity[k - 1]),
        )
        for k in range(1, n + 1)
    ]
    return LinearModel(
        name=inst.name or "gqap",
        objective=tuple(objective),
        rows=(*assignment_rows, *capacity_rows, *links),
        binaries=tuple(x_name(i, k) for i, k in cells),
        continuous=tuple(continuous),
    )


def _coef(value: float) -> str:
    text = str(int(value)) if float(value).is_integer() else repr(float(value))
    return text if text.startswith("-") else f"+{text}"


def _term_lines(terms: Iterable[tuple[str, float]]) -> list[str]:
    return [f"{_coef(coef)} {var}" for var, coef in terms]


def render_lp(model: LinearModel) -> str:
    """One term per line, as CPLEX LP readers accept without line limits."""
    lines = [
        f"\\ Problem: {model.name}",
        "\\ Linearized GQAP: w_i_j_k_l replaces x_i_k * x_j_l",
        "Minimize",
        "obj:",
    ]
    objective = model.objective or ((model.binaries[0], 0.0),)
    lines.extend(_term_lines(objective))
    lines.append("Subject To")
    for row in model.rows:
        lines.append(f"{row.name}:")
        lines.extend(_term_lines(row.terms))
        lines.append(f"{row.sense} {_coef(row.rhs).lstrip('+')}")
    lines.append("Bounds")
    lines.extend(f"{var} >= 0" for var in model.continuous)
    lines.append("Binary")
    lines.extend(model.binaries)
    lines.append("End")
    return "\n".join(lines) + "\n"


def write_lp(inst: GqapInstance, omit_zero_w: bool = False) -> str:
    """LP text for the instance; stable ordering makes it diffable."""
    return render_lp(build_lp_model(inst, omit_zero_w=omit_zero_w))


_SECTIONS = ("minimize", "subject to", "bounds", "binary", "end")


def lp_statistics(text: str) -> ModelStats:
    """Count rows and declared columns in LP text produced by ``render_lp``."""
    section = ""
    rows = 0
    nonzeros = 0
    bounded: set[str] = set()
    binaries: set[str] = set()
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("\\"):
            continue
        if line.lower() in _SECTIONS:
            section = line.lower()
            continue
        if section == "subject to":
            if line.endswith(":"):
                rows += 1
            elif line[0] in "+-":
                coef_text, _ = line.split(maxsplit=1)
                if float(coef_text) != 0:
                    nonzeros += 1
        elif section == "bounds":
            bounded.add(line.split()[0])
        elif section == "binary":
            binaries.add(line)
    columns = bounded | binaries
    return ModelStats(
        constraints=rows,
        variables=len(columns),
        binaries=len(binaries),
        nonzeros=nonzeros,
    )


__all__ = [
    "LinearModel",
    "LinearRow",
    "build_lp_model",
    "lp_statistics",
    "model_statistics",
    "render_lp",
    "write_lp",
]
