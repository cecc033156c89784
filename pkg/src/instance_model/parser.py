"""Reading and writing the line-oriented GQAP instance format.

Layout::

    # name: small-6x4        (optional, read as the instance name)
    M N
    A                        M rows of N assignment costs
    F                        M rows of M flows
    D                        N rows of N distances
    R                        one row of M requirements
    C                        one row of N capacities
    UNIT_COST                optional, one scalar (default 1)

``#`` starts a comment anywhere on a line; blank lines are ignored.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, TextIO

import numpy as np
from pydantic import ValidationError

from src.logger import logger
from src.models import GqapInstance

BLOCK_ORDER = ("A", "F", "D", "R", "C")
UNIT_COST_LABEL = "UNIT_COST"
_LABELS = frozenset((*BLOCK_ORDER, UNIT_COST_LABEL))
_NAME_DIRECTIVE = re.compile(r"^\s*#\s*name: ?(.*)$")


class InstanceFormatError(ValueError):
    """Malformed instance text; knows where the problem was found."""

    def __init__(self, message: str, *, line: int | None, section: str) -> None:
        self.line = line
        self.section = section
        where = f"line {line}" if line is not None else "end of input"
        super().__init__(f"{where}, section {section}: {message}")


@dataclass(frozen=True)
class _Line:
    number: int
    tokens: list[str]


def _content_lines(lines: Iterable[str]) -> tuple[str, list[_Line]]:
    """Strip comments, drop blanks, and pick up a leading name directive."""
    name = ""
    seen_content = False
    content: list[_Line] = []
    for number, raw in enumerate(lines, start=1):
        if not seen_content and not name:
            match = _NAME_DIRECTIVE.match(raw.rstrip("\r\n"))
            if match:
                name = match.group(1)
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        seen_content = True
        content.append(_Line(number, text.split()))
    return name, content


def _parse_value(token: str, line: int, section: str) -> float:
    try:
        value = float(token)
    except ValueError:
        raise InstanceFormatError(
            f"non-numeric token '{token}'", line=line, section=section
        ) from None
    if not math.isfinite(value):
        raise InstanceFormatError(
            f"non-finite value '{token}'", line=line, section=section
        )
    if value < 0:
        raise InstanceFormatError(
            f"negative entry {token}", line=line, section=section
        )
    return value


def _parse_count(token: str, line: int, what: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise InstanceFormatError(
            f"{what} must be a positive integer, got '{token}'",
            line=line,
            section="header",
        ) from None
    if value < 1:
        raise InstanceFormatError(
            f"{what} must be a positive integer, got {value}",
            line=line,
            section="header",
        )
    return value


class _BlockReader:
    """Walks content lines block by block."""

    def __init__(self, lines: list[_Line]) -> None:
        self._lines = lines
        self._pos = 0

    def peek(self) -> _Line | None:
        return self._lines[self._pos] if self._pos < len(self._lines) else None

    def take(self) -> _Line:
        line = self._lines[self._pos]
        self._pos += 1
        return line

    def expect_label(self, label: str) -> None:
        line = self.peek()
        if line is None:
            raise InstanceFormatError("missing section", line=None, section=label)
        if line.tokens != [label]:
            found = " ".join(line.tokens)
            raise InstanceFormatError(
                f"missing section (expected label '{label}', found '{found}')",
                line=line.number,
                section=label,
            )
        self.take()

    def read_rows(self, label: str, rows: int, cols: int) -> np.ndarray:
        values = np.empty((rows, cols), dtype=np.float64)
        for row in range(rows):
            line = self.peek()
            if line is None or (len(line.tokens) == 1 and line.tokens[0] in _LABELS):
                raise InstanceFormatError(
                    f"dimension mismatch: {row} rows, expected {rows}",
                    line=None if line is None else line.number,
                    section=label,
                )
            self.take()
            if len(line.tokens) != cols:
                raise InstanceFormatError(
                    f"dimension mismatch: row has {len(line.tokens)} values, "
                    f"expected {cols}",
                    line=line.number,
                    section=label,
                )
            values[row] = [_parse_value(t, line.number, label) for t in line.tokens]
        return values


def parse_instance(text: str | TextIO, name: str | None = None) -> GqapInstance:
    """Parse instance text into a validated GqapInstance.

    ``name`` overrides any ``# name:`` directive found in the text.
    """
    raw_lines = text.splitlines() if isinstance(text, str) else text.readlines()
    found_name, lines = _content_lines(raw_lines)
    if not lines:
        raise InstanceFormatError("empty input", line=None, section="header")

    header = lines[0]
    if len(header.tokens) != 2:
        raise InstanceFormatError(
            f"expected 'M N', found '{' '.join(header.tokens)}'",
            line=header.number,
            section="header",
        )
    m = _parse_count(header.tokens[0], header.number, "M")
    n = _parse_count(header.tokens[1], header.number, "N")

    reader = _BlockReader(lines[1:])
    shapes = {"A": (m, n), "F": (m, m), "D": (n, n), "R": (1, m), "C": (1, n)}
    blocks: dict[str, np.ndarray] = {}
    for label in BLOCK_ORDER:
        reader.expect_label(label)
        blocks[label] = reader.read_rows(label, *shapes[label])

    unit_cost = 1.0
    upcoming = reader.peek()
    if upcoming is not None and upcoming.tokens == [UNIT_COST_LABEL]:
        reader.take()
        unit_cost = float(reader.read_rows(UNIT_COST_LABEL, 1, 1)[0, 0])

    trailing = reader.peek()
    if trailing is not None:
        raise InstanceFormatError(
            f"unexpected content '{' '.join(trailing.tokens)}'",
            line=trailing.number,
            section="trailer",
        )

    try:
        instance = GqapInstance(
            machine_count=m,
            location_count=n,
            assign_cost=blocks["A"],
            flow=blocks["F"],
            distance=blocks["D"],
            requirement=blocks["R"][0],
            capacity=blocks["C"][0],
            unit_cost=unit_cost,
            name=found_name if name is None else name,
        )
    except ValidationError as exc:
        raise InstanceFormatError(str(exc), line=None, section="model") from exc
    logger.debug("Parsed instance '%s' (%sx%s)", instance.name, m, n)
    return instance


def _format_value(value: float) -> str:
    return str(int(value)) if float(value).is_integer() else repr(float(value))


def _format_rows(array: np.ndarray) -> Iterator[str]:
    for row in np.atleast_2d(array):
        yield " ".join(_format_value(v) for v in row)


def serialize_instance(inst: GqapInstance) -> str:
    """Canonical text for an instance; parse_instance reads it back unchanged."""
    lines: list[str] = []
    if inst.name:
        lines.append(f"# name: {inst.name}")
    lines.append(f"{inst.machine_count} {inst.location_count}")
    for label, array in (
        ("A", inst.assign_cost),
        ("F", inst.flow),
        ("D", inst.distance),
        ("R", inst.requirement),
        ("C", inst.capacity),
    ):
        lines.append(label)
        lines.extend(_format_rows(array))
    if inst.unit_cost != 1.0:
        lines.append(UNIT_COST_LABEL)
        lines.append(_format_value(inst.unit_cost))
    return "\n".join(lines) + "\n"


def load_instance(path: str | Path) -> GqapInstance:
    """Read an instance file; the name defaults to the file stem."""
    path = Path(path)
    instance = parse_instance(path.read_text(encoding="utf-8"))
    if not instance.name:
        instance = instance.model_copy(update={"name": path.stem})
    logger.info("Loaded instance '%s' from %s", instance.name, path)
    return instance


def save_instance(inst: GqapInstance, path: str | Path) -> Path:
    path = Path(path)
    path.write_text(serialize_instance(inst), encoding="utf-8")
    logger.info("Wrote instance '%s' to %s", inst.name, path)
    return path


__all__ = [
    "BLOCK_ORDER",
    "InstanceFormatError",
    "load_instance",
    "parse_instance",
    "save_instance",
    "serialize_instance",
]
