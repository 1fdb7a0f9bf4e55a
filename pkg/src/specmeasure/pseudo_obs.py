"""Rank-based pseudo-observations and plain-text sample I/O.

Raw bivariate data enter the estimators only through their within-column
ranks, so every quantity computed downstream is invariant under strictly
increasing transformations of either margin.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import IO, Union

import numpy as np

__all__ = [
    "InputError",
    "ParseError",
    "BivariateSample",
    "PseudoObservations",
    "column_ranks",
    "pseudo_observations",
    "read_sample",
    "write_sample",
]

PathOrStream = Union[str, os.PathLike, IO[str]]


class InputError(ValueError):
    """Raised for structurally valid input whose values are unusable."""


class ParseError(ValueError):
    """Raised for malformed text records; carries the 1-based line number."""

    def __init__(self, message: str, lineno: int):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class BivariateSample:
    """An n-by-2 array of finite raw observations."""

    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 2 or values.shape[1] != 2:
            raise InputError(f"sample must have shape (n, 2), got {values.shape}")
        if values.shape[0] < 1:
            raise InputError("sample must contain at least one row")
        bad = ~np.isfinite(values)
        if bad.any():
            row, col = np.argwhere(bad)[0]
            raise InputError(
                f"non-finite value {values[row, col]!r} at row {row + 1}, column {col + 1}"
            )
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return self.values.shape[0]


@dataclass(frozen=True)
class PseudoObservations:
    """Per-column pseudo-observations u_ij = (n + 1 - R_ij) / n.

    R_ij is the maximal rank ``#{l : x_lj <= x_ij}``, so ties share the
    larger rank and ``tie_flag`` records whether any column had ties.
    Every u_ij lies in (0, 1]; large observations map to small u.
    """

    u: np.ndarray
    tie_flag: bool

    @property
    def n(self) -> int:
        return self.u.shape[0]


def column_ranks(column: np.ndarray) -> np.ndarray:
    """Ranks R_i = #{l : x_l <= x_i} via sorting, O(n log n).

    Equals the quadratic counting definition, including under ties
    (tied values all receive the maximal rank of their group).
    """
    column = np.asarray(column, dtype=float)
    return np.searchsorted(np.sort(column), column, side="right").astype(np.int64)


def pseudo_observations(sample: BivariateSample) -> PseudoObservations:
    """Map a raw sample to rank-based pseudo-observations.

    Each column sums to (n + 1) / 2 when the column has no ties.
    """
    values = sample.values
    n = sample.n
    u = np.empty_like(values)
    tie = False
    for j in range(2):
        ranks = column_ranks(values[:, j])
        u[:, j] = (n + 1 - ranks) / n
        tie = tie or np.unique(values[:, j]).size < n
    return PseudoObservations(u=u, tie_flag=tie)


def _fields(line: str) -> list[str]:
    return [part.strip() for part in line.split(",")]


def read_sample(source: PathOrStream) -> BivariateSample:
    """Read a two-column comma-delimited text sample.

    One record per line, two numeric fields, surrounding spaces
    tolerated.  A single leading header line is skipped when its first
    field is not numeric.  Blank lines are ignored.

    Raises
    ------
    ParseError
        If a data row does not contain exactly two numeric fields; the
        message cites the 1-based line number.
    InputError
        If no data rows remain, or a parsed value is not finite.
    """
    if hasattr(source, "read"):
        return _read_stream(source)
    with open(source, "r", encoding="utf-8") as handle:
        return _read_stream(handle)


def _read_stream(stream: IO[str]) -> BivariateSample:
    rows: list[tuple[float, float]] = []
    saw_record = False
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line:
            continue
        parts = _fields(line)
        first_record = not saw_record
        saw_record = True
        if len(parts) != 2:
            if first_record and not _is_number(parts[0]):
                continue
            raise ParseError(f"expected 2 comma-separated fields, found {len(parts)}", lineno)
        try:
            x = float(parts[0])
            y = float(parts[1])
        except ValueError:
            if first_record and not _is_number(parts[0]):
                continue
            raise ParseError(f"non-numeric field in record {line!r}", lineno) from None
        rows.append((x, y))
    if not rows:
        raise InputError("no data rows found")
    return BivariateSample(np.array(rows, dtype=float))


def _is_number(text: str) -> bool:
    try:
        float(text)
    except ValueError:
        return False
    return True


def format_value(x: float) -> str:
    """17-significant-digit decimal form; float64 round-trips exactly."""
    return format(float(x), ".17g")


def write_sample(sample: BivariateSample, dest: PathOrStream, header: str = "x1,x2") -> None:
    """Write a sample in the same format accepted by :func:`read_sample`."""
    lines = [header]
    lines.extend(f"{format_value(a)},{format_value(b)}" for a, b in sample.values)
    text = "\n".join(lines) + "\n"
    if hasattr(dest, "write"):
        dest.write(text)
    else:
        with open(dest, "w", encoding="utf-8") as handle:
            handle.write(text)
