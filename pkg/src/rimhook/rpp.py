"""Reverse plane partitions of a fixed shape.

Off-grid entries follow the usual conventions: cells with a non-positive
coordinate read as 0, and positive-quadrant cells outside the shape read as
``INFINITY``.  ``INFINITY`` is only ever returned by :meth:`ReversePlanePartition.entry`,
never stored.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .shape import Cell, LatticePath, Partition, ShapeError

INFINITY = math.inf

Grid = list[list[int]]


class RppError(ValueError):
    """A filling that is not a reverse plane partition of its shape.

    ``cell`` is the first offending cell in reverse lexicographic order, or
    None when the grid does not even match the shape.
    """

    def __init__(self, message: str, cell: Cell | None = None, reason: str = "monotonicity"):
        super().__init__(message)
        self.cell = cell
        self.reason = reason


class RppParseError(ValueError):
    pass


def _shape_mismatch(shape: Partition, rows: Sequence[Sequence[int]]) -> str | None:
    lengths = [len(r) for r in rows]
    if lengths != list(shape.parts):
        return f"row lengths {lengths} do not match shape ({shape})"
    return None


def first_violation(shape: Partition, rows: Sequence[Sequence[int]]) -> tuple[Cell, str] | None:
    """First cell (reverse lexicographic order) breaking the RPP conditions."""

    def at(i: int, j: int) -> float:
        if (i, j) in shape:
            return rows[i - 1][j - 1]
        return INFINITY

    for u in shape.cells_rev_lex():
        i, j = u
        x = rows[i - 1][j - 1]
        if not isinstance(x, int) or isinstance(x, bool):
            return u, "non-integer"
        if x < 0:
            return u, "negative"
        if x > at(i, j + 1) or x > at(i + 1, j):
            return u, "monotonicity"
    return None


@dataclass(frozen=True)
class ReversePlanePartition:
    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        mismatch = _shape_mismatch(self.shape, self.rows)
        if mismatch:
            raise RppError(mismatch, reason="shape")
        bad = first_violation(self.shape, self.rows)
        if bad is not None:
            cell, reason = bad
            raise RppError(f"not a reverse plane partition: {reason} at {cell}", cell, reason)

    @classmethod
    def zero(cls, shape: Partition) -> ReversePlanePartition:
        return cls(shape, tuple((0,) * p for p in shape.parts))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], shape: Partition | None = None) -> ReversePlanePartition:
        rows = tuple(tuple(r) for r in rows)
        if shape is None:
            try:
                shape = Partition(tuple(len(r) for r in rows))
            except ShapeError as exc:
                raise RppError(f"row lengths do not form a partition: {exc}", reason="shape") from None
        return cls(shape, rows)

    def __getitem__(self, u) -> int:
        i, j = u
        if (i, j) not in self.shape:
            raise KeyError(u)
        return self.rows[i - 1][j - 1]

    def entry(self, u) -> float:
        """Value at any cell, with the off-grid conventions applied."""
        i, j = u
        if i <= 0 or j <= 0:
            return 0
        if (i, j) not in self.shape:
            return INFINITY
        return self.rows[i - 1][j - 1]

    @cached_property
    def size(self) -> int:
        return sum(map(sum, self.rows))

    def is_zero(self) -> bool:
        return self.size == 0

    def to_lists(self) -> Grid:
        return [list(r) for r in self.rows]

    def trace(self) -> dict[int, int]:
        """Diagonal sums ``tr_k`` over the shape's full diagonal range."""
        tr = {k: 0 for k in self.shape.diagonals}
        for u in self.shape.cells:
            tr[u.content] += self.rows[u.row - 1][u.col - 1]
        return tr

    def trace_vector(self) -> tuple[int, ...]:
        tr = self.trace()
        return tuple(tr[k] for k in self.shape.diagonals)

    # path arithmetic

    def add_path(self, path: LatticePath | Iterable[Cell]) -> Grid:
        return _shift(self, path, 1)

    def subtract_path(self, path: LatticePath | Iterable[Cell]) -> Grid:
        """Entries decremented along ``path``; may contain negatives."""
        return _shift(self, path, -1)

    # serialization

    def to_json_obj(self) -> dict:
        return {"shape": list(self.shape.parts), "rows": self.to_lists()}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    def to_text(self) -> str:
        """Right-aligned grid, one line per row."""
        if not self.rows:
            return ""
        width = max(len(str(x)) for r in self.rows for x in r)
        return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in self.rows)

    def __str__(self) -> str:
        return self.to_text()


def _shift(rpp: ReversePlanePartition, path, delta: int) -> Grid:
    grid = rpp.to_lists()
    for i, j in path:
        if (i, j) not in rpp.shape:
            raise ShapeError(f"path cell {(i, j)} is not in shape ({rpp.shape})")
        grid[i - 1][j - 1] += delta
    return grid


def validate(shape: Partition, rows: Sequence[Sequence[int]]) -> ReversePlanePartition:
    return ReversePlanePartition(shape, tuple(tuple(r) for r in rows))


def is_valid(shape: Partition, rows: Sequence[Sequence[int]]) -> bool:
    if _shape_mismatch(shape, rows):
        return False
    return first_violation(shape, rows) is None


def entry(rpp: ReversePlanePartition, u) -> float:
    return rpp.entry(u)


def add_path(rpp: ReversePlanePartition, path) -> Grid:
    return rpp.add_path(path)


def subtract_path(rpp: ReversePlanePartition, path) -> Grid:
    return rpp.subtract_path(path)


def trace(rpp: ReversePlanePartition) -> dict[int, int]:
    return rpp.trace()


# parsing


def from_json_obj(obj) -> ReversePlanePartition:
    if not isinstance(obj, dict) or "rows" not in obj:
        raise RppParseError('expected an object with "rows" (and optionally "shape")')
    rows = obj["rows"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise RppParseError('"rows" must be a list of lists of integers')
    for a, r in enumerate(rows, 1):
        for b, x in enumerate(r, 1):
            if not isinstance(x, int) or isinstance(x, bool):
                raise RppParseError(f"row {a}, column {b}: expected an integer, got {x!r}")
    shape = None
    if "shape" in obj:
        try:
            shape = Partition(tuple(obj["shape"]))
        except (ShapeError, TypeError) as exc:
            raise RppParseError(f'bad "shape": {exc}') from None
        for a, r in enumerate(rows, 1):
            if a > len(shape) or len(r) > shape.row_length(a):
                raise RppParseError(f"row {a} is longer than shape ({shape}) allows")
    return ReversePlanePartition.from_rows(rows, shape)


def parse_json(text: str) -> ReversePlanePartition:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RppParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return from_json_obj(obj)


def parse_text(text: str, shape: Partition | None = None) -> ReversePlanePartition:
    """Parse a whitespace-separated grid; rows are lines (or ``;``-separated)."""
    lines = [ln for ln in text.replace(";", "\n").splitlines() if ln.strip()]
    rows = []
    for a, line in enumerate(lines, 1):
        row = []
        for b, tok in enumerate(line.replace(",", " ").split(), 1):
            try:
                row.append(int(tok))
            except ValueError:
                raise RppParseError(f"row {a}, column {b}: expected an integer, got {tok!r}") from None
        rows.append(row)
    if shape is not None:
        for a, r in enumerate(rows, 1):
            if a > len(shape) or len(r) > shape.row_length(a):
                raise RppParseError(f"row {a} is longer than shape ({shape}) allows")
    return ReversePlanePartition.from_rows(rows, shape)


def parse(text: str, shape: Partition | None = None) -> ReversePlanePartition:
    """Parse either the JSON or the text-grid form."""
    if text.lstrip().startswith("{"):
        rpp = parse_json(text)
        if shape is not None and rpp.shape != shape:
            raise RppParseError(f"expected shape ({shape}), got ({rpp.shape})")
        return rpp
    return parse_text(text, shape)
