"""Young diagram geometry: cells, orders, hooks, corners, regions and rim-hooks.

Cells are ``(row, col)`` pairs, 1-indexed, with rows growing downward.
"""
from __future__ import annotations

import bisect
import enum
from dataclasses import dataclass, field
from functools import cached_property, total_ordering
from typing import Iterable, Iterator, NamedTuple


class Cell(NamedTuple):
    row: int
    col: int

    @property
    def content(self) -> int:
        return self.col - self.row

    def north(self) -> Cell:
        return Cell(self.row - 1, self.col)

    def east(self) -> Cell:
        return Cell(self.row, self.col + 1)

    def south(self) -> Cell:
        return Cell(self.row + 1, self.col)

    def west(self) -> Cell:
        return Cell(self.row, self.col - 1)

    def __str__(self) -> str:
        return f"({self.row},{self.col})"

    @classmethod
    def parse(cls, text: str) -> Cell:
        """Parse ``"i,j"`` (optionally wrapped in parentheses)."""
        stripped = text.strip().strip("()")
        pieces = stripped.split(",")
        if len(pieces) != 2:
            raise ValueError(f"cell must look like 'i,j', got {text!r}")
        try:
            return cls(int(pieces[0]), int(pieces[1]))
        except ValueError:
            raise ValueError(f"cell must look like 'i,j', got {text!r}") from None


class Region(enum.Enum):
    I = "I"  # noqa: E741
    O = "O"  # noqa: E741
    A = "A"
    B = "B"

    def __str__(self) -> str:
        return self.value


class ShapeError(ValueError):
    """Raised for malformed partitions or cells outside a diagram."""


def rev_lex_key(u: Cell) -> tuple[int, int]:
    """Sort key for the reverse lexicographic order (minimum first)."""
    return (-u.col, -u.row)


def content_key(u: Cell) -> tuple[int, int]:
    """Sort key for the content order (minimum first)."""
    return (-u.content, -u.row)


def _cmp(a, b) -> int:
    return (a > b) - (a < b)


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for k, p in enumerate(parts):
            if not isinstance(p, int) or p <= 0:
                raise ShapeError(f"parts must be positive integers, got {parts}")
            if k and parts[k - 1] < p:
                raise ShapeError(f"parts must be weakly decreasing, got {parts}")

    @classmethod
    def parse(cls, text: str) -> Partition:
        text = text.strip()
        if text in ("", "0", "()", "[]"):
            return cls(())
        try:
            parts = tuple(int(x) for x in text.strip("()[]").split(","))
        except ValueError:
            raise ShapeError(f"shape must be comma-separated integers, got {text!r}") from None
        return cls(parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def __len__(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def row_length(self, i: int) -> int:
        """lambda_i, or 0 for rows outside 1..len."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def col_length(self, j: int) -> int:
        """lambda'_j, or 0 for columns outside 1..lambda_1."""
        return self.conjugate.row_length(j)

    def __contains__(self, u) -> bool:
        i, j = u
        return 1 <= i <= len(self.parts) and 1 <= j <= self.parts[i - 1]

    @cached_property
    def conjugate(self) -> Partition:
        width = self.parts[0] if self.parts else 0
        return Partition(tuple(sum(1 for p in self.parts if p >= j) for j in range(1, width + 1)))

    @cached_property
    def cells(self) -> tuple[Cell, ...]:
        """All cells in row-major order."""
        return tuple(Cell(i, j) for i, p in enumerate(self.parts, 1) for j in range(1, p + 1))

    def cells_rev_lex(self) -> list[Cell]:
        return sorted(self.cells, key=rev_lex_key)

    def contains_shape(self, other: Partition) -> bool:
        return len(other) <= len(self) and all(q <= p for p, q in zip(self.parts, other.parts))

    def _require(self, u: Cell) -> None:
        if u not in self:
            raise ShapeError(f"cell {tuple(u)} is not in shape ({self})")

    def hook_length(self, u: Cell) -> int:
        self._require(u)
        i, j = u
        return self.row_length(i) + self.col_length(j) - i - j + 1

    def hook_cells(self, u: Cell) -> frozenset[Cell]:
        self._require(u)
        i, j = u
        arm = (Cell(i, b) for b in range(j, self.row_length(i) + 1))
        leg = (Cell(a, j) for a in range(i + 1, self.col_length(j) + 1))
        return frozenset([*arm, *leg])

    @cached_property
    def diagonals(self) -> range:
        """Contents occupied by the diagram, from -(len-1) to lambda_1 - 1."""
        if not self.parts:
            return range(0)
        return range(1 - len(self.parts), self.parts[0])

    # corners and regions

    @cached_property
    def outer_corners(self) -> tuple[Cell, ...]:
        return tuple(u for u in self.cells if u.east() not in self and u.south() not in self)

    @cached_property
    def inner_corners(self) -> tuple[Cell, ...]:
        return tuple(
            u for u in self.cells
            if u.east() in self and u.south() in self and u.south().east() not in self
        )

    def corners(self) -> tuple[tuple[Cell, ...], tuple[Cell, ...]]:
        """Return ``(inner, outer)`` corner cells."""
        return self.inner_corners, self.outer_corners

    @cached_property
    def _corner_contents(self) -> tuple[list[int], list[bool]]:
        # merged, sorted corner contents and a flag telling whether each is outer
        tagged = sorted(
            [(u.content, True) for u in self.outer_corners]
            + [(u.content, False) for u in self.inner_corners]
        )
        return [c for c, _ in tagged], [outer for _, outer in tagged]

    def _region_of_content(self, c: int) -> Region:
        contents, is_outer = self._corner_contents
        k = bisect.bisect_left(contents, c)
        if k < len(contents) and contents[k] == c:
            return Region.O if is_outer[k] else Region.I
        if k == 0:
            return Region.A
        # the nearest corner content below c decides: after an outer corner we are in B
        return Region.B if is_outer[k - 1] else Region.A

    @cached_property
    def region_map(self) -> dict[Cell, Region]:
        return {u: self._region_of_content(u.content) for u in self.cells}

    def region(self, u: Cell) -> Region:
        self._require(u)
        return self.region_map[u]

    # rim-hooks

    def rim_hook(self, u: Cell) -> RimHook:
        self._require(u)
        return RimHook(self, Cell(*u))

    @cached_property
    def rim_hooks(self) -> tuple[RimHook, ...]:
        """Every rim-hook of the shape, in increasing order."""
        return tuple(sorted((RimHook(self, u) for u in self.cells), key=RimHook.sort_key))

    def rim_hook_ending_at(self, tail: Cell, length: int) -> RimHook:
        """The rim-hook with the given tail and length."""
        i, j_tail = tail
        if tail not in self or j_tail != self.row_length(i):
            raise ShapeError(f"{tuple(tail)} is not the tail of any rim-hook of ({self})")
        for j in range(1, j_tail + 1):
            if self.hook_length(Cell(i, j)) == length + 1:
                return RimHook(self, Cell(i, j))
        raise ShapeError(f"no rim-hook of ({self}) has tail {tuple(tail)} and length {length}")


def conjugate(p: Partition) -> Partition:
    return p.conjugate


def hook_length(p: Partition, u: Cell) -> int:
    return p.hook_length(u)


def hook_cells(p: Partition, u: Cell) -> frozenset[Cell]:
    return p.hook_cells(u)


def _check_pair(p: Partition, u: Cell, v: Cell) -> None:
    if u not in p or v not in p:
        raise ShapeError(f"cells {tuple(u)}, {tuple(v)} must both lie in ({p})")


def rev_lex_compare(p: Partition, u: Cell, v: Cell) -> int:
    """-1, 0 or 1 as u is below, equal to or above v in the reverse lexicographic order."""
    _check_pair(p, u, v)
    return _cmp(rev_lex_key(u), rev_lex_key(v))


def content_compare(p: Partition, u: Cell, v: Cell) -> int:
    _check_pair(p, u, v)
    return _cmp(content_key(u), content_key(v))


def region_of(p: Partition, u: Cell) -> Region:
    return p.region(u)


def rim_hook_of_cell(p: Partition, u: Cell) -> RimHook:
    return p.rim_hook(u)


def rim_hook_compare(p: Partition, f: RimHook, h: RimHook) -> int:
    if f.shape != p or h.shape != p:
        raise ShapeError("rim-hooks must belong to the given shape")
    return _cmp(f.sort_key(), h.sort_key())


def all_rim_hooks(p: Partition) -> list[RimHook]:
    return list(p.rim_hooks)


class Orientation(enum.Enum):
    NORTH_EAST = "NE"
    SOUTH_WEST = "SW"


@dataclass(frozen=True)
class LatticePath:
    """A North-East or South-West lattice path.

    ``head`` and ``tail`` do not depend on the orientation: the head is the
    South-West end and the tail the North-East end.
    """

    cells: tuple[Cell, ...]
    orientation: Orientation = Orientation.NORTH_EAST

    def __post_init__(self) -> None:
        cells = tuple(Cell(*u) for u in self.cells)
        object.__setattr__(self, "cells", cells)
        if self.orientation is Orientation.NORTH_EAST:
            allowed = (Cell.north, Cell.east)
        else:
            allowed = (Cell.south, Cell.west)
        for a, b in zip(cells, cells[1:]):
            if b not in (allowed[0](a), allowed[1](a)):
                raise ValueError(
                    f"{b} does not follow {a} in a {self.orientation.value} path"
                )

    @classmethod
    def north_east(cls, cells: Iterable[Cell]) -> LatticePath:
        return cls(tuple(cells), Orientation.NORTH_EAST)

    @classmethod
    def south_west(cls, cells: Iterable[Cell]) -> LatticePath:
        return cls(tuple(cells), Orientation.SOUTH_WEST)

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.cells)

    def __contains__(self, u) -> bool:
        return u in self.cell_set

    @cached_property
    def cell_set(self) -> frozenset[Cell]:
        return frozenset(self.cells)

    @property
    def length(self) -> int:
        return len(self.cells) - 1

    @property
    def head(self) -> Cell:
        if not self.cells:
            raise ValueError("empty path has no head")
        return self.cells[0] if self.orientation is Orientation.NORTH_EAST else self.cells[-1]

    @property
    def tail(self) -> Cell:
        if not self.cells:
            raise ValueError("empty path has no tail")
        return self.cells[-1] if self.orientation is Orientation.NORTH_EAST else self.cells[0]

    def reversed(self) -> LatticePath:
        flipped = (
            Orientation.SOUTH_WEST
            if self.orientation is Orientation.NORTH_EAST
            else Orientation.NORTH_EAST
        )
        return LatticePath(self.cells[::-1], flipped)

    def as_north_east(self) -> LatticePath:
        return self if self.orientation is Orientation.NORTH_EAST else self.reversed()

    def contents(self) -> list[int]:
        return [u.content for u in self.cells]


@total_ordering
@dataclass(frozen=True, eq=False)
class RimHook:
    """The rim-hook of ``shape`` attached to the cell ``corner``.

    The attached cell ``(i, j)`` determines the head ``(lambda'_j, j)`` and the
    tail ``(i, lambda_i)``; the path between them follows the rim.
    """

    shape: Partition
    corner: Cell
    _path: LatticePath = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        i, j = self.corner
        head = Cell(self.shape.col_length(j), j)
        tail = Cell(i, self.shape.row_length(i))
        cells = [head]
        u = head
        while u != tail:
            u = u.east() if u.east() in self.shape else u.north()
            cells.append(u)
        object.__setattr__(self, "_path", LatticePath.north_east(cells))

    @property
    def path(self) -> LatticePath:
        return self._path

    @property
    def cells(self) -> tuple[Cell, ...]:
        return self._path.cells

    @property
    def head(self) -> Cell:
        return self._path.head

    @property
    def tail(self) -> Cell:
        return self._path.tail

    @property
    def length(self) -> int:
        return self._path.length

    @property
    def size(self) -> int:
        return len(self._path)

    def content_interval(self) -> range:
        """Contents covered by the hook: ``j - lambda'_j .. lambda_i - i``."""
        return range(self.head.content, self.tail.content + 1)

    def sort_key(self) -> tuple[int, int]:
        return (-self.head.content, self.tail.content)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RimHook):
            return NotImplemented
        return self.shape == other.shape and self.corner == other.corner

    def __hash__(self) -> int:
        return hash((self.shape.parts, self.corner))

    def __lt__(self, other: RimHook) -> bool:
        if not isinstance(other, RimHook):
            return NotImplemented
        if self.shape != other.shape:
            raise ShapeError("rim-hooks of different shapes are not comparable")
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        return f"RimHook({self.shape}; {self.corner})"
