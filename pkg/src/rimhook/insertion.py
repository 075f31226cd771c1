"""Rim-hook insertion into reverse plane partitions, and the map from
multisets of rim-hooks to reverse plane partitions built on it."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .rpp import ReversePlanePartition, first_violation
from .shape import Cell, LatticePath, Partition, Region, RimHook, ShapeError

PATH_LEFT_SHAPE = "path-left-shape"
COMPATIBILITY_VIOLATION = "compatibility-violation"
NOT_AN_RPP = "not-an-rpp"

_EAST_REGIONS = (Region.I, Region.A)
_SOUTH_REGIONS = (Region.B, Region.I)


class InvariantViolation(RuntimeError):
    """An outcome the theory rules out was observed; indicates a bug."""


class PathLeftShape(Exception):
    def __init__(self, step: int, cell: Cell):
        super().__init__(f"insertion path left the shape at step {step} (cell {cell})")
        self.step = step
        self.cell = cell


def compatibility_violation(rpp: ReversePlanePartition, path: LatticePath) -> tuple[Cell, int] | None:
    """First cell of ``path`` (head to tail) breaking compatibility with ``rpp``.

    Returns ``(cell, condition)`` where condition 1 is the East rule for
    cells in I or A and condition 2 the equal-entries rule for vertical steps.
    """
    shape = rpp.shape
    on_path = path.cell_set
    for u in path.as_north_east().cells:
        if shape.region(u) in _EAST_REGIONS:
            e = u.east()
            if e not in on_path or rpp.entry(e) != rpp.entry(u):
                return u, 1
        n = u.north()
        if n in on_path and rpp.entry(n) != rpp.entry(u):
            return u, 2
    return None


def is_compatible(rpp: ReversePlanePartition, path: LatticePath) -> bool:
    return compatibility_violation(rpp, path) is None


def insertion_path(rpp: ReversePlanePartition, hook: RimHook) -> LatticePath:
    """South-West path started at the hook's tail and extended by the step rule.

    Raises :class:`PathLeftShape` if a West step runs off the diagram.
    """
    shape = rpp.shape
    u = hook.tail
    cells = [u]
    for step in range(1, hook.length + 1):
        if shape.region(u) in _SOUTH_REGIONS and rpp.entry(u.south()) == rpp.entry(u):
            u = u.south()
        else:
            u = u.west()
        if u not in shape:
            raise PathLeftShape(step, u)
        cells.append(u)
    return LatticePath.south_west(cells)


@dataclass(frozen=True)
class InsertionOutcome:
    inserted: bool
    path: LatticePath | None = None
    result: ReversePlanePartition | None = None
    reason: str | None = None
    cell: Cell | None = None

    def __bool__(self) -> bool:
        return self.inserted

    def describe(self) -> str:
        if self.inserted:
            return "inserted"
        return f"{self.reason} {self.cell}"


def insert(hook: RimHook, rpp: ReversePlanePartition) -> InsertionOutcome:
    if hook.shape != rpp.shape:
        raise ShapeError(f"rim-hook of ({hook.shape}) cannot insert into an RPP of shape ({rpp.shape})")
    try:
        path = insertion_path(rpp, hook)
    except PathLeftShape as exc:
        return InsertionOutcome(False, reason=PATH_LEFT_SHAPE, cell=exc.cell)
    bad = compatibility_violation(rpp, path)
    if bad is not None:
        cell, condition = bad
        if condition == 2:
            raise InvariantViolation(f"step rule produced a vertical step at {cell} with unequal entries")
        return InsertionOutcome(False, path=path, reason=COMPATIBILITY_VIOLATION, cell=cell)
    grid = rpp.add_path(path)
    bad_cell = first_violation(rpp.shape, grid)
    if bad_cell is not None:
        return InsertionOutcome(False, path=path, reason=NOT_AN_RPP, cell=bad_cell[0])
    return InsertionOutcome(True, path=path, result=ReversePlanePartition(rpp.shape, grid))


def sort_hooks(hooks: Iterable[RimHook]) -> list[RimHook]:
    """Weakly increasing order; stable on equal hooks."""
    return sorted(hooks, key=RimHook.sort_key)


def insertion_steps(shape: Partition, hooks: Iterable[RimHook]) -> Iterator[tuple[RimHook, InsertionOutcome]]:
    """Insert the sorted hooks into the zero RPP, largest first.

    Yields each hook together with its successful outcome.
    """
    ordered = sort_hooks(hooks)
    for h in ordered:
        if h.shape != shape:
            raise ShapeError(f"rim-hook {h!r} does not belong to shape ({shape})")
    current = ReversePlanePartition.zero(shape)
    for h in reversed(ordered):
        outcome = insert(h, current)
        if not outcome.inserted:
            raise InvariantViolation(
                f"{h!r} failed to insert in lexicographic order into {current.to_lists()}: "
                f"{outcome.describe()}"
            )
        yield h, outcome
        current = outcome.result


def build_from_multiset(shape: Partition, hooks: Iterable[RimHook]) -> ReversePlanePartition:
    result = ReversePlanePartition.zero(shape)
    for _, outcome in insertion_steps(shape, hooks):
        result = outcome.result
    return result


def hook_multisets(shape: Partition, max_size: int) -> Iterator[list[RimHook]]:
    """All multisets of rim-hooks of total size at most ``max_size``, each as a sorted list."""
    hooks = shape.rim_hooks

    def extend(start: int, budget: int, acc: list[RimHook]) -> Iterator[list[RimHook]]:
        yield list(acc)
        for k in range(start, len(hooks)):
            h = hooks[k]
            if h.size <= budget:
                acc.append(h)
                yield from extend(k, budget - h.size, acc)
                acc.pop()

    yield from extend(0, max_size, [])

