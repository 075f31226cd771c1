"""Extracting rim-hooks from a reverse plane partition.

Repeatedly removing the hook found at the content-order minimal candidate
recovers the weakly increasing hook sequence that builds the partition.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .insertion import InvariantViolation, is_compatible
from .rpp import ReversePlanePartition, first_violation
from .shape import Cell, LatticePath, Region, RimHook, ShapeError, content_key


class MalformedState(InvariantViolation):
    """The extraction step rule reached a cell where no rule applies."""


def candidates(rpp: ReversePlanePartition) -> list[Cell]:
    """Candidate cells, sorted in content order (minimum first)."""
    shape = rpp.shape
    found = []
    for u in shape.cells:
        region = shape.region(u)
        x = rpp.entry(u)
        if region is Region.O and x > rpp.entry(u.west()):
            found.append(u)
        elif region is Region.A and x > rpp.entry(u.west()) and x > rpp.entry(u.north()):
            found.append(u)
    return sorted(found, key=content_key)


def extraction_path(rpp: ReversePlanePartition, u: Cell) -> LatticePath:
    shape = rpp.shape
    if u not in shape:
        raise ShapeError(f"{u} is not in shape ({shape})")
    v = Cell(*u)
    cells = [v]
    while True:
        region = shape.region(v)
        here, above = rpp.entry(v), rpp.entry(v.north())
        if region in (Region.O, Region.B) and above == here:
            nxt = v.north()
        elif region in (Region.I, Region.A) or (above < here and v.east() in shape):
            nxt = v.east()
        elif above < here:
            break
        else:
            raise MalformedState(f"no extraction step applies at {v} (region {region})")
        if nxt not in shape:
            raise MalformedState(f"extraction path would leave the shape at {nxt}")
        v = nxt
        cells.append(v)
    return LatticePath.north_east(cells)


def hook_at(rpp: ReversePlanePartition, u: Cell) -> RimHook:
    path = extraction_path(rpp, u)
    try:
        return rpp.shape.rim_hook_ending_at(path.tail, path.length)
    except ShapeError as exc:
        raise MalformedState(str(exc)) from None


def is_factor(hook: RimHook, rpp: ReversePlanePartition) -> bool:
    if hook.shape != rpp.shape:
        raise ShapeError("rim-hook and reverse plane partition have different shapes")
    for u in candidates(rpp):
        try:
            path = extraction_path(rpp, u)
            h = hook_at(rpp, u)
        except MalformedState:
            continue
        if h != hook or not is_compatible(rpp, path):
            continue
        if first_violation(rpp.shape, rpp.subtract_path(path)) is None:
            return True
    return False


@dataclass(frozen=True)
class ExtractionStep:
    rpp: ReversePlanePartition
    candidates: tuple[Cell, ...]
    candidate: Cell
    path: LatticePath
    hook: RimHook
    reduced: ReversePlanePartition


def extract_min(rpp: ReversePlanePartition) -> ExtractionStep:
    cands = candidates(rpp)
    if not cands:
        if rpp.is_zero():
            raise ValueError("the zero reverse plane partition has no factors")
        raise InvariantViolation(f"nonzero {rpp.to_lists()} has no candidates")
    u = cands[0]
    path = extraction_path(rpp, u)
    hook = hook_at(rpp, u)
    if not is_compatible(rpp, path):
        raise InvariantViolation(f"extraction path from {u} is not compatible with {rpp.to_lists()}")
    grid = rpp.subtract_path(path)
    if first_violation(rpp.shape, grid) is not None:
        raise InvariantViolation(f"removing the path from {u} leaves {grid}, not an RPP")
    return ExtractionStep(rpp, tuple(cands), u, path, hook, ReversePlanePartition(rpp.shape, grid))


def factorization_steps(rpp: ReversePlanePartition) -> Iterator[ExtractionStep]:
    while not rpp.is_zero():
        step = extract_min(rpp)
        yield step
        rpp = step.reduced


def lex_factorize(rpp: ReversePlanePartition) -> list[RimHook]:
    """The weakly increasing rim-hook sequence whose insertion builds ``rpp``."""
    hooks = [step.hook for step in factorization_steps(rpp)]
    for a, b in zip(hooks, hooks[1:]):
        if b < a:
            raise InvariantViolation(f"factorization is not weakly increasing: {a!r} then {b!r}")
    return hooks
