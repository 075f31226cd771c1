"""Command-line interface.

Exit codes: 0 success, 1 negative domain answer (does not insert, verification
failed), 2 usage or parse error, 3 internal invariant violation.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import Sequence

from . import extraction, insertion, series
from .rpp import ReversePlanePartition, RppError, RppParseError, parse as parse_rpp
from .shape import Cell, LatticePath, Partition, RimHook, ShapeError

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    pass


_CELL_TOKEN = re.compile(r"\s*\(?\s*(-?\d+)\s*,\s*(-?\d+)\s*\)?(?:\s*[x×*]\s*(\d+))?\s*;?")


def parse_cell_list(text: str, allow_multiplicity: bool = True) -> list[Cell]:
    """Parse ``"(1,4) (1,3) (1,1)x3"``, ``"1,4;1,3"`` or a JSON list of pairs."""
    stripped = text.strip()
    if stripped.startswith("[") or stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise UsageError(f"invalid JSON cell list: {exc.msg} at column {exc.colno}") from None
        if isinstance(obj, dict):
            obj = obj.get("hooks", obj.get("path"))
        if not isinstance(obj, list) or not all(
            isinstance(c, list) and len(c) == 2 and all(isinstance(x, int) for x in c) for c in obj
        ):
            raise UsageError("JSON cell list must be a list of [i, j] pairs")
        return [Cell(*c) for c in obj]
    cells = []
    pos = 0
    while pos < len(stripped):
        m = _CELL_TOKEN.match(stripped, pos)
        if not m or m.end() == pos:
            raise UsageError(f"cannot parse cell list at position {pos}: {stripped[pos:pos + 12]!r}")
        if m.group(3) and not allow_multiplicity:
            raise UsageError(f"multiplicities are not allowed here: {m.group(0).strip()!r}")
        count = int(m.group(3)) if m.group(3) else 1
        cells.extend([Cell(int(m.group(1)), int(m.group(2)))] * count)
        pos = m.end()
    return cells


def format_hook_list(hooks: Sequence[RimHook]) -> str:
    """Corner cells in order, consecutive repeats collapsed to ``(i,j)×k``."""
    out = []
    k = 0
    while k < len(hooks):
        run = 1
        while k + run < len(hooks) and hooks[k + run] == hooks[k]:
            run += 1
        cell = str(hooks[k].corner)
        out.append(f"{cell}×{run}" if run > 1 else cell)
        k += run
    return " ".join(out)


def _cells_json(cells) -> list[list[int]]:
    return [[u.row, u.col] for u in cells]


def _read_source(src: str) -> str:
    if src == "-":
        return sys.stdin.read()
    if os.path.isfile(src):
        with open(src, encoding="utf-8") as fh:
            return fh.read()
    return src


def _load_rpp(src: str, shape: Partition | None) -> ReversePlanePartition:
    try:
        return parse_rpp(_read_source(src), shape)
    except (RppParseError, RppError, ShapeError) as exc:
        raise UsageError(f"bad reverse plane partition: {exc}") from None


def _load_shape(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ShapeError as exc:
        raise UsageError(str(exc)) from None


def _hooks_for(shape: Partition, cells: Sequence[Cell]) -> list[RimHook]:
    hooks = []
    for u in cells:
        if u not in shape:
            raise UsageError(f"hook cell {u} is not in shape ({shape})")
        hooks.append(shape.rim_hook(u))
    return hooks


def _emit(args, obj=None, text: str | None = None) -> None:
    if args.json:
        print(json.dumps(obj))
    elif text is not None:
        print(text)


def render_grid(rpp: ReversePlanePartition, marked=()) -> str:
    """ASCII grid; cells in ``marked`` are shown as ``[x]``."""
    marked = set(marked)
    if not rpp.rows:
        return "(empty)"
    width = max(len(str(x)) for r in rpp.rows for x in r)
    lines = []
    for i, row in enumerate(rpp.rows, 1):
        fields = []
        for j, x in enumerate(row, 1):
            s = str(x).rjust(width)
            fields.append(f"[{s}]" if (i, j) in marked else f" {s} ")
        lines.append("|" + "|".join(fields) + "|")
    return "\n".join(lines)


# subcommands


def cmd_hooks(args) -> int:
    shape = _load_shape(args.shape)
    entries = []
    for rank, h in enumerate(shape.rim_hooks, 1):
        entries.append({
            "rank": rank,
            "cell": list(h.corner),
            "hook_length": shape.hook_length(h.corner),
            "region": str(shape.region(h.corner)),
            "rim": _cells_json(h.cells),
        })
    lines = [
        f"{e['rank']:>3}  {str(Cell(*e['cell'])):<8} h={e['hook_length']:<3} "
        + " ".join(str(Cell(*c)) for c in e["rim"])
        for e in entries
    ]
    _emit(args, {"shape": list(shape.parts), "hooks": entries}, "\n".join(lines))
    return EXIT_OK


def cmd_insert(args) -> int:
    shape = _load_shape(args.shape) if args.shape else None
    rpp = _load_rpp(args.rpp, shape)
    try:
        cell = Cell.parse(args.hook)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    (hook,) = _hooks_for(rpp.shape, [cell])
    outcome = insertion.insert(hook, rpp)
    if outcome.inserted:
        _emit(
            args,
            {"inserted": True, "hook": list(cell), "path": _cells_json(outcome.path.as_north_east()),
             "result": outcome.result.to_json_obj()},
            outcome.result.to_text(),
        )
        return EXIT_OK
    obj = {"inserted": False, "hook": list(cell), "reason": outcome.reason,
           "cell": list(outcome.cell) if outcome.cell else None}
    _emit(args, obj, f"does not insert: {outcome.describe()}")
    return EXIT_NEGATIVE


def cmd_factorize(args) -> int:
    rpp = _load_rpp(args.rpp, _load_shape(args.shape) if args.shape else None)
    steps = list(extraction.factorization_steps(rpp))
    hooks = [s.hook for s in steps]
    obj = {"shape": list(rpp.shape.parts), "hooks": [list(h.corner) for h in hooks]}
    lines = []
    if args.steps:
        obj["steps"] = []
        for k, s in enumerate(steps, 1):
            obj["steps"].append({
                "rpp": s.rpp.to_lists(),
                "candidates": _cells_json(s.candidates),
                "candidate": list(s.candidate),
                "path": _cells_json(s.path),
                "hook": list(s.hook.corner),
                "reduced": s.reduced.to_lists(),
            })
            lines.append(
                f"step {k}: candidates {' '.join(map(str, s.candidates))}; "
                f"minimum {s.candidate}; path {' '.join(map(str, s.path))}; hook {s.hook.corner}"
            )
            lines.append(render_grid(s.rpp, s.path.cells))
        lines.append("factorization:")
    lines.append(format_hook_list(hooks))
    _emit(args, obj, "\n".join(lines))
    return EXIT_OK


def cmd_build(args) -> int:
    shape = _load_shape(args.shape)
    hooks = _hooks_for(shape, parse_cell_list(_read_source(args.hooks)))
    rpp = insertion.build_from_multiset(shape, hooks)
    _emit(args, rpp.to_json_obj(), rpp.to_text())
    return EXIT_OK


def cmd_verify(args) -> int:
    shape = _load_shape(args.shape)
    if args.max_size < 0:
        raise UsageError("--max-size must be nonnegative")
    reports = [series.verify_theorem1(shape, args.max_size)]
    if args.trace:
        reports.append(series.verify_theorem2(shape, args.max_size, bijection=False))
    reports.append(series.verify_round_trip(shape, args.max_size))
    ok = all(r.ok for r in reports)
    _emit(
        args,
        {"shape": list(shape.parts), "max_size": args.max_size, "ok": ok,
         "reports": [r.to_json_obj() for r in reports]},
        "\n".join(r.to_line() for r in reports),
    )
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_enumerate(args) -> int:
    shape = _load_shape(args.shape)
    if args.size < 0:
        raise UsageError("--size must be nonnegative")
    first = True
    for rpp in series.enumerate_rpp(shape, args.size):
        if args.json:
            print(rpp.to_json())
        else:
            if not first:
                print()
            print(rpp.to_text() or "(empty)")
        first = False
    return EXIT_OK


def cmd_render(args) -> int:
    rpp = _load_rpp(args.rpp, None)
    marked = parse_cell_list(args.path, allow_multiplicity=False) if args.path else []
    for u in marked:
        if u not in rpp.shape:
            raise UsageError(f"path cell {u} is not in shape ({rpp.shape})")
    if marked:
        try:
            LatticePath.north_east(marked)
        except ValueError:
            try:
                LatticePath.south_west(marked)
            except ValueError:
                raise UsageError("--path cells do not form a North-East or South-West path") from None
    text = render_grid(rpp, marked)
    _emit(args, {**rpp.to_json_obj(), "path": _cells_json(marked), "text": text}, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rimhook",
        description="Rim-hook insertion and factorization of reverse plane partitions.",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable JSON output")
    # accepted after the subcommand too, without clobbering a leading --json
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hooks", parents=[common], help="list the rim-hooks of a shape")
    p.add_argument("shape", help='partition, e.g. "4,3,1"')
    p.set_defaults(func=cmd_hooks)

    rpp_help = "RPP as a file path, '-' for stdin, inline JSON, or an inline grid like '0 1 2 3;1 2 2;1'"

    p = sub.add_parser("insert", parents=[common], help="insert one rim-hook into an RPP")
    p.add_argument("--rpp", required=True, help=rpp_help)
    p.add_argument("--hook", required=True, help="corner cell of the rim-hook, 'i,j'")
    p.add_argument("--shape", help="expected shape of the RPP")
    p.set_defaults(func=cmd_insert)

    p = sub.add_parser("factorize", parents=[common], help="lexicographic factorization of an RPP")
    p.add_argument("--rpp", required=True, help=rpp_help)
    p.add_argument("--shape", help="expected shape of the RPP")
    p.add_argument("--steps", action="store_true", help="show candidates, paths and intermediate RPPs")
    p.set_defaults(func=cmd_factorize)

    p = sub.add_parser("build", parents=[common], help="insert a multiset of rim-hooks into the zero RPP")
    p.add_argument("--shape", required=True)
    p.add_argument("--hooks", required=True,
                   help="corner cells, e.g. '(1,4) (1,3) (1,1)x2' or '1,4;1,3'; '-' reads stdin")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", parents=[common], help="check the generating functions and the bijection")
    p.add_argument("--shape", required=True)
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--trace", action="store_true", help="also check the trace generating function")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", parents=[common], help="list all RPPs of a shape and size")
    p.add_argument("--shape", required=True)
    p.add_argument("--size", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("render", parents=[common], help="draw an RPP, optionally marking a path")
    p.add_argument("--rpp", required=True, help=rpp_help)
    p.add_argument("--path", help="cells to mark, e.g. '3,1;2,1;2,2'")
    p.set_defaults(func=cmd_render)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"rimhook {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except insertion.InvariantViolation as exc:
        print(f"rimhook {args.command}: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
