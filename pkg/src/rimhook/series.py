"""Truncated generating functions for reverse plane partitions.

The hook products are expanded exactly to a fixed (total) degree and compared
against a brute-force enumeration of reverse plane partitions.
"""
from __future__ import annotations

import json
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .extraction import lex_factorize
from .insertion import InvariantViolation, build_from_multiset, hook_multisets
from .rpp import ReversePlanePartition
from .shape import Partition

THREADS_ENV = "RIMHOOK_THREADS"


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


class TruncatedSeries:
    """Integer power series in q, exact up to and including degree ``order``."""

    def __init__(self, coeffs, order: int | None = None):
        coeffs = [int(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        self.order = order
        self.coeffs = (coeffs + [0] * (order + 1))[: order + 1]

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls([1], order)

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.coeffs}, order={self.order})"

    def _common(self, other: TruncatedSeries) -> int:
        return min(self.order, other.order)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        n = self._common(other)
        return TruncatedSeries([self[k] + other[k] for k in range(n + 1)], n)

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        n = self._common(other)
        out = [0] * (n + 1)
        for a, x in enumerate(self.coeffs[: n + 1]):
            if x:
                for b in range(n + 1 - a):
                    out[a + b] += x * other.coeffs[b]
        return TruncatedSeries(out, n)

    def times_geometric(self, m: int) -> TruncatedSeries:
        """Multiply by ``1/(1 - q**m)``."""
        if m <= 0:
            raise ValueError("geometric factor needs a positive exponent")
        out = list(self.coeffs)
        for n in range(m, self.order + 1):
            out[n] += out[n - m]
        return TruncatedSeries(out, self.order)


class TraceMonomialTable:
    """Multivariate series in ``q_k`` (one variable per diagonal), truncated by total degree.

    Keys are exponent vectors indexed by ``diagonals``; zero coefficients are not stored.
    """

    def __init__(self, diagonals: range, order: int, coeffs: dict[tuple[int, ...], int] | None = None):
        self.diagonals = diagonals
        self.order = order
        self.coeffs: dict[tuple[int, ...], int] = {}
        for key, c in (coeffs or {}).items():
            self.add(key, c)

    @classmethod
    def one(cls, diagonals: range, order: int) -> TraceMonomialTable:
        return cls(diagonals, order, {(0,) * len(diagonals): 1})

    def add(self, key: tuple[int, ...], c: int = 1) -> None:
        key = tuple(key)
        if len(key) != len(self.diagonals):
            raise ValueError(f"exponent vector {key} has wrong length for diagonals {self.diagonals}")
        if sum(key) > self.order or c == 0:
            return
        total = self.coeffs.get(key, 0) + c
        if total:
            self.coeffs[key] = total
        else:
            del self.coeffs[key]

    def indicator(self, contents: range) -> tuple[int, ...]:
        return tuple(1 if k in contents else 0 for k in self.diagonals)

    def times_geometric(self, vector: tuple[int, ...]) -> TraceMonomialTable:
        """Multiply by ``1/(1 - q**vector)``, degree by degree."""
        d = sum(vector)
        if d <= 0:
            raise ValueError("geometric factor needs a monomial of positive degree")
        by_degree: list[dict[tuple[int, ...], int]] = [dict() for _ in range(self.order + 1)]
        for key, c in self.coeffs.items():
            by_degree[sum(key)][key] = c
        for deg in range(self.order + 1 - d):
            for key, c in list(by_degree[deg].items()):
                shifted = tuple(a + b for a, b in zip(key, vector))
                bucket = by_degree[deg + d]
                bucket[shifted] = bucket.get(shifted, 0) + c
        merged = {k: c for bucket in by_degree for k, c in bucket.items()}
        return TraceMonomialTable(self.diagonals, self.order, merged)

    def specialize(self) -> TruncatedSeries:
        """Set every ``q_k`` to ``q``."""
        out = [0] * (self.order + 1)
        for key, c in self.coeffs.items():
            out[sum(key)] += c
        return TruncatedSeries(out, self.order)

    def first_difference(self, other: TraceMonomialTable) -> tuple[tuple[int, ...], int, int] | None:
        keys = sorted(set(self.coeffs) | set(other.coeffs), key=lambda k: (sum(k), k))
        for key in keys:
            a, b = self.coeffs.get(key, 0), other.coeffs.get(key, 0)
            if a != b:
                return key, a, b
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, TraceMonomialTable):
            return NotImplemented
        return (
            self.diagonals == other.diagonals
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        return f"TraceMonomialTable({len(self.coeffs)} terms, order={self.order})"


def hook_product(p: Partition, order: int) -> TruncatedSeries:
    series = TruncatedSeries.one(order)
    for u in p.cells:
        series = series.times_geometric(p.hook_length(u))
    return series


def trace_product(p: Partition, order: int) -> TraceMonomialTable:
    table = TraceMonomialTable.one(p.diagonals, order)
    for u in p.cells:
        table = table.times_geometric(table.indicator(p.rim_hook(u).content_interval()))
    return table


# brute-force enumeration


class _Search:
    """Backtracking over cells column by column (left to right, top to bottom).

    Each cell is bounded below by its North and West neighbours.  Choosing
    ``x`` at a cell forces every cell weakly South-East of it to be at least
    ``x``, so ``x`` times that count may not exceed the remaining budget.
    """

    def __init__(self, shape: Partition):
        self.shape = shape
        self.order = sorted(shape.cells, key=lambda u: (u.col, u.row))
        self.grid = [[0] * p for p in shape.parts]
        self.below_right = [
            sum(1 for v in shape.cells if v.row >= u.row and v.col >= u.col) for u in self.order
        ]

    def run(self, budget: int, exact: bool, first: int | None = None) -> Iterator[int]:
        """Yield the used size each time ``self.grid`` holds a complete filling."""
        yield from self._fill(0, budget, exact, first)

    def _fill(self, k: int, budget: int, exact: bool, pinned: int | None) -> Iterator[int]:
        if k == len(self.order):
            if not exact or budget == 0:
                yield budget
            return
        i, j = self.order[k]
        grid = self.grid
        low = max(grid[i - 2][j - 1] if i > 1 else 0, grid[i - 1][j - 2] if j > 1 else 0)
        weight = self.below_right[k]
        values = range(low, budget // weight + 1) if pinned is None else (
            [pinned] if low <= pinned and pinned * weight <= budget else []
        )
        for x in values:
            grid[i - 1][j - 1] = x
            yield from self._fill(k + 1, budget - x, exact, None)
        grid[i - 1][j - 1] = 0


def enumerate_rpp(p: Partition, n: int) -> Iterator[ReversePlanePartition]:
    """All reverse plane partitions of shape ``p`` and size ``n``, in a fixed order."""
    if n < 0:
        return
    search = _Search(p)
    for _ in search.run(n, exact=True):
        yield ReversePlanePartition(p, tuple(tuple(r) for r in search.grid))


def enumerate_rpp_up_to(p: Partition, order: int) -> Iterator[ReversePlanePartition]:
    for n in range(order + 1):
        yield from enumerate_rpp(p, n)


def _first_values(p: Partition, order: int) -> list[int | None]:
    if not p.cells:
        return [None]
    return list(range(order // p.size + 1))


def _count_chunk(args) -> list[int]:
    parts, order, first = args
    p = Partition(parts)
    counts = [0] * (order + 1)
    for left in _Search(p).run(order, exact=False, first=first):
        counts[order - left] += 1
    return counts


def _trace_chunk(args) -> Counter:
    parts, order, first = args
    p = Partition(parts)
    search = _Search(p)
    offset = -p.diagonals.start if p.diagonals else 0
    width = len(p.diagonals)
    table: Counter = Counter()
    for _ in search.run(order, exact=False, first=first):
        vec = [0] * width
        for i, row in enumerate(search.grid, 1):
            for j, x in enumerate(row, 1):
                vec[j - i + offset] += x
        table[tuple(vec)] += 1
    return table


def _map_chunks(fn, p: Partition, order: int, workers: int | None):
    jobs = [(p.parts, order, first) for first in _first_values(p, order)]
    workers = default_workers() if workers is None else workers
    if workers <= 1 or len(jobs) <= 1:
        return [fn(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as pool:
        return list(pool.map(fn, jobs))


def count_rpp_up_to(p: Partition, order: int, workers: int | None = None) -> list[int]:
    """``counts[n]`` = number of reverse plane partitions of shape ``p`` and size ``n``."""
    counts = [0] * (order + 1)
    for chunk in _map_chunks(_count_chunk, p, order, workers):
        counts = [a + b for a, b in zip(counts, chunk)]
    return counts


def count_rpp_by_size(p: Partition, n: int) -> int:
    if n < 0:
        return 0
    return sum(1 for _ in _Search(p).run(n, exact=True))


def trace_sum_over_rpp(p: Partition, order: int, workers: int | None = None) -> TraceMonomialTable:
    total: Counter = Counter()
    for chunk in _map_chunks(_trace_chunk, p, order, workers):
        total.update(chunk)
    return TraceMonomialTable(p.diagonals, order, dict(total))


# verification reports


@dataclass
class VerificationReport:
    check: str
    shape: Partition
    order: int
    discrepancy: tuple | None = None
    bijection_failure: dict | None = None
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.discrepancy is None and self.bijection_failure is None

    @property
    def status(self) -> str:
        return "agree" if self.ok else "disagree"

    def to_line(self) -> str:
        if self.discrepancy is not None:
            degree, expected, got = self.discrepancy
            diff = f"({_fmt_degree(degree)}, {expected}, {got})"
        elif self.bijection_failure is not None:
            diff = f"bijection {json.dumps(self.bijection_failure, sort_keys=True)}"
        else:
            diff = "-"
        return f"{self.check} {self.shape}; {self.order}; {self.status}; {diff}"

    def to_json_obj(self) -> dict:
        obj = {
            "check": self.check,
            "shape": list(self.shape.parts),
            "max_size": self.order,
            "status": self.status,
            "first_discrepancy": None,
            "bijection_failure": self.bijection_failure,
        }
        if self.discrepancy is not None:
            degree, expected, got = self.discrepancy
            obj["first_discrepancy"] = {
                "degree": list(degree) if isinstance(degree, tuple) else degree,
                "expected": expected,
                "got": got,
            }
        obj.update(self.details)
        return obj


def _fmt_degree(degree) -> str:
    if isinstance(degree, tuple):
        return "[" + ",".join(map(str, degree)) + "]"
    return str(degree)


def bijection_trace_failure(p: Partition, order: int) -> dict | None:
    """Check that each RPP's trace is the sum of its factors' content intervals."""
    for rpp in enumerate_rpp_up_to(p, order):
        expected = rpp.trace()
        got = {k: 0 for k in p.diagonals}
        for h in lex_factorize(rpp):
            for k in h.content_interval():
                got[k] += 1
        if got != expected:
            return {"rows": rpp.to_lists(), "trace": _listed(p, expected), "from_factors": _listed(p, got)}
    return None


def _listed(p: Partition, tr: dict[int, int]) -> list[int]:
    return [tr[k] for k in p.diagonals]


def verify_theorem1(p: Partition, order: int, workers: int | None = None, bijection: bool = True) -> VerificationReport:
    expected = hook_product(p, order)
    got = count_rpp_up_to(p, order, workers)
    report = VerificationReport("hook-length", p, order, details={"coefficients": expected.coeffs})
    for n in range(order + 1):
        if expected[n] != got[n]:
            report.discrepancy = (n, expected[n], got[n])
            break
    if bijection:
        report.bijection_failure = bijection_trace_failure(p, order)
    return report


def verify_theorem2(p: Partition, order: int, workers: int | None = None, bijection: bool = True) -> VerificationReport:
    expected = trace_product(p, order)
    got = trace_sum_over_rpp(p, order, workers)
    report = VerificationReport(
        "trace", p, order, details={"diagonals": [p.diagonals.start, p.diagonals.stop - 1] if p.diagonals else [],
                                    "terms": len(expected.coeffs)}
    )
    report.discrepancy = expected.first_difference(got)
    if bijection:
        report.bijection_failure = bijection_trace_failure(p, order)
    return report


def verify_round_trip(p: Partition, order: int) -> VerificationReport:
    """Both compositions of insertion and factorization are identities up to ``order``."""
    report = VerificationReport("round-trip", p, order)
    n_rpp = n_multisets = 0
    try:
        for rpp in enumerate_rpp_up_to(p, order):
            n_rpp += 1
            hooks = lex_factorize(rpp)
            back = build_from_multiset(p, hooks)
            if back != rpp:
                report.bijection_failure = {"rows": rpp.to_lists(), "rebuilt": back.to_lists()}
                break
        if report.bijection_failure is None:
            for hooks in hook_multisets(p, order):
                n_multisets += 1
                again = lex_factorize(build_from_multiset(p, hooks))
                if again != hooks:
                    report.bijection_failure = {
                        "hooks": [list(h.corner) for h in hooks],
                        "refactorized": [list(h.corner) for h in again],
                    }
                    break
    except InvariantViolation as exc:
        report.bijection_failure = {"error": str(exc)}
    report.details = {"rpps": n_rpp, "multisets": n_multisets}
    return report
