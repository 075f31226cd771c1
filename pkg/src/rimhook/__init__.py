"""Rim-hook insertion: a bijection between reverse plane partitions of a
shape and multisets of its rim-hooks, with generating-function checks."""
from .extraction import (
    ExtractionStep,
    candidates,
    extract_min,
    extraction_path,
    factorization_steps,
    hook_at,
    is_factor,
    lex_factorize,
)
from .insertion import (
    InsertionOutcome,
    InvariantViolation,
    build_from_multiset,
    insert,
    insertion_path,
    is_compatible,
)
from .rpp import INFINITY, ReversePlanePartition, RppError
from .series import (
    TraceMonomialTable,
    TruncatedSeries,
    count_rpp_by_size,
    enumerate_rpp,
    hook_product,
    trace_product,
    trace_sum_over_rpp,
    verify_theorem1,
    verify_theorem2,
)
from .shape import Cell, LatticePath, Partition, Region, RimHook, ShapeError

__version__ = "0.1.0"

__all__ = [
    "build_from_multiset",
    "candidates",
    "Cell",
    "count_rpp_by_size",
    "enumerate_rpp",
    "extract_min",
    "extraction_path",
    "ExtractionStep",
    "factorization_steps",
    "hook_at",
    "hook_product",
    "INFINITY",
    "insert",
    "insertion_path",
    "InsertionOutcome",
    "InvariantViolation",
    "is_compatible",
    "is_factor",
    "LatticePath",
    "lex_factorize",
    "Partition",
    "Region",
    "ReversePlanePartition",
    "RimHook",
    "RppError",
    "ShapeError",
    "trace_product",
    "trace_sum_over_rpp",
    "TraceMonomialTable",
    "TruncatedSeries",
    "verify_theorem1",
    "verify_theorem2",
]
