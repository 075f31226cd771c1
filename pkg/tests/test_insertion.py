import pytest

from oracles import brute_insert, insertion_paths, partitions_in_box, rpps_bounded
from rimhook.insertion import (
    COMPATIBILITY_VIOLATION,
    InvariantViolation,
    build_from_multiset,
    compatibility_violation,
    hook_multisets,
    insert,
    insertion_path,
    insertion_steps,
    is_compatible,
)
from rimhook.rpp import ReversePlanePartition
from rimhook.shape import Cell, LatticePath, Partition, ShapeError

LAMBDA = Partition((4, 3, 1))


def R(rows, shape=LAMBDA):
    return ReversePlanePartition(shape, rows)


def hook(i, j, shape=LAMBDA):
    return shape.rim_hook(Cell(i, j))


def cells(*pairs):
    return [Cell(*u) for u in pairs]


PI_TILDE = R([[0, 0, 1, 1], [1, 2, 2], [1]])
SPARSE = R([[0, 0, 0, 1], [0, 0, 1], [0]])


class TestCompatibility:
    def test_row_through_inner_corner(self):
        assert is_compatible(PI_TILDE, LatticePath.north_east(cells((1, 2), (1, 3), (1, 4))))

    def test_empty_path(self):
        assert is_compatible(PI_TILDE, LatticePath(()))

    def test_violation_in_region_a(self):
        path = LatticePath.north_east(cells((3, 1), (2, 1), (2, 2), (2, 3)))
        assert compatibility_violation(SPARSE, path) == (Cell(2, 2), 1)
        assert not is_compatible(SPARSE, path)

    def test_vertical_step_needs_equal_entries(self):
        path = LatticePath.north_east(cells((2, 3), (1, 3), (1, 4)))
        assert compatibility_violation(PI_TILDE, path) == (Cell(2, 3), 2)


class TestInsertionPath:
    def test_zero_follows_the_rim(self):
        path = insertion_path(ReversePlanePartition.zero(LAMBDA), hook(1, 1))
        assert set(path) == set(cells((1, 4), (1, 3), (2, 3), (2, 2), (2, 1), (3, 1)))
        assert path.tail == Cell(1, 4) and path.length == 5

    def test_forced_west(self):
        path = insertion_path(PI_TILDE, hook(1, 3))
        assert list(path) == cells((1, 4), (1, 3), (1, 2))

    @pytest.mark.parametrize("corner", [(1, 4), (2, 3), (3, 1)])
    def test_unit_hook(self, corner):
        path = insertion_path(PI_TILDE, hook(*corner))
        assert list(path) == [Cell(*corner)]


class TestInsert:
    def test_single_increment(self):
        out = insert(hook(1, 4), R([[0, 1, 2, 2], [1, 2, 2], [1]]))
        assert out.inserted and out.result.to_lists() == [[0, 1, 2, 3], [1, 2, 2], [1]]

    def test_rim_into_zero(self):
        out = insert(hook(1, 1), ReversePlanePartition.zero(LAMBDA))
        assert out.result.to_lists() == [[0, 0, 1, 1], [1, 1, 1], [1]]

    def test_failure(self):
        out = insert(hook(2, 1), SPARSE)
        assert not out.inserted
        assert (out.reason, out.cell) == (COMPATIBILITY_VIOLATION, Cell(2, 2))
        assert out.describe() == "compatibility-violation (2,2)"

    @pytest.mark.parametrize("parts, rows, corner, reason, cell", [
        # (1,1) is in B but its South neighbour differs, so the path steps West off the diagram
        ((1, 1), [[0], [1]], (1, 1), "path-left-shape", (1, 0)),
        # the path (1,2),(1,1) is compatible, but adding it breaks column 1
        ((2, 2), [[0, 0], [0, 1]], (1, 2), "not-an-rpp", (1, 1)),
        ((2,), [[0, 1]], (1, 1), "compatibility-violation", (1, 1)),
    ])
    def test_failure_reasons(self, parts, rows, corner, reason, cell):
        shape = Partition(parts)
        out = insert(shape.rim_hook(Cell(*corner)), ReversePlanePartition(shape, rows))
        assert (out.inserted, out.reason, out.cell) == (False, reason, Cell(*cell))
        assert insertion_paths(parts, rows, corner) == []

    def test_shape_mismatch(self):
        with pytest.raises(ShapeError):
            insert(hook(1, 1), ReversePlanePartition.zero(Partition((2, 1))))


class TestBuild:
    def test_worked_example(self):
        hooks = [hook(1, 4), hook(1, 3), hook(2, 2), hook(1, 1)]
        assert build_from_multiset(LAMBDA, hooks).to_lists() == [[0, 1, 2, 3], [1, 2, 2], [1]]
        assert build_from_multiset(LAMBDA, hooks[::-1]) == build_from_multiset(LAMBDA, hooks)

    def test_empty(self):
        assert build_from_multiset(LAMBDA, []) == ReversePlanePartition.zero(LAMBDA)

    def test_single_rim(self):
        assert build_from_multiset(LAMBDA, [hook(1, 1)]).to_lists() == [[0, 0, 1, 1], [1, 1, 1], [1]]

    def test_foreign_hook(self):
        with pytest.raises(ShapeError):
            build_from_multiset(LAMBDA, [Partition((1,)).rim_hook(Cell(1, 1))])

    def test_multisets_enumeration(self):
        shape = Partition((2, 1))
        found = list(hook_multisets(shape, 3))
        # sizes 1,1,3: {} {a} {b} {c} {a,a} {a,b} {b,b} {aaa} {aab} {abb} {bbb}
        assert len(found) == 11
        assert all(sum(h.size for h in m) <= 3 for m in found)


class TestAgainstDefinition:
    @pytest.mark.parametrize("parts", partitions_in_box(4, 4)[1:], ids=str)
    def test_insert_matches_existential_definition(self, parts):
        """Insertion succeeds exactly when some compatible path works, and that path is unique."""
        shape = Partition(parts)
        for rows in rpps_bounded(parts, 2):
            rpp = ReversePlanePartition(shape, rows)
            for u in shape.cells:
                paths = insertion_paths(parts, rows, u)
                assert len(paths) <= 1
                out = insert(shape.rim_hook(u), rpp)
                assert out.inserted == bool(paths), (parts, rows, u)
                if out.inserted:
                    assert [tuple(c) for c in out.path.as_north_east()] == paths[0]

    @pytest.mark.parametrize("parts", partitions_in_box(3, 4)[1:], ids=str)
    def test_size_and_trace_additivity(self, parts):
        shape = Partition(parts)
        for rows in rpps_bounded(parts, 2):
            rpp = ReversePlanePartition(shape, rows)
            before = rpp.trace()
            for h in shape.rim_hooks:
                out = insert(h, rpp)
                if not out.inserted:
                    continue
                assert out.result.size == rpp.size + shape.hook_length(h.corner)
                assert out.path.tail == h.tail and out.path.length == h.length
                after = out.result.trace()
                delta = {k: after[k] - before[k] for k in shape.diagonals}
                assert delta == {k: int(k in h.content_interval()) for k in shape.diagonals}
                assert brute_insert(parts, rows, tuple(h.corner)) == out.result.to_lists()


@pytest.mark.parametrize("parts", partitions_in_box(3, 4)[1:], ids=str)
def test_lex_insert_totality(parts):
    shape = Partition(parts)
    for hooks in hook_multisets(shape, 8):
        try:
            steps = list(insertion_steps(shape, hooks))
        except InvariantViolation as exc:  # pragma: no cover - would be a counterexample
            pytest.fail(str(exc))
        assert len(steps) == len(hooks)
        total = steps[-1][1].result.size if steps else 0
        assert total == sum(h.size for h in hooks)
