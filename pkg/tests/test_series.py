import json
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from oracles import geometric_product, partitions_in_box, rpps_bounded, rpps_of_size
from rimhook.rpp import ReversePlanePartition
from rimhook.series import (
    TraceMonomialTable,
    TruncatedSeries,
    count_rpp_by_size,
    count_rpp_up_to,
    enumerate_rpp,
    hook_product,
    trace_product,
    trace_sum_over_rpp,
    verify_round_trip,
    verify_theorem1,
    verify_theorem2,
)
from rimhook.shape import Partition

LAMBDA = Partition((4, 3, 1))


class TestTruncatedSeries:
    def test_geometric(self):
        assert TruncatedSeries.one(5).times_geometric(2).coeffs == [1, 0, 1, 0, 1, 0]

    def test_mul_and_add(self):
        a = TruncatedSeries([1, 1], 3)
        assert (a * a).coeffs == [1, 2, 1, 0]
        assert (a + a).coeffs == [2, 2, 0, 0]
        assert (a * TruncatedSeries([1, 1, 1, 1, 1])).order == 3

    def test_rejects_nonpositive_exponent(self):
        with pytest.raises(ValueError):
            TruncatedSeries.one(3).times_geometric(0)

    @given(st.lists(st.integers(1, 6), max_size=5), st.integers(0, 12))
    def test_geometric_against_convolution(self, exponents, order):
        s = TruncatedSeries.one(order)
        for m in exponents:
            s = s.times_geometric(m)
        assert s.coeffs == geometric_product(exponents, order)

    @given(st.lists(st.integers(1, 6), min_size=1, max_size=4), st.integers(0, 10))
    def test_geometric_inverts_one_minus(self, exponents, order):
        s = TruncatedSeries.one(order)
        for m in exponents:
            s = s.times_geometric(m)
        for m in exponents:
            s = s * TruncatedSeries([1] + [0] * (m - 1) + [-1], order)
        assert s == TruncatedSeries.one(order)


class TestHookProduct:
    @pytest.mark.parametrize("parts, order, expected", [
        ((2, 1), 4, [1, 2, 3, 5, 7]),
        ((1,), 3, [1, 1, 1, 1]),
        ((4, 3, 1), 0, [1]),
    ])
    def test_examples(self, parts, order, expected):
        assert hook_product(Partition(parts), order).coeffs == expected

    def test_empty_shape(self):
        assert hook_product(Partition(()), 3).coeffs == [1, 0, 0, 0]


class TestEnumeration:
    def test_two_one_size_two(self):
        found = [r.to_lists() for r in enumerate_rpp(Partition((2, 1)), 2)]
        assert sorted(found) == sorted([[[0, 2], [0]], [[0, 0], [2]], [[0, 1], [1]]])
        assert count_rpp_by_size(Partition((2, 1)), 2) == 3

    @pytest.mark.parametrize("parts", [(1,), (2, 1), (4, 3, 1)])
    def test_size_zero(self, parts):
        assert count_rpp_by_size(Partition(parts), 0) == 1

    def test_worked_example_is_enumerated(self):
        pi = ReversePlanePartition(LAMBDA, [[0, 1, 2, 3], [1, 2, 2], [1]])
        assert pi in set(enumerate_rpp(LAMBDA, 12))

    def test_empty_shape(self):
        assert [r.rows for r in enumerate_rpp(Partition(()), 0)] == [()]
        assert list(enumerate_rpp(Partition(()), 1)) == []

    @pytest.mark.parametrize("k", range(5))
    def test_single_cell(self, k):
        assert [r.to_lists() for r in enumerate_rpp(Partition((1,)), k)] == [[[k]]]

    def test_two_one_counts_up_to_six(self):
        shape = Partition((2, 1))
        for n in range(7):
            assert len(list(enumerate_rpp(shape, n))) == count_rpp_by_size(shape, n) == len(rpps_of_size((2, 1), n))

    def test_deterministic_order(self):
        a = [r.rows for r in enumerate_rpp(LAMBDA, 6)]
        assert a == [r.rows for r in enumerate_rpp(LAMBDA, 6)] and len(set(a)) == len(a)

    @pytest.mark.parametrize("parts", partitions_in_box(3, 3)[1:], ids=str)
    def test_against_brute_force(self, parts):
        shape = Partition(parts)
        for n in range(5):
            expected = sorted(rpps_of_size(parts, n))
            assert sorted(r.to_lists() for r in enumerate_rpp(shape, n)) == expected
            assert count_rpp_by_size(shape, n) == len(expected)
        assert count_rpp_up_to(shape, 4) == [count_rpp_by_size(shape, n) for n in range(5)]

    def test_parallel_matches_serial(self):
        assert count_rpp_up_to(LAMBDA, 10, workers=2) == count_rpp_up_to(LAMBDA, 10, workers=1)
        assert trace_sum_over_rpp(LAMBDA, 6, workers=2) == trace_sum_over_rpp(LAMBDA, 6, workers=1)


class TestTraceTables:
    def test_factor_for_cell_1_3(self):
        table = TraceMonomialTable.one(LAMBDA.diagonals, 3)
        vec = table.indicator(LAMBDA.rim_hook((1, 3)).content_interval())
        # diagonals -2..3; the factor is 1/(1 - q1 q2 q3)
        assert vec == (0, 0, 0, 1, 1, 1)
        assert table.times_geometric(vec).coeffs == {(0,) * 6: 1, vec: 1}

    @pytest.mark.parametrize("parts", [(1,), (2, 1), (4, 3, 1), (3, 3, 2)])
    def test_constant_term(self, parts):
        p = Partition(parts)
        assert trace_product(p, 4).coeffs[(0,) * len(p.diagonals)] == 1

    @pytest.mark.parametrize("parts", partitions_in_box(3, 3)[1:], ids=str)
    def test_specializes_to_hook_product(self, parts):
        p = Partition(parts)
        assert trace_product(p, 7).specialize() == hook_product(p, 7)

    def test_single_cell_oracle(self):
        table = trace_sum_over_rpp(Partition((1,)), 4)
        assert table.coeffs == {(j,): 1 for j in range(5)}

    def test_empty_shape(self):
        assert trace_sum_over_rpp(Partition(()), 3).coeffs == {(): 1}
        assert trace_product(Partition(()), 3).coeffs == {(): 1}

    def test_two_one(self):
        p = Partition((2, 1))
        assert trace_product(p, 5) == trace_sum_over_rpp(p, 5)

    @pytest.mark.parametrize("parts", [(2, 1), (2, 2), (3, 1), (3, 2)])
    def test_oracle_counts_by_hand_enumeration(self, parts):
        # tally trace vectors of the oracle fillings directly
        p = Partition(parts)
        offset = -p.diagonals.start
        expected = Counter()
        for rows in rpps_bounded(parts, 5):
            if sum(map(sum, rows)) <= 5:
                vec = [0] * len(p.diagonals)
                for i, row in enumerate(rows, 1):
                    for j, x in enumerate(row, 1):
                        vec[j - i + offset] += x
                expected[tuple(vec)] += 1
        assert trace_sum_over_rpp(p, 5).coeffs == dict(expected)

    def test_first_difference(self):
        a = TraceMonomialTable(range(0, 2), 3, {(0, 0): 1, (1, 0): 2})
        b = TraceMonomialTable(range(0, 2), 3, {(0, 0): 1, (1, 0): 3})
        assert a.first_difference(b) == ((1, 0), 2, 3)
        assert a.first_difference(a) is None


class TestVerification:
    @pytest.mark.parametrize("parts, order", [((2, 1), 8), ((1,), 6), ((4, 3, 1), 10)])
    def test_theorems_agree(self, parts, order):
        p = Partition(parts)
        r1 = verify_theorem1(p, order)
        assert r1.ok and r1.to_line() == f"hook-length {p}; {order}; agree; -"
        assert verify_theorem2(p, order, bijection=False).ok

    def test_report_on_disagreement(self):
        r = verify_theorem1(Partition((2, 1)), 3)
        r.discrepancy = (2, 3, 4)
        assert r.status == "disagree"
        assert r.to_line() == "hook-length 2,1; 3; disagree; (2, 3, 4)"
        obj = r.to_json_obj()
        assert obj["first_discrepancy"] == {"degree": 2, "expected": 3, "got": 4}
        json.dumps(obj)

    def test_round_trip_report(self):
        r = verify_round_trip(Partition((3, 2)), 6)
        assert r.ok and r.details["rpps"] == sum(count_rpp_up_to(Partition((3, 2)), 6))
