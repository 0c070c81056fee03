import itertools
from math import comb

import pytest
from hypothesis import given, strategies as st

from semiform import (
    count_p,
    delta,
    delta_table,
    enumerate_box_partitions,
    gaussian_coefficient,
    strict_unimodality_report,
)
from semiform.partitions import q_factorial_ratio


def brute_partitions(k, n, m):
    """Every weakly decreasing k-tuple over [0, n] summing to m, descending lex."""
    out = [p for p in itertools.product(range(n + 1), repeat=k)
           if sum(p) == m and list(p) == sorted(p, reverse=True)]
    return sorted(out, reverse=True)


def brute_table(k, n):
    counts = [0] * (n * k + 1)
    for p in itertools.product(range(n + 1), repeat=k):
        if list(p) == sorted(p, reverse=True):
            counts[sum(p)] += 1
    return counts


def strip(parts):
    return tuple(x for x in parts if x)


class TestEnumeration:
    def test_two_by_two(self):
        assert [l.parts for l in enumerate_box_partitions(2, 2, 2)] == [(2, 0), (1, 1)]

    def test_weight_zero(self):
        assert [l.parts for l in enumerate_box_partitions(3, 5, 0)] == [(0, 0, 0)]

    def test_four_by_four_weight_six(self):
        got = [strip(l.parts) for l in enumerate_box_partitions(4, 4, 6)]
        assert got == [(4, 2), (4, 1, 1), (3, 3), (3, 2, 1), (3, 1, 1, 1), (2, 2, 2), (2, 2, 1, 1)]

    def test_too_heavy(self):
        assert enumerate_box_partitions(2, 2, 5) == []

    @pytest.mark.parametrize("k,n", [(1, 4), (2, 3), (3, 3), (4, 4), (3, 5), (5, 2)])
    def test_matches_brute_force(self, k, n):
        for m in range(n * k + 2):
            assert [l.parts for l in enumerate_box_partitions(k, n, m)] == brute_partitions(k, n, m)


class TestCounts:
    def test_examples(self):
        assert count_p(2, 2, 2) == 2
        assert count_p(4, 4, 5) == 5
        assert count_p(6, 3, 0) == 1
        assert count_p(4, 4, -1) == 0
        assert count_p(4, 4, 17) == 0

    def test_gaussian_examples(self):
        assert gaussian_coefficient(2, 2).coeffs == (1, 1, 2, 1, 1)
        assert gaussian_coefficient(5, 0).coeffs == (1,)
        assert gaussian_coefficient(1, 6).coeffs == (1,) * 7

    @pytest.mark.parametrize("k,n", [(k, n) for k in range(0, 6) for n in range(0, 5)])
    def test_dp_matches_enumeration(self, k, n):
        assert list(gaussian_coefficient(n, k).coeffs) == brute_table(k, n)

    def test_recurrence_cross_check(self):
        for n in range(11):
            for k in range(11):
                assert gaussian_coefficient(n, k).coeffs == q_factorial_ratio(n, k)

    def test_large_box_is_cheap(self):
        g = gaussian_coefficient(64, 64)
        assert sum(g.coeffs) == comb(128, 64)


@given(st.integers(0, 12), st.integers(0, 12))
def test_symmetry_conjugation_normalization(n, k):
    c = gaussian_coefficient(n, k).coeffs
    assert c == c[::-1]
    assert c == gaussian_coefficient(k, n).coeffs
    assert sum(c) == comb(n + k, k)


class TestDelta:
    def test_examples(self):
        assert delta(4, 4, 6) == 2
        assert delta(3, 7, 0) == 1
        assert delta(2, 2, 2) == 1

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            delta(2, 2, 3)
        with pytest.raises(ValueError):
            delta(2, 2, -1)

    def test_nonnegative_up_to_eight(self):
        for n in range(9):
            for k in range(9):
                t = delta_table(n, k)
                assert t.values[0] == 1
                assert all(v >= 0 for v in t.values)

    def test_cumulative_sum_is_p(self):
        # number of semi-invariants of weight <= m is p(k,n,m)
        for n in range(1, 7):
            for k in range(1, 7):
                vals = delta_table(n, k).values
                for m in range(len(vals)):
                    assert sum(vals[: m + 1]) == count_p(k, n, m)


class TestUnimodality:
    def test_eight_by_eight(self):
        r = strict_unimodality_report(8, 8)
        assert r.violations == () and r.strictly_unimodal and r.unimodal

    def test_two_by_two(self):
        assert strict_unimodality_report(2, 2).violations == ()

    def test_four_by_four_against_brute_table(self):
        t = brute_table(4, 4)
        expected = tuple(m for m in range(2, 9) if t[m] <= t[m - 1])
        r = strict_unimodality_report(4, 4)
        assert r.violations == expected == (5, 7)
        assert r.unimodal

    def test_all_small_boxes_unimodal(self):
        for n in range(1, 13):
            for k in range(1, 13):
                assert strict_unimodality_report(n, k).unimodal
