import itertools
from math import comb, factorial, prod

import pytest

from semiform import BoxPartition, Polynomial, enumerate_box_partitions, operator_power, parse_polynomial
from semiform.diagrams import (
    census_residual,
    commutator_census,
    enumerate_semi_diagrams,
    hollow_cells,
    oracle_weight_sum,
    shaded_cells,
)


def P(text, n):
    return parse_polynomial(text, n)


class TestEnumeration:
    def test_single_minus(self):
        ds = enumerate_semi_diagrams(BoxPartition((3,), 1, 3), 1, "minus")
        assert len(ds) == 3
        assert {d.weight() for d in ds} == {(0, 0, 1, 0)}

    def test_all_minus(self):
        ds = enumerate_semi_diagrams(BoxPartition((3,), 1, 3), 3, "minus")
        assert len(ds) == 1 and ds[0].weight() == (1, 0, 0, 0)

    def test_two_plus_in_width_six(self):
        ds = enumerate_semi_diagrams(BoxPartition((3,), 1, 6), 2, "plus")
        assert len(ds) == 3
        assert {d.weight() for d in ds} == {(0, 0, 0, 0, 0, 1, 0)}

    def test_order_is_row_major_lexicographic(self):
        ds = enumerate_semi_diagrams(BoxPartition((2, 1), 2, 2), 2, "minus")
        assert [sorted(d.minus_cells) for d in ds] == [
            [(0, 0), (0, 1)], [(0, 0), (1, 0)], [(0, 1), (1, 0)]]

    def test_out_of_range_is_empty(self):
        assert enumerate_semi_diagrams(BoxPartition((1,), 1, 3), 2, "minus") == []
        assert enumerate_semi_diagrams(BoxPartition((1,), 1, 3), 3, "plus") == []

    def test_cap(self):
        with pytest.raises(ValueError):
            enumerate_semi_diagrams(BoxPartition((), 6, 5), 1, "plus")

    @pytest.mark.parametrize("parts,k,n", [((3, 2, 2), 3, 4), ((4, 1), 3, 4), ((2, 2, 1, 1), 4, 3)])
    def test_cardinality(self, parts, k, n):
        lam = BoxPartition(parts, k, n)
        for i in range(lam.size + 1):
            # sum over row distributions of prod C(lam_j, i_j)
            expected = sum(
                prod(comb(l, t) for l, t in zip(lam.parts, split))
                for split in itertools.product(*(range(l + 1) for l in lam.parts))
                if sum(split) == i
            )
            assert len(enumerate_semi_diagrams(lam, i, "minus")) == expected == comb(lam.size, i)
        hollow = len(hollow_cells(lam))
        for i in range(hollow + 1):
            assert len(enumerate_semi_diagrams(lam, i, "plus")) == comb(hollow, i)


class TestWeightSums:
    def test_minus_two_on_a3(self):
        assert oracle_weight_sum(BoxPartition((3,), 1, 3), 2, "minus") == P("3a1", 3)

    @pytest.mark.parametrize("mode", ["minus", "plus"])
    def test_empty_marking(self, mode):
        lam = BoxPartition((0, 0, 0), 3, 2)
        assert oracle_weight_sum(lam, 0, mode) == P("a0^3", 2)

    def test_plus_on_running_example(self):
        lam = BoxPartition((4, 2, 1, 0), 4, 5)
        a = Polynomial.from_partition(lam)
        assert oracle_weight_sum(lam, 3, "plus") == operator_power("Delta", 3, a) / 6

    def test_equivalence_small_boxes(self):
        for n in range(4):
            for k in range(4):
                for m in range(n * k + 1):
                    for lam in enumerate_box_partitions(k, n, m):
                        a = Polynomial.from_partition(lam)
                        for i in range(m + 1):
                            assert oracle_weight_sum(lam, i, "minus") == operator_power("D", i, a) / factorial(i)
                        for i in range(n * k - m + 1):
                            assert oracle_weight_sum(lam, i, "plus") == operator_power("Delta", i, a) / factorial(i)


class TestCensus:
    def test_running_example(self):
        lam = BoxPartition((4, 2, 1, 0), 4, 5)
        cen = commutator_census(lam, 3)
        assert (cen.pm_factor, cen.mp_factor, cen.difference_factor, cen.c) == (33, 21, 12, 6)
        assert cen.ok
        assert cen.base == operator_power("Delta", 2, Polynomial.from_partition(lam))
        assert census_residual(cen).is_zero()

    def test_single_cell(self):
        cen = commutator_census(BoxPartition((0,), 1, 1), 1)
        assert (cen.pm_factor, cen.mp_factor) == (1, 0)
        assert cen.pm_sum == P("a0", 1) and cen.mp_sum.is_zero()
        assert cen.ok

    def test_vanishing_base(self):
        # full box: no hollow cells, Delta^{i-1} of a_lam is zero for i >= 2
        lam = BoxPartition((2, 2), 2, 2)
        cen = commutator_census(lam, 2)
        assert cen.base.is_zero() and cen.pm_sum.is_zero() and cen.mp_sum.is_zero()

    def test_three_by_three_closed_forms(self):
        for m in range(10):
            for lam in enumerate_box_partitions(3, 3, m):
                for i in range(1, 5):
                    cen = commutator_census(lam, i)
                    assert cen.pm_factor == i * (9 - m - (i - 1))
                    assert cen.mp_factor == i * m
                    assert cen.ok

    def test_shaded_and_hollow_partition_box(self):
        lam = BoxPartition((3, 1), 3, 4)
        cells = set(shaded_cells(lam)) | set(hollow_cells(lam))
        assert len(cells) == 12 and not set(shaded_cells(lam)) & set(hollow_cells(lam))
