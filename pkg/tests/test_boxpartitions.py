import math

import pytest

from semiinv.boxpartitions import (
    BoxPartition,
    count_partitions_in_box,
    delta,
    enumerate_partitions_in_box,
)
from semiinv.monomials import Monomial

from helpers import brute_count, brute_partitions, partition_to_nu


class TestCount:
    def test_small_known_values(self):
        assert count_partitions_in_box(3, 2, 2) == 2
        assert count_partitions_in_box(3, 2, 1) == 1

    def test_two_row_floor_formula(self):
        for n in range(1, 12):
            for m in range(n + 1):
                assert count_partitions_in_box(2, n, m) == (m + 2) // 2

    def test_empty_partition(self):
        for k in range(5):
            for n in range(5):
                assert count_partitions_in_box(k, n, 0) == 1

    def test_out_of_range_weights(self):
        assert count_partitions_in_box(3, 3, -1) == 0
        assert count_partitions_in_box(3, 3, 10) == 0

    def test_against_brute_force(self):
        for k in range(5):
            for n in range(5):
                for m in range(n * k + 1):
                    assert count_partitions_in_box(k, n, m) == brute_count(k, n, m)

    def test_negative_box_rejected(self):
        with pytest.raises(ValueError):
            count_partitions_in_box(-1, 3, 0)

    def test_symmetry(self):
        for k in range(7):
            for n in range(7):
                for m in range(n * k + 1):
                    assert count_partitions_in_box(
                        k, n, m
                    ) == count_partitions_in_box(k, n, n * k - m)

    def test_conjugate_symmetry(self):
        for k in range(7):
            for n in range(7):
                for m in range(n * k + 1):
                    assert count_partitions_in_box(
                        k, n, m
                    ) == count_partitions_in_box(n, k, m)

    def test_total_is_binomial(self):
        for k in range(8):
            for n in range(8):
                total = sum(
                    count_partitions_in_box(k, n, m) for m in range(n * k + 1)
                )
                assert total == math.comb(n + k, k)


class TestDelta:
    def test_worked_cell(self):
        assert delta(4, 4, 6) == 2

    def test_weight_zero(self):
        for k in range(5):
            for n in range(5):
                assert delta(k, n, 0) == 1

    def test_negative_past_middle(self):
        assert delta(2, 2, 3) < 0

    def test_base_grid_bound(self):
        for n in range(8, 16):
            for r in range(8, 16):
                if (n * r) % 2:
                    continue
                assert delta(r, n, n * r // 2) >= 2


class TestEnumerate:
    def test_lengths_match_counts(self):
        for k in range(7):
            for n in range(7):
                for m in range(n * k + 1):
                    got = enumerate_partitions_in_box(k, n, m)
                    assert len(got) == count_partitions_in_box(k, n, m)

    def test_matches_brute_force_set(self):
        for k in range(1, 6):
            for n in range(1, 6):
                for m in range(n * k + 1):
                    expected = {
                        partition_to_nu(parts, k, n)
                        for parts in brute_partitions(k, n, m)
                    }
                    got = {bp.nu for bp in enumerate_partitions_in_box(k, n, m)}
                    assert got == expected

    def test_worked_cell_has_seven(self):
        assert len(enumerate_partitions_in_box(4, 4, 6)) == 7

    def test_single_row_box(self):
        for n in range(1, 6):
            for m in range(n + 1):
                got = enumerate_partitions_in_box(1, n, m)
                assert len(got) == 1
                assert got[0].parts() == ((m,) if m else ())

    def test_three_by_two(self):
        assert len(enumerate_partitions_in_box(3, 2, 3)) == 2

    def test_descending_antilex_order(self):
        for (k, n, m) in [(4, 4, 6), (3, 3, 4), (5, 2, 5), (2, 6, 7)]:
            monos = [
                Monomial(bp.nu) for bp in enumerate_partitions_in_box(k, n, m)
            ]
            for a, b in zip(monos, monos[1:]):
                assert a > b

    def test_invalid_weight_rejected(self):
        with pytest.raises(ValueError):
            enumerate_partitions_in_box(2, 2, 5)
        with pytest.raises(ValueError):
            enumerate_partitions_in_box(2, 2, -1)

    def test_degenerate_boxes(self):
        assert enumerate_partitions_in_box(0, 4, 0)[0].nu == (0, 0, 0, 0, 0)
        assert enumerate_partitions_in_box(3, 0, 0)[0].nu == (3,)


class TestBoxPartition:
    def test_invariants_enforced(self):
        with pytest.raises(ValueError):
            BoxPartition((1, 1), 3, 1)  # multiplicities sum to 2, not 3
        with pytest.raises(ValueError):
            BoxPartition((1, -1, 3), 3, 2)
        with pytest.raises(ValueError):
            BoxPartition((1, 2), 3, 2)  # wrong length

    def test_weight_and_parts(self):
        bp = BoxPartition((1, 0, 2, 1), 4, 3)
        assert bp.weight == 7
        assert bp.parts() == (3, 2, 2)
