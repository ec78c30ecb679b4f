import random

import pytest
from conftest import KNAPSACK_NONDOMINATED, KNAPSACK_OUTCOMES, MULTI_CLOUD

from tropfront.bruteforce import (
    brute_local_upper_bounds,
    brute_nondominated,
    cross_check,
)
from tropfront.cones import GeneratorSet, complementary_apices
from tropfront.core import INF, embed_outcome


class TestBruteNondominated:
    def test_multi_cloud(self):
        assert brute_nondominated(MULTI_CLOUD) == {(0, 0), (-3, 2)}

    def test_singleton(self):
        assert brute_nondominated([(7, 7)]) == {(7, 7)}

    def test_knapsack_outcomes(self):
        assert brute_nondominated(KNAPSACK_OUTCOMES) == KNAPSACK_NONDOMINATED

    def test_empty(self):
        assert brute_nondominated([]) == set()

    def test_duplicates_collapse(self):
        assert brute_nondominated([(1, 1), (1, 1)]) == {(1, 1)}


class TestBruteLocalUpperBounds:
    def test_knapsack_front(self):
        assert brute_local_upper_bounds(KNAPSACK_NONDOMINATED) == {
            (INF, 0, INF),
            (INF, INF, 0),
            (0, INF, INF),
            (1, 3, INF),
            (1, INF, 3),
            (3, 2, INF),
            (3, INF, 2),
        }

    def test_two_criteria_front(self):
        assert brute_local_upper_bounds({(0, 0), (-3, 2)}) == {
            (0, 2),
            (-3, INF),
            (INF, 0),
        }

    def test_single_point_line(self):
        assert brute_local_upper_bounds({(5,)}) == {(5,)}

    def test_empty_input_rejected(self):
        with pytest.raises(ValueError):
            brute_local_upper_bounds([])

    def test_dominated_input_rejected(self):
        with pytest.raises(ValueError):
            brute_local_upper_bounds([(0, 0), (1, 1)])

    def test_no_member_lies_strictly_below_a_bound(self):
        rng = random.Random(55)
        for _ in range(40):
            d = rng.randint(1, 4)
            cloud = {
                tuple(rng.randint(-9, 9) for _ in range(d))
                for _ in range(rng.randint(1, 12))
            }
            front = brute_nondominated(cloud)
            for apex in brute_local_upper_bounds(front):
                for g in front:
                    assert not all(g[j] < apex[j] for j in range(d))

    def test_bound_coordinates_come_from_the_cloud(self):
        # finite apex coordinates always equal some member coordinate on the
        # same axis, which is what justifies the candidate grid
        rng = random.Random(56)
        for _ in range(40):
            d = rng.randint(1, 3)
            cloud = {
                tuple(rng.randint(-9, 9) for _ in range(d))
                for _ in range(rng.randint(1, 10))
            }
            front = brute_nondominated(cloud)
            gens = GeneratorSet(d, [embed_outcome(z) for z in front])
            axes = [{g[j] for g in front} for j in range(d)]
            for apex in complementary_apices(gens).nontrivial():
                for j in range(1, d + 1):
                    if apex[j] != INF:
                        assert apex[j] in axes[j - 1]


class TestCrossCheck:
    def test_knapsack_outcomes_pass(self):
        report = cross_check(KNAPSACK_OUTCOMES)
        assert report.passed
        assert report.scalarizations == report.expected_calls == 10
        assert not report.missing_nondominated and not report.extra_nondominated
        assert not report.missing_bounds and not report.extra_bounds

    def test_seeded_random_cloud_passes(self):
        rng = random.Random(20)
        cloud = [tuple(rng.randint(0, 9) for _ in range(3)) for _ in range(20)]
        assert cross_check(cloud).passed

    def test_duplicated_points_pass(self):
        cloud = [(1, 2), (1, 2), (2, 1), (2, 1), (3, 3)]
        assert cross_check(cloud).passed

    def test_empty_cloud_passes(self):
        report = cross_check([], dim=2)
        assert report.passed
        assert report.expected_calls == 1
