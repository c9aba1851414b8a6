import brute
import pytest

from pseudoconvex.algo13 import partition_13
from pseudoconvex.exceptions import BudgetExhausted
from pseudoconvex.oracle import SearchBudget, admissible_3_partition, min_partition
from pseudoconvex.partition import verify_partition
from pseudoconvex.pointgen import GenSpec, generate


class TestBudget:
    def test_rejects_non_positive_fields(self):
        with pytest.raises(ValueError):
            SearchBudget(max_parts=0)
        with pytest.raises(ValueError):
            SearchBudget(node_limit=-1)

    def test_node_limit(self):
        with pytest.raises(BudgetExhausted):
            min_partition(generate(GenSpec("uniform", 13, 0)), SearchBudget(node_limit=10))

    def test_too_few_parts(self):
        # this draw has interior points behind a non-triangular hull, so one part is impossible
        with pytest.raises(BudgetExhausted):
            min_partition(generate(GenSpec("uniform", 9, 1)), SearchBudget(max_parts=1))


class TestMinPartition:
    def test_empty_and_convex(self):
        assert min_partition([])[0] == 0
        assert min_partition(generate(GenSpec("convex_position", 9, 3)))[0] == 1

    def test_single_part_iff_polygonizable(self):
        for seed in range(80):
            S = generate(GenSpec("uniform", 6, seed, bbox=200))
            k, P = min_partition(S)
            assert verify_partition(P).overall
            assert (k == 1) == brute.polygonizable(range(6), S.coords)

    def test_never_worse_than_the_algorithm(self):
        for seed in range(8):
            S = generate(GenSpec("uniform", 13, seed))
            k, P = min_partition(S)
            assert verify_partition(P).overall
            assert k <= len(partition_13(S).parts) <= 3

    def test_degenerate_blocks_for_eight_points(self):
        for seed in range(20):
            k, P = min_partition(generate(GenSpec("uniform", 8, seed)),
                                 SearchBudget(max_parts=2, allow_degenerate=True))
            assert k <= 2 and verify_partition(P).overall


class TestAdmissible:
    def test_thirteen_points(self):
        for seed in range(5):
            P = admissible_3_partition(generate(GenSpec("uniform", 13, 100 + seed)))
            assert len(P.parts) <= 3 and verify_partition(P).overall
            assert P.branch == "oracle"

    def test_deterministic(self):
        S = generate(GenSpec("fixed_hull_size", 13, 4, hull=5))
        assert admissible_3_partition(S).dumps() == admissible_3_partition(S).dumps()
