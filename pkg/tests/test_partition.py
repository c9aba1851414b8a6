import json
import random

import brute
import pytest

from pseudoconvex.algo13 import partition_13
from pseudoconvex.exceptions import BadInput, MalformedPart, SearchLimitExceeded
from pseudoconvex.geometry import PointSet, convex_hull
from pseudoconvex.partition import (
    Part,
    PartKind,
    Partition,
    canonical_cycle,
    classify_part,
    find_pseudo_polygonization,
    is_simple,
    make_part,
    parts_disjoint,
    point_in_polygon,
    polygon_part,
    verify_partition,
)
from pseudoconvex.pointgen import GenSpec, generate

SQUARE = [(0, 0), (4, 0), (4, 4), (0, 4)]


def hole(ids):
    return Part(PartKind.HOLE, frozenset(ids), tuple(ids))


class TestPolygonPredicates:
    def test_point_in_polygon_three_states(self):
        assert point_in_polygon(SQUARE, (2, 2)) == 1
        assert point_in_polygon(SQUARE, (4, 2)) == 0
        assert point_in_polygon(SQUARE, (5, 2)) == -1

    def test_simple_and_bowtie(self):
        assert is_simple(SQUARE)
        assert not is_simple([(0, 0), (4, 4), (4, 0), (0, 4)])

    def test_canonical_cycle_is_ccw_from_min_id(self):
        S = PointSet([(0, 0), (4, 0), (1, 1), (0, 4)])
        assert canonical_cycle((3, 2, 1, 0), S.coords) == (0, 1, 2, 3)
        assert canonical_cycle((2, 1, 0, 3), S.coords) == (0, 1, 2, 3)


class TestClassify:
    def test_empty_square(self):
        S = PointSet(SQUARE)
        assert classify_part(hole((0, 1, 2, 3)), S).ok

    def test_square_with_centre_fails_with_witness(self):
        S = PointSet(SQUARE + [(2, 1)])
        v = classify_part(hole((0, 1, 2, 3)), S)
        assert not v.ok and v.witness == 4

    def test_pseudo_triangle_convex_vertices(self):
        S = PointSet([(0, 0), (4, 0), (1, 1), (0, 4)])
        part = Part(PartKind.PSEUDO_TRIANGLE, frozenset(range(4)), (0, 1, 2, 3))
        v = classify_part(part, S)
        assert v.ok
        assert set(v.convex_vertices) == {0, 1, 3}

    def test_wrong_kind_fails(self):
        S = PointSet([(0, 0), (4, 0), (1, 1), (0, 4)])
        assert not classify_part(Part(PartKind.HOLE, frozenset(range(4)), (0, 1, 2, 3)), S).ok

    def test_missing_polygon(self):
        with pytest.raises(MalformedPart):
            classify_part(Part(PartKind.HOLE, frozenset({0, 1, 2}), None), PointSet(SQUARE))

    def test_degenerate_cardinality(self):
        S = PointSet(SQUARE)
        assert classify_part(Part.degenerate([0]), S).ok
        assert classify_part(Part.degenerate([0, 2]), S).ok
        assert Part.degenerate([1]).kind is PartKind.POINT


class TestFindPolygonization:
    def test_convex_four(self):
        S = PointSet(SQUARE)
        assert find_pseudo_polygonization(range(4), S).kind is PartKind.HOLE

    def test_triangle_plus_interior(self):
        S = PointSet([(0, 0), (6, 0), (0, 6), (1, 2)])
        part = find_pseudo_polygonization(range(4), S)
        assert part.kind is PartKind.PSEUDO_TRIANGLE
        assert classify_part(part, S).ok

    def test_hull_three_interior_three_agrees_with_enumeration(self):
        for seed in range(60):
            S = generate(GenSpec("fixed_hull_size", 6, seed, bbox=1000, hull=3))
            assert (find_pseudo_polygonization(range(6), S) is not None) == brute.polygonizable(range(6), S.coords)

    def test_hull_four_with_interior_points_has_no_polygonization(self):
        S = generate(GenSpec("fixed_hull_size", 6, 2, bbox=1000, hull=4))
        assert find_pseudo_polygonization(range(6), S) is None
        assert not brute.polygonizable(range(6), S.coords)

    def test_search_limit(self):
        S = generate(GenSpec("fixed_hull_size", 11, 1, hull=3))
        assert find_pseudo_polygonization(range(11), generate(GenSpec("fixed_hull_size", 11, 1, hull=5))) is None
        with pytest.raises(SearchLimitExceeded):
            find_pseudo_polygonization(range(11), S, limit=9)

    def test_large_hole_needs_no_search(self):
        S = generate(GenSpec("convex_position", 12, 1))
        assert find_pseudo_polygonization(range(12), S).kind is PartKind.HOLE

    def test_embedded_subsets_agree_with_enumeration(self):
        rng = random.Random(3)
        for seed in range(150):
            S = generate(GenSpec("uniform", rng.randint(8, 12), seed, bbox=60))
            T = rng.sample(range(len(S)), rng.randint(3, 7))
            assert (find_pseudo_polygonization(T, S) is not None) == brute.polygonizable(T, S.coords)

    def test_make_part_degenerate_and_polygon_part(self):
        S = PointSet([(0, 0), (6, 0), (0, 6), (1, 2)])
        assert make_part([2], S).kind is PartKind.POINT
        assert make_part([1, 2], S).kind is PartKind.SEGMENT
        assert polygon_part((0, 1, 3, 2)[::-1], S).kind is PartKind.PSEUDO_TRIANGLE
        assert polygon_part((0, 1, 2), PointSet([(0, 0), (6, 0), (0, 6)])).kind is PartKind.HOLE


class TestDisjoint:
    S = PointSet([(0, 0), (3, 1), (1, 3), (5, 1), (8, -1), (7, 4)])

    def test_separated(self):
        assert parts_disjoint(hole((0, 1, 2)), hole((3, 4, 5)), self.S).ok

    def test_interlocking(self):
        S = PointSet([(0, 0), (10, 1), (5, 9), (4, 3), (13, 7), (-3, 6)])
        v = parts_disjoint(hole((0, 1, 2)), hole((3, 4, 5)), S)
        assert not v.ok

    def test_shared_vertex(self):
        assert not parts_disjoint(hole((0, 1, 2)), hole((2, 3, 4)), self.S).ok

    def test_point_inside_other_region(self):
        S = PointSet([(0, 0), (10, 0), (0, 10), (2, 3)])
        assert not parts_disjoint(hole((0, 1, 2)), Part.degenerate([3]), S).ok

    def test_algorithm_outputs_are_pairwise_disjoint(self):
        for seed in range(200):
            P = partition_13(generate(GenSpec("uniform", 13, seed)))
            for i in range(len(P.parts)):
                for j in range(i + 1, len(P.parts)):
                    assert parts_disjoint(P.parts[i], P.parts[j], P.points).ok


class TestVerify:
    def test_single_convex_part(self):
        S = generate(GenSpec("convex_position", 5, 0))
        P = Partition((hole(tuple(convex_hull(S.coords))),), "manual", S)
        assert verify_partition(P).overall

    def test_missing_point(self):
        S = generate(GenSpec("convex_position", 5, 0))
        h = convex_hull(S.coords)
        rep = verify_partition(Partition((hole(tuple(h[:4])),), "manual", S))
        assert not rep.overall and rep.missing == [h[4]]
        assert any("not covered" in line for line in rep.failures())

    def test_duplicate_point(self):
        S = generate(GenSpec("convex_position", 6, 0))
        h = convex_hull(S.coords)
        rep = verify_partition(Partition((hole(tuple(h[:4])), hole(tuple(h[3:]))), "m", S))
        assert rep.duplicated == [h[3]]

    def test_json_round_trip(self):
        P = partition_13(generate(GenSpec("uniform", 13, 4)))
        d = json.loads(P.dumps())
        assert set(d) == {"n", "points", "parts", "branch"}
        Q = Partition.from_json(d)
        assert Q == P and verify_partition(Q).overall

    def test_json_rejects_bad_header(self):
        P = partition_13(generate(GenSpec("uniform", 13, 4)))
        d = P.to_json()
        d["n"] = 12
        with pytest.raises(BadInput):
            Partition.from_json(d)

    def test_labels(self):
        P = partition_13(generate(GenSpec("uniform", 13, 9)))
        labels = P.labels()
        assert min(labels) == 0 and max(labels) == len(P.parts) - 1
