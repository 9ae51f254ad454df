from fractions import Fraction

import pytest

from twoside.exact_core import DomainError
from twoside.lattice_pick import (LatticePolygon, boundary_count,
                                  empty_triangulation, interior_count,
                                  pick_check, random_lattice_polygon,
                                  shoelace_area)
from oracles import segment_lattice_points, shoelace_rational

UNIT_SQUARE = LatticePolygon(((0, 0), (1, 0), (1, 1), (0, 1)))
SQUARE3 = LatticePolygon(((0, 0), (3, 0), (3, 3), (0, 3)))
EMPTY_TRIANGLE = LatticePolygon(((0, 0), (1, 0), (0, 1)))

# the ten-vertex figure polygon; (7,3) sits on the segment (8,4)-(6,2)
FIGURE_VERTICES = ((0, 0), (1, 5), (5, 4), (8, 4), (7, 3), (6, 2), (7, 0),
                   (4, 1), (3, 0), (3, 3))


class TestPolygonConstruction:
    def test_needs_three(self):
        with pytest.raises(DomainError):
            LatticePolygon(((0, 0), (1, 1)))

    def test_integer_coordinates_only(self):
        with pytest.raises(DomainError):
            LatticePolygon(((0, 0), (1.5, 0), (0, 1)))

    def test_rejects_repeats_and_zero_area(self):
        with pytest.raises(DomainError):
            LatticePolygon(((0, 0), (1, 0), (1, 0), (0, 1)))
        with pytest.raises(DomainError):
            LatticePolygon(((0, 0), (1, 1), (2, 2)))

    def test_rejects_self_intersection(self):
        with pytest.raises(DomainError):
            LatticePolygon(((0, 0), (2, 2), (2, 0), (0, 2)))

    def test_rejects_spike(self):
        with pytest.raises(DomainError):
            LatticePolygon(((0, 0), (4, 0), (2, 0), (2, 2)))

    def test_orientation_normalized(self):
        cw = LatticePolygon(((0, 0), (0, 1), (1, 1), (1, 0)))
        assert shoelace_area(cw) == 1
        assert cw.vertices != ((0, 0), (0, 1), (1, 1), (1, 0))

    def test_straight_vertices_dropped(self):
        poly = LatticePolygon(FIGURE_VERTICES)
        assert len(poly.vertices) == 9
        assert (7, 3) not in poly.vertices


class TestCounts:
    def test_shoelace_examples(self):
        assert shoelace_area(UNIT_SQUARE) == 1
        assert shoelace_area(EMPTY_TRIANGLE) == Fraction(1, 2)
        assert shoelace_area(SQUARE3) == 9

    def test_figure_polygon_area(self):
        poly = LatticePolygon(FIGURE_VERTICES)
        assert shoelace_area(poly) == shoelace_rational(FIGURE_VERTICES)

    def test_boundary_examples(self):
        assert boundary_count(UNIT_SQUARE) == 4
        assert boundary_count(LatticePolygon(((0, 0), (2, 0), (0, 2)))) == 6
        assert boundary_count(SQUARE3) == 12

    def test_boundary_gcd_matches_enumeration(self):
        for seed in range(30):
            poly = random_lattice_polygon(seed, 9)
            total = 0
            for a, b in poly.edges():
                total += segment_lattice_points(a, b) + 1
            assert boundary_count(poly) == total

    def test_interior_examples(self):
        assert interior_count(UNIT_SQUARE) == 0
        assert interior_count(SQUARE3) == 4
        assert interior_count(LatticePolygon(((0, 0), (4, 0), (0, 4)))) == 3


class TestPick:
    def test_unit_square(self):
        report = pick_check(UNIT_SQUARE)
        assert report.passed
        assert report.lhs == 1 == Fraction(4, 2) + 0 - 1

    def test_square3(self):
        report = pick_check(SQUARE3)
        assert report.passed
        assert report.detail == {"boundary": 12, "interior": 4}

    def test_figure_polygon(self):
        assert pick_check(LatticePolygon(FIGURE_VERTICES)).passed

    def test_random_polygons(self):
        for seed in range(60):
            assert pick_check(random_lattice_polygon(seed, 12)).passed


class TestTriangulation:
    def test_empty_triangle(self):
        report = empty_triangulation(EMPTY_TRIANGLE)
        assert report.count == 1 == report.expected_count
        assert report.count_check and report.all_empty and report.all_half_area

    def test_unit_square(self):
        report = empty_triangulation(UNIT_SQUARE)
        assert report.count == 2 == 4 + 0 - 2

    def test_square3_counts_from_ops(self):
        report = empty_triangulation(SQUARE3)
        assert report.boundary == 12 and report.interior == 4
        assert report.count == 12 + 2 * 4 - 2 == 18
        assert report.area_check and report.all_empty and report.all_half_area

    def test_both_orders_agree_on_count(self):
        for seed in range(25):
            poly = random_lattice_polygon(seed, 8)
            first = empty_triangulation(poly, order="boundary_first")
            second = empty_triangulation(poly, order="interior_first")
            assert first.count == second.count == first.expected_count
            assert first.area_check and second.area_check
            assert first.all_empty and second.all_empty
            assert first.all_half_area and second.all_half_area

    def test_figure_polygon_triangulation(self):
        poly = LatticePolygon(FIGURE_VERTICES)
        report = empty_triangulation(poly)
        assert report.count_check and report.area_check
        assert report.all_empty and report.all_half_area

    def test_unknown_order(self):
        with pytest.raises(DomainError):
            empty_triangulation(UNIT_SQUARE, order="random")


class TestGenerator:
    def test_deterministic(self):
        a = random_lattice_polygon(42, 10)
        b = random_lattice_polygon(42, 10)
        assert a.vertices == b.vertices

    def test_distinct_seeds_differ(self):
        assert random_lattice_polygon(1, 10).vertices != \
            random_lattice_polygon(2, 10).vertices

    def test_outputs_valid(self):
        for seed in range(40):
            poly = random_lattice_polygon(seed, 20)
            # revalidation through the constructor must succeed
            again = LatticePolygon(poly.vertices)
            assert again.vertices == poly.vertices

    def test_extent_validated(self):
        with pytest.raises(DomainError):
            random_lattice_polygon(1, 0)
