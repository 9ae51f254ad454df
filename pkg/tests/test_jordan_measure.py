import math
from fractions import Fraction

import pytest

from twoside.exact_core import DomainError, NonConvergenceError
from twoside.jordan_measure import (ConvexPolygon, Disk, jordan_bracket,
                                    jordan_refine, parse_region)
from oracles import machin_pi_bracket, shoelace_rational


def brute_force_counts(region, n):
    """Per-cell classification with plain rational arithmetic."""
    x0, y0, x1, y1 = region.bounding_box()
    cols = math.ceil((x1 - x0) * n)
    rows = math.ceil((y1 - y0) * n)
    inner = outer = 0
    for i in range(cols):
        for j in range(rows):
            corners = [(x0 + Fraction(i + di, n), y0 + Fraction(j + dj, n))
                       for di in (0, 1) for dj in (0, 1)]
            if isinstance(region, Disk):
                (cx, cy), r = region.center, region.radius
                if all((px - cx) ** 2 + (py - cy) ** 2 < r * r
                       for px, py in corners):
                    inner += 1
                nx = min(max(cx, corners[0][0]), corners[3][0])
                ny = min(max(cy, corners[0][1]), corners[3][1])
                if (nx - cx) ** 2 + (ny - cy) ** 2 <= r * r:
                    outer += 1
            else:
                def strictly_inside(pt):
                    px, py = pt
                    verts = region.vertices
                    m = len(verts)
                    for idx in range(m):
                        ax, ay = verts[idx]
                        bx, by = verts[(idx + 1) % m]
                        if (bx - ax) * (py - ay) - (by - ay) * (px - ax) <= 0:
                            return False
                    return True
                if all(strictly_inside(c) for c in corners):
                    inner += 1
                # cell meets polygon iff SAT on the axis directions and edges
                if _cell_meets_polygon(corners, region.vertices):
                    outer += 1
    return inner, outer


def _project(points, axis):
    dots = [px * axis[0] + py * axis[1] for px, py in points]
    return min(dots), max(dots)


def _cell_meets_polygon(corners, verts):
    cell = [corners[0], corners[1], corners[3], corners[2]]
    axes = [(1, 0), (0, 1)]
    m = len(verts)
    for i in range(m):
        ax, ay = verts[i]
        bx, by = verts[(i + 1) % m]
        axes.append((ay - by, bx - ax))
    for axis in axes:
        lo1, hi1 = _project(cell, axis)
        lo2, hi2 = _project(verts, axis)
        if hi1 < lo2 or hi2 < lo1:
            return False
    return True


UNIT_SQUARE = ConvexPolygon(((0, 0), (1, 0), (1, 1), (0, 1)))


class TestJordanBracket:
    def test_unit_square_formula(self):
        for n in (2, 3, 4, 8, 16):
            b = jordan_bracket(UNIT_SQUARE, n)
            assert b.hi == 1
            assert b.lo == (1 - Fraction(2, n)) ** 2

    def test_unit_square_n1(self):
        b = jordan_bracket(UNIT_SQUARE, 1)
        assert b.lo == 0 and b.hi == 1

    def test_disk_matches_brute_force(self):
        disk = Disk((Fraction(0), Fraction(0)), Fraction(1))
        for n in (1, 2, 3, 4, 7):
            inner, outer = brute_force_counts(disk, n)
            b = jordan_bracket(disk, n)
            assert b.lo == Fraction(inner, n * n)
            assert b.hi == Fraction(outer, n * n)

    def test_offcenter_disk_matches_brute_force(self):
        disk = Disk((Fraction(1, 3), Fraction(-2, 7)), Fraction(5, 4))
        for n in (1, 2, 5):
            inner, outer = brute_force_counts(disk, n)
            b = jordan_bracket(disk, n)
            assert (b.lo, b.hi) == (Fraction(inner, n * n),
                                    Fraction(outer, n * n))

    def test_polygon_matches_brute_force(self):
        tri = ConvexPolygon(((0, 0), (2, 0), (Fraction(1, 2), Fraction(3, 2))))
        for n in (1, 2, 3, 6):
            inner, outer = brute_force_counts(tri, n)
            b = jordan_bracket(tri, n)
            assert (b.lo, b.hi) == (Fraction(inner, n * n),
                                    Fraction(outer, n * n))

    def test_refinement_nesting(self):
        disk = Disk((Fraction(0), Fraction(0)), Fraction(1))
        previous = None
        n = 1
        while n <= 64:
            b = jordan_bracket(disk, n)
            if previous is not None:
                assert b.lo >= previous.lo
                assert b.hi <= previous.hi
            previous = b
            n *= 2

    def test_disk_bracket_contains_pi(self):
        machin_lo, machin_hi = machin_pi_bracket()
        disk = Disk((Fraction(0), Fraction(0)), Fraction(1))
        for n in (4, 16, 64):
            b = jordan_bracket(disk, n)
            assert b.lo <= machin_lo and machin_hi <= b.hi

    def test_disk_width_shrinks_like_perimeter(self):
        disk = Disk((Fraction(0), Fraction(0)), Fraction(1))
        n = 1
        while n <= 512:
            assert jordan_bracket(disk, n).width <= Fraction(16, n)
            n *= 4


class TestRefine:
    def test_disk_converges(self):
        disk = Disk((Fraction(0), Fraction(0)), Fraction(1))
        result = jordan_refine(disk, Fraction(1, 10))
        machin_lo, machin_hi = machin_pi_bracket()
        assert result.bracket.width <= Fraction(1, 10)
        assert result.bracket.lo <= machin_lo and machin_hi <= result.bracket.hi

    def test_polygon_converges_to_shoelace(self):
        poly = ConvexPolygon(((0, 0), (3, 1), (2, 3), (-1, 2)))
        area = shoelace_rational(poly.vertices)
        assert area == poly.shoelace_area()
        result = jordan_refine(poly, Fraction(1, 50))
        assert result.bracket.contains(area)
        assert result.bracket.width <= Fraction(1, 50)
        for _, bracket in result.steps:
            assert bracket.contains(area)

    def test_loose_tolerance_stops_at_one(self):
        result = jordan_refine(UNIT_SQUARE, Fraction(2))
        assert result.n == 1

    def test_max_n_exceeded(self):
        disk = Disk((Fraction(0), Fraction(0)), Fraction(1))
        with pytest.raises(NonConvergenceError) as exc:
            jordan_refine(disk, Fraction(1, 10 ** 6), max_n=8)
        assert exc.value.last_bracket is not None


class TestRegionValidation:
    def test_disk_radius_positive(self):
        with pytest.raises(DomainError):
            Disk((0, 0), 0)

    def test_polygon_needs_ccw_convex(self):
        with pytest.raises(DomainError):
            ConvexPolygon(((0, 0), (0, 1), (1, 0)))  # clockwise
        with pytest.raises(DomainError):
            ConvexPolygon(((0, 0), (2, 0), (1, 1), (1, 2)))  # reflex

    def test_collinear_rejected(self):
        with pytest.raises(DomainError):
            ConvexPolygon(((0, 0), (1, 1), (2, 2)))

    def test_parse_region(self):
        disk = parse_region("disk:1")
        assert isinstance(disk, Disk) and disk.radius == 1
        disk = parse_region("disk:1/2,0,3/4")
        assert disk.center == (Fraction(1, 2), 0)
        poly = parse_region("poly:0,0;2,0;2,2;0,2")
        assert isinstance(poly, ConvexPolygon)
        with pytest.raises(DomainError):
            parse_region("blob:1")
