from fractions import Fraction

import pytest

from twoside.exact_core import DomainError
from twoside.euclid_checks import (CevaConfig, ceva_converse_check,
                                   ceva_product, ceva_product_report,
                                   line_intersection,
                                   squares_intersection_check)
from twoside.rng import SplitMix64

RIGHT = ((0, 0), (1, 0), (0, 1))


def random_triangle_and_weights(rng):
    while True:
        pts = [(Fraction(rng.below(17)) - 8, Fraction(rng.below(17)) - 8)
               for _ in range(3)]
        (ax, ay), (bx, by), (cx, cy) = pts
        if (bx - ax) * (cy - ay) - (by - ay) * (cx - ax) != 0:
            weights = [rng.below(7) + 1 for _ in range(3)]
            return pts, weights


class TestLineIntersection:
    def test_axes(self):
        assert line_intersection((0, 0), (2, 2), (0, 2), (2, 0)) == (1, 1)

    def test_parallel(self):
        with pytest.raises(DomainError):
            line_intersection((0, 0), (1, 0), (0, 1), (1, 1))


class TestCevaProduct:
    def test_centroid(self):
        centroid = (Fraction(1, 3), Fraction(1, 3))
        assert ceva_product(*RIGHT, centroid) == 1

    def test_generic_point(self):
        assert ceva_product(*RIGHT, (Fraction(1, 3), Fraction(1, 5))) == 1

    def test_near_vertex(self):
        assert ceva_product(*RIGHT, (Fraction(1, 10), Fraction(1, 10))) == 1

    def test_boundary_rejected(self):
        with pytest.raises(DomainError):
            ceva_product(*RIGHT, (Fraction(1, 2), Fraction(0)))
        with pytest.raises(DomainError):
            ceva_product(*RIGHT, (2, 2))

    def test_hundred_random_cases(self):
        rng = SplitMix64(2024)
        for _ in range(100):
            (a, b, c), (wa, wb, wc) = random_triangle_and_weights(rng)
            total = wa + wb + wc
            p = (Fraction(wa * a[0] + wb * b[0] + wc * c[0], total),
                 Fraction(wa * a[1] + wb * b[1] + wc * c[1], total))
            report = ceva_product_report(a, b, c, p)
            assert report.passed and report.lhs == 1


class TestCevaConverse:
    def test_medians(self):
        cfg = CevaConfig((0, 0), (4, 0), (0, 4), (1, 1, 1))
        report = ceva_converse_check(cfg)
        assert report.passed
        assert report.rhs == (2, 0)  # midpoint of AB

    def test_given_examples(self):
        for ratios in ((Fraction(1, 2), 2, 1), (2, 3, Fraction(1, 6))):
            cfg = CevaConfig((0, 0), (4, 0), (0, 4), ratios)
            assert ceva_converse_check(cfg).passed

    def test_ratio_product_enforced(self):
        cfg = CevaConfig((0, 0), (4, 0), (0, 4), (1, 1, 2))
        with pytest.raises(DomainError):
            ceva_converse_check(cfg)

    def test_nonpositive_ratio_rejected(self):
        with pytest.raises(DomainError):
            CevaConfig((0, 0), (4, 0), (0, 4), (1, -1, -1))

    def test_hundred_random_ratio_pairs(self):
        rng = SplitMix64(515253)
        for _ in range(100):
            (a, b, c), _ = random_triangle_and_weights(rng)
            r1 = Fraction(rng.below(9) + 1, rng.below(9) + 1)
            r2 = Fraction(rng.below(9) + 1, rng.below(9) + 1)
            cfg = CevaConfig(a, b, c, (r1, r2, 1 / (r1 * r2)))
            assert ceva_converse_check(cfg).passed


class TestSquaresFit:
    def test_equal_sides(self):
        report = squares_intersection_check(2, 2)
        assert report.passed and report.x == 1  # a/2

    def test_one_two(self):
        report = squares_intersection_check(1, 2)
        assert report.passed
        assert report.x == report.y == Fraction(2, 3)

    def test_three_five(self):
        report = squares_intersection_check(3, 5)
        assert report.passed
        assert report.x == Fraction(15, 8)
        assert report.intersection == (0, Fraction(15, 8))

    def test_intersection_strictly_inside_bg(self):
        rng = SplitMix64(99)
        for _ in range(100):
            a = Fraction(rng.below(25) + 1, rng.below(7) + 1)
            b = Fraction(rng.below(25) + 1, rng.below(7) + 1)
            report = squares_intersection_check(a, b)
            assert report.passed and report.on_bg
            assert report.x == report.y == a * b / (a + b)
            assert 0 < report.intersection[1] < b

    def test_positive_sides_required(self):
        with pytest.raises(DomainError):
            squares_intersection_check(0, 1)
