# Tests for Point Generators
"""Tests for orthochroma/generators.py"""

import itertools
import math
from fractions import Fraction

import pytest

from orthochroma.generators import (
    CircleError,
    CoverageGrid,
    ExactRotation,
    IDENTITY,
    RotationError,
    circle_scan,
    coverage,
    enum_points,
    orbit,
    quadruples_with_denominator,
    rotation_about,
    rotation_y,
    rotation_z,
)
from orthochroma.projective import Colour3
from orthochroma.sphere import SpherePoint, antipode, colour3


AXIS_POINTS = {
    (1, 0, 0, 1), (-1, 0, 0, 1),
    (0, 1, 0, 1), (0, -1, 0, 1),
    (0, 0, 1, 1), (0, 0, -1, 1),
}


def _quads(points):
    return [(P.a, P.b, P.c, P.d) for P in points]


class TestEnumPoints:
    """Tests for height-bounded enumeration."""

    def test_quadruple_h1_is_axes(self):
        assert set(_quads(enum_points("quadruple", 1))) == AXIS_POINTS

    def test_quadruple_h3(self):
        points = _quads(enum_points("quadruple", 3))
        assert len(points) == 6 + 24
        d3 = [q for q in points if q[3] == 3]
        assert {tuple(sorted(abs(x) for x in q[:3])) for q in d3} == {(1, 2, 2)}

    def test_even_denominators_empty(self):
        assert quadruples_with_denominator(2) == []
        assert quadruples_with_denominator(10) == []

    def test_complete_against_brute_force(self):
        H = 15
        brute = set()
        for d in range(1, H + 1):
            for a, b, c in itertools.product(range(-d, d + 1), repeat=3):
                if a * a + b * b + c * c == d * d and math.gcd(a, b, c) == 1:
                    brute.add((a, b, c, d))
        found = _quads(enum_points("quadruple", H))
        assert len(found) == len(set(found))
        assert set(found) == brute

    def test_deterministic_order(self):
        assert _quads(enum_points("quadruple", 9)) == _quads(enum_points("quadruple", 9))

    def test_workers_do_not_change_output(self):
        assert _quads(enum_points("quadruple", 11, workers=2)) == _quads(enum_points("quadruple", 11))

    def test_stereo_h2(self):
        points = set(_quads(enum_points("stereo", 2)))
        assert {(0, 0, -1, 1), (1, 0, 0, 1), (4, 0, -3, 5)} <= points

    def test_stereo_has_no_duplicates_or_pole(self):
        points = _quads(enum_points("stereo", 4))
        assert len(points) == len(set(points))
        assert (0, 0, 1, 1) not in points

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            list(enum_points("quadruple", 0))
        with pytest.raises(ValueError):
            list(enum_points("spiral", 3))


class TestRotations:
    """Tests for exact rotations."""

    def test_rotation_z_first_steps(self):
        R = rotation_z()
        P = SpherePoint(1, 0, 0, 1)
        assert R.apply(P) == SpherePoint(3, 4, 0, 5)
        assert R.power(2).apply(P) == SpherePoint(-7, 24, 0, 25)
        assert R.power(0).matrix == IDENTITY

    def test_negative_power_inverts(self):
        R = rotation_y()
        P = SpherePoint(2, 1, 2, 3)
        assert R.power(-3).apply(R.power(3).apply(P)) == P
        assert (R @ R.transpose()).matrix == IDENTITY

    def test_exchanged_angle_breaks_parity(self):
        R = rotation_about("z", Fraction(4, 5), Fraction(3, 5))
        Q = R.apply(SpherePoint(1, 0, 0, 1))
        assert Q == SpherePoint(4, 3, 0, 5)
        assert colour3(Q) == Colour3.WHITE

    def test_not_a_rotation(self):
        with pytest.raises(RotationError):
            ExactRotation(((1, 0, 0), (0, 1, 0), (0, 0, -1)))
        with pytest.raises(RotationError):
            ExactRotation(((2, 0, 0), (0, 1, 0), (0, 0, 1)))
        with pytest.raises(RotationError):
            rotation_about("z", Fraction(1, 2), Fraction(1, 2))

    def test_preserves_colour_everywhere(self):
        Rz, Ry = rotation_z(), rotation_y()
        for P in enum_points("quadruple", 9):
            assert colour3(Rz.apply(P)) == colour3(P)
            assert colour3(Ry.apply(P)) == colour3(P)


class TestOrbit:
    """Tests for rotation orbits."""

    def test_single_point(self):
        start = SpherePoint(1, 0, 0, 1)
        assert orbit(rotation_z(), start, 1) == [(start, Colour3.RED)]

    def test_z_orbit_red(self):
        steps = orbit(rotation_z(), SpherePoint(1, 0, 0, 1), 200)
        assert len(steps) == 200
        assert all(c == Colour3.RED for _, c in steps)
        assert steps[1][0] == SpherePoint(3, 4, 0, 5)
        # The angle is not a rational multiple of pi, so the orbit never repeats
        assert len({P for P, _ in steps}) == 200

    def test_y_orbits_of_z_orbit_red(self):
        Ry = rotation_y()
        for P, _ in orbit(rotation_z(), SpherePoint(1, 0, 0, 1), 20):
            assert all(c == Colour3.RED for _, c in orbit(Ry, P, 20))

    def test_bad_length(self):
        with pytest.raises(ValueError):
            orbit(rotation_z(), SpherePoint(1, 0, 0, 1), 0)


class TestCoverage:
    """Tests for coverage grids."""

    def test_quadrants_covered(self):
        steps = orbit(rotation_z(), SpherePoint(1, 0, 0, 1), 50)
        report = coverage((P for P, _ in steps), CoverageGrid.equator(4))
        assert report.empty_cells == 0
        assert sum(report.counts) == 50
        assert report.skipped_points == 0

    def test_equator_1000_point_orbit_fills_100_cells(self):
        steps = orbit(rotation_z(), SpherePoint(1, 0, 0, 1), 1000)
        report = coverage((P for P, _ in steps), CoverageGrid.equator(100))
        assert report.empty_cells == 0

    def test_empty_stream(self):
        report = coverage([], CoverageGrid.sphere(3, 4))
        assert report.counts == [0] * 12
        assert report.empty_cells == 12
        assert report.shape == [3, 4]

    def test_off_equator_points_skipped(self):
        report = coverage([SpherePoint(0, 0, 1, 1), SpherePoint(1, 0, 0, 1)], CoverageGrid.equator(4))
        assert report.skipped_points == 1
        assert report.counts == [1, 0, 0, 0]

    def test_sphere_grid_counts_everything(self):
        points = list(enum_points("stereo", 6))
        report = coverage(points, CoverageGrid.sphere(6, 6))
        assert sum(report.counts) == len(points)
        assert report.total_points == len(points)

    def test_bad_grid(self):
        with pytest.raises(ValueError):
            CoverageGrid.equator(0)


class TestCircleScan:
    """Tests for the monochromatic circle dichotomy."""

    def test_u_equals_v(self):
        u = SpherePoint(1, 2, 2, 3)
        scan = circle_scan(u, u, 5)
        assert [P for P, _ in scan.points] == [u]
        assert scan.points[0][1] == Colour3.RED

    def test_same_colour_circle(self):
        scan = circle_scan(SpherePoint(1, 2, 2, 3), SpherePoint(3, 4, 0, 5), 60)
        assert scan.form_parity_odd
        assert SpherePoint(3, 4, 0, 5) in [P for P, _ in scan.points]
        assert scan.all_match_u

    def test_different_colour_circle(self):
        scan = circle_scan(SpherePoint(1, 2, 2, 3), SpherePoint(2, 1, -2, 3), 60)
        assert not scan.form_parity_odd
        assert len(scan.points) > 1
        assert scan.none_match_u

    def test_antipodal_rejected(self):
        u = SpherePoint(1, 2, 2, 3)
        with pytest.raises(CircleError):
            circle_scan(u, antipode(u), 5)
