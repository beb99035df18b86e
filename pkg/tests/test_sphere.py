# Tests for Sphere Points
"""Tests for orthochroma/sphere.py"""

from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from orthochroma.numtheory import QSqrt2
from orthochroma.projective import Colour3, ZeroVectorError, normalize
from orthochroma.sphere import (
    NORTH_POLE,
    AlgSpherePoint,
    InvalidSpherePointError,
    SpherePoint,
    alg_orthogonal,
    alg_point,
    antipode,
    colour3,
    from_projective,
    inner,
    sphere_point_from_rationals,
    stereo_inverse,
    stereo_project,
)


plane_coords = st.fractions(min_value=-50, max_value=50, max_denominator=50)


class TestSpherePoint:
    """Tests for SpherePoint construction and invariants."""

    def test_valid_points(self):
        P = SpherePoint(1, 2, 2, 3)
        assert P.triple == (1, 2, 2)
        assert P.unit() == (Fraction(1, 3), Fraction(2, 3), Fraction(2, 3))
        assert str(P) == "(1,2,2;3)"

    @pytest.mark.parametrize("quad", [
        (1, 2, 2, 4),     # off the sphere
        (2, 4, 4, 6),     # not primitive
        (0, 0, 1, -1),    # negative denominator
        (0, 0, 0, 0),
    ])
    def test_invalid_points(self, quad):
        with pytest.raises(InvalidSpherePointError):
            SpherePoint(*quad)

    def test_from_rationals(self):
        P = sphere_point_from_rationals(Fraction(3, 5), Fraction(4, 5), 0)
        assert P == SpherePoint(3, 4, 0, 5)
        with pytest.raises(InvalidSpherePointError):
            sphere_point_from_rationals(Fraction(1, 2), 0, 0)

    def test_json(self):
        P = SpherePoint(-7, 24, 0, 25)
        assert P.to_json() == {"a": "-7", "b": "24", "c": "0", "d": "25"}
        assert SpherePoint.from_json(P.to_json()) == P


class TestFromProjective:
    """Tests for rational points of integer directions."""

    def test_square_norm(self):
        assert from_projective(normalize(1, 2, 2)) == SpherePoint(1, 2, 2, 3)
        assert from_projective(normalize(0, 0, 1)) == SpherePoint(0, 0, 1, 1)

    def test_non_square_norm(self):
        assert from_projective(normalize(1, 1, 0)) is None

    def test_raw_triples_keep_sign(self):
        assert from_projective((0, 0, -2)) == SpherePoint(0, 0, -1, 1)
        assert from_projective([-3, -4, 0]) == SpherePoint(-3, -4, 0, 5)

    def test_zero_vector(self):
        with pytest.raises(ZeroVectorError):
            from_projective((0, 0, 0))


class TestColour3:
    """Tests for the parity 3-colouring."""

    def test_examples(self):
        assert colour3(SpherePoint(3, 4, 0, 5)) == Colour3.RED
        assert colour3(SpherePoint(2, 2, 1, 3)) == Colour3.BLACK
        assert colour3(SpherePoint(1, 0, 0, 1)) == Colour3.RED
        assert colour3(SpherePoint(2, 1, -2, 3)) == Colour3.WHITE

    def test_antipodes_share_colour(self):
        P = SpherePoint(1, 2, 2, 3)
        assert antipode(P) == SpherePoint(-1, -2, -2, 3)
        assert colour3(antipode(P)) == colour3(P) == Colour3.RED
        assert colour3(antipode(NORTH_POLE)) == Colour3.BLACK
        assert antipode(antipode(P)) == P

    def test_cycle_permutes_colours(self):
        red, white, black = SpherePoint(1, 2, 2, 3), SpherePoint(2, 1, 2, 3), SpherePoint(2, 2, 1, 3)
        assert colour3(red.cycle()) == Colour3.BLACK
        assert colour3(white.cycle()) == Colour3.RED
        assert colour3(black.cycle()) == Colour3.WHITE


class TestInner:
    """Tests for exact inner products."""

    def test_orthogonal(self):
        value, form = inner(SpherePoint(1, 2, 2, 3), SpherePoint(2, 1, -2, 3))
        assert value == 0 and form == 0

    def test_odd_form_same_colour(self):
        value, form = inner(SpherePoint(1, 2, 2, 3), SpherePoint(3, 4, 0, 5))
        assert form == 11
        assert value == Fraction(11, 15)

    def test_self_inner(self):
        P = SpherePoint(2, 3, 6, 7)
        assert inner(P, P) == (1, 49)


class TestStereographic:
    """Tests for stereographic projection from the north pole."""

    def test_inverse_examples(self):
        assert stereo_inverse(0, 0) == SpherePoint(0, 0, -1, 1)
        assert stereo_inverse(1, 0) == SpherePoint(1, 0, 0, 1)
        assert stereo_inverse(Fraction(1, 2), 0) == SpherePoint(4, 0, -3, 5)

    def test_project_examples(self):
        assert stereo_project(SpherePoint(0, 0, -1, 1)) == (0, 0)
        assert stereo_project(NORTH_POLE) is None
        assert stereo_project(SpherePoint(4, 0, -3, 5)) == (Fraction(1, 2), 0)

    @given(plane_coords, plane_coords)
    def test_round_trip_from_plane(self, u, v):
        assert stereo_project(stereo_inverse(u, v)) == (u, v)

    @given(plane_coords, plane_coords)
    def test_round_trip_from_sphere(self, u, v):
        P = stereo_inverse(u, v)
        assert stereo_inverse(*stereo_project(P)) == P


class TestAlgPoint:
    """Tests for Q(sqrt 2) unit vectors."""

    def test_sqrt2_direction(self):
        half = QSqrt2(0, Fraction(1, 2))
        P = alg_point((1, 1, 0))
        assert P.coords == (half, half, QSqrt2(0))
        assert not P.is_rational
        assert P.to_sphere_point() is None

    def test_rational_direction(self):
        P = alg_point(normalize(1, 2, 2))
        assert P.is_rational
        assert P.to_sphere_point() == SpherePoint(1, 2, 2, 3)

    def test_unrepresentable(self):
        assert alg_point((1, 1, 1)) is None

    def test_orthogonality(self):
        a, b = alg_point((1, 1, 0)), alg_point((-1, 1, 0))
        assert alg_orthogonal(a, b)
        assert alg_orthogonal(a, alg_point((0, 0, 1)))
        assert not alg_orthogonal(a, a)

    def test_json(self):
        P = alg_point((-7, 0, 1))
        assert AlgSpherePoint.from_json(P.to_json()) == P

    def test_non_unit_rejected(self):
        with pytest.raises(InvalidSpherePointError):
            AlgSpherePoint(QSqrt2(1), QSqrt2(1), QSqrt2(0))

    @given(
        st.integers(min_value=-30, max_value=30),
        st.integers(min_value=-30, max_value=30),
        st.integers(min_value=-30, max_value=30),
    )
    def test_exact_unit_norm(self, x, y, z):
        assume((x, y, z) != (0, 0, 0))
        P = alg_point((x, y, z))
        if P is not None:
            assert P.x * P.x + P.y * P.y + P.z * P.z == 1
