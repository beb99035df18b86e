# Tests for Projective Colouring
"""Tests for orthochroma/projective.py"""

import pytest
from hypothesis import assume, given, strategies as st

from orthochroma.numtheory import NotPrimeError, p_valuation
from orthochroma.projective import (
    Colour3,
    PrimitiveTriple,
    ProjectiveError,
    ZeroVectorError,
    colour_of_coordinates,
    colour_valuation,
    line_colours,
    line_scan,
    normalize,
    rule_matches,
)


coords = st.integers(min_value=-10**6, max_value=10**6)
primes = st.sampled_from([2, 3, 5, 7, 11, 13])


class TestNormalize:
    """Tests for canonical projective representatives."""

    def test_divides_gcd(self):
        assert normalize(2, 4, 6) == PrimitiveTriple(1, 2, 3)

    def test_sign_normalization(self):
        assert normalize(-1, 0, 0) == PrimitiveTriple(1, 0, 0)
        assert normalize(0, -3, 3) == PrimitiveTriple(0, 1, -1)

    def test_zero_vector(self):
        with pytest.raises(ZeroVectorError):
            normalize(0, 0, 0)

    def test_direct_construction_is_validated(self):
        with pytest.raises(ProjectiveError):
            PrimitiveTriple(2, 4, 6)
        with pytest.raises(ProjectiveError):
            PrimitiveTriple(-1, 2, 3)

    @given(coords, coords, coords, st.integers(min_value=1, max_value=1000))
    def test_idempotent_and_scale_free(self, x, y, z, k):
        assume((x, y, z) != (0, 0, 0))
        t = normalize(x, y, z)
        assert normalize(*t.as_tuple()) == t
        assert normalize(k * x, k * y, k * z) == t
        assert normalize(-x, -y, -z) == t


class TestColourValuation:
    """Tests for the p-adic valuation colouring."""

    def test_examples(self):
        assert colour_valuation(normalize(1, 1, 0), 3) == Colour3.WHITE
        assert colour_valuation(normalize(-7, 0, 1), 2) == Colour3.BLACK
        assert colour_valuation(normalize(1, 0, 0), 2) == Colour3.RED

    def test_counterexample_pairs(self):
        for p in (2, 3, 5, 7, 11):
            assert colour_valuation(normalize(1, 1, 0), p) == Colour3.WHITE
            assert colour_valuation(normalize(-1, 1, 0), p) == Colour3.WHITE
        assert colour_valuation(normalize(1, 0, 7), 2) == Colour3.BLACK
        for p in (2, 3, 5, 7, 11, 13, 97):
            assert colour_valuation(normalize(-1, 3, 1), p) == Colour3.BLACK
            assert colour_valuation(normalize(-5, 2, 1), p) == Colour3.BLACK

    def test_matches_parity_at_two(self):
        # "red if x is odd" style rules at p = 2 on one-odd triples
        assert colour_valuation(normalize(3, 4, 0), 2) == Colour3.RED
        assert colour_valuation(normalize(2, 1, 2), 2) == Colour3.WHITE
        assert colour_valuation(normalize(2, 2, 1), 2) == Colour3.BLACK

    def test_requires_prime(self):
        with pytest.raises(NotPrimeError):
            colour_valuation(normalize(1, 2, 3), 6)

    def test_zero_vector(self):
        with pytest.raises(ZeroVectorError):
            colour_of_coordinates(0, 0, 0, 2)

    @given(coords, coords, coords, primes)
    def test_exactly_one_rule(self, x, y, z, p):
        assume((x, y, z) != (0, 0, 0))
        matches = rule_matches(*(p_valuation(c, p) for c in (x, y, z)))
        assert sum(matches) == 1

    @given(coords, coords, coords, primes, st.integers(min_value=1, max_value=10**4))
    def test_scale_invariance(self, x, y, z, p, k):
        assume((x, y, z) != (0, 0, 0))
        base = colour_of_coordinates(x, y, z, p)
        assert colour_of_coordinates(k * x, k * y, k * z, p) == base
        assert colour_of_coordinates(-k * x, k * y, -k * z, p) == base

    @given(coords, coords, coords, primes)
    def test_sign_flips(self, x, y, z, p):
        assume((x, y, z) != (0, 0, 0))
        base = colour_of_coordinates(x, y, z, p)
        assert colour_of_coordinates(-x, y, z, p) == base
        assert colour_of_coordinates(x, -y, -z, p) == base


class TestLineScan:
    """Tests for scanning a projective line."""

    def test_equator_line_has_no_black(self):
        colours = line_colours(line_scan(0, 0, 1, 2, 2))
        assert colours <= {Colour3.RED, Colour3.WHITE}

    def test_x_zero_line(self):
        scan = dict(line_scan(1, 0, 0, 1, 2))
        assert scan[PrimitiveTriple(0, 1, 0)] == Colour3.WHITE
        assert scan[PrimitiveTriple(0, 0, 1)] == Colour3.BLACK
        assert Colour3.RED not in scan.values()
        assert set(scan) == {
            PrimitiveTriple(0, 1, 0),
            PrimitiveTriple(0, 0, 1),
            PrimitiveTriple(0, 1, 1),
            PrimitiveTriple(0, 1, -1),
        }

    def test_points_lie_on_line_and_sorted(self):
        scan = line_scan(1, 1, 1, 3, 2)
        assert all(t.x + t.y + t.z == 0 for t, _ in scan)
        keys = [t.as_tuple() for t, _ in scan]
        assert keys == sorted(keys)
        assert len(line_colours(scan)) <= 2

    def test_invalid_arguments(self):
        with pytest.raises(ZeroVectorError):
            line_scan(0, 0, 0, 3, 2)
        with pytest.raises(ValueError):
            line_scan(1, 2, 3, 0, 2)
        with pytest.raises(NotPrimeError):
            line_scan(1, 2, 3, 3, 4)

    @given(
        st.integers(min_value=-9, max_value=9),
        st.integers(min_value=-9, max_value=9),
        st.integers(min_value=-9, max_value=9),
        st.sampled_from([2, 3, 5]),
    )
    def test_at_most_two_colours(self, a, b, c, p):
        assume((a, b, c) != (0, 0, 0))
        assert len(line_colours(line_scan(a, b, c, 6, p))) <= 2
