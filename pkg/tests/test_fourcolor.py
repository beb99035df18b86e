# Tests for Four Colouring
"""Tests for orthochroma/fourcolor.py"""

import itertools
from fractions import Fraction

import numpy as np
import pytest

from orthochroma.fourcolor import (
    ALL_PATTERNS,
    COLOUR4_TABLE,
    CellKind,
    Colour4,
    FourColourError,
    OrthoClass,
    SignPattern,
    UnreliableClassificationError,
    ZeroPatternError,
    colour4,
    colour4_float,
    is_antipodal,
    ortho_class,
    sign_pattern,
    table_as_json,
    verify_table,
)
from orthochroma.numtheory import QSqrt2


class TestSignPattern:
    """Tests for sign patterns of exact vectors."""

    def test_all_patterns(self):
        assert len(ALL_PATTERNS) == 26
        assert set(COLOUR4_TABLE) == {str(p) for p in ALL_PATTERNS}
        kinds = [p.kind for p in ALL_PATTERNS]
        assert kinds.count(CellKind.AXIS) == 6
        assert kinds.count(CellKind.ARC) == 12
        assert kinds.count(CellKind.OCTANT) == 8

    def test_exact_vectors(self):
        assert str(sign_pattern((Fraction(1, 3), Fraction(2, 3), Fraction(2, 3)))) == "+++"
        assert str(sign_pattern((0, -1, 0))) == "0-0"
        half = Fraction(1, 2)
        assert str(sign_pattern((QSqrt2(0, half), QSqrt2(0, -half), QSqrt2(0)))) == "+-0"
        assert str(sign_pattern((QSqrt2(3, -2), QSqrt2(1, -1), 0))) == "+-0"

    def test_zero_vector(self):
        with pytest.raises(ZeroPatternError):
            sign_pattern((0, 0, 0))
        with pytest.raises(ZeroPatternError):
            SignPattern.parse("000")

    def test_parse(self):
        assert SignPattern.parse("+-0") == SignPattern((1, -1, 0))
        assert SignPattern.parse("+-0").negate() == SignPattern.parse("-+0")
        with pytest.raises(FourColourError):
            SignPattern.parse("+x0")


class TestColour4:
    """Tests for the table lookup."""

    def test_examples(self):
        assert colour4(SignPattern.parse("00+")) == Colour4.BLACK
        assert colour4(SignPattern.parse("+-+")) == Colour4.BLUE
        assert colour4(SignPattern.parse("-+0")) == Colour4.WHITE

    def test_axes(self):
        assert colour4(SignPattern.parse("+00")) == Colour4.RED
        assert colour4(SignPattern.parse("0-0")) == Colour4.WHITE
        assert colour4(SignPattern.parse("00-")) == Colour4.BLACK

    def test_table_json(self):
        data = table_as_json()
        assert len(data) == 26
        assert data["+-+"] == "blue"
        assert data["-+-"] == "blue"


class TestOrthoClass:
    """Tests for pattern orthogonality classes."""

    def test_examples(self):
        assert ortho_class(SignPattern.parse("+00"), SignPattern.parse("0+0")) == OrthoClass.ALWAYS
        assert ortho_class(SignPattern.parse("+++"), SignPattern.parse("+++")) == OrthoClass.NEVER
        assert ortho_class(SignPattern.parse("+++"), SignPattern.parse("-++")) == OrthoClass.POSSIBLE

    def test_matches_exhaustive_search(self):
        # Every vector with entries in -3..3, bucketed by sign pattern
        buckets = {p: [] for p in ALL_PATTERNS}
        for v in itertools.product(range(-3, 4), repeat=3):
            if any(v):
                buckets[sign_pattern(v)].append(v)

        for p1, p2 in itertools.product(ALL_PATTERNS, repeat=2):
            dots = [
                u[0] * w[0] + u[1] * w[1] + u[2] * w[2]
                for u in buckets[p1] for w in buckets[p2]
            ]
            if all(d == 0 for d in dots):
                expected = OrthoClass.ALWAYS
            elif any(d == 0 for d in dots):
                expected = OrthoClass.POSSIBLE
            else:
                expected = OrthoClass.NEVER
            assert ortho_class(p1, p2) == expected, f"{p1} {p2}"


class TestVerifyTable:
    """Tests for the exhaustive table certificate."""

    def test_table_passes(self):
        cert = verify_table()
        assert cert.passed
        assert cert.pairs_checked == 676
        assert cert.constraints_checked == len(cert.constraints)
        assert cert.violations == []
        assert cert.antipodal
        assert is_antipodal()

    def test_constraint_format(self):
        cert = verify_table()
        assert "+00|0+0:always" in cert.constraints
        assert "+++|-++:possible" in cert.constraints
        assert "+++|+++:possible" not in cert.constraints

    def test_mutated_octant_fails(self):
        table = dict(COLOUR4_TABLE)
        table["+-+"] = Colour4.RED
        cert = verify_table(table)
        assert not cert.passed
        assert any("+-+" in (v.first, v.second) and v.colour == "red" for v in cert.violations)

    def test_broken_antipodal_symmetry_fails(self):
        table = dict(COLOUR4_TABLE)
        table["---"] = Colour4.WHITE
        cert = verify_table(table)
        assert not cert.passed
        assert not cert.antipodal


class TestColour4Float:
    """Tests for the tolerance-based float classifier."""

    def test_examples(self):
        assert colour4_float((0.0, 0.0, 1.0), tol=1e-9) == Colour4.BLACK
        assert colour4_float((1e-12, 0.5, 0.5), tol=1e-9) == Colour4.WHITE
        assert colour4_float((0.3, -0.4, 0.87), tol=1e-9) == Colour4.BLUE

    def test_too_short(self):
        with pytest.raises(UnreliableClassificationError):
            colour4_float((1e-10, 0.0, 0.0), tol=1e-9)

    def test_bad_inputs(self):
        with pytest.raises(ValueError):
            colour4_float((1.0, 0.0, 0.0), tol=-1.0)
        with pytest.raises(FourColourError):
            colour4_float((1.0, 0.0), tol=1e-9)

    def test_random_orthogonal_pairs_differ(self):
        rng = np.random.default_rng(7)
        checked = 0
        for _ in range(2000):
            u = rng.standard_normal(3)
            v = np.cross(u, rng.standard_normal(3))
            if np.min(np.abs(np.concatenate([u, v]))) < 1e-4:
                continue
            assert colour4_float(u) != colour4_float(v)
            checked += 1
        assert checked > 1000
