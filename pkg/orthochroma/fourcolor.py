# Four Colouring
"""
An explicit proper 4-colouring of the whole sphere, reduced to a lookup on
the 26 sign patterns of nonzero vectors.

Cells:
- Axis: two zero coordinates (the six axis points)
- Arc: one zero coordinate (quadrant arcs of the three coordinate great circles)
- Octant: no zero coordinate (eight open octants)

Orthogonality between two cells depends only on their sign patterns, so the
colouring is proper iff no pair of patterns that admits an orthogonal pair of
vectors shares a colour. `verify_table` checks all 26 x 26 ordered pairs.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Optional, Sequence

import numpy as np

from orthochroma.models import TableCertificate, TableViolation
from orthochroma.numtheory import QSqrt2


logger = logging.getLogger(__name__)


# =============================================================================
# Exceptions
# =============================================================================

class FourColourError(Exception):
    """Base exception for four colouring errors."""
    pass


class ZeroPatternError(FourColourError, ValueError):
    """Raised when the zero vector is classified."""
    pass


class UnreliableClassificationError(FourColourError, ValueError):
    """Raised when a float vector is too short to classify against the tolerance."""
    pass


# =============================================================================
# Types
# =============================================================================

class Colour4(str, Enum):
    """The four colours of the sphere colouring."""
    RED = "red"
    WHITE = "white"
    BLACK = "black"
    BLUE = "blue"

    @property
    def label(self) -> str:
        return self.value.capitalize()


class CellKind(str, Enum):
    AXIS = "axis"
    ARC = "arc"
    OCTANT = "octant"


class OrthoClass(str, Enum):
    """Whether vectors with two given sign patterns can be orthogonal."""
    ALWAYS = "always"      # disjoint supports
    POSSIBLE = "possible"  # products of both signs: magnitudes can cancel
    NEVER = "never"        # inner product sign-definite


_SIGN_CHARS = {-1: "-", 0: "0", 1: "+"}
_CHAR_SIGNS = {v: k for k, v in _SIGN_CHARS.items()}


@dataclass(frozen=True, slots=True)
class SignPattern:
    """Coordinate-wise signs (-1, 0, 1) of a nonzero vector."""
    signs: tuple[int, int, int]

    def __post_init__(self) -> None:
        if len(self.signs) != 3 or any(s not in (-1, 0, 1) for s in self.signs):
            raise FourColourError(f"Invalid sign pattern {self.signs!r}")
        if not any(self.signs):
            raise ZeroPatternError("(0,0,0) is not a sign pattern of a nonzero vector")

    @classmethod
    def parse(cls, text: str) -> "SignPattern":
        """Build from a string such as "+-0"."""
        if len(text) != 3 or any(ch not in _CHAR_SIGNS for ch in text):
            raise FourColourError(f"Invalid sign pattern string {text!r}")
        return cls(tuple(_CHAR_SIGNS[ch] for ch in text))

    @property
    def kind(self) -> CellKind:
        zeros = self.signs.count(0)
        if zeros == 2:
            return CellKind.AXIS
        return CellKind.ARC if zeros == 1 else CellKind.OCTANT

    def negate(self) -> "SignPattern":
        return SignPattern(tuple(-s for s in self.signs))

    def __str__(self) -> str:
        return "".join(_SIGN_CHARS[s] for s in self.signs)


ALL_PATTERNS: tuple[SignPattern, ...] = tuple(
    SignPattern(signs)
    for signs in itertools.product((1, 0, -1), repeat=3)
    if any(signs)
)


# Complete table. Arcs take the two colours of the axis points at their ends,
# quadrant by quadrant; lower octants copy their antipodal upper octant.
COLOUR4_TABLE: dict[str, Colour4] = {
    # Axes
    "+00": Colour4.RED,
    "-00": Colour4.RED,
    "0+0": Colour4.WHITE,
    "0-0": Colour4.WHITE,
    "00+": Colour4.BLACK,
    "00-": Colour4.BLACK,

    # z = 0 circle
    "++0": Colour4.RED,
    "-+0": Colour4.WHITE,
    "--0": Colour4.RED,
    "+-0": Colour4.WHITE,

    # y = 0 circle
    "+0+": Colour4.RED,
    "-0+": Colour4.BLACK,
    "-0-": Colour4.RED,
    "+0-": Colour4.BLACK,

    # x = 0 circle
    "0++": Colour4.WHITE,
    "0-+": Colour4.BLACK,
    "0--": Colour4.WHITE,
    "0+-": Colour4.BLACK,

    # Octants, z > 0
    "+++": Colour4.RED,
    "-++": Colour4.WHITE,
    "--+": Colour4.BLACK,
    "+-+": Colour4.BLUE,

    # Octants, z < 0
    "---": Colour4.RED,
    "+--": Colour4.WHITE,
    "++-": Colour4.BLACK,
    "-+-": Colour4.BLUE,
}

DEFAULT_TOLERANCE = 1e-9


# =============================================================================
# Classification
# =============================================================================

def _exact_sign(value) -> int:
    if isinstance(value, QSqrt2):
        return value.sign()
    return (value > 0) - (value < 0)


def sign_pattern(v: Sequence) -> SignPattern:
    """
    Exact sign pattern of a nonzero vector of ints, Fractions or QSqrt2 values.

    Raises:
        ZeroPatternError: If v is the zero vector
    """
    if len(v) != 3:
        raise FourColourError(f"Expected 3 coordinates, got {len(v)}")
    return SignPattern(tuple(_exact_sign(c) for c in v))


def colour4(pattern: SignPattern, table: Optional[Mapping[str, Colour4]] = None) -> Colour4:
    """Colour of a cell from the lookup table."""
    table = COLOUR4_TABLE if table is None else table
    return table[str(pattern)]


def colour4_float(v: Sequence[float], tol: float = DEFAULT_TOLERANCE) -> Colour4:
    """
    Colour of a floating point vector.

    Coordinates with |c| <= tol snap to zero, the rest keep their sign.

    Raises:
        UnreliableClassificationError: If |v| < 10 * tol
    """
    if tol < 0:
        raise ValueError(f"Tolerance must be nonnegative, got {tol}")
    arr = np.asarray(v, dtype=float)
    if arr.shape != (3,):
        raise FourColourError(f"Expected 3 coordinates, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)) or np.linalg.norm(arr) < 10 * tol:
        raise UnreliableClassificationError(
            f"Vector {arr.tolist()} is too short to classify at tolerance {tol}"
        )
    signs = np.where(np.abs(arr) <= tol, 0, np.sign(arr)).astype(int)
    if not signs.any():
        raise UnreliableClassificationError(f"Every coordinate of {arr.tolist()} snaps to zero")
    return colour4(SignPattern(tuple(int(s) for s in signs)))


def ortho_class(p1: SignPattern, p2: SignPattern) -> OrthoClass:
    """Classify whether vectors with these patterns can be orthogonal."""
    products = {a * b for a, b in zip(p1.signs, p2.signs)}
    if products == {0}:
        return OrthoClass.ALWAYS
    if 1 in products and -1 in products:
        return OrthoClass.POSSIBLE
    return OrthoClass.NEVER


# =============================================================================
# Certificate
# =============================================================================

def verify_table(table: Optional[Mapping[str, Colour4]] = None) -> TableCertificate:
    """
    Check every ordered pair of sign patterns against the colouring.

    Whenever vectors of the two patterns can be orthogonal (ALWAYS or
    POSSIBLE) their colours must differ. A passing certificate proves the
    colouring proper on the whole sphere.

    Args:
        table: Pattern string -> colour; defaults to COLOUR4_TABLE

    Returns:
        TableCertificate listing every checked constraint and any violations
    """
    table = COLOUR4_TABLE if table is None else table
    constraints: list[str] = []
    violations: list[TableViolation] = []
    pairs = 0

    for p1, p2 in itertools.product(ALL_PATTERNS, repeat=2):
        pairs += 1
        relation = ortho_class(p1, p2)
        if relation == OrthoClass.NEVER:
            continue
        constraints.append(f"{p1}|{p2}:{relation.value}")
        c1, c2 = colour4(p1, table), colour4(p2, table)
        if c1 == c2:
            violations.append(TableViolation(
                first=str(p1),
                second=str(p2),
                relation=relation.value,
                colour=c1.value,
            ))

    if violations:
        logger.warning(f"Four colouring table has {len(violations)} violated pairs")

    return TableCertificate(
        passed=not violations,
        pairs_checked=pairs,
        constraints_checked=len(constraints),
        constraints=constraints,
        violations=violations,
        antipodal=is_antipodal(table),
    )


def is_antipodal(table: Optional[Mapping[str, Colour4]] = None) -> bool:
    """True when every pattern has the colour of its negation."""
    table = COLOUR4_TABLE if table is None else table
    return all(colour4(p, table) == colour4(p.negate(), table) for p in ALL_PATTERNS)


def table_as_json(table: Optional[Mapping[str, Colour4]] = None) -> dict[str, str]:
    """Pattern string -> colour name, in canonical pattern order."""
    table = COLOUR4_TABLE if table is None else table
    return {str(p): colour4(p, table).value for p in ALL_PATTERNS}
