# Projective Plane Colouring
"""
Primitive integer representatives of rational projective points and the
3-colouring of the rational projective plane induced by a p-adic valuation.

With e(t) the p-adic exponent of a coordinate (e(0) = +inf), a point (x, y, z) is:
    red    if e(x) < e(y) and e(x) < e(z)
    white  if e(x) >= e(y) and e(y) < e(z)
    black  if e(x) >= e(z) and e(y) >= e(z)
Exactly one of the three conditions holds for every nonzero triple.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence, Union

from orthochroma.numtheory import ValExponent, p_valuation, require_prime


logger = logging.getLogger(__name__)


# =============================================================================
# Exceptions
# =============================================================================

class ProjectiveError(Exception):
    """Base exception for projective plane errors."""
    pass


class ZeroVectorError(ProjectiveError, ValueError):
    """Raised when (0, 0, 0) is given as a projective point."""
    pass


# =============================================================================
# Types
# =============================================================================

class Colour3(str, Enum):
    """The three colours of a projective plane colouring."""
    RED = "red"
    WHITE = "white"
    BLACK = "black"

    @property
    def label(self) -> str:
        return self.value.capitalize()


@dataclass(frozen=True, slots=True)
class PrimitiveTriple:
    """
    Integer projective point (x, y, z) with gcd 1 whose first nonzero
    coordinate is positive. Build through `normalize`.
    """
    x: int
    y: int
    z: int

    def __post_init__(self) -> None:
        coords = (self.x, self.y, self.z)
        if not any(coords):
            raise ZeroVectorError("(0, 0, 0) is not a projective point")
        if math.gcd(*coords) != 1:
            raise ProjectiveError(f"{coords} is not primitive")
        first = next(c for c in coords if c != 0)
        if first < 0:
            raise ProjectiveError(f"{coords} is not sign-normalized")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)

    def dot(self, other: "PrimitiveTriple") -> int:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def __str__(self) -> str:
        return f"({self.x},{self.y},{self.z})"


TripleLike = Union[PrimitiveTriple, Sequence[int]]


def reduce_triple(x: int, y: int, z: int) -> tuple[int, int, int]:
    """Divide by the gcd, keeping signs. Rejects the zero vector."""
    g = math.gcd(x, y, z)
    if g == 0:
        raise ZeroVectorError("(0, 0, 0) is not a projective point")
    return (x // g, y // g, z // g)


def normalize(x: int, y: int, z: int) -> PrimitiveTriple:
    """
    Canonical primitive representative of the projective point (x : y : z).

    Args:
        x, y, z: Integers, not all zero

    Returns:
        PrimitiveTriple with gcd 1 and positive first nonzero coordinate

    Raises:
        ZeroVectorError: If all coordinates are zero
    """
    x, y, z = reduce_triple(x, y, z)
    first = next(c for c in (x, y, z) if c != 0)
    if first < 0:
        x, y, z = -x, -y, -z
    return PrimitiveTriple(x, y, z)


def as_integer_triple(t: TripleLike) -> tuple[int, int, int]:
    """Coordinates of a PrimitiveTriple or a raw integer 3-sequence."""
    if isinstance(t, PrimitiveTriple):
        return t.as_tuple()
    x, y, z = t
    return (int(x), int(y), int(z))


# =============================================================================
# Valuation Colouring
# =============================================================================

def rule_matches(ex: ValExponent, ey: ValExponent, ez: ValExponent) -> tuple[bool, bool, bool]:
    """Which of the (red, white, black) conditions hold for the exponents."""
    red = ex < ey and ex < ez
    white = ex >= ey and ey < ez
    black = ex >= ez and ey >= ez
    return red, white, black


def colour_of_coordinates(x: int, y: int, z: int, p: int) -> Colour3:
    """
    Valuation colour of (x, y, z) evaluated directly, without normalizing.

    Scaling by k adds e(k) to every exponent, so the result is the same for
    every nonzero multiple of a triple.
    """
    if x == 0 and y == 0 and z == 0:
        raise ZeroVectorError("(0, 0, 0) has no colour")
    ex, ey, ez = (p_valuation(c, p) for c in (x, y, z))
    red, white, black = rule_matches(ex, ey, ez)
    if red:
        return Colour3.RED
    if white:
        return Colour3.WHITE
    if black:
        return Colour3.BLACK
    raise ProjectiveError(f"No colour rule matched ({x},{y},{z}) at p={p}")


def colour_valuation(t: PrimitiveTriple, p: int) -> Colour3:
    """
    Colour of a primitive projective point under the p-adic valuation.

    Raises:
        NotPrimeError: If p is not prime
    """
    return colour_of_coordinates(t.x, t.y, t.z, p)


# =============================================================================
# Lines
# =============================================================================

def line_scan(a: int, b: int, c: int, H: int, p: int) -> list[tuple[PrimitiveTriple, Colour3]]:
    """
    All primitive points of height <= H on the line ax + by + cz = 0, coloured.

    One coordinate is solved for from the other two, so the scan costs
    (2H + 1)^2 steps. Output is sorted by coordinates.

    Args:
        a, b, c: Line coefficients, not all zero
        H: Max-norm bound on the primitive representative
        p: Prime for the valuation colouring

    Returns:
        Sorted list of (point, colour)

    Raises:
        ZeroVectorError: If (a, b, c) == (0, 0, 0)
        ValueError: If H < 1
    """
    if a == 0 and b == 0 and c == 0:
        raise ZeroVectorError("(0, 0, 0) does not define a line")
    if H < 1:
        raise ValueError(f"Height bound must be >= 1, got {H}")
    require_prime(p)

    # Solve for the last coordinate with a nonzero coefficient
    coeffs = (a, b, c)
    solve = max(i for i in range(3) if coeffs[i] != 0)
    free = [i for i in range(3) if i != solve]

    found: set[PrimitiveTriple] = set()
    for u in range(-H, H + 1):
        for v in range(-H, H + 1):
            rest = coeffs[free[0]] * u + coeffs[free[1]] * v
            if rest % coeffs[solve] != 0:
                continue
            w = -rest // coeffs[solve]
            if abs(w) > H:
                continue
            point = [0, 0, 0]
            point[free[0]], point[free[1]], point[solve] = u, v, w
            if not any(point):
                continue
            found.add(normalize(*point))

    result = [(t, colour_valuation(t, p)) for t in sorted(found, key=PrimitiveTriple.as_tuple)]
    logger.debug(f"Line ({a},{b},{c}) H={H} p={p}: {len(result)} points")
    return result


def line_colours(scan: Iterable[tuple[PrimitiveTriple, Colour3]]) -> set[Colour3]:
    """Set of colours appearing in a line scan."""
    return {colour for _, colour in scan}
