# Sphere Points
"""
Exact points on the unit sphere.

- SpherePoint: rational unit vector (a/d, b/d, c/d) stored as a primitive
  quadruple with a^2 + b^2 + c^2 = d^2. Exactly one of a, b, c is odd and d
  is odd; both facts are checked at construction.
- AlgSpherePoint: unit vector with coordinates in Q(sqrt 2), used for the
  directions of integer triples whose squared norm is 2s^2.

The parity 3-colouring colours a SpherePoint by the position of its odd
coordinate. Two points share a colour exactly when aa' + bb' + cc' is odd,
so orthogonal rational points never share a colour.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from orthochroma.numtheory import QSqrt2, RationalLike, int_sqrt_exact
from orthochroma.projective import Colour3, TripleLike, as_integer_triple, reduce_triple


# =============================================================================
# Exceptions
# =============================================================================

class SphereError(Exception):
    """Base exception for sphere point errors."""
    pass


class InvalidSpherePointError(SphereError, ValueError):
    """Raised when a quadruple does not describe a primitive unit vector."""
    pass


# =============================================================================
# Rational Points
# =============================================================================

@dataclass(frozen=True, slots=True)
class SpherePoint:
    """Primitive Pythagorean quadruple (a, b, c; d) for the point (a/d, b/d, c/d)."""
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        a, b, c, d = self.a, self.b, self.c, self.d
        if d <= 0:
            raise InvalidSpherePointError(f"Denominator must be positive, got {d}")
        if a * a + b * b + c * c != d * d:
            raise InvalidSpherePointError(f"({a},{b},{c};{d}) is not on the unit sphere")
        if math.gcd(a, b, c) != 1:
            raise InvalidSpherePointError(f"({a},{b},{c};{d}) is not primitive")
        # Squares are 0 or 1 mod 4, so these follow from the two checks above
        if d % 2 != 1 or (a % 2) + (b % 2) + (c % 2) != 1:
            raise InvalidSpherePointError(f"({a},{b},{c};{d}) breaks the one-odd-coordinate parity law")

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def unit(self) -> tuple[Fraction, Fraction, Fraction]:
        return (Fraction(self.a, self.d), Fraction(self.b, self.d), Fraction(self.c, self.d))

    def to_alg(self) -> "AlgSpherePoint":
        return AlgSpherePoint(*(QSqrt2(x) for x in self.unit()))

    def cycle(self) -> "SpherePoint":
        """The image under (x, y, z) -> (y, z, x)."""
        return SpherePoint(self.b, self.c, self.a, self.d)

    def to_json(self) -> dict[str, str]:
        return {"a": str(self.a), "b": str(self.b), "c": str(self.c), "d": str(self.d)}

    @classmethod
    def from_json(cls, data: dict) -> "SpherePoint":
        return cls(int(data["a"]), int(data["b"]), int(data["c"]), int(data["d"]))

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c};{self.d})"


NORTH_POLE = SpherePoint(0, 0, 1, 1)


def sphere_point_from_rationals(x: RationalLike, y: RationalLike, z: RationalLike) -> SpherePoint:
    """
    Primitive quadruple of an exact rational unit vector.

    Raises:
        InvalidSpherePointError: If the vector is not a unit vector
    """
    x, y, z = Fraction(x), Fraction(y), Fraction(z)
    lcm = math.lcm(x.denominator, y.denominator, z.denominator)
    a, b, c = (int(t * lcm) for t in (x, y, z))
    g = math.gcd(a, b, c)
    if g == 0:
        raise InvalidSpherePointError("The zero vector is not on the unit sphere")
    # a^2 + b^2 + c^2 = lcm^2 forces g | lcm
    if lcm % g:
        raise InvalidSpherePointError(f"({x},{y},{z}) is not a unit vector")
    return SpherePoint(a // g, b // g, c // g, lcm // g)


def from_projective(t: TripleLike) -> Optional[SpherePoint]:
    """
    Rational sphere point in the direction of an integer triple.

    A direction carries a rational unit vector exactly when
    x^2 + y^2 + z^2 is a perfect square. Raw triples keep their signs.

    Returns:
        SpherePoint, or None when the squared norm is not a square
    """
    x, y, z = reduce_triple(*as_integer_triple(t))
    d = int_sqrt_exact(x * x + y * y + z * z)
    if d is None:
        return None
    return SpherePoint(x, y, z, d)


def colour3(P: SpherePoint) -> Colour3:
    """Red if a is odd, White if b is odd, Black if c is odd."""
    if P.a % 2:
        return Colour3.RED
    if P.b % 2:
        return Colour3.WHITE
    return Colour3.BLACK


def inner(P: SpherePoint, Q: SpherePoint) -> tuple[Fraction, int]:
    """
    Inner product of two rational unit vectors.

    Returns:
        (exact rational value, integer form aa' + bb' + cc')
    """
    form = P.a * Q.a + P.b * Q.b + P.c * Q.c
    return Fraction(form, P.d * Q.d), form


def antipode(P: SpherePoint) -> SpherePoint:
    return SpherePoint(-P.a, -P.b, -P.c, P.d)


# =============================================================================
# Stereographic Projection (from the pole (0, 0, 1) onto z = 0)
# =============================================================================

def stereo_inverse(u: RationalLike, v: RationalLike) -> SpherePoint:
    """
    Sphere point over the plane point (u, v).

    (u, v) -> (2u, 2v, u^2 + v^2 - 1) / (1 + u^2 + v^2). The north pole is
    never hit.
    """
    u, v = Fraction(u), Fraction(v)
    s = u * u + v * v
    return sphere_point_from_rationals(2 * u / (1 + s), 2 * v / (1 + s), (s - 1) / (1 + s))


def stereo_project(P: SpherePoint) -> Optional[tuple[Fraction, Fraction]]:
    """
    Plane point under P: (a, b) / (d - c). None for the north pole.
    """
    if P.d == P.c:
        return None
    return Fraction(P.a, P.d - P.c), Fraction(P.b, P.d - P.c)


# =============================================================================
# Q(sqrt 2) Points
# =============================================================================

@dataclass(frozen=True, slots=True)
class AlgSpherePoint:
    """Unit vector with coordinates in Q(sqrt 2)."""
    x: QSqrt2
    y: QSqrt2
    z: QSqrt2

    def __post_init__(self) -> None:
        for name in ("x", "y", "z"):
            object.__setattr__(self, name, QSqrt2.coerce(getattr(self, name)))
        if self.x * self.x + self.y * self.y + self.z * self.z != QSqrt2(1):
            raise InvalidSpherePointError(f"{self} is not a unit vector")

    @property
    def coords(self) -> tuple[QSqrt2, QSqrt2, QSqrt2]:
        return (self.x, self.y, self.z)

    @property
    def is_rational(self) -> bool:
        return all(c.is_rational for c in self.coords)

    def to_sphere_point(self) -> Optional[SpherePoint]:
        if not self.is_rational:
            return None
        return sphere_point_from_rationals(self.x.a, self.y.a, self.z.a)

    def to_json(self) -> dict[str, dict[str, str]]:
        return {"x": self.x.to_json(), "y": self.y.to_json(), "z": self.z.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "AlgSpherePoint":
        return cls(*(QSqrt2.from_json(data[k]) for k in ("x", "y", "z")))

    def __str__(self) -> str:
        return f"({self.x}, {self.y}, {self.z})"


def alg_point(t: TripleLike) -> Optional[AlgSpherePoint]:
    """
    Unit vector t / |t| with exact Q(sqrt 2) coordinates.

    sqrt(n) lies in Q(sqrt 2) exactly when n = s^2 or n = 2s^2, so only
    those directions are representable.

    Returns:
        AlgSpherePoint, or None when |t|^2 is neither s^2 nor 2s^2
    """
    x, y, z = reduce_triple(*as_integer_triple(t))
    n = x * x + y * y + z * z
    s = int_sqrt_exact(n)
    if s is not None:
        return AlgSpherePoint(*(QSqrt2(Fraction(c, s)) for c in (x, y, z)))
    if n % 2 == 0:
        s = int_sqrt_exact(n // 2)
        if s is not None:
            # c / (s * sqrt 2) = (c / 2s) * sqrt 2
            return AlgSpherePoint(*(QSqrt2(0, Fraction(c, 2 * s)) for c in (x, y, z)))
    return None


def alg_inner(P: AlgSpherePoint, Q: AlgSpherePoint) -> QSqrt2:
    return P.x * Q.x + P.y * Q.y + P.z * Q.z


def alg_orthogonal(P: AlgSpherePoint, Q: AlgSpherePoint) -> bool:
    """Exact orthogonality test in Q(sqrt 2)."""
    return alg_inner(P, Q).is_zero()
