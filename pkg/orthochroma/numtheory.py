# Number Theory
"""
Exact integer and rational primitives used by every colouring in the package.

This module provides:
1. Exact square roots of nonnegative integers
2. Deterministic primality testing
3. p-adic valuations on Q, stored as exponents (never as floats)
4. Arithmetic in the quadratic field Q(sqrt 2)

Valuations are kept as the exponent n of nu = 2^(-n). A larger nu means a
smaller exponent, so every colouring rule is phrased as an exponent comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Optional, Union


# Arbitrary-precision rationals: gcd-reduced, positive denominator, 0 == 0/1
BigRational = Fraction

RationalLike = Union[int, Fraction]


# =============================================================================
# Exceptions
# =============================================================================

class NumTheoryError(Exception):
    """Base exception for number theory errors."""
    pass


class NegativeInputError(NumTheoryError, ValueError):
    """Raised when a nonnegative integer was required."""
    pass


class NotPrimeError(NumTheoryError, ValueError):
    """Raised when a valuation is requested for a non-prime modulus."""
    pass


class PrimalityRangeError(NumTheoryError, ValueError):
    """Raised when a number is beyond the deterministic primality range."""
    pass


class ZeroInverseError(NumTheoryError, ZeroDivisionError):
    """Raised when inverting zero in Q(sqrt 2)."""
    pass


# =============================================================================
# Constants
# =============================================================================

# Miller-Rabin with these bases is exact for every n below this bound
MILLER_RABIN_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
MILLER_RABIN_LIMIT = 3_317_044_064_679_887_385_961_981


# =============================================================================
# Integer Helpers
# =============================================================================

def int_sqrt_exact(n: int) -> Optional[int]:
    """
    Return the integer square root of n when n is a perfect square.

    Args:
        n: Nonnegative integer

    Returns:
        s with s*s == n, or None when n is not a square

    Raises:
        NegativeInputError: If n < 0
    """
    if n < 0:
        raise NegativeInputError(f"Square root of negative integer {n}")
    s = math.isqrt(n)
    return s if s * s == n else None


def _strong_probable_prime(n: int, base: int, s: int, t: int) -> bool:
    z = pow(base, t, n)
    if z == 1 or z == n - 1:
        return True
    for _ in range(s - 1):
        z = pow(z, 2, n)
        if z == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """
    Deterministic primality test.

    Trial division by the Miller-Rabin bases, then strong probable prime
    tests to every base. Exact for all n below MILLER_RABIN_LIMIT.

    Raises:
        PrimalityRangeError: If n is too large for a deterministic answer
    """
    if n < 2:
        return False
    for p in MILLER_RABIN_BASES:
        if n % p == 0:
            return n == p
    if n >= MILLER_RABIN_LIMIT:
        raise PrimalityRangeError(
            f"{n} exceeds the deterministic Miller-Rabin range"
        )
    s, t = 0, n - 1
    while t % 2 == 0:
        s += 1
        t //= 2
    return all(_strong_probable_prime(n, b, s, t) for b in MILLER_RABIN_BASES)


def require_prime(p: int) -> None:
    """Raise NotPrimeError unless p is prime."""
    if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p):
        raise NotPrimeError(f"p must be prime, got {p!r}")


# =============================================================================
# p-adic Valuations
# =============================================================================

@total_ordering
@dataclass(frozen=True, slots=True)
class ValExponent:
    """
    Exponent n of a p-adic valuation nu = 2^(-n).

    `exponent is None` is the explicit +infinity variant and belongs exactly
    to the element 0. Ordering is by exponent with +infinity largest, which is
    the reverse of the ordering on nu.
    """
    exponent: Optional[int]

    @classmethod
    def infinite(cls) -> "ValExponent":
        return cls(None)

    @property
    def is_infinite(self) -> bool:
        return self.exponent is None

    def nu(self) -> Fraction:
        """The valuation itself as an exact rational; 0 for the zero element."""
        if self.exponent is None:
            return Fraction(0)
        return Fraction(2) ** (-self.exponent)

    def __add__(self, other: "ValExponent") -> "ValExponent":
        if not isinstance(other, ValExponent):
            return NotImplemented
        if self.exponent is None or other.exponent is None:
            return INFINITY
        return ValExponent(self.exponent + other.exponent)

    def __lt__(self, other: "ValExponent") -> bool:
        if not isinstance(other, ValExponent):
            return NotImplemented
        if self.exponent is None:
            return False
        if other.exponent is None:
            return True
        return self.exponent < other.exponent

    def __str__(self) -> str:
        return "inf" if self.exponent is None else str(self.exponent)


INFINITY = ValExponent(None)


def nu_greater(a: ValExponent, b: ValExponent) -> bool:
    """nu(a) > nu(b), i.e. exponent(a) < exponent(b)."""
    return a < b


def valuation_of_int(n: int, p: int) -> ValExponent:
    """Exponent of p in the nonzero-or-zero integer n (no primality check)."""
    if n == 0:
        return INFINITY
    n = abs(n)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return ValExponent(k)


def p_valuation(q: RationalLike, p: int) -> ValExponent:
    """
    p-adic valuation of a rational number.

    Writes q = a * p^n with numerator and denominator of a coprime to p and
    returns n; returns +infinity for q == 0.

    Args:
        q: Integer or Fraction
        p: Prime

    Returns:
        ValExponent holding n

    Raises:
        NotPrimeError: If p is not prime
    """
    require_prime(p)
    q = Fraction(q)
    if q == 0:
        return INFINITY
    num = valuation_of_int(q.numerator, p).exponent
    den = valuation_of_int(q.denominator, p).exponent
    return ValExponent(num - den)


# =============================================================================
# Q(sqrt 2)
# =============================================================================

@dataclass(frozen=True, slots=True)
class QSqrt2:
    """
    Element a + b*sqrt(2) of Q(sqrt 2).

    1 and sqrt 2 are linearly independent over Q, so (a, b) is unique and the
    element is zero exactly when both parts are.
    """
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @classmethod
    def coerce(cls, value: Union["QSqrt2", RationalLike]) -> "QSqrt2":
        if isinstance(value, QSqrt2):
            return value
        return cls(Fraction(value), Fraction(0))

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __add__(self, other):
        try:
            other = QSqrt2.coerce(other)
        except TypeError:
            return NotImplemented
        return QSqrt2(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> "QSqrt2":
        return QSqrt2(-self.a, -self.b)

    def __sub__(self, other):
        try:
            other = QSqrt2.coerce(other)
        except TypeError:
            return NotImplemented
        return QSqrt2(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        try:
            other = QSqrt2.coerce(other)
        except TypeError:
            return NotImplemented
        return QSqrt2(
            self.a * other.a + 2 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "QSqrt2":
        return QSqrt2(self.a, -self.b)

    def norm(self) -> Fraction:
        """Field norm a^2 - 2b^2 (nonzero for nonzero elements)."""
        return self.a * self.a - 2 * self.b * self.b

    def inverse(self) -> "QSqrt2":
        """
        (a + b*sqrt 2)^-1 = (a - b*sqrt 2) / (a^2 - 2b^2).

        Raises:
            ZeroInverseError: If the element is zero
        """
        if self.is_zero():
            raise ZeroInverseError("Cannot invert zero in Q(sqrt 2)")
        n = self.norm()
        return QSqrt2(self.a / n, -self.b / n)

    def __truediv__(self, other):
        try:
            other = QSqrt2.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return QSqrt2.coerce(other) * self.inverse()

    def sign(self) -> int:
        """
        Exact sign of a + b*sqrt 2 as -1, 0 or 1.

        When the parts disagree in sign, compare a^2 with 2b^2.
        """
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sa == 0 or sa == sb:
            return sb if sa == 0 else sa
        if sb == 0:
            return sa
        return sa if self.a * self.a > 2 * self.b * self.b else sb

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QSqrt2.coerce(other)
        if not isinstance(other, QSqrt2):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(2)

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        return f"{self.a}+{self.b}*sqrt2"

    def to_json(self) -> dict[str, str]:
        return {"rational": str(self.a), "sqrt2": str(self.b)}

    @classmethod
    def from_json(cls, data: dict[str, str]) -> "QSqrt2":
        return cls(Fraction(data["rational"]), Fraction(data.get("sqrt2", "0")))


SQRT2 = QSqrt2(Fraction(0), Fraction(1))
