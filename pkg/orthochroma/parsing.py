# Vector Parsing
"""
Parses vectors given on the command line.

Tokens are exact by default: integers ("-7") and fractions ("3/5") become
Fractions. A token with a decimal point or exponent ("0.6", "1e-3") makes
the whole vector a float vector, which only the tolerance-based
classifiers accept.
"""

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union


class VectorParseError(ValueError):
    """Raised when a command line vector cannot be parsed."""
    pass


# Exact token: optional sign, digits, optional /digits
EXACT_TOKEN = re.compile(r"^[+-]?\d+(/\d+)?$")
FLOAT_TOKEN = re.compile(r"^[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$")


@dataclass
class ParsedVector:
    """A parsed vector and whether it is exact."""
    values: tuple[Union[Fraction, float], ...]
    exact: bool

    def as_integers(self) -> tuple[int, ...]:
        """Integer coordinates; exact rational vectors are scaled by the lcm of denominators."""
        if not self.exact:
            raise VectorParseError("A float vector has no exact integer direction")
        scale = math.lcm(*(v.denominator for v in self.values))
        return tuple(int(v * scale) for v in self.values)


def parse_token(token: str) -> Union[Fraction, float]:
    """
    Parse one coordinate.

    Raises:
        VectorParseError: If the token is neither exact nor a float
    """
    token = token.strip()
    if EXACT_TOKEN.match(token):
        num, _, den = token.partition("/")
        if den and int(den) == 0:
            raise VectorParseError(f"Zero denominator in {token!r}")
        return Fraction(int(num), int(den) if den else 1)
    if FLOAT_TOKEN.match(token):
        return float(token)
    raise VectorParseError(f"Not a number: {token!r}")


def parse_vector(tokens: list[str], length: int = 3) -> ParsedVector:
    """
    Parse a vector from command line tokens.

    Args:
        tokens: Coordinate strings; a single token may hold comma separated values
        length: Required number of coordinates

    Returns:
        ParsedVector; exact unless some token is a float

    Raises:
        VectorParseError: On a bad token or the wrong number of coordinates
    """
    if len(tokens) == 1 and "," in tokens[0]:
        tokens = tokens[0].split(",")
    values = [parse_token(t) for t in tokens]
    if len(values) != length:
        raise VectorParseError(f"Expected {length} coordinates, got {len(values)}")
    exact = all(isinstance(v, Fraction) for v in values)
    if not exact:
        values = [float(v) for v in values]
    return ParsedVector(values=tuple(values), exact=exact)
