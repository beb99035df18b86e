# Point Generators
"""
Generation of exact rational sphere points.

This module:
1. Enumerates points by height (primitive quadruples with d <= H, or
   stereographic images of a rational grid)
2. Applies exact rotations whose entries are 0, 1, +-3/5, +-4/5
3. Builds rotation orbits and measures their angular coverage
4. Scans the circles {x : x.u = v.u} for rational points

Rotations use cos = 3/5, sin = 4/5. The new numerators (3a - 4b, 4a + 3b)
keep the parity of (a, b), so the parity colour of every point is preserved.
With cos and sin exchanged the parities of a and b swap and an orbit of
(1, 0, 0) alternates between red and white.
"""

from __future__ import annotations

import itertools
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Literal

import numpy as np

from orthochroma.models import CoverageReport
from orthochroma.projective import Colour3
from orthochroma.sphere import SpherePoint, antipode, colour3, inner, stereo_inverse


logger = logging.getLogger(__name__)


# =============================================================================
# Exceptions
# =============================================================================

class GeneratorError(Exception):
    """Base exception for point generator errors."""
    pass


class RotationError(GeneratorError, ValueError):
    """Raised when a matrix is not an exact rotation."""
    pass


class CircleError(GeneratorError, ValueError):
    """Raised when u = -v, where x.u = v.u is not a circle."""
    pass


# =============================================================================
# Constants
# =============================================================================

COS_ALPHA = Fraction(3, 5)
SIN_ALPHA = Fraction(4, 5)

EnumMode = Literal["quadruple", "stereo"]


# =============================================================================
# Enumeration
# =============================================================================

def quadruples_with_denominator(d: int) -> list[SpherePoint]:
    """
    Every primitive quadruple (a, b, c; d) for one d, sorted by (a, b, c).

    Even d has none. Nonnegative sorted triples a <= b <= c are found first,
    then expanded over signs and permutations.
    """
    if d < 1 or d % 2 == 0:
        return []
    dd = d * d
    base = []
    for a in range(math.isqrt(dd // 3) + 1):
        rem = dd - a * a
        for b in range(a, math.isqrt(rem // 2) + 1):
            c2 = rem - b * b
            c = math.isqrt(c2)
            if c * c == c2 and c >= b and math.gcd(a, b, c) == 1:
                base.append((a, b, c))

    signed: set[tuple[int, int, int]] = set()
    for triple in base:
        for perm in set(itertools.permutations(triple)):
            for signs in itertools.product((1, -1), repeat=3):
                signed.add(tuple(s * x for s, x in zip(signs, perm)))
    return [SpherePoint(a, b, c, d) for a, b, c in sorted(signed)]


def _stereo_points(H: int) -> Iterator[SpherePoint]:
    # (u, v) = (m/q, n/q); the gcd filter leaves each plane point once
    for q in range(1, H + 1):
        for m in range(-H, H + 1):
            for n in range(-H, H + 1):
                if math.gcd(m, n, q) != 1:
                    continue
                yield stereo_inverse(Fraction(m, q), Fraction(n, q))


def enum_points(mode: EnumMode, bound: int, workers: int = 1) -> Iterator[SpherePoint]:
    """
    Deterministic, duplicate-free stream of rational sphere points.

    Args:
        mode: "quadruple" for every primitive (a, b, c; d) with d <= bound,
              "stereo" for stereographic images of (m/q, n/q) with
              1 <= q <= bound and |m|, |n| <= bound
        bound: Height bound H >= 1
        workers: Processes for quadruple enumeration; output order is unchanged

    Yields:
        SpherePoint
    """
    if bound < 1:
        raise ValueError(f"Height bound must be >= 1, got {bound}")
    if mode == "quadruple":
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for block in pool.map(quadruples_with_denominator, range(1, bound + 1), chunksize=8):
                    yield from block
        else:
            for d in range(1, bound + 1):
                yield from quadruples_with_denominator(d)
    elif mode == "stereo":
        yield from _stereo_points(bound)
    else:
        raise ValueError(f"Unknown enumeration mode: {mode}")


@lru_cache(maxsize=4)
def quadruples_upto(H: int) -> tuple[SpherePoint, ...]:
    """Cached quadruple enumeration, shared by repeated circle scans."""
    points = tuple(enum_points("quadruple", H))
    logger.info(f"Enumerated {len(points)} primitive quadruples with d <= {H}")
    return points


# =============================================================================
# Exact Rotations
# =============================================================================

Matrix = tuple[tuple[Fraction, Fraction, Fraction], ...]


def _matmul(A: Matrix, B: Matrix) -> Matrix:
    return tuple(
        tuple(sum((A[i][k] * B[k][j] for k in range(3)), Fraction(0)) for j in range(3))
        for i in range(3)
    )


IDENTITY: Matrix = tuple(
    tuple(Fraction(int(i == j)) for j in range(3)) for i in range(3)
)


@dataclass(frozen=True)
class ExactRotation:
    """3x3 rational matrix with M^T M = I and det M = 1, checked exactly."""
    matrix: Matrix

    def __post_init__(self) -> None:
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.matrix)
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise RotationError("Rotation matrix must be 3x3")
        object.__setattr__(self, "matrix", rows)
        if _matmul(self.transpose().matrix, rows) != IDENTITY:
            raise RotationError("Matrix is not orthogonal")
        if self.determinant() != 1:
            raise RotationError("Matrix has determinant -1")

    def transpose(self) -> "ExactRotation":
        m = self.matrix
        t = tuple(tuple(m[j][i] for j in range(3)) for i in range(3))
        rotation = object.__new__(ExactRotation)
        object.__setattr__(rotation, "matrix", t)
        return rotation

    def determinant(self) -> Fraction:
        (a, b, c), (d, e, f), (g, h, i) = self.matrix
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    def __matmul__(self, other: "ExactRotation") -> "ExactRotation":
        return ExactRotation(_matmul(self.matrix, other.matrix))

    def power(self, n: int) -> "ExactRotation":
        """R^n; negative n uses the transpose."""
        if n < 0:
            return ExactRotation(self.transpose().matrix).power(-n)
        result, base = ExactRotation(IDENTITY), self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def apply(self, P: SpherePoint) -> SpherePoint:
        """
        Image of a sphere point, reduced to primitive form.

        Raises:
            RotationError: If the reduction would divide out a factor of 2
        """
        scale = math.lcm(*(x.denominator for row in self.matrix for x in row))
        rows = [[int(x * scale) for x in row] for row in self.matrix]
        nums = [r[0] * P.a + r[1] * P.b + r[2] * P.c for r in rows]
        den = scale * P.d
        g = math.gcd(*nums, den)
        if g % 2 == 0:
            raise RotationError(f"Reducing {P} removed an even factor {g}")
        return SpherePoint(nums[0] // g, nums[1] // g, nums[2] // g, den // g)


def rotation_about(axis: Literal["x", "y", "z"], cos: Fraction, sin: Fraction) -> ExactRotation:
    """
    Rotation about a coordinate axis by the angle with the given cosine and sine.

    Raises:
        RotationError: If cos^2 + sin^2 != 1
    """
    c, s = Fraction(cos), Fraction(sin)
    if c * c + s * s != 1:
        raise RotationError(f"cos^2 + sin^2 = {c * c + s * s}, not 1")
    zero, one = Fraction(0), Fraction(1)
    if axis == "z":
        m = ((c, -s, zero), (s, c, zero), (zero, zero, one))
    elif axis == "y":
        m = ((c, zero, s), (zero, one, zero), (-s, zero, c))
    elif axis == "x":
        m = ((one, zero, zero), (zero, c, -s), (zero, s, c))
    else:
        raise RotationError(f"Unknown axis {axis!r}")
    return ExactRotation(m)


def rotation_z() -> ExactRotation:
    """Rotation about the z-axis with cos = 3/5, sin = 4/5."""
    return rotation_about("z", COS_ALPHA, SIN_ALPHA)


def rotation_y() -> ExactRotation:
    """Rotation about the y-axis with cos = 3/5, sin = 4/5."""
    return rotation_about("y", COS_ALPHA, SIN_ALPHA)


def orbit(R: ExactRotation, start: SpherePoint, N: int) -> list[tuple[SpherePoint, Colour3]]:
    """[start, R start, ..., R^(N-1) start], each with its parity colour."""
    if N < 1:
        raise ValueError(f"Orbit length must be >= 1, got {N}")
    points = [start]
    for _ in range(N - 1):
        points.append(R.apply(points[-1]))
    return [(P, colour3(P)) for P in points]


# =============================================================================
# Coverage
# =============================================================================

@dataclass(frozen=True)
class CoverageGrid:
    """
    Angular grid. "equator": `shape[0]` longitude cells on z = 0.
    "sphere": shape[0] polar-angle bands x shape[1] longitude cells.
    """
    kind: Literal["equator", "sphere"]
    shape: tuple[int, ...]

    @classmethod
    def equator(cls, cells: int) -> "CoverageGrid":
        if cells < 1:
            raise ValueError("Grid needs at least one cell")
        return cls("equator", (cells,))

    @classmethod
    def sphere(cls, n_lat: int, n_lon: int) -> "CoverageGrid":
        if n_lat < 1 or n_lon < 1:
            raise ValueError("Grid needs at least one cell")
        return cls("sphere", (n_lat, n_lon))

    @property
    def cells(self) -> int:
        return int(np.prod(self.shape))


def coverage(points: Iterable[SpherePoint], grid: CoverageGrid) -> CoverageReport:
    """
    Hit counts of points per grid cell. An empirical statistic only.
    """
    coords = np.array(
        [(P.a / P.d, P.b / P.d, P.c / P.d) for P in points], dtype=float
    ).reshape(-1, 3)
    total = len(coords)
    skipped = 0

    lon = np.mod(np.arctan2(coords[:, 1], coords[:, 0]), 2 * np.pi)
    if grid.kind == "equator":
        on_domain = coords[:, 2] == 0
        skipped = int(total - on_domain.sum())
        cells = grid.shape[0]
        idx = np.minimum((lon[on_domain] / (2 * np.pi) * cells).astype(int), cells - 1)
    else:
        n_lat, n_lon = grid.shape
        theta = np.arccos(np.clip(coords[:, 2], -1.0, 1.0))
        i = np.minimum((theta / np.pi * n_lat).astype(int), n_lat - 1)
        j = np.minimum((lon / (2 * np.pi) * n_lon).astype(int), n_lon - 1)
        idx = i * n_lon + j

    counts = np.bincount(idx, minlength=grid.cells)
    return CoverageReport(
        kind=grid.kind,
        shape=list(grid.shape),
        counts=[int(c) for c in counts],
        total_points=total,
        skipped_points=skipped,
        empty_cells=int((counts == 0).sum()),
    )


# =============================================================================
# Circles
# =============================================================================

@dataclass
class CircleScan:
    """Rational points found on the circle {x : x.u = v.u}."""
    u: SpherePoint
    v: SpherePoint
    height: int
    points: list[tuple[SpherePoint, Colour3]] = field(default_factory=list)

    @property
    def colour_u(self) -> Colour3:
        return colour3(self.u)

    @property
    def form_parity_odd(self) -> bool:
        """Whether the integer form of v.u is odd (same colours) or even."""
        return inner(self.v, self.u)[1] % 2 == 1

    @property
    def all_match_u(self) -> bool:
        return all(colour == self.colour_u for _, colour in self.points)

    @property
    def none_match_u(self) -> bool:
        return all(colour != self.colour_u for _, colour in self.points)


def circle_scan(u: SpherePoint, v: SpherePoint, H: int) -> CircleScan:
    """
    Every enumerated point x with d <= H on the circle x.u = v.u.

    x.u = v.u is tested exactly as form(x, u) * d_v == form(v, u) * d_x.

    Raises:
        CircleError: If u = -v
    """
    if v == antipode(u):
        raise CircleError(f"u = {u} and v = {v} are antipodal; x.u = v.u is a single point")
    target = inner(v, u)[1]
    ua, ub, uc = u.triple
    scan = CircleScan(u=u, v=v, height=H)
    for x in quadruples_upto(H):
        if (x.a * ua + x.b * ub + x.c * uc) * v.d == target * x.d:
            scan.points.append((x, colour3(x)))
    logger.debug(f"Circle through {v} about {u}: {len(scan.points)} points with d <= {H}")
    return scan
