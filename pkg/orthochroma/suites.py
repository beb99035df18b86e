# Property Suites
"""
Invariant checks for every module, run by the `verify` subcommand.

Each suite returns a SuiteResult with the number of cases examined and the
number that violated the property. Exhaustive checks are bounded by the
height H; sampled checks draw from RNGs seeded with the run seed, so the
matrix is reproducible. How many cases each suite draws is set by a
SuiteProfile: `SuiteProfile.scaled` follows the run's height and sample
count, `ACCEPTANCE` fixes the sizes of the full acceptance run.
"""

import itertools
import logging
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from orthochroma.fourcolor import colour4_float, verify_table
from orthochroma.generators import (
    CoverageGrid,
    circle_scan,
    coverage,
    enum_points,
    orbit,
    quadruples_upto,
    rotation_y,
    rotation_z,
)
from orthochroma.graphs import (
    brute_force_chromatic,
    build_graph,
    chromatic_number,
    rational_witness,
    validate_colouring,
)
from orthochroma.models import SuiteResult, VerificationMatrix
from orthochroma.numtheory import QSqrt2, p_valuation
from orthochroma.projective import (
    Colour3,
    colour_of_coordinates,
    colour_valuation,
    line_colours,
    line_scan,
    normalize,
    rule_matches,
)
from orthochroma.search import sqrt2_directions
from orthochroma.sphere import (
    NORTH_POLE,
    SpherePoint,
    colour3,
    stereo_inverse,
    stereo_project,
)


logger = logging.getLogger(__name__)


# Shared by every profile; the enumeration oracle is a brute-force scan
BRUTE_HEIGHT_CAP = 25
SOLVER_POOL_HEIGHT = 9
CIRCLE_POINT_HEIGHT = 15


# =============================================================================
# Profiles
# =============================================================================

@dataclass(frozen=True)
class SuiteProfile:
    """Case counts and scan bounds of the sampled and bounded suites."""
    name: str
    pair_samples: int
    float_pairs: int
    stereo_samples: int
    stereo_height: int
    lines: int
    line_height: int
    line_primes: tuple[int, ...]
    solver_graphs: int
    solver_vertices: int
    orbit_length: int
    y_orbit_starts: int
    y_orbit_length: int
    orbit_cells: int
    circle_height: int
    circle_pairs: int

    @classmethod
    def scaled(cls, p: int, height: int, samples: int) -> "SuiteProfile":
        """Sizes that follow the run's height and sample count, with the Python-loop scans capped."""
        return cls(
            name="scaled",
            pair_samples=samples,
            float_pairs=samples,
            stereo_samples=samples,
            stereo_height=height,
            lines=min(samples, 30),
            line_height=min(height, 20),
            line_primes=(p,),
            solver_graphs=min(samples, 100),
            solver_vertices=8,
            orbit_length=min(samples, 200),
            y_orbit_starts=10,
            y_orbit_length=10,
            orbit_cells=0,
            circle_height=min(height, 60),
            circle_pairs=min(samples, 5),
        )


ACCEPTANCE_HEIGHT = 500
ACCEPTANCE = SuiteProfile(
    name="acceptance",
    pair_samples=10**6,
    float_pairs=10**5,
    stereo_samples=10**4,
    stereo_height=200,
    lines=100,
    line_height=50,
    line_primes=(2, 3, 5),
    solver_graphs=200,
    solver_vertices=12,
    orbit_length=1000,
    y_orbit_starts=100,
    y_orbit_length=100,
    orbit_cells=100,
    circle_height=300,
    circle_pairs=50,
)


@dataclass
class Tally:
    """Running count for one suite."""
    checked: int = 0
    violations: int = 0
    detail: Optional[str] = None

    def record(self, ok: bool, detail: str = "") -> None:
        self.checked += 1
        if not ok:
            self.violations += 1
            if self.detail is None:
                self.detail = detail

    def record_many(self, checked: int, violations: int, detail: str = "") -> None:
        self.checked += checked
        if violations:
            self.violations += violations
            if self.detail is None:
                self.detail = detail


@dataclass
class SuiteContext:
    p: int
    height: int
    seed: int
    samples: int
    profile: SuiteProfile

    def rng(self, salt: str) -> random.Random:
        return random.Random(f"{self.seed}:{salt}")

    def points(self, height: Optional[int] = None) -> tuple[SpherePoint, ...]:
        return quadruples_upto(self.height if height is None else min(height, self.height))


SuiteFn = Callable[[SuiteContext, Tally], None]


def _random_int(rng: random.Random, bound: int) -> int:
    return rng.randint(-bound, bound)


# =============================================================================
# numtheory
# =============================================================================

def _valuation_laws(ctx: SuiteContext, tally: Tally) -> None:
    rng = ctx.rng("valuation")
    for _ in range(ctx.samples):
        x = Fraction(_random_int(rng, 10**6), rng.randint(1, 10**6))
        y = Fraction(_random_int(rng, 10**6), rng.randint(1, 10**6))
        ex, ey = p_valuation(x, ctx.p), p_valuation(y, ctx.p)
        tally.record(p_valuation(x * y, ctx.p) == ex + ey, f"e({x}*{y}) != e({x}) + e({y})")
        tally.record(p_valuation(x + y, ctx.p) >= min(ex, ey), f"e({x}+{y}) < min")


def _qsqrt2_field(ctx: SuiteContext, tally: Tally) -> None:
    rng = ctx.rng("qsqrt2")
    for _ in range(ctx.samples):
        a = QSqrt2(Fraction(_random_int(rng, 50), rng.randint(1, 50)), Fraction(_random_int(rng, 50), rng.randint(1, 50)))
        if a.is_zero():
            continue
        tally.record(a * a.inverse() == QSqrt2(1), f"{a} * {a}^-1 != 1")
        # sign agrees with the float value away from zero
        tally.record(a.sign() == (float(a) > 0) - (float(a) < 0), f"sign({a}) disagrees with {float(a)}")


# =============================================================================
# projective
# =============================================================================

def _rule_partition(ctx: SuiteContext, tally: Tally) -> None:
    rng = ctx.rng("partition")
    for _ in range(ctx.samples):
        t = [_random_int(rng, 10**4) for _ in range(3)]
        if not any(t):
            continue
        matches = rule_matches(*(p_valuation(c, ctx.p) for c in t))
        tally.record(sum(matches) == 1, f"{t}: rules {matches}")


def _scale_invariance(ctx: SuiteContext, tally: Tally) -> None:
    rng = ctx.rng("scale")
    for _ in range(ctx.samples):
        t = [_random_int(rng, 10**4) for _ in range(3)]
        if not any(t):
            continue
        k = rng.choice([-1, 1]) * ctx.p ** rng.randint(0, 4) * rng.randint(1, 50)
        base = colour_valuation(normalize(*t), ctx.p)
        scaled = colour_of_coordinates(*(k * c for c in t), ctx.p)
        tally.record(base == scaled, f"{t} scaled by {k}: {base.label} -> {scaled.label}")


def _lines_two_colours(ctx: SuiteContext, tally: Tally) -> None:
    rng = ctx.rng("lines")
    H = ctx.profile.line_height
    for _ in range(ctx.profile.lines):
        a, b, c = (_random_int(rng, 20) for _ in range(3))
        if not (a or b or c):
            continue
        for p in ctx.profile.line_primes:
            colours = line_colours(line_scan(a, b, c, H, p))
            tally.record(len(colours) <= 2, f"line ({a},{b},{c}) at p={p} has colours {sorted(x.label for x in colours)}")


# =============================================================================
# sphere
# =============================================================================

def _one_odd(ctx: SuiteContext, tally: Tally) -> None:
    for P in ctx.points():
        odd = (P.a % 2) + (P.b % 2) + (P.c % 2)
        tally.record(odd == 1 and P.d % 2 == 1, f"{P} breaks the parity law")


Vec = tuple[int, int, int]


def _dot(u: Vec, v: Vec) -> int:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def _extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with a*s + b*t = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return (a, s0, t0) if a >= 0 else (-a, -s0, -t0)


def orthogonal_lattice(a: int, b: int, c: int) -> tuple[Vec, Vec]:
    """
    Reduced basis of the plane lattice {x in Z^3 : x.(a, b, c) = 0}.

    (a, b, c) must be primitive with (a, b) != (0, 0). The basis satisfies
    |u| <= |v| and |u.v| <= |u|^2 / 2.
    """
    g, s, t = _extended_gcd(a, b)
    u: Vec = (b // g, -a // g, 0)
    v: Vec = (c * s, c * t, -g)
    while True:
        if _dot(u, u) > _dot(v, v):
            u, v = v, u
        k = (2 * _dot(u, v) + _dot(u, u)) // (2 * _dot(u, u))
        if k == 0:
            return u, v
        v = (v[0] - k * u[0], v[1] - k * u[1], v[2] - k * u[2])


def orthogonal_partners(P: SpherePoint, H: int) -> np.ndarray:
    """
    Every primitive quadruple (x; e) with e <= H and x.P = 0, as rows of x.

    Walks the reduced basis of the orthogonal lattice; for reduced u, v
    |m u + n v|^2 >= (m^2 |u|^2 + n^2 |v|^2) / 2 bounds both coefficients.
    """
    if P.a == 0 and P.b == 0:
        u, v = (1, 0, 0), (0, 1, 0)
    else:
        u, v = orthogonal_lattice(P.a, P.b, P.c)
    R2 = H * H
    M = math.isqrt(2 * R2 // _dot(u, u)) + 1
    N = math.isqrt(2 * R2 // _dot(v, v)) + 1
    m = np.arange(-M, M + 1, dtype=np.int64)[:, None, None]
    n = np.arange(-N, N + 1, dtype=np.int64)[None, :, None]
    X = (m * np.array(u, dtype=np.int64) + n * np.array(v, dtype=np.int64)).reshape(-1, 3)
    sq = (X * X).sum(axis=1)
    keep = (sq > 0) & (sq <= R2)
    X, sq = X[keep], sq[keep]
    root = np.rint(np.sqrt(sq)).astype(np.int64)
    keep = (root * root == sq) & (np.gcd.reduce(X, axis=1) == 1)
    return X[keep]


def _colour_index(P: SpherePoint) -> int:
    return 0 if P.a % 2 else 1 if P.b % 2 else 2


def _orthogonal_pairs(ctx: SuiteContext, tally: Tally) -> None:
    # colour3 moves with signed permutations, so a violating pair can be
    # carried to one whose first point has a >= b >= c >= 0
    for P in ctx.points():
        if not P.a >= P.b >= P.c >= 0:
            continue
        X = orthogonal_partners(P, ctx.height)
        odd_index = (X % 2 != 0).argmax(axis=1)
        same = odd_index == _colour_index(P)
        detail = ""
        if same.any():
            detail = f"{P} and {tuple(int(x) for x in X[same][0])} are orthogonal and {colour3(P).label}"
        tally.record_many(len(X), int(same.sum()), detail)


def _same_colour_odd_form(ctx: SuiteContext, tally: Tally) -> None:
    rng = ctx.rng("pairs")
    points = ctx.points()
    for _ in range(ctx.profile.pair_samples):
        P, Q = rng.choice(points), rng.choice(points)
        same = colour3(P) == colour3(Q)
        odd = (P.a * Q.a + P.b * Q.b + P.c * Q.c) % 2 == 1
        tally.record(same == odd, f"{P}, {Q}: same colour {same}, odd form {odd}")


CYCLED = {Colour3.RED: Colour3.BLACK, Colour3.WHITE: Colour3.RED, Colour3.BLACK: Colour3.WHITE}


def _cycle_permutes(ctx: SuiteContext, tally: Tally) -> None:
    for P in ctx.points():
        before, after = colour3(P), colour3(P.cycle())
        tally.record(after == CYCLED[before], f"{P} is {before.label} but its cycle is {after.label}")


def _stereo_round_trip(ctx: SuiteContext, tally: Tally) -> None:
    rng = ctx.rng("stereo")
    for _ in range(ctx.profile.stereo_samples):
        u = Fraction(_random_int(rng, 1000), rng.randint(1, 1000))
        v = Fraction(_random_int(rng, 1000), rng.randint(1, 1000))
        tally.record(stereo_project(stereo_inverse(u, v)) == (u, v), f"({u}, {v}) does not round trip")
    for P in ctx.points(ctx.profile.stereo_height):
        if P == NORTH_POLE:
            continue
        tally.record(stereo_inverse(*stereo_project(P)) == P, f"{P} does not round trip")


# =============================================================================
# fourcolor
# =============================================================================

def _table_certificate(ctx: SuiteContext, tally: Tally) -> None:
    cert = verify_table()
    tally.checked += cert.pairs_checked - 1
    tally.record(cert.passed and cert.antipodal, f"{len(cert.violations)} violated pattern pairs")


def _float_orthogonal_pairs(ctx: SuiteContext, tally: Tally) -> None:
    rng = np.random.default_rng(ctx.seed)
    for _ in range(ctx.profile.float_pairs):
        u = rng.standard_normal(3)
        # Zero a coordinate now and then so arcs and axes are hit too
        zeros = rng.integers(0, 3)
        if zeros:
            u[rng.choice(3, size=zeros, replace=False)] = 0.0
        w = rng.standard_normal(3)
        v = w - (w @ u) / (u @ u) * u
        v[np.abs(v) < 1e-12] = 0.0
        # Nonzero coordinates far above the rounding error of the projection
        if any(0 < abs(x) < 1e-4 for x in np.concatenate([u, v])) or not v.any():
            continue
        cu, cv = colour4_float(u, tol=0.0), colour4_float(v, tol=0.0)
        tally.record(cu != cv, f"{u.tolist()} and {v.tolist()} both {cu.label}")


# =============================================================================
# graphs
# =============================================================================

def _solver_oracle(ctx: SuiteContext, tally: Tally) -> None:
    rng = ctx.rng("solver")
    pool = list(ctx.points(SOLVER_POOL_HEIGHT)) + sqrt2_directions(2)
    for _ in range(ctx.profile.solver_graphs):
        g = build_graph(rng.sample(pool, rng.randint(1, min(len(pool), ctx.profile.solver_vertices))))
        result = chromatic_number(g)
        expected = brute_force_chromatic(g.n, g.edges)
        tally.record(result.chi == expected, f"solver {result.chi} != brute force {expected} on {g.n} vertices")
        tally.record(validate_colouring(g, result.witness)[0], "solver witness is not proper")


def _rational_ceiling(ctx: SuiteContext, tally: Tally) -> None:
    rng = ctx.rng("ceiling")
    points = ctx.points()
    axes = build_graph([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    tally.record(chromatic_number(axes).chi == 3, "axes triangle is not 3-chromatic")
    for _ in range(ctx.profile.solver_graphs):
        g = build_graph(rng.sample(points, min(len(points), 16)))
        witness = rational_witness(g)
        tally.record(validate_colouring(g, witness)[0] and chromatic_number(g).chi <= 3, "rational graph needs 4 colours")


# =============================================================================
# generators
# =============================================================================

def _enumeration_complete(ctx: SuiteContext, tally: Tally) -> None:
    H = min(ctx.height, BRUTE_HEIGHT_CAP)
    brute = set()
    for d in range(1, H + 1, 2):
        for a, b in itertools.product(range(-d, d + 1), repeat=2):
            c2 = d * d - a * a - b * b
            if c2 < 0:
                continue
            c = math.isqrt(c2)
            if c * c != c2:
                continue
            for cc in {c, -c}:
                if math.gcd(a, b, cc) == 1:
                    brute.add((a, b, cc, d))
    found = [(P.a, P.b, P.c, P.d) for P in enum_points("quadruple", H)]
    tally.record(len(found) == len(set(found)), "enumeration repeats a point")
    tally.record(set(found) == brute, f"enumeration differs from brute force at H={H}")


def _orbits_monochromatic(ctx: SuiteContext, tally: Tally) -> None:
    profile = ctx.profile
    z_orbit = orbit(rotation_z(), SpherePoint(1, 0, 0, 1), profile.orbit_length)
    Ry = rotation_y()
    for P, colour in z_orbit:
        tally.record(colour == Colour3.RED, f"{P} is {colour.label}")
    for P, _ in z_orbit[:profile.y_orbit_starts]:
        for Q, colour in orbit(Ry, P, profile.y_orbit_length):
            tally.record(colour == Colour3.RED, f"{Q} is {colour.label}")
    if profile.orbit_cells:
        report = coverage((P for P, _ in z_orbit), CoverageGrid.equator(profile.orbit_cells))
        logger.info(f"z-orbit of {len(z_orbit)} points leaves {report.empty_cells}/{profile.orbit_cells} equator cells empty")
        tally.record(report.empty_cells == 0, f"z-orbit leaves {report.empty_cells} of {profile.orbit_cells} equator cells empty")


def _circle_pairs(ctx: SuiteContext) -> list[tuple[SpherePoint, SpherePoint]]:
    """`circle_pairs` same-colour and as many different-colour (u, v), u != -v."""
    rng = ctx.rng("circles")
    points = ctx.points(CIRCLE_POINT_HEIGHT)
    wanted = ctx.profile.circle_pairs
    same: list[tuple[SpherePoint, SpherePoint]] = []
    different: list[tuple[SpherePoint, SpherePoint]] = []
    while len(same) < wanted or len(different) < wanted:
        u, v = rng.choice(points), rng.choice(points)
        if v.triple == tuple(-x for x in u.triple):
            continue
        bucket = same if colour3(u) == colour3(v) else different
        if len(bucket) < wanted:
            bucket.append((u, v))
    return same + different


def _circle_dichotomy(ctx: SuiteContext, tally: Tally) -> None:
    H = ctx.profile.circle_height
    for u, v in _circle_pairs(ctx):
        scan = circle_scan(u, v, H)
        if scan.form_parity_odd:
            tally.record(scan.all_match_u, f"circle {u}/{v} has a point not coloured {scan.colour_u.label}")
        else:
            tally.record(scan.none_match_u, f"circle {u}/{v} has a point coloured {scan.colour_u.label}")


# =============================================================================
# Runner
# =============================================================================

SUITES: list[tuple[str, str, SuiteFn]] = [
    ("numtheory", "valuation_laws", _valuation_laws),
    ("numtheory", "qsqrt2_field", _qsqrt2_field),
    ("projective", "rule_partition", _rule_partition),
    ("projective", "scale_invariance", _scale_invariance),
    ("projective", "lines_two_colours", _lines_two_colours),
    ("sphere", "one_odd_coordinate", _one_odd),
    ("sphere", "orthogonal_pairs_differ", _orthogonal_pairs),
    ("sphere", "same_colour_iff_odd_form", _same_colour_odd_form),
    ("sphere", "cycle_permutes_colours", _cycle_permutes),
    ("sphere", "stereo_round_trip", _stereo_round_trip),
    ("fourcolor", "table_certificate", _table_certificate),
    ("fourcolor", "float_orthogonal_pairs", _float_orthogonal_pairs),
    ("graphs", "solver_matches_brute_force", _solver_oracle),
    ("graphs", "rational_ceiling", _rational_ceiling),
    ("generators", "enumeration_complete", _enumeration_complete),
    ("generators", "orbits_monochromatic", _orbits_monochromatic),
    ("generators", "circle_dichotomy", _circle_dichotomy),
]


def run_suites(
    p: int = 2,
    height: int = 100,
    seed: int = 0,
    samples: int = 1000,
    profile: Optional[SuiteProfile] = None,
) -> VerificationMatrix:
    """
    Run every property suite.

    Args:
        p: Prime for the valuation suites
        height: Enumeration bound H
        seed: Seed for the sampled suites
        samples: Cases per sampled suite of the numtheory and projective modules
        profile: Sizes of the remaining sampled and bounded suites;
                 defaults to SuiteProfile.scaled(p, height, samples)

    Returns:
        VerificationMatrix; `passed` is the conjunction of all suites
    """
    profile = profile or SuiteProfile.scaled(p, height, samples)
    logger.info(f"Running {len(SUITES)} suites with the {profile.name} profile at p={p}, H={height}")
    ctx = SuiteContext(p=p, height=height, seed=seed, samples=samples, profile=profile)
    results = []
    for module, check, fn in SUITES:
        tally = Tally()
        fn(ctx, tally)
        result = SuiteResult(
            module=module,
            check=check,
            passed=tally.violations == 0,
            checked=tally.checked,
            violations=tally.violations,
            detail=tally.detail,
        )
        if result.passed:
            logger.info(f"{module}.{check}: {result.checked} cases passed")
        else:
            logger.warning(f"{module}.{check}: {result.violations}/{result.checked} violations ({result.detail})")
        results.append(result)
    return VerificationMatrix(p=p, height=height, seed=seed, profile=profile.name, results=results)
