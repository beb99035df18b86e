# Claims Report
"""
Recomputes every checkable assertion about the counterexample pairs, the
parity law, rotation orbits and the 4-colouring table.

Discrepancies between a statement and the computed values are recorded as
findings on the claim. They never fail the report on their own; a claim
fails only when a computed value contradicts what the code relies on.
"""

import logging
from fractions import Fraction

from orthochroma.fourcolor import verify_table
from orthochroma.generators import COS_ALPHA, SIN_ALPHA, enum_points, orbit, rotation_about, rotation_z
from orthochroma.models import ClaimResult, ClaimsReport
from orthochroma.numtheory import is_prime
from orthochroma.projective import Colour3, colour_valuation, normalize
from orthochroma.sphere import SpherePoint, alg_orthogonal, alg_point, colour3


logger = logging.getLogger(__name__)


WHITE_PAIR_PRIMES = (2, 3, 5, 7, 11)
BLACK_PAIR_PRIME_LIMIT = 100


def _pair_colours(u: tuple[int, int, int], v: tuple[int, int, int], p: int) -> tuple[Colour3, Colour3]:
    return colour_valuation(normalize(*u), p), colour_valuation(normalize(*v), p)


def _form(u: tuple[int, int, int], v: tuple[int, int, int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def claim_white_pair() -> ClaimResult:
    """(1,1,0) and (-1,1,0): White for small primes, orthogonal in Q(sqrt 2)."""
    u, v = (1, 1, 0), (-1, 1, 0)
    values: dict[str, str] = {}
    all_white = True
    for p in WHITE_PAIR_PRIMES:
        cu, cv = _pair_colours(u, v, p)
        values[f"p={p}"] = f"{cu.label}/{cv.label}"
        all_white &= cu == cv == Colour3.WHITE
    orthogonal = alg_orthogonal(alg_point(u), alg_point(v))
    values["unit_u"] = str(alg_point(u))
    values["unit_v"] = str(alg_point(v))
    values["orthogonal"] = str(orthogonal)
    return ClaimResult(
        key="a",
        statement="(1,1,0) and (-1,1,0) are both coloured white for p in {2,3,5,7,11} and are orthogonal",
        passed=all_white and orthogonal,
        values=values,
    )


def claim_black_pair_two() -> ClaimResult:
    """(-7,0,1) and (1,0,7): Black at p = 2 and orthogonal."""
    u, v = (-7, 0, 1), (1, 0, 7)
    cu, cv = _pair_colours(u, v, 2)
    form = _form(u, v)
    orthogonal = alg_orthogonal(alg_point(u), alg_point(v))
    return ClaimResult(
        key="b",
        statement="(-7,0,1) and (1,0,7) are both coloured black for p = 2 and are orthogonal",
        passed=cu == cv == Colour3.BLACK and form == 0 and orthogonal,
        values={
            "p=2": f"{cu.label}/{cv.label}",
            "inner_form": str(form),
            "orthogonal": str(orthogonal),
        },
    )


def claim_black_pair_all_primes() -> ClaimResult:
    """(-1,3,1) and (-5,2,1): Black for every prime up to 100. Their inner product is reported."""
    u, v = (-1, 3, 1), (-5, 2, 1)
    primes = [p for p in range(2, BLACK_PAIR_PRIME_LIMIT + 1) if is_prime(p)]
    off = []
    for p in primes:
        cu, cv = _pair_colours(u, v, p)
        if not cu == cv == Colour3.BLACK:
            off.append(f"p={p}: {cu.label}/{cv.label}")
    form = _form(u, v)

    findings = []
    if form != 0:
        findings.append(
            f"DISCREPANCY: the pair is presented as orthogonal, but the inner product is {form}"
        )
    return ClaimResult(
        key="c",
        statement=f"(-1,3,1) and (-5,2,1) are both coloured black for every prime p <= {BLACK_PAIR_PRIME_LIMIT}",
        passed=not off,
        values={
            "primes_checked": str(len(primes)),
            "colour": "Black/Black" if not off else "; ".join(off),
            "inner_product": str(form),
        },
        findings=findings,
    )


def claim_one_odd(height: int) -> ClaimResult:
    """Exactly one odd coordinate and odd d for every primitive quadruple, and p = 2 agreement."""
    checked = bad_parity = disagree = 0
    first_disagreement = None
    for P in enum_points("quadruple", height):
        checked += 1
        if P.d % 2 == 0 or (P.a % 2) + (P.b % 2) + (P.c % 2) != 1:
            bad_parity += 1
        if colour_valuation(normalize(*P.triple), 2) != colour3(P):
            disagree += 1
            first_disagreement = first_disagreement or str(P)

    values = {
        "height": str(height),
        "points": str(checked),
        "parity_violations": str(bad_parity),
        "valuation_p2_disagreements": str(disagree),
    }
    if first_disagreement:
        values["first_disagreement"] = first_disagreement
    findings = []
    if checked and disagree == 0:
        findings.append(
            "LABEL: the third valuation rule is printed as red; it is black, "
            f"matching 'black if z is odd' at p = 2 on all {checked} points checked here"
        )
    return ClaimResult(
        key="d",
        statement=f"precisely one of a, b, c is odd (and d is odd) for every point with d <= {height}",
        passed=bad_parity == 0 and disagree == 0,
        values=values,
        findings=findings,
    )


def claim_orbit(orbit_length: int) -> ClaimResult:
    """Orbit of (1,0,0) under the z-rotation stays red; the exchanged angle does not."""
    start = SpherePoint(1, 0, 0, 1)
    colours = [c for _, c in orbit(rotation_z(), start, orbit_length)]
    off = sum(1 for c in colours if c != Colour3.RED)

    # cos and sin exchanged, as the angle is sometimes written
    literal = rotation_about("z", SIN_ALPHA, COS_ALPHA).apply(start)
    repaired = rotation_z().apply(start)
    findings = []
    if colour3(literal) != Colour3.RED:
        findings.append(
            f"ROTATION: with cos = {SIN_ALPHA}, sin = {COS_ALPHA} the first step is {literal}, "
            f"coloured {colour3(literal).label}; cos = {COS_ALPHA}, sin = {SIN_ALPHA} keeps a and d odd"
        )
    return ClaimResult(
        key="e",
        statement=f"a and d stay odd and b even along the first {orbit_length} rotation steps of (1,0,0)",
        passed=off == 0,
        values={
            "orbit_length": str(orbit_length),
            "non_red": str(off),
            "first_step": str(repaired),
            "first_step_exchanged_angle": str(literal),
            "cos": str(Fraction(COS_ALPHA)),
            "sin": str(Fraction(SIN_ALPHA)),
        },
        findings=findings,
    )


def claim_table() -> ClaimResult:
    """The sign-pattern table certificate."""
    cert = verify_table()
    return ClaimResult(
        key="f",
        statement="the explicit 4-colouring of the sphere is proper",
        passed=cert.passed,
        values={
            "pairs_checked": str(cert.pairs_checked),
            "constraints_checked": str(cert.constraints_checked),
            "violations": str(len(cert.violations)),
            "antipodal": str(cert.antipodal),
        },
    )


def claims(height: int = 100, orbit_length: int = 1000) -> ClaimsReport:
    """
    Evaluate claims a-f.

    Args:
        height: Enumeration bound for the parity claim
        orbit_length: Orbit length for the rotation claim

    Returns:
        ClaimsReport; `passed` is the conjunction of the claims, findings excluded
    """
    report = ClaimsReport(claims=[
        claim_white_pair(),
        claim_black_pair_two(),
        claim_black_pair_all_primes(),
        claim_one_odd(height),
        claim_orbit(orbit_length),
        claim_table(),
    ])
    for claim in report.claims:
        for finding in claim.findings:
            logger.warning(f"Claim ({claim.key}): {finding}")
        if not claim.passed:
            logger.error(f"Claim ({claim.key}) failed: {claim.values}")
    return report
