# Four-Chromatic Search
"""
Exploratory search for finite 4-chromatic orthogonality subgraphs.

Points come from one or more pools (rational enumeration, Q(sqrt 2)
directions, rotation orbits, explicit triples). Each candidate subset is
drawn with its own RNG seeded from (seed, candidate index), so a run is
reproducible and independent of the worker count. Subgraphs of rational
points are always 3-colourable, so only mixed pools can produce hits.
"""

import logging
import math
import random
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterator, Optional

from orthochroma.generators import enum_points, orbit, rotation_y, rotation_z
from orthochroma.graphs import OrthoGraph, build_graph, solve_chromatic
from orthochroma.models import SearchCandidate, SearchConfig, SearchReport
from orthochroma.projective import normalize
from orthochroma.sphere import AlgSpherePoint, SpherePoint, alg_point


logger = logging.getLogger(__name__)


# =============================================================================
# Pools
# =============================================================================

def sqrt2_directions(H: int) -> list[AlgSpherePoint]:
    """Unit vectors of all primitive directions of height <= H with norm^2 = s^2 or 2s^2."""
    seen: dict[AlgSpherePoint, None] = {}
    for x in range(0, H + 1):
        for y in range(-H, H + 1):
            for z in range(-H, H + 1):
                if (x, y, z) == (0, 0, 0) or math.gcd(x, y, z) != 1:
                    continue
                t = normalize(x, y, z)
                if t.as_tuple() != (x, y, z):
                    continue
                point = alg_point(t)
                if point is not None:
                    seen.setdefault(point, None)
    return list(seen)


def orbit_points(length: int) -> list[SpherePoint]:
    """Orbits of the three axis points, one per parity colour. The z-axis turns about y."""
    runs = [
        (rotation_z(), SpherePoint(1, 0, 0, 1)),
        (rotation_z(), SpherePoint(0, 1, 0, 1)),
        (rotation_y(), SpherePoint(0, 0, 1, 1)),
    ]
    points: list[SpherePoint] = []
    for R, start in runs:
        points.extend(P for P, _ in orbit(R, start, length))
    return points


def build_pool(config: SearchConfig) -> OrthoGraph:
    """The orthogonality graph on the union of the configured pools."""
    points: list = []
    for kind in config.generators:
        if kind == "rational":
            points.extend(enum_points("quadruple", config.height))
        elif kind == "sqrt2":
            points.extend(sqrt2_directions(config.height))
        elif kind == "orbit":
            points.extend(orbit_points(config.orbit_length))
        elif kind == "explicit":
            points.extend(config.explicit_points)
    pool = build_graph(points)
    logger.info(f"Search pool: {pool.n} points, {pool.m} orthogonal pairs")
    return pool


# =============================================================================
# Candidates
# =============================================================================

def _candidate_rng(seed: int, index: int) -> random.Random:
    return random.Random(f"{seed}:{index}")


def _draw_subset(pool: OrthoGraph, adj: list[set[int]], config: SearchConfig, rng: random.Random) -> list[int]:
    size = min(config.subset_size, pool.n)
    if config.strategy == "random":
        return sorted(rng.sample(range(pool.n), size))

    # Degree-guided growth: start anywhere, then add the vertex with the most
    # edges into the current set (ties broken by the RNG)
    chosen = {rng.randrange(pool.n)}
    while len(chosen) < size:
        best, best_links = [], -1
        for v in range(pool.n):
            if v in chosen:
                continue
            links = len(adj[v] & chosen)
            if links > best_links:
                best, best_links = [v], links
            elif links == best_links:
                best.append(v)
        chosen.add(rng.choice(best))
    return sorted(chosen)


def evaluate_candidate(pool: OrthoGraph, adj: list[set[int]], config: SearchConfig, index: int) -> SearchCandidate:
    """Draw candidate `index` and solve its induced subgraph exactly."""
    rng = _candidate_rng(config.seed, index)
    subset = _draw_subset(pool, adj, config, rng)
    position = {v: i for i, v in enumerate(subset)}
    edges = [
        (position[i], position[j])
        for i, j in pool.edges
        if i in position and j in position
    ]
    result = solve_chromatic(len(subset), edges, cap=max(len(subset), 1))
    return SearchCandidate(
        index=index,
        vertices=subset,
        edges=len(edges),
        chi=result.chi,
        lower_bound=result.lower_bound,
        upper_bound=result.upper_bound,
    )


def _evaluate_range(args: tuple[OrthoGraph, SearchConfig, int, int]) -> list[SearchCandidate]:
    pool, config, start, stop = args
    adj = pool.adjacency
    return [evaluate_candidate(pool, adj, config, i) for i in range(start, stop)]


def iter_search(config: SearchConfig, budget: int, pool: Optional[OrthoGraph] = None) -> Iterator[SearchCandidate]:
    """
    Stream evaluated candidates in index order.

    Args:
        config: Pools, strategy and seed
        budget: Number of candidates; exhausting it ends the stream normally
        pool: Prebuilt pool graph, otherwise built from the config
    """
    if budget <= 0:
        return
    pool = build_pool(config) if pool is None else pool
    if pool.n == 0:
        return

    if config.workers <= 1:
        adj = pool.adjacency
        for i in range(budget):
            yield evaluate_candidate(pool, adj, config, i)
        return

    chunk = math.ceil(budget / config.workers)
    ranges = [(pool, config, s, min(s + chunk, budget)) for s in range(0, budget, chunk)]
    with ProcessPoolExecutor(max_workers=config.workers) as executor:
        # map keeps submission order, so merged output is in index order
        for block in executor.map(_evaluate_range, ranges):
            yield from block


def search_4chromatic(
    config: SearchConfig,
    budget: int,
    on_candidate: Optional[Callable[[SearchCandidate], None]] = None,
) -> SearchReport:
    """
    Run the search and summarize it.

    Args:
        config: Pools, strategy and seed
        budget: Number of candidates
        on_candidate: Called with every candidate as it is evaluated, in index order

    Returns:
        SearchReport with the seed, counts, chi histogram, best chi seen and
        every candidate with chi >= 4
    """
    if budget <= 0:
        return SearchReport(seed=config.seed, budget=max(budget, 0), pool_size=0, candidates_evaluated=0)

    pool = build_pool(config)
    report = SearchReport(seed=config.seed, budget=budget, pool_size=pool.n, candidates_evaluated=0)
    for candidate in iter_search(config, budget, pool=pool):
        report.candidates_evaluated += 1
        report.chi_histogram[candidate.chi] = report.chi_histogram.get(candidate.chi, 0) + 1
        report.best_lower_bound = max(report.best_lower_bound, candidate.chi)
        if candidate.chi >= 4:
            logger.warning(f"Candidate {candidate.index} is {candidate.chi}-chromatic")
            report.found.append(candidate)
        logger.debug(f"Candidate {candidate.index}: chi={candidate.chi}, {candidate.edges} edges")
        if on_candidate is not None:
            on_candidate(candidate)
    return report
