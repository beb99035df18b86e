# Orthogonality Graphs
"""
Finite orthogonality graphs over exact sphere points and an exact
chromatic number solver.

Solver:
1. Greedy DSATUR gives an upper bound and a colouring
2. The largest clique gives a lower bound
3. Branch-and-bound k-colourability (DSATUR vertex order, ties to the lowest
   index) is run for k between the bounds, smallest k first

Everything is deterministic given the vertex order.
"""

from __future__ import annotations

import itertools
import json
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

import networkx as nx

from orthochroma.models import ChromaticResult, Colouring
from orthochroma.projective import Colour3, PrimitiveTriple, ZeroVectorError
from orthochroma.sphere import (
    AlgSpherePoint,
    SpherePoint,
    alg_inner,
    alg_point,
    colour3,
)


logger = logging.getLogger(__name__)


# =============================================================================
# Exceptions
# =============================================================================

class GraphError(Exception):
    """Base exception for graph errors."""
    pass


class ColouringError(GraphError, ValueError):
    """Raised when a colouring is malformed for its graph."""
    pass


class GraphFormatError(GraphError, ValueError):
    """Raised when a serialized graph cannot be read."""
    pass


class GraphTooLargeError(GraphError):
    """Raised when a graph exceeds the exact solver's vertex cap. Bounds are still computed."""

    def __init__(self, n: int, cap: int, lower_bound: int, upper_bound: int, witness: Colouring):
        super().__init__(
            f"Graph with {n} vertices is too large for exact solve (cap {cap}); "
            f"chi in [{lower_bound}, {upper_bound}]"
        )
        self.n = n
        self.cap = cap
        self.lower_bound = lower_bound
        self.upper_bound = upper_bound
        self.witness = witness


# =============================================================================
# Constants
# =============================================================================

DEFAULT_SOLVER_CAP = 64

COLOUR3_INDEX = {Colour3.RED: 0, Colour3.WHITE: 1, Colour3.BLACK: 2}


# =============================================================================
# Graph
# =============================================================================

@dataclass(frozen=True)
class OrthoGraph:
    """Vertices are distinct exact unit vectors; edges join orthogonal pairs."""
    vertices: tuple[AlgSpherePoint, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def adjacency(self) -> list[set[int]]:
        return adjacency_lists(self.n, self.edges)

    @property
    def is_rational(self) -> bool:
        return all(v.is_rational for v in self.vertices)

    def kind(self, i: int) -> str:
        return "rational" if self.vertices[i].is_rational else "sqrt2"

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g


PointLike = Union[SpherePoint, AlgSpherePoint, PrimitiveTriple, Sequence[int]]


def adjacency_lists(n: int, edges: Iterable[tuple[int, int]]) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(n)]
    for i, j in edges:
        adj[i].add(j)
        adj[j].add(i)
    return adj


def _to_alg(point: PointLike) -> AlgSpherePoint:
    if isinstance(point, AlgSpherePoint):
        return point
    if isinstance(point, SpherePoint):
        return point.to_alg()
    try:
        alg = alg_point(point)
    except ZeroVectorError as e:
        raise GraphError("Zero vector cannot be a graph vertex") from e
    except (TypeError, ValueError) as e:
        raise GraphError(f"Not an exact point: {point!r}") from e
    if alg is None:
        raise GraphError(f"Direction {point!r} has no unit vector in Q(sqrt 2)")
    return alg


def _direction(point: AlgSpherePoint) -> Optional[tuple[int, int, int]]:
    """Integer vector along the point when its coordinates are all in Q or all in Q*sqrt 2."""
    if all(c.b == 0 for c in point.coords):
        parts = [c.a for c in point.coords]
    elif all(c.a == 0 for c in point.coords):
        parts = [c.b for c in point.coords]
    else:
        return None
    lcm = math.lcm(*(Fraction(p).denominator for p in parts))
    return tuple(int(p * lcm) for p in parts)


def build_graph(points: Iterable[PointLike]) -> OrthoGraph:
    """
    Orthogonality graph on exact points.

    Rational and Q(sqrt 2) points may be mixed; inner products are exact.
    Duplicates are dropped (first occurrence kept); antipodes stay distinct.

    Args:
        points: SpherePoints, AlgSpherePoints, or integer direction triples

    Returns:
        OrthoGraph in input order after deduplication

    Raises:
        GraphError: For zero vectors or directions outside Q(sqrt 2)
    """
    unique: dict[AlgSpherePoint, None] = {}
    for point in points:
        unique.setdefault(_to_alg(point), None)
    vertices = tuple(unique)
    directions = [_direction(v) for v in vertices]

    edges = []
    for i, j in itertools.combinations(range(len(vertices)), 2):
        di, dj = directions[i], directions[j]
        if di is not None and dj is not None:
            orthogonal = di[0] * dj[0] + di[1] * dj[1] + di[2] * dj[2] == 0
        else:
            orthogonal = alg_inner(vertices[i], vertices[j]).is_zero()
        if orthogonal:
            edges.append((i, j))

    logger.debug(f"Built graph with {len(vertices)} vertices and {len(edges)} edges")
    return OrthoGraph(vertices=vertices, edges=tuple(edges))


# =============================================================================
# Colouring
# =============================================================================

def validate_colouring(g: OrthoGraph, c: Colouring) -> tuple[bool, Optional[tuple[int, int]]]:
    """
    Check that no edge is monochromatic.

    Returns:
        (True, None) if proper, else (False, first monochromatic edge)

    Raises:
        ColouringError: If the assignment is not total or uses a colour >= k
    """
    return _validate(g.n, g.edges, c)


def _validate(n: int, edges: Sequence[tuple[int, int]], c: Colouring) -> tuple[bool, Optional[tuple[int, int]]]:
    if len(c.assignment) != n:
        raise ColouringError(f"Assignment covers {len(c.assignment)} of {n} vertices")
    for v, colour in enumerate(c.assignment):
        if not 0 <= colour < c.k:
            raise ColouringError(f"Vertex {v} has colour {colour} outside palette of size {c.k}")
    for i, j in edges:
        if c.assignment[i] == c.assignment[j]:
            return False, (i, j)
    return True, None


def rational_witness(g: OrthoGraph) -> Optional[Colouring]:
    """The parity 3-colouring as a Colouring, when every vertex is rational."""
    if not g.is_rational:
        return None
    assignment = [COLOUR3_INDEX[colour3(v.to_sphere_point())] for v in g.vertices]
    return Colouring(assignment=assignment, k=3)


def _select_vertex(colours: list[int], saturation: list[dict[int, int]], adj: list[set[int]]) -> int:
    # Highest saturation, then degree; strict comparison keeps the lowest index on ties
    best, best_key = -1, (-1, -1)
    for v, colour in enumerate(colours):
        if colour >= 0:
            continue
        key = (len(saturation[v]), len(adj[v]))
        if key > best_key:
            best, best_key = v, key
    return best


def _mark(v: int, colour: int, delta: int, adj: list[set[int]], saturation: list[dict[int, int]]) -> None:
    for w in adj[v]:
        counts = saturation[w]
        counts[colour] = counts.get(colour, 0) + delta
        if counts[colour] == 0:
            del counts[colour]


def dsatur_colouring(n: int, adj: list[set[int]]) -> list[int]:
    """Greedy DSATUR: colour the most saturated vertex with its smallest free colour."""
    colours = [-1] * n
    saturation: list[dict[int, int]] = [{} for _ in range(n)]
    for _ in range(n):
        v = _select_vertex(colours, saturation, adj)
        colour = 0
        while colour in saturation[v]:
            colour += 1
        colours[v] = colour
        _mark(v, colour, 1, adj, saturation)
    return colours


def clique_lower_bound(n: int, edges: Sequence[tuple[int, int]]) -> int:
    """Size of a maximum clique."""
    if n == 0:
        return 0
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return max(len(c) for c in nx.find_cliques(g))


def _k_colouring(n: int, adj: list[set[int]], k: int) -> tuple[Optional[list[int]], int]:
    """Branch-and-bound search for a proper k-colouring; returns (colouring or None, nodes)."""
    colours = [-1] * n
    saturation: list[dict[int, int]] = [{} for _ in range(n)]
    nodes = 0

    def search(coloured: int, used: int) -> bool:
        nonlocal nodes
        if coloured == n:
            return True
        nodes += 1
        v = _select_vertex(colours, saturation, adj)
        # Colours above `used` are interchangeable, so only one new colour is tried
        for colour in range(min(used + 1, k)):
            if colour in saturation[v]:
                continue
            colours[v] = colour
            _mark(v, colour, 1, adj, saturation)
            if search(coloured + 1, max(used, colour + 1)):
                return True
            _mark(v, colour, -1, adj, saturation)
            colours[v] = -1
        return False

    return (colours if search(0, 0) else None), nodes


def solve_chromatic(n: int, edges: Sequence[tuple[int, int]], cap: int = DEFAULT_SOLVER_CAP) -> ChromaticResult:
    """
    Exact chromatic number of an abstract graph on vertices 0..n-1.

    Args:
        n: Vertex count
        edges: Pairs of vertex indices
        cap: Soft vertex limit for the exact phase

    Returns:
        ChromaticResult with chi, witness and bounds

    Raises:
        GraphTooLargeError: If n > cap (carries the bounds and DSATUR witness)
    """
    adj = adjacency_lists(n, edges)
    greedy = dsatur_colouring(n, adj)
    upper = max(greedy) + 1 if greedy else 0
    lower = clique_lower_bound(n, edges)
    greedy_witness = Colouring(assignment=greedy, k=upper)

    if n > cap:
        raise GraphTooLargeError(n, cap, lower, upper, greedy_witness)

    nodes_total = 0
    for k in range(lower, upper):
        colouring, nodes = _k_colouring(n, adj, k)
        nodes_total += nodes
        if colouring is not None:
            logger.debug(f"Solved n={n}: chi={k} in [{lower}, {upper}], {nodes_total} nodes")
            return ChromaticResult(
                chi=k,
                witness=Colouring(assignment=colouring, k=k),
                lower_bound=lower,
                upper_bound=upper,
                nodes_explored=nodes_total,
            )

    logger.debug(f"Solved n={n}: chi={upper} (DSATUR optimal), {nodes_total} nodes")
    return ChromaticResult(
        chi=upper,
        witness=greedy_witness,
        lower_bound=lower,
        upper_bound=upper,
        nodes_explored=nodes_total,
    )


def chromatic_number(g: OrthoGraph, cap: int = DEFAULT_SOLVER_CAP) -> ChromaticResult:
    """Exact chromatic number of an orthogonality graph. See solve_chromatic."""
    return solve_chromatic(g.n, g.edges, cap=cap)


def brute_force_chromatic(n: int, edges: Sequence[tuple[int, int]]) -> int:
    """Smallest k admitting a proper colouring, by trying every assignment. For tiny graphs."""
    if n == 0:
        return 0
    for k in range(1, n + 1):
        # Vertex 0 can be fixed to colour 0
        for rest in itertools.product(range(k), repeat=n - 1):
            assignment = (0,) + rest
            if all(assignment[i] != assignment[j] for i, j in edges):
                return k
    return n


# =============================================================================
# Serialization
# =============================================================================

def export(g: OrthoGraph, fmt: str = "json") -> bytes:
    """
    Serialize a graph.

    dimacs: comment lines with exact vertex coordinates, then "p edge n m"
    and 1-based "e i j" lines. json: vertex coordinate objects and a 0-based
    edge list.
    """
    if fmt == "dimacs":
        lines = ["c orthogonality graph"]
        for i, v in enumerate(g.vertices, start=1):
            lines.append(f"c v {i} {v.x} {v.y} {v.z}")
        lines.append(f"p edge {g.n} {g.m}")
        lines.extend(f"e {i + 1} {j + 1}" for i, j in g.edges)
        return ("\n".join(lines) + "\n").encode("utf-8")

    if fmt == "json":
        data = {
            "vertices": [
                {"index": i, "kind": g.kind(i), **v.to_json()}
                for i, v in enumerate(g.vertices)
            ],
            "edges": [list(e) for e in g.edges],
        }
        return json.dumps(data, indent=2).encode("utf-8")

    raise GraphFormatError(f"Unknown graph format: {fmt}")


def import_json(data: Union[bytes, str, dict]) -> OrthoGraph:
    """
    Rebuild a graph from its JSON export. Edges are recomputed from the
    coordinates and must match the stored list.
    """
    if isinstance(data, (bytes, str)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as e:
            raise GraphFormatError(f"Invalid graph JSON: {e}") from e
    try:
        vertices = [AlgSpherePoint.from_json(v) for v in data["vertices"]]
        stored = [tuple(e) for e in data.get("edges", [])]
    except (KeyError, TypeError, ValueError) as e:
        raise GraphFormatError(f"Malformed graph JSON: {e}") from e

    g = build_graph(vertices)
    if stored and sorted(stored) != sorted(g.edges):
        raise GraphFormatError("Stored edges do not match exact orthogonality of the vertices")
    return g


def _dimacs_int(field: str, raw: str) -> int:
    try:
        return int(field)
    except ValueError as e:
        raise GraphFormatError(f"Not an integer in {raw!r}: {field!r}") from e


def read_dimacs(text: str) -> tuple[int, list[tuple[int, int]]]:
    """
    Parse a DIMACS .col graph into (n, 0-based edges).

    Raises:
        GraphFormatError: On a missing header, a malformed line or an out-of-range edge
    """
    n: Optional[int] = None
    edges: list[tuple[int, int]] = []
    for raw in text.splitlines():
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if len(parts) != 4:
                raise GraphFormatError(f"Bad problem line: {raw!r}")
            n = _dimacs_int(parts[2], raw)
            if n < 0:
                raise GraphFormatError(f"Negative vertex count: {raw!r}")
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError("Edge line before problem line")
            if len(parts) != 3:
                raise GraphFormatError(f"Bad edge line: {raw!r}")
            i, j = _dimacs_int(parts[1], raw) - 1, _dimacs_int(parts[2], raw) - 1
            if not (0 <= i < n and 0 <= j < n) or i == j:
                raise GraphFormatError(f"Bad edge line: {raw!r}")
            edges.append((min(i, j), max(i, j)))
        else:
            raise GraphFormatError(f"Unknown line: {raw!r}")
    if n is None:
        raise GraphFormatError("Missing 'p edge n m' line")
    return n, sorted(set(edges))
