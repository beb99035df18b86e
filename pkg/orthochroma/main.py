# Orthochroma CLI
"""
Command-line interface for orthochroma.

Usage:
    python -m orthochroma.main gen --H 20
    python -m orthochroma.main color --mode four 0 0 1
    python -m orthochroma.main verify --p 2 --H 100
    python -m orthochroma.main verify --acceptance
    python -m orthochroma.main claims
    python -m orthochroma.main chromatic triangle.col

Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
Output goes to stdout (JSON lines by default) and is identical for identical
arguments; logs go to stderr.
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional, Union

from pydantic import BaseModel

from orthochroma.claims import claims
from orthochroma.config import ConfigurationError, Settings, load_settings
from orthochroma.fourcolor import (
    ALL_PATTERNS,
    FourColourError,
    colour4,
    colour4_float,
    sign_pattern,
    table_as_json,
    verify_table,
)
from orthochroma.generators import (
    CoverageGrid,
    GeneratorError,
    circle_scan,
    coverage,
    enum_points,
    orbit,
    rotation_y,
    rotation_z,
)
from orthochroma.graphs import (
    GraphError,
    GraphTooLargeError,
    export,
    import_json,
    read_dimacs,
    solve_chromatic,
)
from orthochroma.models import RunConfig, SearchConfig
from orthochroma.numtheory import NumTheoryError
from orthochroma.parsing import VectorParseError, parse_vector
from orthochroma.projective import ProjectiveError, colour_valuation, normalize
from orthochroma.run_logger import RunLogger, write_atomic
from orthochroma.search import build_pool, search_4chromatic
from orthochroma.sphere import SphereError, SpherePoint, from_projective
from orthochroma.sphere import colour3 as parity_colour
from orthochroma.suites import ACCEPTANCE, ACCEPTANCE_HEIGHT, run_suites


logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

# Errors caused by bad arguments or input files
INPUT_ERRORS = (
    VectorParseError,
    ConfigurationError,
    NumTheoryError,
    ProjectiveError,
    SphereError,
    FourColourError,
    GraphError,
    GeneratorError,
    OSError,
    ValueError,
)


class UsageError(ValueError):
    """Raised for flag combinations argparse cannot reject on its own."""
    pass


@dataclass
class CommandResult:
    """What a subcommand produced."""
    lines: list[str] = field(default_factory=list)
    report: Optional[Union[BaseModel, dict]] = None
    exit_code: int = EXIT_OK


# =============================================================================
# Helpers
# =============================================================================

def _dump(data: Union[BaseModel, dict]) -> str:
    if isinstance(data, BaseModel):
        return data.model_dump_json()
    return json.dumps(data)


def _header(config: RunConfig) -> str:
    return json.dumps({"run": config.model_dump()})


def _point_record(P: SpherePoint) -> dict:
    return {**P.to_json(), "colour": parity_colour(P).label}


def _require_format(config: RunConfig, allowed: tuple[str, ...]) -> None:
    if config.output_format not in allowed:
        raise UsageError(
            f"{config.subcommand} does not support --format {config.output_format} "
            f"(choose from {', '.join(allowed)})"
        )


def parse_grid(text: str) -> CoverageGrid:
    """Parse "equator:CELLS" or "sphere:LATxLON"."""
    kind, _, shape = text.partition(":")
    try:
        if kind == "equator":
            return CoverageGrid.equator(int(shape))
        if kind == "sphere":
            n_lat, _, n_lon = shape.partition("x")
            return CoverageGrid.sphere(int(n_lat), int(n_lon))
    except ValueError as e:
        raise UsageError(f"Bad grid {text!r}: {e}") from e
    raise UsageError(f"Bad grid {text!r}: expected equator:CELLS or sphere:LATxLON")


def _search_config(args: argparse.Namespace, settings: Settings) -> SearchConfig:
    return SearchConfig(
        generators=args.generators,
        height=args.H,
        orbit_length=args.N,
        explicit_points=[list(p) for p in (args.point or [])],
        strategy=getattr(args, "strategy", "degree"),
        subset_size=getattr(args, "subset_size", 12),
        seed=args.seed,
        workers=settings.clamp_workers(args.workers),
    )


# =============================================================================
# Subcommands
# =============================================================================

def cmd_gen(args: argparse.Namespace, config: RunConfig, settings: Settings) -> CommandResult:
    """Enumerate rational sphere points."""
    _require_format(config, ("json", "text"))
    result = CommandResult()
    points = enum_points(args.mode, config.height, workers=settings.clamp_workers(args.workers))
    if config.output_format == "json":
        result.lines.append(_header(config))
        result.lines.extend(json.dumps(_point_record(P)) for P in points)
    else:
        result.lines.append(f"# gen mode={args.mode} H={config.height} seed={config.seed}")
        result.lines.extend(f"{P} {parity_colour(P).label}" for P in points)
    return result


def cmd_color(args: argparse.Namespace, config: RunConfig, settings: Settings) -> CommandResult:
    """Colour one input vector."""
    _require_format(config, ("json", "text"))
    vector = parse_vector(args.vector)

    if args.mode == "four":
        if vector.exact:
            colour = colour4(sign_pattern(vector.values))
        else:
            colour = colour4_float(vector.values, tol=config.tolerance)
    elif not vector.exact:
        raise VectorParseError(f"--mode {args.mode} needs an exact vector; floats only work with --mode four")
    elif args.mode == "valuation":
        colour = colour_valuation(normalize(*vector.as_integers()), config.p)
    else:
        point = from_projective(vector.as_integers())
        if point is None:
            raise VectorParseError(f"Direction {vector.as_integers()} has no rational point on the sphere")
        colour = parity_colour(point)

    record = {
        "mode": args.mode,
        "vector": [str(v) for v in vector.values],
        "colour": colour.label,
        "seed": config.seed,
    }
    if args.mode == "valuation":
        record["p"] = config.p
    result = CommandResult(report=record)
    result.lines.append(json.dumps(record) if config.output_format == "json" else colour.label)
    return result


def cmd_verify(args: argparse.Namespace, config: RunConfig, settings: Settings) -> CommandResult:
    """Run every property suite and report a pass/fail matrix."""
    _require_format(config, ("json", "text"))
    if args.acceptance:
        matrix = run_suites(p=config.p, height=ACCEPTANCE_HEIGHT, seed=config.seed, profile=ACCEPTANCE)
    else:
        matrix = run_suites(p=config.p, height=config.height, seed=config.seed, samples=args.samples)
    result = CommandResult(report=matrix, exit_code=EXIT_OK if matrix.passed else EXIT_FAILED)
    if config.output_format == "json":
        result.lines.append(_dump(matrix))
    else:
        result.lines.append(f"# verify p={matrix.p} H={matrix.height} seed={matrix.seed} profile={matrix.profile}")
        for r in matrix.results:
            status = "PASS" if r.passed else "FAIL"
            line = f"{status}  {r.module}.{r.check}  {r.checked - r.violations}/{r.checked}"
            result.lines.append(line if r.passed else f"{line}  {r.detail}")
        result.lines.append("ALL PASS" if matrix.passed else "FAILED")
    return result


def cmd_graph(args: argparse.Namespace, config: RunConfig, settings: Settings) -> CommandResult:
    """Build the orthogonality graph of a point pool and export it."""
    _require_format(config, ("json", "dimacs"))
    g = build_pool(_search_config(args, settings))
    text = export(g, config.output_format).decode("utf-8")
    if config.output_format == "dimacs":
        first, _, rest = text.partition("\n")
        text = f"{first}\nc seed={config.seed}\n{rest}"
    else:
        # import_json ignores the extra key, so the file stays readable
        text = json.dumps({**json.loads(text), "run": config.model_dump()}, indent=2)
    return CommandResult(lines=[text.rstrip("\n")], report={"n": g.n, "m": g.m, "seed": config.seed})


def _load_graph_file(path: Path) -> tuple[int, list[tuple[int, int]]]:
    text = path.read_text(encoding="utf-8")
    if text.lstrip().startswith("{"):
        g = import_json(text)
        return g.n, list(g.edges)
    return read_dimacs(text)


def cmd_chromatic(args: argparse.Namespace, config: RunConfig, settings: Settings) -> CommandResult:
    """Exact chromatic number of a graph file (JSON or DIMACS) or a generated pool."""
    _require_format(config, ("json", "text"))
    cap = args.cap if args.cap is not None else settings.solver_cap
    if args.graph is not None:
        n, edges = _load_graph_file(Path(args.graph))
    else:
        g = build_pool(_search_config(args, settings))
        n, edges = g.n, list(g.edges)

    try:
        solved = solve_chromatic(n, edges, cap=cap)
    except GraphTooLargeError as e:
        record = {
            "n": e.n, "m": len(edges), "exact": False, "cap": e.cap,
            "lower_bound": e.lower_bound, "upper_bound": e.upper_bound, "seed": config.seed,
        }
        line = json.dumps(record) if config.output_format == "json" else (
            f"chi in [{e.lower_bound}, {e.upper_bound}] (n={e.n} exceeds cap {e.cap})"
        )
        return CommandResult(lines=[line], report=record, exit_code=EXIT_FAILED)

    record = {"n": n, "m": len(edges), "exact": True, "seed": config.seed, **solved.model_dump()}
    line = json.dumps(record) if config.output_format == "json" else f"chi = {solved.chi}"
    return CommandResult(lines=[line], report=record)


def cmd_orbit(args: argparse.Namespace, config: RunConfig, settings: Settings) -> CommandResult:
    """Rotation orbit of a point, with optional coverage grid."""
    _require_format(config, ("json", "text"))
    start = SpherePoint(*args.start)
    R = rotation_z() if args.axis == "z" else rotation_y()
    steps = orbit(R, start, config.orbit_length)
    result = CommandResult()

    if config.output_format == "json":
        result.lines.append(_header(config))
        result.lines.extend(
            json.dumps({"step": i, **P.to_json(), "colour": c.label}) for i, (P, c) in enumerate(steps)
        )
    else:
        result.lines.append(f"# orbit axis={args.axis} start={start} N={config.orbit_length}")
        result.lines.extend(f"{i} {P} {c.label}" for i, (P, c) in enumerate(steps))

    colours = {c for _, c in steps}
    logger.info(f"Orbit of {start}: {len(steps)} points, colours {sorted(c.label for c in colours)}")
    if args.grid:
        report = coverage((P for P, _ in steps), parse_grid(args.grid))
        result.report = report
        if config.output_format == "json":
            result.lines.append(_dump({"coverage": report.model_dump()}))
        else:
            result.lines.append(f"# coverage {report.kind} {report.shape}: {report.empty_cells} empty cells")
    if len(colours) != 1:
        result.exit_code = EXIT_FAILED
    return result


def cmd_circle(args: argparse.Namespace, config: RunConfig, settings: Settings) -> CommandResult:
    """Rational points on the circle x.u = v.u."""
    _require_format(config, ("json", "text"))
    u, v = SpherePoint(*args.u), SpherePoint(*args.v)
    scan = circle_scan(u, v, config.height)
    summary = {
        "u": str(u),
        "v": str(v),
        "height": config.height,
        "points": len(scan.points),
        "colour_u": scan.colour_u.label,
        "form_odd": scan.form_parity_odd,
        "all_match_u": scan.all_match_u,
        "none_match_u": scan.none_match_u,
        "seed": config.seed,
    }
    # Same parity class: every point shares u's colour; otherwise none does
    holds = scan.all_match_u if scan.form_parity_odd else scan.none_match_u
    result = CommandResult(report=summary, exit_code=EXIT_OK if holds else EXIT_FAILED)
    if config.output_format == "json":
        result.lines.extend(json.dumps(_point_record(P)) for P, _ in scan.points)
        result.lines.append(json.dumps({"summary": summary}))
    else:
        result.lines.extend(f"{P} {c.label}" for P, c in scan.points)
        result.lines.append(f"# {len(scan.points)} points, colour of u {scan.colour_u.label}, dichotomy holds: {holds}")
    return result


def cmd_claims(args: argparse.Namespace, config: RunConfig, settings: Settings) -> CommandResult:
    """Recompute every checkable claim; findings are reported, not failed."""
    _require_format(config, ("json", "text"))
    report = claims(height=config.height, orbit_length=config.orbit_length)
    result = CommandResult(report=report, exit_code=EXIT_OK if report.passed else EXIT_FAILED)
    if config.output_format == "json":
        result.lines.append(_header(config))
        result.lines.append(_dump(report))
        return result

    result.lines.append(f"# claims H={config.height} N={config.orbit_length} seed={config.seed}")
    for claim in report.claims:
        result.lines.append(f"({claim.key}) {'PASS' if claim.passed else 'FAIL'}  {claim.statement}")
        result.lines.extend(f"      {k} = {v}" for k, v in claim.values.items())
        result.lines.extend(f"      ! {finding}" for finding in claim.findings)
    return result


def cmd_table(args: argparse.Namespace, config: RunConfig, settings: Settings) -> CommandResult:
    """Print the sign-pattern colour table and its certificate."""
    _require_format(config, ("json", "text"))
    cert = verify_table()
    result = CommandResult(report=cert, exit_code=EXIT_OK if cert.passed else EXIT_FAILED)
    if config.output_format == "json":
        result.lines.append(_header(config))
        result.lines.append(json.dumps({"table": table_as_json(), "certificate": cert.model_dump()}))
    else:
        result.lines.extend(f"{p} {colour4(p).label}" for p in ALL_PATTERNS)
        result.lines.append(
            f"# {cert.pairs_checked} pairs, {cert.constraints_checked} constraints, "
            f"{len(cert.violations)} violations, antipodal={cert.antipodal}, seed={config.seed}"
        )
    return result


def cmd_search(args: argparse.Namespace, config: RunConfig, settings: Settings) -> CommandResult:
    """Exploratory search for 4-chromatic subgraphs."""
    _require_format(config, ("json", "text"))
    result = CommandResult()
    if config.output_format == "json":
        result.lines.append(_header(config))
        report = search_4chromatic(
            _search_config(args, settings),
            config.budget,
            on_candidate=lambda c: result.lines.append(c.model_dump_json()),
        )
        result.lines.append(_dump({"summary": report.model_dump()}))
    else:
        report = search_4chromatic(_search_config(args, settings), config.budget)
        result.lines.append(
            f"# search seed={report.seed} pool={report.pool_size} "
            f"evaluated={report.candidates_evaluated} best chi={report.best_lower_bound}"
        )
        result.lines.extend(f"chi={chi}: {count}" for chi, count in sorted(report.chi_histogram.items()))
        result.lines.extend(f"FOUND candidate {c.index}: chi={c.chi} vertices={c.vertices}" for c in report.found)
    result.report = report
    return result


Handler = Callable[[argparse.Namespace, RunConfig, Settings], CommandResult]

COMMANDS: dict[str, Handler] = {
    "gen": cmd_gen,
    "color": cmd_color,
    "verify": cmd_verify,
    "graph": cmd_graph,
    "chromatic": cmd_chromatic,
    "orbit": cmd_orbit,
    "circle": cmd_circle,
    "claims": cmd_claims,
    "table": cmd_table,
    "search": cmd_search,
}


# =============================================================================
# Parser
# =============================================================================

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, default=2, help="Prime for valuation colourings (default: 2)")
    common.add_argument("--H", type=int, default=100, help="Height bound (default: 100)")
    common.add_argument("--N", type=int, default=1000, help="Orbit length (default: 1000)")
    common.add_argument("--tol", type=float, default=1e-9, help="Float snapping tolerance (default: 1e-9)")
    common.add_argument("--seed", type=int, default=0, help="Seed, echoed in output (default: 0)")
    common.add_argument("--format", choices=["json", "dimacs", "text"], default="json", help="Output format")
    common.add_argument("--budget", type=int, default=100, help="Search budget in candidates (default: 100)")
    common.add_argument("--out", type=str, help="Also write the output to this file")
    common.add_argument("--save", action="store_true", help="Save config, output and report under ORTHOCHROMA_RUNS_DIR")
    common.add_argument("--workers", type=int, default=1, help="Worker processes, capped by ORTHOCHROMA_THREADS")
    common.add_argument("--verbose", "-v", action="store_true", help="Debug logging on stderr")

    pools = argparse.ArgumentParser(add_help=False)
    pools.add_argument(
        "--generators", nargs="+", choices=["rational", "sqrt2", "orbit", "explicit"],
        default=["rational"], help="Point pools (default: rational)",
    )
    pools.add_argument(
        "--point", nargs=3, type=int, action="append", metavar=("X", "Y", "Z"),
        help="Direction for the explicit pool (repeatable)",
    )

    parser = argparse.ArgumentParser(
        prog="orthochroma",
        description="Exact colourings of the sphere's orthogonality graph",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s gen --H 20 --format text
  %(prog)s color --mode four 0 0 1
  %(prog)s color --mode valuation --p 3 -- -1 3 1
  %(prog)s verify --p 2 --H 100
  %(prog)s verify --acceptance
  %(prog)s orbit --N 1000 --grid equator:100
  %(prog)s circle --u 1 0 0 1 --v 0 0 1 1 --H 50
  %(prog)s chromatic graph.col
  %(prog)s search --generators rational sqrt2 --budget 50
        """
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("gen", parents=[common], help="Enumerate rational sphere points")
    p.add_argument("--mode", choices=["quadruple", "stereo"], default="quadruple")

    p = sub.add_parser("color", parents=[common], help="Colour a vector")
    p.add_argument("--mode", choices=["three", "valuation", "four"], default="three")
    p.add_argument("vector", nargs="+", help="Three coordinates: integers, fractions (3/5) or floats")

    p = sub.add_parser("verify", parents=[common], help="Run every property suite")
    p.add_argument("--samples", type=int, default=1000, help="Cases per sampled suite (default: 1000)")
    p.add_argument(
        "--acceptance", action="store_true",
        help=f"Full-size run at H={ACCEPTANCE_HEIGHT}; ignores --H and --samples",
    )

    p = sub.add_parser("graph", parents=[common, pools], help="Export an orthogonality graph")
    p.set_defaults(H=5, N=20)

    p = sub.add_parser("chromatic", parents=[common, pools], help="Exact chromatic number")
    p.add_argument("graph", nargs="?", help="Graph file (JSON export or DIMACS .col)")
    p.add_argument("--cap", type=int, help="Solver vertex cap (default: ORTHOCHROMA_SOLVER_CAP)")
    p.set_defaults(H=5, N=20)

    p = sub.add_parser("orbit", parents=[common], help="Rotation orbit of a point")
    p.add_argument("--axis", choices=["z", "y"], default="z")
    p.add_argument("--start", nargs=4, type=int, default=[1, 0, 0, 1], metavar=("A", "B", "C", "D"))
    p.add_argument("--grid", type=str, help="Coverage grid: equator:CELLS or sphere:LATxLON")

    p = sub.add_parser("circle", parents=[common], help="Scan the circle x.u = v.u")
    p.add_argument("--u", nargs=4, type=int, required=True, metavar=("A", "B", "C", "D"))
    p.add_argument("--v", nargs=4, type=int, required=True, metavar=("A", "B", "C", "D"))

    sub.add_parser("claims", parents=[common], help="Recompute the counterexample claims")
    sub.add_parser("table", parents=[common], help="4-colouring table and certificate")

    p = sub.add_parser("search", parents=[common, pools], help="Search for 4-chromatic subgraphs")
    p.add_argument("--strategy", choices=["random", "degree"], default="degree")
    p.add_argument("--subset-size", type=int, default=12)
    p.set_defaults(H=5, N=20)

    return parser


# =============================================================================
# Entry Point
# =============================================================================

def main(argv: Optional[list[str]] = None) -> int:
    """Run the CLI and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    logging.basicConfig(level=logging.WARNING, format=LOG_FORMAT, stream=sys.stderr)
    logging.getLogger().setLevel(logging.DEBUG if args.verbose else logging.WARNING)

    try:
        settings = load_settings()
        config = RunConfig(
            subcommand=args.subcommand,
            p=args.p,
            height=args.H,
            orbit_length=args.N,
            tolerance=args.tol,
            seed=args.seed,
            output_format=args.format,
            budget=args.budget,
        )
        result = COMMANDS[args.subcommand](args, config, settings)
    except INPUT_ERRORS as e:
        logger.debug("Input error", exc_info=True)
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE

    output = "\n".join(result.lines) + "\n"
    sys.stdout.write(output)

    if args.out:
        write_atomic(Path(args.out), output)
    if args.save:
        run_logger = RunLogger(settings.runs_dir)
        run_logger.save_config(config)
        run_logger.save_output(config, output)
        if result.report is not None:
            run_logger.save_report(config, result.report)
        logger.info(f"Saved run to {run_logger.run_dir(config)}")

    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
