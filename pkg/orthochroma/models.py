# Orthochroma Models
"""
Pydantic models for the reports, configs and certificates of orthochroma.
Exact point types live next to their arithmetic (numtheory, sphere); the
models here are what gets serialized.
"""

from typing import Literal, Optional
from pydantic import BaseModel, Field, field_validator, model_validator


# =============================================================================
# Four Colouring Certificate Models
# =============================================================================

class TableViolation(BaseModel):
    """A pair of sign patterns that can be orthogonal but share a colour."""
    first: str = Field(description="First sign pattern, e.g. '+-+'")
    second: str = Field(description="Second sign pattern")
    relation: str = Field(description="Orthogonality class: always or possible")
    colour: str = Field(description="The shared colour")


class TableCertificate(BaseModel):
    """Result of checking the 4-colouring table on all ordered pattern pairs."""
    passed: bool = Field(description="True when no constraint is violated")
    pairs_checked: int = Field(ge=0, description="Ordered pattern pairs examined (676)")
    constraints_checked: int = Field(ge=0, description="Pairs that admit orthogonal vectors")
    constraints: list[str] = Field(description="Every checked constraint as 'p1|p2:relation'")
    violations: list[TableViolation] = Field(default_factory=list, description="Violated constraints")
    antipodal: bool = Field(description="Whether the table gives antipodal patterns equal colours")


# =============================================================================
# Graph Models
# =============================================================================

class Colouring(BaseModel):
    """Vertex index -> colour index (0-based) with palette size k."""
    assignment: list[int] = Field(description="Colour of each vertex, by vertex index")
    k: int = Field(ge=0, description="Palette size")

    @field_validator("assignment")
    @classmethod
    def colours_nonnegative(cls, v: list[int]) -> list[int]:
        if any(c < 0 for c in v):
            raise ValueError("Colour indices must be nonnegative")
        return v


class ChromaticResult(BaseModel):
    """Exact chromatic number with a witness and the bounds that framed the search."""
    chi: int = Field(ge=0, description="Chromatic number")
    witness: Colouring = Field(description="A proper colouring with chi colours")
    lower_bound: int = Field(ge=0, description="Maximum clique size")
    upper_bound: int = Field(ge=0, description="Colours used by greedy DSATUR")
    nodes_explored: int = Field(ge=0, description="Branch-and-bound search nodes")

    @model_validator(mode="after")
    def bounds_sandwich(self) -> "ChromaticResult":
        if not self.lower_bound <= self.chi <= self.upper_bound:
            raise ValueError(
                f"chi={self.chi} outside bounds [{self.lower_bound}, {self.upper_bound}]"
            )
        return self


# =============================================================================
# Search Models
# =============================================================================

GeneratorKind = Literal["rational", "sqrt2", "orbit", "explicit"]
SubsetStrategy = Literal["random", "degree"]


class SearchConfig(BaseModel):
    """Point generators and subset strategy for the 4-chromatic search."""
    generators: list[GeneratorKind] = Field(
        default_factory=lambda: ["rational"],
        description="Point pools to draw vertices from"
    )
    height: int = Field(default=5, ge=1, description="Height bound H for enumerated pools")
    orbit_length: int = Field(default=20, ge=1, description="Orbit points per axis for the orbit pool")
    explicit_points: list[list[int]] = Field(
        default_factory=list,
        description="Integer triples for the explicit pool (directions with s^2 or 2s^2 norm)"
    )
    strategy: SubsetStrategy = Field(default="degree", description="How candidate subsets are drawn")
    subset_size: int = Field(default=12, ge=1, description="Vertices per candidate subgraph")
    seed: int = Field(default=0, description="Base seed; candidate i uses (seed, i)")
    workers: int = Field(default=1, ge=1, description="Worker processes for candidate evaluation")


class SearchCandidate(BaseModel):
    """One evaluated candidate subgraph."""
    index: int = Field(ge=0, description="Candidate number within the run")
    vertices: list[int] = Field(description="Pool indices of the chosen vertices")
    edges: int = Field(ge=0, description="Edge count of the induced subgraph")
    chi: Optional[int] = Field(default=None, description="Exact chromatic number, if solved")
    lower_bound: int = Field(ge=0, description="Clique lower bound")
    upper_bound: int = Field(ge=0, description="DSATUR upper bound")


class SearchReport(BaseModel):
    """Summary of a search run."""
    seed: int = Field(description="Seed echoed for reproduction")
    budget: int = Field(ge=0, description="Candidates requested")
    pool_size: int = Field(ge=0, description="Distinct points available to the search")
    candidates_evaluated: int = Field(ge=0, description="Candidates actually solved")
    best_lower_bound: int = Field(default=0, ge=0, description="Largest chi seen")
    chi_histogram: dict[int, int] = Field(default_factory=dict, description="chi -> count")
    found: list[SearchCandidate] = Field(default_factory=list, description="Candidates with chi >= 4")


# =============================================================================
# Coverage Models
# =============================================================================

class CoverageReport(BaseModel):
    """Empirical hit counts of points over an angular grid."""
    kind: Literal["equator", "sphere"] = Field(description="Grid domain")
    shape: list[int] = Field(description="Grid shape: [cells] or [n_lat, n_lon]")
    counts: list[int] = Field(description="Hits per cell, row-major")
    total_points: int = Field(ge=0, description="Points offered to the grid")
    skipped_points: int = Field(ge=0, description="Points outside the grid domain")
    empty_cells: int = Field(ge=0, description="Cells with no hit")


# =============================================================================
# Claims & Verification Models
# =============================================================================

class ClaimResult(BaseModel):
    """One checkable assertion with its computed values."""
    key: str = Field(description="Short identifier, a-f")
    statement: str = Field(description="The assertion being checked")
    passed: bool = Field(description="Whether the computed values confirm it")
    values: dict[str, str] = Field(default_factory=dict, description="Computed values")
    findings: list[str] = Field(default_factory=list, description="Annotated discrepancies")


class ClaimsReport(BaseModel):
    """All claims; discrepancies are findings, not failures."""
    claims: list[ClaimResult] = Field(description="Claims in order")

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)


class SuiteResult(BaseModel):
    """Outcome of one property suite."""
    module: str = Field(description="Module the property belongs to")
    check: str = Field(description="Property name")
    passed: bool = Field(description="True when no violation was found")
    checked: int = Field(ge=0, description="Cases examined")
    violations: int = Field(ge=0, description="Cases violating the property")
    detail: Optional[str] = Field(default=None, description="First violation, if any")


class VerificationMatrix(BaseModel):
    """Pass/fail matrix of every suite."""
    p: int = Field(description="Prime used by valuation suites")
    height: int = Field(ge=1, description="Height bound used by enumeration suites")
    seed: int = Field(description="Seed for sampled suites")
    profile: str = Field(default="scaled", description="Suite size profile: scaled or acceptance")
    results: list[SuiteResult] = Field(description="Suite results in run order")

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)


# =============================================================================
# CLI Models
# =============================================================================

OutputFormat = Literal["json", "dimacs", "text"]


class RunConfig(BaseModel):
    """Parsed command line configuration."""
    subcommand: str = Field(description="Subcommand to run")
    p: int = Field(default=2, description="Prime for valuation colourings")
    height: int = Field(default=100, ge=1, description="Height bound H")
    orbit_length: int = Field(default=1000, ge=1, description="Orbit length N")
    tolerance: float = Field(default=1e-9, ge=0, description="Float snapping tolerance")
    seed: int = Field(default=0, description="Seed, echoed in output")
    output_format: OutputFormat = Field(default="json", description="Output format")
    budget: int = Field(default=100, ge=0, description="Search budget in candidates")
