# Orthochroma - exact colourings of the sphere's orthogonality graph

from orthochroma.numtheory import (
    BigRational,
    INFINITY,
    NumTheoryError,
    NotPrimeError,
    QSqrt2,
    SQRT2,
    ValExponent,
    ZeroInverseError,
    is_prime,
    nu_greater,
    p_valuation,
)
from orthochroma.projective import (
    Colour3,
    PrimitiveTriple,
    ZeroVectorError,
    colour_valuation,
    line_scan,
    normalize,
)
from orthochroma.sphere import (
    AlgSpherePoint,
    InvalidSpherePointError,
    SpherePoint,
    alg_point,
    antipode,
    colour3,
    from_projective,
    inner,
    stereo_inverse,
    stereo_project,
)
from orthochroma.fourcolor import (
    COLOUR4_TABLE,
    Colour4,
    SignPattern,
    UnreliableClassificationError,
    colour4,
    colour4_float,
    sign_pattern,
    verify_table,
)
from orthochroma.graphs import (
    GraphTooLargeError,
    OrthoGraph,
    build_graph,
    chromatic_number,
    export,
    validate_colouring,
)
from orthochroma.generators import (
    CircleError,
    CoverageGrid,
    ExactRotation,
    circle_scan,
    coverage,
    enum_points,
    orbit,
    rotation_y,
    rotation_z,
)
from orthochroma.search import search_4chromatic
from orthochroma.claims import claims
from orthochroma.suites import ACCEPTANCE, SuiteProfile, run_suites

__all__ = [
    # Number theory
    "BigRational",
    "INFINITY",
    "NumTheoryError",
    "NotPrimeError",
    "QSqrt2",
    "SQRT2",
    "ValExponent",
    "ZeroInverseError",
    "is_prime",
    "nu_greater",
    "p_valuation",
    # Projective plane
    "Colour3",
    "PrimitiveTriple",
    "ZeroVectorError",
    "colour_valuation",
    "line_scan",
    "normalize",
    # Sphere
    "AlgSpherePoint",
    "InvalidSpherePointError",
    "SpherePoint",
    "alg_point",
    "antipode",
    "colour3",
    "from_projective",
    "inner",
    "stereo_inverse",
    "stereo_project",
    # Four colouring
    "COLOUR4_TABLE",
    "Colour4",
    "SignPattern",
    "UnreliableClassificationError",
    "colour4",
    "colour4_float",
    "sign_pattern",
    "verify_table",
    # Graphs
    "GraphTooLargeError",
    "OrthoGraph",
    "build_graph",
    "chromatic_number",
    "export",
    "validate_colouring",
    # Generators
    "CircleError",
    "CoverageGrid",
    "ExactRotation",
    "circle_scan",
    "coverage",
    "enum_points",
    "orbit",
    "rotation_y",
    "rotation_z",
    # Reports
    "search_4chromatic",
    "claims",
    "run_suites",
    "SuiteProfile",
    "ACCEPTANCE",
]
