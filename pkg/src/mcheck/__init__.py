"""Decision procedures for matrix conditions (linear Mal'tsev conditions read
as closure properties of relations).

The main entry points are :func:`implies_lex`, :func:`implies_cube_simple`,
:func:`implies_cube_general` and :func:`is_trivial`.
"""

from .cubeterm import (
    BooleanOperation,
    CubeRelation,
    CubeVerdict,
    GeneralVerdict,
    TwoElementAlgebra,
    algebra_satisfies,
    build_counterexample_algebra,
    comparison_count,
    implies_cube_family,
    implies_cube_general,
    implies_cube_simple,
    preserves,
)
from .lex import LexVerdict, implies_lex, replay, saturate
from .matrix import (
    ExtendedMatrix,
    MatrixError,
    ari,
    cube,
    edge,
    family,
    interpret_row,
    intersect,
    maj,
    mal,
    perm,
    presentation,
    simple,
    validate,
)
from .textformat import ParseError, format_matrix, parse_matrix, parse_matrix_text
from .triviality import Partition, is_trivial, join, row_kernel

__version__ = "0.1.0"

__all__ = [
    "algebra_satisfies",
    "ari",
    "BooleanOperation",
    "build_counterexample_algebra",
    "comparison_count",
    "cube",
    "CubeRelation",
    "CubeVerdict",
    "edge",
    "ExtendedMatrix",
    "family",
    "format_matrix",
    "GeneralVerdict",
    "implies_cube_family",
    "implies_cube_general",
    "implies_cube_simple",
    "implies_lex",
    "interpret_row",
    "intersect",
    "is_trivial",
    "join",
    "LexVerdict",
    "maj",
    "mal",
    "MatrixError",
    "parse_matrix",
    "parse_matrix_text",
    "ParseError",
    "Partition",
    "perm",
    "presentation",
    "preserves",
    "replay",
    "row_kernel",
    "saturate",
    "simple",
    "TwoElementAlgebra",
    "validate",
]
