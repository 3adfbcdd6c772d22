"""dyckcat: an exact workbench for Dyck paths with catastrophes.

Enumeration, pattern-occurrence equivalence classes, canonical
representatives, exact rational generating series, and a self-verification
harness that cross-checks every layer against brute force.
"""

from .paths import (
    DEFAULT_MAX_LENGTH,
    BruteForceBoundExceeded,
    CatastropheHeightMismatch,
    CatDecomposition,
    NegativeHeight,
    NoCatastrophe,
    OpenPath,
    Path,
    PathError,
    PositionOutOfRange,
    WordSyntaxError,
    count_paths,
    decompose_at_catastrophes,
    dyck_paths,
    enumerate_paths,
    format_path,
    parse_path,
)
from .patterns import (
    PATTERNS,
    SIZED_PATTERNS,
    NotAnOccurrence,
    Profile,
    UnknownPattern,
    count_classes,
    equivalent,
    occurrence_height,
    occurrences,
    partition_classes,
)
from .ddnorm import (
    DD_FAMILIES,
    ConditionCStatus,
    PreconditionViolated,
    canonical_dd,
    collapse_catastrophes,
    eliminate_isolated_tail,
    in_dd_family,
    psi,
    reduce_catastrophe,
    satisfies_condition_C,
)
from .reps import canonical, is_representative, representatives_of_length
from .series import (
    DEFAULT_ORDER,
    GF_NAMES,
    PATTERN_SERIES,
    AsymptoticDiagnostic,
    DivisionByNonUnit,
    NonSquareConstantTerm,
    RationalSeries,
    SeriesError,
    UnknownName,
    asymptotic_diagnostic,
    check_algebraic_identity,
    closed_form_eval,
    gf,
    parity_merge_check,
    recurrence_eval,
    sequence_term,
)

__version__ = "0.1.0"

__all__ = [
    "BruteForceBoundExceeded",
    "CatDecomposition",
    "CatastropheHeightMismatch",
    "ConditionCStatus",
    "DD_FAMILIES",
    "DEFAULT_MAX_LENGTH",
    "DEFAULT_ORDER",
    "DivisionByNonUnit",
    "GF_NAMES",
    "NegativeHeight",
    "NoCatastrophe",
    "NonSquareConstantTerm",
    "NotAnOccurrence",
    "OpenPath",
    "PATTERNS",
    "PATTERN_SERIES",
    "Path",
    "PathError",
    "PositionOutOfRange",
    "PreconditionViolated",
    "Profile",
    "RationalSeries",
    "SeriesError",
    "SIZED_PATTERNS",
    "UnknownName",
    "UnknownPattern",
    "WordSyntaxError",
    "AsymptoticDiagnostic",
    "asymptotic_diagnostic",
    "canonical",
    "canonical_dd",
    "check_algebraic_identity",
    "closed_form_eval",
    "collapse_catastrophes",
    "count_classes",
    "count_paths",
    "decompose_at_catastrophes",
    "dyck_paths",
    "eliminate_isolated_tail",
    "enumerate_paths",
    "equivalent",
    "format_path",
    "gf",
    "in_dd_family",
    "is_representative",
    "occurrence_height",
    "occurrences",
    "parity_merge_check",
    "parse_path",
    "partition_classes",
    "psi",
    "recurrence_eval",
    "reduce_catastrophe",
    "representatives_of_length",
    "satisfies_condition_C",
    "sequence_term",
    "__version__",
]
