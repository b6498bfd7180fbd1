"""Standard Young tableaux: jeu-de-taquin minors, decks, and
reconstruction of a tableau from the set or multiset of its 1-minors,
with exhaustive brute-force verification at small sizes."""

from .census import (
    CensusReport,
    DifferentialReport,
    HBoundReport,
    ResourceLimitError,
    SizeMismatchError,
    VerificationError,
    VERIFY_SUITES,
    census,
    common_minor_count,
    compute_H1_exact,
    differential_check,
    involution_count,
    proposition_pair,
    verify_proposition,
    with_exact,
)
from .core import (
    Cell,
    EmptyInputError,
    EmptyShapeError,
    EntryError,
    OrderError,
    Partition,
    ShapeError,
    StandardTableau,
    TableauError,
    check_partition,
    conjugate,
    enumerate_partitions,
    enumerate_syt,
    enumerate_syt_all,
    is_rectangular,
    outer_corners,
    shape_union,
)
from .reconstruct import (
    Ambiguous,
    Invalid,
    NoMatchError,
    Outcome,
    TooSmallError,
    Unique,
    UnsupportedShapeError,
    format_outcome,
    locate_max,
    reconstruct_base,
    reconstruct_from_multiset,
    reconstruct_from_set,
    reconstruct_shape,
    reduce_deck,
)
from .taquin import (
    Deck,
    DeckMultiset,
    NotADeckError,
    OutOfRangeError,
    delete_entry,
    minor_multiset,
    minor_set,
    slide_path,
)

__version__ = "0.1.0"

__all__ = [
    "Ambiguous",
    "Cell",
    "CensusReport",
    "Deck",
    "DeckMultiset",
    "DifferentialReport",
    "EmptyInputError",
    "EmptyShapeError",
    "EntryError",
    "HBoundReport",
    "Invalid",
    "NoMatchError",
    "NotADeckError",
    "OrderError",
    "Outcome",
    "OutOfRangeError",
    "Partition",
    "ResourceLimitError",
    "ShapeError",
    "SizeMismatchError",
    "StandardTableau",
    "TableauError",
    "TooSmallError",
    "Unique",
    "UnsupportedShapeError",
    "VERIFY_SUITES",
    "VerificationError",
    "census",
    "check_partition",
    "common_minor_count",
    "compute_H1_exact",
    "conjugate",
    "delete_entry",
    "differential_check",
    "enumerate_partitions",
    "enumerate_syt",
    "enumerate_syt_all",
    "format_outcome",
    "involution_count",
    "is_rectangular",
    "locate_max",
    "minor_multiset",
    "minor_set",
    "outer_corners",
    "proposition_pair",
    "reconstruct_base",
    "reconstruct_from_multiset",
    "reconstruct_from_set",
    "reconstruct_shape",
    "reduce_deck",
    "shape_union",
    "slide_path",
    "verify_proposition",
    "with_exact",
]
