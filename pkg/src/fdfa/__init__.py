"""Finite-difference analysis of regular languages over DFAs.

Two regular languages are finitely different when their symmetric difference
is a finite set of words.  This package decides that relation for states and
whole machines, splits a machine's states into finite and infinite parts,
merges away redundant finite-part states down to a smallest machine in the
class, builds the isomorphisms that relate such machines, and constructs
machine pairs realizing any chosen finite difference.
"""

from .classes import (
    StateClassPartition,
    class_matching,
    clear_memo,
    cross_finitely_different,
    dfas_finitely_different,
    signature_equal,
    state_class_partition,
    states_finitely_different,
    states_finitely_different_by_shape,
)
from .construct import ConstructionSpec, construct_pair
from .core import (
    AlphabetMismatchError,
    Dfa,
    ProductDfa,
    product_xor,
    shortest_cycle_word,
    shortest_word_to,
)
from .fmin import (
    FMergeError,
    MergeRecord,
    f_merge,
    f_minimize,
    flip_finite_acceptance,
    is_f_minimal,
    redirect_boundary_transition,
)
from .formats import (
    DfaFormatError,
    TrimWarning,
    format_word,
    parse_dfa,
    parse_word,
    parse_word_list,
    serialize_dfa,
    serialize_word_list,
)
from .iso import (
    RepresentativeAssignment,
    StateBijection,
    finite_part_iso,
    infinite_part_iso,
    iso_from_representatives,
    verify_bijection,
)
from .language import (
    EMPTY,
    FINITE,
    INFINITE,
    Classification,
    DiffResult,
    InfiniteLanguageError,
    Lasso,
    classify_language,
    enumerate_finite_language,
    languages_equal,
    symmetric_difference,
)
from .minimize import distinguishing_word, is_minimized, minimize, minimize_with_map
from .parts import PartsPartition, compute_parts, compute_parts_by_counting, words_reaching
from .rand import random_dfa

__version__ = "0.1.0"

__all__ = [
    "AlphabetMismatchError",
    "Classification",
    "ConstructionSpec",
    "Dfa",
    "DfaFormatError",
    "DiffResult",
    "EMPTY",
    "FINITE",
    "FMergeError",
    "INFINITE",
    "InfiniteLanguageError",
    "Lasso",
    "MergeRecord",
    "PartsPartition",
    "ProductDfa",
    "RepresentativeAssignment",
    "StateBijection",
    "StateClassPartition",
    "TrimWarning",
    "class_matching",
    "classify_language",
    "clear_memo",
    "compute_parts",
    "compute_parts_by_counting",
    "construct_pair",
    "cross_finitely_different",
    "dfas_finitely_different",
    "distinguishing_word",
    "enumerate_finite_language",
    "f_merge",
    "f_minimize",
    "finite_part_iso",
    "flip_finite_acceptance",
    "format_word",
    "infinite_part_iso",
    "is_f_minimal",
    "is_minimized",
    "iso_from_representatives",
    "languages_equal",
    "minimize",
    "minimize_with_map",
    "parse_dfa",
    "parse_word",
    "parse_word_list",
    "product_xor",
    "random_dfa",
    "redirect_boundary_transition",
    "serialize_dfa",
    "serialize_word_list",
    "shortest_cycle_word",
    "shortest_word_to",
    "signature_equal",
    "state_class_partition",
    "states_finitely_different",
    "states_finitely_different_by_shape",
    "symmetric_difference",
    "verify_bijection",
    "words_reaching",
]
