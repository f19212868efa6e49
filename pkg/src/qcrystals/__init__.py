"""Crystals of semistandard tableaux and their descent-class structure.

The package is organized around plain immutable values: partitions and
compositions are tuples, tableaux are tuples of row tuples, words are tuples
of letters. Every operation is a pure function, so everything here is safe
to call concurrently.
"""

from .errors import (
    DegreeMismatch, EmptyExpansion, EmptyInput, EntryOutOfRange, InternalError,
    InvalidPair, InvalidParameters, NotSymmetric, QCrystalsError,
)
from .tableaux import (
    HorizontalBandParsing,
    check_composition, check_partition, compositions_of, descent_composition,
    destandardize, enumerate_ssyt, enumerate_syt, highest_weight_tableau,
    hook_length_count, is_semistandard, is_standard, minimal_parsing,
    partitions_of, reading_word, refines, sources_of_type, standardize_tableau,
    standardize_word, weight_of, word_descent_composition,
)
from .crystal import (
    CrystalGraph, ParenReduction,
    e_tableau, e_word, f_tableau, f_word, generate_crystal, paren_reduce,
    word_crystal_component,
)
from .rsk import (
    RskPair, SkewTableau,
    evacuate, jdt_rectify, rot_word, rotate180_complement, rsk, rsk_inverse,
    rsk_of_rot, skew_from_rows,
)
from .decomposition import (
    QuasicrystalClass, Subcomponent,
    canonical_quasicrystal, check_descent_composition_conditions, count_bm,
    count_ssyt_formula, decompose, kostka, subcomponent_sink,
    verify_subcomponent_iso, weight_multiplicity_in_subcomponent,
)
from .skeleton import (
    DualEquivalenceGraph, SkeletonGraph,
    build_skeleton, check_dual_equivalence_conjecture, check_evac_duality,
    check_reordering_conjecture, check_skeleton_strata, classify_subgraph,
    dual_equivalence_graph, dual_equivalence_involution,
    induced_by_descent_count, skeleton_stable,
)
from .symfunc import (
    FExpansion, SchurExpansion,
    f_to_monomials, format_f_expansion, format_schur_expansion,
    is_schur_positive, leading_support, parse_f_expansion,
    parse_schur_expansion, plethysm_monomial_count, schur_to_f, schurify,
)

__version__ = "0.1.0"
