"""Square-free words and conducted shuffles over small alphabets."""

from .words import (
    SquareOccurrence,
    check_word,
    count_square_free,
    enumerate_square_free,
    find_square,
    is_lyndon,
    is_square_free,
    lex_least_square_free_prefix,
    parikh,
)
from .shuffle import (
    BlockDecomposition,
    PeriodicConductingSequence,
    ShuffleWitness,
    check_beta,
    decompose_blocks,
    dual_word,
    expand_runs,
    find_conducting,
    lift_conducting,
    perfect_shuffle,
    shuffle_conducted,
    verify_witness,
)
from .morphisms import (
    Certificate,
    Morphism,
    SearchResult,
    Substitution,
    apply_morphism,
    apply_substitution,
    certify_square_free_morphism,
    certify_square_free_substitution,
    check_substitution_properties,
    compose,
    crochemore_bound,
    fixed_point_prefix,
    morphism_text,
    parse_morphism,
    parse_substitution,
    search_uniform_square_free_morphism,
    substitute_with_choices,
    substitution_test_length,
    substitution_text,
)
from .search import (
    EnumerationRow,
    distinct_self_shuffles,
    enumeration_row,
    find_self_shuffle_betas,
    unshuffle_square_free,
)
from .catalog import (
    CatalogEntry,
    CatalogReport,
    CompositionRule,
    dump_catalog,
    entry_names,
    get_entry,
    verify_catalog,
)
from .construct import (
    CoverageReport,
    UnconstructedLengthError,
    apply_morphism_to_witness,
    construct_with_strategy,
    construct_witness,
    coverage_report,
    sigma5_witness,
    substitution_interval_witness,
)
from .limits import (
    PrefixVerdict,
    verify_abelian_periodicity,
    verify_lyndon_example,
    verify_theorem4,
    verify_theorem5,
)

__version__ = "0.1.0"

__all__ = [
    "BlockDecomposition",
    "CatalogEntry",
    "CatalogReport",
    "Certificate",
    "CompositionRule",
    "CoverageReport",
    "EnumerationRow",
    "Morphism",
    "PeriodicConductingSequence",
    "PrefixVerdict",
    "SearchResult",
    "ShuffleWitness",
    "SquareOccurrence",
    "Substitution",
    "UnconstructedLengthError",
    "apply_morphism",
    "apply_morphism_to_witness",
    "apply_substitution",
    "certify_square_free_morphism",
    "certify_square_free_substitution",
    "check_beta",
    "check_substitution_properties",
    "check_word",
    "compose",
    "construct_with_strategy",
    "construct_witness",
    "count_square_free",
    "coverage_report",
    "crochemore_bound",
    "decompose_blocks",
    "distinct_self_shuffles",
    "dual_word",
    "dump_catalog",
    "entry_names",
    "enumerate_square_free",
    "enumeration_row",
    "expand_runs",
    "find_conducting",
    "find_self_shuffle_betas",
    "find_square",
    "fixed_point_prefix",
    "get_entry",
    "is_lyndon",
    "is_square_free",
    "lex_least_square_free_prefix",
    "lift_conducting",
    "morphism_text",
    "parikh",
    "parse_morphism",
    "parse_substitution",
    "perfect_shuffle",
    "search_uniform_square_free_morphism",
    "shuffle_conducted",
    "sigma5_witness",
    "substitute_with_choices",
    "substitution_interval_witness",
    "substitution_test_length",
    "substitution_text",
    "unshuffle_square_free",
    "verify_abelian_periodicity",
    "verify_catalog",
    "verify_lyndon_example",
    "verify_theorem4",
    "verify_theorem5",
    "verify_witness",
]
