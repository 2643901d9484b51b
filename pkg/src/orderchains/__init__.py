"""Chain detection in sequences over countable orders, tree-to-sequence
reductions that preserve chain structure, exact order encodings into
bit-words and dyadic rationals, and density diagnostics for countable
sets of rationals.
"""

from .chains import (
    ChainWitness,
    Sequence,
    UPSequence,
    constant_subsequence,
    cycle_witness,
    decide_membership_up,
    format_sequence,
    format_witness,
    longest_chain,
    parse_sequence,
    parse_up_sequence,
    patience_chain_length,
    verify_witness,
)
from .dense import (
    CountableSetStream,
    FixedStages,
    IntervalScheme,
    MiddleThirds,
    between_witness,
    build_scheme,
    dense_embed,
    dyadic_stream,
    gap_midpoint_stream,
    gap_selector,
    middle_thirds_endpoint_stream,
    persistently_approaches,
    prune_successor_endpoints,
    reduction_image_stream,
    splitting_depth,
    stream_from_values,
)
from .encodings import (
    double_bits,
    format_dyadic_binary,
    lex_between,
    word_to_bits,
    word_to_dyadic,
)
from .errors import (
    ArgumentOrderError,
    DomainMismatchError,
    DuplicateElementError,
    EmptySequenceError,
    LinearityError,
    OrderChainsError,
    ParseError,
    SchemeError,
    SearchBudgetError,
    StreamError,
    TreePrefixError,
    WitnessIndexError,
)
from .orders import (
    EQ,
    GT,
    INCOMPARABLE,
    LT,
    AxiomReport,
    AxiomViolation,
    Cmp,
    Element,
    Order,
    Tag,
    check_axioms,
    format_element,
    make_element,
    make_order,
    parse_element,
)
from .reductions import (
    FuzzReport,
    PointwiseMap,
    ReductionPipeline,
    TreeGenSpec,
    chain_bound_within_horizon,
    fuzz_reduction,
    generate_tree,
    image_at,
    lift_map,
    make_pipeline,
    reduce_tree,
)
from .trees import (
    FiniteTree,
    filler,
    index_of,
    iter_words,
    max_branch_depth,
    parse_tree_lines,
    prefix_closure,
    validate_tree,
    word_at,
)
from .words import (
    Word,
    format_bit_word,
    format_nat_word,
    is_prefix,
    parse_bit_word,
    parse_nat_word,
)

__version__ = "0.1.0"

__all__ = [
    "ArgumentOrderError",
    "AxiomReport",
    "AxiomViolation",
    "ChainWitness",
    "Cmp",
    "CountableSetStream",
    "DomainMismatchError",
    "DuplicateElementError",
    "EQ",
    "Element",
    "EmptySequenceError",
    "FiniteTree",
    "FixedStages",
    "FuzzReport",
    "GT",
    "INCOMPARABLE",
    "IntervalScheme",
    "LT",
    "LinearityError",
    "MiddleThirds",
    "Order",
    "OrderChainsError",
    "ParseError",
    "PointwiseMap",
    "ReductionPipeline",
    "SchemeError",
    "SearchBudgetError",
    "Sequence",
    "StreamError",
    "Tag",
    "TreeGenSpec",
    "TreePrefixError",
    "UPSequence",
    "WitnessIndexError",
    "Word",
    "between_witness",
    "build_scheme",
    "chain_bound_within_horizon",
    "check_axioms",
    "constant_subsequence",
    "cycle_witness",
    "decide_membership_up",
    "dense_embed",
    "double_bits",
    "dyadic_stream",
    "filler",
    "format_bit_word",
    "format_dyadic_binary",
    "format_element",
    "format_nat_word",
    "format_sequence",
    "format_witness",
    "fuzz_reduction",
    "gap_midpoint_stream",
    "gap_selector",
    "generate_tree",
    "image_at",
    "index_of",
    "is_prefix",
    "iter_words",
    "lex_between",
    "lift_map",
    "longest_chain",
    "make_element",
    "make_order",
    "make_pipeline",
    "max_branch_depth",
    "middle_thirds_endpoint_stream",
    "parse_bit_word",
    "parse_element",
    "parse_nat_word",
    "parse_sequence",
    "parse_tree_lines",
    "parse_up_sequence",
    "patience_chain_length",
    "persistently_approaches",
    "prefix_closure",
    "prune_successor_endpoints",
    "reduce_tree",
    "reduction_image_stream",
    "splitting_depth",
    "stream_from_values",
    "validate_tree",
    "verify_witness",
    "word_at",
    "word_to_bits",
    "word_to_dyadic",
]
