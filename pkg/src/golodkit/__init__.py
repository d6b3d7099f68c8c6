"""Exact tools for deciding and certifying Golodness of monomial ideals."""

from .certificates import (
    Cond1Violation,
    Cond2Violation,
    KoszulProductWitness,
    MultigradedSerreGapWitness,
    SerreGapWitness,
)
from .criteria import GolodVerdict, golod3, nec_all, replay, verdict
from .ideals import (
    colon,
    colon_by_variables,
    colon_ideal,
    contains,
    eliminate_variable_generators,
    ideal_product,
    ideal_sum,
    integral_closure,
    intersect,
    maximal_ideal,
    strongly_golod,
    variable_ideal,
)
from .koszul import (
    BettiTable,
    HomologyBasis,
    KoszulEngine,
    MonomialBasisReport,
    TrivialityReport,
    betti_table,
    build_strand,
    h1_constructive_basis,
    monomial_cycle_basis,
    products_trivial,
    socle_basis,
    strand_homology,
)
from .linalg import QQ, ExactMatrix, FieldSpec
from .parsing import ParseError, format_ideal, format_monomial, parse_ideal
from .poincare import (
    ComparisonReport,
    MultigradedComparisonReport,
    TruncatedSeries,
    multigraded_serre_bound,
    poincare_coefficients,
    resolve_residue_field,
    serre_bound,
    serre_compare,
    serre_compare_multigraded,
    standard_monomials,
)
from .rings import (
    ContextMismatchError,
    ExponentOverflowError,
    Monomial,
    MonomialIdeal,
    RingContext,
    divides,
    in_m_squared,
    minimalize,
)
from .rng import SplitMix64, nth_output, random_ideal, random_monomial
from .searches import (
    SearchConfig,
    SearchReport,
    TrialResult,
    report_to_dict,
    run_search,
    run_trial,
)

__version__ = "0.1.0"

__all__ = [
    "BettiTable",
    "Cond1Violation",
    "Cond2Violation",
    "ComparisonReport",
    "ContextMismatchError",
    "ExactMatrix",
    "ExponentOverflowError",
    "FieldSpec",
    "GolodVerdict",
    "HomologyBasis",
    "KoszulEngine",
    "KoszulProductWitness",
    "MonomialBasisReport",
    "MultigradedComparisonReport",
    "MultigradedSerreGapWitness",
    "TrivialityReport",
    "Monomial",
    "MonomialIdeal",
    "ParseError",
    "QQ",
    "RingContext",
    "SearchConfig",
    "SearchReport",
    "SerreGapWitness",
    "SplitMix64",
    "TrialResult",
    "TruncatedSeries",
    "betti_table",
    "build_strand",
    "colon",
    "colon_by_variables",
    "colon_ideal",
    "contains",
    "divides",
    "eliminate_variable_generators",
    "format_ideal",
    "format_monomial",
    "golod3",
    "h1_constructive_basis",
    "ideal_product",
    "ideal_sum",
    "in_m_squared",
    "integral_closure",
    "intersect",
    "maximal_ideal",
    "minimalize",
    "monomial_cycle_basis",
    "multigraded_serre_bound",
    "nec_all",
    "nth_output",
    "parse_ideal",
    "poincare_coefficients",
    "products_trivial",
    "random_ideal",
    "random_monomial",
    "replay",
    "report_to_dict",
    "resolve_residue_field",
    "run_search",
    "run_trial",
    "serre_bound",
    "serre_compare",
    "serre_compare_multigraded",
    "socle_basis",
    "standard_monomials",
    "strand_homology",
    "strongly_golod",
    "variable_ideal",
    "verdict",
]
