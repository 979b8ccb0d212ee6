"""Folded Reed-Solomon codes with interpolation-based list decoding.

The pipeline encodes messages as folded Reed-Solomon codewords, list decodes
them through (s+1)-variate interpolation with multiplicities, and recovers
candidate messages as roots of a univariate polynomial over the extension
field F_q[X]/(X^(q-1) - gamma).  List recovery, a channel simulator, a
brute-force oracle, and closed-form decoding-radius bounds round out the
toolkit; the `foldedrs` CLI wraps all of it.
"""

from .galois import (
    ExtField,
    ExtFieldElem,
    FieldElem,
    PrimeField,
    ext_invert,
    find_primitive_element,
    is_irreducible,
    standard_extension,
)
from .poly import (
    Monomial,
    MultiPoly,
    UniPoly,
    compose_message,
    count_weighted_monomials,
    enumerate_weighted_monomials,
    evaluate,
    frobenius_pow_mod,
    hasse_coefficient,
    roots_in_field,
    scale_compose,
    trivariate_monomial_count,
)
from .frs import (
    FRSParams,
    RecoverySets,
    ShapeError,
    UnsupportedVariantError,
    derive_block_structure,
    encode,
    fold,
    folded_agreement,
    interpolation_index_set,
    interpolation_points,
    unfold,
)
from .interp import (
    InterpolationProblem,
    InterpReport,
    ParameterError,
    choose_D,
    degree_bound_formula,
    interpolate,
    interpolate_with_report,
)
from .rootfind import (
    CandidateOverflowError,
    candidates_from_Q,
    exhaustive_candidates,
    strip_E_power,
)
from .decoder import (
    BoundsRow,
    DecodeResult,
    DecodeStats,
    SuggestedParams,
    agreement_threshold,
    decoding_bounds,
    list_decode,
    list_recover,
    suggest_params,
)
from .harness import (
    ChannelSpec,
    TrialRecord,
    apply_channel,
    emit_bound_curves,
    oracle_decode,
    run_cli,
    simulate,
)

__version__ = "0.1.0"

__all__ = [
    "BoundsRow",
    "CandidateOverflowError",
    "ChannelSpec",
    "DecodeResult",
    "DecodeStats",
    "ExtField",
    "ExtFieldElem",
    "FRSParams",
    "FieldElem",
    "InterpReport",
    "InterpolationProblem",
    "Monomial",
    "MultiPoly",
    "ParameterError",
    "PrimeField",
    "RecoverySets",
    "ShapeError",
    "SuggestedParams",
    "TrialRecord",
    "UniPoly",
    "UnsupportedVariantError",
    "agreement_threshold",
    "apply_channel",
    "candidates_from_Q",
    "choose_D",
    "compose_message",
    "count_weighted_monomials",
    "decoding_bounds",
    "degree_bound_formula",
    "derive_block_structure",
    "emit_bound_curves",
    "encode",
    "enumerate_weighted_monomials",
    "evaluate",
    "exhaustive_candidates",
    "ext_invert",
    "find_primitive_element",
    "fold",
    "folded_agreement",
    "frobenius_pow_mod",
    "hasse_coefficient",
    "interpolate",
    "interpolate_with_report",
    "interpolation_index_set",
    "interpolation_points",
    "is_irreducible",
    "list_decode",
    "list_recover",
    "oracle_decode",
    "roots_in_field",
    "run_cli",
    "scale_compose",
    "simulate",
    "standard_extension",
    "strip_E_power",
    "suggest_params",
    "trivariate_monomial_count",
    "unfold",
]
