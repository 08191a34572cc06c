from surface_smoothing.cohomology.formulas import (
    alpha_upper_bound,
    h1_minus_K,
    h1_minus_K_minus_E,
    h1_minus_K_minus_E_on,
    h1_minus_K_minus_E_via_rounding,
    h1_minus_K_on,
    h1_rational_bundle,
    lemma23_residual,
    minus_k_from_fundamental_cycle,
    mult_bound_check,
    multiplicity,
    qgorenstein_obstruction,
)
from surface_smoothing.cohomology.rounding import (
    LineBundleClass,
    RoundingResult,
    bundle_of_cycle,
    giraud_round,
    minus_canonical,
    minus_canonical_minus_reduced,
    trivial_bundle,
)
from surface_smoothing.cohomology.sequence import SequenceStep, lemma22_sequence, lemma22_trace
from surface_smoothing.cohomology.smoothing import (
    SmoothingInputs,
    SmoothingReport,
    conjecture_margin,
    smoothing_report,
)

__all__ = [
    "LineBundleClass",
    "RoundingResult",
    "giraud_round",
    "trivial_bundle",
    "minus_canonical",
    "minus_canonical_minus_reduced",
    "bundle_of_cycle",
    "h1_rational_bundle",
    "h1_minus_K",
    "h1_minus_K_minus_E",
    "h1_minus_K_minus_E_via_rounding",
    "h1_minus_K_on",
    "h1_minus_K_minus_E_on",
    "minus_k_from_fundamental_cycle",
    "lemma23_residual",
    "alpha_upper_bound",
    "multiplicity",
    "mult_bound_check",
    "qgorenstein_obstruction",
    "SmoothingInputs",
    "SmoothingReport",
    "smoothing_report",
    "conjecture_margin",
    "SequenceStep",
    "lemma22_trace",
    "lemma22_sequence",
]
