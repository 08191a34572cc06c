from surface_smoothing.quotient.brieskorn import (
    ACTION_CONVENTION,
    BrieskornQuotient,
    CharacterCounts,
    h_counts,
    jacobian_counts,
    milnor_number,
    sweep,
    validate,
)
from surface_smoothing.quotient.characters import (
    QuotientReport,
    Verdict,
    bar_mu,
    bar_tau,
    dim_J_vs_T,
    isotypic_lemma_check,
    lefschetz_check,
    non_sl_offset,
    theorem52_verdict,
)

__all__ = [
    "ACTION_CONVENTION",
    "BrieskornQuotient",
    "CharacterCounts",
    "QuotientReport",
    "Verdict",
    "validate",
    "milnor_number",
    "jacobian_counts",
    "h_counts",
    "bar_mu",
    "bar_tau",
    "lefschetz_check",
    "isotypic_lemma_check",
    "non_sl_offset",
    "theorem52_verdict",
    "dim_J_vs_T",
    "sweep",
]
