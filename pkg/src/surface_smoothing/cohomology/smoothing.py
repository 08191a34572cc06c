"""Milnor and Tjurina numbers of a smoothing from resolution data.

1 + mu = alpha + 13 h^1(O) + chi_T - E.(E+3K)/2 - h^1(-(K+E))
tau    = 2 alpha + 12 h^1(O) + chi_T - E.(E+3K)/2 + h^1(S) - 2 h^1(-(K+E))
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

from surface_smoothing.cohomology import formulas
from surface_smoothing.core.errors import IdentityFailure, InputError, PreconditionError
from surface_smoothing.graph import lattice
from surface_smoothing.graph.classify import classify, require_rational_minimal
from surface_smoothing.graph.model import ResolutionGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SmoothingInputs:
    """Externally supplied scalars; ``h1_mKE`` is only needed off the rational locus."""

    alpha: int = 0
    h1_O: int = 0
    h1_S: int = 0
    h1_mKE: Optional[int] = None

    def __post_init__(self) -> None:
        for name in ("alpha", "h1_O", "h1_S", "h1_mKE"):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise InputError(f"{name} must be nonnegative, got {value}")


@dataclass
class SmoothingReport:
    mu: int
    tau: int
    combined: int
    h1_mK: Optional[int]
    h1_mKE: int
    h1_theta: int
    chi_T: int
    e_term: int
    alpha_bound: Optional[int]
    numerically_gorenstein: bool
    conjecture_margin: int
    rational_conjecture_holds: Optional[bool]
    warnings: list[str] = field(default_factory=list)


def conjecture_margin(combined: int, gorenstein: bool) -> int:
    """h^1(O) - h^1(S) + h^1(-(K+E)) - [Gorenstein]; conjecturally >= 0."""
    return combined - (1 if gorenstein else 0)


def _h1_minus_K_minus_E(graph: ResolutionGraph, inputs: SmoothingInputs, rational: bool) -> int:
    if rational:
        require_rational_minimal(graph, allow_rdp=False)
        computed = formulas.h1_minus_K_minus_E(graph)
        if inputs.h1_mKE is not None and inputs.h1_mKE != computed:
            raise InputError(
                f"supplied h1_mKE = {inputs.h1_mKE} disagrees with the graph value {computed}"
            )
        return computed
    if inputs.h1_mKE is None:
        raise PreconditionError("graph is not rational; supply h1_mKE explicitly")
    return inputs.h1_mKE


def smoothing_report(graph: ResolutionGraph, inputs: SmoothingInputs) -> SmoothingReport:
    cls = classify(graph)
    if not cls.negative_definite:
        raise PreconditionError("intersection form is not negative definite")
    if cls.rdp:
        raise PreconditionError("graph is a rational double point")

    h1_mKE = _h1_minus_K_minus_E(graph, inputs, cls.rational)
    chi = lattice.chi_T(graph)
    e_term = lattice.reduced_term(graph)
    a, h1_O, h1_S = inputs.alpha, inputs.h1_O, inputs.h1_S

    mu = a + 13 * h1_O + chi - e_term - h1_mKE - 1
    tau = 2 * a + 12 * h1_O + chi - e_term + h1_S - 2 * h1_mKE
    combined = h1_O - h1_S + h1_mKE
    if 1 + (mu - tau) + a != combined:
        raise IdentityFailure(f"1 + (mu - tau) + alpha = {1 + mu - tau + a} but expected {combined}")

    h1_theta = h1_S + sum(v.genus + v.degree - 1 for v in graph)
    gorenstein = lattice.is_numerically_gorenstein(graph)

    h1_mK: Optional[int] = None
    alpha_bound: Optional[int] = None
    warnings: list[str] = []
    if cls.rational:
        h1_mK = formulas.h1_minus_K(graph)
        alpha_bound = h1_mK
        if a > alpha_bound:
            warnings.append(f"alpha = {a} exceeds its upper bound h^1(-K) = {alpha_bound}")
    if a > 0 and gorenstein:
        warnings.append("alpha > 0 although K is integral; Gorenstein singularities have alpha = 0")
    if mu < 0:
        warnings.append(f"negative Milnor number {mu}: the supplied scalars are inconsistent")

    for message in warnings:
        logger.warning(message)

    report = SmoothingReport(
        mu=mu,
        tau=tau,
        combined=combined,
        h1_mK=h1_mK,
        h1_mKE=h1_mKE,
        h1_theta=h1_theta,
        chi_T=chi,
        e_term=e_term,
        alpha_bound=alpha_bound,
        numerically_gorenstein=gorenstein,
        conjecture_margin=conjecture_margin(combined, gorenstein),
        rational_conjecture_holds=(h1_S <= h1_mKE) if cls.rational else None,
        warnings=warnings,
    )
    logger.debug("Smoothing report: %s", report)
    return report
