"""Character bookkeeping for the quotient smoothing f: C^{n+1}/G -> C."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum

from surface_smoothing.core.errors import IdentityFailure
from surface_smoothing.quotient.brieskorn import (
    ACTION_CONVENTION,
    BrieskornQuotient,
    CharacterCounts,
    det_residue,
    h_counts,
    jacobian_counts,
    milnor_number,
    nu_residue,
)

logger = logging.getLogger(__name__)


class Verdict(str, Enum):
    EQUALITY_SL = "equality_SL"
    EQUALITY_NON_SL = "equality_nonSL"
    VIOLATION = "violation"


@dataclass
class QuotientReport:
    mu: int
    bar_mu: int
    bar_tau: int
    in_SL: bool
    gorenstein_quotient: bool
    verdict: Verdict
    dimension: int
    order: int
    det_residue: int
    nu_residue: int
    j_counts: CharacterCounts
    h_counts: CharacterCounts
    dim_J_G: int
    dim_T_G: int
    lefschetz: bool
    isotypic: bool
    convention: str = ACTION_CONVENTION
    warnings: list[str] = field(default_factory=list)


def euler_relation_holds(mu: int, bar_mu: int, order: int, n: int) -> bool:
    """1 + (-1)^n mu = |G| (1 + (-1)^n bar_mu)."""
    sign = (-1) ** n
    return 1 + sign * mu == order * (1 + sign * bar_mu)


def bar_mu(q: BrieskornQuotient, convention: str = ACTION_CONVENTION) -> int:
    """Milnor number of M/G: the invariant part of H^n(M)."""
    mu = milnor_number(q)
    value = h_counts(q, convention)[0]
    if not euler_relation_holds(mu, value, q.order, q.dimension):
        raise IdentityFailure(
            f"Euler relation fails: mu = {mu}, bar_mu = {value}, |G| = {q.order}, n = {q.dimension}"
        )
    return value


def bar_tau(q: BrieskornQuotient, convention: str = ACTION_CONVENTION) -> int:
    """dim T_f^G; T_f = J_f for quasi-homogeneous f."""
    return jacobian_counts(q, convention)[0]


def counts_are_lefschetz(counts: CharacterCounts, mu: int, n: int) -> bool:
    """H^n(M) against the Lefschetz prediction for a free action.

    n even: chi(M)/|G| regular representations minus one trivial one.
    n odd: -chi(M)/|G| regular representations plus one trivial one.
    """
    r = counts.order
    if r == 1:
        return counts[0] == mu
    if n % 2 == 0:
        if (1 + mu) % r:
            return False
        base = (1 + mu) // r
        return counts[0] == base - 1 and all(counts[c] == base for c in range(1, r))
    if (mu - 1) % r:
        return False
    base = (mu - 1) // r
    return counts[0] == base + 1 and all(counts[c] == base for c in range(1, r))


def lefschetz_check(q: BrieskornQuotient, convention: str = ACTION_CONVENTION) -> bool:
    return counts_are_lefschetz(h_counts(q, convention), milnor_number(q), q.dimension)


def isotypic_lemma_check(q: BrieskornQuotient, convention: str = ACTION_CONVENTION) -> bool:
    """dim J^G equals the det^{-1} isotypic part of H."""
    return jacobian_counts(q, convention)[0] == h_counts(q, convention)[nu_residue(q, convention)]


def dim_J_vs_T(q: BrieskornQuotient, convention: str = ACTION_CONVENTION) -> tuple[int, int]:
    j = jacobian_counts(q, convention)[0]
    t = bar_tau(q, convention)
    if j != t:
        raise IdentityFailure(f"dim J^G = {j} but dim T^G = {t} for a quasi-homogeneous f")
    return j, t


def non_sl_offset(n: int) -> int:
    """bar_tau - bar_mu in the non-SL equality case.

    The trivial summand of H sits below the regular-representation count for
    n even and above it for n odd, so the sign follows (-1)^n.
    """
    return 1 if n % 2 == 0 else -1


def theorem52_verdict(q: BrieskornQuotient, convention: str = ACTION_CONVENTION) -> QuotientReport:
    mu = milnor_number(q)
    j = jacobian_counts(q, convention)
    h = h_counts(q, convention)
    mu_bar = bar_mu(q, convention)
    tau_bar = bar_tau(q, convention)
    dim_j, dim_t = dim_J_vs_T(q, convention)

    if q.in_SL and mu_bar == tau_bar:
        verdict = Verdict.EQUALITY_SL
    elif not q.in_SL and mu_bar == tau_bar - non_sl_offset(q.dimension):
        verdict = Verdict.EQUALITY_NON_SL
    else:
        verdict = Verdict.VIOLATION
        logger.error("Quotient verdict violated: bar_mu = %d, bar_tau = %d, SL = %s", mu_bar, tau_bar, q.in_SL)

    warnings = []
    if q.dimension == 1:
        warnings.append("curve case (n = 1): outside the surface scope")
    if not q.in_SL and q.dimension % 2:
        warnings.append("odd n: the non-SL equality reads bar_mu = bar_tau + 1")

    return QuotientReport(
        mu=mu,
        bar_mu=mu_bar,
        bar_tau=tau_bar,
        in_SL=q.in_SL,
        gorenstein_quotient=q.in_SL,
        verdict=verdict,
        dimension=q.dimension,
        order=q.order,
        det_residue=det_residue(q, convention),
        nu_residue=nu_residue(q, convention),
        j_counts=j,
        h_counts=h,
        dim_J_G=dim_j,
        dim_T_G=dim_t,
        lefschetz=counts_are_lefschetz(h, mu, q.dimension),
        isotypic=j[0] == h[nu_residue(q, convention)],
        convention=convention,
        warnings=warnings,
    )
