"""Pinkham-Demazure graded ring of a quasi-homogeneous singularity.

A_k = H^0(C, floor(kF)) with F = D - sum (q_i/n_i) P_i and deg D = b, so
deg floor(kF) = k b - sum ceil(k q_i / n_i).
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from sympy.ntheory.modular import solve_congruence

from surface_smoothing.cohomology import formulas
from surface_smoothing.core import exact
from surface_smoothing.core.errors import IdentityFailure, InputError, PreconditionError
from surface_smoothing.graph import lattice
from surface_smoothing.graph.classify import classify
from surface_smoothing.seifert.continued_fractions import validate_arm
from surface_smoothing.seifert.star import SeifertData, seifert_to_graph, star_determinant

logger = logging.getLogger(__name__)

DEFAULT_KMAX = 10


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def deg_floor_kF(s: SeifertData, k: int) -> int:
    return k * s.b - sum(_ceil_div(k * q, n) for n, q in s.arms)


def dim_A_k(s: SeifertData, k: int) -> int:
    """dim H^0(C, floor(kF)) for k >= 0.

    On a rational central curve this is max(0, deg + 1).  For genus g > 0 the
    degree fixes the answer only outside 0 <= deg <= 2g - 2.
    """
    if k < 0:
        raise InputError(f"graded pieces are exposed for k >= 0 only, got k = {k}")
    deg = deg_floor_kF(s, k)
    if s.genus == 0:
        return max(0, deg + 1)
    if deg < 0:
        return 0
    if deg > 2 * s.genus - 2:
        return deg - s.genus + 1
    raise PreconditionError(
        f"dim A_{k} is not determined by the degree {deg} on a genus-{s.genus} central curve"
    )


def _require_genus_zero(s: SeifertData, what: str) -> None:
    if s.genus != 0:
        raise PreconditionError(f"{what} is computed exactly for a rational central curve only")


def p_g_cutoff(s: SeifertData) -> int:
    # deg floor(kF) >= k e - #arms, so every h^1 term vanishes once k e >= #arms + 1
    return math.ceil((len(s.arms) + 1) / s.euler_number) + 1


def p_g(s: SeifertData) -> int:
    """Geometric genus sum_{k >= 0} h^1(C, floor(kF)) on a rational central curve."""
    _require_genus_zero(s, "p_g")
    return sum(max(0, -deg_floor_kF(s, k) - 1) for k in range(p_g_cutoff(s) + 1))


def gorenstein_exponent(s: SeifertData) -> Optional[int]:
    """The k with k q_i = 1 (mod n_i) for all i and deg floor(kF) = 2g - 2, if any.

    Solutions of the congruences form k0 + tL; along it the degree grows by
    exactly L e >= 1 per step, so at most one k qualifies.
    """
    if s.arms:
        solved = solve_congruence(*((pow(q, -1, n), n) for n, q in s.arms))
        if solved is None:
            logger.debug("Congruences k q_i = 1 (mod n_i) have no common solution")
            return None
        k0 = int(solved[0])
    else:
        k0 = 0
    period = s.lcm
    step = exact.as_integer(period * s.euler_number, "L * e")
    gap = 2 * s.genus - 2 - deg_floor_kF(s, k0)
    logger.debug("CRT: k = %d (mod %d), degree step %d, gap %d", k0, period, step, gap)
    if gap % step:
        return None
    k = k0 + (gap // step) * period
    if deg_floor_kF(s, k) != 2 * s.genus - 2:
        raise IdentityFailure(f"degree along the progression is not linear at k = {k}")
    return k


def coboundary_coefficient(n: int, q: int, k: int) -> int:
    """floor(-((kq - 1)/n + 1)) - floor(-kq/n); -1 unless kq = 1 (mod n), then 0."""
    validate_arm(n, q)
    return math.floor(-(Fraction(k * q - 1, n) + 1)) - math.floor(Fraction(-k * q, n))


def h1_S_quasihomogeneous(s: SeifertData, h1_mKE: Optional[int] = None) -> int:
    """h^1(S) = p_g + h^1(-(K+E)) - [Gorenstein] for a quasi-homogeneous singularity.

    ``h1_mKE`` must be supplied when the singularity is not rational.
    """
    _require_genus_zero(s, "h^1(S)")
    graph = seifert_to_graph(s)
    cls = classify(graph)
    if not cls.minimal_good:
        raise PreconditionError("star graph is not a minimal good resolution")
    if cls.rdp:
        raise PreconditionError("star graph is a rational double point")

    genus = p_g(s)
    if genus == 0:
        computed = formulas.h1_minus_K_minus_E(graph)
        if h1_mKE is not None and h1_mKE != computed:
            raise InputError(f"supplied h1_mKE = {h1_mKE} disagrees with the graph value {computed}")
        h1_mKE = computed
    elif h1_mKE is None:
        raise PreconditionError(f"singularity is not rational (p_g = {genus}); supply h1_mKE")
    elif h1_mKE < 0:
        raise InputError(f"h1_mKE must be nonnegative, got {h1_mKE}")

    gorenstein = gorenstein_exponent(s) is not None
    value = genus + h1_mKE - (1 if gorenstein else 0)
    if value < 0:
        raise IdentityFailure(f"h^1(S) came out negative ({value})")
    return value


def rationality_cross_check(s: SeifertData) -> bool:
    """Pinkham's p_g = 0 agrees with Artin's criterion on the star graph."""
    return (p_g(s) == 0) == lattice.is_rational(seifert_to_graph(s))


@dataclass
class GradedReport:
    dims_A: list[Optional[int]]
    p_g: Optional[int]
    gorenstein_k: Optional[int]
    is_gorenstein: bool
    euler_number: Fraction
    determinant: int
    warnings: list[str] = field(default_factory=list)


def graded_report(s: SeifertData, kmax: int = DEFAULT_KMAX) -> GradedReport:
    warnings: list[str] = []
    dims: list[Optional[int]] = []
    for k in range(kmax + 1):
        try:
            dims.append(dim_A_k(s, k))
        except PreconditionError:
            dims.append(None)
    genus = p_g(s) if s.genus == 0 else None
    if s.genus > 0:
        warnings.append("genus > 0: p_g and some dim A_k are not determined by the degree alone")
        warnings.append("genus > 0: the Gorenstein test checks degrees only, not linear equivalence")
    k = gorenstein_exponent(s)
    return GradedReport(
        dims_A=dims,
        p_g=genus,
        gorenstein_k=k,
        is_gorenstein=k is not None,
        euler_number=s.euler_number,
        determinant=star_determinant(s),
        warnings=warnings,
    )
