"""Topological h^1 formulas on the minimal resolution of a rational singularity.

Every public function taking a graph gates on the hypotheses it needs
(rational, minimal, and for the -(K+E) formulas not an RDP) and raises
:class:`PreconditionError` instead of returning a number outside them.  The
``*_on`` variants take a :class:`LatticeContext` and leave the gate to the
caller; the scans use them on graphs they know to be rational.
"""
from __future__ import annotations

import logging
from fractions import Fraction

from surface_smoothing.cohomology.rounding import (
    LineBundleClass,
    giraud_round,
    minus_canonical_minus_reduced,
)
from surface_smoothing.core import exact
from surface_smoothing.core.errors import IdentityFailure, PreconditionError
from surface_smoothing.graph import lattice
from surface_smoothing.graph.classify import require_rational_minimal
from surface_smoothing.graph.lattice import LatticeContext
from surface_smoothing.graph.model import Cycle, ResolutionGraph

logger = logging.getLogger(__name__)


def _gate(graph: ResolutionGraph, allow_rdp: bool = True) -> LatticeContext:
    require_rational_minimal(graph, allow_rdp=allow_rdp)
    return lattice.context(graph)


def _nonnegative(value: Fraction, what: str) -> int:
    result = exact.as_integer(value, what)
    if result < 0:
        raise IdentityFailure(f"{what} came out negative ({result})")
    return result


def h1_rational_bundle(graph: ResolutionGraph, bundle: LineBundleClass) -> int:
    """dim H^1(X, L) = Z.(Z+K)/2 - Z.L with Z = [L]."""
    ctx = _gate(graph)
    z = giraud_round(graph, bundle).round
    if not z.is_effective():
        raise PreconditionError(f"round-up [L] = {z} is not effective")
    if z.is_zero():
        return 0
    z_dot_l = sum(m * d for m, d in zip(z.mult, bundle.degrees))
    value = Fraction(ctx.pair(z.mult, z.mult) + ctx.dot_canonical(z.mult), 2) - z_dot_l
    return _nonnegative(value, "h^1(L)")


def minus_k_round(graph: ResolutionGraph) -> Cycle:
    """Y = [-K]."""
    return Cycle(graph.ids, lattice.context(graph).minus_k_round())


def minus_k_from_fundamental_cycle(graph: ResolutionGraph) -> Cycle:
    """[-K] grown from Z_0 by adding curves until Y . E_i <= 2 - d_i.

    Only valid on rational graphs, where [-K] >= Z_0.
    """
    ctx = _gate(graph)
    grown, _ = ctx.grow(ctx.fundamental_cycle(), ctx.minus_canonical, what="growing [-K] from Z_0")
    return Cycle(graph.ids, grown)


def h1_minus_K_on(ctx: LatticeContext) -> int:
    """h^1(-K) = Y.(Y+3K)/2 with Y = [-K]."""
    y = ctx.minus_k_round()
    return _nonnegative(Fraction(ctx.pair(y, y) + 3 * ctx.dot_canonical(y), 2), "h^1(-K)")


def h1_minus_K_minus_E_on(ctx: LatticeContext) -> int:
    """h^1(-(K+E)) = Z.(Z+3K)/2 + Z.E with Z = [-K] - E."""
    z = tuple(m - 1 for m in ctx.minus_k_round())
    if min(z) < 0:
        raise PreconditionError(f"[-K] - E = {z} is not effective")
    mz = ctx.apply(z)
    # M is symmetric, so Z.E is the sum of the entries of M Z.
    z_dot_z = sum(a * b for a, b in zip(z, mz))
    value = Fraction(z_dot_z + 3 * ctx.dot_canonical(z), 2) + sum(mz)
    return _nonnegative(value, "h^1(-(K+E))")


def h1_minus_K(graph: ResolutionGraph) -> int:
    result = h1_minus_K_on(_gate(graph))
    logger.debug("h^1(-K) = %d", result)
    return result


def h1_minus_K_minus_E(graph: ResolutionGraph) -> int:
    result = h1_minus_K_minus_E_on(_gate(graph, allow_rdp=False))
    logger.debug("h^1(-(K+E)) = %d", result)
    return result


def h1_minus_K_minus_E_via_rounding(graph: ResolutionGraph) -> int:
    """Same dimension, evaluated as h^1(L) for L = -(K+E).

    Also checks the translation identity [-(K+E)] = [-K] - E.
    """
    _gate(graph, allow_rdp=False)
    bundle = minus_canonical_minus_reduced(graph)
    rounded = giraud_round(graph, bundle).round
    expected = minus_k_round(graph) - Cycle.reduced(graph)
    if rounded != expected:
        raise IdentityFailure(f"[-(K+E)] = {rounded} differs from [-K] - E = {expected}")
    return h1_rational_bundle(graph, bundle)


def lemma23_residual(graph: ResolutionGraph) -> int:
    """h^1(-K) - h^1(-(K+E)) - E.(E+3K)/2; zero on every valid input."""
    return h1_minus_K(graph) - h1_minus_K_minus_E(graph) - lattice.reduced_term(graph)


def alpha_upper_bound(graph: ResolutionGraph) -> int:
    """Upper bound for alpha: l(Ext^1(omega, R)) = h^1(-K) for rational singularities."""
    return h1_minus_K(graph)


def multiplicity(graph: ResolutionGraph) -> int:
    """mult R = -Z_0 . Z_0 for a rational singularity."""
    ctx = _gate(graph)
    z0 = ctx.fundamental_cycle()
    return -ctx.pair(z0, z0)


def mult_bound_check(graph: ResolutionGraph) -> bool:
    """h^1(-K) >= mult R - 3."""
    return h1_minus_K(graph) >= multiplicity(graph) - 3


def qgorenstein_obstruction(graph: ResolutionGraph, h1_O: int = 0) -> Fraction:
    """h^1(-K) - (-K.K + h^1(O)).

    A Q-Gorenstein smoothing forces this to vanish, so a nonzero value rules
    one out.
    """
    k = lattice.canonical_class(graph)
    k_squared = lattice.pairing(k, k, graph)
    return Fraction(h1_minus_K(graph)) - (-k_squared + h1_O)
