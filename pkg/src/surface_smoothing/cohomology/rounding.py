"""Giraud round-up of numerical line bundles on a resolution."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from surface_smoothing.graph import lattice
from surface_smoothing.graph.model import Cycle, QCycle, ResolutionGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LineBundleClass:
    """A line bundle L, recorded numerically by its degrees L . E_i."""

    ids: tuple[str, ...]
    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.ids) != len(self.degrees):
            raise ValueError("line bundle degrees do not match the vertex set")

    @classmethod
    def for_graph(cls, graph: ResolutionGraph, degrees: Sequence[int]) -> LineBundleClass:
        if len(degrees) != len(graph):
            raise ValueError(f"expected {len(graph)} degrees, got {len(degrees)}")
        return cls(graph.ids, tuple(int(d) for d in degrees))

    def __sub__(self, other: LineBundleClass) -> LineBundleClass:
        if self.ids != other.ids:
            raise ValueError("line bundles live on different graphs")
        return LineBundleClass(self.ids, tuple(a - b for a, b in zip(self.degrees, other.degrees)))


@dataclass(frozen=True)
class RoundingResult:
    round: Cycle
    initial: Cycle
    added: tuple[str, ...]
    coefficients: QCycle


def trivial_bundle(graph: ResolutionGraph) -> LineBundleClass:
    return LineBundleClass(graph.ids, (0,) * len(graph))


def minus_canonical(graph: ResolutionGraph) -> LineBundleClass:
    """-K, with degrees -(2g_i - 2 + d_i)."""
    return LineBundleClass(graph.ids, tuple(-k for k in lattice.canonical_degrees(graph)))


def minus_canonical_minus_reduced(graph: ResolutionGraph) -> LineBundleClass:
    """-(K + E)."""
    e_degrees = lattice.intersections(Cycle.reduced(graph), graph)
    return minus_canonical(graph) - LineBundleClass(graph.ids, e_degrees)


def bundle_of_cycle(cycle: Cycle, graph: ResolutionGraph) -> LineBundleClass:
    """O(D) for an integral cycle D."""
    return LineBundleClass(graph.ids, lattice.intersections(cycle, graph))


def giraud_round(
    graph: ResolutionGraph,
    bundle: LineBundleClass,
    iteration_factor: int = lattice.DEFAULT_ITERATION_FACTOR,
) -> RoundingResult:
    """Smallest integral D with D . E_i <= L . E_i for every i.

    Starts from the componentwise ceiling of the rational cycle a with
    M a = degrees, then adds the lowest E_j with D . E_j > L . E_j until none
    is left.
    """
    if bundle.ids != graph.ids:
        raise ValueError("line bundle is not indexed by this graph's vertices")
    rounding = lattice.context(graph).round_up(bundle.degrees, iteration_factor)
    logger.debug(
        "Round-up of %s: ceiling %s, then %d additions", bundle.degrees, rounding.initial, len(rounding.added)
    )
    return RoundingResult(
        round=Cycle(graph.ids, rounding.result),
        initial=Cycle(graph.ids, rounding.initial),
        added=tuple(graph.ids[j] for j in rounding.added),
        coefficients=QCycle(graph.ids, tuple(Fraction(x, rounding.determinant) for x in rounding.scaled)),
    )
