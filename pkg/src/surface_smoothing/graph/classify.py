from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Hashable, Iterable, Mapping, Optional

import networkx as nx

from surface_smoothing.core.errors import PreconditionError
from surface_smoothing.graph import lattice
from surface_smoothing.graph.model import Cycle, ResolutionGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GraphClassification:
    connected: bool
    negative_definite: bool
    rational: bool
    rdp: bool
    minimal_resolution: bool
    minimal_good: bool
    star_shaped: bool
    chain: bool
    fundamental_cycle: Optional[Cycle] = None
    p_a_Z0: Optional[int] = None


@lru_cache(maxsize=8192)
def classify(graph: ResolutionGraph) -> GraphClassification:
    ctx = lattice.context(graph)
    # ResolutionGraph rejects disconnected input, so edge count decides tree-ness.
    connected = True
    is_tree = ctx.is_tree
    negative_definite = ctx.negative_definite

    z0: Optional[Cycle] = None
    p_a: Optional[int] = None
    if negative_definite:
        z0 = Cycle(graph.ids, ctx.fundamental_cycle())
        p_a = ctx.arithmetic_genus(z0.mult)
    rational = p_a == 0

    minus_one = [v for v in graph if v.genus == 0 and v.weight == -1]
    nodes = [v for v in graph if graph.valency(v.id) >= 3]

    result = GraphClassification(
        connected=connected,
        negative_definite=negative_definite,
        rational=rational,
        rdp=rational and all(v.genus == 0 and v.weight == -2 for v in graph),
        minimal_resolution=not minus_one,
        minimal_good=all(graph.valency(v.id) >= 3 for v in minus_one),
        star_shaped=is_tree and len(nodes) <= 1,
        chain=is_tree and not nodes,
        fundamental_cycle=z0,
        p_a_Z0=p_a,
    )
    logger.debug("Classified %d-vertex graph: %s", len(graph), result)
    return result


def require_rational_minimal(graph: ResolutionGraph, *, allow_rdp: bool = True) -> GraphClassification:
    """Gate for the rational-singularity formulas (minimal resolution, rational)."""
    cls = classify(graph)
    if not cls.negative_definite:
        raise PreconditionError("intersection form is not negative definite")
    if not cls.rational:
        raise PreconditionError(f"graph is not rational (p_a(Z_0) = {cls.p_a_Z0})")
    if not cls.minimal_resolution:
        raise PreconditionError("graph is not a minimal resolution (it has a rational -1 curve)")
    if cls.rdp and not allow_rdp:
        raise PreconditionError("graph is a rational double point")
    return cls


def canonical_key(graph: ResolutionGraph) -> str:
    """Isomorphism-invariant encoding of a weighted tree.

    Each rooted subtree encodes as ``(weight:genus child child ...)`` with the
    children sorted; the key is the smallest encoding over the tree centers.
    """
    nxg = graph.to_networkx()
    if not nx.is_tree(nxg):
        raise PreconditionError("canonical keys are defined for trees only")
    labels = {v.id: f"{v.weight}:{v.genus}" for v in graph}
    return weighted_tree_key(graph.neighbours, labels, nx.center(nxg))


def weighted_tree_key(
    neighbours: Mapping[Hashable, Iterable[Hashable]],
    labels: Mapping[Hashable, str],
    centers: Iterable[Hashable],
) -> str:
    """AHU encoding of a labelled tree, minimised over the given roots."""

    def encode(node: Hashable, parent: Optional[Hashable]) -> str:
        children = sorted(encode(c, node) for c in neighbours[node] if c != parent)
        return f"({labels[node]}{''.join(children)})"

    return min(encode(center, None) for center in centers)
