"""Ordering of the exceptional curves along which H^0((-K) (x) O_F) stays zero.

F_1 is a single curve with 2g - 2 + d > 0; each later curve E_j outside the
support satisfies 2g_j - 2 + d_j + F . E_j > 0.  The first admissible
vertex in declaration order is taken at every step.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

from surface_smoothing.core.errors import IdentityFailure, PreconditionError
from surface_smoothing.graph import lattice
from surface_smoothing.graph.classify import classify
from surface_smoothing.graph.model import ResolutionGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SequenceStep:
    vertex: str
    criterion: int  # 2g - 2 + d + F . E_j at the moment the vertex was added


def lemma22_trace(graph: ResolutionGraph) -> list[SequenceStep]:
    """Greedy curve order with the criterion value at each step.

    A candidate need not touch the current support: a curve with
    2g - 2 + d > 0 qualifies on its own.  Restricting the search to
    neighbours of the support gets stuck on graphs such as the Okuma ones,
    whose -1 node has a single neighbour in the support when it is reached.
    """
    cls = classify(graph)
    if not cls.minimal_good:
        raise PreconditionError("graph is not a minimal good resolution")
    if cls.rdp:
        raise PreconditionError("graph is a rational double point")

    base = dict(zip(graph.ids, lattice.canonical_degrees(graph)))
    start = next((vid for vid in graph.ids if base[vid] > 0), None)
    if start is None:
        raise PreconditionError("no curve with 2g - 2 + d > 0: every curve is a rational -1 or -2 curve")

    support = {start}
    steps = [SequenceStep(start, base[start])]
    logger.debug("Sequence starts at %s (2g - 2 + d = %d)", start, base[start])

    while len(support) < len(graph):
        # F is reduced, so F . E_j counts the neighbours of E_j inside the support
        for vid in graph.ids:
            if vid in support:
                continue
            value = base[vid] + sum(1 for n in graph.neighbours[vid] if n in support)
            if value > 0:
                break
        else:
            raise IdentityFailure(f"sequence stuck with support {sorted(support, key=graph.index.__getitem__)}")
        support.add(vid)
        steps.append(SequenceStep(vid, value))
        logger.debug("Sequence adds %s (criterion %d)", vid, value)

    return steps


def lemma22_sequence(graph: ResolutionGraph) -> list[str]:
    return [step.vertex for step in lemma22_trace(graph)]
