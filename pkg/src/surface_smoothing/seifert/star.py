"""Seifert data and the star-shaped graphs they plumb to."""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from surface_smoothing.core import exact
from surface_smoothing.core.errors import IdentityFailure, InputError, PreconditionError
from surface_smoothing.graph import lattice
from surface_smoothing.graph.classify import classify
from surface_smoothing.graph.model import ResolutionGraph, Vertex
from surface_smoothing.seifert.continued_fractions import hj_expand, hj_value, validate_arm

logger = logging.getLogger(__name__)

CENTER_ID = "c"


@dataclass(frozen=True)
class SeifertData:
    """Central curve of genus ``genus`` and self-intersection -b, with arms n_i/q_i."""

    genus: int
    b: int
    arms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "arms", tuple((int(n), int(q)) for n, q in self.arms))
        if self.genus < 0:
            raise InputError(f"genus must be >= 0, got {self.genus}")
        if self.b < 1:
            raise InputError(f"central weight b must be >= 1, got {self.b}")
        for n, q in self.arms:
            validate_arm(n, q)
        if self.euler_number <= 0:
            raise InputError(
                f"e = b - sum q_i/n_i = {exact.render_rational(self.euler_number)} must be positive"
            )

    @classmethod
    def build(cls, genus: int, b: int, arms: Iterable[tuple[int, int]] = ()) -> SeifertData:
        return cls(genus, b, tuple(arms))

    @property
    def euler_number(self) -> Fraction:
        return Fraction(self.b) - sum((Fraction(q, n) for n, q in self.arms), Fraction(0))

    @property
    def lcm(self) -> int:
        return math.lcm(*(n for n, _ in self.arms)) if self.arms else 1


def orbifold_euler_number(s: SeifertData) -> Fraction:
    """e = b - sum q_i/n_i, the degree of F."""
    return s.euler_number


def star_determinant(s: SeifertData) -> int:
    """|det M| of the plumbed star: prod(n_i) * e."""
    value = s.euler_number * math.prod(n for n, _ in s.arms)
    return exact.as_integer(value, "star determinant")


def seifert_to_graph(s: SeifertData) -> ResolutionGraph:
    vertices = [Vertex(CENTER_ID, -s.b, s.genus)]
    edges: list[tuple[str, str]] = []
    for i, (n, q) in enumerate(s.arms):
        previous = CENTER_ID
        for j, b in enumerate(hj_expand(n, q)):
            vid = f"a{i}v{j}"
            vertices.append(Vertex(vid, -b, 0))
            edges.append((previous, vid))
            previous = vid
    graph = ResolutionGraph(tuple(vertices), tuple(edges))
    if not lattice.graph_is_negative_definite(graph):
        raise IdentityFailure(f"star graph of {s} is not negative definite")
    return graph


def _center(graph: ResolutionGraph) -> str:
    nodes = [vid for vid in graph.ids if graph.valency(vid) >= 3]
    return nodes[0] if nodes else graph.ids[0]


def graph_to_seifert(graph: ResolutionGraph) -> SeifertData:
    """Read Seifert data off a star-shaped graph.

    The center is the node of valency >= 3, or the first declared vertex of
    a chain.
    """
    if not classify(graph).star_shaped:
        raise PreconditionError("graph is not star-shaped")

    center = _center(graph)
    arms: list[tuple[int, int]] = []
    for first in graph.neighbours[center]:
        chain: list[int] = []
        previous, current = center, first
        while True:
            v = graph.vertex(current)
            if v.genus != 0:
                raise PreconditionError(f"arm vertex {current} has genus {v.genus}")
            if v.weight > -2:
                raise PreconditionError(f"arm vertex {current} has weight {v.weight} > -2")
            chain.append(v.degree)
            following = [x for x in graph.neighbours[current] if x != previous]
            if not following:
                break
            previous, current = current, following[0]
        arms.append(hj_value(chain))

    c = graph.vertex(center)
    return SeifertData(c.genus, c.degree, tuple(arms))
