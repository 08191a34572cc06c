"""Value types for resolution graphs and cycles supported on the exceptional set."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import networkx as nx

from surface_smoothing.core.errors import GraphFormatError
from surface_smoothing.core.exact import render_rational


@dataclass(frozen=True)
class Vertex:
    id: str
    weight: int
    genus: int = 0

    @property
    def degree(self) -> int:
        """d_i, so that E_i . E_i = -d_i."""
        return -self.weight


def _connected(n: int, edges: Iterable[tuple[int, int]]) -> bool:
    # Runs for every constructed graph; the scans build hundreds of thousands.
    adjacency: list[list[int]] = [[] for _ in range(n)]
    for i, j in edges:
        adjacency[i].append(j)
        adjacency[j].append(i)
    reached = {0}
    stack = [0]
    while stack:
        for u in adjacency[stack.pop()]:
            if u not in reached:
                reached.add(u)
                stack.append(u)
    return len(reached) == n


@dataclass(frozen=True)
class ResolutionGraph:
    """Weighted dual graph of a resolution.

    Vertex order is the declaration order; "lowest id" everywhere in the
    package means the earliest vertex in this order.  Edges are stored as
    index-ordered pairs.
    """

    vertices: tuple[Vertex, ...]
    edges: tuple[tuple[str, str], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if not self.vertices:
            raise GraphFormatError("graph has no vertices")

        position: dict[str, int] = {}
        for v in self.vertices:
            if v.id in position:
                raise GraphFormatError(f"duplicate vertex id: {v.id}")
            if v.weight >= 0:
                raise GraphFormatError(f"vertex {v.id}: weight must be <= -1, got {v.weight}")
            if v.genus < 0:
                raise GraphFormatError(f"vertex {v.id}: genus must be >= 0, got {v.genus}")
            position[v.id] = len(position)

        seen: set[tuple[str, str]] = set()
        for a, b in self.edges:
            if a == b:
                raise GraphFormatError(f"self-loop at vertex {a}")
            for end in (a, b):
                if end not in position:
                    raise GraphFormatError(f"edge {a} {b} references unknown vertex {end}")
            pair = (a, b) if position[a] < position[b] else (b, a)
            if pair in seen:
                raise GraphFormatError(f"duplicate edge {a} {b}")
            seen.add(pair)
        object.__setattr__(
            self, "edges", tuple(sorted(seen, key=lambda p: (position[p[0]], position[p[1]])))
        )

        if not _connected(len(self.vertices), [(position[a], position[b]) for a, b in seen]):
            raise GraphFormatError("graph is disconnected")

    def __hash__(self) -> int:
        return self._hash

    def __reduce__(self):
        return (ResolutionGraph, (self.vertices, self.edges))

    @cached_property
    def _hash(self) -> int:
        return hash((self.vertices, self.edges))

    @classmethod
    def build(
        cls,
        vertices: Iterable[tuple[str, int] | tuple[str, int, int] | Vertex],
        edges: Iterable[tuple[str, str]] = (),
    ) -> ResolutionGraph:
        verts = tuple(v if isinstance(v, Vertex) else Vertex(*v) for v in vertices)
        return cls(verts, tuple(tuple(e) for e in edges))  # type: ignore[arg-type]

    # ------------------------------------------------------------------
    # Lookup
    # ------------------------------------------------------------------

    @cached_property
    def ids(self) -> tuple[str, ...]:
        return tuple(v.id for v in self.vertices)

    @cached_property
    def index(self) -> dict[str, int]:
        return {vid: i for i, vid in enumerate(self.ids)}

    @cached_property
    def neighbours(self) -> dict[str, tuple[str, ...]]:
        adj: dict[str, list[str]] = {vid: [] for vid in self.ids}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return {vid: tuple(sorted(ns, key=self.index.__getitem__)) for vid, ns in adj.items()}

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[Vertex]:
        return iter(self.vertices)

    def vertex(self, vid: str) -> Vertex:
        return self.vertices[self.index[vid]]

    def valency(self, vid: str) -> int:
        return len(self.neighbours[vid])

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(v.degree for v in self.vertices)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        for v in self.vertices:
            graph.add_node(v.id, weight=v.weight, genus=v.genus)
        graph.add_edges_from(self.edges)
        return graph

    def reordered(self, order: Sequence[str]) -> ResolutionGraph:
        """Same graph with the vertices declared in ``order``."""
        if sorted(order) != sorted(self.ids):
            raise GraphFormatError("reordering must be a permutation of the vertex ids")
        return ResolutionGraph(tuple(self.vertex(vid) for vid in order), self.edges)


@dataclass(frozen=True)
class IntersectionForm:
    ids: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.ids)


class _VertexVector:
    ids: tuple[str, ...]
    mult: tuple

    def __getitem__(self, vid: str):
        return self.mult[self.ids.index(vid)]

    def __len__(self) -> int:
        return len(self.mult)

    def _aligned(self, other: _VertexVector) -> None:
        if self.ids != other.ids:
            raise ValueError("cycles are indexed by different vertex sets")

    def as_dict(self) -> dict:
        return dict(zip(self.ids, self.mult))

    def __le__(self, other: _VertexVector) -> bool:
        self._aligned(other)
        return all(a <= b for a, b in zip(self.mult, other.mult))

    def __ge__(self, other: _VertexVector) -> bool:
        self._aligned(other)
        return all(a >= b for a, b in zip(self.mult, other.mult))

    def is_effective(self) -> bool:
        return all(m >= 0 for m in self.mult)

    def is_zero(self) -> bool:
        return not any(self.mult)


@dataclass(frozen=True)
class Cycle(_VertexVector):
    """Integral cycle sum m_i E_i."""

    ids: tuple[str, ...]
    mult: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.ids) != len(self.mult):
            raise ValueError("cycle length does not match its vertex set")

    @classmethod
    def zero(cls, graph: ResolutionGraph) -> Cycle:
        return cls(graph.ids, (0,) * len(graph))

    @classmethod
    def reduced(cls, graph: ResolutionGraph) -> Cycle:
        """The reduced exceptional divisor E = sum E_i."""
        return cls(graph.ids, (1,) * len(graph))

    def __add__(self, other: Cycle) -> Cycle:
        self._aligned(other)
        return Cycle(self.ids, tuple(a + b for a, b in zip(self.mult, other.mult)))

    def __sub__(self, other: Cycle) -> Cycle:
        self._aligned(other)
        return Cycle(self.ids, tuple(a - b for a, b in zip(self.mult, other.mult)))

    def __neg__(self) -> Cycle:
        return Cycle(self.ids, tuple(-a for a in self.mult))

    def add_vertex(self, vid: str, times: int = 1) -> Cycle:
        i = self.ids.index(vid)
        mult = list(self.mult)
        mult[i] += times
        return Cycle(self.ids, tuple(mult))

    def __str__(self) -> str:
        return " + ".join(f"{m}*{vid}" for vid, m in zip(self.ids, self.mult) if m) or "0"


@dataclass(frozen=True)
class QCycle(_VertexVector):
    """Rational cycle sum a_i E_i with exact Fraction coefficients."""

    ids: tuple[str, ...]
    mult: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.ids) != len(self.mult):
            raise ValueError("cycle length does not match its vertex set")
        object.__setattr__(self, "mult", tuple(Fraction(m) for m in self.mult))

    def is_integral(self) -> bool:
        return all(m.denominator == 1 for m in self.mult)

    def ceil(self) -> Cycle:
        return Cycle(self.ids, tuple(math.ceil(m) for m in self.mult))

    def __neg__(self) -> QCycle:
        return QCycle(self.ids, tuple(-a for a in self.mult))

    def __add__(self, other: _VertexVector) -> QCycle:
        self._aligned(other)
        return QCycle(self.ids, tuple(a + b for a, b in zip(self.mult, other.mult)))

    def __sub__(self, other: _VertexVector) -> QCycle:
        self._aligned(other)
        return QCycle(self.ids, tuple(a - b for a, b in zip(self.mult, other.mult)))

    def rendered(self) -> dict[str, str]:
        return {vid: render_rational(m) for vid, m in zip(self.ids, self.mult)}

    def __str__(self) -> str:
        return " + ".join(f"{render_rational(m)}*{vid}" for vid, m in zip(self.ids, self.mult) if m) or "0"
