"""Intersection-lattice invariants of a resolution graph.

All the integer work happens on a :class:`LatticeContext`, built once per
graph and cached.  Trees, which is what nearly every caller passes, are
eliminated leaf-first so that determinants, definiteness and solves stay
linear in the number of curves; anything else goes through the Bareiss
routines in :mod:`surface_smoothing.core.exact`.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Optional, Sequence

from surface_smoothing.core import exact
from surface_smoothing.core.errors import IterationLimitError, PreconditionError
from surface_smoothing.graph.model import Cycle, IntersectionForm, QCycle, ResolutionGraph

logger = logging.getLogger(__name__)

DEFAULT_ITERATION_FACTOR = 10

CycleLike = Cycle | QCycle


@dataclass(frozen=True)
class _TreeElimination:
    """Leaf-first Gaussian elimination of a tree's form, rooted at vertex 0.

    ``pivots[v] / scales[v]`` is the pivot of v once all its children are
    eliminated; ``scales[v]`` is the product of the children's ``pivots``, so
    both stay integral and ``pivots[0]`` is the determinant.
    """

    order: tuple[int, ...]
    parent: tuple[int, ...]
    children: tuple[tuple[int, ...], ...]
    pivots: tuple[int, ...]
    scales: tuple[int, ...]


@dataclass(frozen=True)
class Rounding:
    scaled: tuple[int, ...]
    determinant: int
    initial: tuple[int, ...]
    result: tuple[int, ...]
    added: tuple[int, ...]


def _sylvester(rows: Sequence[Sequence[int]]) -> bool:
    """Sylvester's criterion on -M: (-1)^k D_k > 0 for every leading minor D_k."""
    minors = exact.leading_minors(rows)
    if len(minors) < len(rows):
        return False
    return all((-1) ** (k + 1) * d > 0 for k, d in enumerate(minors))


class LatticeContext:
    """Integer view of one connected graph: weights, genera and adjacency by index."""

    def __init__(self, weights: Sequence[int], genera: Sequence[int], edges: Iterable[tuple[int, int]]):
        self.weights = tuple(weights)
        self.genera = tuple(genera)
        self.size = len(self.weights)
        adjacency: list[list[int]] = [[] for _ in range(self.size)]
        self.edge_count = 0
        for i, j in edges:
            adjacency[i].append(j)
            adjacency[j].append(i)
            self.edge_count += 1
        self.adjacency = tuple(tuple(sorted(ns)) for ns in adjacency)
        # K . E_i = d_i + 2 g_i - 2 (adjunction)
        self.canonical_degrees = tuple(-w + 2 * g - 2 for w, g in zip(self.weights, self.genera))
        self._grown: dict[tuple, tuple[tuple[int, ...], tuple[int, ...]]] = {}
        self._rounds: dict[tuple, Rounding] = {}

    @classmethod
    def of(cls, graph: ResolutionGraph) -> LatticeContext:
        index = graph.index
        return cls(
            tuple(v.weight for v in graph.vertices),
            tuple(v.genus for v in graph.vertices),
            ((index[a], index[b]) for a, b in graph.edges),
        )

    @property
    def is_tree(self) -> bool:
        return self.edge_count == self.size - 1

    @cached_property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        rows = [[0] * self.size for _ in range(self.size)]
        for i, w in enumerate(self.weights):
            rows[i][i] = w
            for j in self.adjacency[i]:
                rows[i][j] = 1
        return tuple(tuple(r) for r in rows)

    @cached_property
    def _elimination(self) -> Optional[_TreeElimination]:
        if not self.is_tree:
            return None
        parent = [-1] * self.size
        order: list[int] = []
        stack = [0]
        while stack:
            v = stack.pop()
            order.append(v)
            for u in self.adjacency[v]:
                if u != parent[v]:
                    parent[u] = v
                    stack.append(u)
        children: list[list[int]] = [[] for _ in range(self.size)]
        for v in order[1:]:
            children[parent[v]].append(v)

        pivots = [0] * self.size
        scales = [1] * self.size
        for v in reversed(order):
            g = 1
            for u in children[v]:
                g *= pivots[u]
            d = self.weights[v] * g
            for u in children[v]:
                d -= scales[u] * (g // pivots[u])
            if d == 0:
                return None
            pivots[v] = d
            scales[v] = g
        return _TreeElimination(
            tuple(order), tuple(parent), tuple(tuple(c) for c in children), tuple(pivots), tuple(scales)
        )

    @cached_property
    def negative_definite(self) -> bool:
        elim = self._elimination
        if elim is not None:
            return all(d * g < 0 for d, g in zip(elim.pivots, elim.scales))
        if self.is_tree:
            # a zero pivot in leaf-first order
            return False
        return _sylvester(self.rows)

    @cached_property
    def determinant(self) -> int:
        elim = self._elimination
        if elim is not None:
            return elim.pivots[0]
        return exact.determinant(self.rows)

    def require_negative_definite(self) -> None:
        if not self.negative_definite:
            raise PreconditionError("intersection form is not negative definite")

    def scaled_solve(self, rhs: Sequence[int]) -> tuple[tuple[int, ...], int]:
        """Return (X, det) with M X = det * rhs; X is integral by Cramer's rule."""
        det = self.determinant
        if det == 0:
            raise ZeroDivisionError("singular intersection form")
        elim = self._elimination
        if elim is None:
            values = exact.solve(self.rows, rhs)
            return tuple(exact.as_integer(x * det, "scaled solution") for x in values), det

        y = [0] * self.size
        for v in reversed(elim.order):
            g = elim.scales[v]
            acc = rhs[v] * g
            for u in elim.children[v]:
                acc -= y[u] * (g // elim.pivots[u])
            y[v] = acc
        x = [0] * self.size
        x[0] = y[0]
        for v in elim.order[1:]:
            x[v] = (y[v] * det - x[elim.parent[v]] * elim.scales[v]) // elim.pivots[v]
        return tuple(x), det

    def apply(self, mult: Sequence) -> tuple:
        """(M m)_i = w_i m_i + sum of m_j over the neighbours j of i."""
        w = self.weights
        return tuple(
            w[i] * mult[i] + sum(mult[j] for j in self.adjacency[i]) for i in range(self.size)
        )

    def pair(self, a: Sequence, b: Sequence):
        return sum(x * y for x, y in zip(a, self.apply(b)))

    def dot_canonical(self, mult: Sequence):
        return sum(m * k for m, k in zip(mult, self.canonical_degrees))

    def iteration_cap(self, factor: int = DEFAULT_ITERATION_FACTOR) -> int:
        """factor * sum(d_i) * #vertices, never below ``factor``."""
        return max(factor, factor * -sum(self.weights) * self.size)

    def grow(
        self,
        start: Sequence[int],
        bound: Sequence[int],
        factor: int = DEFAULT_ITERATION_FACTOR,
        what: str = "round-up",
    ) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Add the lowest E_j with D . E_j > bound_j until there is none.

        Returns the final cycle and the indices added, in order.
        """
        d = list(start)
        current = list(self.apply(d))
        added: list[int] = []
        cap = self.iteration_cap(factor)
        for _ in range(cap):
            j = next((i for i in range(self.size) if current[i] > bound[i]), None)
            if j is None:
                return tuple(d), tuple(added)
            d[j] += 1
            added.append(j)
            current[j] += self.weights[j]
            for u in self.adjacency[j]:
                current[u] += 1
        raise IterationLimitError(f"{what} did not stabilise within {cap} steps")

    def fundamental_cycle(self, factor: int = DEFAULT_ITERATION_FACTOR) -> tuple[int, ...]:
        """Laufer's computation sequence, started at E = sum E_i."""
        key = ("laufer", factor)
        if key not in self._grown:
            self.require_negative_definite()
            self._grown[key] = self.grow(
                (1,) * self.size, (0,) * self.size, factor, what="fundamental cycle"
            )
        return self._grown[key][0]

    def round_up(self, degrees: Sequence[int], factor: int = DEFAULT_ITERATION_FACTOR) -> Rounding:
        """Smallest integral D with D . E_i <= degrees[i], from the ceiling of M^-1 degrees."""
        key = (tuple(degrees), factor)
        cached = self._rounds.get(key)
        if cached is not None:
            return cached
        self.require_negative_definite()
        scaled, det = self.scaled_solve(key[0])
        initial = tuple(-((-x) // det) for x in scaled)
        result, added = self.grow(initial, key[0], factor)
        rounding = Rounding(scaled, det, initial, result, added)
        self._rounds[key] = rounding
        return rounding

    @cached_property
    def minus_canonical(self) -> tuple[int, ...]:
        return tuple(-k for k in self.canonical_degrees)

    def minus_k_round(self) -> tuple[int, ...]:
        """Y = [-K]."""
        return self.round_up(self.minus_canonical).result

    def arithmetic_genus(self, mult: Sequence[int]) -> int:
        """p_a(Z) = 1 + (Z.Z + Z.K)/2."""
        return 1 + exact.as_integer(
            Fraction(self.pair(mult, mult) + self.dot_canonical(mult), 2), "arithmetic genus"
        )

    @cached_property
    def rational(self) -> bool:
        """Artin's criterion p_a(Z_0) = 0."""
        return self.negative_definite and self.arithmetic_genus(self.fundamental_cycle()) == 0

    @cached_property
    def reduced_term(self) -> int:
        """E . (E + 3K) / 2."""
        e = (1,) * self.size
        return exact.as_integer(
            Fraction(self.pair(e, e) + 3 * sum(self.canonical_degrees), 2), "E.(E+3K)/2"
        )


@lru_cache(maxsize=8192)
def context(graph: ResolutionGraph) -> LatticeContext:
    return LatticeContext.of(graph)


def intersection_form(graph: ResolutionGraph) -> IntersectionForm:
    return IntersectionForm(graph.ids, context(graph).rows)


def is_negative_definite(form: IntersectionForm) -> bool:
    return _sylvester(form.rows)


def graph_is_negative_definite(graph: ResolutionGraph) -> bool:
    return context(graph).negative_definite


def determinant(graph: ResolutionGraph) -> int:
    return context(graph).determinant


def _check_indexed(graph: ResolutionGraph, *cycles: CycleLike) -> None:
    if any(c.ids != graph.ids for c in cycles):
        raise ValueError("cycle is not indexed by this graph's vertices")


def intersections(cycle: CycleLike, graph: ResolutionGraph) -> tuple:
    """The vector (C . E_i)_i."""
    _check_indexed(graph, cycle)
    return context(graph).apply(cycle.mult)


def pairing(a: CycleLike, b: CycleLike, graph: ResolutionGraph) -> Fraction:
    """a^T M b, exactly."""
    _check_indexed(graph, a, b)
    return Fraction(context(graph).pair(a.mult, b.mult))


def canonical_degrees(graph: ResolutionGraph) -> tuple[int, ...]:
    return context(graph).canonical_degrees


def canonical_class(graph: ResolutionGraph) -> QCycle:
    ctx = context(graph)
    ctx.require_negative_definite()
    scaled, det = ctx.scaled_solve(ctx.canonical_degrees)
    k = QCycle(graph.ids, tuple(Fraction(x, det) for x in scaled))
    logger.debug("Canonical class: %s", k)
    return k


def is_numerically_gorenstein(graph: ResolutionGraph) -> bool:
    return canonical_class(graph).is_integral()


def fundamental_cycle(graph: ResolutionGraph, iteration_factor: int = DEFAULT_ITERATION_FACTOR) -> Cycle:
    """Laufer's computation sequence: repeatedly add the lowest E_j with Z . E_j > 0."""
    return Cycle(graph.ids, context(graph).fundamental_cycle(iteration_factor))


def arithmetic_genus(cycle: Cycle, graph: ResolutionGraph) -> int:
    _check_indexed(graph, cycle)
    return context(graph).arithmetic_genus(cycle.mult)


def is_rational(graph: ResolutionGraph) -> bool:
    return context(graph).rational


def chi_T(graph: ResolutionGraph) -> int:
    """Topological Euler characteristic of the exceptional configuration."""
    return sum(2 - 2 * v.genus for v in graph.vertices) - len(graph.edges)


def reduced_term(graph: ResolutionGraph) -> int:
    return context(graph).reduced_term


def chi_T_residual(graph: ResolutionGraph) -> int:
    """chi_T - (sum(g_i + d_i - 1) - E.(E+3K)/2); identically zero."""
    total = sum(v.genus + v.degree - 1 for v in graph.vertices)
    return chi_T(graph) - (total - reduced_term(graph))
