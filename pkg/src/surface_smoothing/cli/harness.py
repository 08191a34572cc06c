"""Enumeration harness over small weighted trees.

Trees come from networkx, weights range over [min_weight, -2], and
isomorphic weightings are collapsed by their canonical key.  Every rational
non-RDP graph is run through the h^1 formulas and the identities tying them
together; any mismatch is recorded as a failure.  Work is cut into blocks of
plain tuples (one tree and the weight of its vertex 0, or one chain prefix)
so that a process pool can build the graphs on its own side.
"""
from __future__ import annotations

import itertools
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional, TypeVar

import networkx as nx

from surface_smoothing.cli.reports import EnumerationSummary
from surface_smoothing.cohomology import formulas
from surface_smoothing.core.config import LimitSettings
from surface_smoothing.core.errors import InputError, SmoothingError
from surface_smoothing.graph import lattice
from surface_smoothing.graph.classify import classify, weighted_tree_key
from surface_smoothing.graph.lattice import LatticeContext
from surface_smoothing.graph.model import ResolutionGraph, Vertex

logger = logging.getLogger(__name__)

T = TypeVar("T")


@dataclass
class GraphOutcome:
    key: str
    negative_definite: bool = False
    rational: bool = False
    rdp: bool = False
    star: bool = False
    h1_mKE: Optional[int] = None
    failures: list[str] = field(default_factory=list)


def _trees(n: int) -> Iterator[nx.Graph]:
    if n == 1:
        tree = nx.Graph()
        tree.add_node(0)
        yield tree
        return
    yield from nx.nonisomorphic_trees(n)


def _weightings(n: int, min_weight: int, max_special: Optional[int]) -> Iterator[tuple[int, ...]]:
    """Weight vectors in [min_weight, -2]^n with at most ``max_special`` entries below -2."""
    special = range(min_weight, -2)
    limit = n if max_special is None else min(n, max_special)
    for k in range(limit + 1):
        for positions in itertools.combinations(range(n), k):
            for values in itertools.product(special, repeat=k):
                weights = [-2] * n
                for p, v in zip(positions, values):
                    weights[p] = v
                yield tuple(weights)


def iter_unique_graphs(
    max_vertices: int, min_weight: int, max_special: Optional[int] = None
) -> Iterator[tuple[str, ResolutionGraph]]:
    """Pairwise non-isomorphic genus-0 weighted trees, in a fixed order."""
    seen: set[str] = set()
    for n in range(1, max_vertices + 1):
        for tree in _trees(n):
            neighbours = {v: list(tree.neighbors(v)) for v in tree.nodes}
            centers = nx.center(tree)
            edges = tuple((f"v{a}", f"v{b}") for a, b in tree.edges)
            for weights in _weightings(n, min_weight, max_special):
                key = weighted_tree_key(neighbours, {v: f"{weights[v]}:0" for v in tree.nodes}, centers)
                if key in seen:
                    continue
                seen.add(key)
                vertices = tuple(Vertex(f"v{i}", w, 0) for i, w in enumerate(weights))
                yield key, ResolutionGraph(vertices, edges)


def _has_two_trivalent_nodes(graph: ResolutionGraph) -> bool:
    valencies = [graph.valency(vid) for vid in graph.ids]
    return max(valencies) == 3 and valencies.count(3) >= 2


def evaluate(key: str, graph: ResolutionGraph) -> GraphOutcome:
    outcome = GraphOutcome(key)
    if lattice.chi_T_residual(graph) != 0:
        outcome.failures.append(f"{key}: chi_T identity fails")

    cls = classify(graph)
    outcome.negative_definite = cls.negative_definite
    outcome.rational = cls.rational
    outcome.rdp = cls.rdp
    outcome.star = cls.star_shaped
    if not (cls.negative_definite and cls.rational) or cls.rdp:
        return outcome

    fail = outcome.failures.append
    try:
        h1_mK = formulas.h1_minus_K(graph)
        h1_mKE = formulas.h1_minus_K_minus_E(graph)
        outcome.h1_mKE = h1_mKE
        if h1_mK - h1_mKE - lattice.reduced_term(graph) != 0:
            fail(f"{key}: h^1(-K) - h^1(-(K+E)) != E.(E+3K)/2")
        if h1_mK < formulas.multiplicity(graph) - 3:
            fail(f"{key}: h^1(-K) = {h1_mK} below mult - 3")
        y = formulas.minus_k_round(graph)
        if not y >= cls.fundamental_cycle:
            fail(f"{key}: [-K] = {y} does not contain Z_0 = {cls.fundamental_cycle}")
        if formulas.minus_k_from_fundamental_cycle(graph) != y:
            fail(f"{key}: growing Z_0 does not reach [-K]")
        if formulas.h1_minus_K_minus_E_via_rounding(graph) != h1_mKE:
            fail(f"{key}: h^1(-(K+E)) differs between the two evaluations")
        if cls.chain and h1_mKE != 0:
            fail(f"{key}: chain with h^1(-(K+E)) = {h1_mKE}")
        if not cls.star_shaped and _has_two_trivalent_nodes(graph) and h1_mKE < 1:
            fail(f"{key}: two trivalent nodes but h^1(-(K+E)) = 0")
    except SmoothingError as exc:
        fail(f"{key}: {exc}")
    return outcome


def _evaluate_tree(
    n: int, edges: tuple[tuple[int, int], ...], first_weight: int, min_weight: int, max_special: Optional[int]
) -> list[GraphOutcome]:
    """Every weighting of one tree whose vertex 0 carries ``first_weight``, deduplicated."""
    tree = nx.Graph(edges)
    tree.add_nodes_from(range(n))
    neighbours = {v: list(tree.neighbors(v)) for v in tree.nodes}
    centers = nx.center(tree)
    named_edges = tuple((f"v{a}", f"v{b}") for a, b in edges)
    seen: set[str] = set()
    outcomes: list[GraphOutcome] = []
    for weights in _weightings(n, min_weight, max_special):
        if weights[0] != first_weight:
            continue
        key = weighted_tree_key(neighbours, {v: f"{weights[v]}:0" for v in tree.nodes}, centers)
        if key in seen:
            continue
        seen.add(key)
        vertices = tuple(Vertex(f"v{i}", w, 0) for i, w in enumerate(weights))
        outcomes.append(evaluate(key, ResolutionGraph(vertices, named_edges)))
    return outcomes


def _tree_tasks(max_vertices: int, min_weight: int) -> Iterator[tuple[int, tuple[tuple[int, int], ...], int]]:
    for n in range(1, max_vertices + 1):
        for tree in _trees(n):
            edges = tuple(sorted(tree.edges))
            for first_weight in range(min_weight, -1):
                yield n, edges, first_weight


def _run_tasks(function: Callable[..., T], tasks: list[tuple], workers: int) -> Iterator[T]:
    """Apply ``function`` to each argument tuple, across processes when workers > 1."""
    if workers <= 1:
        for args in tasks:
            yield function(*args)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(function, *args) for args in tasks]
        for future in futures:
            yield future.result()


def check_limits(max_vertices: int, min_weight: int, limits: LimitSettings) -> None:
    if max_vertices < 1:
        raise InputError(f"--max-vertices must be >= 1, got {max_vertices}")
    if min_weight > -2:
        raise InputError(f"--min-weight must be <= -2, got {min_weight}")
    if max_vertices > limits.max_enumeration_vertices:
        raise InputError(
            f"--max-vertices {max_vertices} exceeds the limit {limits.max_enumeration_vertices}"
        )
    if min_weight < limits.min_enumeration_weight:
        raise InputError(f"--min-weight {min_weight} is below the limit {limits.min_enumeration_weight}")


def _histogram(values: list[int]) -> dict[str, int]:
    counts = Counter(values)
    return {str(k): counts[k] for k in sorted(counts)}


def run_enumeration(
    max_vertices: int,
    min_weight: int,
    max_special: Optional[int] = None,
    workers: int = 1,
    limits: Optional[LimitSettings] = None,
) -> EnumerationSummary:
    check_limits(max_vertices, min_weight, limits or LimitSettings())
    logger.info(
        "Enumerating trees up to %d vertices, weights >= %d, max_special=%s, workers=%d",
        max_vertices, min_weight, max_special, workers,
    )
    tasks = [(n, edges, first, min_weight, max_special) for n, edges, first in _tree_tasks(max_vertices, min_weight)]
    by_key: dict[str, GraphOutcome] = {}
    for block in _run_tasks(_evaluate_tree, tasks, workers):
        for outcome in block:
            by_key.setdefault(outcome.key, outcome)
    outcomes = sorted(by_key.values(), key=lambda o: o.key)

    evaluated = [o for o in outcomes if o.h1_mKE is not None]
    summary = EnumerationSummary(
        max_vertices=max_vertices,
        min_weight=min_weight,
        max_special=max_special,
        scanned=len(outcomes),
        negative_definite=sum(o.negative_definite for o in outcomes),
        rational=sum(o.rational for o in outcomes),
        rdp=sum(o.rdp for o in outcomes),
        evaluated=len(evaluated),
        histogram=_histogram([o.h1_mKE for o in evaluated]),
        histogram_star=_histogram([o.h1_mKE for o in evaluated if o.star]),
        histogram_non_star=_histogram([o.h1_mKE for o in evaluated if not o.star]),
        failures=[f for o in outcomes for f in o.failures],
    )
    logger.info("Enumeration done: %d graphs, %d evaluated, %d failures",
                summary.scanned, summary.evaluated, len(summary.failures))
    return summary


@dataclass
class ChainScan:
    max_length: int
    min_weight: int
    scanned: int = 0
    failures: list[str] = field(default_factory=list)


def _scan_chain_block(length: int, prefix: tuple[int, ...], min_weight: int) -> tuple[int, list[str]]:
    """Chains of one length starting with ``prefix``, one per reversal pair, at least one weight <= -3."""
    edges = tuple((i, i + 1) for i in range(length - 1))
    genera = (0,) * length
    scanned = 0
    failures: list[str] = []
    for rest in itertools.product(range(min_weight, -1), repeat=length - len(prefix)):
        weights = prefix + rest
        if weights > weights[::-1] or min(weights) > -3:
            continue
        scanned += 1
        ctx = LatticeContext(weights, genera, edges)
        try:
            if not ctx.rational:
                failures.append(f"chain {weights}: not rational")
                continue
            value = formulas.h1_minus_K_minus_E_on(ctx)
        except SmoothingError as exc:
            failures.append(f"chain {weights}: {exc}")
            continue
        if value != 0:
            failures.append(f"chain {weights}: h^1(-(K+E)) = {value}")
    return scanned, failures


def scan_chains(max_length: int = 8, min_weight: int = -6, workers: int = 1) -> ChainScan:
    """Check h^1(-(K+E)) = 0 on every non-RDP chain with weights in [min_weight, -2]."""
    if max_length < 1:
        raise InputError(f"chain length must be >= 1, got {max_length}")
    if min_weight > -2:
        raise InputError(f"--min-weight must be <= -2, got {min_weight}")
    logger.info("Scanning chains up to length %d, weights >= %d, workers=%d", max_length, min_weight, workers)
    weights = range(min_weight, -1)
    tasks = [
        (length, prefix, min_weight)
        for length in range(1, max_length + 1)
        for prefix in itertools.product(weights, repeat=min(length, 2))
    ]
    result = ChainScan(max_length, min_weight)
    for scanned, failures in _run_tasks(_scan_chain_block, tasks, workers):
        result.scanned += scanned
        result.failures.extend(failures)
    logger.info("Chain scan done: %d chains, %d failures", result.scanned, len(result.failures))
    return result
