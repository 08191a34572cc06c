from __future__ import annotations

import random

import pytest

from conftest import TWO_NODE_Y, chain, star
from surface_smoothing import oracles
from surface_smoothing.cli.harness import iter_unique_graphs
from surface_smoothing.cohomology import (
    LineBundleClass,
    bundle_of_cycle,
    giraud_round,
    minus_canonical,
    minus_canonical_minus_reduced,
    trivial_bundle,
)
from surface_smoothing.cohomology.formulas import minus_k_round
from surface_smoothing.core.errors import IterationLimitError, PreconditionError
from surface_smoothing.graph import Cycle, ResolutionGraph, fundamental_cycle
from surface_smoothing.graph.lattice import graph_is_negative_definite, intersections


def _definite_graphs(max_vertices: int, min_weight: int) -> list[ResolutionGraph]:
    return [g for _, g in iter_unique_graphs(max_vertices, min_weight) if graph_is_negative_definite(g)]


def test_minus_k_round_of_two_node(two_node: ResolutionGraph) -> None:
    assert minus_k_round(two_node).as_dict() == TWO_NODE_Y


def test_round_of_trivial_bundle_is_zero(two_node: ResolutionGraph) -> None:
    result = giraud_round(two_node, trivial_bundle(two_node))
    assert result.round.is_zero()
    assert result.added == ()


def test_round_starts_from_the_ceiling() -> None:
    graph = chain(-3)
    result = giraud_round(graph, minus_canonical(graph))
    assert result.coefficients.rendered() == {"v0": "1/3"}
    assert result.initial.mult == (1,)
    assert result.round.mult == (1,)


def test_round_is_admissible_and_minimal(two_node: ResolutionGraph) -> None:
    bundle = minus_canonical(two_node)
    y = giraud_round(two_node, bundle).round
    assert all(x <= d for x, d in zip(intersections(y, two_node), bundle.degrees))
    for vid in two_node.ids:
        smaller = y.add_vertex(vid, -1)
        assert any(x > d for x, d in zip(intersections(smaller, two_node), bundle.degrees))


def test_round_of_minus_k_contains_fundamental_cycle(two_node: ResolutionGraph) -> None:
    assert minus_k_round(two_node) >= fundamental_cycle(two_node)


def test_translation_with_reduced_divisor(two_node: ResolutionGraph) -> None:
    rounded = giraud_round(two_node, minus_canonical_minus_reduced(two_node)).round
    assert rounded == minus_k_round(two_node) - Cycle.reduced(two_node)


def test_round_matches_brute_force_on_small_graphs() -> None:
    rng = random.Random(7)
    checked = 0
    for graph in _definite_graphs(4, -5):
        degrees = [rng.randint(-3, 2) for _ in graph.ids]
        expected = oracles.brute_force_round(graph, degrees)
        if expected is None:
            continue
        checked += 1
        assert giraud_round(graph, LineBundleClass.for_graph(graph, degrees)).round == expected
    assert checked > 100


def test_round_properties_on_random_instances() -> None:
    rng = random.Random(11)
    graphs = _definite_graphs(5, -5)
    for _ in range(1000):
        graph = rng.choice(graphs)
        bundle = LineBundleClass.for_graph(graph, [rng.randint(-4, 3) for _ in graph.ids])
        rounded = giraud_round(graph, bundle).round

        shift = Cycle(graph.ids, tuple(rng.randint(-2, 2) for _ in graph.ids))
        assert giraud_round(graph, bundle - bundle_of_cycle(shift, graph)).round == rounded - shift

        order = list(graph.ids)
        rng.shuffle(order)
        shuffled = graph.reordered(order)
        degrees = [bundle.degrees[graph.index[vid]] for vid in order]
        again = giraud_round(shuffled, LineBundleClass.for_graph(shuffled, degrees)).round
        assert again.as_dict() == rounded.as_dict()


def test_round_needs_definite_form() -> None:
    graph = chain(-1, -1)
    with pytest.raises(PreconditionError):
        giraud_round(graph, trivial_bundle(graph))


def test_round_respects_the_iteration_cap() -> None:
    graph = star(-2, [[-2], [-2], [-2]])
    with pytest.raises(IterationLimitError):
        giraud_round(graph, LineBundleClass.for_graph(graph, [-40] * len(graph)), iteration_factor=0)


def test_bundle_degree_count_is_checked(two_node: ResolutionGraph) -> None:
    with pytest.raises(ValueError, match="expected 8 degrees"):
        LineBundleClass.for_graph(two_node, [0, 0])
