from __future__ import annotations

import itertools
import os
import time
from collections import defaultdict

import networkx as nx
import pytest

from surface_smoothing.cli.harness import evaluate, iter_unique_graphs, run_enumeration
from surface_smoothing.core.config import LimitSettings
from surface_smoothing.core.errors import InputError
from surface_smoothing.graph import ResolutionGraph, canonical_key


def test_unique_graph_counts() -> None:
    graphs = list(iter_unique_graphs(2, -4))
    assert len(graphs) == 3 + 6
    assert len({key for key, _ in graphs}) == len(graphs)


def test_keys_match_canonical_key() -> None:
    for key, graph in iter_unique_graphs(5, -3):
        assert key == canonical_key(graph)


def test_max_special_zero_leaves_only_minus_two_trees() -> None:
    summary = run_enumeration(4, -4, max_special=0)
    assert summary.scanned == 5
    assert summary.rdp == 5
    assert summary.evaluated == 0


def test_small_enumeration_has_no_failures() -> None:
    summary = run_enumeration(4, -4)
    assert summary.failures == []
    assert summary.evaluated > 0
    assert summary.exit_code() == 0
    assert sum(summary.histogram.values()) == summary.evaluated


def test_worker_count_does_not_change_the_summary() -> None:
    assert run_enumeration(4, -4, workers=3) == run_enumeration(4, -4, workers=1)


def test_two_node_graphs_reach_two_node(two_node: ResolutionGraph) -> None:
    summary = run_enumeration(8, -5, max_special=1)
    assert summary.failures == []
    assert "2" in summary.histogram_non_star
    outcome = evaluate(canonical_key(two_node), two_node)
    assert outcome.h1_mKE == 2 and not outcome.star and outcome.failures == []


@pytest.mark.parametrize(
    "max_vertices, min_weight, message",
    [(0, -4, "max-vertices must be >= 1"), (3, -1, "min-weight must be <= -2"),
     (9, -4, "exceeds the limit"), (4, -7, "below the limit")],
)
def test_limits(max_vertices: int, min_weight: int, message: str) -> None:
    with pytest.raises(InputError, match=message):
        run_enumeration(max_vertices, min_weight, limits=LimitSettings())


def test_emitted_graphs_are_pairwise_non_isomorphic() -> None:
    match = lambda x, y: x["weight"] == y["weight"]  # noqa: E731
    groups: dict[tuple, list[nx.Graph]] = defaultdict(list)
    for _, graph in iter_unique_graphs(5, -3):
        groups[(len(graph), tuple(sorted(graph.degrees)))].append(graph.to_networkx())
    for members in groups.values():
        for a, b in itertools.combinations(members, 2):
            assert not nx.is_isomorphic(a, b, node_match=match)


def test_enumeration_scans_each_unique_graph_once() -> None:
    summary = run_enumeration(5, -4, workers=2)
    assert summary.scanned == sum(1 for _ in iter_unique_graphs(5, -4))


@pytest.mark.slow
def test_full_enumeration_has_no_failures() -> None:
    started = time.perf_counter()
    summary = run_enumeration(7, -5, workers=os.cpu_count() or 1)
    elapsed = time.perf_counter() - started
    assert summary.failures == []
    assert (summary.scanned, summary.evaluated) == (78798, 72536)
    assert elapsed < 60, f"enumeration took {elapsed:.1f} s"
