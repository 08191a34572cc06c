from __future__ import annotations

from pathlib import Path
from typing import Sequence

import pytest

from surface_smoothing.graph import ResolutionGraph, load_graph
from surface_smoothing.seifert import SeifertData, seifert_to_graph

FIXTURES_DIR = Path(__file__).resolve().parent.parent / "fixtures"

TWO_NODE_Y = {"x1": 1, "x2": 2, "p": 3, "q": 2, "y": 1, "u1": 2, "u2": 1, "v": 1}

E8 = SeifertData(0, 2, ((2, 1), (3, 2), (5, 4)))
D4 = SeifertData(0, 2, ((2, 1), (2, 1), (2, 1)))


def chain(*weights: int) -> ResolutionGraph:
    """Linear chain v0 - v1 - ... with the given self-intersections."""
    ids = [f"v{i}" for i in range(len(weights))]
    return ResolutionGraph.build(
        [(vid, w) for vid, w in zip(ids, weights)],
        list(zip(ids, ids[1:])),
    )


def star(center: int, arms: Sequence[Sequence[int]]) -> ResolutionGraph:
    vertices = [("c", center)]
    edges = []
    for i, arm in enumerate(arms):
        previous = "c"
        for j, w in enumerate(arm):
            vid = f"a{i}v{j}"
            vertices.append((vid, w))
            edges.append((previous, vid))
            previous = vid
    return ResolutionGraph.build(vertices, edges)


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES_DIR


@pytest.fixture
def two_node() -> ResolutionGraph:
    return load_graph(FIXTURES_DIR / "example4_7.graph")


@pytest.fixture
def okuma_m1() -> ResolutionGraph:
    return load_graph(FIXTURES_DIR / "okuma_m1.graph")


@pytest.fixture
def e8_graph() -> ResolutionGraph:
    return seifert_to_graph(E8)


@pytest.fixture
def d4_graph() -> ResolutionGraph:
    return seifert_to_graph(D4)

