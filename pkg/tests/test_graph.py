from __future__ import annotations

import itertools
import pickle
import random
from fractions import Fraction
from typing import Iterator, Sequence

import networkx as nx
import pytest
import sympy

from conftest import chain, star
from surface_smoothing import oracles
from surface_smoothing.cli.harness import iter_unique_graphs
from surface_smoothing.core import exact
from surface_smoothing.core.errors import GraphFormatError, IdentityFailure, PreconditionError
from surface_smoothing.graph import (
    Cycle,
    IntersectionForm,
    ResolutionGraph,
    canonical_class,
    canonical_key,
    chi_T,
    chi_T_residual,
    classify,
    context,
    determinant,
    format_graph,
    fundamental_cycle,
    intersection_form,
    is_negative_definite,
    is_numerically_gorenstein,
    is_rational,
    pairing,
    parse_graph,
    reduced_term,
    require_rational_minimal,
)
from surface_smoothing.graph.lattice import graph_is_negative_definite


# ----------------------------------------------------------------------
# exact arithmetic
# ----------------------------------------------------------------------


@pytest.mark.parametrize(
    "rows",
    [
        [[-2, 1], [1, -2]],
        [[-2, 1, 0], [1, -3, 1], [0, 1, -5]],
        [[0, 1, 0], [1, 0, 1], [0, 1, -7]],
        [[1, 2], [2, 4]],
    ],
)
def test_determinant_matches_sympy(rows: list[list[int]]) -> None:
    assert exact.determinant(rows) == sympy.Matrix(rows).det(method="bareiss")


def test_solve_is_exact() -> None:
    rows = [[-2, 1, 0], [1, -3, 1], [0, 1, -5]]
    x = exact.solve(rows, [1, 0, Fraction(1, 2)])
    for row, rhs in zip(rows, [1, 0, Fraction(1, 2)]):
        assert sum(a * b for a, b in zip(row, x)) == rhs


def test_render_rational_lowest_terms() -> None:
    assert exact.render_rational(Fraction(6, -4)) == "-3/2"
    assert exact.render_rational(Fraction(4, 2)) == "2"


def test_as_integer_rejects_fractions() -> None:
    with pytest.raises(IdentityFailure, match="1/2"):
        exact.as_integer(Fraction(1, 2), "test value")


# ----------------------------------------------------------------------
# parsing
# ----------------------------------------------------------------------


def test_two_node_parses(two_node: ResolutionGraph) -> None:
    assert len(two_node) == 8
    assert len(two_node.edges) == 7
    assert sorted(two_node.degrees) == [2] * 7 + [5]


def test_line_and_json_formats_agree(two_node: ResolutionGraph) -> None:
    assert parse_graph(format_graph(two_node, "json")) == two_node
    assert parse_graph(format_graph(two_node)) == two_node


@pytest.mark.parametrize(
    "text, message",
    [
        ("vertex a -2 0\nvertex a -3 0\n", "line 2: duplicate vertex id"),
        ("vertex a -2 0\nedge a b\n", "line 2: edge references unknown vertex b"),
        ("vertex a 0 0\n", "line 1: vertex a: weight must be <= -1"),
        ("vertex a -2 x\n", "line 1: genus must be an integer"),
        ("vertex a -2 0\nvertex b -2 0\n", "disconnected"),
        ("vertex a -2 0\nedge a a\n", "self-loop"),
        ("node a -2\n", "unknown directive"),
        ("", "no vertices"),
    ],
)
def test_parse_errors(text: str, message: str) -> None:
    with pytest.raises(GraphFormatError, match=message):
        parse_graph(text)


def test_json_validation_errors_become_format_errors() -> None:
    with pytest.raises(GraphFormatError, match="invalid graph document"):
        parse_graph('{"vertices": [{"id": "a"}]}')


def test_graph_pickles_without_cached_state(two_node: ResolutionGraph) -> None:
    hash(two_node)
    assert two_node.index
    restored = pickle.loads(pickle.dumps(two_node))
    assert restored == two_node
    assert hash(restored) == hash(two_node)
    assert "index" not in vars(restored)


def test_comments_and_default_genus() -> None:
    graph = parse_graph("# a single curve\nvertex a -3  # trailing\n")
    assert graph.vertex("a").genus == 0
    assert graph.degrees == (3,)


# ----------------------------------------------------------------------
# intersection form
# ----------------------------------------------------------------------


def test_two_node_matrix_diagonal(two_node: ResolutionGraph) -> None:
    form = intersection_form(two_node)
    assert [form.rows[i][i] for i in range(8)] == [-2, -2, -2, -5, -2, -2, -2, -2]
    assert all(form.rows[i][j] == form.rows[j][i] for i in range(8) for j in range(8))


@pytest.mark.parametrize(
    "graph, expected",
    [
        (chain(-2, -2, -2), True),
        (chain(-1, -1), False),
        (chain(-1), True),
        (star(-1, [[-2], [-3], [-6]]), False),
        (star(-1, [[-2], [-3], [-7]]), True),
    ],
)
def test_negative_definiteness(graph: ResolutionGraph, expected: bool) -> None:
    assert graph_is_negative_definite(graph) is expected
    assert sympy.Matrix(intersection_form(graph).rows).is_negative_definite is expected


def _tree_graphs(n: int, weights: Sequence[int]) -> Iterator[ResolutionGraph]:
    trees = [nx.empty_graph(1)] if n == 1 else list(nx.nonisomorphic_trees(n))
    for tree in trees:
        edges = [(f"v{a}", f"v{b}") for a, b in tree.edges]
        for ws in itertools.product(weights, repeat=n):
            yield ResolutionGraph.build([(f"v{i}", w) for i, w in enumerate(ws)], edges)


@pytest.mark.parametrize("n", range(1, 7))
def test_tree_definiteness_agrees_with_principal_minors(n: int) -> None:
    weights = [-1, -2, -3] if n <= 5 else [-1, -2]
    for graph in _tree_graphs(n, weights):
        rows = intersection_form(graph).rows
        expected = oracles.brute_force_negative_definite(rows)
        assert graph_is_negative_definite(graph) is expected, graph.degrees
        assert is_negative_definite(intersection_form(graph)) is expected


@pytest.mark.parametrize("n", range(1, 7))
def test_matrix_definiteness_agrees_with_principal_minors(n: int) -> None:
    rng = random.Random(n)
    ids = tuple(f"v{i}" for i in range(n))
    for _ in range(200):
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = rng.randint(-6, -1)
            for j in range(i + 1, n):
                rows[i][j] = rows[j][i] = rng.randint(-2, 2)
        form = IntersectionForm(ids, tuple(map(tuple, rows)))
        assert is_negative_definite(form) is oracles.brute_force_negative_definite(rows)


def test_cycle_graph_definiteness_uses_the_general_path() -> None:
    for weights in itertools.product([-1, -2, -3], repeat=4):
        graph = ResolutionGraph.build(
            [(f"v{i}", w) for i, w in enumerate(weights)], [("v0", "v1"), ("v1", "v2"), ("v2", "v3"), ("v3", "v0")]
        )
        rows = intersection_form(graph).rows
        assert graph_is_negative_definite(graph) is oracles.brute_force_negative_definite(rows)


@pytest.mark.parametrize("n", range(1, 6))
def test_tree_elimination_matches_bareiss(n: int) -> None:
    for graph in _tree_graphs(n, [-1, -2, -4]):
        ctx = context(graph)
        assert ctx.determinant == exact.determinant(ctx.rows)
        if ctx.determinant == 0:
            continue
        scaled, det = ctx.scaled_solve(ctx.canonical_degrees)
        assert [Fraction(x, det) for x in scaled] == exact.solve(ctx.rows, ctx.canonical_degrees)


def test_determinant_of_two_node(two_node: ResolutionGraph) -> None:
    assert determinant(two_node) == sympy.Matrix(intersection_form(two_node).rows).det()


def test_okuma_is_an_integral_homology_sphere(okuma_m1: ResolutionGraph) -> None:
    assert abs(determinant(okuma_m1)) == 1


def test_e_dot_e(two_node: ResolutionGraph) -> None:
    e = Cycle.reduced(two_node)
    assert pairing(e, e, two_node) == -5


# ----------------------------------------------------------------------
# canonical class, fundamental cycle, rationality
# ----------------------------------------------------------------------


def test_canonical_class_single_curve() -> None:
    k = canonical_class(chain(-3))
    assert k.mult == (Fraction(-1, 3),)
    assert not is_numerically_gorenstein(chain(-3))


def test_canonical_class_solves_adjunction(two_node: ResolutionGraph) -> None:
    k = canonical_class(two_node)
    rows = intersection_form(two_node).rows
    for row, v in zip(rows, two_node):
        assert sum(a * b for a, b in zip(row, k.mult)) == v.degree - 2


def test_rdp_is_numerically_gorenstein(e8_graph: ResolutionGraph) -> None:
    assert is_numerically_gorenstein(e8_graph)
    assert canonical_class(e8_graph).is_zero()


def test_canonical_class_needs_definite_form() -> None:
    with pytest.raises(PreconditionError, match="negative definite"):
        canonical_class(chain(-1, -1))


def test_fundamental_cycle_of_d4(d4_graph: ResolutionGraph) -> None:
    z = fundamental_cycle(d4_graph)
    assert z.as_dict() == {"c": 2, "a0v0": 1, "a1v0": 1, "a2v0": 1}


def test_fundamental_cycle_of_e8(e8_graph: ResolutionGraph) -> None:
    assert max(fundamental_cycle(e8_graph).mult) == 6


def test_fundamental_cycle_matches_brute_force(two_node: ResolutionGraph) -> None:
    assert fundamental_cycle(two_node) == oracles.brute_force_fundamental_cycle(two_node, bound=3)


@pytest.mark.slow
def test_fundamental_cycle_matches_brute_force_on_small_trees() -> None:
    checked = 0
    for _, graph in iter_unique_graphs(5, -5):
        if not graph_is_negative_definite(graph):
            continue
        assert fundamental_cycle(graph) == oracles.brute_force_fundamental_cycle(graph, bound=8), graph.degrees
        checked += 1
    assert checked > 1000


@pytest.mark.parametrize("weights", [(-2,), (-3, -2), (-2, -5, -2), (-4, -2, -2, -3)])
def test_fundamental_cycle_of_chains_is_reduced(weights: tuple[int, ...]) -> None:
    graph = chain(*weights)
    assert fundamental_cycle(graph) == Cycle.reduced(graph)
    assert is_rational(graph)


def test_rationality(two_node: ResolutionGraph, okuma_m1: ResolutionGraph) -> None:
    assert is_rational(two_node)
    assert not is_rational(okuma_m1)
    assert not is_rational(star(-1, [[-2], [-3], [-7]]))


# ----------------------------------------------------------------------
# Euler characteristic identity
# ----------------------------------------------------------------------


def test_chi_T_values(two_node: ResolutionGraph) -> None:
    assert chi_T(two_node) == 9
    assert reduced_term(two_node) == 2
    assert chi_T_residual(two_node) == 0


def test_chi_T_with_positive_genus() -> None:
    graph = ResolutionGraph.build([("c", -1, 1), ("a", -2), ("b", -3)], [("c", "a"), ("c", "b")])
    assert chi_T(graph) == 0 + 2 + 2 - 2
    assert chi_T_residual(graph) == 0


# ----------------------------------------------------------------------
# classification
# ----------------------------------------------------------------------


def test_classify_two_node(two_node: ResolutionGraph) -> None:
    cls = classify(two_node)
    assert cls.rational and not cls.rdp
    assert cls.minimal_resolution and cls.minimal_good
    assert not cls.star_shaped and not cls.chain


def test_classify_e8(e8_graph: ResolutionGraph) -> None:
    cls = classify(e8_graph)
    assert cls.rdp and cls.star_shaped


def test_minus_one_curve_is_not_minimal(okuma_m1: ResolutionGraph) -> None:
    cls = classify(okuma_m1)
    assert not cls.minimal_resolution
    assert cls.minimal_good


def test_rdp_exactly_when_canonical_class_vanishes() -> None:
    for _, graph in iter_unique_graphs(5, -4):
        if graph_is_negative_definite(graph):
            assert classify(graph).rdp == canonical_class(graph).is_zero(), graph.degrees
    assert canonical_class(chain(-1, -2)).is_zero() is False


def test_require_rational_minimal_refuses_rdp(e8_graph: ResolutionGraph) -> None:
    require_rational_minimal(e8_graph)
    with pytest.raises(PreconditionError, match="rational double point"):
        require_rational_minimal(e8_graph, allow_rdp=False)


def test_require_rational_minimal_refuses_non_rational(okuma_m1: ResolutionGraph) -> None:
    with pytest.raises(PreconditionError, match="not rational"):
        require_rational_minimal(okuma_m1)


# ----------------------------------------------------------------------
# canonical keys
# ----------------------------------------------------------------------


def test_canonical_key_ignores_vertex_order(two_node: ResolutionGraph) -> None:
    shuffled = two_node.reordered(list(reversed(two_node.ids)))
    assert canonical_key(shuffled) == canonical_key(two_node)


def test_canonical_key_separates_weightings() -> None:
    a = chain(-3, -2, -2)
    b = chain(-2, -3, -2)
    assert canonical_key(a) != canonical_key(b)
    assert not nx.is_isomorphic(
        a.to_networkx(), b.to_networkx(), node_match=lambda x, y: x["weight"] == y["weight"]
    )


def test_canonical_key_agrees_with_networkx_isomorphism() -> None:
    graphs = [chain(*w) for w in itertools.product([-2, -3], repeat=4)]
    match = lambda x, y: x["weight"] == y["weight"]  # noqa: E731
    for a, b in itertools.combinations(graphs, 2):
        same = nx.is_isomorphic(a.to_networkx(), b.to_networkx(), node_match=match)
        assert (canonical_key(a) == canonical_key(b)) == same
