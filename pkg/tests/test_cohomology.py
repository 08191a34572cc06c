from __future__ import annotations

import itertools
import os
import time
from fractions import Fraction

import pytest

from conftest import chain, star
from surface_smoothing.cli.harness import scan_chains
from surface_smoothing.cohomology import (
    SmoothingInputs,
    alpha_upper_bound,
    h1_minus_K,
    h1_minus_K_minus_E,
    h1_minus_K_minus_E_on,
    h1_minus_K_minus_E_via_rounding,
    h1_rational_bundle,
    lemma22_sequence,
    lemma22_trace,
    lemma23_residual,
    minus_k_from_fundamental_cycle,
    mult_bound_check,
    multiplicity,
    qgorenstein_obstruction,
    smoothing_report,
    trivial_bundle,
)
from surface_smoothing.cohomology.formulas import minus_k_round
from surface_smoothing.core.errors import InputError, PreconditionError
from surface_smoothing.graph import ResolutionGraph, context, fundamental_cycle


# ----------------------------------------------------------------------
# h^1 formulas
# ----------------------------------------------------------------------


def test_two_node_h1_values(two_node: ResolutionGraph) -> None:
    assert h1_minus_K(two_node) == 4
    assert h1_minus_K_minus_E(two_node) == 2
    assert h1_minus_K_minus_E_via_rounding(two_node) == 2
    assert lemma23_residual(two_node) == 0


def test_two_node_fundamental_cycle_and_multiplicity(two_node: ResolutionGraph) -> None:
    assert fundamental_cycle(two_node).as_dict() == {
        "x1": 1, "x2": 2, "p": 3, "q": 1, "y": 1, "u1": 2, "u2": 1, "v": 1,
    }
    assert multiplicity(two_node) == 5
    assert mult_bound_check(two_node)
    assert alpha_upper_bound(two_node) == 4


def test_growing_fundamental_cycle_reaches_minus_k(two_node: ResolutionGraph) -> None:
    assert minus_k_from_fundamental_cycle(two_node) == minus_k_round(two_node)


@pytest.mark.parametrize("d, h1_mK", [(3, 0), (4, 1), (5, 2), (6, 3)])
def test_single_curve(d: int, h1_mK: int) -> None:
    graph = chain(-d)
    assert h1_minus_K(graph) == h1_mK
    assert h1_minus_K_minus_E(graph) == 0
    assert multiplicity(graph) == d
    assert lemma23_residual(graph) == 0


@pytest.mark.parametrize("d, expected", [(3, Fraction(-1, 3)), (4, Fraction(0)), (5, Fraction(1, 5))])
def test_qgorenstein_obstruction_of_single_curves(d: int, expected: Fraction) -> None:
    assert qgorenstein_obstruction(chain(-d)) == expected


def test_trivial_bundle_has_no_h1(two_node: ResolutionGraph) -> None:
    assert h1_rational_bundle(two_node, trivial_bundle(two_node)) == 0


def test_cyclic_quotients_have_no_h1_minus_K_minus_E() -> None:
    for length in range(1, 6):
        for weights in itertools.product(range(-6, -1), repeat=length):
            if min(weights) > -3:
                continue
            assert h1_minus_K_minus_E(chain(*weights)) == 0, weights


def test_chain_scan_counts_one_chain_per_reversal_pair() -> None:
    scan = scan_chains(2, -3)
    assert (scan.scanned, scan.failures) == (3, [])


def test_chain_scan_agrees_across_worker_counts() -> None:
    assert scan_chains(4, -5, workers=2) == scan_chains(4, -5)


def test_chain_scan_matches_the_graph_formula() -> None:
    for weights in [(-3,), (-2, -5, -2), (-4, -2, -2, -3)]:
        assert h1_minus_K_minus_E_on(context(chain(*weights))) == h1_minus_K_minus_E(chain(*weights)) == 0


@pytest.mark.slow
def test_cyclic_quotients_have_no_h1_minus_K_minus_E_up_to_eight_curves() -> None:
    started = time.perf_counter()
    scan = scan_chains(8, -6, workers=os.cpu_count() or 1)
    elapsed = time.perf_counter() - started
    assert scan.failures == []
    assert scan.scanned == sum(
        1
        for length in range(1, 9)
        for weights in itertools.product(range(-6, -1), repeat=length)
        if min(weights) <= -3 and weights <= weights[::-1]
    )
    assert elapsed < 5, f"chain scan took {elapsed:.1f} s"


def test_rdp_is_refused(e8_graph: ResolutionGraph) -> None:
    assert h1_minus_K(e8_graph) == 0
    with pytest.raises(PreconditionError, match="rational double point"):
        h1_minus_K_minus_E(e8_graph)


def test_non_rational_graph_is_refused(okuma_m1: ResolutionGraph) -> None:
    with pytest.raises(PreconditionError, match="not rational"):
        h1_minus_K(okuma_m1)


def test_non_minimal_graph_is_refused() -> None:
    graph = chain(-1, -3)
    with pytest.raises(PreconditionError, match="minimal"):
        h1_minus_K(graph)


# ----------------------------------------------------------------------
# smoothing invariants
# ----------------------------------------------------------------------


def test_smoothing_of_two_node(two_node: ResolutionGraph) -> None:
    report = smoothing_report(two_node, SmoothingInputs(h1_S=1))
    assert (report.mu, report.tau) == (4, 4)
    assert report.combined == 1
    assert report.h1_theta == 12
    assert report.h1_mK == 4
    assert report.alpha_bound == 4
    assert not report.numerically_gorenstein
    assert report.conjecture_margin == 1
    assert report.rational_conjecture_holds
    assert report.warnings == []


def test_smoothing_of_a_cyclic_quotient() -> None:
    report = smoothing_report(chain(-3), SmoothingInputs())
    assert (report.mu, report.tau) == (1, 2)
    assert report.chi_T == 2 and report.e_term == 0


@pytest.mark.parametrize("alpha, h1_O, h1_S", [(0, 0, 0), (1, 0, 2), (2, 3, 1)])
def test_smoothing_identity(two_node: ResolutionGraph, alpha: int, h1_O: int, h1_S: int) -> None:
    report = smoothing_report(two_node, SmoothingInputs(alpha=alpha, h1_O=h1_O, h1_S=h1_S))
    assert 1 + (report.mu - report.tau) + alpha == h1_O - h1_S + report.h1_mKE


def test_alpha_above_bound_warns() -> None:
    report = smoothing_report(chain(-3), SmoothingInputs(alpha=1))
    assert any("exceeds its upper bound" in w for w in report.warnings)


def test_smoothing_refuses_rdp(e8_graph: ResolutionGraph) -> None:
    with pytest.raises(PreconditionError, match="rational double point"):
        smoothing_report(e8_graph, SmoothingInputs())


def test_smoothing_override_must_agree(two_node: ResolutionGraph) -> None:
    assert smoothing_report(two_node, SmoothingInputs(h1_mKE=2)).h1_mKE == 2
    with pytest.raises(InputError, match="disagrees"):
        smoothing_report(two_node, SmoothingInputs(h1_mKE=3))


def test_non_rational_smoothing_needs_override(okuma_m1: ResolutionGraph) -> None:
    with pytest.raises(PreconditionError, match="supply h1_mKE"):
        smoothing_report(okuma_m1, SmoothingInputs(h1_O=1))
    report = smoothing_report(okuma_m1, SmoothingInputs(h1_O=1, h1_mKE=1))
    assert report.mu == 13
    assert report.numerically_gorenstein
    assert report.rational_conjecture_holds is None


def test_negative_inputs_are_rejected() -> None:
    with pytest.raises(InputError, match="alpha must be nonnegative"):
        SmoothingInputs(alpha=-1)


# ----------------------------------------------------------------------
# curve ordering
# ----------------------------------------------------------------------


def test_sequence_of_two_node(two_node: ResolutionGraph) -> None:
    steps = lemma22_trace(two_node)
    assert [s.vertex for s in steps] == ["q", "p", "x2", "x1", "y", "u1", "u2", "v"]
    assert [s.criterion for s in steps] == [3, 1, 1, 1, 1, 1, 1, 1]


def test_sequence_covers_every_curve_once() -> None:
    graph = star(-3, [[-2, -2], [-2], [-4]])
    order = lemma22_sequence(graph)
    assert sorted(order) == sorted(graph.ids)
    assert order[0] == "c"


def test_sequence_passes_a_minus_one_node_outside_the_support(okuma_m1: ResolutionGraph) -> None:
    steps = lemma22_trace(okuma_m1)
    assert [s.vertex for s in steps] == ["l", "r", "c", "t", "s"]
    assert [s.criterion for s in steps] == [1, 5, 1, 1, 1]


def test_sequence_refuses_rdp(d4_graph: ResolutionGraph) -> None:
    with pytest.raises(PreconditionError):
        lemma22_trace(d4_graph)
