"""Sub-command registration and handlers.

Each ``register_*_command`` adds one sub-parser and binds its handler via
``set_defaults(handler=...)``.  Handlers receive the parsed arguments and the
running :class:`~surface_smoothing.app.SmoothingApp` and return a report.
"""
from __future__ import annotations

import argparse
import json
import logging
from pathlib import Path
from typing import TYPE_CHECKING, Optional

from pydantic import ValidationError

from surface_smoothing.cli import reports
from surface_smoothing.cli.harness import run_enumeration
from surface_smoothing.cohomology import (
    LineBundleClass,
    SmoothingInputs,
    formulas,
    giraud_round,
    lemma22_trace,
    minus_canonical,
    minus_canonical_minus_reduced,
    smoothing_report,
    trivial_bundle,
)
from surface_smoothing.core.errors import InputError, PreconditionError
from surface_smoothing.core.exact import render_rational
from surface_smoothing.graph import lattice
from surface_smoothing.graph.classify import classify, require_rational_minimal
from surface_smoothing.graph.io import load_graph
from surface_smoothing.graph.model import Cycle, ResolutionGraph
from surface_smoothing.quotient.brieskorn import BrieskornQuotient, parse_int_list
from surface_smoothing.quotient.characters import theorem52_verdict
from surface_smoothing.seifert import (
    SeifertData,
    graded_report,
    h1_S_quasihomogeneous,
)

if TYPE_CHECKING:
    from surface_smoothing.app import SmoothingApp

logger = logging.getLogger(__name__)


# ----------------------------------------------------------------------
# invariants
# ----------------------------------------------------------------------


def build_invariant_report(graph: ResolutionGraph) -> reports.InvariantReport:
    cls = classify(graph)
    warnings: list[str] = []
    refused: Optional[str] = None

    report = reports.InvariantReport(
        vertices=list(graph.ids),
        classification=reports.ClassificationModel(
            connected=cls.connected,
            negative_definite=cls.negative_definite,
            rational=cls.rational,
            rdp=cls.rdp,
            minimal_resolution=cls.minimal_resolution,
            minimal_good=cls.minimal_good,
            star_shaped=cls.star_shaped,
            chain=cls.chain,
        ),
        determinant=lattice.determinant(graph),
        chi_T=lattice.chi_T(graph),
        e_term=lattice.reduced_term(graph),
        residuals=reports.Residuals(chi_T=lattice.chi_T_residual(graph)),
    )
    if not cls.negative_definite:
        report.refused = "intersection form is not negative definite"
        return report

    k = lattice.canonical_class(graph)
    report.classification.numerically_gorenstein = k.is_integral()
    report.canonical_class = k.rendered()
    report.fundamental_cycle = cls.fundamental_cycle.as_dict()
    report.p_a_Z0 = cls.p_a_Z0

    try:
        require_rational_minimal(graph)
        y = formulas.minus_k_round(graph)
        report.Y = y.as_dict()
        report.multiplicity = formulas.multiplicity(graph)
        report.h1_mK = formulas.h1_minus_K(graph)
        report.alpha_bound = formulas.alpha_upper_bound(graph)
        report.mult_bound_ok = formulas.mult_bound_check(graph)
        report.qgorenstein_obstruction = render_rational(formulas.qgorenstein_obstruction(graph))
        report.residuals.containment = sum(
            1 for a, b in zip(y.mult, cls.fundamental_cycle.mult) if a < b
        )
        require_rational_minimal(graph, allow_rdp=False)
        z = y - Cycle.reduced(graph)
        report.Z = z.as_dict()
        report.h1_mKE = formulas.h1_minus_K_minus_E(graph)
        report.residuals.lemma23 = formulas.lemma23_residual(graph)
        rounded = giraud_round(graph, minus_canonical_minus_reduced(graph)).round
        report.residuals.round_translation = sum(1 for a, b in zip(rounded.mult, z.mult) if a != b)
    except PreconditionError as exc:
        refused = str(exc)
        logger.warning("h^1 formulas refused: %s", refused)

    if cls.rational and cls.rdp:
        warnings.append("rational double point: h^1(-(K+E)) is not defined here")
    if not cls.rational:
        warnings.append(f"not rational (p_a(Z_0) = {cls.p_a_Z0}); h^1 values are not topological")
    report.refused = refused
    report.warnings = warnings
    return report


def _invariants(args: argparse.Namespace, app: SmoothingApp) -> reports.Report:
    return build_invariant_report(load_graph(args.path))


def register_invariants_command(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("invariants", help="Lattice invariants and h^1 formulas of a graph")
    parser.add_argument("path", type=Path, help="Graph file (line format or JSON)")
    parser.set_defaults(handler=_invariants)


# ----------------------------------------------------------------------
# round
# ----------------------------------------------------------------------

_BUNDLES = {
    "zero": trivial_bundle,
    "minus-K": minus_canonical,
    "minus-K-minus-E": minus_canonical_minus_reduced,
}


def build_rounding_report(
    graph: ResolutionGraph, bundle: LineBundleClass, iteration_factor: int = lattice.DEFAULT_ITERATION_FACTOR
) -> reports.RoundingReport:
    result = giraud_round(graph, bundle, iteration_factor=iteration_factor)
    return reports.RoundingReport(
        degrees=dict(zip(bundle.ids, bundle.degrees)),
        coefficients=result.coefficients.rendered(),
        initial=result.initial.as_dict(),
        round=result.round.as_dict(),
        added=list(result.added),
        effective=result.round.is_effective(),
    )


def _round(args: argparse.Namespace, app: SmoothingApp) -> reports.Report:
    graph = load_graph(args.path)
    if args.degrees is not None:
        degrees = parse_int_list(args.degrees, "--degrees")
        if len(degrees) != len(graph):
            raise InputError(f"--degrees needs {len(graph)} values, got {len(degrees)}")
        bundle = LineBundleClass.for_graph(graph, degrees)
    else:
        bundle = _BUNDLES[args.bundle](graph)
    return build_rounding_report(graph, bundle, app.config.limits.iteration_factor)


def register_round_command(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("round", help="Giraud round-up [L] of a line bundle")
    parser.add_argument("path", type=Path)
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--degrees", help="Comma-separated degrees L.E_i in vertex order")
    group.add_argument("--bundle", choices=sorted(_BUNDLES), default="minus-K",
                       help="Named bundle when --degrees is not given (default: minus-K)")
    parser.set_defaults(handler=_round)


# ----------------------------------------------------------------------
# lemma22
# ----------------------------------------------------------------------


def _lemma22(args: argparse.Namespace, app: SmoothingApp) -> reports.Report:
    steps = lemma22_trace(load_graph(args.path))
    return reports.Lemma22Report(
        steps=[reports.SequenceStepModel(vertex=s.vertex, criterion=s.criterion) for s in steps]
    )


def register_lemma22_command(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("lemma22", help="Curve ordering with H^0((-K) x O_F) = 0 at every step")
    parser.add_argument("path", type=Path)
    parser.set_defaults(handler=_lemma22)


# ----------------------------------------------------------------------
# smoothing
# ----------------------------------------------------------------------


def _smoothing(args: argparse.Namespace, app: SmoothingApp) -> reports.Report:
    graph = load_graph(args.path)
    inputs = SmoothingInputs(alpha=args.alpha, h1_O=args.h1O, h1_S=args.h1S, h1_mKE=args.h1mKE)
    result = smoothing_report(graph, inputs)
    return reports.SmoothingReportModel(
        alpha=inputs.alpha,
        h1_O=inputs.h1_O,
        h1_S=inputs.h1_S,
        mu=result.mu,
        tau=result.tau,
        combined=result.combined,
        h1_mK=result.h1_mK,
        h1_mKE=result.h1_mKE,
        h1_theta=result.h1_theta,
        chi_T=result.chi_T,
        e_term=result.e_term,
        alpha_bound=result.alpha_bound,
        numerically_gorenstein=result.numerically_gorenstein,
        conjecture_margin=result.conjecture_margin,
        rational_conjecture_holds=result.rational_conjecture_holds,
        warnings=result.warnings,
    )


def register_smoothing_command(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("smoothing", help="mu and tau of a smoothing from resolution data")
    parser.add_argument("path", type=Path)
    parser.add_argument("--alpha", type=int, default=0)
    parser.add_argument("--h1O", type=int, default=0, help="h^1(O_X), i.e. p_g")
    parser.add_argument("--h1S", type=int, default=0, help="h^1(S_X)")
    parser.add_argument("--h1mKE", type=int, default=None,
                        help="h^1(-(K+E)); required when the graph is not rational")
    parser.set_defaults(handler=_smoothing)


# ----------------------------------------------------------------------
# seifert
# ----------------------------------------------------------------------


def parse_arm(text: str) -> tuple[int, int]:
    try:
        n, q = text.split("/")
        return int(n), int(q)
    except ValueError:
        raise InputError(f"arm must look like N/Q, got {text!r}") from None


def load_seifert(path: Path) -> SeifertData:
    try:
        doc = reports.SeifertDocument.model_validate_json(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"cannot read Seifert file {path}: {exc}") from exc
    except ValidationError as exc:
        raise InputError(f"invalid Seifert document {path}: {exc}") from exc
    return SeifertData(doc.genus, doc.b, tuple(doc.arms))


def build_seifert_report(s: SeifertData, kmax: int) -> reports.SeifertReport:
    graded = graded_report(s, kmax)
    report = reports.SeifertReport(
        genus=s.genus,
        b=s.b,
        arms=list(s.arms),
        euler_number=render_rational(graded.euler_number),
        determinant=graded.determinant,
        dims_A=graded.dims_A,
        p_g=graded.p_g,
        gorenstein_k=graded.gorenstein_k,
        is_gorenstein=graded.is_gorenstein,
        warnings=list(graded.warnings),
    )
    if graded.p_g is not None:
        report.rational = graded.p_g == 0
    try:
        report.h1_S = h1_S_quasihomogeneous(s)
    except PreconditionError as exc:
        report.h1_S_refused = str(exc)
        logger.info("h^1(S) not computed: %s", exc)
    return report


def _seifert(args: argparse.Namespace, app: SmoothingApp) -> reports.Report:
    if args.json is not None:
        s = load_seifert(args.json)
    else:
        if args.b is None:
            raise InputError("--b is required unless --json is given")
        s = SeifertData(args.genus, args.b, tuple(parse_arm(a) for a in args.arm))
    return build_seifert_report(s, args.kmax)


def register_seifert_command(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("seifert", help="Pinkham grading, p_g and Gorenstein test of Seifert data")
    parser.add_argument("--genus", type=int, default=0)
    parser.add_argument("--b", type=int, default=None, help="Central weight (self-intersection -b)")
    parser.add_argument("--arm", action="append", default=[], metavar="N/Q")
    parser.add_argument("--json", type=Path, default=None, help="Seifert document {genus, b, arms}")
    parser.add_argument("--kmax", type=int, default=10, help="Largest k reported in dims_A")
    parser.set_defaults(handler=_seifert)


# ----------------------------------------------------------------------
# quotient
# ----------------------------------------------------------------------


def load_basis(path: Path) -> list[list[int]]:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read basis file {path}: {exc}") from exc
    if not isinstance(data, list) or not all(isinstance(v, list) for v in data):
        raise InputError("basis file must hold a JSON list of exponent vectors")
    return data


def build_quotient_report(q: BrieskornQuotient, convention: str) -> reports.QuotientReportModel:
    result = theorem52_verdict(q, convention)
    return reports.QuotientReportModel(
        exponents=list(q.exponents),
        order=q.order,
        weights=list(q.weights),
        dimension=result.dimension,
        convention=result.convention,
        mu=result.mu,
        bar_mu=result.bar_mu,
        bar_tau=result.bar_tau,
        in_SL=result.in_SL,
        gorenstein_quotient=result.gorenstein_quotient,
        verdict=result.verdict.value,
        det_residue=result.det_residue,
        nu_residue=result.nu_residue,
        j_counts=list(result.j_counts.counts),
        h_counts=list(result.h_counts.counts),
        dim_J_G=result.dim_J_G,
        dim_T_G=result.dim_T_G,
        lefschetz=result.lefschetz,
        isotypic=result.isotypic,
        warnings=result.warnings,
    )


def _quotient(args: argparse.Namespace, app: SmoothingApp) -> reports.Report:
    exponents = parse_int_list(args.exponents, "--exponents")
    weights = parse_int_list(args.weights, "--weights") if args.weights else None
    basis = load_basis(args.basis) if args.basis else None
    q = BrieskornQuotient(
        exponents=tuple(exponents),
        order=args.order,
        weights=tuple(weights) if weights is not None else None,
        explicit_basis=tuple(tuple(v) for v in basis) if basis is not None else None,
    )
    return build_quotient_report(q, app.config.quotient.action_convention)


def register_quotient_command(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("quotient", help="Character calculus of a Brieskorn quotient smoothing")
    parser.add_argument("--exponents", required=True, help="Comma-separated a_1,...,a_{n+1}")
    parser.add_argument("--order", type=int, default=1, help="Order r of the cyclic group")
    parser.add_argument("--weights", default=None, help="Comma-separated w_i (default: all 1)")
    parser.add_argument("--basis", type=Path, default=None, help="JSON list of monomial exponent vectors")
    parser.set_defaults(handler=_quotient)


# ----------------------------------------------------------------------
# enumerate
# ----------------------------------------------------------------------


def _enumerate(args: argparse.Namespace, app: SmoothingApp) -> reports.Report:
    settings = app.config.enumeration
    return run_enumeration(
        max_vertices=args.max_vertices if args.max_vertices is not None else settings.default_max_vertices,
        min_weight=args.min_weight if args.min_weight is not None else settings.default_min_weight,
        max_special=args.max_special,
        workers=args.workers if args.workers is not None else settings.workers,
        limits=app.config.limits,
    )


def register_enumerate_command(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("enumerate", help="Scan small weighted trees and check every identity")
    parser.add_argument("--max-vertices", type=int, default=None)
    parser.add_argument("--min-weight", type=int, default=None)
    parser.add_argument("--max-special", type=int, default=None,
                        help="At most this many vertices with weight below -2")
    parser.add_argument("--workers", type=int, default=None, help="Worker processes; 1 runs in-process")
    parser.set_defaults(handler=_enumerate)


# ----------------------------------------------------------------------
# selftest
# ----------------------------------------------------------------------


def _selftest(args: argparse.Namespace, app: SmoothingApp) -> reports.Report:
    from surface_smoothing.cli.selftest import run_selftest

    return run_selftest(args.fixtures or app.fixtures_dir, quick=not args.full)


def register_selftest_command(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("selftest", help="Run the invariant suites and the fixture checks")
    parser.add_argument("--fixtures", type=Path, default=None, help="Fixture directory (default: bundled)")
    parser.add_argument("--full", action="store_true", help="Run the full-size suites")
    parser.set_defaults(handler=_selftest)


def register_all(subparsers: argparse._SubParsersAction) -> None:
    register_invariants_command(subparsers)
    register_round_command(subparsers)
    register_smoothing_command(subparsers)
    register_seifert_command(subparsers)
    register_quotient_command(subparsers)
    register_enumerate_command(subparsers)
    register_lemma22_command(subparsers)
    register_selftest_command(subparsers)
