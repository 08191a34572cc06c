"""Self-test: pinned fixture values plus reduced runs of every invariant suite."""
from __future__ import annotations

import json
import logging
import math
import random
from pathlib import Path
from typing import Any, Callable

from surface_smoothing import oracles
from surface_smoothing.cli.commands import build_invariant_report, build_quotient_report, load_seifert
from surface_smoothing.cli.harness import iter_unique_graphs, run_enumeration, scan_chains
from surface_smoothing.cli.reports import CheckResult, SelftestReport
from surface_smoothing.cohomology.rounding import LineBundleClass, bundle_of_cycle, giraud_round
from surface_smoothing.core.errors import InputError
from surface_smoothing.graph import lattice
from surface_smoothing.graph.io import load_graph
from surface_smoothing.graph.model import Cycle
from surface_smoothing.quotient.brieskorn import BrieskornQuotient, sweep
from surface_smoothing.quotient.characters import Verdict, theorem52_verdict
from surface_smoothing.seifert import (
    coboundary_coefficient,
    gorenstein_exponent,
    graph_to_seifert,
    hj_expand,
    hj_value,
    p_g,
    rationality_cross_check,
    seifert_to_graph,
)

logger = logging.getLogger(__name__)

SEED = 20240601


class _Failed(Exception):
    pass


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise _Failed(message)


# ----------------------------------------------------------------------
# Fixtures
# ----------------------------------------------------------------------


def load_manifest(fixtures_dir: Path) -> dict[str, Any]:
    path = Path(fixtures_dir) / "manifest.json"
    try:
        manifest = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"cannot read fixture manifest {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"fixture manifest {path} is not valid JSON: {exc}") from exc
    if not (manifest.get("graphs") or manifest.get("seifert") or manifest.get("quotients")):
        raise InputError(f"fixture manifest {path} lists no fixtures")
    return manifest


def _graph_fixture(fixtures_dir: Path, entry: dict[str, Any]) -> None:
    graph = load_graph(fixtures_dir / entry["file"])
    report = build_invariant_report(graph)
    for key, expected in entry.get("expect", {}).items():
        if key == "abs_determinant":
            observed: Any = abs(report.determinant)
        elif key in ("rational", "star_shaped", "rdp", "minimal_resolution"):
            observed = getattr(report.classification, key)
        elif key == "pinkham_p_g":
            observed = p_g(graph_to_seifert(graph))
        else:
            observed = getattr(report, key)
        _expect(observed == expected, f"{entry['file']}: {key} = {observed}, expected {expected}")
    _expect(report.exit_code() in (0, 3), f"{entry['file']}: identity residuals are nonzero")


def _seifert_fixture(fixtures_dir: Path, entry: dict[str, Any]) -> None:
    s = load_seifert(fixtures_dir / entry["file"])
    observed = {"gorenstein_k": gorenstein_exponent(s), "p_g": p_g(s)}
    for key, expected in entry.get("expect", {}).items():
        _expect(observed[key] == expected, f"{entry['file']}: {key} = {observed[key]}, expected {expected}")


def _quotient_fixture(entry: dict[str, Any]) -> None:
    q = BrieskornQuotient(tuple(entry["exponents"]), entry["order"], tuple(entry["weights"]))
    report = build_quotient_report(q, entry.get("convention", "covariant"))
    for key, expected in entry.get("expect", {}).items():
        observed = getattr(report, key)
        _expect(observed == expected, f"quotient {entry['exponents']}: {key} = {observed}, expected {expected}")


# ----------------------------------------------------------------------
# Invariant suites
# ----------------------------------------------------------------------


def _small_graphs(max_vertices: int, min_weight: int):
    for _, graph in iter_unique_graphs(max_vertices, min_weight):
        if lattice.graph_is_negative_definite(graph):
            yield graph


def check_fundamental_cycle_oracle(max_vertices: int, min_weight: int) -> None:
    for graph in _small_graphs(max_vertices, min_weight):
        expected = oracles.brute_force_fundamental_cycle(graph)
        _expect(expected == lattice.fundamental_cycle(graph), f"fundamental cycle mismatch on {graph.degrees}")


def check_definiteness_oracle(max_vertices: int, min_weight: int) -> None:
    for _, graph in iter_unique_graphs(max_vertices, min_weight):
        rows = lattice.intersection_form(graph).rows
        _expect(
            oracles.brute_force_negative_definite(rows) == lattice.graph_is_negative_definite(graph),
            f"definiteness mismatch on {graph.degrees}",
        )


def check_rounding(instances: int, max_vertices: int) -> None:
    rng = random.Random(SEED)
    graphs = list(_small_graphs(max_vertices, -5))
    covered = 0
    for _ in range(instances):
        graph = rng.choice(graphs)
        degrees = [rng.randint(-4, 2) for _ in graph.ids]
        bundle = LineBundleClass.for_graph(graph, degrees)
        result = giraud_round(graph, bundle).round

        order = list(graph.ids)
        rng.shuffle(order)
        shuffled = graph.reordered(order)
        again = giraud_round(shuffled, LineBundleClass.for_graph(shuffled, [bundle.degrees[graph.index[v]] for v in order]))
        _expect(again.round.as_dict() == result.as_dict(), f"round-up depends on vertex order ({degrees})")

        shift = Cycle(graph.ids, tuple(rng.randint(-2, 2) for _ in graph.ids))
        translated = giraud_round(graph, bundle - bundle_of_cycle(shift, graph)).round
        _expect(translated == result - shift, f"[L - D] != [L] - D ({degrees})")

        brute = oracles.brute_force_round(graph, degrees)
        if brute is not None:
            covered += 1
            _expect(brute == result, f"round-up differs from brute force ({degrees})")
    _expect(covered > 0, "no rounding instance fell inside the brute-force box")


def check_coboundary(max_n: int = 12, max_k: int = 40) -> None:
    for n in range(2, max_n + 1):
        for q in range(1, n):
            if math.gcd(n, q) != 1:
                continue
            for k in range(-max_k, max_k + 1):
                expected = 0 if (k * q) % n == 1 % n else -1
                _expect(coboundary_coefficient(n, q, k) == expected, f"coboundary({n},{q},{k})")


def check_continued_fractions(max_n: int = 40) -> None:
    for n in range(2, max_n + 1):
        for q in range(1, n):
            try:
                bs = hj_expand(n, q)
            except InputError:
                continue
            _expect(hj_value(bs) == (n, q), f"HJ round trip fails for {n}/{q}")


def check_seifert(samples: int) -> None:
    rng = random.Random(SEED)
    for _ in range(samples):
        s = oracles.random_seifert_data(rng)
        _expect(rationality_cross_check(s), f"p_g and Artin rationality disagree on {s}")
        graph = seifert_to_graph(s)
        _expect(graph_to_seifert(graph) == s, f"Seifert round trip fails on {s}")


def check_quotients(max_order: int, max_exponent: int, max_variables: int) -> None:
    for q in sweep(max_order, max_exponent, max_variables):
        report = theorem52_verdict(q)
        expected = Verdict.EQUALITY_SL if q.in_SL else Verdict.EQUALITY_NON_SL
        _expect(report.verdict == expected, f"verdict {report.verdict.value} for {q}")
        _expect(report.lefschetz and report.isotypic, f"character checks fail for {q}")


def check_enumeration(max_vertices: int, min_weight: int) -> None:
    summary = run_enumeration(max_vertices, min_weight)
    _expect(not summary.failures, "; ".join(summary.failures[:5]))


def check_chains(max_length: int, min_weight: int) -> None:
    scan = scan_chains(max_length, min_weight)
    _expect(scan.scanned > 0, "no chain was scanned")
    _expect(not scan.failures, "; ".join(scan.failures[:5]))


# ----------------------------------------------------------------------
# Runner
# ----------------------------------------------------------------------


def _run(name: str, check: Callable[[], None]) -> CheckResult:
    try:
        check()
    except _Failed as exc:
        logger.error("Self-test %s failed: %s", name, exc)
        return CheckResult(name=name, passed=False, detail=str(exc))
    except Exception as exc:
        logger.exception("Self-test %s raised", name)
        return CheckResult(name=name, passed=False, detail=f"{type(exc).__name__}: {exc}")
    logger.info("Self-test %s passed", name)
    return CheckResult(name=name, passed=True)


def run_selftest(fixtures_dir: Path, quick: bool = True) -> SelftestReport:
    fixtures_dir = Path(fixtures_dir)
    manifest = load_manifest(fixtures_dir)
    size = 4 if quick else 5

    checks: list[tuple[str, Callable[[], None]]] = []
    for entry in manifest.get("graphs", []):
        checks.append((f"fixture:{entry['file']}", lambda e=entry: _graph_fixture(fixtures_dir, e)))
    for entry in manifest.get("seifert", []):
        checks.append((f"fixture:{entry['file']}", lambda e=entry: _seifert_fixture(fixtures_dir, e)))
    for entry in manifest.get("quotients", []):
        label = ",".join(map(str, entry["exponents"]))
        checks.append((f"fixture:quotient({label})", lambda e=entry: _quotient_fixture(e)))

    sweep_limits = manifest.get("sweep", {})
    checks += [
        ("fundamental-cycle-oracle", lambda: check_fundamental_cycle_oracle(size, -5)),
        ("definiteness-oracle", lambda: check_definiteness_oracle(size, -4)),
        ("rounding", lambda: check_rounding(200 if quick else 1000, size)),
        ("coboundary", check_coboundary),
        ("continued-fractions", check_continued_fractions),
        ("seifert", lambda: check_seifert(50 if quick else 200)),
        ("quotient-sweep", lambda: check_quotients(
            4 if quick else sweep_limits.get("max_order", 6),
            6 if quick else sweep_limits.get("max_exponent", 8),
            3 if quick else sweep_limits.get("max_variables", 4),
        )),
        ("enumeration", lambda: check_enumeration(size, -4)),
        ("chain-vanishing", lambda: check_chains(5 if quick else 8, -4 if quick else -6)),
    ]

    results = [_run(name, check) for name, check in checks]
    return SelftestReport(checks=results, passed=all(r.passed for r in results))
