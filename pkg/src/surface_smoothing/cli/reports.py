"""JSON report schemas for every command.

Every report carries ``"schema": 1`` and the command name first; the
remaining keys follow declaration order so output is byte-deterministic.
"""
from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field

SCHEMA_VERSION = 1


class Report(BaseModel):
    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")
    command: str

    model_config = {"populate_by_name": True}

    def exit_code(self) -> int:
        return 0


# ----------------------------------------------------------------------
# invariants
# ----------------------------------------------------------------------


class ClassificationModel(BaseModel):
    connected: bool
    negative_definite: bool
    rational: bool
    rdp: bool
    minimal_resolution: bool
    minimal_good: bool
    star_shaped: bool
    chain: bool
    numerically_gorenstein: Optional[bool] = None


class Residuals(BaseModel):
    chi_T: int
    lemma23: Optional[int] = None
    round_translation: Optional[int] = None  # differing vertices of [-(K+E)] and [-K] - E
    containment: Optional[int] = None  # vertices where [-K] < Z_0


class InvariantReport(Report):
    command: str = "invariants"
    vertices: list[str]
    classification: ClassificationModel
    determinant: int
    fundamental_cycle: Optional[dict[str, int]] = None
    p_a_Z0: Optional[int] = None
    canonical_class: Optional[dict[str, str]] = None
    chi_T: int
    e_term: int
    Y: Optional[dict[str, int]] = None
    Z: Optional[dict[str, int]] = None
    multiplicity: Optional[int] = None
    h1_mK: Optional[int] = None
    h1_mKE: Optional[int] = None
    alpha_bound: Optional[int] = None
    mult_bound_ok: Optional[bool] = None
    qgorenstein_obstruction: Optional[str] = None
    residuals: Residuals
    refused: Optional[str] = None
    warnings: list[str] = []

    def exit_code(self) -> int:
        r = self.residuals
        if any(v for v in (r.chi_T, r.lemma23, r.round_translation, r.containment)):
            return 4
        if self.mult_bound_ok is False:
            return 4
        if self.refused:
            return 3
        return 0


# ----------------------------------------------------------------------
# round / lemma22
# ----------------------------------------------------------------------


class RoundingReport(Report):
    command: str = "round"
    degrees: dict[str, int]
    coefficients: dict[str, str]
    initial: dict[str, int]
    round: dict[str, int]
    added: list[str]
    effective: bool


class SequenceStepModel(BaseModel):
    vertex: str
    criterion: int


class Lemma22Report(Report):
    command: str = "lemma22"
    steps: list[SequenceStepModel]


# ----------------------------------------------------------------------
# smoothing
# ----------------------------------------------------------------------


class SmoothingReportModel(Report):
    command: str = "smoothing"
    alpha: int
    h1_O: int
    h1_S: int
    mu: int
    tau: int
    combined: int
    h1_mK: Optional[int] = None
    h1_mKE: int
    h1_theta: int
    chi_T: int
    e_term: int
    alpha_bound: Optional[int] = None
    numerically_gorenstein: bool
    conjecture_margin: int
    rational_conjecture_holds: Optional[bool] = None
    warnings: list[str] = []


# ----------------------------------------------------------------------
# seifert
# ----------------------------------------------------------------------


class SeifertDocument(BaseModel):
    genus: int = 0
    b: int
    arms: list[tuple[int, int]] = []


class SeifertReport(Report):
    command: str = "seifert"
    genus: int
    b: int
    arms: list[tuple[int, int]]
    euler_number: str
    determinant: int
    dims_A: list[Optional[int]]
    p_g: Optional[int] = None
    gorenstein_k: Optional[int] = None
    is_gorenstein: bool
    rational: Optional[bool] = None
    h1_S: Optional[int] = None
    h1_S_refused: Optional[str] = None
    warnings: list[str] = []


# ----------------------------------------------------------------------
# quotient
# ----------------------------------------------------------------------


class QuotientReportModel(Report):
    command: str = "quotient"
    exponents: list[int]
    order: int
    weights: list[int]
    dimension: int
    convention: str
    mu: int
    bar_mu: int
    bar_tau: int
    in_SL: bool
    gorenstein_quotient: bool
    verdict: str
    det_residue: int
    nu_residue: int
    j_counts: list[int]
    h_counts: list[int]
    dim_J_G: int
    dim_T_G: int
    lefschetz: bool
    isotypic: bool
    warnings: list[str] = []

    def exit_code(self) -> int:
        if self.verdict == "violation" or not (self.lefschetz and self.isotypic):
            return 4
        return 0


# ----------------------------------------------------------------------
# enumerate / selftest
# ----------------------------------------------------------------------


class EnumerationSummary(Report):
    command: str = "enumerate"
    max_vertices: int
    min_weight: int
    max_special: Optional[int] = None
    scanned: int = 0
    negative_definite: int = 0
    rational: int = 0
    rdp: int = 0
    evaluated: int = 0
    histogram: dict[str, int] = {}
    histogram_star: dict[str, int] = {}
    histogram_non_star: dict[str, int] = {}
    failures: list[str] = []

    def exit_code(self) -> int:
        return 4 if self.failures else 0


class CheckResult(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class SelftestReport(Report):
    command: str = "selftest"
    checks: list[CheckResult] = []
    passed: bool = True

    def exit_code(self) -> int:
        return 0 if self.passed else 4
