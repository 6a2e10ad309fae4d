"""Syndromes -> key equation -> errata correction, with a mandatory re-check."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from enum import Enum
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import kes_classic, kes_modified
from .code import CodeParams, compute_syndromes, encode, message_of
from .errata import Correction, ErrataSolution, apply_corrections, chien_search, corrections_for, extract, normalize
from .errors import InternalInconsistency, UncorrectableError
from .kes_modified import Verdict
from .poly import deg


class Status(Enum):
    SUCCESS = "Success"
    UNCORRECTABLE = "Uncorrectable"
    INTERNAL_INCONSISTENCY = "InternalInconsistency"


class Solver(Enum):
    CLASSIC_EO = "classic-eo"
    CLASSIC_EE = "classic-ee"
    ALG1 = "alg1"
    ALG1_STAR = "alg1star"
    ALG2 = "alg2"

    @property
    def errors_only(self) -> bool:
        return self in (Solver.CLASSIC_EO, Solver.ALG1, Solver.ALG1_STAR)

    @property
    def fixed_iterations(self) -> bool:
        return self in (Solver.ALG1, Solver.ALG1_STAR, Solver.ALG2)

    @property
    def mode(self) -> str | None:
        return {Solver.ALG1: "I", Solver.ALG1_STAR: "I*", Solver.ALG2: "II"}.get(self)


ALL_SOLVERS = tuple(Solver)


@dataclass
class DecodeReport:
    status: Status
    solver: Solver
    nu_detected: int | None = None
    mu: int = 0
    delta_final: int | None = None
    corrections: list[Correction] = dc_field(default_factory=list)
    kes_iterations: int = 0
    message: list[int] | None = None
    corrected: list[int] | None = None
    psi_flag: bool = False
    reason: str = ""

    @property
    def ok(self) -> bool:
        return self.status is Status.SUCCESS


def _solve(code: CodeParams, S, locations, solver: Solver):
    """Run the chosen solver. Returns (solution or None, delta, iterations, psi_flag, reason)."""
    f, t = code.field, code.t
    mu = len(locations)
    if solver.fixed_iterations:
        res = kes_modified.run(f, solver.mode, t, S, locations)
        if kes_modified.classify(res) is Verdict.UNCORRECTABLE:
            reason = "psi head nonzero" if res.psi_head_nonzero else f"delta={res.delta}"
            return None, res.delta, res.iterations, res.psi_head_nonzero, reason
        return extract(f, res), res.delta, res.iterations, False, ""

    try:
        if solver is Solver.CLASSIC_EO:
            lam, omega, trace = kes_classic.eea_errors_only(f, t, S)
        else:
            lam, omega, trace = kes_classic.eea_errors_erasures(f, t, S, locations)
    except UncorrectableError as exc:
        return None, None, 0, False, str(exc)
    # Lambda covers nu errors and mu erasures; need 2 nu + mu <= 2t and deg Omega < deg Lambda.
    if not lam or lam[0] == 0 or 2 * deg(lam) - mu > 2 * t or deg(omega) >= deg(lam):
        return None, None, trace.divisions, False, "locator out of range"
    return normalize(f, lam, omega), None, trace.divisions, False, ""


def decode(code: CodeParams, received: Sequence[int], erasure_positions: Sequence[int] = (),
           solver: Solver | str = Solver.ALG1_STAR) -> DecodeReport:
    """Decode one received word. Decode failures come back as a status, not an exception."""
    solver = Solver(solver)
    received = list(received)
    if len(received) != code.n:
        raise ValueError(f"received word has {len(received)} symbols, expected n={code.n}")
    for s in received:
        code.field.check(s)
    erasure_positions = [int(p) for p in erasure_positions]
    if len(set(erasure_positions)) != len(erasure_positions):
        raise ValueError("duplicate erasure positions")
    if any(not 0 <= p < code.n for p in erasure_positions):
        raise ValueError(f"erasure positions must lie in [0, {code.n})")
    if erasure_positions and solver.errors_only:
        raise ValueError(f"solver {solver.value} is errors-only; erasures not accepted")
    mu = len(erasure_positions)
    locations = [code.location(p) for p in erasure_positions]

    S = compute_syndromes(code, received)
    report = DecodeReport(Status.UNCORRECTABLE, solver, mu=mu)
    sol, delta, iterations, psi_flag, reason = _solve(code, S, locations, solver)
    report.delta_final = delta
    report.kes_iterations = iterations
    report.psi_flag = psi_flag
    if sol is None:
        report.reason = reason
        return report
    try:
        return _correct(code, received, sol, report)
    except InternalInconsistency as exc:
        report.status = Status.INTERNAL_INCONSISTENCY
        report.reason = str(exc)
        return report


def _correct(code: CodeParams, received, sol: ErrataSolution, report: DecodeReport) -> DecodeReport:
    positions = chien_search(code, sol.Lambda)
    report.nu_detected = sol.eta - report.mu
    if len(positions) != sol.eta or deg(sol.Lambda) != sol.eta:
        report.reason = f"{len(positions)} locator roots for {sol.eta} errata"
        return report
    corrections = corrections_for(code, sol, positions)
    corrected = apply_corrections(received, corrections)
    if any(compute_syndromes(code, corrected)):
        report.reason = "corrected word is not a codeword"
        return report
    report.status = Status.SUCCESS
    report.corrections = corrections
    report.corrected = corrected
    report.message = message_of(code, corrected)
    return report


@dataclass(frozen=True)
class NearestCodeword:
    codeword: list[int]
    distance: int
    ambiguous: bool


BRUTE_FORCE_LIMIT = 1 << 20


@lru_cache(maxsize=8)
def codebook(code: CodeParams) -> np.ndarray:
    """Every codeword of a tiny code, one per row."""
    q = code.field.size
    if q ** code.k > BRUTE_FORCE_LIMIT:
        raise ValueError(f"q^k = {q}^{code.k} exceeds the brute-force guard {BRUTE_FORCE_LIMIT}")
    rows = [encode(code, list(msg)) for msg in itertools.product(range(q), repeat=code.k)]
    return np.asarray(rows, dtype=np.int32)


def brute_force_decode(code: CodeParams, received: Sequence[int]) -> NearestCodeword:
    """Minimum-Hamming-distance codeword by exhaustive search."""
    book = codebook(code)
    dist = (book != np.asarray(received, dtype=np.int32)).sum(axis=1)
    best = int(dist.min())
    hits = np.flatnonzero(dist == best)
    return NearestCodeword(book[hits[0]].tolist(), best, len(hits) > 1)
