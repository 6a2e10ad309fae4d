"""Seeded randomized trial campaigns and throughput benchmarks.

Randomness: every trial or frame ``i`` under seed ``s`` draws from
``numpy.random.default_rng([s, i])`` (PCG64 seeded through SeedSequence), so
any single trial can be reproduced from ``(seed, index)`` alone.
"""

from __future__ import annotations

import statistics
import time
from collections import Counter
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .code import CodeParams, ErrataPattern, apply_errata, encode, is_codeword
from .decoder import ALL_SOLVERS, Solver, Status, decode


def trial_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng([seed, index])


def random_message(rng: np.random.Generator, code: CodeParams) -> list[int]:
    return rng.integers(0, code.field.size, size=code.k).tolist()


def random_pattern(rng: np.random.Generator, code: CodeParams, nu: int, mu: int,
                   zero_erasure_prob: float | None = None) -> ErrataPattern:
    """nu errors with nonzero values and mu erasures at distinct random positions.

    Erasure values are uniform over the field (so may be zero); with
    ``zero_erasure_prob`` each erasure value is forced to zero with that probability.
    """
    if nu + mu > code.n:
        raise ValueError(f"nu + mu = {nu + mu} exceeds n = {code.n}")
    q = code.field.size
    positions = rng.permutation(code.n)[: nu + mu].tolist()
    errors = [(p, int(rng.integers(1, q))) for p in positions[:nu]]
    erasures = []
    for p in positions[nu:]:
        v = int(rng.integers(0, q))
        if zero_erasure_prob is not None and rng.random() < zero_erasure_prob:
            v = 0
        erasures.append((p, v))
    return ErrataPattern(tuple(errors), tuple(erasures))


@dataclass
class TrialConfig:
    code: CodeParams
    seed: int = 0
    trials: int = 1000
    nu_range: tuple[int, int] = (0, 2)
    mu_range: tuple[int, int] = (0, 0)
    solvers: Sequence[Solver] = ALL_SOLVERS

    def __post_init__(self):
        n = self.code.n
        for name, (lo, hi) in (("nu", self.nu_range), ("mu", self.mu_range)):
            if not 0 <= lo <= hi <= n:
                raise ValueError(f"{name} range [{lo}, {hi}] not within [0, {n}]")
        if self.trials < 0:
            raise ValueError("trials must be nonnegative")


@dataclass
class Violation:
    trial: int
    seed: int
    solver: str
    what: str


@dataclass
class TrialSummary:
    trials: int = 0
    counts: dict = dc_field(default_factory=dict)  # solver -> Counter of status
    skipped: Counter = dc_field(default_factory=Counter)
    disagreements: int = 0  # on correctable trials; each one is also a violation
    beyond_radius_disagreements: int = 0
    violations: list[Violation] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def run_trial(cfg: TrialConfig, index: int):
    """One trial: returns (pattern, message, {solver: report})."""
    code = cfg.code
    rng = trial_rng(cfg.seed, index)
    nu = int(rng.integers(cfg.nu_range[0], cfg.nu_range[1] + 1))
    mu = int(rng.integers(cfg.mu_range[0], cfg.mu_range[1] + 1))
    mu = min(mu, code.n - nu)
    msg = random_message(rng, code)
    pattern = random_pattern(rng, code, nu, mu)
    received = apply_errata(code, encode(code, msg), pattern)
    reports = {}
    for solver in cfg.solvers:
        if mu and solver.errors_only:
            continue
        reports[solver] = decode(code, received, pattern.erasure_positions, solver)
    return pattern, msg, received, reports


def run_campaign(cfg: TrialConfig, log=None) -> TrialSummary:
    code = cfg.code
    summary = TrialSummary(counts={s.value: Counter() for s in cfg.solvers})
    for i in range(cfg.trials):
        pattern, msg, received, reports = run_trial(cfg, i)
        summary.trials += 1
        correctable = 2 * pattern.nu + pattern.mu <= 2 * code.t
        for solver in cfg.solvers:
            if solver not in reports:
                summary.skipped[solver.value] += 1
        for solver, rep in reports.items():
            summary.counts[solver.value][rep.status.value] += 1
            if rep.ok and not is_codeword(code, rep.corrected):
                summary.violations.append(Violation(i, cfg.seed, solver.value, "Success with non-codeword output"))
            if correctable and (not rep.ok or rep.message != msg):
                summary.violations.append(
                    Violation(i, cfg.seed, solver.value,
                              f"correctable pattern nu={pattern.nu} mu={pattern.mu} not recovered ({rep.status.value})"))
            if rep.status is Status.INTERNAL_INCONSISTENCY:
                summary.violations.append(Violation(i, cfg.seed, solver.value, f"internal inconsistency: {rep.reason}"))
            if log is not None:
                log.write(f"{i}\t{solver.value}\t{pattern.nu}\t{pattern.mu}\t{rep.status.value}\t"
                          f"{'-' if rep.delta_final is None else rep.delta_final}\t{rep.kes_iterations}\n")
        outcomes = {(r.status, tuple(r.corrected or ())) for r in reports.values()}
        if len(outcomes) > 1:
            if correctable:
                summary.disagreements += 1
                summary.violations.append(Violation(i, cfg.seed, "*", "solvers disagree"))
            else:
                summary.beyond_radius_disagreements += 1
    return summary


@dataclass
class BenchRow:
    solver: str
    backend: str
    decodes: int
    seconds: float
    iter_mean: float
    iter_var: float

    @property
    def rate(self) -> float:
        return self.decodes / self.seconds if self.seconds > 0 else float("inf")


def bench_workload(code: CodeParams, seed: int, count: int):
    """Mixed-nu errors-only workload: nu uniform over [0, t]."""
    words = []
    for i in range(count):
        rng = trial_rng(seed, i)
        nu = int(rng.integers(0, code.t + 1))
        msg = random_message(rng, code)
        words.append(apply_errata(code, encode(code, msg), random_pattern(rng, code, nu, 0)))
    return words


def bench(code: CodeParams, seed: int = 0, count: int = 1000,
          solvers: Iterable[Solver] = ALL_SOLVERS, backends: Iterable[str] = ("auto",)) -> list[BenchRow]:
    words = bench_workload(code, seed, count)
    rows = []
    for backend in backends:
        with kernels.using(backend):
            name = kernels.active()
            for solver in solvers:
                iters = []
                start = time.perf_counter()
                for w in words:
                    iters.append(decode(code, w, (), solver).kes_iterations)
                elapsed = time.perf_counter() - start
                mean = statistics.fmean(iters) if iters else 0.0
                var = statistics.pvariance(iters) if iters else 0.0
                rows.append(BenchRow(solver.value, name, len(iters), elapsed, mean, var))
    return rows
