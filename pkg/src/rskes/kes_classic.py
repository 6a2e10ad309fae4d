"""Variable-iteration extended Euclidean key-equation solvers.

These are the textbook Sugiyama-style solvers: polynomial long division until
the remainder degree drops below a threshold. They serve as the behavioral
oracle for the fixed-iteration solvers in :mod:`rskes.kes_modified`.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .errors import DomainError, UncorrectableError
from .gf import GF
from .poly import NEG_INF, Poly, deg, poly_add, poly_divmod, poly_mod_xk, poly_mul, trim


@dataclass
class EeaStep:
    j: int
    v: Poly  # remainder v^(j+1) produced by this division
    x: Poly  # x^(j+1)
    q: Poly
    d: int | float  # deg v^(j+1)


@dataclass
class EeaTrace:
    degrees: list = dc_field(default_factory=list)  # d_0, d_1, ... of the remainder sequence
    steps: list[EeaStep] = dc_field(default_factory=list)
    k: int = 1  # index j of the output pair (x^(k), v^(k))
    degenerate: bool = False  # remainder hit zero before the threshold

    @property
    def divisions(self) -> int:
        return len(self.steps)


def _euclid(f: GF, t: int, v1: Sequence[int], x0: Poly, x1: Poly, threshold2: int):
    """Divide until 2*deg(v) < threshold2. Returns (x, v, trace)."""
    v_prev: Poly = [0] * (2 * t) + [1]
    v_cur = trim(v1)
    x_prev, x_cur = trim(x0), trim(x1)
    trace = EeaTrace(degrees=[2 * t, deg(v_cur)])
    j = 1
    while 2 * deg(v_cur) >= threshold2:
        q, r = poly_divmod(f, v_prev, v_cur)
        x_next = poly_add(x_prev, poly_mul(f, q, x_cur))
        v_prev, v_cur = v_cur, r
        x_prev, x_cur = x_cur, trim(x_next)
        trace.steps.append(EeaStep(j, v_cur, x_cur, q, deg(v_cur)))
        trace.degrees.append(deg(v_cur))
        j += 1
    trace.k = j
    # A zero remainder ends the loop (deg 0 = NEG_INF); division cannot continue past it.
    trace.degenerate = bool(trace.steps) and not v_cur
    return x_cur, v_cur, trace


def eea_errors_only(f: GF, t: int, S: Sequence[int]) -> tuple[Poly, Poly, EeaTrace]:
    """Errors-only EEA: v0 = z^2t, v1 = S, x0 = 0, x1 = 1; divide while deg v >= t.

    Returns (Lambda, Omega, trace), a scalar multiple of the true pair.
    """
    if len(trim(S)) > 2 * t:
        raise ValueError(f"syndrome polynomial has degree >= 2t={2 * t}")
    return _euclid(f, t, S, [], [1], 2 * t)


def erasure_locator(f: GF, locations: Sequence[int]) -> Poly:
    """prod (1 - X z) over the erasure locations."""
    if len(set(locations)) != len(locations):
        raise ValueError("repeated erasure location")
    lam: Poly = [1]
    for x in locations:
        if x == 0:
            raise DomainError("erasure location 0 is not a field location")
        lam = poly_mul(f, lam, [1, f.check(x)])
    return lam


def modified_syndrome(f: GF, S: Sequence[int], lam_erasure: Sequence[int], t: int) -> Poly:
    """Lambda_erasure * S mod z^2t."""
    return poly_mod_xk(poly_mul(f, lam_erasure, S), 2 * t)


def eea_errors_erasures(f: GF, t: int, S: Sequence[int], erasure_locations: Sequence[int],
                        embed: bool = True):
    """Errors-and-erasures EEA on the modified syndrome.

    Divides while deg v >= t + mu/2, compared as 2 deg v >= 2t + mu. With
    ``embed`` the x registers start at 0 and Lambda_erasure so the output is
    the full errata locator; otherwise the error locator is multiplied by
    Lambda_erasure afterwards. Returns (Lambda, Omega, trace).
    """
    mu = len(erasure_locations)
    if mu > 2 * t:
        raise UncorrectableError(f"{mu} erasures exceed 2t={2 * t}")
    if len(trim(S)) > 2 * t:
        raise ValueError(f"syndrome polynomial has degree >= 2t={2 * t}")
    lam_eps = erasure_locator(f, erasure_locations)
    s_hat = modified_syndrome(f, S, lam_eps, t)
    if embed:
        return _euclid(f, t, s_hat, [], lam_eps, 2 * t + mu)
    lam_e, omega, trace = _euclid(f, t, s_hat, [], [1], 2 * t + mu)
    return trim(poly_mul(f, lam_e, lam_eps)), omega, trace


__all__ = [
    "NEG_INF",
    "EeaStep",
    "EeaTrace",
    "eea_errors_only",
    "erasure_locator",
    "modified_syndrome",
    "eea_errors_erasures",
]
