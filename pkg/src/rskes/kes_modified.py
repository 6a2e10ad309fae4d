"""Fixed-iteration key-equation solvers.

Three register-level variants of the Euclidean algorithm, each running exactly
2t iterations on four (2t+1)-slot registers U, V, W, X and an integer delta:

* ``"I"``: shift, conditional swap, cross-multiply, as three sequential steps.
* ``"I*"``: the same step fused into one simultaneous update; delta starts at -1.
* ``"II"``: the fused update preceded by one iteration per erasure that
  multiplies V and X by (1 - gamma z), so erasure processing, modified
  syndrome and errata locator all come out of the same 2t-iteration loop.

On a correctable input with eta errata, the final X holds beta * z^(2t-eta) *
Lambda(z) and V holds beta * z^(2t-eta) * Omega(z) for some nonzero beta.

:func:`kes_step` is the readable single-iteration reference used for traces;
the whole-run functions dispatch to :mod:`rskes.kernels`.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from typing import Sequence

from . import kernels
from .errors import FinishedStateError
from .gf import GF

MODES = ("I", "I*", "II")


class Verdict(Enum):
    CORRECTABLE = "Correctable"
    UNCORRECTABLE = "Uncorrectable"


@dataclass(frozen=True)
class KesRegisters:
    t: int
    U: tuple[int, ...]
    V: tuple[int, ...]
    W: tuple[int, ...]
    X: tuple[int, ...]
    delta: int
    psi: tuple[int, ...] = ()  # remaining erasure locations, head first
    iteration: int = 0

    @property
    def finished(self) -> bool:
        return self.iteration >= 2 * self.t

    @property
    def psi_head(self) -> int:
        return self.psi[0] if self.psi else 0


@dataclass(frozen=True)
class StepControls:
    """Control values computed in one iteration (for traces)."""

    first: bool
    swap: bool
    gamma: int
    xi: int


@dataclass(frozen=True)
class KesResult:
    t: int
    mode: str
    X: tuple[int, ...]  # Lambda_raw
    V: tuple[int, ...]  # Omega_raw
    delta: int
    psi_head_nonzero: bool = False
    iterations: int = 0

    @property
    def Lambda_raw(self):
        return self.X

    @property
    def Omega_raw(self):
        return self.V


def initial_registers(t: int, S: Sequence[int], mode: str = "I*",
                      erasure_locations: Sequence[int] = ()) -> KesRegisters:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    L = 2 * t + 1
    if len([c for c in S[2 * t:] if c]):
        raise ValueError(f"syndrome polynomial has degree >= 2t={2 * t}")
    if erasure_locations and mode != "II":
        raise ValueError(f"mode {mode} does not take erasures")
    if any(x == 0 for x in erasure_locations) or len(set(erasure_locations)) != len(erasure_locations):
        raise ValueError("erasure locations must be distinct and nonzero")
    U = [0] * L
    U[2 * t] = 1
    V = (list(S[:2 * t]) + [0] * L)[:L]
    X = [1] + [0] * (L - 1)
    return KesRegisters(
        t=t,
        U=tuple(U),
        V=tuple(V),
        W=(0,) * L,
        X=tuple(X),
        delta=0 if mode == "I" else -1,
        psi=tuple(erasure_locations),
    )


def _shift(p: Sequence[int]) -> list[int]:
    """z * p inside a fixed-width register; the top coefficient falls off."""
    return [0] + list(p[:-1])


def _cross(f: GF, a: int, p: Sequence[int], b: int, q: Sequence[int]) -> list[int]:
    """a*p - b*q (characteristic 2: a*p + b*q)."""
    mul = f.mul
    return [mul(a, x) ^ mul(b, y) for x, y in zip(p, q)]


def step_with_controls(f: GF, state: KesRegisters, mode: str) -> tuple[KesRegisters, StepControls]:
    if state.finished:
        raise FinishedStateError(f"all {2 * state.t} iterations already ran")
    top = 2 * state.t
    U, V, W, X, delta = state.U, state.V, state.W, state.X, state.delta
    psi = state.psi

    if mode == "I":
        V = _shift(V)
        X = _shift(X)
        delta -= 1
        swap = V[top] != 0 and delta < 0
        if swap:
            delta = -delta
            U, V = V, U
            W, X = X, W
        gamma, xi = U[top], V[top]
        nV = _cross(f, gamma, V, xi, U)
        nX = _cross(f, gamma, X, xi, W)
        new = replace(state, U=tuple(U), V=tuple(nV), W=tuple(W), X=tuple(nX), delta=delta,
                      iteration=state.iteration + 1)
        return new, StepControls(False, swap, gamma, xi)

    if mode == "I*":
        if psi:
            raise ValueError("mode I* does not take erasures")
        swap = V[top - 1] != 0 and delta < 0
        gamma, xi = U[top], V[top - 1]
        zV, zX = _shift(V), _shift(X)
        nV = _cross(f, gamma, zV, xi, U)
        nX = _cross(f, gamma, zX, xi, W)
        if swap:
            nU, nW, delta = zV, zX, -delta - 1
        else:
            nU, nW, delta = U, W, delta - 1
        new = replace(state, U=tuple(nU), V=tuple(nV), W=tuple(nW), X=tuple(nX), delta=delta,
                      iteration=state.iteration + 1)
        return new, StepControls(False, swap, gamma, xi)

    if mode == "II":
        first = state.psi_head != 0
        swap = (not first) and V[top - 1] != 0 and delta < 0
        if first:
            gamma, xi = state.psi_head, 1
        else:
            gamma, xi = U[top], V[top - 1]
        if swap:
            delta = -delta - 1
        elif not first:
            delta = delta - 1
        zV, zX = _shift(V), _shift(X)
        if first:
            nV = _cross(f, gamma, zV, xi, V)
            nX = _cross(f, gamma, zX, xi, X)
            # Erasure iterations build the modified syndrome, which lives mod z^2t.
            nV[top] = 0
        else:
            nV = _cross(f, gamma, zV, xi, U)
            nX = _cross(f, gamma, zX, xi, W)
        nU, nW = (zV, zX) if swap else (U, W)
        new = replace(state, U=tuple(nU), V=tuple(nV), W=tuple(nW), X=tuple(nX), delta=delta,
                      psi=psi[1:], iteration=state.iteration + 1)
        return new, StepControls(first, swap, gamma, xi)

    raise ValueError(f"unknown mode {mode!r}")


def kes_step(f: GF, state: KesRegisters, mode: str) -> KesRegisters:
    """Apply one iteration of the given mode. All right-hand sides read pre-iteration values."""
    return step_with_controls(f, state, mode)[0]


def result_of(state: KesRegisters, mode: str) -> KesResult:
    return KesResult(state.t, mode, state.X, state.V, state.delta, state.psi_head != 0, state.iteration)


def run_stepwise(f: GF, t: int, S: Sequence[int], mode: str,
                 erasure_locations: Sequence[int] = ()) -> tuple[KesResult, list]:
    """Run 2t :func:`kes_step` calls; returns the result and the per-iteration (state, controls) rows."""
    state = initial_registers(t, S, mode, erasure_locations)
    rows = []
    for _ in range(2 * t):
        state, ctl = step_with_controls(f, state, mode)
        rows.append((state, ctl))
    return result_of(state, mode), rows


def _check_inputs(t: int, S: Sequence[int], locations: Sequence[int] = ()):
    if t < 1:
        raise ValueError("t must be positive")
    if any(S[2 * t:]):
        raise ValueError(f"syndrome polynomial has degree >= 2t={2 * t}")
    if any(x == 0 for x in locations) or len(set(locations)) != len(locations):
        raise ValueError("erasure locations must be distinct and nonzero")


def algorithm_I(f: GF, t: int, S: Sequence[int]) -> KesResult:
    _check_inputs(t, S)
    X, V, delta, _, it = kernels.kes_run(f, kernels.MODE_I, t, list(S))
    return KesResult(t, "I", tuple(X), tuple(V), delta, False, it)


def algorithm_I_star(f: GF, t: int, S: Sequence[int]) -> KesResult:
    _check_inputs(t, S)
    X, V, delta, _, it = kernels.kes_run(f, kernels.MODE_FUSED, t, list(S), ())
    return KesResult(t, "I*", tuple(X), tuple(V), delta, False, it)


def algorithm_II(f: GF, t: int, S: Sequence[int], erasure_locations: Sequence[int] = ()) -> KesResult:
    """Errors-and-erasures solver; erasures are consumed in the order given."""
    _check_inputs(t, S, erasure_locations)
    X, V, delta, head, it = kernels.kes_run(f, kernels.MODE_FUSED, t, list(S), list(erasure_locations))
    return KesResult(t, "II", tuple(X), tuple(V), delta, head, it)


def run(f: GF, mode: str, t: int, S: Sequence[int], erasure_locations: Sequence[int] = ()) -> KesResult:
    if mode == "I":
        return algorithm_I(f, t, S)
    if mode == "I*":
        return algorithm_I_star(f, t, S)
    if mode == "II":
        return algorithm_II(f, t, S, erasure_locations)
    raise ValueError(f"unknown mode {mode!r}")


def classify(result: KesResult, mode: str | None = None) -> Verdict:
    """Correctability verdict from the final delta (and psi head for mode II).

    Necessary, not sufficient: callers still verify the Chien root count.
    """
    mode = mode or result.mode
    if not any(result.X):
        return Verdict.UNCORRECTABLE
    if mode == "I":
        bad = result.delta > 0
    elif mode == "I*":
        bad = result.delta >= 0
    elif mode == "II":
        bad = result.delta >= 0 or result.psi_head_nonzero
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return Verdict.UNCORRECTABLE if bad else Verdict.CORRECTABLE


def eta_of(result: KesResult) -> int:
    """Errata count read off the layout: 2t minus the lowest nonzero slot of X."""
    for i, x in enumerate(result.X):
        if x:
            return 2 * result.t - i
    raise ValueError("X register is all zero")


def nu_from_delta(result: KesResult, mu: int = 0) -> int:
    """Error count implied by the final delta of a correctable run."""
    t = result.t
    if result.mode == "I":
        return (result.delta + 2 * t) // 2
    return (result.delta + 2 * t - mu + 1) // 2
