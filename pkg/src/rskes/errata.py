"""From solver registers to corrections: extraction, Chien search, Forney."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import kernels
from .code import CodeParams
from .errors import InternalInconsistency
from .gf import GF
from .kes_modified import KesResult
from .poly import Poly, deg, formal_derivative, poly_eval, poly_scale, trim


@dataclass(frozen=True)
class ErrataSolution:
    eta: int
    Lambda: Poly  # Lambda[0] == 1
    Omega: Poly


@dataclass(frozen=True)
class Correction:
    position: int
    value: int  # XOR this into the received symbol


def extract(f: GF, result: KesResult) -> ErrataSolution:
    """Strip the z^(2t-eta) shift and the beta scale from a solver's final X and V."""
    t = result.t
    X, V = result.X, result.V
    top = 2 * t
    low = next((i for i, x in enumerate(X) if x), None)
    if low is None:
        raise InternalInconsistency("X register is all zero")
    if V[top]:
        raise InternalInconsistency(f"V[{top}] = {V[top]:#x}; the top slot must be zero")
    eta = top - low
    inv_beta = f.inv(X[low])
    lam = poly_scale(f, X[low:], inv_beta)
    omega = poly_scale(f, V[low:], inv_beta)
    return ErrataSolution(eta, trim(lam), trim(omega))


def normalize(f: GF, lam: Sequence[int], omega: Sequence[int]) -> ErrataSolution:
    """Scale a (Lambda, Omega) pair so Lambda(0) = 1."""
    if not lam or lam[0] == 0:
        raise InternalInconsistency("locator has zero constant term")
    inv = f.inv(lam[0])
    lam_n = trim(poly_scale(f, lam, inv))
    return ErrataSolution(len(lam_n) - 1, lam_n, trim(poly_scale(f, omega, inv)))


def chien_search(code: CodeParams, lam: Sequence[int]) -> list[int]:
    """Positions j in [0, n) with Lambda(alpha^-j) = 0, ascending."""
    return kernels.roots_among(code.field, list(lam), code.chien_points)


def forney(code: CodeParams, sol: ErrataSolution, position: int) -> int:
    """Errata value at ``position``: z^b0 Omega(z) / (z Lambda'(z)) at z = alpha^-position."""
    f = code.field
    x = code.alpha_pow(-position)
    denom = f.mul(x, poly_eval(f, formal_derivative(sol.Lambda), x))
    if denom == 0:
        raise InternalInconsistency(f"Forney denominator vanishes at position {position}")
    num = f.mul(f.pow(x, code.b0), poly_eval(f, sol.Omega, x))
    return f.div(num, denom)


def corrections_for(code: CodeParams, sol: ErrataSolution, positions: Sequence[int]) -> list[Correction]:
    return [Correction(j, forney(code, sol, j)) for j in positions]


def apply_corrections(received: Sequence[int], corrections: Sequence[Correction]) -> list[int]:
    out = list(received)
    seen = set()
    for c in corrections:
        if c.position in seen:
            raise ValueError(f"duplicate correction position {c.position}")
        seen.add(c.position)
        out[c.position] ^= c.value
    return out


__all__ = [
    "ErrataSolution",
    "Correction",
    "extract",
    "normalize",
    "chien_search",
    "forney",
    "corrections_for",
    "apply_corrections",
    "deg",
]
