"""Reed-Solomon code parameters, systematic encoding and syndromes."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from . import kernels
from .gf import GF, field
from .poly import Poly, poly_add, poly_divmod, poly_mul, poly_scale, poly_shift, trim


@dataclass(frozen=True)
class CodeParams:
    """An (n, n-2t) Reed-Solomon code whose generator has roots alpha^(b0+j), 0 <= j < 2t.

    ``alpha = generator ** ((2^m - 1) / n)`` has multiplicative order exactly n.
    """

    field: GF
    n: int
    t: int
    b0: int = 0

    def __post_init__(self):
        order = self.field.order
        if self.n < 2 or order % self.n:
            raise ValueError(f"n={self.n} must divide 2^m - 1 = {order} (shortened codes are not supported)")
        if not 1 <= 2 * self.t < self.n:
            raise ValueError(f"need 1 <= 2t < n, got t={self.t}, n={self.n}")
        object.__setattr__(self, "b0", self.b0 % self.n)

    @classmethod
    def make(cls, m: int = 4, n: int | None = None, t: int = 2, b0: int = 0,
             prim_poly: int | None = None, generator: int = 2) -> "CodeParams":
        f = field(m, prim_poly, generator)
        return cls(f, f.order if n is None else n, t, b0)

    @property
    def k(self) -> int:
        return self.n - 2 * self.t

    @property
    def nsyn(self) -> int:
        return 2 * self.t

    @property
    def alpha_log(self) -> int:
        """log of alpha with respect to the field generator."""
        return self.field.order // self.n

    @cached_property
    def alpha(self) -> int:
        return self.field.alpha_pow(self.alpha_log)

    def alpha_pow(self, e: int) -> int:
        return self.field.alpha_pow(self.alpha_log * e)

    @cached_property
    def syndrome_points(self) -> tuple[int, ...]:
        return tuple(self.alpha_pow(self.b0 + j) for j in range(2 * self.t))

    @cached_property
    def chien_points(self) -> tuple[int, ...]:
        return tuple(self.alpha_pow(-j) for j in range(self.n))

    @cached_property
    def generator_poly(self) -> Poly:
        return generator_poly(self)

    def location(self, position: int) -> int:
        """The errata location alpha^position."""
        return self.alpha_pow(position)

    def __str__(self) -> str:
        return f"RS({self.n},{self.k}) over GF(2^{self.field.m}) poly={self.field.reduction_poly:#x} t={self.t} b0={self.b0}"


@dataclass(frozen=True)
class ErrataPattern:
    """Injected errors (nonzero values) and erasures (values may be zero), as (position, value) pairs."""

    errors: tuple[tuple[int, int], ...] = ()
    erasures: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "errors", tuple((int(p), int(v)) for p, v in self.errors))
        object.__setattr__(self, "erasures", tuple((int(p), int(v)) for p, v in self.erasures))
        positions = self.positions
        if len(set(positions)) != len(positions):
            raise ValueError(f"duplicate errata positions in {sorted(positions)}")
        if any(v == 0 for _, v in self.errors):
            raise ValueError("error values must be nonzero")

    @property
    def nu(self) -> int:
        return len(self.errors)

    @property
    def mu(self) -> int:
        return len(self.erasures)

    @property
    def eta(self) -> int:
        return self.nu + self.mu

    @property
    def positions(self) -> list[int]:
        return [p for p, _ in self.errors] + [p for p, _ in self.erasures]

    @property
    def erasure_positions(self) -> list[int]:
        return [p for p, _ in self.erasures]

    def values(self) -> dict[int, int]:
        return dict(self.errors + self.erasures)


def generator_poly(code: CodeParams) -> Poly:
    """g(z) = prod_{j<2t} (z - alpha^(b0+j)), monic of degree 2t."""
    g = [1]
    for root in code.syndrome_points:
        g = poly_mul(code.field, g, [root, 1])
    return g


def encode(code: CodeParams, message: Sequence[int]) -> Poly:
    """Systematic codeword: message in the top k slots, parity in the low 2t."""
    if len(message) != code.k:
        raise ValueError(f"message has {len(message)} symbols, expected k={code.k}")
    for s in message:
        code.field.check(s)
    shifted = poly_shift(list(message), code.nsyn)
    _, rem = poly_divmod(code.field, shifted, code.generator_poly)
    word = poly_add(shifted, rem)
    return word + [0] * (code.n - len(word))


def message_of(code: CodeParams, codeword: Sequence[int]) -> list[int]:
    return list(codeword[code.nsyn:code.n])


def compute_syndromes(code: CodeParams, received: Sequence[int]) -> Poly:
    """S_j = R(alpha^(b0+j)) for 0 <= j < 2t."""
    if len(trim(received)) > code.n:
        raise ValueError(f"received word has degree >= n={code.n}")
    return kernels.eval_many(code.field, list(received), code.syndrome_points)


def is_codeword(code: CodeParams, word: Sequence[int]) -> bool:
    return len(trim(word)) <= code.n and not any(compute_syndromes(code, word))


def apply_errata(code: CodeParams, codeword: Sequence[int], pattern: ErrataPattern) -> Poly:
    """R = C + E, XORing each pattern value in at its position."""
    out = list(codeword) + [0] * (code.n - len(codeword))
    for pos, val in pattern.errors + pattern.erasures:
        if not 0 <= pos < code.n:
            raise ValueError(f"position {pos} outside [0, {code.n})")
        out[pos] ^= code.field.check(val)
    return out


def reference_locator_evaluator(code: CodeParams, pattern: ErrataPattern) -> tuple[Poly, Poly]:
    """Errata locator and evaluator built directly from a known pattern.

    Lambda = prod (1 - X z) over all errata locations X; Omega =
    sum_i Y_i X_i^b0 prod_{j != i} (1 - X_j z).
    """
    f = code.field
    items = [(code.location(p), v) for p, v in pattern.errors + pattern.erasures]
    lam: Poly = [1]
    for x, _ in items:
        lam = poly_mul(f, lam, [1, x])
    omega: Poly = []
    for i, (xi, yi) in enumerate(items):
        coef = f.mul(yi, f.pow(xi, code.b0))
        if not coef:
            continue
        term: Poly = [coef]
        for j, (xj, _) in enumerate(items):
            if j != i:
                term = poly_mul(f, term, [1, xj])
        omega = poly_add(omega, term)
    return trim(lam), trim(omega)


def syndromes_of_pattern(code: CodeParams, pattern: ErrataPattern) -> Poly:
    """Direct evaluation: S_j = sum Y * X^(b0+j). Independent of any encoder."""
    f = code.field
    S = [0] * code.nsyn
    for pos, val in pattern.errors + pattern.erasures:
        if not val:
            continue
        for j in range(code.nsyn):
            S[j] ^= f.mul(val, code.alpha_pow(pos * (code.b0 + j)))
    return S


def scale_syndromes(code: CodeParams, S: Sequence[int], beta: int) -> Poly:
    return poly_scale(code.field, list(S), beta)
