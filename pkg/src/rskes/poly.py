"""Dense polynomials over GF(2^m).

A polynomial is a list of field elements in ascending order: ``p[i]`` is the
coefficient of ``z**i``. Trailing zeros are allowed and carry no meaning; the
zero polynomial may be ``[]`` or any all-zero list.
"""

from __future__ import annotations

from typing import Sequence

from .errors import DomainError
from .gf import GF

Poly = list

NEG_INF = float("-inf")


def deg(p: Sequence[int]) -> int | float:
    """Index of the highest nonzero coefficient, or ``NEG_INF`` for the zero polynomial."""
    for i in range(len(p) - 1, -1, -1):
        if p[i]:
            return i
    return NEG_INF


def trim(p: Sequence[int]) -> Poly:
    d = deg(p)
    return [] if d == NEG_INF else list(p[: d + 1])


def poly_eq(a: Sequence[int], b: Sequence[int]) -> bool:
    """Equality up to trailing zeros."""
    return trim(a) == trim(b)


def is_zero(p: Sequence[int]) -> bool:
    return not any(p)


def poly_add(a: Sequence[int], b: Sequence[int]) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] ^= c
    return out


def poly_scale(f: GF, p: Sequence[int], c: int) -> Poly:
    if c == 0:
        return [0] * len(p)
    exp, log = f.exp, f.log
    lc = log[c]
    return [exp[log[x] + lc] if x else 0 for x in p]


def poly_eval(f: GF, p: Sequence[int], x: int) -> int:
    """Horner evaluation of ``p`` at ``x``."""
    acc = 0
    if x == 0:
        return p[0] if p else 0
    exp, log = f.exp, f.log
    lx = log[x]
    for c in reversed(p):
        acc = (exp[log[acc] + lx] if acc else 0) ^ c
    return acc


def poly_mul(f: GF, a: Sequence[int], b: Sequence[int]) -> Poly:
    a = trim(a)
    b = trim(b)
    if not a or not b:
        return []
    exp, log = f.exp, f.log
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        lx = log[x]
        for j, y in enumerate(b):
            if y:
                out[i + j] ^= exp[lx + log[y]]
    return out


def poly_divmod(f: GF, num: Sequence[int], den: Sequence[int]) -> tuple[Poly, Poly]:
    """Quotient and remainder with ``num == q*den + r`` and ``deg r < deg den``."""
    den = trim(den)
    if not den:
        raise DomainError("polynomial division by zero")
    rem = trim(num)
    dd = len(den) - 1
    if len(rem) - 1 < dd:
        return [], rem
    exp, log = f.exp, f.log
    inv_lead = f.inv(den[-1])
    q = [0] * (len(rem) - dd)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if not c:
            continue
        coef = f.mul(c, inv_lead)
        q[i - dd] = coef
        lc = log[coef]
        for j, d in enumerate(den):
            if d:
                rem[i - dd + j] ^= exp[lc + log[d]]
    return q, trim(rem[:dd])


def poly_mod_xk(p: Sequence[int], k: int) -> Poly:
    """``p mod z**k``."""
    return list(p[:k])


def poly_shift(p: Sequence[int], k: int) -> Poly:
    """``z**k * p``."""
    return [0] * k + list(p)


def formal_derivative(p: Sequence[int]) -> Poly:
    # Characteristic 2: only odd-power terms survive, dropping one degree.
    return [p[i + 1] if i % 2 == 0 else 0 for i in range(len(p) - 1)]


def poly_gcd(f: GF, a: Sequence[int], b: Sequence[int]) -> Poly:
    """Monic gcd by repeated division."""
    a, b = trim(a), trim(b)
    while b:
        a, b = b, poly_divmod(f, a, b)[1]
    if not a:
        return []
    return poly_scale(f, a, f.inv(a[-1]))


def to_hex(p: Sequence[int]) -> str:
    """Space-separated lowercase hex coefficients, ascending powers."""
    return " ".join(format(c, "x") for c in p)


def from_hex(text: str) -> Poly:
    return [int(tok, 16) for tok in text.split()]
