"""Arithmetic in GF(2^m) backed by log/antilog tables.

Field elements are plain ints in ``[0, 2**m)``; bit ``i`` is the coefficient
of ``z**i`` in the polynomial-basis representation.
"""

from __future__ import annotations

from array import array
from functools import lru_cache

from .errors import DomainError

# Primitive polynomials (generator 2 is primitive for each).
DEFAULT_POLYS = {
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x89,
    8: 0x11D,
    9: 0x211,
    10: 0x409,
    11: 0x805,
    12: 0x1053,
    13: 0x201B,
    14: 0x4443,
    15: 0x8003,
    16: 0x1100B,
}

MIN_M = 2
MAX_M = 16


def clmul_mod(a: int, b: int, poly: int, m: int) -> int:
    """Shift-and-add multiply of two field elements, reducing modulo ``poly``.

    Table-free; used to build the tables and as an independent check on them.
    """
    top = 1 << m
    result = 0
    while b:
        if b & 1:
            result ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= poly
    return result


def is_irreducible(poly: int) -> bool:
    """Trial division of a GF(2) polynomial (bitmask) by every lower-degree one."""
    deg = poly.bit_length() - 1
    if deg < 1:
        return False
    for d in range(2, 1 << (deg // 2 + 1)):
        if d.bit_length() - 1 > deg // 2:
            break
        r = poly
        dd = d.bit_length() - 1
        while r and r.bit_length() - 1 >= dd:
            r ^= d << (r.bit_length() - 1 - dd)
        if r == 0:
            return False
    return True


class GF:
    """The field GF(2^m) defined by ``reduction_poly`` with a primitive ``generator``.

    Instances are immutable after construction and safe to share between
    threads. Use :func:`field` to get a cached instance.
    """

    __slots__ = ("m", "reduction_poly", "generator", "order", "size", "exp", "log", "exp_arr", "log_arr")

    def __init__(self, m: int, reduction_poly: int | None = None, generator: int = 2):
        if not MIN_M <= m <= MAX_M:
            raise ValueError(f"extension degree m={m} outside [{MIN_M}, {MAX_M}]")
        if reduction_poly is None:
            reduction_poly = DEFAULT_POLYS[m]
        if reduction_poly.bit_length() - 1 != m:
            raise ValueError(f"reduction polynomial {reduction_poly:#x} does not have degree {m}")
        if not reduction_poly & 1:
            raise ValueError(f"reduction polynomial {reduction_poly:#x} has zero constant term")
        if not is_irreducible(reduction_poly):
            raise ValueError(f"reduction polynomial {reduction_poly:#x} is reducible")
        size = 1 << m
        if not 0 < generator < size:
            raise ValueError(f"generator {generator} is not a nonzero element of GF(2^{m})")

        order = size - 1
        # exp is doubled so log[a] + log[b] never needs a modulo.
        exp = [0] * (2 * order)
        log = [0] * size
        x = 1
        for i in range(order):
            exp[i] = x
            if i and x == 1:
                raise ValueError(f"generator {generator:#x} is not primitive modulo {reduction_poly:#x}")
            log[x] = i
            x = clmul_mod(x, generator, reduction_poly, m)
        if x != 1:
            raise ValueError(f"generator {generator:#x} is not primitive modulo {reduction_poly:#x}")
        for i in range(order, 2 * order):
            exp[i] = exp[i - order]

        self.m = m
        self.reduction_poly = reduction_poly
        self.generator = generator
        self.order = order
        self.size = size
        self.exp = exp
        self.log = log
        # Contiguous copies for the compiled kernels.
        self.exp_arr = array("i", exp)
        self.log_arr = array("i", log)

    def __repr__(self) -> str:
        return f"GF(2^{self.m}, poly={self.reduction_poly:#x}, generator={self.generator:#x})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GF)
            and self.m == other.m
            and self.reduction_poly == other.reduction_poly
            and self.generator == other.generator
        )

    def __hash__(self) -> int:
        return hash((self.m, self.reduction_poly, self.generator))

    def __reduce__(self):
        return (field, (self.m, self.reduction_poly, self.generator))

    def check(self, a: int) -> int:
        if not 0 <= a < self.size:
            raise ValueError(f"{a} is not an element of GF(2^{self.m})")
        return a

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DomainError("zero has no multiplicative inverse")
        return self.exp[self.order - self.log[a]]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise DomainError("division by zero field element")
        if a == 0:
            return 0
        return self.exp[self.log[a] + self.order - self.log[b]]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DomainError("zero raised to a negative power")
            return 1 if e == 0 else 0
        return self.exp[(self.log[a] * e) % self.order]

    def alpha_pow(self, e: int) -> int:
        """``generator ** e`` for any integer ``e``."""
        return self.exp[e % self.order]


@lru_cache(maxsize=None)
def field(m: int, reduction_poly: int | None = None, generator: int = 2) -> GF:
    if reduction_poly is None:
        reduction_poly = DEFAULT_POLYS.get(m)
        if reduction_poly is None:
            raise ValueError(f"extension degree m={m} outside [{MIN_M}, {MAX_M}]")
    return GF(m, reduction_poly, generator)


# Functional spellings of the field operations.

def gf_add(a: int, b: int) -> int:
    return a ^ b


def gf_mul(f: GF, a: int, b: int) -> int:
    return f.mul(a, b)


def gf_inv(f: GF, a: int) -> int:
    return f.inv(a)


def gf_pow(f: GF, a: int, e: int) -> int:
    return f.pow(a, e)
