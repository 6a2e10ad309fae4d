"""Shared oracles for the solver tests."""

import random

from rskes.code import CodeParams, ErrataPattern, reference_locator_evaluator, syndromes_of_pattern
from rskes.poly import poly_scale, trim


def random_pattern(rnd: random.Random, code: CodeParams, nu: int, mu: int, zero_erasures: float = 0.0):
    q = code.field.size
    pos = rnd.sample(range(code.n), nu + mu)
    errors = [(p, rnd.randrange(1, q)) for p in pos[:nu]]
    erasures = [(p, 0 if rnd.random() < zero_erasures else rnd.randrange(q)) for p in pos[nu:]]
    return ErrataPattern(errors, erasures)


def correctable_counts(rnd: random.Random, t: int, with_erasures: bool):
    if not with_erasures:
        return rnd.randint(0, t), 0
    mu = rnd.randint(0, 2 * t)
    return rnd.randint(0, (2 * t - mu) // 2), mu


def normalized(f, lam, omega):
    lam, omega = trim(lam), trim(omega)
    inv = f.inv(lam[0])
    return trim(poly_scale(f, lam, inv)), trim(poly_scale(f, omega, inv))


def reference(code, pattern):
    return reference_locator_evaluator(code, pattern)


def syndromes(code, pattern):
    return syndromes_of_pattern(code, pattern)


def erasure_locations(code, pattern):
    return [code.location(p) for p in pattern.erasure_positions]
