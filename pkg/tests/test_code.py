import random

import pytest

from rskes.code import (
    CodeParams, ErrataPattern, apply_errata, compute_syndromes, encode, generator_poly, is_codeword,
    message_of, reference_locator_evaluator, syndromes_of_pattern,
)
from rskes.poly import deg, poly_eq, poly_eval, poly_mod_xk, poly_mul


def random_pattern(rnd, code, nu, mu):
    q = code.field.size
    pos = rnd.sample(range(code.n), nu + mu)
    return ErrataPattern([(p, rnd.randrange(1, q)) for p in pos[:nu]], [(p, rnd.randrange(q)) for p in pos[nu:]])


def test_params_validation():
    code = CodeParams.make(4, 15, 2, 0)
    assert code.k == 11 and code.alpha == 2
    assert CodeParams.make(4, 5, 1).alpha == 8  # order-5 element: 2^3
    assert CodeParams.make(4, 15, 2, b0=-1).b0 == 14
    with pytest.raises(ValueError):
        CodeParams.make(4, 14, 2)  # shortened
    with pytest.raises(ValueError):
        CodeParams.make(4, 15, 8)  # 2t >= n
    with pytest.raises(ValueError):
        CodeParams.make(4, 15, 0)


def test_alpha_has_order_n():
    for n in (3, 5, 15):
        code = CodeParams.make(4, n, 1)
        powers = [code.alpha_pow(i) for i in range(1, n + 1)]
        assert powers[-1] == 1 and 1 not in powers[:-1]


@pytest.mark.parametrize("b0,expected", [(0, [5, 7, 7, 4, 1]), (1, [3, 2, 1, 3, 1])])
def test_generator_rs73(b0, expected):
    # frozen from a table-free shift-and-add expansion of prod (z - alpha^(b0+j))
    code = CodeParams.make(3, 7, 2, b0, 0xB)
    g = generator_poly(code)
    assert g == expected
    for j in range(4):
        assert poly_eval(code.field, g, code.alpha_pow(b0 + j)) == 0


def test_generator_full_degree():
    code = CodeParams.make(3, 7, 3)
    assert deg(generator_poly(code)) == 6


def test_encode_examples(rs7):
    assert encode(rs7, [0, 0, 0]) == [0] * 7
    # z^4 mod g = g - z^4, so the codeword for message (1,0,0) is g itself
    assert encode(rs7, [1, 0, 0]) == [5, 7, 7, 4, 1, 0, 0]
    with pytest.raises(ValueError):
        encode(rs7, [1, 0])


@pytest.mark.parametrize("b0", [0, 1])
def test_encode_properties(b0):
    code = CodeParams.make(4, 15, 2, b0)
    rnd = random.Random(b0)
    for _ in range(200):
        m1 = [rnd.randrange(16) for _ in range(code.k)]
        m2 = [rnd.randrange(16) for _ in range(code.k)]
        c1, c2 = encode(code, m1), encode(code, m2)
        assert len(c1) == code.n
        assert not any(compute_syndromes(code, c1))
        assert message_of(code, c1) == m1
        assert encode(code, [a ^ b for a, b in zip(m1, m2)]) == [a ^ b for a, b in zip(c1, c2)]


def test_syndrome_examples(rs15):
    assert compute_syndromes(rs15, [1] + [0] * 14) == [1, 1, 1, 1]
    f = rs15.field
    for pos in range(15):
        for y in (1, 7, 13):
            word = [0] * 15
            word[pos] = y
            expected = [f.mul(y, rs15.alpha_pow((rs15.b0 + j) * pos)) for j in range(4)]
            assert compute_syndromes(rs15, word) == expected


@pytest.mark.parametrize("b0", [0, 1])
def test_syndromes_depend_only_on_pattern(b0):
    code = CodeParams.make(4, 15, 2, b0)
    rnd = random.Random(5)
    for _ in range(300):
        c = encode(code, [rnd.randrange(16) for _ in range(code.k)])
        pat = random_pattern(rnd, code, rnd.randint(0, 3), rnd.randint(0, 3))
        assert compute_syndromes(code, apply_errata(code, c, pat)) == syndromes_of_pattern(code, pat)


def test_apply_errata(rs15):
    c = encode(rs15, list(range(11)))
    assert apply_errata(rs15, c, ErrataPattern()) == c
    once = apply_errata(rs15, c, ErrataPattern([(3, 5)]))
    assert apply_errata(rs15, once, ErrataPattern([(3, 5)])) == c
    r = apply_errata(rs15, c, ErrataPattern([(1, 2)], [(9, 4)]))
    assert sum(a != b for a, b in zip(r, c)) <= 2
    with pytest.raises(ValueError):
        ErrataPattern([(1, 2)], [(1, 3)])
    with pytest.raises(ValueError):
        ErrataPattern([(1, 0)])
    with pytest.raises(ValueError):
        apply_errata(rs15, c, ErrataPattern([(15, 1)]))


def test_reference_pair_examples(rs15):
    assert reference_locator_evaluator(rs15, ErrataPattern()) == ([1], [])
    assert reference_locator_evaluator(rs15, ErrataPattern([(0, 1)])) == ([1, 1], [1])


@pytest.mark.parametrize("b0", [0, 1, 5])
def test_reference_pair_satisfies_key_equation(b0):
    code = CodeParams.make(4, 15, 3, b0)
    f = code.field
    rnd = random.Random(b0)
    for _ in range(500):
        pat = random_pattern(rnd, code, rnd.randint(0, 4), rnd.randint(0, 4))
        lam, omega = reference_locator_evaluator(code, pat)
        S = syndromes_of_pattern(code, pat)
        assert lam[0] == 1 and deg(lam) == pat.eta
        assert deg(omega) < pat.eta or not omega
        assert poly_eq(poly_mod_xk(poly_mul(f, lam, S), 2 * code.t), poly_mod_xk(omega, 2 * code.t))


def test_is_codeword(rs15):
    c = encode(rs15, [1] * 11)
    assert is_codeword(rs15, c)
    c[0] ^= 1
    assert not is_codeword(rs15, c)
