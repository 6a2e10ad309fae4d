import random

import pytest

from helpers import correctable_counts, erasure_locations, normalized, random_pattern, reference, syndromes
from rskes.code import CodeParams
from rskes.errors import DomainError, UncorrectableError
from rskes.kes_classic import eea_errors_erasures, eea_errors_only, erasure_locator, modified_syndrome
from rskes.poly import deg, poly_eq, poly_eval, poly_mul, poly_mod_xk


def test_eo_zero_syndrome(gf8):
    lam, omega, trace = eea_errors_only(gf8, 2, [0, 0, 0, 0])
    assert poly_eq(lam, [1]) and poly_eq(omega, [])
    assert trace.divisions == 0


def test_eo_hand_run(gf8):
    # z^2 = (1 + z)(1 + z) + 1, so q = 1 + z, v2 = 1, x2 = 1 + z
    lam, omega, trace = eea_errors_only(gf8, 1, [1, 1])
    assert lam == [1, 1] and omega == [1]
    assert trace.divisions == 1
    assert trace.steps[0].q == [1, 1]
    assert trace.degrees == [2, 1, 0]


@pytest.mark.parametrize("b0", [0, 1])
@pytest.mark.parametrize("m,t", [(4, 2), (4, 3), (5, 4)])
def test_eo_matches_reference(m, t, b0):
    code = CodeParams.make(m, None, t, b0)
    f = code.field
    rnd = random.Random(m * 100 + t)
    for _ in range(400):
        nu, _ = correctable_counts(rnd, t, False)
        pat = random_pattern(rnd, code, nu, 0)
        lam, omega, trace = eea_errors_only(f, t, syndromes(code, pat))
        assert normalized(f, lam, omega) == reference(code, pat)
        d = trace.degrees
        assert d[0] == 2 * t
        assert all(a > b for a, b in zip(d, d[1:]))
        if nu:
            assert d[-2] == 2 * t - nu and d[-1] == deg(omega) <= nu - 1
        assert trace.divisions <= 2 * t


def test_eo_degrees_end_at_nu():
    # d_{k-1} = 2t - nu and d_k = deg Omega < nu (= nu - 1 for generic values)
    code = CodeParams.make(8, 255, 8)
    rnd = random.Random(1)
    for _ in range(50):
        nu = rnd.randint(1, 8)
        pat = random_pattern(rnd, code, nu, 0)
        _, _, trace = eea_errors_only(code.field, 8, syndromes(code, pat))
        assert trace.degrees[-2] == 16 - nu
        assert trace.degrees[-1] < nu


def test_erasure_locator(gf8):
    assert erasure_locator(gf8, []) == [1]
    assert erasure_locator(gf8, [5]) == [1, 5]
    # (1 + 2z)(1 + 3z) = 1 + z + 6z^2 in GF(8)
    assert erasure_locator(gf8, [2, 3]) == [1, 2 ^ 3, gf8.mul(2, 3)]
    lam = erasure_locator(gf8, [2, 3, 7])
    for x in (2, 3, 7):
        assert poly_eval(gf8, lam, gf8.inv(x)) == 0
    with pytest.raises(DomainError):
        erasure_locator(gf8, [0])
    with pytest.raises(ValueError):
        erasure_locator(gf8, [3, 3])


def test_modified_syndrome(gf8):
    S = [3, 1, 4, 1]
    assert modified_syndrome(gf8, S, [1], 2) == S
    assert not any(modified_syndrome(gf8, [0, 0, 0, 0], [1, 5], 2))
    rnd = random.Random(0)
    for _ in range(100):
        S = [rnd.randrange(8) for _ in range(4)]
        lam = erasure_locator(gf8, rnd.sample(range(1, 8), rnd.randint(0, 4)))
        assert len(modified_syndrome(gf8, S, lam, 2)) <= 4


def test_ee_without_erasures_equals_eo(rs15):
    rnd = random.Random(2)
    f = rs15.field
    for _ in range(200):
        pat = random_pattern(rnd, rs15, rnd.randint(0, 2), 0)
        S = syndromes(rs15, pat)
        assert eea_errors_erasures(f, 2, S, [])[:2] == eea_errors_only(f, 2, S)[:2]


def test_ee_too_many_erasures(rs15):
    with pytest.raises(UncorrectableError):
        eea_errors_erasures(rs15.field, 2, [0] * 4, [1, 2, 4, 8, 3])


def test_ee_zero_syndrome_with_erasures(rs15):
    f = rs15.field
    lam, omega, _ = eea_errors_erasures(f, 2, [0, 0, 0, 0], [2, 4])
    assert lam == erasure_locator(f, [2, 4]) and not any(omega)


@pytest.mark.parametrize("b0", [0, 1])
@pytest.mark.parametrize("embed", [True, False])
def test_ee_matches_reference(b0, embed):
    code = CodeParams.make(4, 15, 3, b0)
    f = code.field
    rnd = random.Random(b0 + 10 * embed)
    for _ in range(600):
        nu, mu = correctable_counts(rnd, 3, True)
        pat = random_pattern(rnd, code, nu, mu, zero_erasures=0.2)
        S = syndromes(code, pat)
        lam, omega, _ = eea_errors_erasures(f, 3, S, erasure_locations(code, pat), embed=embed)
        assert normalized(f, lam, omega) == reference(code, pat)
        assert poly_eq(poly_mod_xk(poly_mul(f, lam, S), 6), omega)


def test_ee_erasures_only(rs15):
    rnd = random.Random(9)
    f = rs15.field
    for mu in range(5):
        pat = random_pattern(rnd, rs15, 0, mu)
        locs = erasure_locations(rs15, pat)
        lam, omega, _ = eea_errors_erasures(f, 2, syndromes(rs15, pat), locs)
        assert normalized(f, lam, omega)[0] == erasure_locator(f, locs)
