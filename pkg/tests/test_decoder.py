import random

import pytest

from helpers import random_pattern
from rskes.code import CodeParams, apply_errata, encode, is_codeword
from rskes.decoder import ALL_SOLVERS, Solver, Status, brute_force_decode, codebook, decode


@pytest.mark.parametrize("solver", ALL_SOLVERS)
def test_clean_codeword(rs15, solver):
    c = encode(rs15, list(range(11)))
    rep = decode(rs15, c, (), solver)
    assert rep.status is Status.SUCCESS and rep.corrections == [] and rep.message == list(range(11))
    if solver.fixed_iterations:
        assert rep.kes_iterations == 4


@pytest.mark.parametrize("solver", ALL_SOLVERS)
@pytest.mark.parametrize("b0", [0, 1])
def test_round_trip(solver, b0, backend):
    code = CodeParams.make(4, 15, 3, b0)
    rnd = random.Random(hash((solver.value, b0)) & 0xFFFF)
    for _ in range(200):
        msg = [rnd.randrange(16) for _ in range(code.k)]
        c = encode(code, msg)
        if solver.errors_only:
            nu, mu = rnd.randint(0, 3), 0
        else:
            mu = rnd.randint(0, 6)
            nu = rnd.randint(0, (6 - mu) // 2)
        pat = random_pattern(rnd, code, nu, mu, zero_erasures=0.2)
        rep = decode(code, apply_errata(code, c, pat), pat.erasure_positions, solver)
        assert rep.ok, rep
        assert rep.message == msg
        assert rep.nu_detected == nu and rep.mu == mu
        injected = {p: v for p, v in pat.values().items()}
        assert {c.position: c.value for c in rep.corrections} == injected


def test_solvers_agree(rs15, backend):
    rnd = random.Random(5)
    for _ in range(300):
        c = encode(rs15, [rnd.randrange(16) for _ in range(11)])
        pat = random_pattern(rnd, rs15, rnd.randint(0, 2), 0)
        r = apply_errata(rs15, c, pat)
        outs = {tuple(decode(rs15, r, (), s).corrections) for s in ALL_SOLVERS}
        assert len(outs) == 1


def test_errors_only_solvers_reject_erasures(rs15):
    c = encode(rs15, [0] * 11)
    for s in (Solver.CLASSIC_EO, Solver.ALG1, Solver.ALG1_STAR):
        with pytest.raises(ValueError):
            decode(rs15, c, [1], s)


def test_parameter_violations(rs15):
    with pytest.raises(ValueError):
        decode(rs15, [0] * 14)
    with pytest.raises(ValueError):
        decode(rs15, [0] * 15, [1, 1], Solver.ALG2)
    with pytest.raises(ValueError):
        decode(rs15, [0] * 15, [15], Solver.ALG2)
    with pytest.raises(ValueError):
        decode(rs15, [16] + [0] * 14)


@pytest.mark.parametrize("solver", ALL_SOLVERS)
def test_beyond_radius_never_miscorrects_silently(rs7, solver, backend):
    rnd = random.Random(7)
    for _ in range(300):
        c = encode(rs7, [rnd.randrange(8) for _ in range(3)])
        pat = random_pattern(rnd, rs7, 3, 0)
        r = apply_errata(rs7, c, pat)
        rep = decode(rs7, r, (), solver)
        if rep.ok:
            assert is_codeword(rs7, rep.corrected)
            assert sum(a != b for a, b in zip(rep.corrected, r)) <= 2
            nearest = brute_force_decode(rs7, r)
            assert nearest.distance <= 2 and rep.corrected == nearest.codeword


def test_too_many_erasures(rs15):
    c = encode(rs15, [1] * 11)
    rep = decode(rs15, c, [0, 1, 2, 3, 4], Solver.ALG2)
    assert rep.status is Status.UNCORRECTABLE and rep.psi_flag
    rep = decode(rs15, c, [0, 1, 2, 3, 4], Solver.CLASSIC_EE)
    assert rep.status is Status.UNCORRECTABLE


def test_brute_force_examples(rs7):
    assert len(codebook(rs7)) == 8 ** 3
    c = encode(rs7, [1, 2, 3])
    res = brute_force_decode(rs7, c)
    assert res.codeword == c and res.distance == 0 and not res.ambiguous
    r = list(c)
    r[0] ^= 1
    r[5] ^= 6
    res = brute_force_decode(rs7, r)
    assert res.codeword == c and res.distance == 2 and not res.ambiguous


def test_brute_force_guard():
    with pytest.raises(ValueError):
        codebook(CodeParams.make(4, 15, 2))
