import random
import time

import pytest

from hklattice import lattice as lat
from hklattice import mukai as mk
from hklattice.errors import (
    AmpleNotPositive,
    BetaNotInLambda,
    NegativeDim,
    NotSymmetricVector,
    OddSquare,
    WrongSignature,
)
from hklattice.lattice import Lattice
from hklattice.mukai import K3AlgebraicData, MukaiVector

from oracles import brute_force_walls, charpoly_signature, mukai_expand, pair

P3P3 = [[4, 6], [6, 4]]


def rank_one(g):
    return mk.picard_rank_one(2 * g - 2)


@pytest.mark.parametrize(
    "g, u, w, expected",
    [
        (3, (1, (1,), 1), (1, (1,), 1), 2),
        (6, (2, (1,), 2), (2, (1,), 2), 2),
        (6, (2, (1,), 2), (1, (0,), -1), 0),
    ],
)
def test_pairing_examples(g, u, w, expected):
    K = rank_one(g)
    u, w = MukaiVector(*u), MukaiVector(*w)
    assert mk.mukai_pairing(K, u, w) == expected
    assert mukai_expand((u.r, u.ell_part, u.s), (w.r, w.ell_part, w.s), K.ns.gram) == expected


def test_pairing_matches_integral_expansion_random():
    rng = random.Random(5)
    K = K3AlgebraicData(Lattice(P3P3), (1, 1), (1, 1))
    for _ in range(200):
        u = MukaiVector(rng.randint(-5, 5), (rng.randint(-5, 5), rng.randint(-5, 5)), rng.randint(-5, 5))
        w = MukaiVector(rng.randint(-5, 5), (rng.randint(-5, 5), rng.randint(-5, 5)), rng.randint(-5, 5))
        assert mk.mukai_pairing(K, u, w) == mukai_expand((u.r, u.ell_part, u.s), (w.r, w.ell_part, w.s), P3P3)
        assert mk.mukai_pairing(K, mk.dual(u), mk.dual(w)) == mk.mukai_pairing(K, u, w)


def test_mukai_lattice_signature():
    for gram in ([[10]], P3P3, [[2, 1], [1, -4]]):
        K = K3AlgebraicData(Lattice(gram), (1,) + (0,) * (len(gram) - 1), (1,) + (0,) * (len(gram) - 1))
        M = mk.mukai_lattice(K)
        assert lat.signature(M) == (2, len(gram), 0)
        assert charpoly_signature([list(r) for r in M.gram]) == (2, len(gram), 0)


def test_exp_neg_and_cup():
    K = rank_one(6)
    assert mk.exp_neg(K).coords == (1, -1, 5)
    one = mk.unit(K)
    assert mk.cup(K, one, MukaiVector(2, (1,), 2)) == MukaiVector(2, (1,), 2)
    # e^{-l} e^{l} = 1
    e_plus = MukaiVector(1, (1,), 5)
    assert mk.cup(K, mk.exp_neg(K), e_plus) == one


def test_exp_neg_odd():
    K = K3AlgebraicData(Lattice(P3P3), (1, 1), (1, 1))
    with pytest.raises(OddSquare):
        K3AlgebraicData(Lattice([[3]]), (1,), (1,))
    assert mk.exp_neg(K, (1, 0)).coords == (1, -1, 0, 2)


@pytest.mark.parametrize("g, v, d", [(6, (2, (1,), 2), 4), (6, (0, (0,), 1), 2), (6, (1, (0,), -1), 4)])
def test_moduli_dim(g, v, d):
    assert mk.moduli_dim(rank_one(g), MukaiVector(*v)) == d


def test_moduli_dim_negative():
    assert mk.moduli_dim(rank_one(2), MukaiVector(1, (0,), 1)) == 0
    with pytest.raises(NegativeDim):
        mk.moduli_dim(rank_one(2), MukaiVector(2, (0,), 2))


def test_k3_validation():
    with pytest.raises(AmpleNotPositive):
        K3AlgebraicData(Lattice([[-2]]), (1,), (1,))
    K = K3AlgebraicData(Lattice(P3P3), (1, 1), (1, 1))
    assert K.genus == 11 and K.ell_dot_ample == 20
    assert K3AlgebraicData.from_json(K.to_json()) == K


def test_v_perp_examples():
    K = rank_one(6)
    for v in (MukaiVector(1, (0,), -1), MukaiVector(0, (0,), 1), MukaiVector(2, (1,), 2)):
        basis = mk.v_perp_basis(K, v)
        assert len(basis) == K.rho + 1
        assert all(mk.mukai_pairing(K, b, v) == 0 for b in basis)


@pytest.mark.parametrize("g", range(4, 13))
def test_reflection_exchanges_theta_and_delta(g):
    K = rank_one(g)
    theta = mk.theta_class(K)
    assert theta.coords == (-(g - 3), -1, -2)
    assert mk.reflection_eta_minus_one(K, theta) == mk.delta_class(K)
    assert mk.reflection_eta_minus_one(K, mk.delta_class(K)) == theta


def test_T_beta_is_reflection_on_v_perp():
    for g in range(4, 13):
        K = rank_one(g)
        v = MukaiVector(2, (1,), 2)
        beta = mk.theta_class(K)
        for a in mk.v_perp_basis(K, v):
            assert mk.T_beta(K, beta, a) == mk.reflection_eta_minus_one(K, a)


def test_T_beta_on_ell_perp_divisors():
    K = K3AlgebraicData(Lattice(P3P3), (1, 1), (1, 1))
    beta = mk.theta_class(K)
    m = (1, -1)  # m.ell = 0
    assert pair(P3P3, m, (1, 1)) == 0
    d = mk.divisor(K, m)
    assert mk.T_beta(K, beta, d) == -d


def test_T_beta_rejects_beta_outside_lambda():
    K = K3AlgebraicData(Lattice(P3P3), (1, 1), (1, 1))
    with pytest.raises(BetaNotInLambda):
        mk.T_beta(K, MukaiVector(0, (1, 0), 0), mk.unit(K))


@pytest.mark.parametrize("g", range(4, 13))
def test_solver_unique_beta(g):
    K = rank_one(g)
    t0 = time.perf_counter()
    beta = mk.solve_involution_beta(K, MukaiVector(2, (1,), 2))
    assert time.perf_counter() - t0 < 1.0
    assert mk.beta_coefficients(K, beta) == (-(g - 3), -1, -2)


def test_solver_rank_two():
    K = K3AlgebraicData(Lattice(P3P3), (1, 1), (1, 1))
    beta = mk.solve_involution_beta(K, MukaiVector(2, (1, 1), 2), bound=12)
    assert mk.beta_coefficients(K, beta) == (-8, -1, -2)


def test_h_v():
    K = rank_one(6)
    h = mk.h_v(K, MukaiVector(3, (1,), 3))
    assert h.coords == (-1, 0, 1)
    with pytest.raises(NotSymmetricVector):
        mk.h_v(K, MukaiVector(2, (1,), 3))


def test_v_generic_rank_one_has_no_walls():
    assert mk.is_v_generic(rank_one(6), MukaiVector(2, (1,), 2)) == (True, [])


def test_v_generic_needs_hyperbolic_ns():
    K = K3AlgebraicData(Lattice([[2, 0], [0, 2]]), (1, 0), (1, 0))
    with pytest.raises(WrongSignature):
        mk.is_v_generic(K, MukaiVector(2, (1, 0), 2))


@pytest.mark.parametrize("ample", [(1, 1), (2, 1)])
def test_v_generic_p3xp3_matches_brute_force(ample):
    ell = (1, 1)
    K = K3AlgebraicData(Lattice(P3P3), ell, ample)
    v = MukaiVector(2, ell, 2)
    generic, walls = mk.is_v_generic(K, v)
    expected = brute_force_walls(P3P3, ell, ample, 2, 2, 10)
    assert {(w.r0, w.ell0) for w in walls} == expected
    assert generic == (not expected)


def test_v_generic_p3xp3_witnesses():
    K = K3AlgebraicData(Lattice(P3P3), (1, 1), (1, 1))
    generic, walls = mk.is_v_generic(K, MukaiVector(2, (1, 1), 2))
    assert not generic
    assert {(w.r0, w.ell0, w.m) for w in walls} == {(1, (0, 1), (-1, 1)), (1, (1, 0), (1, -1))}
