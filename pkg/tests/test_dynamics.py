import pytest

from hklattice import dynamics as dy
from hklattice import lattice as lat
from hklattice.dynamics import Kind
from hklattice.errors import NotHyperbolic, NotIndependent, SquareNotTwo
from hklattice.quadratic import QuadraticNumber

from oracles import pair


def psi_of(a):
    return dy.build_psi(*dy.two_reflection_plane(a))


def test_a4_trace_and_lambda():
    spectral = dy.classify(psi_of(4))
    assert spectral.kind is Kind.HYPERBOLIC
    assert spectral.trace == 14
    lam = spectral.lam
    assert lam * lam - lam * 14 + 1 == 0
    assert lam == QuadraticNumber(7, 4, 3)
    assert abs(spectral.lambda_float - 13.9282) < 1e-3
    assert lam * lam.conjugate() == 1


def test_plane_matrix_matches_columns():
    for a in range(-5, 6):
        psi = psi_of(a)
        assert psi.matrix.matrix == tuple(tuple(r) for r in psi.plane_matrix)


def test_isotropic_eigenvectors_p3xp3():
    psi = dy.build_psi(*dy.p3xp3_example())
    G = psi.ambient.gram
    e_plus, e_minus = dy.isotropic_eigenvectors(psi)
    lam = dy.classify(psi).lam
    for e, mu in ((e_plus, lam), (e_minus, lam.conjugate())):
        assert pair(G, e, e) == 0
        image = tuple(sum(psi.matrix.matrix[i][j] * e[j] for j in range(3)) for i in range(3))
        assert image == tuple(mu * x for x in e)
    assert pair(G, e_plus, e_minus) != 0


def test_swapping_h1_h2_inverts_psi():
    L, h1, h2 = dy.p3xp3_example()
    p, q = dy.build_psi(L, h1, h2), dy.build_psi(L, h2, h1)
    assert lat.matmul(p.matrix.matrix, q.matrix.matrix) == lat.identity_matrix(3)
    assert dy.classify(p).lam == dy.classify(q).lam


@pytest.mark.parametrize("a, kind, order", [(0, Kind.ELLIPTIC, 2), (1, Kind.ELLIPTIC, 3), (-1, Kind.ELLIPTIC, 3), (2, Kind.PARABOLIC, None)])
def test_non_hyperbolic(a, kind, order):
    spectral = dy.classify(psi_of(a))
    assert spectral.kind is kind and spectral.order == order
    assert spectral.lambda_float is None
    with pytest.raises(NotHyperbolic):
        spectral.lam


def test_parabolic_has_infinite_order():
    assert dy.matrix_order(psi_of(2).matrix.matrix, 50) is None


def test_build_psi_rejects():
    L, h1, _ = dy.p3xp3_example()
    with pytest.raises(NotIndependent):
        dy.build_psi(L, h1, h1)
    with pytest.raises(SquareNotTwo):
        dy.build_psi(L, (1, 0, 0), h1)


def test_fixed_sublattice_is_plane_perp():
    L, h1, h2 = dy.p3xp3_example()
    psi = dy.build_psi(L, h1, h2)
    fixed = dy.fixed_sublattice(psi)
    perp = lat.orthogonal_complement(L, [h1, h2])
    assert fixed == perp
    assert len(fixed) == 1
    assert all(psi(v) == v for v in fixed)


def test_orbit_preserves_norm():
    L, h1, h2 = dy.p3xp3_example()
    psi = dy.build_psi(L, h1, h2)
    for x in ((1, 0, 0), (1, 2, -3), h1):
        n0 = lat.norm(L, x)
        assert all(lat.norm(L, p) == n0 for p in dy.orbit(psi, x, 50))


def test_orbit_growth_approaches_lambda():
    L, h1, h2 = dy.p3xp3_example()
    psi = dy.build_psi(L, h1, h2)
    lam = dy.classify(psi).lambda_float
    for x in (h1, (1, 0, 0), (3, -1, 2)):
        ratio = dy.growth_ratios(psi, x, 20)[-1]
        assert abs(ratio - lam) / lam < 0.01


def test_report_shape():
    r = dy.report(psi_of(4))
    assert r["kind"] == "hyperbolic" and r["lambda_exact"] == {"t": 14, "disc": 192}
    r = dy.report(psi_of(1))
    assert r["lambda_float"] is None and r["lambda_exact"] is None and r["order"] == 3
