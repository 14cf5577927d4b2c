"""psi = R_{h1} o R_{h2} for two square-2 classes, and its spectral data.

On the plane spanned by h1, h2 with a = (h1, h2), psi acts in the basis
(h1, h2) by the matrix [[a^2 - 1, a], [-a, -1]] (columns are images), so
its characteristic polynomial is x^2 - (a^2 - 2) x + 1.  On {h1, h2}-perp
both reflections are -1 and psi is the identity.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from . import lattice as lat
from .errors import NotHyperbolic, NotIndependent
from .fixtures import p3xp3_ns_gram
from .hilbert import hilbert_lattice
from .lattice import Isometry, Lattice, Vector
from .quadratic import QuadraticNumber

MAX_ELLIPTIC_ORDER = 12


class Kind(str, enum.Enum):
    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"


@dataclass(frozen=True)
class PsiIsometry:
    ambient: Lattice
    h1: Vector
    h2: Vector
    matrix: Isometry
    a: int

    @property
    def trace_on_plane(self) -> int:
        return self.a**2 - 2

    @property
    def plane_matrix(self) -> tuple[tuple[int, int], tuple[int, int]]:
        a = self.a
        return ((a * a - 1, a), (-a, -1))

    def __call__(self, x: Sequence) -> tuple:
        return lat.matvec(self.matrix.matrix, x)


def _independent(u: Vector, v: Vector) -> bool:
    n = len(u)
    return any(u[i] * v[j] - u[j] * v[i] for i in range(n) for j in range(i + 1, n))


def build_psi(L: Lattice, h1: Sequence[int], h2: Sequence[int]) -> PsiIsometry:
    h1, h2 = lat.as_vector(h1), lat.as_vector(h2)
    r1 = lat.reflection_square2(L, h1)
    r2 = lat.reflection_square2(L, h2)
    if not _independent(h1, h2):
        raise NotIndependent("h1 and h2 are linearly dependent")
    psi = PsiIsometry(L, h1, h2, lat.compose(r1, r2), lat.bilinear(L, h1, h2))
    assert psi.matrix.det == 1
    (p11, p12), (p21, p22) = psi.plane_matrix
    assert psi(h1) == tuple(p11 * x + p21 * y for x, y in zip(h1, h2))
    assert psi(h2) == tuple(p12 * x + p22 * y for x, y in zip(h1, h2))
    return psi


def two_reflection_plane(a: int) -> tuple[Lattice, Vector, Vector]:
    """The rank-2 lattice Z h1 + Z h2 with Gram [[2, a], [a, 2]]."""
    return Lattice(((2, a), (a, 2))), (1, 0), (0, 1)


def p3xp3_example() -> tuple[Lattice, Vector, Vector]:
    """mu(NS) + Z xi_2 on S^[2] for S in P^3 x P^3, with h_i = mu(ell_i) - xi_2."""
    ns = Lattice(p3xp3_ns_gram())
    return hilbert_lattice(ns, 2), (1, 0, -1), (0, 1, -1)


@dataclass(frozen=True)
class SpectralClass:
    kind: Kind
    trace: int
    disc: int
    order: int | None = None

    @property
    def lam(self) -> QuadraticNumber:
        """(t + sqrt(t^2 - 4)) / 2, hyperbolic case only."""
        if self.kind is not Kind.HYPERBOLIC:
            raise NotHyperbolic(f"{self.kind.value} isometry has no real eigenvalue > 1")
        return QuadraticNumber(self.trace, 1, self.disc) / 2

    @property
    def lambda_float(self) -> float | None:
        return float(self.lam) if self.kind is Kind.HYPERBOLIC else None


def matrix_order(M: Sequence[Sequence[int]], max_order: int = MAX_ELLIPTIC_ORDER) -> int | None:
    n = len(M)
    I = lat.identity_matrix(n)
    P = tuple(tuple(r) for r in M)
    for k in range(1, max_order + 1):
        if P == I:
            return k
        P = lat.matmul(P, M)
    return None


def classify(psi: PsiIsometry) -> SpectralClass:
    t = psi.trace_on_plane
    disc = t * t - 4
    if psi.a**2 > 4:
        return SpectralClass(Kind.HYPERBOLIC, t, disc)
    if psi.a**2 == 4:
        return SpectralClass(Kind.PARABOLIC, t, disc)
    return SpectralClass(Kind.ELLIPTIC, t, disc, matrix_order(psi.plane_matrix))


def isotropic_eigenvectors(psi: PsiIsometry) -> tuple[tuple[QuadraticNumber, ...], tuple[QuadraticNumber, ...]]:
    """(e_plus, e_minus) in ambient coordinates over Q(sqrt disc)."""
    spectral = classify(psi)
    if spectral.kind is not Kind.HYPERBOLIC:
        raise NotHyperbolic(f"{spectral.kind.value} isometry has no isotropic eigenlines")
    a = psi.a
    out = []
    for mu in (spectral.lam, spectral.lam.conjugate()):
        x1, x2 = QuadraticNumber(a, 0, spectral.disc), mu - (a * a - 1)
        out.append(tuple(x1 * u + x2 * v for u, v in zip(psi.h1, psi.h2)))
    return out[0], out[1]


def orbit(psi: PsiIsometry, x: Sequence[int], k: int) -> list[Vector]:
    """[x, psi x, ..., psi^k x]."""
    out = [lat.as_vector(x)]
    for _ in range(k):
        out.append(psi(out[-1]))
    return out


def fixed_sublattice(psi: PsiIsometry) -> list[Vector]:
    n = psi.ambient.rank
    M = psi.matrix.matrix
    A = [[M[i][j] - int(i == j) for j in range(n)] for i in range(n)]
    return lat.integer_kernel(A, n)


def sup_norm(v: Sequence[int]) -> int:
    return max(abs(x) for x in v)


def growth_ratios(psi: PsiIsometry, x: Sequence[int], k: int) -> list[float]:
    """Ratios of sup-norms of successive orbit points (display only)."""
    pts = orbit(psi, x, k)
    return [sup_norm(b) / sup_norm(a) for a, b in zip(pts, pts[1:])]


def report(psi: PsiIsometry) -> dict:
    spectral = classify(psi)
    hyper = spectral.kind is Kind.HYPERBOLIC
    return {
        "a": psi.a,
        "kind": spectral.kind.value,
        "trace": spectral.trace,
        "lambda_float": spectral.lambda_float,
        "lambda_exact": {"t": spectral.trace, "disc": spectral.disc} if hyper else None,
        "order": spectral.order,
    }
