"""The algebraic Mukai lattice of a K3 surface.

Coordinates are (r, ell_1..ell_rho, s) in the basis (1, NS basis, eta),
with <1, eta> = -1, <1, 1> = <eta, eta> = 0 and the Neron-Severi form in
the middle block, so that

    <(r, l, s), (r', l', s')> = l.l' - r s' - r' s.

The chart theta_v is the identity on v-perp: classes on M(v) are written
in Mukai coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import gcd
from typing import Sequence

from . import lattice as lat
from .errors import (
    AmpleNotPositive,
    BetaNotInLambda,
    DimensionMismatch,
    NegativeDim,
    NoSolution,
    NotSymmetricVector,
    NotUnique,
    OddSquare,
    PreconditionError,
    WrongSignature,
)
from .lattice import Lattice, Vector


@dataclass(frozen=True)
class K3AlgebraicData:
    ns: Lattice
    ell: Vector
    ample: Vector
    eldpos: bool = False
    picint: bool = False

    def __post_init__(self):
        ns = self.ns if isinstance(self.ns, Lattice) else Lattice(self.ns)
        object.__setattr__(self, "ns", ns)
        object.__setattr__(self, "ell", lat.as_vector(self.ell))
        object.__setattr__(self, "ample", lat.as_vector(self.ample))
        if len(self.ell) != ns.rank or len(self.ample) != ns.rank:
            raise DimensionMismatch("ell and ample must live in NS")
        if lat.norm(ns, self.ell) % 2:
            raise OddSquare("ell^2 is odd; K3 Neron-Severi lattices are even")
        if lat.norm(ns, self.ample) <= 0:
            raise AmpleNotPositive("(D, D) must be positive")
        if self.eldpos and self.ell_dot_ample <= 0:
            raise PreconditionError("ell.D > 0 was asserted but fails")
        if self.picint and not self.satisfies_picint():
            raise PreconditionError("A.D is not a multiple of ell.D for every divisor A")

    @property
    def rho(self) -> int:
        return self.ns.rank

    @property
    def ell_square(self) -> int:
        return lat.norm(self.ns, self.ell)

    @property
    def genus(self) -> int:
        """g with ell^2 = 2g - 2."""
        return self.ell_square // 2 + 1

    @property
    def ell_dot_ample(self) -> int:
        return lat.bilinear(self.ns, self.ell, self.ample)

    def satisfies_picint(self) -> bool:
        d = self.ell_dot_ample
        if d == 0:
            return False
        rho = self.rho
        basis = [tuple(int(i == j) for j in range(rho)) for i in range(rho)]
        return all(lat.bilinear(self.ns, b, self.ample) % d == 0 for b in basis)

    def to_json(self) -> dict:
        return {
            "ns_gram": [list(r) for r in self.ns.gram],
            "ell": list(self.ell),
            "ample": list(self.ample),
        }

    @classmethod
    def from_json(cls, data: dict) -> "K3AlgebraicData":
        return cls(Lattice(data["ns_gram"]), data["ell"], data["ample"])


def picard_rank_one(ell_square: int) -> K3AlgebraicData:
    """NS = Z ell with ell ample of the given square."""
    return K3AlgebraicData(Lattice(((ell_square,),)), (1,), (1,))


@dataclass(frozen=True)
class MukaiVector:
    r: int
    ell_part: Vector = field(default=())
    s: int = 0

    def __post_init__(self):
        object.__setattr__(self, "r", int(self.r))
        object.__setattr__(self, "s", int(self.s))
        object.__setattr__(self, "ell_part", lat.as_vector(self.ell_part))

    @property
    def coords(self) -> Vector:
        return (self.r, *self.ell_part, self.s)

    @classmethod
    def from_coords(cls, c: Sequence[int]) -> "MukaiVector":
        return cls(c[0], tuple(c[1:-1]), c[-1])

    def __add__(self, other: "MukaiVector") -> "MukaiVector":
        return MukaiVector.from_coords([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "MukaiVector") -> "MukaiVector":
        return MukaiVector.from_coords([a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> "MukaiVector":
        return MukaiVector.from_coords([-a for a in self.coords])

    def scale(self, k: int) -> "MukaiVector":
        return MukaiVector.from_coords([k * a for a in self.coords])

    def to_json(self) -> dict:
        return {"r": self.r, "ell": list(self.ell_part), "s": self.s}

    @classmethod
    def from_json(cls, data: dict) -> "MukaiVector":
        return cls(data["r"], data["ell"], data["s"])


def unit(K: K3AlgebraicData) -> MukaiVector:
    return MukaiVector(1, (0,) * K.rho, 0)


def eta(K: K3AlgebraicData) -> MukaiVector:
    return MukaiVector(0, (0,) * K.rho, 1)


def eta_minus_one(K: K3AlgebraicData) -> MukaiVector:
    return MukaiVector(-1, (0,) * K.rho, 1)


def divisor(K: K3AlgebraicData, m: Sequence[int]) -> MukaiVector:
    return MukaiVector(0, m, 0)


def mukai_lattice(K: K3AlgebraicData) -> Lattice:
    """Gram matrix of the rank rho+2 algebraic Mukai lattice."""
    rho = K.rho
    n = rho + 2
    G = [[0] * n for _ in range(n)]
    G[0][n - 1] = G[n - 1][0] = -1
    for i in range(rho):
        for j in range(rho):
            G[i + 1][j + 1] = K.ns.gram[i][j]
    return Lattice(G)


def _check(K: K3AlgebraicData, *vs: MukaiVector) -> None:
    for v in vs:
        if len(v.ell_part) != K.rho:
            raise DimensionMismatch(f"ell part of length {len(v.ell_part)}, NS rank {K.rho}")


def mukai_pairing(K: K3AlgebraicData, u: MukaiVector, w: MukaiVector) -> int:
    _check(K, u, w)
    return lat.bilinear(K.ns, u.ell_part, w.ell_part) - u.r * w.s - w.r * u.s


def dual(u: MukaiVector) -> MukaiVector:
    return MukaiVector(u.r, tuple(-x for x in u.ell_part), u.s)


def cup(K: K3AlgebraicData, u: MukaiVector, w: MukaiVector) -> MukaiVector:
    """Cup product in H^0 + H^2 + H^4, truncated above degree 4."""
    _check(K, u, w)
    return MukaiVector(
        u.r * w.r,
        tuple(u.r * b + w.r * a for a, b in zip(u.ell_part, w.ell_part)),
        u.r * w.s + w.r * u.s + lat.bilinear(K.ns, u.ell_part, w.ell_part),
    )


def exp_neg(K: K3AlgebraicData, ell: Sequence[int] | None = None) -> MukaiVector:
    """e^{-ell} = 1 - ell + (ell^2 / 2) eta."""
    ell = K.ell if ell is None else lat.as_vector(ell)
    sq = lat.norm(K.ns, ell)
    if sq % 2:
        raise OddSquare("e^{-ell} needs ell^2 even")
    return MukaiVector(1, tuple(-x for x in ell), sq // 2)


def moduli_dim(K: K3AlgebraicData, v: MukaiVector) -> int:
    d = 2 + mukai_pairing(K, v, v)
    if d < 0:
        raise NegativeDim(f"<v, v> = {d - 2} < -2")
    return d


# ------------------------------------------------------------ genericity


@dataclass(frozen=True)
class WallWitness:
    r0: int
    ell0: Vector
    m: Vector

    def to_json(self) -> dict:
        return {"r0": self.r0, "ell0": list(self.ell0), "m": list(self.m)}


def wall_bound(K: K3AlgebraicData, v: MukaiVector) -> int:
    """r^2 <v, v> + 2 r^4: walls have -bound <= 4 m^2 < 0."""
    return v.r**2 * mukai_pairing(K, v, v) + 2 * v.r**4


def is_v_generic(K: K3AlgebraicData, v: MukaiVector) -> tuple[bool, list[WallWitness]]:
    """Check whether the ample class is v-generic; report every wall.

    For each 0 < r0 < r we enumerate the negative definite lattice
    D-perp in NS for m with 4 (m, m) >= -bound and keep those with
    m + r0 ell divisible by r, which gives ell0 = (m + r0 ell) / r.
    """
    _check(K, v)
    if v.r < 2:
        raise PreconditionError("v-genericity needs r >= 2")
    sig = lat.signature(K.ns)
    if sig != lat.Signature(1, K.rho - 1, 0):
        raise WrongSignature(f"NS signature {tuple(sig)}, expected (1, rho - 1)")
    r = v.r
    bound = wall_bound(K, v)
    if bound <= 0:
        return True, []
    basis = lat.orthogonal_complement(K.ns, [K.ample])
    perp = lat.sublattice(K.ns, basis)
    # 4 m^2 >= -bound  <=>  m^2 >= -floor(bound / 4)
    lower = -(bound // 4)
    if lower >= 0 or perp.rank == 0:
        return True, []
    ms = []
    for c in lat.enumerate_bounded_norm(perp, lower):
        ms.append(tuple(sum(ci * b[k] for ci, b in zip(c, basis)) for k in range(K.rho)))
    ms.sort()
    walls = []
    for r0 in range(1, r):
        for m in ms:
            num = [mk + r0 * lk for mk, lk in zip(m, v.ell_part)]
            if all(x % r == 0 for x in num):
                walls.append(WallWitness(r0, tuple(x // r for x in num), m))
    return not walls, walls


# --------------------------------------------------------------- v-perp


def v_perp_basis(K: K3AlgebraicData, v: MukaiVector) -> list[MukaiVector]:
    _check(K, v)
    if not any(v.coords):
        raise PreconditionError("v must be nonzero")
    basis = lat.orthogonal_complement(mukai_lattice(K), [v.coords])
    return [MukaiVector.from_coords(b) for b in basis]


def reflection_eta_minus_one(K: K3AlgebraicData, alpha: MukaiVector) -> MukaiVector:
    """R(alpha) = -alpha + <alpha, eta - 1> (eta - 1)."""
    e = eta_minus_one(K)
    return (-alpha) + e.scale(mukai_pairing(K, alpha, e))


def h_v(K: K3AlgebraicData, v: MukaiVector) -> MukaiVector:
    """The square-2 class eta - 1 in v-perp, for v = r + ell + r eta."""
    _check(K, v)
    if v.r != v.s:
        raise NotSymmetricVector(f"v = ({v.r}, ., {v.s}) has r != s")
    h = eta_minus_one(K)
    assert mukai_pairing(K, h, v) == 0
    assert mukai_pairing(K, h, h) == 2
    return h


# ----------------------------------------------------------------- T_beta


def in_lambda(beta: MukaiVector, ell: Sequence[int]) -> int | None:
    """k with beta.ell_part = k * ell, or None."""
    if not any(ell):
        return 0 if not any(beta.ell_part) else None
    i = next(i for i, x in enumerate(ell) if x)
    if beta.ell_part[i] % ell[i]:
        return None
    k = beta.ell_part[i] // ell[i]
    return k if all(b == k * x for b, x in zip(beta.ell_part, ell)) else None


def T_beta(
    K: K3AlgebraicData,
    beta: MukaiVector,
    alpha: MukaiVector,
    ell: Sequence[int] | None = None,
) -> MukaiVector:
    """alpha_0 beta - <e^{-ell} alpha, 1 + eta> (1 + eta) - e^{-ell} alpha."""
    ell = K.ell if ell is None else lat.as_vector(ell)
    _check(K, beta, alpha)
    if in_lambda(beta, ell) is None:
        raise BetaNotInLambda("beta must lie in span(1, ell, eta)")
    one_plus_eta = unit(K) + eta(K)
    twisted = cup(K, exp_neg(K, ell), alpha)
    return beta.scale(alpha.r) - one_plus_eta.scale(mukai_pairing(K, twisted, one_plus_eta)) - twisted


def is_isometric_involution(
    K: K3AlgebraicData, op, basis: Sequence[MukaiVector], v: MukaiVector
) -> bool:
    images = [op(a) for a in basis]
    if any(mukai_pairing(K, t, v) != 0 for t in images):
        return False
    if any(op(t) != a for t, a in zip(images, basis)):
        return False
    n = len(basis)
    return all(
        mukai_pairing(K, images[i], images[j]) == mukai_pairing(K, basis[i], basis[j])
        for i in range(n)
        for j in range(i, n)
    )


def default_beta_bound(g: int) -> int:
    return 2 * g + 10


def solve_involution_beta(K: K3AlgebraicData, v: MukaiVector, bound: int | None = None) -> MukaiVector:
    """The unique beta = b0 + b2 ell + b4 eta in v-perp making T_beta an isometric
    involution of v-perp, searched over |b_i| <= bound."""
    _check(K, v)
    ell = v.ell_part
    if v.r != 2 or v.s != 2:
        raise PreconditionError("the involution solver needs v = 2 + ell + 2 eta")
    if gcd(*ell) != 1:
        raise PreconditionError("ell must be primitive")
    sq = lat.norm(K.ns, ell)
    g = sq // 2 + 1
    if bound is None:
        bound = default_beta_bound(g)
    basis = v_perp_basis(K, v)
    solutions = []
    # <beta, v> = b2 ell^2 - 2 b0 - 2 b4 = 0 fixes b4
    for b0, b2 in product(range(-bound, bound + 1), repeat=2):
        twice_b4 = b2 * sq - 2 * b0
        if twice_b4 % 2:
            continue
        b4 = twice_b4 // 2
        if abs(b4) > bound:
            continue
        beta = MukaiVector(b0, tuple(b2 * x for x in ell), b4)
        if is_isometric_involution(K, lambda a: T_beta(K, beta, a, ell), basis, v):
            solutions.append(beta)
    if not solutions:
        raise NoSolution(f"no involutive beta with |b_i| <= {bound}; retry with a larger bound")
    if len(solutions) > 1:
        raise NotUnique(f"{len(solutions)} involutive betas found: {solutions}")
    return solutions[0]


def beta_coefficients(K: K3AlgebraicData, beta: MukaiVector, ell: Sequence[int] | None = None) -> tuple[int, int, int]:
    ell = K.ell if ell is None else lat.as_vector(ell)
    k = in_lambda(beta, ell)
    if k is None:
        raise BetaNotInLambda("beta must lie in span(1, ell, eta)")
    return beta.r, k, beta.s


def theta_class(K: K3AlgebraicData) -> MukaiVector:
    """c1(Theta(v)) = -(g - 3) - ell - 2 eta for v = 2 + ell + 2 eta."""
    g = K.genus
    return MukaiVector(-(g - 3), tuple(-x for x in K.ell), -2)


def delta_class(K: K3AlgebraicData) -> MukaiVector:
    """c1(Delta(v)) = 2 + ell + (g - 3) eta for v = 2 + ell + 2 eta."""
    g = K.genus
    return MukaiVector(2, K.ell, g - 3)
