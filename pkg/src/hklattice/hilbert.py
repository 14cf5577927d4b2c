"""Beauville-Bogomolov lattice of S^[n] and the dimension counts around it.

H^2(S^[n]) = mu(H^2(S)) + Z xi_n, orthogonal, with (xi_n, xi_n) = -2(n-1).
Only the algebraic part mu(NS) + Z xi_n is modelled.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb, factorial, gcd, isqrt
from typing import Sequence

from . import lattice as lat
from .errors import DimensionMismatch, NotInWPerp, PreconditionError
from .lattice import Lattice, Vector
from .mukai import K3AlgebraicData, MukaiVector, dual, moduli_dim, mukai_pairing

SIGN_CONVENTIONS = ("paper", "opposite")


@dataclass(frozen=True)
class HilbertClass:
    mu_part: Vector
    xi_coeff: int
    n: int

    def __post_init__(self):
        object.__setattr__(self, "mu_part", lat.as_vector(self.mu_part))
        object.__setattr__(self, "xi_coeff", int(self.xi_coeff))
        if self.n < 2:
            raise PreconditionError("S^[n] needs n >= 2")

    @property
    def coords(self) -> Vector:
        return (*self.mu_part, self.xi_coeff)

    def to_json(self) -> dict:
        return {"n": self.n, "mu": list(self.mu_part), "xi": self.xi_coeff}

    @classmethod
    def from_json(cls, data: dict) -> "HilbertClass":
        return cls(data["mu"], data["xi"], data["n"])


def xi(ns: Lattice, n: int) -> HilbertClass:
    return HilbertClass((0,) * ns.rank, 1, n)


def hilbert_lattice(ns: Lattice, n: int) -> Lattice:
    """Gram matrix on (mu(NS basis), xi_n)."""
    rho = ns.rank
    G = [list(row) + [0] for row in ns.gram] + [[0] * rho + [-2 * (n - 1)]]
    return Lattice(G)


def bb_form(ns: Lattice, a: HilbertClass, b: HilbertClass) -> int:
    if a.n != b.n:
        raise DimensionMismatch(f"classes on S^[{a.n}] and S^[{b.n}]")
    return lat.bilinear(ns, a.mu_part, b.mu_part) - 2 * (a.n - 1) * a.xi_coeff * b.xi_coeff


@dataclass(frozen=True)
class FujikiData:
    n: int
    c: Fraction


def fujiki_constant(n: int) -> FujikiData:
    """(2n)! / (n! 2^n), the odd double factorial (2n - 1)!!."""
    if n < 1:
        raise PreconditionError("n >= 1")
    return FujikiData(n, Fraction(factorial(2 * n), factorial(n) * 2**n))


def fujiki_top_power(ns: Lattice, a: HilbertClass) -> int:
    """int a^{2n} = c_X (a, a)^n."""
    val = fujiki_constant(a.n).c * bb_form(ns, a, a) ** a.n
    assert val.denominator == 1
    return int(val)


def _canonical_sign(v: Vector) -> Vector:
    first = next((x for x in v if x), 0)
    return v if first >= 0 else tuple(-x for x in v)


def degree2_classes(ns: Lattice, n: int, box: int) -> list[HilbertClass]:
    """Classes mu(m) + t xi_n of BB square 2, coordinates bounded by box,
    one representative per +-pair (first nonzero coordinate positive)."""
    if box < 0 or n < 2:
        raise PreconditionError("box >= 0 and n >= 2")
    xi_sq = 2 * (n - 1)
    seen = set()
    for m in product(range(-box, box + 1), repeat=ns.rank):
        mm = lat.norm(ns, m)
        # mm - xi_sq t^2 = 2
        rest = mm - 2
        if rest < 0 or rest % xi_sq:
            continue
        t2 = rest // xi_sq
        t = isqrt(t2)
        if t * t != t2 or t > box:
            continue
        for tt in {t, -t}:
            seen.add(_canonical_sign((*m, tt)))
    return [HilbertClass(c[:-1], c[-1], n) for c in sorted(seen, reverse=True)]


def is_primitive(h: HilbertClass) -> bool:
    return gcd(*h.coords) == 1


def generalized_binomial(top: int, k: int) -> int:
    """binom(top, k) as the polynomial top (top-1)...(top-k+1) / k!."""
    if k < 0:
        return 0
    if top >= 0:
        return comb(top, k)
    num = 1
    for i in range(k):
        num *= top - i
    return num // factorial(k)


def rr_chi(n: int, square: int) -> int:
    """chi(L) = binom(square/2 + n + 1, n) on a deformation of (K3)^[n]."""
    if n < 0:
        raise PreconditionError("n >= 0")
    if square % 2:
        raise PreconditionError("the BB square of an integral class is even here")
    return generalized_binomial(square // 2 + n + 1, n)


def dim_quadrics(g: int) -> int:
    """dim |I_S(2)| for S of genus g in P^g: (g - 2)(g - 3)/2 - 1."""
    if g < 3:
        raise PreconditionError("g >= 3")
    return (g - 2) * (g - 3) // 2 - 1


@dataclass(frozen=True)
class StrangeDualityDims:
    orthogonal: bool
    n0: int
    n1: int
    chi0: int
    chi1: int
    equal: bool

    def to_json(self) -> dict:
        return {
            "orthogonal": self.orthogonal,
            "n0": self.n0,
            "n1": self.n1,
            "chi0": self.chi0,
            "chi1": self.chi1,
            "equal": self.equal,
        }


def strange_duality_dims(K: K3AlgebraicData, v0: MukaiVector, v1: MukaiVector) -> StrangeDualityDims:
    dims = []
    for v in (v0, v1):
        d = moduli_dim(K, v)
        if d % 2:
            raise PreconditionError(f"moduli dimension {d} is odd")
        dims.append(d // 2)
    n0, n1 = dims
    chi0 = comb(n0 + n1, n0)
    chi1 = comb(n0 + n1, n1)
    assert chi0 == chi1
    return StrangeDualityDims(
        orthogonal=mukai_pairing(K, v0, dual(v1)) == 0,
        n0=n0,
        n1=n1,
        chi0=chi0,
        chi1=chi1,
        equal=chi0 == chi1,
    )


def w_vector(K: K3AlgebraicData) -> MukaiVector:
    """w = 1 - eta, with M(w) = S^[2]."""
    return MukaiVector(1, (0,) * K.rho, -1)


def theta_w_coords(K: K3AlgebraicData, x: MukaiVector, sign_convention: str = "paper") -> HilbertClass:
    """Write x = (a, m, a) in w-perp as a class on S^[2].

    (1, 0, 1) has square -2 and goes to xi_2 under the "paper" convention,
    which gives theta_w(-v^dual) = mu(ell) - r xi_2 for v = r + ell + r eta;
    "opposite" sends it to -xi_2.
    """
    if sign_convention not in SIGN_CONVENTIONS:
        raise PreconditionError(f"sign convention must be one of {SIGN_CONVENTIONS}")
    if mukai_pairing(K, x, w_vector(K)) != 0:
        raise NotInWPerp(f"<x, 1 - eta> = {x.s - x.r} != 0")
    sign = 1 if sign_convention == "paper" else -1
    return HilbertClass(x.ell_part, sign * x.r, 2)


def hilbert_h(m: Sequence[int], t: int, n: int = 2) -> HilbertClass:
    """mu(m) - t xi_n."""
    return HilbertClass(m, -t, n)
