"""Exact integral lattices.

A lattice is a Gram matrix of Python ints; vectors are plain tuples of
ints read in the coordinates of an explicitly passed lattice.  Nothing in
here touches floating point.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import (
    DimensionMismatch,
    EnumerationLimit,
    NotIsometry,
    NotNegativeDefinite,
    PreconditionError,
    SquareNotTwo,
)

Vector = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

DEFAULT_MAX_ENUM = 10**6


def as_vector(v: Sequence[int]) -> Vector:
    return tuple(int(x) for x in v)


def as_matrix(rows) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


@dataclass(frozen=True)
class Lattice:
    gram: Matrix

    def __post_init__(self):
        gram = as_matrix(self.gram)
        n = len(gram)
        if any(len(row) != n for row in gram):
            raise DimensionMismatch("Gram matrix must be square")
        for i in range(n):
            for j in range(i):
                if gram[i][j] != gram[j][i]:
                    raise PreconditionError("Gram matrix must be symmetric")
        object.__setattr__(self, "gram", gram)

    @property
    def rank(self) -> int:
        return len(self.gram)

    def to_json(self) -> dict:
        return {"rank": self.rank, "gram": [list(row) for row in self.gram]}

    @classmethod
    def from_json(cls, data: dict) -> "Lattice":
        lat = cls(data["gram"])
        if "rank" in data and int(data["rank"]) != lat.rank:
            raise DimensionMismatch(
                f"declared rank {data['rank']} but Gram is {lat.rank}x{lat.rank}"
            )
        return lat


def diagonal(*entries: int) -> Lattice:
    n = len(entries)
    return Lattice(tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n)))


def _check_len(L: Lattice, *vs: Sequence[int]) -> None:
    for v in vs:
        if len(v) != L.rank:
            raise DimensionMismatch(f"vector of length {len(v)} in rank-{L.rank} lattice")


def bilinear(L: Lattice, u: Sequence[int], v: Sequence[int]) -> int:
    _check_len(L, u, v)
    g = L.gram
    n = L.rank
    return sum(u[i] * g[i][j] * v[j] for i in range(n) if u[i] for j in range(n))


def norm(L: Lattice, u: Sequence[int]) -> int:
    """The square (u, u)."""
    return bilinear(L, u, u)


def sublattice(L: Lattice, basis: Sequence[Sequence[int]]) -> Lattice:
    """Gram matrix of the form restricted to ``basis``."""
    return Lattice(tuple(tuple(bilinear(L, b, c) for c in basis) for b in basis))


# ---------------------------------------------------------------- matrices


def transpose(M: Sequence[Sequence]) -> tuple:
    return tuple(zip(*M)) if M else ()


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> tuple:
    Bt = transpose(B)
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in Bt) for row in A)


def matvec(A: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(sum(a * x for a, x in zip(row, v)) for row in A)


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def determinant(M: Sequence[Sequence[int]]) -> int:
    """Fraction-free Bareiss elimination."""
    a = [list(row) for row in M]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# --------------------------------------------------------------- signature


class Signature(NamedTuple):
    positive: int
    negative: int
    null: int


def signature_of(gram: Sequence[Sequence]) -> Signature:
    """Sylvester signature by symmetric congruence diagonalization over Q."""
    a = [[Fraction(x) for x in row] for row in gram]
    n = len(a)
    pos = neg = 0
    active = list(range(n))
    while active:
        p = next((i for i in active if a[i][i] != 0), None)
        if p is None:
            pair = next(
                ((i, j) for i in active for j in active if i != j and a[i][j] != 0), None
            )
            if pair is None:
                break
            i, j = pair
            # e_i -> e_i + e_j makes the diagonal entry 2 a_ij
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            p = i
        d = a[p][p]
        active.remove(p)
        for i in active:
            f = a[i][p] / d
            if f:
                for k in active:
                    a[i][k] -= f * a[p][k]
        for i in active:
            a[i][p] = a[p][i] = Fraction(0)
        if d > 0:
            pos += 1
        else:
            neg += 1
    return Signature(pos, neg, n - pos - neg)


def signature(L: Lattice) -> Signature:
    return signature_of(L.gram)


# --------------------------------------------------------------- isometries


@dataclass(frozen=True)
class Isometry:
    """Integral isometry acting on coordinate columns: v -> matrix @ v."""

    lattice: Lattice
    matrix: Matrix

    def __post_init__(self):
        M = as_matrix(self.matrix)
        n = self.lattice.rank
        if len(M) != n or any(len(row) != n for row in M):
            raise DimensionMismatch(f"matrix shape does not match rank {n}")
        G = self.lattice.gram
        if matmul(matmul(transpose(M), G), M) != G:
            raise NotIsometry("matrix does not preserve the form")
        if determinant(M) not in (1, -1):
            raise NotIsometry("matrix is not unimodular")
        object.__setattr__(self, "matrix", M)

    def __call__(self, v: Sequence[int]) -> Vector:
        _check_len(self.lattice, v)
        return matvec(self.matrix, v)

    @property
    def det(self) -> int:
        return determinant(self.matrix)


def identity(L: Lattice) -> Isometry:
    return Isometry(L, identity_matrix(L.rank))


def reflection_square2(L: Lattice, h: Sequence[int]) -> Isometry:
    """R_h(v) = -v + (v, h) h for a class h of square 2."""
    h = as_vector(h)
    _check_len(L, h)
    hh = norm(L, h)
    if hh != 2:
        raise SquareNotTwo(f"(h, h) = {hh}, expected 2")
    Gh = matvec(L.gram, h)  # row functional v -> (v, h)
    n = L.rank
    M = tuple(tuple(-int(i == j) + h[i] * Gh[j] for j in range(n)) for i in range(n))
    return Isometry(L, M)


def compose(f: Isometry, g: Isometry) -> Isometry:
    """f after g."""
    if f.lattice != g.lattice:
        raise DimensionMismatch("isometries act on different lattices")
    return Isometry(f.lattice, matmul(f.matrix, g.matrix))


# ------------------------------------------------------- integer kernels


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def hermite_rows(rows: Sequence[Sequence[int]]) -> list[Vector]:
    """Row Hermite normal form; zero rows dropped.

    Pivots are positive and entries above a pivot lie in [0, pivot).
    """
    a = [list(r) for r in rows]
    if not a:
        return []
    ncols = len(a[0])
    piv_row = 0
    pivots = []
    for col in range(ncols):
        if piv_row >= len(a):
            break
        for i in range(piv_row + 1, len(a)):
            if a[i][col] == 0:
                continue
            x, y = a[piv_row][col], a[i][col]
            g, s, t = _xgcd(x, y)
            u, w = x // g, y // g
            ra, rb = a[piv_row], a[i]
            a[piv_row] = [s * p + t * q for p, q in zip(ra, rb)]
            a[i] = [u * q - w * p for p, q in zip(ra, rb)]
        if a[piv_row][col] == 0:
            continue
        if a[piv_row][col] < 0:
            a[piv_row] = [-x for x in a[piv_row]]
        p = a[piv_row][col]
        for i in range(piv_row):
            q = a[i][col] // p
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[piv_row])]
        pivots.append(col)
        piv_row += 1
    return [tuple(r) for r in a[:piv_row]]


def integer_kernel(A: Sequence[Sequence[int]], ncols: int) -> list[Vector]:
    """Saturated basis (in Hermite form) of {x in Z^ncols : A x = 0}."""
    B = [list(row) for row in A]
    U = [[int(i == j) for j in range(ncols)] for i in range(ncols)]  # columns are basis

    def colop(j: int, k: int, s: int, t: int, u: int, w: int) -> None:
        # (col_j, col_k) <- (s col_j + t col_k, -w col_j + u col_k)
        for M in (B, U):
            for row in M:
                cj, ck = row[j], row[k]
                row[j] = s * cj + t * ck
                row[k] = -w * cj + u * ck

    p = 0
    for i in range(len(B)):
        if p >= ncols:
            break
        for k in range(p + 1, ncols):
            if B[i][k] == 0:
                continue
            x, y = B[i][p], B[i][k]
            g, s, t = _xgcd(x, y)
            colop(p, k, s, t, x // g, y // g)
        if B[i][p] != 0:
            p += 1
    kernel = [tuple(U[r][c] for r in range(ncols)) for c in range(p, ncols)]
    return hermite_rows(kernel)


def orthogonal_complement(L: Lattice, vs: Sequence[Sequence[int]]) -> list[Vector]:
    """Basis of the saturated sublattice {x : (x, v) = 0 for all v in vs}."""
    _check_len(L, *vs)
    A = [matvec(L.gram, v) for v in vs]  # G symmetric so (x, v) = (G v) . x
    return integer_kernel(A, L.rank)


# ------------------------------------------------------------- enumeration


def _max_enum() -> int:
    return int(os.environ.get("HKLATTICE_MAX_ENUM", DEFAULT_MAX_ENUM))


def _quadratic_decomposition(Q: Sequence[Sequence[int]]):
    """Q(x) = sum_i q[i] * (x_i + sum_{j>i} mu[i][j] x_j)^2, exactly."""
    n = len(Q)
    a = [[Fraction(x) for x in row] for row in Q]
    for i in range(n):
        for j in range(i + 1, n):
            a[j][i] = a[i][j]
            a[i][j] = a[i][j] / a[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                a[k][l] -= a[k][i] * a[i][l]
    q = [a[i][i] for i in range(n)]
    mu = [[a[i][j] if j > i else Fraction(0) for j in range(n)] for i in range(n)]
    return q, mu


def _integers_near(c: Fraction, radius_sq: Fraction) -> list[int]:
    """All integers x with (x - c)^2 <= radius_sq, ascending."""
    out = []
    x = c.numerator // c.denominator
    while (x - c) ** 2 <= radius_sq:
        out.append(x)
        x -= 1
    out.reverse()
    x = c.numerator // c.denominator + 1
    while (x - c) ** 2 <= radius_sq:
        out.append(x)
        x += 1
    return out


def short_vectors(Q: Sequence[Sequence[int]], bound: int, max_count: int | None = None) -> list[Vector]:
    """Fincke-Pohst: all nonzero x with x^T Q x <= bound, Q positive definite."""
    n = len(Q)
    if n == 0 or bound <= 0:
        return []
    limit = _max_enum() if max_count is None else max_count
    q, mu = _quadratic_decomposition(Q)
    x = [0] * n
    out: list[Vector] = []

    def descend(i: int, budget: Fraction) -> None:
        c = -sum((mu[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        for xi in _integers_near(c, budget / q[i]):
            x[i] = xi
            rest = budget - q[i] * (xi - c) ** 2
            if i == 0:
                if any(x):
                    out.append(tuple(x))
                    if len(out) > limit:
                        raise EnumerationLimit(
                            f"more than {limit} vectors; raise HKLATTICE_MAX_ENUM"
                        )
            else:
                descend(i - 1, rest)
        x[i] = 0

    descend(n - 1, Fraction(bound))
    out.sort()
    return out


def enumerate_bounded_norm(
    L: Lattice, lower: int, max_count: int | None = None
) -> list[Vector]:
    """All nonzero x with lower <= (x, x) < 0 in a negative definite lattice."""
    if lower >= 0:
        raise PreconditionError("lower bound must be negative")
    sig = signature(L)
    if sig != Signature(0, L.rank, 0):
        raise NotNegativeDefinite(f"signature {tuple(sig)} is not negative definite")
    Q = [[-x for x in row] for row in L.gram]
    return short_vectors(Q, -lower, max_count)
