"""Exact arithmetic in Q(sqrt d)."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt, sqrt


def squarefree_split(d: int) -> tuple[int, int]:
    """(k, d0) with d = k^2 d0 and d0 squarefree, for d > 0."""
    k, f = 1, 2
    while f * f <= d:
        while d % (f * f) == 0:
            d //= f * f
            k *= f
        f += 1
    return k, d


class QuadraticNumber:
    """p + q sqrt(d) with rational p, q and a fixed non-square integer d > 0.

    d is reduced to its squarefree part on construction, so equal numbers
    compare equal however the radicand was written.
    """

    __slots__ = ("p", "q", "d")

    def __init__(self, p, q=0, d: int = 0):
        self.p = Fraction(p)
        self.q = Fraction(q)
        self.d = int(d)
        if self.q and (self.d <= 0 or isqrt(self.d) ** 2 == self.d):
            raise ValueError(f"sqrt({d}) is rational; use a Fraction")
        if self.d > 0:
            k, self.d = squarefree_split(self.d)
            self.q *= k

    def _coerce(self, other) -> "QuadraticNumber":
        if isinstance(other, QuadraticNumber):
            if other.q and self.q and other.d != self.d:
                raise ValueError("mixing different quadratic fields")
            return other
        return QuadraticNumber(other, 0, self.d)

    def _field(self, other: "QuadraticNumber") -> int:
        return self.d if self.q or not other.q else other.d

    def __add__(self, other):
        o = self._coerce(other)
        return QuadraticNumber(self.p + o.p, self.q + o.q, self._field(o))

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.p, -self.q, self.d)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        d = self._field(o)
        return QuadraticNumber(self.p * o.p + self.q * o.q * d, self.p * o.q + self.q * o.p, d)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadraticNumber":
        return QuadraticNumber(self.p, -self.q, self.d)

    def norm(self) -> Fraction:
        return self.p * self.p - self.q * self.q * self.d

    def trace(self) -> Fraction:
        return 2 * self.p

    def __truediv__(self, other):
        o = self._coerce(other)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt d)")
        num = self * o.conjugate()
        return QuadraticNumber(num.p / n, num.q / n, num.d)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.q == 0 and self.p == other
        if isinstance(other, QuadraticNumber):
            return self.p == other.p and self.q == other.q and (self.q == 0 or self.d == other.d)
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.q, self.d if self.q else 0))

    def __bool__(self):
        return bool(self.p) or bool(self.q)

    def __float__(self):
        return float(self.p) + float(self.q) * sqrt(self.d)

    def __repr__(self):
        return f"QuadraticNumber({self.p}, {self.q}, {self.d})"
