"""Fixed geometric input data used by the checks and the example lattices."""

from __future__ import annotations

from math import factorial

# Euler number of a K3 surface: int_S c2(T_S).
K3_EULER = 24
# Genus-6 K3 in P^6 of degree 2g - 2.
GENUS_S = 6
DEG_S = 2 * GENUS_S - 2
# The quadric Q0 is a hypersurface of degree 2 in P^5.
QUADRIC_AMBIENT_DIM = 5
QUADRIC_DEGREE = 2
# Quadrics in P^6 are symmetric 7x7 matrices: the singular ones form a
# discriminant hypersurface of degree 7; |I_F(2)| is a hyperplane in it.
DISCRIMINANT_DEGREE = GENUS_S + 1
I_F_DEGREE = 1
# The map X -> Y is a double cover.
MAP_DEGREE = 2


def multinomial(*ks: int) -> int:
    out = factorial(sum(ks))
    for k in ks:
        out //= factorial(k)
    return out


def p3xp3_intersection(i: int, j: int) -> int:
    """int_{P^3 x P^3} H1^i H2^j (H1 + H2)^4, with H1^3 H2^3 = 1."""
    a, b = 3 - i, 3 - j
    if a < 0 or b < 0 or a + b != 4:
        return 0
    return multinomial(a, b)


def p3xp3_ns_gram() -> list[list[int]]:
    """Intersection form on (ell_1, ell_2) for S = four (1,1) divisors in P^3 x P^3."""
    return [
        [p3xp3_intersection(2, 0), p3xp3_intersection(1, 1)],
        [p3xp3_intersection(1, 1), p3xp3_intersection(0, 2)],
    ]
