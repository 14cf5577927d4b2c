"""Reproductions of the standalone numeric claims, as one runnable suite."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import fixtures as fx
from .dynamics import build_psi, classify, fixed_sublattice, p3xp3_example
from .hilbert import (
    bb_form,
    degree2_classes,
    dim_quadrics,
    fujiki_constant,
    fujiki_top_power,
    hilbert_h,
    rr_chi,
    strange_duality_dims,
    theta_w_coords,
    w_vector,
)
from .lattice import Lattice
from .mukai import (
    MukaiVector,
    beta_coefficients,
    delta_class,
    dual,
    mukai_pairing,
    picard_rank_one,
    reflection_eta_minus_one,
    solve_involution_beta,
    theta_class,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    expected: object
    computed: object
    passed: bool
    paper_location: str

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "expected": _jsonable(self.expected),
            "computed": _jsonable(self.computed),
            "passed": self.passed,
            "paper_location": self.paper_location,
        }


def _jsonable(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else str(x)
    if isinstance(x, (tuple, list)):
        return [_jsonable(y) for y in x]
    return x


def result(name: str, expected, computed, where: str) -> CheckResult:
    return CheckResult(name, expected, computed, expected == computed, where)


# ------------------------------------------------ one-variable Chern series


def series_mul(a: Sequence[Fraction], b: Sequence[Fraction], deg: int) -> list[Fraction]:
    out = [Fraction(0)] * (deg + 1)
    for i, x in enumerate(a[: deg + 1]):
        for j, y in enumerate(b[: deg + 1 - i]):
            out[i + j] += x * y
    return out


def series_inv(a: Sequence[Fraction], deg: int) -> list[Fraction]:
    if a[0] == 0:
        raise ZeroDivisionError("constant term must be invertible")
    out = [Fraction(1) / a[0]]
    for k in range(1, deg + 1):
        s = sum((a[i] * out[k - i] for i in range(1, min(k, len(a) - 1) + 1)), Fraction(0))
        out.append(-s / a[0])
    return out


def series_pow(a: Sequence[Fraction], e: int, deg: int) -> list[Fraction]:
    out = [Fraction(1)] + [Fraction(0)] * deg
    for _ in range(e):
        out = series_mul(out, a, deg)
    return out


def quadric_chern_series(deg: int = 4) -> list[Fraction]:
    """c(T_Q) = (1 + H)^{N+1} / (1 + d H) for a degree-d hypersurface Q in P^N."""
    one_h = [Fraction(1), Fraction(1)]
    num = series_pow(one_h, fx.QUADRIC_AMBIENT_DIM + 1, deg)
    den = [Fraction(1), Fraction(fx.QUADRIC_DEGREE)]
    return series_mul(num, series_inv(den, deg), deg)


# ---------------------------------------------------------------- checks


def check_normal_bundle_46() -> CheckResult:
    # T_S -> T_Q|S -> N with c1(T_S) = 0, so c2(N) = c2(T_Q)|S - c2(T_S)
    c2_coeff = quadric_chern_series()[2]
    value = c2_coeff * fx.DEG_S - fx.K3_EULER
    return result(
        "int_S c2(N_{S/Q0})", 46, value, "dual of Y: projection of S into the quadric Q0"
    )


def quadric_plane_classes(i: int = 0) -> tuple[int, int]:
    """[S] = x A + y B in H^4(Q0) from [S].(A + B) = deg S and
    (Lambda . S) = (g - 1) +- i on the two plane families."""
    x, y = fx.GENUS_S - 1 + i, fx.GENUS_S - 1 - i
    assert x + y == fx.DEG_S
    return x, y


def quadric_selfint(i: int = 0) -> int:
    # H^4(Q0) = Z A + Z B with A^2 = B^2 = 1, A.B = 0
    x, y = quadric_plane_classes(i)
    return x * x + y * y


def check_quadric_selfint_50() -> CheckResult:
    return result("[S]^2 in Q0", 50, quadric_selfint(0), "dual of Y: self-intersection of S in Q0")


def check_fujiki_12_and_degY_6() -> tuple[CheckResult, ...]:
    ns = Lattice(((2,),))
    h = hilbert_h((1,), 0)  # any class of square 2 on S^[2]
    top = fujiki_top_power(ns, h)
    deg_y = Fraction(top, fx.MAP_DEGREE)
    deg_sigma_prime = fx.DISCRIMINANT_DEGREE - fx.I_F_DEGREE
    return (
        result("Fujiki constant c(2)", 3, fujiki_constant(2).c, "Fujiki constant of S^[n]"),
        result("int h^4 on M(v)", 12, top, "non-degeneracy of Y: h_v^4"),
        result("deg Y", 6, deg_y, "the 4-dimensional case: deg Y"),
        result("deg Sigma'", 6, deg_sigma_prime, "the 4-dimensional case: Sigma = |I_F(2)| + Sigma'"),
    )


@dataclass(frozen=True)
class MarkmanRow:
    r: int
    g_max: int
    complement_codim: int


def markman_g_max(r: int, g_limit: int = 10_000) -> int:
    """Largest g with <v, v> <= 4r - 2 for v = r + ell + r eta, ell^2 = 2g - 2."""
    best = None
    for g in range(2, g_limit):
        K = picard_rank_one(2 * g - 2)
        v = MukaiVector(r, (1,), r)
        if mukai_pairing(K, v, v) <= 4 * r - 2:
            best = g
        else:
            break
    if best is None:
        raise ValueError(f"no g satisfies the bound for r = {r}")
    return best


def markman_table(r_max: int) -> list[MarkmanRow]:
    if r_max < 1:
        raise ValueError("r_max >= 1")
    return [MarkmanRow(r, markman_g_max(r), 2 * r + 1) for r in range(1, r_max + 1)]


def check_beta_and_theta_delta(g: int) -> CheckResult:
    if not 4 <= g <= 12:
        raise ValueError("4 <= g <= 12")
    K = picard_rank_one(2 * g - 2)
    v = MukaiVector(2, (1,), 2)
    beta = solve_involution_beta(K, v)
    image = reflection_eta_minus_one(K, beta)
    expected = ((-(g - 3), -1, -2), delta_class(K).coords)
    computed = (beta_coefficients(K, beta), image.coords)
    ok_theta = beta == theta_class(K)
    return CheckResult(
        f"beta and R(Theta) = Delta, g={g}",
        expected,
        computed,
        expected == computed and ok_theta,
        "Mukai reflection, r = 2: beta, c1(Theta), c1(Delta)",
    )


def check_markman(r: int) -> CheckResult:
    return result(f"g_max(r={r})", r * r + 2 * r, markman_g_max(r), "Markman: <v, v> <= 4r - 2")


def check_strange_duality(g: int) -> CheckResult:
    K = picard_rank_one(2 * g - 2)
    v = MukaiVector(2, (1,), 2)
    sd = strange_duality_dims(K, v, w_vector(K))
    computed = (rr_chi(g - 4, 2) - 1, sd.orthogonal, sd.chi0 - 1)
    expected = (dim_quadrics(g), True, dim_quadrics(g))
    return result(f"strange duality dims, g={g}", expected, computed, "strange duality: chi = binom(n0+n1, n0)")


def check_determinant_class_on_s2() -> CheckResult:
    K = picard_rank_one(10)
    v = MukaiVector(2, (1,), 2)
    c1 = theta_w_coords(K, -dual(v))
    return result("c1(L(v)) on S^[2]", ((1,), -2), (c1.mu_part, c1.xi_coeff), "strange duality: c1(L(v)) = mu(ell) - r xi_2")


def check_degree2(t: int) -> CheckResult:
    g = 2 + t * t
    ns = Lattice(((2 * g - 2,),))
    found = degree2_classes(ns, 2, max(t, 1))
    target = hilbert_h((1,), t)
    ok = any(c.coords in (target.coords, tuple(-x for x in target.coords)) for c in found)
    square = bb_form(ns, target, target)
    return CheckResult(
        f"mu(h_S) - {t} xi_2 has square 2 at g={g}",
        (2, True),
        (square, ok),
        square == 2 and ok,
        "another example: g = 2 + t^2",
    )


def check_hg_square(g: int) -> CheckResult:
    ns = Lattice(((2 * g - 2,),))
    hg = hilbert_h((1,), 1, n=g - 1)
    return result(f"(h_g, h_g), g={g}", 2, bb_form(ns, hg, hg), "Beauville involution: h_g")


def check_p3xp3_dynamics() -> CheckResult:
    L, h1, h2 = p3xp3_example()
    psi = build_psi(L, h1, h2)
    spectral = classify(psi)
    fixed = fixed_sublattice(psi)
    computed = (L.gram[0][1], psi.a, spectral.trace, spectral.kind.value, len(fixed))
    return result("P3 x P3: ell1.ell2, a, trace, kind, rank Fix", (6, 4, 14, "hyperbolic", 1), computed, "two involutions: S in P3 x P3")


def default_checks() -> list[Callable[[], CheckResult | Iterable[CheckResult]]]:
    checks: list = [
        check_normal_bundle_46,
        check_quadric_selfint_50,
        check_fujiki_12_and_degY_6,
        check_determinant_class_on_s2,
        check_p3xp3_dynamics,
    ]
    checks += [lambda g=g: check_beta_and_theta_delta(g) for g in range(4, 13)]
    checks += [lambda r=r: check_markman(r) for r in (1, 2, 3)]
    checks += [lambda g=g: check_strange_duality(g) for g in range(4, 9)]
    checks += [lambda t=t: check_degree2(t) for t in (0, 1, 2)]
    checks += [lambda g=g: check_hg_square(g) for g in (3, 6, 8)]
    return checks


def run_all(checks=None) -> list[CheckResult]:
    if checks is None:
        checks = default_checks()
    out = []
    for check in checks:
        res = check()
        if isinstance(res, CheckResult):
            out.append(res)
        else:
            out.extend(res)
    return out


def all_passed(results: Sequence[CheckResult]) -> bool:
    return all(r.passed for r in results)


def format_table(results: Sequence[CheckResult]) -> str:
    rows = [("status", "check", "expected", "computed", "where")]
    for r in results:
        rows.append(("PASS" if r.passed else "FAIL", r.name, str(_jsonable(r.expected)), str(_jsonable(r.computed)), r.paper_location))
    widths = [max(len(row[i]) for row in rows) for i in range(4)]
    lines = []
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)) + "  " + row[4])
    return "\n".join(lines)
