"""Orbit growth of psi = R_h1 o R_h2 against its spectral radius."""

import argparse

from hklattice import dynamics as dy


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--a", type=int, default=None, help="use the plane [[2, a], [a, 2]] instead of the P3 x P3 lattice")
    parser.add_argument("--k", type=int, default=20)
    parser.add_argument("--x", type=int, nargs="+", default=None, help="start vector (default h1)")
    args = parser.parse_args()

    L, h1, h2 = dy.two_reflection_plane(args.a) if args.a is not None else dy.p3xp3_example()
    psi = dy.build_psi(L, h1, h2)
    spectral = dy.classify(psi)
    print(f"a = {psi.a}, trace = {spectral.trace}, kind = {spectral.kind.value}")
    if spectral.lambda_float is None:
        print(f"order on the plane: {spectral.order}")
        return
    lam = spectral.lambda_float
    print(f"lambda = ({spectral.trace} + sqrt({spectral.disc})) / 2 = {lam:.6f}")
    x = tuple(args.x) if args.x else h1
    pts = dy.orbit(psi, x, args.k)
    for k, ratio in enumerate(dy.growth_ratios(psi, x, args.k), start=1):
        print(f"{k:3d}  |psi^k x| = {dy.sup_norm(pts[k]):>24d}  ratio = {ratio:.6f}  rel.err = {abs(ratio - lam) / lam:.2e}")


if __name__ == "__main__":
    main()
