"""Solve for the involutive beta over a range of genera and time each search."""

import argparse
import time

from hklattice import mukai as mk


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--gmin", type=int, default=4)
    parser.add_argument("--gmax", type=int, default=12)
    args = parser.parse_args()
    v = mk.MukaiVector(2, (1,), 2)
    for g in range(args.gmin, args.gmax + 1):
        K = mk.picard_rank_one(2 * g - 2)
        t0 = time.perf_counter()
        beta = mk.solve_involution_beta(K, v)
        dt = time.perf_counter() - t0
        image = mk.reflection_eta_minus_one(K, beta)
        print(f"g={g:2d}  beta={mk.beta_coefficients(K, beta)}  R(beta)={image.coords}  {dt * 1000:.1f} ms")


if __name__ == "__main__":
    main()
