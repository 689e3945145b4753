"""Measured ladder coefficients and commutators next to the printed claims."""

import argparse
import math

from exptype.core import Branch, derive_params
from exptype.ladder import structure_constants
from exptype.registry import BUILTIN


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--molecule", default="H2", choices=sorted(BUILTIN))
    parser.add_argument("--n-max", type=int, default=10)
    args = parser.parse_args()

    params = derive_params(BUILTIN[args.molecule].potential(), Branch.MORSE)
    rep = structure_constants(params, range(args.n_max + 1))
    print(f"A = {rep.A:.6f}, fixed eps = {rep.eps:.6f}, a1 = {rep.a1:.6f}")
    print(f"{'n':>3} {'lower':>10} {'raise':>6} {'mu':>10} {'paper l0':>10} {'[L-,L0]':>8} {'[L+,L0]':>8}"
          f" {'paper l-':>12} {'paper l+':>9}")
    for n in rep.levels:
        low = rep.lowering[n][0]
        up = rep.raising[n][0]
        mu = rep.commutator[n][0]
        cm = rep.minus_constant.get(n, (math.nan,))[0]
        cp = rep.plus_constant[n][0]
        paper = rep.paper[n]
        print(f"{n:3d} {low:10.4f} {up:6.2f} {mu:10.4f} {paper['commutator_eigenvalue']:10.4f} {cm:8.3f} {cp:8.3f}"
              f" {paper['ell_minus']:12.4f} {paper['ell_plus']:9.4f}")


if __name__ == "__main__":
    main()
