"""Finite-difference error of the Morse ground state against grid size."""

import argparse

from exptype.core import Branch
from exptype.oracle import GridSpec, morse_potential, solve_bound_states
from exptype.registry import BUILTIN
from exptype.spectrum import energy_level


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--molecule", default="H2", choices=sorted(BUILTIN))
    parser.add_argument("--level", type=int, default=0)
    args = parser.parse_args()

    mol = BUILTIN[args.molecule]
    exact = energy_level(mol.potential(), Branch.MORSE, args.level).energy
    prev = None
    print(f"closed form E_{args.level} = {exact:.10f} eV")
    for N in (1001, 2001, 4001, 8001, 16001):
        grid = GridSpec(-mol.r0, 12 * mol.r0, N)
        err = solve_bound_states(morse_potential(mol), mol.M, grid, args.level + 1).eigenvalues[args.level] - exact
        ratio = f"{prev / err:6.3f}" if prev else "     -"
        print(f"N={N:6d}  h={grid.h:.3e} A  error={err: .3e} eV  ratio={ratio}")
        prev = err


if __name__ == "__main__":
    main()
