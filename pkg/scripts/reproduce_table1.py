"""Print the closed-form energies next to the published table and the oracle."""

from exptype.core import Branch
from exptype.oracle import compare_with_closed_form
from exptype.registry import BUILTIN, TABLE1
from exptype.spectrum import energy_level


def main():
    print(f"{'mol':4} {'branch':6} {'n':>3} {'closed':>11} {'published':>11} {'|d|':>9} {'oracle':>11}")
    oracle = {}
    for name, mol in BUILTIN.items():
        for c in compare_with_closed_form(mol, [0, 2, 4, 10]):
            oracle[name, c.n] = c.oracle
    for (name, branch, n), published in TABLE1.items():
        e = energy_level(BUILTIN[name].potential(), branch, n).energy
        o = oracle.get((name, n)) if branch is Branch.MORSE else None
        o_txt = f"{o:11.6f}" if o is not None else f"{'-':>11}"
        print(f"{name:4} {branch.value:6} {n:3d} {e:11.6f} {published:11.5f} {abs(e - published):9.2e} {o_txt}")


if __name__ == "__main__":
    main()
