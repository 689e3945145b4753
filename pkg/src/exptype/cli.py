"""Command-line interface.

Exit codes: 0 success, 1 verification or tolerance failure, 2 usage or input
error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from .core import Branch, DomainError, derive_params
from .oracle import compare_with_closed_form
from .registry import TABLE1, TABLE1_TOL, MoleculeRegistry, RegistryError
from .spectrum import energy_level
from .states import DivergentNormError, build_state, eval_state_x, Convention
from . import verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".6g")
    if value is None:
        return ""
    return str(value)


def _finite(obj):
    """Non-finite floats become null so the JSON stays strict."""
    if isinstance(obj, float):
        return obj if np.isfinite(obj) else None
    if isinstance(obj, dict):
        return {k: _finite(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_finite(v) for v in obj]
    return obj


def emit(command: str, inputs: dict, columns: list[str], rows: list[dict], passed: bool,
         fmt: str, out) -> None:
    if fmt == "json":
        doc = {"command": command, "inputs": inputs, "rows": rows, "pass": passed}
        out.write(json.dumps(_finite(doc), indent=2, allow_nan=False) + "\n")
        return
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_fmt(row.get(c)) for c in columns])
    out.write(buf.getvalue())


def _levels(text: str) -> list[int]:
    try:
        levels = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise UsageError(f"--levels must be comma-separated integers, got {text!r}") from None
    if not levels or any(n < 0 for n in levels):
        raise UsageError("--levels needs at least one non-negative integer")
    return levels


def cmd_spectrum(args, registry, out) -> int:
    mol = registry[args.molecule]
    branch = Branch.parse(args.branch)
    spec = mol.potential()
    rows = []
    for n in _levels(args.levels):
        lvl = energy_level(spec, branch, n)
        rows.append({"n": n, "E_eV": lvl.energy, "epsilon": lvl.epsilon, "physical": lvl.physical})
    inputs = {"molecule": mol.name, "branch": branch.value, "levels": [r["n"] for r in rows],
              "registry": registry.source}
    emit("spectrum", inputs, ["n", "E_eV", "epsilon", "physical"], rows, True, args.format, out)
    return EXIT_OK


def cmd_table1(args, registry, out) -> int:
    rows = []
    for (name, branch, n), published in TABLE1.items():
        computed = energy_level(registry[name].potential(), branch, n).energy
        delta = abs(computed - published)
        rows.append({"molecule": name, "branch": branch.value, "n": n, "E_computed": computed,
                     "E_published": published, "abs_delta": delta, "pass": delta <= TABLE1_TOL})
    passed = all(r["pass"] for r in rows)
    emit("table1", {"tolerance_eV": TABLE1_TOL, "registry": registry.source},
         ["molecule", "branch", "n", "E_computed", "E_published", "abs_delta"], rows, passed,
         args.format, out)
    return EXIT_OK if passed else EXIT_FAIL


def cmd_verify(args, registry, out) -> int:
    suites = [s.strip() for s in args.suites.split(",") if s.strip()]
    unknown = [s for s in suites if s not in verify.SUITES]
    if unknown or not suites:
        raise UsageError(f"unknown suites {unknown}; choose from {','.join(verify.SUITES)}")
    checks = verify.run(suites)
    rows = [c.to_dict() for c in checks]
    passed = all(c.passed for c in checks)
    emit("verify", {"suites": suites}, ["name", "measured", "tolerance", "pass"], rows, passed,
         args.format, out)
    return EXIT_OK if passed else EXIT_FAIL


def cmd_wavefn(args, registry, out) -> int:
    mol = registry[args.molecule]
    branch = Branch.parse(args.branch)
    if args.level < 0:
        raise UsageError("--level must be >= 0")
    if not args.x_min < args.x_max or args.points < 2:
        raise UsageError("need x_min < x_max and at least 2 points")
    params = derive_params(mol.potential(), branch)
    probe = build_state(params, args.level, Convention.PHYSICAL, normalize=False)
    if probe.formal and args.normalized:
        print(f"error: level {args.level} on the {branch.value} branch has eps = "
              f"{probe.epsilon:.6g} <= 0; its norm diverges", file=sys.stderr)
        return EXIT_FAIL
    state = probe if probe.formal else build_state(params, args.level)
    # exponential branch: z = e^{beta x}; Morse branch: z = e^{-beta x}, wall at x < 0
    beta = branch.sign * params.beta
    x = np.linspace(args.x_min, args.x_max, args.points) * mol.r0
    z = np.exp(beta * x)
    phi = np.atleast_1d(eval_state_x(state, x, beta))
    rows = [{"x": float(xi), "z": float(zi), "phi": float(pi)} for xi, zi, pi in zip(x, z, phi)]
    inputs = {"molecule": mol.name, "branch": branch.value, "n": args.level,
              "x_range_r0": [args.x_min, args.x_max], "points": args.points,
              "epsilon": state.epsilon, "normalized": not state.formal, "formal": state.formal}
    emit("wavefn", inputs, ["x", "z", "phi"], rows, True, args.format, out)
    return EXIT_OK


def cmd_oracle_compare(args, registry, out) -> int:
    mol = registry[args.molecule]
    rows = []
    for c in compare_with_closed_form(mol, _levels(args.levels)):
        ok = c.bound and abs(c.difference) <= verify.ORACLE_TOL
        rows.append({"n": c.n, "E_closed": c.closed_form, "E_oracle": c.oracle,
                     "difference": c.difference, "bound": c.bound, "pass": ok})
    passed = all(r["pass"] for r in rows if r["bound"])
    emit("oracle-compare", {"molecule": mol.name, "tolerance_eV": verify.ORACLE_TOL},
         ["n", "E_closed", "E_oracle", "difference", "bound"], rows, passed, args.format, out)
    return EXIT_OK if passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--registry", default=None, help="JSON molecule registry file")

    mol = argparse.ArgumentParser(add_help=False)
    mol.add_argument("--molecule", required=True)

    branch = argparse.ArgumentParser(add_help=False)
    branch.add_argument("--branch", choices=("exp", "morse"), default="morse")

    parser = argparse.ArgumentParser(prog="exptype", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common, mol, branch], help="closed-form energy levels")
    p.add_argument("--levels", default="0")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("table1", parents=[common], help="reproduce the published eigenvalue table")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suites", default=",".join(verify.SUITES))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("wavefn", parents=[common, mol, branch], help="sample an eigenfunction")
    p.add_argument("--level", type=int, default=0)
    p.add_argument("--x-min", type=float, default=-0.5, help="in units of r0")
    p.add_argument("--x-max", type=float, default=6.0, help="in units of r0")
    p.add_argument("--points", type=int, default=500)
    p.add_argument("--normalized", action="store_true",
                   help="fail instead of emitting a raw formal state")
    p.set_defaults(func=cmd_wavefn)

    p = sub.add_parser("oracle-compare", parents=[common, mol],
                       help="finite-difference check of the Morse-branch levels")
    p.add_argument("--levels", default="0,2,4")
    p.set_defaults(func=cmd_oracle_compare)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        registry = MoleculeRegistry.load(args.registry)
        return args.func(args, registry, out)
    except (UsageError, RegistryError, DomainError) as exc:
        if isinstance(exc, DivergentNormError):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_FAIL
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
