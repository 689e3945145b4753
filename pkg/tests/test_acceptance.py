"""Exit criteria. Each test records one line, printed in the terminal summary."""

import math
import time

import numpy as np

from exptype import verify
from exptype.core import Branch
from exptype.oracle import GridSpec, morse_potential, solve_bound_states
from exptype.registry import BUILTIN, TABLE1
from exptype.spectrum import energy_level

RESULTS = []


def record(number, title, checks):
    """checks: list of (label, measured, bound, passed)."""
    passed = all(c[3] for c in checks)
    worst = ", ".join(f"{label}={measured:.3g} (bound {bound:g})" for label, measured, bound, _ in checks)
    RESULTS.append(f"[{'PASS' if passed else 'FAIL'}] {number}. {title}: {worst}")
    assert passed, RESULTS[-1]


def from_suite(checks, label_prefix=""):
    out = []
    for c in checks:
        out.append((label_prefix + c.name, c.measured, c.tolerance, c.passed))
    return out


def test_1_table_reproduction():
    start = time.perf_counter()
    worst = max(abs(energy_level(BUILTIN[name].potential(), br, n).energy - published)
                for (name, br, n), published in TABLE1.items())
    elapsed = time.perf_counter() - start
    record(1, "Table 1 (16 values)", [("max|dE| eV", worst, 5e-3, worst <= 5e-3 and len(TABLE1) == 16),
                                     ("runtime s", elapsed, 1.0, elapsed < 1.0)])


def test_2_oracle_cross_validation():
    start = time.perf_counter()
    checks = verify.suite_oracle()
    elapsed = time.perf_counter() - start
    assert len(checks) == 5
    worst = max(c.measured for c in checks)
    record(2, "oracle vs closed form (H2 n=0,2,4; LiH n=0,2)",
           [("max|dE| eV", worst, 2e-3, all(c.passed for c in checks)),
            ("runtime s", elapsed, 60.0, elapsed < 60.0)])


def test_3_ode_residual():
    checks = verify.suite_ode(range(6))
    assert len(checks) == 8
    resid = [c for c in checks if not c.name.endswith("perturbed-eps")]
    control = [c for c in checks if c.name.endswith("perturbed-eps")]
    record(3, "ODE residual n=0..5, both molecules and branches",
           [("max residual", max(c.measured for c in resid), 1e-8, all(c.passed for c in resid)),
            ("min control residual (> bound)", min(c.measured for c in control), 1e-3,
             all(c.passed for c in control))])


def test_4_normalization():
    checks = verify.suite_norm(range(7))
    unit = [c for c in checks if c.name.endswith("unit")]
    closed = [c for c in checks if c.name.endswith("closed-vs-quadrature")]
    record(4, "normalization n<=6",
           [("max|int phi^2 dx - 1|", max(c.measured for c in unit), 1e-8, all(c.passed for c in unit)),
            ("max rel closed-vs-quadrature", max(c.measured for c in closed), 1e-8,
             all(c.passed for c in closed))])


def test_5_series_identities():
    (check,) = verify.suite_series(samples=500)
    record(5, "finite sum = 1F1 = Laguerre form, n<=10", from_suite([check]))


def test_6_laplace_consistency():
    good, control = verify.suite_laplace()
    record(6, "Laplace-space solution", [
        ("residual (2eps+1)", good.measured, good.tolerance, good.passed),
        ("residual (eps+1), must exceed", control.measured, control.tolerance, control.passed)])


def test_7_ladder_algebra():
    checks = verify.suite_ladder()
    su2 = verify.suite_su2("H2", range(11)) + verify.suite_su2("LiH", range(11))
    detail = next(c.detail for c in su2 if c.detail)
    assert set(detail["paper"]) == {"[L-,L0]", "[L0,L+]", "[L+,L-]"}
    assert len(detail["paper_ladder_eigenvalues"]) == 11
    record(7, "ladder algebra (fixed-eps family)", from_suite(checks + su2))


def test_8_oracle_self_tests():
    L, M = 3.0, 2.0
    box = solve_bound_states(lambda x: np.zeros_like(x), M, GridSpec(0.0, L, 4000), 3, bound_only=False)
    box_err = max(abs(E / (n * n * math.pi ** 2 / (M * L * L)) - 1)
                  for n, E in enumerate(box.eigenvalues, start=1))
    h2 = BUILTIN["H2"]
    exact = energy_level(h2.potential(), Branch.MORSE, 0).energy
    errs = [solve_bound_states(morse_potential(h2), h2.M, GridSpec(-h2.r0, 12 * h2.r0, N), 1).eigenvalues[0] - exact
            for N in (2001, 4001)]
    ratio = errs[0] / errs[1]
    record(8, "oracle self-tests", [("box rel error", box_err, 1e-3, box_err <= 1e-3),
                                    ("h-halving ratio", ratio, 4.5, 3.5 <= ratio <= 4.5)])
