"""Verification suites run by ``exptype verify`` and the acceptance tests.

Each suite returns a list of ``Check`` records; a check passes when its
measured value is on the right side of its tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .core import Branch, DerivedParams, derive_params
from .ladder import (apply_lowering, apply_raising, commutator_pm, raise_then_lower,
                     structure_constants)
from .oracle import compare_with_closed_form
from .registry import BUILTIN
from .states import (BoundState, Convention, build_physical, build_state,
                     laplace_solution_check, norm_closed_form, ode_residual,
                     series_identity_check, squared_norm_quadrature, squared_norm_trapezoid,
                     state_derivatives)

SUITES = ("ode", "series", "laplace", "norm", "ladder", "su2", "oracle")

ODE_TOL = 1e-8
ODE_NEGATIVE = 1e-3
SERIES_TOL = 1e-10
LAPLACE_TOL = 1e-10
LAPLACE_NEGATIVE = 1e-2
NORM_TOL = 1e-8
ANNIHILATION_TOL = 1e-12
LADDER_TOL = 1e-10
COMMUTATOR_TOL = 1e-9
ORACLE_TOL = 2e-3


@dataclass
class Check:
    name: str
    measured: float
    tolerance: float
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"name": self.name, "measured": self.measured, "tolerance": self.tolerance,
                "pass": self.passed, **({"detail": self.detail} if self.detail else {})}


def _upper(name, measured, tol, detail=None):
    return Check(name, float(measured), tol, bool(measured <= tol), detail or {})


def _lower(name, measured, tol, detail=None):
    """Negative control: passes when the measured value exceeds ``tol``."""
    return Check(name, float(measured), tol, bool(measured > tol), detail or {})


def _molecule_params(branches=(Branch.EXPONENTIAL, Branch.MORSE)):
    for mol in BUILTIN.values():
        for br in branches:
            yield mol, br, derive_params(mol.potential(), br)


def suite_ode(levels=range(6)) -> list[Check]:
    checks = []
    for mol, br, params in _molecule_params():
        worst = max(ode_residual(build_physical(params, n), params) for n in levels)
        checks.append(_upper(f"ode/{mol.name}/{br.value}", worst, ODE_TOL))
        control = min(
            ode_residual(build_state(params, n, Convention.FIXED_EPS,
                                     eps=build_physical(params, n).epsilon + 0.1, normalize=False), params)
            for n in levels)
        checks.append(_lower(f"ode/{mol.name}/{br.value}/perturbed-eps", control, ODE_NEGATIVE))
    return checks


def suite_series(samples: int = 200, seed: int = 20240611) -> list[Check]:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        n = int(rng.integers(0, 11))
        eps = float(rng.uniform(0.05, 30.0))
        a1 = float(rng.uniform(0.1, 30.0))
        z = rng.uniform(0.0, 1.0, 16) * (4 * n + 2 * eps + 10) / (2 * a1)
        worst = max(worst, series_identity_check(n, eps, a1, z[z > 0]))
    return [_upper("series/sum=1F1=Laguerre", worst, SERIES_TOL, {"samples": samples, "seed": seed})]


def suite_laplace() -> list[Check]:
    cases = [(1.0, 1.0, -4.0), (16.9, 17.4, -605.9), (0.3, 2.0, 1.7), (5.0, 0.5, -8.0)]
    worst = 0.0
    control = math.inf
    for eps, a1, a2sq in cases:
        t = np.linspace(1.5 * a1, 10 * a1, 200)
        worst = max(worst, laplace_solution_check(eps, a1, a2sq, t))
        control = min(control, laplace_solution_check(eps, a1, a2sq, t, coefficient=eps + 1))
    return [_upper("laplace/coefficient-2eps+1", worst, LAPLACE_TOL),
            _lower("laplace/printed-coefficient-eps+1", control, LAPLACE_NEGATIVE)]


def suite_norm(levels=range(7)) -> list[Check]:
    checks = []
    for mol, br, params in _molecule_params((Branch.MORSE,)):
        unit_dev = closed_dev = 0.0
        for n in levels:
            state = build_physical(params, n)
            unit_dev = max(unit_dev, abs(squared_norm_trapezoid(state, params.beta) - 1.0))
            quad = squared_norm_quadrature(state, params.beta)
            closed_dev = max(closed_dev, abs(norm_closed_form(state, params.beta) - quad) / quad)
        checks.append(_upper(f"norm/{mol.name}/unit", unit_dev, NORM_TOL))
        checks.append(_upper(f"norm/{mol.name}/closed-vs-quadrature", closed_dev, NORM_TOL))
    return checks


def suite_ladder(levels=range(11), eps_values=(0.5, 2.0, 7.5, 20.0), a1_values=(0.5, 1.0, 17.4)) -> list[Check]:
    annihilation = lower_dev = raise_dev = comm_dev = rtl_dev = fit_res = 0.0
    for eps in eps_values:
        for a1 in a1_values:
            params = DerivedParams.from_dimensionless(a1, -a1 * (2 * eps + 1))
            for n in levels:
                state = BoundState(n, eps, a1, 1.0, Convention.FIXED_EPS)
                if n == 0:
                    _, g_max = apply_lowering(state)
                    z = np.geomspace(1e-2 * eps / a1, 3 * (2 * eps + 6) / (2 * a1), 200)
                    phi_max = np.max(np.abs(state_derivatives(state, z, 0)[0]))
                    annihilation = max(annihilation, g_max / phi_max)
                else:
                    c, r = apply_lowering(state)
                    lower_dev = max(lower_dev, abs(c - (n + 2 * eps)) / (n + 2 * eps))
                    fit_res = max(fit_res, r)
                c, r = apply_raising(state)
                raise_dev = max(raise_dev, abs(c - (n + 1)) / (n + 1))
                fit_res = max(fit_res, r)
                mu, r = commutator_pm(params, n, eps=eps)
                expected = -(2 * n + 2 * eps + 1)
                comm_dev = max(comm_dev, abs(mu - expected) / abs(expected), r)
                c, r = raise_then_lower(state)
                expected = (n + 1) * (n + 1 + 2 * eps)
                rtl_dev = max(rtl_dev, abs(c - expected) / expected, r)
    literal = apply_raising(BoundState(4, 2.0, 1.3, 1.0, Convention.FIXED_EPS), literal=True)[1]
    return [
        _upper("ladder/ground-state-annihilation", annihilation, ANNIHILATION_TOL),
        _upper("ladder/lowering=n+2eps", lower_dev, LADDER_TOL),
        _upper("ladder/raising=n+1", raise_dev, LADDER_TOL),
        _upper("ladder/fit-residual", fit_res, LADDER_TOL),
        _upper("ladder/commutator=-(2n+2eps+1)", comm_dev, COMMUTATOR_TOL),
        _upper("ladder/lower-after-raise=(n+1)(n+1+2eps)", rtl_dev, COMMUTATOR_TOL),
        _lower("ladder/printed-raising-form", literal, 1e-2),
    ]


def suite_su2(molecule: str = "H2", levels=range(11)) -> list[Check]:
    params = derive_params(BUILTIN[molecule].potential(), Branch.MORSE)
    report = structure_constants(params, levels)
    minus = [c for c, _ in report.minus_constant.values()]
    plus = [c for c, _ in report.plus_constant.values()]
    mus = {n: c for n, (c, _) in report.commutator.items()}
    resid = max(r for d in (report.minus_constant, report.plus_constant, report.commutator)
                for _, r in d.values())
    minus_dev = max(abs(c - 2.0) for c in minus)
    plus_dev = max(abs(c + 2.0) for c in plus)
    mu_dev = max(abs(mus[n] + (2 * n + 2 * report.eps + 1)) / (2 * n + 2 * report.eps + 1) for n in mus)
    detail = {
        "eps": report.eps, "A": report.A,
        "measured": {"[L-,L0]": float(np.mean(minus)), "[L+,L0]": float(np.mean(plus)),
                     "[L+,L-]": {str(n): mus[n] for n in mus}},
        "paper": {"[L-,L0]": 1.0, "[L0,L+]": 1.0,
                  "[L+,L-]": {str(n): report.paper[n]["commutator_eigenvalue"] for n in report.levels}},
        "paper_ladder_eigenvalues": {str(n): {"ell_minus": report.paper[n]["ell_minus"],
                                              "ell_plus": report.paper[n]["ell_plus"]}
                                     for n in report.levels},
    }
    return [
        _upper("su2/[L-,L0]=2", minus_dev, COMMUTATOR_TOL),
        _upper("su2/[L+,L0]=-2", plus_dev, COMMUTATOR_TOL),
        _upper("su2/[L+,L-]=-(2n+2eps+1)", mu_dev, COMMUTATOR_TOL),
        _upper("su2/fit-residual", resid, COMMUTATOR_TOL, detail),
    ]


def suite_oracle() -> list[Check]:
    checks = []
    for name, levels in (("H2", (0, 2, 4)), ("LiH", (0, 2))):
        for c in compare_with_closed_form(BUILTIN[name], levels):
            diff = abs(c.difference) if c.bound else math.inf
            checks.append(_upper(f"oracle/{name}/n={c.n}", diff, ORACLE_TOL,
                                 {"closed_form": c.closed_form, "oracle": c.oracle}))
    return checks


RUNNERS = {
    "ode": suite_ode, "series": suite_series, "laplace": suite_laplace, "norm": suite_norm,
    "ladder": suite_ladder, "su2": suite_su2, "oracle": suite_oracle,
}


def run(suites=SUITES) -> list[Check]:
    checks = []
    for name in suites:
        checks.extend(RUNNERS[name]())
    return checks
