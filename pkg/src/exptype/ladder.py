"""Step-down / step-up operator cores and measurement of their algebra.

Cores are first-order operators s z d/dz + c0 + c1 z:

* lowering at level n: -z d/dz - a1 z + n + eps
* raising at level n:   z d/dz - a1 z + n + eps + 1

They act on derivative stacks [f, f', f'', ...] sampled on a grid, so a
composition of two cores only needs phi up to its second derivative. All
measurements use the fixed-eps family z^eps e^{-a1 z} L_n^{2eps}(2 a1 z),
unnormalized unless a normalized state is passed in.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, asdict

import numpy as np

from .core import DerivedParams, epsilon_of
from .states import BoundState, Convention, state_derivatives


@dataclass(frozen=True)
class OperatorCore:
    kind: str          # "lowering" | "raising"
    n: int
    eps: float
    a1: float
    literal: bool = False  # raising only: use the printed "-z + a1 z" middle term

    @property
    def coefficients(self):
        """(s, c0, c1) for s z d/dz + c0 + c1 z."""
        if self.kind == "lowering":
            return -1.0, self.n + self.eps, -self.a1
        if self.kind == "raising":
            c1 = (self.a1 - 1.0) if self.literal else -self.a1
            return 1.0, self.n + self.eps + 1.0, c1
        raise ValueError(f"unknown operator kind {self.kind!r}")

    def apply(self, z, jet):
        """Apply to [f, f', ..., f^(K)]; returns [g, ..., g^(K-1)]."""
        s, c0, c1 = self.coefficients
        out = []
        for j in range(len(jet) - 1):
            g = s * (z * jet[j + 1] + j * jet[j]) + (c0 + c1 * z) * jet[j]
            if j:
                g = g + j * c1 * jet[j - 1]
            out.append(g)
        return out


def _fit(g, target):
    """Least-squares c in g ~ c * target, and max|g - c target| / max|g|."""
    c = float(np.dot(g, target) / np.dot(target, target))
    scale = np.max(np.abs(g))
    resid = float(np.max(np.abs(g - c * target)) / scale) if scale > 0 else 0.0
    return c, resid


def _neighbor(state: BoundState, n: int) -> BoundState:
    """phi_n in the operand's family; a non-unit norm is carried over as the
    normalized fixed-eps family, N_n^2 proportional to n!/Gamma(n + 2eps + 1)."""
    norm = state.norm
    if norm != 1.0:
        eps = state.epsilon
        lg = (math.lgamma(n + 1) - math.lgamma(n + 2 * eps + 1)
              - math.lgamma(state.n + 1) + math.lgamma(state.n + 2 * eps + 1))
        norm *= math.exp(0.5 * lg)
    return BoundState(n=n, epsilon=state.epsilon, a1=state.a1, norm=norm, convention=Convention.FIXED_EPS)


def _default_grid(state: BoundState, points: int = 200):
    eps, a1, n = state.epsilon, state.a1, state.n
    z_peak = max(eps, 0.5) / a1
    z_edge = (4 * (n + 1) + 2 * abs(eps) + 2) / (2 * a1)
    return np.geomspace(1e-2 * z_peak, 3 * z_edge, points)


def apply_lowering(state: BoundState, grid=None):
    """Apply the lowering core at the state's level; fit to phi_{n-1}.

    Returns
    -------
    coefficient, residual : float
        for n = 0 the coefficient is 0 and the residual is max|g| (absolute)
    """
    z = _default_grid(state) if grid is None else np.asarray(grid, dtype=float)
    core = OperatorCore("lowering", state.n, state.epsilon, state.a1)
    (g,) = core.apply(z, state_derivatives(state, z, 1))
    if state.n == 0:
        return 0.0, float(np.max(np.abs(g)))
    target = state_derivatives(_neighbor(state, state.n - 1), z, 0)[0]
    return _fit(g, target)


def apply_raising(state: BoundState, grid=None, literal: bool = False):
    """Apply the raising core at the state's level; fit to phi_{n+1}."""
    z = _default_grid(state) if grid is None else np.asarray(grid, dtype=float)
    core = OperatorCore("raising", state.n, state.epsilon, state.a1, literal=literal)
    (g,) = core.apply(z, state_derivatives(state, z, 1))
    target = state_derivatives(_neighbor(state, state.n + 1), z, 0)[0]
    return _fit(g, target)


def _fixed_state(params: DerivedParams, n: int, eps: float | None) -> BoundState:
    if eps is None:
        eps = epsilon_of(params, n)
    return BoundState(n=n, epsilon=eps, a1=params.a1, convention=Convention.FIXED_EPS)


def raise_then_lower(state: BoundState, grid=None):
    """lowering(raising(phi_n)) fitted to phi_n; returns (coefficient, residual)."""
    z = _default_grid(state) if grid is None else np.asarray(grid, dtype=float)
    n, eps, a1 = state.n, state.epsilon, state.a1
    jet = state_derivatives(state, z, 2)
    up = OperatorCore("raising", n, eps, a1).apply(z, jet)
    (g,) = OperatorCore("lowering", n + 1, eps, a1).apply(z, up)
    return _fit(g, jet[0])


def commutator_pm(params: DerivedParams, n: int, grid=None, eps: float | None = None):
    """[L+, L-] phi_n = L+(L- phi_n) - L-(L+ phi_n), fitted to mu * phi_n.

    Each core is instantiated at the level of the function it acts on. ``eps``
    defaults to the physical eps_n of ``params`` and is then held fixed.

    Returns
    -------
    mu, residual : float
    """
    state = _fixed_state(params, n, eps)
    z = _default_grid(state) if grid is None else np.asarray(grid, dtype=float)
    e, a1 = state.epsilon, state.a1
    jet = state_derivatives(state, z, 2)
    down = OperatorCore("lowering", n, e, a1).apply(z, jet)
    if n > 0:
        (up_down,) = OperatorCore("raising", n - 1, e, a1).apply(z, down)
    else:
        up_down = np.zeros_like(z)
    up = OperatorCore("raising", n, e, a1).apply(z, jet)
    (down_up,) = OperatorCore("lowering", n + 1, e, a1).apply(z, up)
    return _fit(up_down - down_up, jet[0])


def level_operator_eigenvalue(params: DerivedParams, n: int) -> float:
    """Eigenvalue 2n + 2 - A of the diagonal operator L0 on phi_n."""
    return 2 * n + 2 - params.A


@dataclass
class LadderReport:
    eps: float
    a1: float
    A: float
    levels: list[int]
    lowering: dict = field(default_factory=dict)       # n -> (coefficient, residual)
    raising: dict = field(default_factory=dict)
    commutator: dict = field(default_factory=dict)     # n -> (mu, residual)
    minus_constant: dict = field(default_factory=dict)  # [L-, L0] phi_n = c L- phi_n
    plus_constant: dict = field(default_factory=dict)   # [L+, L0] phi_n = c L+ phi_n
    paper: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = asdict(self)
        for key in ("lowering", "raising", "commutator", "minus_constant", "plus_constant"):
            d[key] = {str(k): list(v) for k, v in d[key].items()}
        d["paper"] = {str(k): v for k, v in self.paper.items()}
        return d


def _level_of(g, z, state: BoundState, candidates):
    """Identify which phi_k (same eps) the grid function g is proportional to."""
    best = None
    for k in candidates:
        if k < 0:
            continue
        target = state_derivatives(BoundState(k, state.epsilon, state.a1, 1.0, Convention.FIXED_EPS), z, 0)[0]
        c, r = _fit(g, target)
        if best is None or r < best[2]:
            best = (k, c, r)
    return best


def _apply_level_operator(params, g, z, state, around):
    """L0 on a grid function: identify its level, multiply by that eigenvalue."""
    k, _, r = _level_of(g, z, state, (around - 1, around, around + 1))
    return level_operator_eigenvalue(params, k) * g, r


def _paper_claims(params: DerivedParams, n: int, eps: float) -> dict:
    A = params.A

    def sqrt_or_nan(v):
        return math.sqrt(v) if v >= 0 else float("nan")

    minus_arg = n * (n + 2 * eps + 1)
    plus_den = -n + A + 1
    return {
        "ell_minus": (-n + A - 1) * sqrt_or_nan(minus_arg),
        "ell_plus": sqrt_or_nan((n + 1) / plus_den) if plus_den != 0 else float("nan"),
        "commutator_eigenvalue": 2 * n + 2 - A,
        "prefactor_minus": sqrt_or_nan((eps + 1) / eps) if eps != 0 else float("nan"),
        "prefactor_plus": sqrt_or_nan((eps - 1) / eps) if eps != 0 else float("nan"),
        "minus_constant": 1.0,   # [L-, L0] = L-
        "plus_constant": 1.0,    # [L0, L+] = L+
    }


def structure_constants(params: DerivedParams, n_range, grid=None, eps: float | None = None) -> LadderReport:
    """Measure ladder coefficients, [L+, L-] and [L-+, L0] over a range of levels.

    ``eps`` fixes the Laguerre family; it defaults to the physical eps of the
    first level in ``n_range``. L0 is the diagonal operator with eigenvalue
    2n + 2 - A; on a non-eigenfunction it acts by first identifying the level
    by least squares.
    """
    n_range = list(n_range)
    if eps is None:
        eps = epsilon_of(params, n_range[0])
    report = LadderReport(eps=eps, a1=params.a1, A=params.A, levels=n_range)
    for n in n_range:
        state = _fixed_state(params, n, eps)
        z = _default_grid(state) if grid is None else np.asarray(grid, dtype=float)
        report.lowering[n] = apply_lowering(state, z)
        report.raising[n] = apply_raising(state, z)
        report.commutator[n] = commutator_pm(params, n, z, eps)
        jet = state_derivatives(state, z, 1)
        l0 = level_operator_eigenvalue(params, n)
        if n > 0:
            (down,) = OperatorCore("lowering", n, eps, params.a1).apply(z, jet)
            l0_down, r_id = _apply_level_operator(params, down, z, state, n - 1)
            c, r = _fit(l0 * down - l0_down, down)
            report.minus_constant[n] = (c, max(r, r_id))
        (up,) = OperatorCore("raising", n, eps, params.a1).apply(z, jet)
        l0_up, r_id = _apply_level_operator(params, up, z, state, n + 1)
        c, r = _fit(l0 * up - l0_up, up)
        report.plus_constant[n] = (c, max(r, r_id))
        report.paper[n] = _paper_claims(params, n, eps)
    return report
