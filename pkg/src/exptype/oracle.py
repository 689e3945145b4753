"""Finite-difference eigensolver used as an independent check of the spectrum.

-(1/M) psi'' + V psi = E psi on a uniform grid with Dirichlet ends gives a
symmetric tridiagonal matrix; its lowest eigenvalues are bracketed by
Sturm-sequence bisection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numba
import numpy as np

from .core import DomainError, MoleculeParams, derive_params, bound_state_count, Branch
from .spectrum import energy_level


@dataclass(frozen=True)
class GridSpec:
    x_min: float
    x_max: float
    points: int

    def __post_init__(self):
        if not self.x_min < self.x_max:
            raise DomainError("x_min must be < x_max")
        if self.points < 100:
            raise DomainError("need at least 100 grid points")

    @property
    def h(self) -> float:
        return (self.x_max - self.x_min) / (self.points - 1)

    def nodes(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.points)


@dataclass
class OracleResult:
    eigenvalues: list[float]
    grid: GridSpec
    richardson_estimate: list[float] | None = None
    truncated: bool = False     # fewer than the requested number were bound
    threshold: float = math.inf
    extra: dict = field(default_factory=dict)


@numba.njit(cache=True)
def _sturm_count(diag, off2, x):
    """Number of eigenvalues < x (LDL^T pivots of T - x I that are negative)."""
    count = 0
    q = diag[0] - x
    if q < 0:
        count += 1
    for i in range(1, diag.shape[0]):
        if q == 0.0:
            q = 1e-300
        q = diag[i] - x - off2[i - 1] / q
        if q < 0:
            count += 1
    return count


@numba.njit(cache=True)
def _bisect(diag, off2, k, lo, hi, rtol):
    """Eigenvalue number k (0-based, ascending) inside [lo, hi]."""
    while hi - lo > rtol * max(1.0, abs(lo), abs(hi)):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if _sturm_count(diag, off2, mid) > k:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def tridiagonal_eigenvalues(diag, off, k: int, tol: float = 1e-10) -> np.ndarray:
    """Lowest k eigenvalues of the symmetric tridiagonal matrix (diag, off)."""
    diag = np.ascontiguousarray(diag, dtype=float)
    off = np.ascontiguousarray(off, dtype=float)
    off2 = off * off
    absoff = np.abs(off)
    radius = np.zeros_like(diag)
    radius[:-1] += absoff
    radius[1:] += absoff
    lo = float(np.min(diag - radius))
    hi = float(np.max(diag + radius))
    k = min(k, diag.shape[0])
    return np.array([_bisect(diag, off2, j, lo, hi, tol) for j in range(k)])


def count_below(V: Callable, M: float, grid: GridSpec, energy: float) -> int:
    """Number of discrete eigenvalues below ``energy``."""
    diag, off = _hamiltonian(V, M, grid)
    return int(_sturm_count(diag, off * off, energy))


def _hamiltonian(V, M, grid):
    x = grid.nodes()[1:-1]
    v = np.asarray(V(x), dtype=float)
    if not np.all(np.isfinite(v)):
        raise DomainError("potential is not finite on the grid")
    h = grid.h
    diag = 2.0 / (M * h * h) + v
    off = np.full(x.size - 1, -1.0 / (M * h * h))
    return diag, off


def solve_bound_states(V: Callable, M: float, grid: GridSpec, k: int, bound_only: bool = True) -> OracleResult:
    """Lowest k eigenvalues of the discretized Hamiltonian.

    With ``bound_only`` only eigenvalues below min(V(x_min), V(x_max)) are
    returned; ``truncated`` is set when that leaves fewer than k.
    """
    if k < 1:
        raise DomainError("k must be >= 1")
    diag, off = _hamiltonian(V, M, grid)
    vals = tridiagonal_eigenvalues(diag, off, k)
    threshold = math.inf
    if bound_only:
        ends = np.asarray(V(np.array([grid.x_min, grid.x_max])), dtype=float)
        threshold = float(np.min(ends))
        vals = vals[vals < threshold]
    return OracleResult(eigenvalues=[float(v) for v in vals], grid=grid,
                        truncated=len(vals) < k, threshold=threshold)


def richardson(coarse: OracleResult, fine: OracleResult) -> list[float]:
    """Cancel the h^2 error term between two grids."""
    h1, h2 = coarse.grid.h, fine.grid.h
    m = min(len(coarse.eigenvalues), len(fine.eigenvalues))
    return [(h1 * h1 * fine.eigenvalues[i] - h2 * h2 * coarse.eigenvalues[i]) / (h1 * h1 - h2 * h2)
            for i in range(m)]


def solve_with_richardson(V, M, grid: GridSpec, k: int) -> OracleResult:
    """Solve on N and 2N points; attach the extrapolated eigenvalues."""
    coarse = solve_bound_states(V, M, grid, k)
    fine = solve_bound_states(V, M, GridSpec(grid.x_min, grid.x_max, 2 * grid.points), k)
    fine.richardson_estimate = richardson(coarse, fine)
    fine.extra["coarse"] = coarse.eigenvalues
    return fine


def morse_potential(molecule: MoleculeParams):
    """V(x) = D e^{-2 beta x} - 2D e^{-beta x}, x measured from r0."""
    D, beta = molecule.D, molecule.beta
    return lambda x: D * np.exp(-2 * beta * x) - 2 * D * np.exp(-beta * x)


def default_grid(molecule: MoleculeParams, points: int = 8000) -> GridSpec:
    return GridSpec(-1.0 * molecule.r0, 12.0 * molecule.r0, points)


@dataclass(frozen=True)
class Comparison:
    n: int
    closed_form: float
    oracle: float | None
    difference: float | None
    bound: bool


def compare_with_closed_form(molecule: MoleculeParams, levels, grid: GridSpec | None = None) -> list[Comparison]:
    """Closed-form Morse-branch energies against the Richardson-extrapolated oracle."""
    levels = list(levels)
    spec = molecule.potential()
    params = derive_params(spec, Branch.MORSE)
    grid = default_grid(molecule) if grid is None else grid
    k = max(levels) + 1
    res = solve_with_richardson(morse_potential(molecule), molecule.M, grid, k)
    est = res.richardson_estimate
    out = []
    for n in levels:
        closed = energy_level(spec, Branch.MORSE, n)
        if not closed.physical or n >= bound_state_count(params) or n >= len(est):
            out.append(Comparison(n, closed.energy, None, None, False))
            continue
        out.append(Comparison(n, closed.energy, est[n], est[n] - closed.energy, True))
    return out
