"""Closed-form energy levels and the diatomic reference table."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Branch, PotentialSpec, derive_params, epsilon_of, DomainError


@dataclass(frozen=True)
class EnergyLevel:
    n: int
    energy: float
    epsilon: float
    physical: bool


def energy_level(spec: PotentialSpec, branch: Branch | str, n: int) -> EnergyLevel:
    """E_n = -(beta^2/4M)(2n + 1 - A)^2.

    A = -(sqrt(M)/beta) V2/sqrt(V1) on the exponential branch and its negative
    on the Morse branch. Levels with epsilon <= 0 are returned with
    ``physical=False``.
    """
    if n < 0:
        raise DomainError(f"level index must be >= 0, got {n}")
    params = derive_params(spec, branch)
    eps = epsilon_of(params, n)
    energy = -(spec.beta ** 2 / (4.0 * spec.M)) * (2 * n + 1 - params.A) ** 2
    return EnergyLevel(n=n, energy=energy, epsilon=eps, physical=eps > 0)


def spectrum(spec: PotentialSpec, branch: Branch | str, n_max: int) -> list[EnergyLevel]:
    """Levels n = 0..n_max."""
    if n_max < 0:
        raise DomainError(f"n_max must be >= 0, got {n_max}")
    return [energy_level(spec, branch, n) for n in range(n_max + 1)]


def levels(spec: PotentialSpec, branch: Branch | str, ns) -> list[EnergyLevel]:
    return [energy_level(spec, branch, n) for n in ns]
