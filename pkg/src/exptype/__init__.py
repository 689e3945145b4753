"""Exponential-type potential V(x) = V1 e^{2bx} + V2 e^{bx}: closed-form
spectrum, eigenfunctions, ladder operators and a finite-difference oracle."""

from .core import (Branch, DerivedParams, DomainError, MoleculeParams, PotentialSpec,
                   bound_state_count, derive_params, epsilon_of)

__all__ = [
    "Branch", "DerivedParams", "DomainError", "MoleculeParams", "PotentialSpec",
    "bound_state_count", "derive_params", "epsilon_of",
]
