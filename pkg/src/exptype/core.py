"""Potential parameters, unit handling and the dimensionless quantities.

Units throughout: energies in eV, lengths in Angstrom, ``M = 2m/hbar^2`` in
eV^-1 Angstrom^-2.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from scipy import constants


class DomainError(ValueError):
    """Raised when an input lies outside the domain of a formula."""


class Branch(str, enum.Enum):
    """Sign convention of the cross term.

    ``EXPONENTIAL`` is V1 e^{2bx} + V2 e^{bx} as given. ``MORSE`` negates the
    cross term (V2 -> -V2), which is what b -> -b does to the spectrum.
    """

    EXPONENTIAL = "exp"
    MORSE = "morse"

    @classmethod
    def parse(cls, value: "Branch | str") -> "Branch":
        if isinstance(value, cls):
            return value
        aliases = {"exp": cls.EXPONENTIAL, "exponential": cls.EXPONENTIAL,
                   "morse": cls.MORSE, "morse_flip": cls.MORSE}
        try:
            return aliases[str(value).lower()]
        except KeyError:
            raise DomainError(f"unknown branch {value!r}") from None

    @property
    def sign(self) -> int:
        """+1 for the exponential branch, -1 for the Morse branch."""
        return 1 if self is Branch.EXPONENTIAL else -1


def _require_positive(**fields: float) -> None:
    for name, value in fields.items():
        if not (math.isfinite(value) and value > 0):
            raise DomainError(f"{name} must be positive and finite, got {value!r}")


@dataclass(frozen=True)
class PotentialSpec:
    """Physical inputs of V(x) = V1 exp(2 beta x) + V2 exp(beta x)."""

    V1: float
    V2: float
    beta: float
    M: float

    def __post_init__(self):
        _require_positive(V1=self.V1, beta=self.beta, M=self.M)
        if not math.isfinite(self.V2):
            raise DomainError(f"V2 must be finite, got {self.V2!r}")


# hbar^2 / (1 amu * 1 Angstrom^2) in eV
_HBAR2_AMU_A2 = (constants.hbar ** 2
                 / (constants.atomic_mass * constants.angstrom ** 2)
                 / constants.electron_volt)


@dataclass(frozen=True)
class MoleculeParams:
    """Diatomic parameter set; ``E0 = hbar^2/(m r0^2)`` is authoritative."""

    name: str
    D: float
    r0: float
    alpha: float
    E0: float
    mass_amu: float | None = None

    def __post_init__(self):
        _require_positive(D=self.D, r0=self.r0, alpha=self.alpha, E0=self.E0)
        if self.mass_amu is not None:
            _require_positive(mass_amu=self.mass_amu)

    @property
    def beta(self) -> float:
        return self.alpha / self.r0

    @property
    def M(self) -> float:
        return 2.0 / (self.E0 * self.r0 ** 2)

    def potential(self) -> PotentialSpec:
        """Table convention: V1 = D, V2 = 2D."""
        return PotentialSpec(V1=self.D, V2=2.0 * self.D, beta=self.beta, M=self.M)

    def mass_consistency(self) -> float | None:
        """Relative mismatch between ``E0`` and hbar^2/(m r0^2), or None without a mass."""
        if self.mass_amu is None:
            return None
        e0 = _HBAR2_AMU_A2 / (self.mass_amu * self.r0 ** 2)
        return abs(e0 - self.E0) / self.E0


@dataclass(frozen=True)
class DerivedParams:
    """Dimensionless parameters: a1, signed a2^2 and A = -a2^2/a1.

    ``beta`` is carried along so states can be normalized in x.
    """

    a1: float
    a2sq: float
    A: float
    branch: Branch = Branch.EXPONENTIAL
    beta: float = 1.0

    @classmethod
    def from_dimensionless(cls, a1: float, a2sq: float,
                           branch: Branch | str = Branch.EXPONENTIAL,
                           beta: float = 1.0) -> "DerivedParams":
        _require_positive(a1=a1, beta=beta)
        return cls(a1=a1, a2sq=a2sq, A=-a2sq / a1, branch=Branch.parse(branch), beta=beta)

    @classmethod
    def from_A(cls, A: float, a1: float = 1.0, beta: float = 1.0) -> "DerivedParams":
        """Parameters with prescribed A (exponential branch, a2sq = -A a1)."""
        return cls.from_dimensionless(a1, -A * a1, Branch.EXPONENTIAL, beta)


def derive_params(spec: PotentialSpec, branch: Branch | str = Branch.EXPONENTIAL) -> DerivedParams:
    """Compute a1 = sqrt(M V1)/beta, a2^2 = +-M V2/beta^2 and A.

    Raises
    ------
    DomainError
        If V1, beta or M is not positive.
    """
    _require_positive(V1=spec.V1, beta=spec.beta, M=spec.M)
    branch = Branch.parse(branch)
    a1 = math.sqrt(spec.M * spec.V1) / spec.beta
    a2sq = branch.sign * spec.M * spec.V2 / spec.beta ** 2
    return DerivedParams(a1=a1, a2sq=a2sq, A=-a2sq / a1, branch=branch, beta=spec.beta)


def epsilon_of(params: DerivedParams, n: int) -> float:
    """Energy exponent of level n from the quantization condition, (A - 2n - 1)/2.

    Negative values are returned as-is; they belong to formal,
    non-normalizable solutions.
    """
    if n < 0:
        raise DomainError(f"level index must be >= 0, got {n}")
    return (params.A - 2 * n - 1) / 2.0


def bound_state_count(params: DerivedParams) -> int:
    """Number of levels with positive exponent, i.e. 2n + 1 < A."""
    if params.A <= 1:
        return 0
    # smallest integer >= (A - 1)/2
    return math.ceil((params.A - 1) / 2.0)
