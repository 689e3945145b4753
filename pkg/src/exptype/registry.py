"""Built-in molecule parameters, registry files and published reference values."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .core import Branch, MoleculeParams

BUILTIN = {
    "H2": MoleculeParams("H2", D=4.7446, r0=0.7416, alpha=1.440558,
                         E0=1.508343932e-2, mass_amu=0.50391),
    "LiH": MoleculeParams("LiH", D=2.515287, r0=1.5956, alpha=1.7998368,
                          E0=1.865528199e-3, mass_amu=0.8801221),
}

# Published eigenvalues in eV (printed as magnitudes; all energies are negative).
# Keyed by (molecule, branch, n).
TABLE1 = {
    ("H2", Branch.EXPONENTIAL, 0): -5.02101,
    ("H2", Branch.EXPONENTIAL, 2): -6.20491,
    ("H2", Branch.EXPONENTIAL, 4): -7.51402,
    ("H2", Branch.EXPONENTIAL, 10): -12.1926,
    ("H2", Branch.MORSE, 0): -4.47601,
    ("H2", Branch.MORSE, 2): -3.47992,
    ("H2", Branch.MORSE, 4): -2.60903,
    ("H2", Branch.MORSE, 10): -0.74759,
    ("LiH", Branch.EXPONENTIAL, 0): -2.60322,
    ("LiH", Branch.EXPONENTIAL, 2): -2.97007,
    ("LiH", Branch.EXPONENTIAL, 4): -3.36109,
    ("LiH", Branch.EXPONENTIAL, 10): -4.67918,
    ("LiH", Branch.MORSE, 0): -2.42886,
    ("LiH", Branch.MORSE, 2): -2.09828,
    ("LiH", Branch.MORSE, 4): -1.79186,
    ("LiH", Branch.MORSE, 10): -1.01766,
}
TABLE1_TOL = 5e-3


class RegistryError(ValueError):
    pass


@dataclass
class MoleculeRegistry:
    entries: dict[str, MoleculeParams] = field(default_factory=lambda: dict(BUILTIN))
    source: str = "built-in"

    def __getitem__(self, name: str) -> MoleculeParams:
        try:
            return self.entries[name]
        except KeyError:
            known = ", ".join(sorted(self.entries))
            raise RegistryError(f"unknown molecule {name!r} (known: {known})") from None

    def __contains__(self, name: str) -> bool:
        return name in self.entries

    @classmethod
    def load(cls, path: str | Path | None = None) -> "MoleculeRegistry":
        """Built-ins, overridden by name from a JSON registry file if given.

        The file maps molecule name to
        ``{"D_eV", "r0_angstrom", "alpha", "E0_eV", "mass_amu"?}``.
        """
        reg = cls()
        if path is None:
            return reg
        try:
            doc = json.loads(Path(path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise RegistryError(f"cannot read registry {path}: {exc}") from exc
        if not isinstance(doc, dict):
            raise RegistryError("registry must be a JSON object keyed by molecule name")
        for name, rec in doc.items():
            try:
                reg.entries[name] = MoleculeParams(
                    name=name, D=float(rec["D_eV"]), r0=float(rec["r0_angstrom"]),
                    alpha=float(rec["alpha"]), E0=float(rec["E0_eV"]),
                    mass_amu=None if rec.get("mass_amu") is None else float(rec["mass_amu"]))
            except (KeyError, TypeError, ValueError) as exc:
                raise RegistryError(f"bad registry entry {name!r}: {exc}") from exc
        reg.source = str(path)
        return reg

    def dump(self) -> dict:
        out = {}
        for name, m in self.entries.items():
            rec = {"D_eV": m.D, "r0_angstrom": m.r0, "alpha": m.alpha, "E0_eV": m.E0}
            if m.mass_amu is not None:
                rec["mass_amu"] = m.mass_amu
            out[name] = rec
        return out
