"""Dielectric permittivity models evaluated on the imaginary frequency axis.

Three families: the ideal conductor (eps -> infinity), the single-parameter
plasma model eps(i*xi) = 1 + omega_p^2/xi^2, and tabulated samples with
log-log interpolation. Models are immutable and safe to share across threads.
"""

from __future__ import annotations

import bisect
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass

from .constants import CONSTANTS, Temperature
from .errors import TableFormatError, TabulatedRangeError

__all__ = [
    "DielectricModel",
    "IdealConductor",
    "PlasmaModel",
    "TabulatedModel",
    "load_tabulated_model",
    "ElectronGasParams",
    "plasma_frequency_from_density",
    "plasma_shift_from_lattice",
]


class DielectricModel(ABC):
    """Permittivity on the imaginary axis, eps(i*xi), for identical-plate pairs.

    material_temperature records the temperature at which the model's
    parameters were measured. It is metadata only: no temperature correction
    of eps is attempted, but callers can compare it against the field
    temperature to flag low-temperature experiments fed with room-T data.
    """

    material_temperature: Temperature | None

    @abstractmethod
    def epsilon_at(self, xi: float) -> float:
        """Evaluate eps(i*xi) for xi > 0 (the xi->0 limit lives in the engine)."""

    @abstractmethod
    def label(self) -> str:
        """Short descriptor used in CSV output."""


@dataclass(frozen=True)
class IdealConductor(DielectricModel):
    material_temperature: Temperature | None = None

    def epsilon_at(self, xi: float) -> float:
        return math.inf

    def label(self) -> str:
        return "ideal"


@dataclass(frozen=True)
class PlasmaModel(DielectricModel):
    omega_p: float  # rad/s
    material_temperature: Temperature | None = None

    def __post_init__(self):
        if not (self.omega_p > 0 and math.isfinite(self.omega_p)):
            raise ValueError(f"plasma frequency must be positive and finite, got {self.omega_p}")

    def epsilon_at(self, xi: float) -> float:
        if xi <= 0:
            raise ValueError("plasma model requires xi > 0; the xi->0 limit is singular")
        r = self.omega_p / xi
        return 1.0 + r * r

    def label(self) -> str:
        return f"plasma(omega_p={self.omega_p:.6g})"


@dataclass(frozen=True)
class TabulatedModel(DielectricModel):
    """Permittivity samples (xi_k, eps_k), strictly increasing in xi, eps >= 1.

    Evaluation is log-log linear interpolation between bracketing samples,
    the standard faithful scheme for data spanning decades in frequency.
    """

    xi_samples: tuple[float, ...]
    eps_samples: tuple[float, ...]
    material_temperature: Temperature | None = None

    def __post_init__(self):
        xs, es = self.xi_samples, self.eps_samples
        if len(xs) < 2:
            raise ValueError("tabulated model needs at least 2 samples")
        if len(xs) != len(es):
            raise ValueError("xi and eps sample lists differ in length")
        if any(x <= 0 for x in xs):
            raise ValueError("all xi samples must be positive")
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise ValueError("xi samples must be strictly increasing")
        if any(e < 1.0 for e in es):
            raise ValueError("all eps samples must be >= 1")

    def epsilon_at(self, xi: float) -> float:
        if xi <= 0:
            raise ValueError("tabulated model requires xi > 0")
        xs, es = self.xi_samples, self.eps_samples
        if xi < xs[0] or xi > xs[-1]:
            raise TabulatedRangeError(xi, xs[0], xs[-1])
        i = bisect.bisect_right(xs, xi)
        if i == len(xs):
            return es[-1]
        lo, hi = i - 1, i
        t = (math.log(xi) - math.log(xs[lo])) / (math.log(xs[hi]) - math.log(xs[lo]))
        return math.exp(math.log(es[lo]) + t * (math.log(es[hi]) - math.log(es[lo])))

    def label(self) -> str:
        return f"table({len(self.xi_samples)} pts)"


def load_tabulated_model(path, material_temperature: Temperature | None = None) -> TabulatedModel:
    """Read a two-column text file of `xi_rad_per_s, epsilon` lines.

    Comments start with `#`; rows must already be sorted ascending in xi.
    """
    xs: list[float] = []
    es: list[float] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = [p.strip() for p in line.split(",")]
            if len(parts) != 2:
                raise TableFormatError(path, lineno, f"expected 'xi, eps', got {line!r}")
            try:
                xi, eps = float(parts[0]), float(parts[1])
            except ValueError as exc:
                raise TableFormatError(path, lineno, str(exc)) from None
            if xs and xi <= xs[-1]:
                raise TableFormatError(path, lineno, "xi values must be strictly increasing")
            xs.append(xi)
            es.append(eps)
    try:
        return TabulatedModel(tuple(xs), tuple(es), material_temperature)
    except ValueError as exc:
        raise TableFormatError(path, 0, str(exc)) from None


@dataclass(frozen=True)
class ElectronGasParams:
    """Free-electron-gas inputs for the plasma frequency.

    n_val is the valence-electron number density. When built from lattice
    data via from_lattice it satisfies
    n_val = valence_per_atom * atoms_per_cell / lattice_constant^3.
    """

    n_val: float             # m^-3
    m_eff: float             # kg
    lattice_constant: float  # m
    atoms_per_cell: int
    valence_per_atom: float

    def __post_init__(self):
        for name in ("n_val", "m_eff", "lattice_constant", "atoms_per_cell", "valence_per_atom"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be strictly positive")

    @classmethod
    def from_lattice(cls, lattice_constant, atoms_per_cell, valence_per_atom, m_eff=None):
        m_eff = CONSTANTS.m_e if m_eff is None else m_eff
        n_val = valence_per_atom * atoms_per_cell / lattice_constant**3
        return cls(n_val, m_eff, lattice_constant, atoms_per_cell, valence_per_atom)


def plasma_frequency_from_density(params: ElectronGasParams) -> float:
    """omega_p = sqrt(n e^2 / (eps0 m_eff)), the SI form of 4*pi*N*e^2/(m*V)."""
    k = CONSTANTS
    return math.sqrt(params.n_val * k.e_charge**2 / (k.vacuum_permittivity * params.m_eff))


def plasma_shift_from_lattice(omega_p: float, delta_a_over_a: float) -> tuple[float, float]:
    """First-order plasma-frequency shift from a lattice-constant shift.

    delta_omega/omega = -(1/2) delta_V/V = -(3/2) delta_a/a, exactly at first
    order. Returns (new omega_p, delta_omega_over_omega).
    """
    if not abs(delta_a_over_a) < 0.1:
        raise ValueError("lattice shift outside the perturbative regime |delta_a/a| < 0.1")
    if not omega_p > 0:
        raise ValueError("omega_p must be positive")
    rel = -1.5 * delta_a_over_a
    return omega_p * (1.0 + rel), rel
