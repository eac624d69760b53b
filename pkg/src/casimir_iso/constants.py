"""Physical constants (CODATA 2018), the temperature type, and regime scales.

Everything internal is SI. The one non-SI unit the package emits, dyn/cm^2
for pressure readouts, is converted at the presentation boundary only.
Constants are pinned here instead of taken from scipy.constants so results
do not drift when scipy moves to a newer CODATA adjustment.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InfiniteThermalWavelength

__all__ = [
    "PhysicalConstants",
    "CODATA2018",
    "CONSTANTS",
    "CONSTANTS_ID",
    "ATOMIC_MASS_KG",
    "DYN_PER_CM2_PER_PA",
    "Temperature",
    "thermal_wavelength",
    "matsubara_frequency",
    "pascal_to_dyn_per_cm2",
]


@dataclass(frozen=True)
class PhysicalConstants:
    """Fixed constant set; instances are immutable."""

    hbar: float                  # J s
    c: float                     # m/s
    k_B: float                   # J/K
    G: float                     # m^3 kg^-1 s^-2
    e_charge: float              # C
    m_e: float                   # kg
    vacuum_permittivity: float   # F/m

    def __post_init__(self):
        if not (self.hbar > 0 and self.c > 0 and self.k_B > 0):
            raise ValueError("hbar, c and k_B must be strictly positive")


CODATA2018 = PhysicalConstants(
    hbar=1.054571817e-34,
    c=299792458.0,
    k_B=1.380649e-23,
    G=6.67430e-11,
    e_charge=1.602176634e-19,
    m_e=9.1093837015e-31,
    vacuum_permittivity=8.8541878128e-12,
)

CONSTANTS = CODATA2018
CONSTANTS_ID = "CODATA2018"

# u, for converting isotope mass numbers to kg (CODATA 2018)
ATOMIC_MASS_KG = 1.66053906660e-27

# 1 Pa = 10 dyn/cm^2
DYN_PER_CM2_PER_PA = 10.0


@dataclass(frozen=True)
class Temperature:
    """Absolute temperature; kelvin >= 0."""

    kelvin: float

    def __post_init__(self):
        if not (isinstance(self.kelvin, (int, float)) and math.isfinite(self.kelvin)):
            raise ValueError("temperature must be a finite number")
        if self.kelvin < 0:
            raise ValueError(f"temperature must be >= 0 K, got {self.kelvin}")


def thermal_wavelength(T: Temperature) -> float:
    """Separation scale hbar*c/(2*k_B*T) beyond which thermal photons dominate.

    Raises InfiniteThermalWavelength at T = 0 rather than returning inf, so
    the zero-temperature case cannot be mistaken for a numeric result.
    """
    if T.kelvin == 0:
        raise InfiniteThermalWavelength("thermal wavelength diverges at T = 0")
    k = CONSTANTS
    return k.hbar * k.c / (2.0 * k.k_B * T.kelvin)


def matsubara_frequency(l: int, T: Temperature) -> float:
    """l-th Matsubara angular frequency 2*pi*k_B*T*l/hbar (rad/s); zero at l = 0."""
    if l < 0 or l != int(l):
        raise ValueError(f"Matsubara index must be a non-negative integer, got {l}")
    if T.kelvin <= 0:
        raise ValueError("matsubara_frequency requires T > 0")
    k = CONSTANTS
    return 2.0 * math.pi * k.k_B * T.kelvin * l / k.hbar


def pascal_to_dyn_per_cm2(pressure_pa: float) -> float:
    return pressure_pa * DYN_PER_CM2_PER_PA
