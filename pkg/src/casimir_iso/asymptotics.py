"""Closed-form limits: ideal-conductor pressure and the plasma-corrected force.

The asymptotic force formula is first order in c/(omega_p d) and assumes the
separation is large against the plasma skin depth and small against the
thermal wavelength. Out-of-regime evaluation warns instead of refusing, so
the breakdown of the expansion can be plotted.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .constants import CONSTANTS, Temperature, thermal_wavelength
from .errors import RegimeWarning

__all__ = [
    "REGIME_RATIO_MAX",
    "ValidityReport",
    "ideal_pressure",
    "plasma_corrected_force",
    "check_validity",
]

# published policy: both ratios must be below this for in-regime status
REGIME_RATIO_MAX = 0.1


@dataclass(frozen=True)
class ValidityReport:
    """Dimensionless regime ratios for the asymptotic plasma formula.

    skin_ratio = 2*pi*c/(omega_p*d), thermal_ratio = d/thermal_wavelength;
    in_regime is true iff both are below REGIME_RATIO_MAX.
    """

    skin_ratio: float
    thermal_ratio: float
    in_regime: bool


def ideal_pressure(d: float) -> float:
    """Ideal-conductor Casimir pressure -pi^2 hbar c/(240 d^4), in Pa."""
    if not d > 0:
        raise ValueError(f"separation must be positive, got {d}")
    k = CONSTANTS
    return -math.pi**2 * k.hbar * k.c / (240.0 * d**4)


def check_validity(d: float, omega_p: float, T: Temperature) -> ValidityReport:
    """Regime ratios for using the first-order plasma correction at (d, omega_p, T)."""
    if not (d > 0 and omega_p > 0):
        raise ValueError("d and omega_p must be positive")
    skin_ratio = 2.0 * math.pi * CONSTANTS.c / (omega_p * d)
    thermal_ratio = 0.0 if T.kelvin == 0 else d / thermal_wavelength(T)
    in_regime = skin_ratio < REGIME_RATIO_MAX and thermal_ratio < REGIME_RATIO_MAX
    return ValidityReport(skin_ratio, thermal_ratio, in_regime)


def plasma_corrected_force(d: float, A: float, omega_p: float,
                           field_temperature: Temperature | None = None) -> float:
    """First-order finite-conductivity force:
    -(pi^2/240)(hbar c A/d^4)(1 - (16/3) c/(omega_p d)).

    Emits RegimeWarning when (d, omega_p, T) fall outside the expansion's
    validity; the value is still returned.
    """
    if not A > 0:
        raise ValueError(f"area must be positive, got {A}")
    T = field_temperature if field_temperature is not None else Temperature(0.0)
    report = check_validity(d, omega_p, T)
    if not report.in_regime:
        warnings.warn(
            f"plasma-corrected force outside validity regime "
            f"(skin_ratio={report.skin_ratio:.3g}, thermal_ratio={report.thermal_ratio:.3g})",
            RegimeWarning,
            stacklevel=2,
        )
    correction = 1.0 - (16.0 / 3.0) * CONSTANTS.c / (omega_p * d)
    return ideal_pressure(d) * A * correction
