"""Isotopic lattice-constant shift and its imprint on the Casimir force.

A 1-D anharmonic chain, V(u) = (1/2) k u^2 - (1/6) b u^3, expands thermally
as a(T) = x0 + (b/2k^2) k_B T and, through zero-point motion with the
Einstein frequency omega = sqrt(k/M), acquires the mass dependence
a(0) = x0 + (b/4k^2) hbar omega. The lattice shift between isotopes feeds
the plasma frequency (delta_omega/omega = -(3/2) delta_a/a) and finally the
force, either through the first-order closed form or through two full
Lifshitz evaluations.
"""

from __future__ import annotations

import csv
import math
import os
import warnings
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .asymptotics import check_validity
from .constants import CONSTANTS, Temperature
from .dielectric import PlasmaModel, plasma_shift_from_lattice
from .errors import RegimeWarning, TableFormatError
from .lifshitz import (
    MatsubaraConfig,
    PlateSystem,
    casimir_force_finite_T,
    casimir_force_zero_T,
)
from .quadrature import QuadratureConfig

__all__ = [
    "AnharmonicLattice",
    "IsotopeRecord",
    "lattice_constant_thermal",
    "lattice_constant_zero_point",
    "delta_a_between_isotopes",
    "relative_force_difference",
    "force_difference_full",
    "load_isotope_table",
    "default_isotope_table_path",
    "DATA_DIR_ENV",
]

DATA_DIR_ENV = "CASIMIR_ISO_DATA_DIR"

_TABLE_HEADER = ["element", "A1", "A2", "delta_a_over_a", "T_K", "source"]


@dataclass(frozen=True)
class AnharmonicLattice:
    """Parameters of the 1-D interatomic potential model."""

    x0: float        # equilibrium spacing, m
    k_spring: float  # N/m
    b_anharm: float  # N/m^2
    M: float         # atomic mass, kg

    def __post_init__(self):
        if not (self.x0 > 0 and self.k_spring > 0 and self.M > 0):
            raise ValueError("x0, k_spring and M must be strictly positive")
        if not abs(self.b_anharm) * self.x0 < self.k_spring:
            raise ValueError(
                "anharmonicity too strong for the perturbative model: need |b|*x0 < k"
            )


@dataclass(frozen=True)
class IsotopeRecord:
    """One measured lattice-constant difference between an isotope pair."""

    element: str
    mass_number_1: int
    mass_number_2: int
    delta_a_over_a: float
    temperature: Temperature
    source: str

    def __post_init__(self):
        if self.mass_number_1 == self.mass_number_2:
            raise ValueError("isotope pair must have different mass numbers")
        if not abs(self.delta_a_over_a) < 1e-2:
            raise ValueError(
                f"|delta_a/a| = {abs(self.delta_a_over_a):.3g} outside the plausible range"
            )


def einstein_frequency(lat: AnharmonicLattice) -> float:
    """Single-oscillator frequency sqrt(k/M) of the chain."""
    return math.sqrt(lat.k_spring / lat.M)


def lattice_constant_thermal(lat: AnharmonicLattice, T: Temperature) -> float:
    """Classical thermal-expansion lattice constant x0 + (b/2k^2) k_B T."""
    return lat.x0 + lat.b_anharm / (2.0 * lat.k_spring**2) * CONSTANTS.k_B * T.kelvin


def lattice_constant_zero_point(lat: AnharmonicLattice) -> float:
    """T = 0 lattice constant x0 + (b/4k^2) hbar omega, omega = sqrt(k/M)."""
    return lat.x0 + lat.b_anharm / (4.0 * lat.k_spring**2) * CONSTANTS.hbar * einstein_frequency(lat)


def delta_a_between_isotopes(lat: AnharmonicLattice, M1: float, M2: float) -> tuple[float, float]:
    """Zero-point lattice-constant difference a(M2) - a(M1).

    Returns (delta_a_21 in metres, delta_a_over_a) with the relative value
    normalized by the zero-point lattice constant of isotope 1.
    """
    if not (M1 > 0 and M2 > 0):
        raise ValueError("isotope masses must be positive")
    coeff = lat.b_anharm * CONSTANTS.hbar * math.sqrt(lat.k_spring) / (4.0 * lat.k_spring**2)
    delta_a = coeff * (1.0 / math.sqrt(M2) - 1.0 / math.sqrt(M1))
    a_1 = lat.x0 + coeff / math.sqrt(M1)
    return delta_a, delta_a / a_1


def relative_force_difference(d: float, omega_p: float, delta_a_over_a: float) -> float:
    """First-order relative force difference -(8 c/(omega_p d)) * delta_a/a.

    Warns (RegimeWarning) when (d, omega_p) are outside the validity regime
    of the underlying asymptotic force formula.
    """
    report = check_validity(d, omega_p, Temperature(0.0))
    if not report.in_regime:
        warnings.warn(
            f"relative_force_difference outside validity regime "
            f"(skin_ratio={report.skin_ratio:.3g})",
            RegimeWarning,
            stacklevel=2,
        )
    return -(8.0 * CONSTANTS.c / (omega_p * d)) * delta_a_over_a


def force_difference_full(sys: PlateSystem, delta_a_over_a: float,
                          qcfg: QuadratureConfig | None = None,
                          mcfg: MatsubaraConfig | None = None) -> tuple[float, float]:
    """Force difference from two full Lifshitz evaluations at shifted omega_p.

    Isotope 2's plasma frequency is omega_p * (1 - (3/2) delta_a/a). With
    mcfg the finite-T engine is used, otherwise the T = 0 integral. Returns
    (delta_F_21 in newtons, delta_F_21 / F_1).
    """
    model = sys.model
    if not isinstance(model, PlasmaModel):
        raise TypeError("force_difference_full requires plasma-model plates")
    omega_2, _ = plasma_shift_from_lattice(model.omega_p, delta_a_over_a)
    sys_2 = PlateSystem(
        sys.separation,
        sys.area,
        PlasmaModel(omega_2, model.material_temperature),
    )
    if mcfg is None:
        f_1 = casimir_force_zero_T(sys, qcfg)
        f_2 = casimir_force_zero_T(sys_2, qcfg)
    else:
        f_1 = casimir_force_finite_T(sys, mcfg, qcfg)
        f_2 = casimir_force_finite_T(sys_2, mcfg, qcfg)
    delta_f = f_2 - f_1
    return delta_f, delta_f / f_1


def default_isotope_table_path() -> Path:
    """Shipped Table-1 dataset, overridable via the CASIMIR_ISO_DATA_DIR env var."""
    override = os.environ.get(DATA_DIR_ENV)
    if override:
        return Path(override) / "isotope_lattice.csv"
    return Path(resources.files("casimir_iso") / "data" / "isotope_lattice.csv")


def load_isotope_table(path) -> list[IsotopeRecord]:
    """Read isotope records from the CSV schema
    `element,A1,A2,delta_a_over_a,T_K,source` (schema 1).

    `#` lines are comments; a `# schema=N` comment must name schema 1.
    Malformed rows raise TableFormatError with the offending line number;
    duplicate (element, pair, temperature) keys are rejected. An empty file
    yields an empty list.
    """
    rows: list[tuple[int, list[str]]] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                tag = line.lstrip("#").strip()
                if tag.startswith("schema=") and tag != "schema=1":
                    raise TableFormatError(path, lineno, f"unsupported table {tag}")
                continue
            rows.append((lineno, next(csv.reader([line]))))
    if not rows:
        return []

    header_line, header = rows[0]
    if [h.strip() for h in header] != _TABLE_HEADER:
        raise TableFormatError(
            path, header_line, f"expected header {','.join(_TABLE_HEADER)!r}"
        )

    records: list[IsotopeRecord] = []
    seen: set[tuple] = set()
    for lineno, fields in rows[1:]:
        if len(fields) != 6:
            raise TableFormatError(path, lineno, f"expected 6 fields, got {len(fields)}")
        element, a1_s, a2_s, daa_s, t_s, source = (f.strip() for f in fields)
        try:
            record = IsotopeRecord(
                element=element,
                mass_number_1=int(a1_s),
                mass_number_2=int(a2_s),
                delta_a_over_a=float(daa_s),
                temperature=Temperature(float(t_s)),
                source=source,
            )
        except ValueError as exc:
            raise TableFormatError(path, lineno, str(exc)) from None
        key = (record.element, record.mass_number_1, record.mass_number_2,
               record.temperature.kelvin)
        if key in seen:
            raise TableFormatError(path, lineno, f"duplicate record {key}")
        seen.add(key)
        records.append(record)
    return records
