"""Built-in consistency suite behind `casimir-iso validate`.

Each check recomputes something two independent ways and compares at a fixed
limit: the adaptive engine against closed forms, against the brute-force
Simpson oracle, and exact algebraic identities against themselves.
"""

from __future__ import annotations

from dataclasses import dataclass

from .asymptotics import ideal_pressure, plasma_corrected_force
from .constants import CONSTANTS, Temperature
from .dielectric import IdealConductor, PlasmaModel, plasma_shift_from_lattice
from .gravity import SlabPair, crossover_separation, newtonian_slab_pressure
from .isotope import load_isotope_table, relative_force_difference
from .lifshitz import MatsubaraConfig, PlateSystem, casimir_force_finite_T_detailed, \
    casimir_force_zero_T
from .oracle import oracle_force_finite_T
from .quadrature import QuadratureConfig

__all__ = ["CheckResult", "run_checks"]

_OMEGA_P = 1.37e16  # rad/s, valence-density scale used throughout the checks


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    measured: float
    limit: float
    note: str

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name}: {self.note} (measured {self.measured:.3e}, limit {self.limit:.3e})"


def _check(name, measured, limit, note) -> CheckResult:
    return CheckResult(name, measured <= limit, measured, limit, note)


def run_checks(isotope_table_path=None, rel_tol: float = 1e-8) -> list[CheckResult]:
    qcfg = QuadratureConfig(rel_tol=rel_tol)
    results = []

    # ideal-conductor reduction of the T = 0 engine
    d, A = 1e-6, 1e-4
    engine = casimir_force_zero_T(PlateSystem(d, A, IdealConductor()), qcfg)
    exact = ideal_pressure(d) * A
    results.append(_check(
        "ideal_reduction", abs(engine - exact) / abs(exact), 1e-3,
        "zero-T engine vs -pi^2 hbar c A/(240 d^4)",
    ))

    # first-order plasma asymptote vs the full engine, well in regime
    d = 7e-6
    full = casimir_force_zero_T(PlateSystem(d, A, PlasmaModel(_OMEGA_P)), qcfg)
    approx = plasma_corrected_force(d, A, _OMEGA_P)
    results.append(_check(
        "asymptotic_agreement", abs(full - approx) / abs(full), 2e-2,
        "full Lifshitz vs first-order finite-conductivity form",
    ))

    # adaptive engine vs fixed-grid Simpson oracle
    d = 1e-6
    sys = PlateSystem(d, A, PlasmaModel(_OMEGA_P))
    detailed = casimir_force_finite_T_detailed(sys, MatsubaraConfig(Temperature(300.0)), qcfg)
    ref = oracle_force_finite_T(d, A, Temperature(300.0), sys.model)
    combined = 3.0 * (abs(detailed.force) * rel_tol + detailed.error_estimate
                      + ref.error_estimate)
    results.append(_check(
        "oracle_spot_check", abs(detailed.force - ref.force), combined,
        "adaptive vs brute-force Simpson, plasma 1 um 300 K",
    ))

    # exact identities of the isotope chain
    delta = 1.4e-4
    _, rel_shift = plasma_shift_from_lattice(_OMEGA_P, delta)
    form_a = relative_force_difference(2e-6, _OMEGA_P, delta)
    form_b = (16.0 / 3.0) * (CONSTANTS.c / (_OMEGA_P * 2e-6)) * rel_shift
    scale = abs(form_a)
    results.append(_check(
        "eq_identity", abs(form_a - form_b) / scale, 1e-14,
        "-(8c/wd) da/a == (16/3)(c/wd)(-(3/2) da/a)",
    ))

    # gravity crossover residual
    slabs = SlabPair(8960.0, 8960.0, 1e-3, 1e-3, 1e-2)
    root = crossover_separation(slabs)
    residual = abs(abs(ideal_pressure(root)) / newtonian_slab_pressure(slabs) - 1.0)
    results.append(_check(
        "crossover_residual", residual, 1e-6,
        "|P_Casimir(root)| / P_gravity - 1 for Cu slabs",
    ))

    # shipped isotope table sanity
    records = load_isotope_table(isotope_table_path) if isotope_table_path else []
    if isotope_table_path:
        worst = max(abs(r.delta_a_over_a) for r in records) if records else 0.0
        results.append(_check(
            "isotope_table", worst, 2e-3,
            f"{len(records)} records load, |da/a| within the empirical range",
        ))
    return results
