"""Casimir force between parallel plates from the Lifshitz formula, with the
isotopic lattice-shift effect and a Newtonian-gravity background comparator.

Forces are returned in newtons with the attractive sign negative; everything
internal is SI.
"""

__version__ = "0.1.0"

from ._backend import available_backends, backend_name, use_backend
from .asymptotics import (
    REGIME_RATIO_MAX,
    ValidityReport,
    check_validity,
    ideal_pressure,
    plasma_corrected_force,
)
from .constants import (
    ATOMIC_MASS_KG,
    CODATA2018,
    CONSTANTS,
    CONSTANTS_ID,
    PhysicalConstants,
    Temperature,
    matsubara_frequency,
    pascal_to_dyn_per_cm2,
    thermal_wavelength,
)
from .dielectric import (
    DielectricModel,
    ElectronGasParams,
    IdealConductor,
    PlasmaModel,
    TabulatedModel,
    load_tabulated_model,
    plasma_frequency_from_density,
    plasma_shift_from_lattice,
)
from .errors import (
    BracketingError,
    CasimirIsoError,
    ConvergenceError,
    InfiniteThermalWavelength,
    MatsubaraTruncationError,
    RegimeWarning,
    TableFormatError,
    TabulatedRangeError,
)
from .gravity import SlabPair, crossover_separation, newtonian_slab_pressure
from .isotope import (
    AnharmonicLattice,
    IsotopeRecord,
    default_isotope_table_path,
    delta_a_between_isotopes,
    force_difference_full,
    lattice_constant_thermal,
    lattice_constant_zero_point,
    load_isotope_table,
    relative_force_difference,
)
from .lifshitz import (
    LifshitzResult,
    MatsubaraConfig,
    PlateSystem,
    casimir_force_finite_T,
    casimir_force_finite_T_detailed,
    casimir_force_zero_T,
    casimir_force_zero_T_detailed,
    k_function,
    mode_term,
    mode_term_ideal,
)
from .oracle import OracleResult, oracle_force_finite_T, oracle_force_zero_T
from .quadrature import QuadratureConfig

__all__ = [
    "__version__",
    "available_backends", "backend_name", "use_backend",
    "REGIME_RATIO_MAX", "ValidityReport", "check_validity", "ideal_pressure",
    "plasma_corrected_force",
    "ATOMIC_MASS_KG", "CODATA2018", "CONSTANTS", "CONSTANTS_ID",
    "PhysicalConstants", "Temperature", "matsubara_frequency",
    "pascal_to_dyn_per_cm2", "thermal_wavelength",
    "DielectricModel", "ElectronGasParams", "IdealConductor", "PlasmaModel",
    "TabulatedModel", "load_tabulated_model", "plasma_frequency_from_density",
    "plasma_shift_from_lattice",
    "BracketingError", "CasimirIsoError", "ConvergenceError",
    "InfiniteThermalWavelength", "MatsubaraTruncationError", "RegimeWarning",
    "TableFormatError", "TabulatedRangeError",
    "SlabPair", "crossover_separation", "newtonian_slab_pressure",
    "AnharmonicLattice", "IsotopeRecord", "default_isotope_table_path",
    "delta_a_between_isotopes", "force_difference_full",
    "lattice_constant_thermal", "lattice_constant_zero_point",
    "load_isotope_table", "relative_force_difference",
    "LifshitzResult", "MatsubaraConfig", "PlateSystem",
    "casimir_force_finite_T", "casimir_force_finite_T_detailed",
    "casimir_force_zero_T", "casimir_force_zero_T_detailed",
    "k_function", "mode_term", "mode_term_ideal",
    "OracleResult", "oracle_force_finite_T", "oracle_force_zero_T",
    "QuadratureConfig",
]
