"""Lifshitz force between two thick identical parallel plates.

Two evaluators: the finite-temperature Matsubara sum and the T = 0 double
integral. Both work in the substituted variable y = 2*d*xi*p/c, where the
integrand decays like exp(-y); with x = 2*d*xi/c the force reduces to

    F(d, T) = -(k_B T A / (8 pi d^3)) * sum_l' I(x_l)      (finite T)
    F(d, 0) = -(hbar c A / (32 pi^2 d^4)) * int_0^inf I(x) dx

where I(x) = int_x^inf y^2 {TM + TE} dy and the l = 0 / x -> 0 term uses the
limiting reflection coefficients (ideal for the eps-weighted ratio under the
plasma model, the finite sqrt(y^2+y_p^2) form for the unweighted one).

All evaluations are pure; the Matsubara terms are accumulated in ascending-l
order through math.fsum, so results are reproducible no matter how terms
might be scheduled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _backend
from .constants import CONSTANTS, Temperature, matsubara_frequency
from .dielectric import DielectricModel, IdealConductor, PlasmaModel, TabulatedModel
from .errors import MatsubaraTruncationError
from .quadrature import QuadratureConfig, integrate_exp_tail

__all__ = [
    "PlateSystem",
    "MatsubaraConfig",
    "LifshitzResult",
    "k_function",
    "mode_term",
    "mode_term_ideal",
    "casimir_force_finite_T",
    "casimir_force_finite_T_detailed",
    "casimir_force_zero_T",
    "casimir_force_zero_T_detailed",
]

HARD_TERM_CAP = 1_000_000


@dataclass(frozen=True)
class PlateSystem:
    """Two identical thick plates: separation d, area A, one dielectric model.

    Mixed-material pairs are rejected at construction; the identical-plate
    Lifshitz formula carries a single permittivity.
    """

    separation: float
    area: float
    model_1: DielectricModel
    model_2: DielectricModel | None = None

    def __post_init__(self):
        if not self.separation > 0:
            raise ValueError(f"separation must be positive, got {self.separation}")
        if not self.area > 0:
            raise ValueError(f"area must be positive, got {self.area}")
        if self.model_2 is None:
            object.__setattr__(self, "model_2", self.model_1)
        elif self.model_2 != self.model_1:
            raise ValueError("mixed plates are not supported: model_1 must equal model_2")

    @property
    def model(self) -> DielectricModel:
        return self.model_1


@dataclass(frozen=True)
class MatsubaraConfig:
    """Field temperature plus the truncation policy for the l-sum."""

    field_temperature: Temperature
    term_rel_tol: float = 1e-10
    consecutive_small: int = 3

    def __post_init__(self):
        if not self.term_rel_tol > 0:
            raise ValueError("term_rel_tol must be positive")
        if self.consecutive_small < 2:
            raise ValueError("consecutive_small must be >= 2")


@dataclass(frozen=True)
class LifshitzResult:
    """Force in newtons (negative = attractive) plus numerical bookkeeping."""

    force: float
    error_estimate: float
    matsubara_terms: int | None = None


def k_function(p: float, eps: float) -> float:
    """sqrt(p^2 - 1 + eps), the wave-number factor of the reflection ratios."""
    if p < 1.0:
        raise ValueError(f"p must be >= 1, got {p}")
    if eps < 1.0:
        raise ValueError(f"eps must be >= 1, got {eps}")
    return math.sqrt(p * p - 1.0 + eps)


def mode_term(xi: float, p: float, d: float, eps: float) -> tuple[float, float]:
    """The two bracketed inverse factors of the Lifshitz formula at one point.

    Returns (tm_term, te_term), where tm is the eps-weighted factor. Both are
    computed as s/(1-s) with s = r^2 exp(-2 d xi p / c), so the exponential
    never overflows. eps must be finite: the ideal conductor has its own exact
    branch in mode_term_ideal.
    """
    if not (xi > 0 and d > 0):
        raise ValueError("xi and d must be positive")
    if p < 1.0:
        raise ValueError(f"p must be >= 1, got {p}")
    if math.isinf(eps):
        raise ValueError("eps is infinite; use mode_term_ideal for the ideal conductor")
    if eps < 1.0:
        raise ValueError(f"eps must be >= 1, got {eps}")
    if eps == 1.0:
        # vacuum plates: K = p makes both reflection ratios vanish
        return 0.0, 0.0
    x = 2.0 * d * xi / CONSTANTS.c
    y = x * p
    q = (eps - 1.0) * x * x
    kappa = math.sqrt(y * y + q)
    r_te = q / ((kappa + y) ** 2)
    r_tm = (kappa - eps * y) / (kappa + eps * y)
    decay = math.exp(-y)
    s_tm = r_tm * r_tm * decay
    s_te = r_te * r_te * decay
    return s_tm / (1.0 - s_tm), s_te / (1.0 - s_te)


def mode_term_ideal(xi: float, p: float, d: float) -> tuple[float, float]:
    """Ideal-conductor branch: both squared reflection ratios equal 1."""
    if not (xi > 0 and d > 0):
        raise ValueError("xi and d must be positive")
    if p < 1.0:
        raise ValueError(f"p must be >= 1, got {p}")
    y = 2.0 * d * xi * p / CONSTANTS.c
    t = 1.0 / math.expm1(y)
    return t, t


def _tail_bound(cut: float) -> float:
    """Upper bound on int_cut^inf y^2 (TM + TE) dy, valid for every model.

    Each mode term is at most exp(-y)/(1 - exp(-cut)) since r^2 <= 1, and
    int_Y^inf y^2 exp(-y) dy = exp(-Y) (Y^2 + 2Y + 2).
    """
    return 2.0 * math.exp(-cut) * (cut * cut + 2.0 * cut + 2.0) / -math.expm1(-cut)


def _outer_tail_bound(cut: float) -> float:
    """Upper bound on int_cut^inf I(x) dx for the zero-T outer integral."""
    return 2.0 * math.exp(-cut) * (cut * cut + 4.0 * cut + 6.0) / -math.expm1(-cut)


def _static_reflection_sq(model: TabulatedModel) -> float:
    # finite-static-permittivity limit, eps0 taken from the lowest sample
    eps0 = model.eps_samples[0]
    if math.isinf(eps0):
        return 1.0
    r = (eps0 - 1.0) / (eps0 + 1.0)
    return r * r


def _zero_frequency_integral(model, d, qcfg):
    kn = _backend.kernels
    if isinstance(model, IdealConductor):
        f = kn.reduced_integrand_ideal
    elif isinstance(model, PlasmaModel):
        y_p = 2.0 * d * model.omega_p / CONSTANTS.c
        f = lambda y: kn.reduced_integrand_plasma_l0(y, y_p)
    elif isinstance(model, TabulatedModel):
        r_sq = _static_reflection_sq(model)
        f = lambda y: kn.reduced_integrand_static(y, r_sq)
    else:
        raise TypeError(f"unsupported dielectric model {type(model).__name__}")
    return integrate_exp_tail(f, 0.0, qcfg, _tail_bound)


def _mode_sum_integral(model, x, xi, qcfg):
    """I(x) = int_x^inf y^2 (TM + TE) dy at Matsubara (or continuous) xi > 0."""
    kn = _backend.kernels
    if isinstance(model, IdealConductor):
        f = kn.reduced_integrand_ideal
    else:
        eps = model.epsilon_at(xi)
        f = lambda y: kn.reduced_integrand(y, x, eps)
    return integrate_exp_tail(f, x, qcfg, _tail_bound)


def casimir_force_finite_T_detailed(sys: PlateSystem, mcfg: MatsubaraConfig,
                                    qcfg: QuadratureConfig | None = None) -> LifshitzResult:
    """Matsubara-sum Lifshitz force at the configured field temperature.

    The l = 0 term is evaluated with the limiting reflection coefficients and
    weighted 1/2 (the primed-sum convention). Summation stops once
    `consecutive_small` successive terms fall below term_rel_tol times the
    running total; a hard cap of 10^6 terms raises MatsubaraTruncationError.
    """
    qcfg = qcfg or QuadratureConfig()
    T = mcfg.field_temperature
    if T.kelvin <= 0:
        raise ValueError("finite-temperature evaluation requires T > 0; use casimir_force_zero_T")
    d = sys.separation
    model = sys.model
    xi_1 = matsubara_frequency(1, T)
    x_1 = 2.0 * d * xi_1 / CONSTANTS.c

    value_0, err_0 = _zero_frequency_integral(model, d, qcfg)
    terms = [0.5 * value_0]
    errors = [0.5 * err_0]

    small_run = 0
    l = 1
    while small_run < mcfg.consecutive_small:
        if l > HARD_TERM_CAP:
            raise MatsubaraTruncationError(l - 1, math.fsum(terms), terms[-1])
        value_l, err_l = _mode_sum_integral(model, l * x_1, l * xi_1, qcfg)
        terms.append(value_l)
        errors.append(err_l)
        if abs(value_l) <= mcfg.term_rel_tol * abs(math.fsum(terms)):
            small_run += 1
        else:
            small_run = 0
        l += 1

    prefactor = CONSTANTS.k_B * T.kelvin * sys.area / (8.0 * math.pi * d**3)
    return LifshitzResult(
        force=-prefactor * math.fsum(terms),
        error_estimate=prefactor * math.fsum(errors),
        matsubara_terms=l - 1,
    )


def casimir_force_finite_T(sys: PlateSystem, mcfg: MatsubaraConfig,
                           qcfg: QuadratureConfig | None = None) -> float:
    return casimir_force_finite_T_detailed(sys, mcfg, qcfg).force


def casimir_force_zero_T_detailed(sys: PlateSystem,
                                  qcfg: QuadratureConfig | None = None) -> LifshitzResult:
    """Zero-temperature Lifshitz force: nested adaptive double integral.

    The inner y-integral runs a factor 10 tighter than the outer x-integral
    so inner noise does not masquerade as outer structure.
    """
    qcfg = qcfg or QuadratureConfig()
    d = sys.separation
    model = sys.model
    inner_cfg = QuadratureConfig(
        rel_tol=max(qcfg.rel_tol / 10.0, 1e-13),
        abs_tol=0.0,
        max_refinements=qcfg.max_refinements,
    )
    c = CONSTANTS.c

    def outer_integrand(xs):
        out = np.empty_like(xs)
        for i, x in enumerate(xs):
            value, _ = _mode_sum_integral(model, x, c * x / (2.0 * d), inner_cfg)
            out[i] = value
        return out

    value, err = integrate_exp_tail(outer_integrand, 0.0, qcfg, _outer_tail_bound)
    prefactor = CONSTANTS.hbar * c * sys.area / (32.0 * math.pi**2 * d**4)
    return LifshitzResult(force=-prefactor * value, error_estimate=prefactor * err)


def casimir_force_zero_T(sys: PlateSystem, qcfg: QuadratureConfig | None = None) -> float:
    return casimir_force_zero_T_detailed(sys, qcfg).force
