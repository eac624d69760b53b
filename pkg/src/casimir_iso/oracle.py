"""Brute-force fixed-grid Simpson reference for the Lifshitz force.

Deliberately independent of the adaptive engine: no code is shared with
`quadrature`, `lifshitz` or the kernel backends. The mode terms are written
directly in p-space as [R^2 exp(2 d xi p / c) - 1]^-1 with
R = (K + eps p)/(K - eps p) (and the unweighted analogue), summed over a
fixed Matsubara range and integrated on fixed composite-Simpson grids.
The p-grid is cut where the exponential has decayed to 1e-12, so the
largest exponential ever formed is about 1e12.

Error estimates come from recomputing on a halved grid; the difference is
reported unscaled (conservative for Simpson's ~15x gain per doubling).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import CONSTANTS, Temperature, matsubara_frequency
from .dielectric import DielectricModel, IdealConductor, PlasmaModel, TabulatedModel

__all__ = ["OracleResult", "oracle_force_finite_T", "oracle_force_zero_T"]

_ZETA3 = 1.2020569031595943
# exp(-Y_CUT) = 1e-12
_Y_CUT = 27.631021115928547


def _y_tail_bound(cut):
    # rigorous bound on the truncated int_cut^inf y^2 (tm + te) dy of one
    # mode sum: both squared reflection ratios are at most 1
    return 2.0 * math.exp(-cut) * (cut * cut + 2.0 * cut + 2.0) / -math.expm1(-cut)


@dataclass(frozen=True)
class OracleResult:
    force: float
    error_estimate: float


def _simpson(values, step):
    n = len(values) - 1
    if n % 2 != 0:
        raise ValueError("composite Simpson needs an even interval count")
    return step / 3.0 * (values[0] + values[-1]
                         + 4.0 * np.sum(values[1:-1:2])
                         + 2.0 * np.sum(values[2:-2:2]))


def _odd(n):
    return n if n % 2 == 1 else n + 1


def _p_integral(model: DielectricModel, xi: float, y_l: float, n_p: int,
                y_cut: float = _Y_CUT) -> float:
    """int_1^pmax p^2 (tm + te) dp with pmax set by exp(2 d xi p/c) = 1e12."""
    p_max = y_cut / y_l
    if p_max <= 1.0:
        return 0.0
    p = np.linspace(1.0, p_max, _odd(n_p))
    if isinstance(model, IdealConductor):
        tm = p * p / np.expm1(y_l * p)
        te = tm
    else:
        eps = model.epsilon_at(xi)
        K = np.sqrt(p * p - 1.0 + eps)
        grow = np.exp(y_l * p)
        ratio_tm = ((K + eps * p) / (K - eps * p)) ** 2
        ratio_te_den = K - p
        # K = p only when eps = 1, where the true term vanishes
        with np.errstate(divide="ignore"):
            ratio_te = ((K + p) / ratio_te_den) ** 2
        tm = p * p / (ratio_tm * grow - 1.0)
        te = np.where(np.isfinite(ratio_te), p * p / (ratio_te * grow - 1.0), 0.0)
    return float(_simpson(tm + te, p[1] - p[0]))


def _zero_frequency_y_integral(model: DielectricModel, d: float, n_y: int) -> float:
    """l = 0 (or x -> 0) limit of int y^2 (tm + te) dy on a fixed y-grid.

    Ideal: both mode terms are 1/(e^y - 1), giving the analytic 4*zeta(3).
    Plasma: TM is ideal-like (2*zeta(3)); TE uses the finite limiting ratio.
    Tabulated: TM with the static ((eps0-1)/(eps0+1))^2 ratio, TE zero.
    """
    if isinstance(model, IdealConductor):
        return 4.0 * _ZETA3
    y = np.linspace(0.0, 60.0, _odd(n_y))
    yp = y[1:]
    if isinstance(model, PlasmaModel):
        y_p = 2.0 * d * model.omega_p / CONSTANTS.c
        kappa = np.sqrt(yp * yp + y_p * y_p)
        r_sq = ((kappa - yp) / (kappa + yp)) ** 2
        s = r_sq * np.exp(-yp)
        integrand = np.concatenate(([0.0], yp * yp * s / (1.0 - s)))
        return 2.0 * _ZETA3 + float(_simpson(integrand, y[1] - y[0]))
    if isinstance(model, TabulatedModel):
        eps0 = model.eps_samples[0]
        r_sq = ((eps0 - 1.0) / (eps0 + 1.0)) ** 2
        s = r_sq * np.exp(-yp)
        integrand = np.concatenate(([0.0], yp * yp * s / (1.0 - s)))
        return float(_simpson(integrand, y[1] - y[0]))
    raise TypeError(f"unsupported dielectric model {type(model).__name__}")


def _finite_T_sum(d, A, T, model, n_p, l_max, y_cut):
    xi_1 = matsubara_frequency(1, T)
    x_1 = 2.0 * d * xi_1 / CONSTANTS.c
    # xi^3 * (p-integral) accumulated in (c/2d)^3 units: the l = 0 limit of
    # xi^3 int p^2(...)dp is (c/2d)^3 int y^2(...)dy
    acc = [0.5 * _zero_frequency_y_integral(model, d, 8 * n_p)]
    truncated = True
    for l in range(1, l_max + 1):
        y_l = l * x_1
        if y_l > y_cut:
            truncated = False
            break
        acc.append(_p_integral(model, l * xi_1, y_l, n_p, y_cut) * y_l**3)
    n_terms = len(acc) - 1
    total = math.fsum(acc)
    prefactor = (CONSTANTS.k_B * T.kelvin * A / (math.pi * CONSTANTS.c**3)) \
        * (CONSTANTS.c / (2.0 * d))**3
    # every computed term shares the p-grid cut at y = y_cut; the halved-grid
    # comparison cannot see that bias, so bound it explicitly
    tail = prefactor * n_terms * _y_tail_bound(y_cut)
    # residual Matsubara tail if the cap, not the exponential cut, ended the
    # loop: sum_{l>L} I_y(y_l) <= (1/x_1) int_{y_{L+1}} 2 y^2 e^-y dy
    if truncated:
        y_next = (l_max + 1) * x_1
        tail += prefactor * 2.0 * math.exp(-y_next) \
            * (y_next**2 + 4.0 * y_next + 6.0) / x_1
    return -prefactor * total, tail


def oracle_force_finite_T(d: float, A: float, T: Temperature, model: DielectricModel,
                          n_p: int = 2001, l_max: int = 2000,
                          y_cut: float = _Y_CUT) -> OracleResult:
    """Fixed-grid Simpson double sum over (l, p) for the finite-T force."""
    fine, tail = _finite_T_sum(d, A, T, model, n_p, l_max, y_cut)
    coarse, _ = _finite_T_sum(d, A, T, model, _odd(n_p // 2), l_max, y_cut)
    return OracleResult(force=fine, error_estimate=abs(fine - coarse) + tail)


def _zero_T_sum(d, A, model, n_x, n_p, x_cut, y_cut):
    xs = np.linspace(0.0, x_cut, _odd(n_x))
    g = np.empty_like(xs)
    # x^3 * (p-integral) -> the finite y-space limit at x = 0
    g[0] = _zero_frequency_y_integral(model, d, 8 * n_p)
    for i, x in enumerate(xs[1:], start=1):
        xi = CONSTANTS.c * x / (2.0 * d)
        g[i] = x**3 * _p_integral(model, xi, x, n_p, y_cut)
    integral = float(_simpson(g, xs[1] - xs[0]))
    prefactor = (CONSTANTS.hbar * A / (2.0 * math.pi**2 * CONSTANTS.c**3)) \
        * (CONSTANTS.c / (2.0 * d))**4
    # per-x p-grid truncation at y_cut plus the outer x-grid cut
    tail = prefactor * (x_cut * _y_tail_bound(y_cut)
                        + 2.0 * math.exp(-x_cut)
                        * (x_cut**2 + 4.0 * x_cut + 6.0) / -math.expm1(-x_cut))
    return -prefactor * integral, tail


def oracle_force_zero_T(d: float, A: float, model: DielectricModel,
                        n_x: int = 801, n_p: int = 2001, x_cut: float = 40.0,
                        y_cut: float = _Y_CUT) -> OracleResult:
    """Fixed-grid Simpson double integral over (xi, p) for the T = 0 force."""
    fine, tail = _zero_T_sum(d, A, model, n_x, n_p, x_cut, y_cut)
    coarse, _ = _zero_T_sum(d, A, model, _odd(n_x // 2), _odd(n_p // 2), x_cut, y_cut)
    return OracleResult(force=fine, error_estimate=abs(fine - coarse) + tail)
