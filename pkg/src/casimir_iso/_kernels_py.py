"""Pure-numpy evaluation of the reduced Lifshitz integrands.

Reference implementation of the hot kernels; `casimir_iso._kernels_cy` is the
compiled twin with identical signatures and semantics. Selection happens in
`casimir_iso._backend`.

All kernels work in the substituted variable y = 2*d*xi*p/c with x = 2*d*xi/c
(so p = y/x >= 1), where the integrand decays like exp(-y). Both bracketed
factors of the Lifshitz formula are evaluated as s/(1 - s) with
s = r^2 * exp(-y), r being the inverse reflection ratio, so no large
exponential is ever materialized.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "reduced_integrand",
    "reduced_integrand_ideal",
    "reduced_integrand_plasma_l0",
    "reduced_integrand_static",
]


def reduced_integrand(y, x, eps):
    """y^2 * (TM + TE mode terms) for a finite permittivity eps at fixed x.

    kappa = sqrt(y^2 + (eps-1)*x^2) is x times the K-function; the TE inverse
    ratio is computed as (eps-1)*x^2/(kappa+y)^2, which is (kappa-y)/(kappa+y)
    without the subtractive cancellation.
    """
    y = np.asarray(y, dtype=float)
    q = (eps - 1.0) * x * x
    kappa = np.sqrt(y * y + q)
    r_te = q / ((kappa + y) ** 2)
    r_tm = (kappa - eps * y) / (kappa + eps * y)
    decay = np.exp(-y)
    s_tm = r_tm * r_tm * decay
    s_te = r_te * r_te * decay
    return y * y * (s_tm / (1.0 - s_tm) + s_te / (1.0 - s_te))


def reduced_integrand_ideal(y):
    """Ideal-conductor limit: both squared reflection ratios are 1."""
    y = np.asarray(y, dtype=float)
    out = np.zeros_like(y)
    pos = y > 0.0
    yp = y[pos]
    out[pos] = 2.0 * yp * yp / np.expm1(yp)
    return out


def reduced_integrand_plasma_l0(y, y_p):
    """Zero-frequency Matsubara term for the plasma model, y_p = 2*d*omega_p/c.

    The eps-weighted (TM) ratio goes to the ideal value 1; the unweighted (TE)
    ratio takes the finite limit (sqrt(y^2+y_p^2)-y)/(sqrt(y^2+y_p^2)+y).
    """
    y = np.asarray(y, dtype=float)
    out = np.zeros_like(y)
    pos = y > 0.0
    yp = y[pos]
    kappa = np.sqrt(yp * yp + y_p * y_p)
    r_te = y_p * y_p / ((kappa + yp) ** 2)
    s_te = r_te * r_te * np.exp(-yp)
    out[pos] = yp * yp * (1.0 / np.expm1(yp) + s_te / (1.0 - s_te))
    return out


def reduced_integrand_static(y, r_squared):
    """Zero-frequency term with a constant squared reflection ratio r_squared.

    Covers the finite-static-permittivity limit (TM ratio ((eps0-1)/(eps0+1))^2,
    TE contribution zero) used for tabulated models.
    """
    y = np.asarray(y, dtype=float)
    s = r_squared * np.exp(-y)
    return y * y * s / (1.0 - s)
