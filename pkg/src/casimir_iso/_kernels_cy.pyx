# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled evaluation of the reduced Lifshitz integrands.

Twin of `casimir_iso._kernels_py` with identical signatures and semantics;
see that module for the variable conventions.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport exp, expm1, sqrt

cnp.import_array()

__all__ = [
    "reduced_integrand",
    "reduced_integrand_ideal",
    "reduced_integrand_plasma_l0",
    "reduced_integrand_static",
]


def reduced_integrand(y, double x, double eps):
    cdef double[::1] yv = np.ascontiguousarray(y, dtype=np.float64)
    cdef Py_ssize_t n = yv.shape[0]
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef double q = (eps - 1.0) * x * x
    cdef double yi, kappa, r_te, r_tm, decay, s_tm, s_te
    cdef Py_ssize_t i
    for i in range(n):
        yi = yv[i]
        kappa = sqrt(yi * yi + q)
        r_te = q / ((kappa + yi) * (kappa + yi))
        r_tm = (kappa - eps * yi) / (kappa + eps * yi)
        decay = exp(-yi)
        s_tm = r_tm * r_tm * decay
        s_te = r_te * r_te * decay
        out[i] = yi * yi * (s_tm / (1.0 - s_tm) + s_te / (1.0 - s_te))
    return out_arr


def reduced_integrand_ideal(y):
    cdef double[::1] yv = np.ascontiguousarray(y, dtype=np.float64)
    cdef Py_ssize_t n = yv.shape[0]
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef double yi
    cdef Py_ssize_t i
    for i in range(n):
        yi = yv[i]
        out[i] = 2.0 * yi * yi / expm1(yi) if yi > 0.0 else 0.0
    return out_arr


def reduced_integrand_plasma_l0(y, double y_p):
    cdef double[::1] yv = np.ascontiguousarray(y, dtype=np.float64)
    cdef Py_ssize_t n = yv.shape[0]
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef double yi, kappa, r_te, s_te
    cdef Py_ssize_t i
    for i in range(n):
        yi = yv[i]
        if yi > 0.0:
            kappa = sqrt(yi * yi + y_p * y_p)
            r_te = y_p * y_p / ((kappa + yi) * (kappa + yi))
            s_te = r_te * r_te * exp(-yi)
            out[i] = yi * yi * (1.0 / expm1(yi) + s_te / (1.0 - s_te))
        else:
            out[i] = 0.0
    return out_arr


def reduced_integrand_static(y, double r_squared):
    cdef double[::1] yv = np.ascontiguousarray(y, dtype=np.float64)
    cdef Py_ssize_t n = yv.shape[0]
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef double yi, s
    cdef Py_ssize_t i
    for i in range(n):
        yi = yv[i]
        s = r_squared * exp(-yi)
        out[i] = yi * yi * s / (1.0 - s)
    return out_arr
