# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled evaluation kernel for gauged quaternion Fourier sums.

Same contract as _kernels_py.eval_sum; one flat loop over points with an
inner loop over Fourier terms, all scalar complex arithmetic.
"""

from libc.math cimport cos, sin, exp, M_PI

import numpy as np


def eval_sum(double b0x, double b0y, double gauge,
             double ax, double ay,
             double complex[::1] deltas,
             double complex[::1] coeff_u,
             double complex[::1] coeff_v,
             double[::1] zx, double[::1] zy):
    cdef Py_ssize_t n = zx.shape[0]
    cdef Py_ssize_t nt = deltas.shape[0]
    out_u = np.empty(n, dtype=np.complex128)
    out_v = np.empty(n, dtype=np.complex128)
    cdef double complex[::1] ou = out_u
    cdef double complex[::1] ov = out_v
    cdef double complex su, sv, w
    cdef double arg, e, ph, g0, g1, dx, dy
    cdef Py_ssize_t p, t
    cdef bint has_growth = (ax != 0.0 or ay != 0.0)
    cdef bint has_gauge = (gauge != 0.0)
    for p in range(n):
        su = 0
        sv = 0
        for t in range(nt):
            dx = deltas[t].real
            dy = deltas[t].imag
            arg = 2.0 * M_PI * (dx * zx[p] + dy * zy[p])
            w = cos(arg) + 1j * sin(arg)
            su = su + coeff_u[t] * w
            sv = sv + coeff_v[t] * w
        if has_growth:
            e = exp(2.0 * M_PI * (ax * zx[p] + ay * zy[p]))
            su = su * e
            sv = sv * e
        if has_gauge:
            ph = M_PI * gauge * (b0x * zx[p] + b0y * zy[p])
            g0 = cos(ph)
            g1 = sin(ph)
            ou[p] = g0 * su - g1 * sv
            ov[p] = g0 * sv + g1 * su
        else:
            ou[p] = su
            ov[p] = sv
    return out_u, out_v
