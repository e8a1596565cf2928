"""Pure numpy evaluation kernel; mirror of the compiled extension.

Quaternions travel in split form (u, v) with q = u + j v, u, v complex.
The one hot primitive evaluates a gauged Fourier sum

    q(z) = e^{j*gauge*pi*<b0, z>} * [ sum_t q_t e^{2 pi i <d_t, z>} ] * e^{2 pi <a, z>}

over a batch of points.  Term accumulation runs in term order so both
backends agree to rounding.
"""

import numpy as np

TWO_PI = 2.0 * np.pi


def eval_sum(b0x, b0y, gauge, ax, ay, deltas, coeff_u, coeff_v, zx, zy):
    """Evaluate the sum at points (zx, zy); returns split components (u, v)."""
    su = np.zeros(zx.shape, dtype=np.complex128)
    sv = np.zeros(zx.shape, dtype=np.complex128)
    for t in range(deltas.shape[0]):
        d = deltas[t]
        w = np.exp(1j * TWO_PI * (d.real * zx + d.imag * zy))
        su += coeff_u[t] * w
        sv += coeff_v[t] * w
    if ax != 0.0 or ay != 0.0:
        e = np.exp(TWO_PI * (ax * zx + ay * zy))
        su *= e
        sv *= e
    if gauge != 0.0:
        ph = np.pi * gauge * (b0x * zx + b0y * zy)
        g0 = np.cos(ph)
        g1 = np.sin(ph)
        return g0 * su - g1 * sv, g0 * sv + g1 * su
    return su, sv
