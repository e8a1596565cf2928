"""Gauged quaternion Fourier sums: the one evaluable shape everything uses.

Surfaces, their derivatives, holomorphic sections and the polychromatic
transform numerators are all of the form

    q(z) = e^{j*gauge*beta(z)/2} * [ sum_t q_t e^{2 pi i <delta_t, z>} ] * e^{2 pi <growth, z>}

with beta(z) = 2 pi <beta0, z>, constant quaternions q_t and complex
frequencies delta_t.  Closed under d/dx and d/dy (term-wise product rule), so
analytic derivatives are again fields of the same shape and the finite
difference code in `verify` never shares a derivative routine with them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import backend
from .quat import Quaternion

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class FourierField:
    """Evaluable gauged Fourier sum with quaternion coefficients.

    Terms are stored in split form (delta, u, v) with coefficient u + j v.
    ``gauge`` multiplies j*beta/2 in the exponent (0: no gauge, 1: e^{j beta/2},
    2: e^{j beta}).
    """

    beta0: complex
    gauge: float
    growth: complex
    terms: tuple[tuple[complex, complex, complex], ...]

    @classmethod
    def from_quaternion_terms(cls, beta0, gauge, growth, items) -> "FourierField":
        """items: iterable of (delta, Quaternion coefficient)."""
        terms = []
        for delta, q in items:
            u, v = q.split()
            terms.append((complex(delta), u, v))
        return cls(complex(beta0), float(gauge), complex(growth), tuple(terms))

    @cached_property
    def _packed(self):
        deltas = np.array([t[0] for t in self.terms], dtype=np.complex128)
        cu = np.array([t[1] for t in self.terms], dtype=np.complex128)
        cv = np.array([t[2] for t in self.terms], dtype=np.complex128)
        return deltas, cu, cv

    def values(self, zx: np.ndarray, zy: np.ndarray):
        """Split components (u, v) at the points zx + i zy (flat float arrays)."""
        deltas, cu, cv = self._packed
        return backend.eval_sum(self.beta0.real, self.beta0.imag, self.gauge,
                                self.growth.real, self.growth.imag,
                                deltas, cu, cv, zx, zy)

    def value(self, z: complex) -> Quaternion:
        zx = np.array([z.real], dtype=np.float64)
        zy = np.array([z.imag], dtype=np.float64)
        u, v = self.values(zx, zy)
        return Quaternion.from_split(complex(u[0]), complex(v[0]))

    def _derivative(self, s: float, coord: str) -> "FourierField":
        # term-wise product rule: gauge contributes left mult by j*s, the
        # exponentials contribute right mult by a complex constant
        terms = []
        for delta, u, v in self.terms:
            if coord == "x":
                c = TWO_PI * complex(self.growth.real, delta.real)
            else:
                c = TWO_PI * complex(self.growth.imag, delta.imag)
            nu = -s * v + u * c
            nv = s * u + v * c
            terms.append((delta, nu, nv))
        return FourierField(self.beta0, self.gauge, self.growth, tuple(terms))

    def dx(self) -> "FourierField":
        return self._derivative(self.gauge * np.pi * self.beta0.real, "x")

    def dy(self) -> "FourierField":
        return self._derivative(self.gauge * np.pi * self.beta0.imag, "y")

    def ungauged(self) -> "FourierField":
        """Same Fourier sum with the e^{j*gauge*beta/2} prefactor dropped."""
        return FourierField(self.beta0, 0.0, self.growth, self.terms)


# --- split-quaternion helpers on numpy arrays -----------------------------
# a batched quaternion is a pair (u, v) of complex arrays with q = u + j v

def qa_mul(a, b):
    au, av = a
    bu, bv = b
    return au * bu - np.conj(av) * bv, np.conj(au) * bv + av * bu


def qa_conj(a):
    u, v = a
    return np.conj(u), -v


def qa_norm2(a):
    u, v = a
    return (u * np.conj(u)).real + (v * np.conj(v)).real


def qa_abs(a):
    return np.sqrt(qa_norm2(a))


def qa_inv(a):
    u, v = a
    n2 = qa_norm2(a)
    return np.conj(u) / n2, -v / n2


def qa_add(a, b):
    return a[0] + b[0], a[1] + b[1]


def qa_sub(a, b):
    return a[0] - b[0], a[1] - b[1]


def qa_scale(a, s):
    """Multiply by a real scalar or real array."""
    return a[0] * s, a[1] * s


def qa_right_complex(a, c):
    """Right multiplication by a complex scalar or complex array."""
    return a[0] * c, a[1] * c


def qa_left_complex(c, a):
    """Left multiplication by a complex scalar or complex array."""
    return c * a[0], np.conj(c) * a[1]


def qa_const(q: Quaternion, shape):
    u, v = q.split()
    return np.full(shape, u, dtype=np.complex128), np.full(shape, v, dtype=np.complex128)


def qa_at(a, idx) -> Quaternion:
    return Quaternion.from_split(complex(a[0][idx]), complex(a[1][idx]))
