"""The multiplier spectrum of a Hamiltonian stationary torus.

A multiplier is a homomorphism Gamma -> C* of the form

    h_gamma = e^{2 pi (<growth, gamma> - i <phase, gamma>)}

parametrized by a pair (growth, phase) in C^2, phase taken modulo Gamma*.
A pair carries holomorphic sections iff some delta in Gamma* + beta0/2
satisfies

    |delta - phase|^2 - |growth|^2 = |beta0|^2 / 4,   <delta - phase, growth> = 0,

and the number of such frequencies is the complex dimension of the section
space.  Each admissible frequency has the slope

    lam_delta = (2/beta0) (delta - i*growth - phase),

which identifies the spectrum with a plane curve: `key_from_lambda` is the
normalization map, and `spectral_point` translates the flat-connection
parameter mu = 1/lam^2 into the same data.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import cached_property

from .errors import Beta0NotInDualLattice, ZeroLambda, ZeroMu
from .lattice import LATTICE_TOL, Lattice
from .quat import pair

#: |growth| below this multiple of |beta0| is snapped to exactly 0: the two
#: enumeration branches are discontinuous and unit-circle lambdas built in
#: floating point would otherwise inherit a rounding-noise direction
GROWTH_SNAP = 1e-12


def multiplier_value(growth: complex, phase: complex, gamma: complex) -> complex:
    """h_gamma = e^{2 pi (<growth, gamma> - i <phase, gamma>)}."""
    return cmath.exp(2.0 * math.pi * complex(pair(growth, gamma), -pair(phase, gamma)))


@dataclass(frozen=True)
class MultiplierKey:
    """A spectrum point: (growth, phase) plus its admissible frequencies.

    phase is stored reduced modulo Gamma*; freqs/lambdas are aligned tuples
    sorted by frequency.
    """

    lattice: Lattice
    beta0: complex
    growth: complex
    phase: complex
    freqs: tuple[complex, ...]
    lambdas: tuple[complex, ...]

    @property
    def dim(self) -> int:
        """Complex dimension of the section space with this multiplier."""
        return len(self.freqs)

    def value(self, gamma: complex) -> complex:
        return multiplier_value(self.growth, self.phase, gamma)

    @cached_property
    def circle_angles(self) -> tuple[float, ...]:
        """For growth = 0: angles t in [0, 2pi) with freqs = phase - (beta0/2) e^{it}."""
        out = []
        for delta in self.freqs:
            w = 2.0 * (self.phase - delta) / self.beta0
            t = math.atan2(w.imag, w.real) % (2.0 * math.pi)
            out.append(t)
        return tuple(out)


def _lambda_of(beta0: complex, growth: complex, phase: complex, delta: complex) -> complex:
    return 2.0 * (delta - 1j * growth - phase) / beta0


def multiplier_key(lattice: Lattice, beta0: complex, growth: complex,
                   phase: complex, tol: float = LATTICE_TOL) -> MultiplierKey:
    """Admissible frequencies and slopes of the multiplier (growth, phase).

    growth = 0: all translated dual lattice points on the circle of radius
    |beta0|/2 around phase.  growth != 0: the two candidates
    phase +- i r growth/|growth|, r = sqrt(|growth|^2 + |beta0|^2/4), kept if
    they land in Gamma* + beta0/2.  The frequency set may be empty.
    """
    dual = lattice.dual()
    if beta0 == 0 or not dual.contains(beta0, tol):
        raise Beta0NotInDualLattice(f"beta0={beta0} is not a nonzero dual lattice point")
    if abs(growth) < GROWTH_SNAP * abs(beta0):
        growth = 0j
    phase = dual.reduce(phase)
    if growth == 0:
        freqs = dual.circle_points(beta0 / 2.0, phase, abs(beta0) / 2.0, tol)
    else:
        r = math.sqrt(abs(growth) ** 2 + abs(beta0) ** 2 / 4.0)
        direction = growth / abs(growth)
        freqs = []
        for sign in (1.0, -1.0):
            cand = phase + sign * 1j * r * direction
            if dual.contains(cand - beta0 / 2.0, tol):
                freqs.append(cand)
        freqs.sort(key=lambda p: (p.real, p.imag))
    lambdas = tuple(_lambda_of(beta0, growth, phase, d) for d in freqs)
    return MultiplierKey(lattice, beta0, growth, phase, tuple(freqs), lambdas)


def double_points(lattice: Lattice, beta0: complex,
                  max_norm: float) -> list[tuple[complex, complex]]:
    """All (zeta, growth) with zeta in Gamma*, |beta0| < |zeta| <= max_norm and

        growth = -(i/2) zeta sqrt(1 - |beta0|^2/|zeta|^2),

    the points where the section space of a growing multiplier jumps to
    dimension two.
    """
    if max_norm <= abs(beta0):
        raise ValueError("max_norm must exceed |beta0|")
    dual = lattice.dual()
    out = []
    for zeta in dual.disk_points(0.0, 0.0, max_norm):
        if abs(zeta) <= abs(beta0) + 1e-9:
            continue
        growth = -0.5j * zeta * math.sqrt(1.0 - (abs(beta0) / abs(zeta)) ** 2)
        out.append((zeta, growth))
    return out


def conjugate_key(key: MultiplierKey, tol: float = LATTICE_TOL) -> MultiplierKey:
    """Image of the key under the real structure (growth, phase) -> (growth, -phase)."""
    return multiplier_key(key.lattice, key.beta0, key.growth, -key.phase, tol)


def is_real_multiplier(key: MultiplierKey, tol: float = LATTICE_TOL) -> bool:
    """True iff the multiplier is real valued on the lattice.

    Happens exactly at the dimension-two growth values (the double points)
    and, for growth = 0, at phase in (1/2) Gamma*.
    """
    if key.growth == 0:
        return key.lattice.dual().contains(2.0 * key.phase, tol)
    return key.dim == 2


def key_from_lambda(lattice: Lattice, beta0: complex, lam: complex,
                    tol: float = LATTICE_TOL) -> MultiplierKey:
    """Normalization map C* -> spectrum.

    growth = (i beta0/4)(lam - 1/conj(lam)), phase = (beta0/4)(2 - lam - 1/conj(lam))
    mod Gamma*; inverts the slope map on every dimension-one key.
    """
    if lam == 0:
        raise ZeroLambda("normalization map is undefined at lambda = 0")
    inv_bar = 1.0 / lam.conjugate()
    growth = 0.25j * beta0 * (lam - inv_bar)
    phase = 0.25 * beta0 * (2.0 - lam - inv_bar)
    return multiplier_key(lattice, beta0, growth, phase, tol)


@dataclass(frozen=True)
class SpectralPoint:
    """Flat-connection parameter mu with its multiplier-curve dictionary.

    sqrt_mu uses the principal branch (cut on the negative reals, approached
    from above); lam = 1/sqrt_mu satisfies mu * lam^2 = 1 exactly by
    construction.  growth and freq_offset are the A/C coefficients of the
    parallel-section exponents: sections have growth +-growth and frequency
    offset delta - phase = +-freq_offset with delta = beta0/2.
    """

    mu: complex
    sqrt_mu: complex
    lam: complex
    growth: complex
    freq_offset: complex

    @property
    def a(self) -> complex:
        return 0.5 * (self.mu + 1.0 / self.mu)

    @property
    def b_c(self) -> complex:
        """Right-multiplication constant b = (1/mu - mu) i / 2."""
        return 0.5j * (1.0 / self.mu - self.mu)


def spectral_point(mu: complex, beta0: complex) -> SpectralPoint:
    if mu == 0:
        raise ZeroMu("flat-connection parameter must be nonzero")
    mu = complex(mu)
    if mu.imag == 0.0:
        mu = complex(mu.real, 0.0)  # normalize -0.0 so the branch cut is stable
    root = cmath.sqrt(mu)
    lam = 1.0 / root
    growth = 0.25j * beta0 * (1.0 / root - root.conjugate())
    freq_offset = 0.25 * beta0 * (1.0 / root + root.conjugate())
    return SpectralPoint(mu=mu, sqrt_mu=root, lam=lam,
                         growth=growth, freq_offset=freq_offset)


def is_degenerate_monodromy(lattice: Lattice, beta0: complex, mu: complex,
                            tol: float = LATTICE_TOL) -> bool:
    """True iff the flat-connection monodromy at mu is a multiple of the identity:
    mu on the unit circle with beta0*conj(sqrt(mu)) in Gamma*."""
    point = spectral_point(mu, beta0)
    if abs(abs(point.mu) - 1.0) > tol:
        return False
    return lattice.dual().contains(beta0 * point.sqrt_mu.conjugate(), tol)
