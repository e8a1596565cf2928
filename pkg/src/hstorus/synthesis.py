"""Hamiltonian stationary torus synthesis and pointwise surface data.

A torus is prescribed by a lattice Gamma, a Lagrangian angle frequency
beta0 in Gamma* and quaternion Fourier coefficients c_delta attached to the
admissible half frequencies (|delta| = |beta0|/2, delta in Gamma* + beta0/2,
Im(delta/beta0) > 0):

    f = e^{j*beta/2} sum_delta (1 - k*2delta/beta0) e_delta c_delta,
    beta(z) = 2 pi <beta0, z>,  e_delta(z) = e^{2 pi i <delta, z>}.

All derivatives are produced analytically by term-wise differentiation of
the field; the finite-difference checks in `verify` are the independent
counterpart.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (AllZeroCoefficients, Beta0NotInDualLattice, BranchPoint)
from .fourier import FourierField
from .lattice import LATTICE_TOL, Lattice
from .quat import I, K, Quaternion, gauge_exp, pair

#: below this |g| the immersion is treated as branched
BRANCH_TOL = 1e-12


def admissible_frequencies(lattice: Lattice, beta0: complex, *,
                           half: bool = False,
                           include_constant: bool = False,
                           tol: float = LATTICE_TOL) -> list[complex]:
    """Frequencies delta in Gamma* + beta0/2 with |delta| = |beta0|/2.

    By definition the two axis points +-beta0/2 are excluded (their sections
    are the constant ones); pass include_constant=True to keep them.  With
    half=True only the representatives with Im(delta/beta0) > 0 are returned.
    """
    dual = lattice.dual()
    if beta0 == 0 or not dual.contains(beta0, tol):
        raise Beta0NotInDualLattice(f"beta0={beta0} is not a nonzero dual lattice point")
    circle = dual.circle_points(beta0 / 2.0, 0.0, abs(beta0) / 2.0, tol)
    if not include_constant:
        circle = [d for d in circle
                  if abs(d - beta0 / 2.0) > tol and abs(d + beta0 / 2.0) > tol]
    if half:
        circle = [d for d in circle if (d * beta0.conjugate()).imag > 0.0]
    return circle


@dataclass(frozen=True)
class SurfaceJet:
    """Pointwise surface data: position, partials, gauge data and normals."""

    z: complex
    f: Quaternion
    fx: Quaternion
    fy: Quaternion
    g: Quaternion
    beta: float
    N: Quaternion
    R: Quaternion
    H: Quaternion


@dataclass(frozen=True)
class HslTorus:
    """Hamiltonian stationary torus prescribed by Fourier data.

    coeffs: tuple of (delta, c) with delta an admissible half frequency and
    c a quaternion.  Factories and config loading call validate(); direct
    construction is left unchecked so that deliberately broken tori can be
    fed to the verification layer.
    """

    lattice: Lattice
    beta0: complex
    coeffs: tuple[tuple[complex, Quaternion], ...]

    def validate(self, tol: float = LATTICE_TOL) -> "HslTorus":
        dual = self.lattice.dual()
        if self.beta0 == 0 or not dual.contains(self.beta0, tol):
            raise Beta0NotInDualLattice(f"beta0={self.beta0} invalid for this lattice")
        half_circle = abs(self.beta0) / 2.0
        for delta, _ in self.coeffs:
            if abs(abs(delta) - half_circle) > tol:
                raise ValueError(f"frequency {delta} is off the circle |delta|=|beta0|/2")
            if not dual.contains(delta - self.beta0 / 2.0, tol):
                raise ValueError(f"frequency {delta} is not in Gamma* + beta0/2")
            if (delta * self.beta0.conjugate()).imag <= 0.0:
                raise ValueError(f"frequency {delta} is not in the positive half set")
        if not any(abs(c) > 0.0 for _, c in self.coeffs):
            raise AllZeroCoefficients("torus needs at least one nonzero coefficient")
        return self

    def beta(self, z: complex) -> float:
        """Lagrangian angle 2 pi <beta0, z>."""
        return 2.0 * math.pi * pair(self.beta0, z)

    @cached_property
    def field(self) -> FourierField:
        """The position map f as a gauged Fourier sum."""
        terms = []
        for delta, c in self.coeffs:
            lam = 2.0 * delta / self.beta0
            c0, c1 = c.split()
            if c0 != 0:
                # (1 - k*lam) c0 at frequency +delta
                terms.append((delta, c0, 1j * lam * c0))
            if c1 != 0:
                # (1 - k*lam) j c1 lands at frequency -delta
                terms.append((-delta, 1j * lam.conjugate() * c1, c1))
        return FourierField(self.beta0, 1.0, 0.0, tuple(terms))

    @cached_property
    def field_dx(self) -> FourierField:
        return self.field.dx()

    @cached_property
    def field_dy(self) -> FourierField:
        return self.field.dy()

    @cached_property
    def field_g(self) -> FourierField:
        """g = e^{-j*beta/2} fx, the ungauged derivative sum."""
        return self.field_dx.ungauged()

    def position(self, z: complex) -> Quaternion:
        return self.field.value(z)

    def position_grid(self, zx, zy):
        return self.field.values(zx, zy)

    def jet(self, z: complex) -> SurfaceJet:
        """Full first-order data at z; raises BranchPoint where |g| ~ 0."""
        f = self.field.value(z)
        fx = self.field_dx.value(z)
        fy = self.field_dy.value(z)
        g = self.field_g.value(z)
        if abs(g) < BRANCH_TOL:
            raise BranchPoint(f"|g(z)| < {BRANCH_TOL} at z={z}")
        beta = self.beta(z)
        gauge = gauge_exp(beta)          # e^{j*beta/2}
        N = gauge_exp(2.0 * beta) * I     # e^{j*beta} i
        g_inv = g.inverse()
        R = -(g_inv * I * g)
        H = g_inv * (math.pi * self.beta0.conjugate()) * gauge * K
        return SurfaceJet(z=z, f=f, fx=fx, fy=fy, g=g, beta=beta, N=N, R=R, H=H)


def _monochromatic_coefficient(beta0: complex, delta: complex,
                               value_at_zero: Quaternion) -> Quaternion:
    """c with (1 - k*2delta/beta0) c equal to the prescribed value at z=0."""
    lam = 2.0 * delta / beta0
    carrier = Quaternion.from_split(1.0, 1j * lam)  # 1 - k*lam
    return carrier.inverse() * value_at_zero


def homogeneous_torus(r1: float, r2: float) -> HslTorus:
    """Product-of-circles torus of radii 1/r1, 1/r2 on (1/r1)Z + (i/r2)Z.

    The single quaternion coefficient is matched at z=0 and the closed form
    f(x, y) = (1/r1) e^{2 pi j r1 x} + i (1/r2) e^{2 pi j r2 y} is re-checked
    on a grid.
    """
    if r1 <= 0 or r2 <= 0:
        raise ValueError("radii parameters must be positive")
    lattice = Lattice(complex(1.0 / r1, 0.0), complex(0.0, 1.0 / r2))
    beta0 = complex(r1, -r2)
    delta = complex(r1, r2) / 2.0
    c = _monochromatic_coefficient(beta0, delta, Quaternion(1.0 / r1, 1.0 / r2, 0.0, 0.0))
    torus = HslTorus(lattice, beta0, ((delta, c),)).validate()

    def closed_form(x, y):
        return Quaternion(math.cos(2 * math.pi * r1 * x) / r1,
                          math.cos(2 * math.pi * r2 * y) / r2,
                          math.sin(2 * math.pi * r1 * x) / r1,
                          math.sin(2 * math.pi * r2 * y) / r2)

    for x in (0.13 / r1, 0.61 / r1):
        for y in (0.27 / r2, 0.83 / r2):
            got = torus.position(complex(x, y))
            if abs(got - closed_form(x, y)) > 1e-10:
                raise RuntimeError("homogeneous coefficient matching failed")
    return torus


def clifford_torus() -> HslTorus:
    return homogeneous_torus(1.0, 1.0)


def castro_urbano_torus() -> HslTorus:
    """Square-lattice torus with angle frequency 3+i and two frequencies.

    The two quaternion weights (1-4j+3k)/5 and (1-3j+4k)/5 are attached to
    the half frequencies (-1+3i)/2 and (1+3i)/2, so f(0) = (2-7j+7k)/5.
    """
    lattice = Lattice(1.0 + 0.0j, 1.0j)
    beta0 = 3.0 + 1.0j
    data = [
        (complex(-0.5, 1.5), Quaternion(0.2, 0.0, -0.8, 0.6)),
        (complex(0.5, 1.5), Quaternion(0.2, 0.0, -0.6, 0.8)),
    ]
    coeffs = tuple((delta, _monochromatic_coefficient(beta0, delta, q))
                   for delta, q in data)
    return HslTorus(lattice, beta0, coeffs).validate()
