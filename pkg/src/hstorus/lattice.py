"""Rank-2 lattices in C, dual lattices, reduction and point enumeration.

A lattice Gamma = Z*omega1 + Z*omega2 sits in C ~ R^2 with the real pairing
<a, b> = Re(conj(a) b).  The dual lattice Gamma* is spanned by eta1, eta2
with <eta_a, omega_b> = delta_ab.  Enumeration of translated dual lattice
points on circles and in disks is the combinatorial substrate of the
multiplier spectrum; results are always returned sorted by (Re, Im) so that
downstream output is reproducible bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateLattice
from .quat import pair

#: membership tolerance in dual-basis coordinates; lattice data in this
#: problem class is exact rationals/surds, so FD noise never gets close
LATTICE_TOL = 1e-9

_ENUM_PAD = 1e-9


def _solve2(a11, a12, a21, a22, b1, b2):
    det = a11 * a22 - a12 * a21
    if abs(det) < 1e-15 * (abs(a11) + abs(a12) + abs(a21) + abs(a22) + 1.0):
        raise DegenerateLattice("basis vectors are collinear")
    return (a22 * b1 - a12 * b2) / det, (a11 * b2 - a21 * b1) / det


@dataclass(frozen=True)
class DualLattice:
    """Basis of Gamma*; carries the coordinate/membership helpers."""

    eta1: complex
    eta2: complex

    def coords(self, z: complex) -> tuple[float, float]:
        """Coordinates (s, t) with z = s*eta1 + t*eta2."""
        return _solve2(self.eta1.real, self.eta2.real,
                       self.eta1.imag, self.eta2.imag, z.real, z.imag)

    def point(self, s: float, t: float) -> complex:
        return s * self.eta1 + t * self.eta2

    def contains(self, z: complex, tol: float = LATTICE_TOL) -> bool:
        """True iff the dual-basis coordinates of z are within tol of integers."""
        s, t = self.coords(z)
        return abs(s - round(s)) <= tol and abs(t - round(t)) <= tol

    def reduce(self, z: complex) -> complex:
        """Representative of z + Gamma* with coordinates in [0, 1); idempotent."""
        s, t = self.coords(z)
        s -= math.floor(s)
        t -= math.floor(t)
        # snap the upper boundary so re-reducing a reduced point is stable
        if s >= 1.0 - 1e-12:
            s = 0.0
        if t >= 1.0 - 1e-12:
            t = 0.0
        return self.point(s, t)

    def _coord_box(self, shift: complex, center: complex, radius: float):
        """Integer coordinate ranges covering the disk |p - center| <= radius
        for p in Gamma* + shift."""
        c = center - shift
        s0, t0 = self.coords(c)
        # row norms of the inverse basis matrix bound the coordinate spread
        a11, a12 = self.eta1.real, self.eta2.real
        a21, a22 = self.eta1.imag, self.eta2.imag
        det = abs(a11 * a22 - a12 * a21)
        if det == 0.0:
            raise DegenerateLattice("basis vectors are collinear")
        rs = math.hypot(a22, a12) / det
        rt = math.hypot(a21, a11) / det
        lo_s = math.ceil(s0 - radius * rs - 1e-9)
        hi_s = math.floor(s0 + radius * rs + 1e-9)
        lo_t = math.ceil(t0 - radius * rt - 1e-9)
        hi_t = math.floor(t0 + radius * rt + 1e-9)
        return range(lo_s, hi_s + 1), range(lo_t, hi_t + 1)

    def disk_points(self, shift: complex, center: complex, radius: float) -> list[complex]:
        """All points of Gamma* + shift in the closed disk around center."""
        out = []
        rng_s, rng_t = self._coord_box(shift, center, radius + _ENUM_PAD)
        for m in rng_s:
            for n in rng_t:
                p = shift + self.point(m, n)
                if abs(p - center) <= radius + _ENUM_PAD:
                    out.append(p)
        out.sort(key=lambda p: (p.real, p.imag))
        return out

    def circle_points(self, shift: complex, center: complex, radius: float,
                      tol: float = LATTICE_TOL) -> list[complex]:
        """All points of Gamma* + shift within tol of the circle |p - center| = radius."""
        out = []
        rng_s, rng_t = self._coord_box(shift, center, radius + tol)
        for m in rng_s:
            for n in rng_t:
                p = shift + self.point(m, n)
                if abs(abs(p - center) - radius) <= tol:
                    out.append(p)
        out.sort(key=lambda p: (p.real, p.imag))
        return out


@dataclass(frozen=True)
class Lattice:
    """Gamma = Z*omega1 + Z*omega2 defining the torus C/Gamma."""

    omega1: complex
    omega2: complex

    def __post_init__(self):
        area = (self.omega1.conjugate() * self.omega2).imag
        scale = abs(self.omega1) * abs(self.omega2)
        if scale == 0.0 or abs(area) < 1e-14 * scale:
            raise DegenerateLattice("lattice generators are collinear")

    def dual(self) -> DualLattice:
        """Basis eta_a with <eta_a, omega_b> = delta_ab."""
        s1, t1 = _solve2(self.omega1.real, self.omega1.imag,
                         self.omega2.real, self.omega2.imag, 1.0, 0.0)
        s2, t2 = _solve2(self.omega1.real, self.omega1.imag,
                         self.omega2.real, self.omega2.imag, 0.0, 1.0)
        return DualLattice(complex(s1, t1), complex(s2, t2))

    def generators(self) -> tuple[complex, complex]:
        return self.omega1, self.omega2

    def pairing_matrix(self, dual: DualLattice):
        """Gram pairing of a candidate dual basis against the generators."""
        return ((pair(dual.eta1, self.omega1), pair(dual.eta1, self.omega2)),
                (pair(dual.eta2, self.omega1), pair(dual.eta2, self.omega2)))
