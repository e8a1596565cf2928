"""Quaternion arithmetic with the two distinguished complex subalgebras.

R^4 is identified with the quaternions H.  Two complex planes play fixed
roles everywhere: C = span{1, i} carries multipliers, frequencies and all
spectral parameters, while F = span{1, j} carries the gauge factors
e^{j*beta/2} built from the Lagrangian angle.  Every quaternion splits
uniquely as q = u + j*v with u, v in C, and complex scalars hop across j by
conjugation: j*z = conj(z)*j.  The split convention is pinned here once and
used by every other module:

    q = w + x i + y j + z k   <->   u = w + x i,  v = y - z i
"""

from __future__ import annotations

import math

from .errors import ZeroQuaternion


def pair(a: complex, b: complex) -> float:
    """Real scalar product on C identified with R^2: Re(conj(a)*b)."""
    return a.real * b.real + a.imag * b.imag


class Quaternion:
    """Immutable quaternion w + x i + y j + z k over double floats."""

    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w=0.0, x=0.0, y=0.0, z=0.0):
        object.__setattr__(self, "w", float(w))
        object.__setattr__(self, "x", float(x))
        object.__setattr__(self, "y", float(y))
        object.__setattr__(self, "z", float(z))

    def __setattr__(self, name, value):
        raise AttributeError("Quaternion is immutable")

    @classmethod
    def from_complex(cls, u: complex) -> "Quaternion":
        """Embed C = span{1, i}."""
        return cls(u.real, u.imag, 0.0, 0.0)

    @classmethod
    def from_split(cls, u: complex, v: complex) -> "Quaternion":
        """Assemble q = u + j*v from the C-split components."""
        return cls(u.real, u.imag, v.real, -v.imag)

    def split(self) -> tuple[complex, complex]:
        """Return (u, v) with self = u + j*v; exact round trip."""
        return complex(self.w, self.x), complex(self.y, -self.z)

    # --- algebra ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Quaternion(self.w + other.w, self.x + other.x,
                          self.y + other.y, self.z + other.z)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Quaternion(self.w - other.w, self.x - other.x,
                          self.y - other.y, self.z - other.z)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(self.w * other, self.x * other,
                              self.y * other, self.z * other)
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self, other
        return Quaternion(
            a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y + a.y * b.w + a.z * b.x - a.x * b.z,
            a.w * b.z + a.z * b.w + a.x * b.y - a.y * b.x,
        )

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self * other
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return self * (1.0 / other)
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm2(self) -> float:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def __abs__(self) -> float:
        return math.sqrt(self.norm2())

    def inverse(self) -> "Quaternion":
        n2 = self.norm2()
        if n2 == 0.0:
            raise ZeroQuaternion("cannot invert the zero quaternion")
        s = 1.0 / n2
        return Quaternion(self.w * s, -self.x * s, -self.y * s, -self.z * s)

    # --- comparisons / niceties ------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (self.w == other.w and self.x == other.x
                and self.y == other.y and self.z == other.z)

    def __hash__(self):
        return hash((self.w, self.x, self.y, self.z))

    def isclose(self, other: "Quaternion", tol: float = 1e-12) -> bool:
        return abs(self - other) <= tol

    def __repr__(self):
        return f"Quaternion({self.w!r}, {self.x!r}, {self.y!r}, {self.z!r})"


def _coerce(value):
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, (int, float)):
        return Quaternion(value, 0.0, 0.0, 0.0)
    if isinstance(value, complex):
        return Quaternion(value.real, value.imag, 0.0, 0.0)
    return None


ONE = Quaternion(1.0)
I = Quaternion(0.0, 1.0)
J = Quaternion(0.0, 0.0, 1.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


def gauge_exp(beta: float) -> Quaternion:
    """Gauge rotation e^{j*beta/2} = cos(beta/2) + j sin(beta/2)."""
    return Quaternion(math.cos(0.5 * beta), 0.0, math.sin(0.5 * beta), 0.0)
