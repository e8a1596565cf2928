"""Holomorphic sections with multiplier and their Darboux transforms.

A section with multiplier key (growth, phase) is

    alpha = e^{j*beta/2} [ sum_delta (1 - k lam_delta) u_delta e_{delta-phase} ] e^{2 pi <growth, .>}

and a transform of the base torus f is f + e^{j*beta/2} tau g with a
displacement factor tau that is a nonzero constant quaternion in the
monochromatic case and a ratio of two ungauged Fourier sums in the
polychromatic case.  Both the closed forms and the independent
derivative/prolongation route are implemented; tests pin them against each
other pointwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (AllZeroCoefficients, AngleNotAdmissible, BranchPoint,
                     EmptyKey, HstorusError, NotMonochromatic,
                     TransformAtInfinity, ZeroMu, ZeroSection, ZeroTau)
from .fourier import (FourierField, qa_add, qa_conj, qa_mul, qa_norm2,
                      qa_right_complex)
from .quat import I, Quaternion, gauge_exp, pair
from .spectral import MultiplierKey, SpectralPoint, multiplier_key, spectral_point
from .synthesis import HslTorus

#: |sin t| below this is the axis case: the transform is a constant map
AXIS_TOL = 1e-12

#: relative denominator floor for flagging polychromatic transforms singular
SINGULAR_REL = 1e-8


@dataclass(frozen=True)
class Section:
    """Holomorphic section with multiplier; weights align with key.freqs."""

    key: MultiplierKey
    weights: tuple[complex, ...]

    @cached_property
    def field(self) -> FourierField:
        key = self.key
        terms = []
        for delta, lam, w in zip(key.freqs, key.lambdas, self.weights):
            if w == 0:
                continue
            terms.append((delta - key.phase, w, 1j * lam * w))
        return FourierField(key.beta0, 1.0, key.growth, tuple(terms))

    @cached_property
    def field_dx(self) -> FourierField:
        return self.field.dx()

    @cached_property
    def field_dy(self) -> FourierField:
        return self.field.dy()

    def value(self, z: complex) -> Quaternion:
        return self.field.value(z)

    def values(self, zx, zy):
        return self.field.values(zx, zy)

    def multiplier(self, gamma: complex) -> complex:
        return self.key.value(gamma)


def build_section(key: MultiplierKey, weights) -> Section:
    weights = tuple(complex(w) for w in weights)
    if key.dim == 0:
        raise EmptyKey("multiplier carries no holomorphic sections")
    if len(weights) != key.dim:
        raise ValueError(f"expected {key.dim} weights, got {len(weights)}")
    if not any(w != 0 for w in weights):
        raise AllZeroCoefficients("section weights are identically zero")
    return Section(key, weights)


@dataclass(frozen=True)
class MuSections:
    """The two parallel eigen-sections of the flat connection at mu."""

    mu: complex
    point: SpectralPoint
    plus: Section
    minus: Section


def _locate_freq(key: MultiplierKey, offset: complex) -> int:
    """Index of the frequency with delta - phase = offset."""
    for idx, delta in enumerate(key.freqs):
        if abs((delta - key.phase) - offset) <= 1e-8 * (1.0 + abs(offset)):
            return idx
    raise HstorusError(f"frequency offset {offset} missing from key {key.freqs}")


def mu_sections(torus: HslTorus, mu: complex) -> MuSections:
    """Eigen-sections e^{j*beta/2}(1 -+ k/sqrt(mu)) e^{+-2 pi(<A,z>+i<C,z>)}."""
    if mu == 0:
        raise ZeroMu("flat-connection parameter must be nonzero")
    point = spectral_point(mu, torus.beta0)
    sections = []
    for sign in (1.0, -1.0):
        growth = sign * point.growth
        phase = torus.beta0 / 2.0 - sign * point.freq_offset
        key = multiplier_key(torus.lattice, torus.beta0, growth, phase)
        idx = _locate_freq(key, sign * point.freq_offset)
        weights = [0j] * key.dim
        weights[idx] = 1.0 + 0j
        sections.append(Section(key, tuple(weights)))
    return MuSections(mu=complex(mu), point=point,
                      plus=sections[0], minus=sections[1])


@dataclass(frozen=True)
class DarbouxSurface:
    """Evaluable transform f + e^{j*beta/2} tau g of a base torus.

    kind is one of "monochromatic", "polychromatic", "point_at_infinity".
    Monochromatic transforms carry the constant factor tau directly; the
    polychromatic factor is num * conj(den) / (|den|^2 pi conj(beta0)) with
    num and den ungauged Fourier sums.  den is scanned on a grid at build
    time; r_min/r_max and the singular flag report near-vanishing.
    """

    base: HslTorus
    key: MultiplierKey
    kind: str
    factor: Quaternion | None = None
    num_field: FourierField | None = None
    den_field: FourierField | None = None
    singular: bool = False
    r_min: float = 0.0
    r_max: float = 0.0

    def factor_at(self, z: complex) -> Quaternion:
        if self.kind == "point_at_infinity":
            raise TransformAtInfinity("constant transform through infinity")
        if self.kind == "monochromatic":
            return self.factor
        den = self.den_field.value(z)
        r = den.norm2()
        if r == 0.0 or r < 1e-14 * max(self.r_max, 1.0):
            raise ZeroTau(f"transform denominator vanishes at z={z}")
        scale = 1.0 / (math.pi * self.base.beta0.conjugate() * r)
        return self.num_field.value(z) * den.conjugate() * scale

    def position(self, z: complex) -> Quaternion:
        tau = self.factor_at(z)
        gauge = gauge_exp(self.base.beta(z))
        return self.base.position(z) + gauge * tau * self.base.field_g.value(z)

    def position_grid(self, zx, zy):
        """Split components plus a per-point singular mask."""
        if self.kind == "point_at_infinity":
            shape = np.shape(zx)
            zeros = np.zeros(shape, dtype=np.complex128)
            return zeros, zeros.copy(), np.ones(shape, dtype=bool)
        f = self.base.position_grid(zx, zy)
        g = self.base.field_g.values(zx, zy)
        if self.kind == "monochromatic":
            u0, v0 = self.factor.split()
            tau = (np.full(zx.shape, u0), np.full(zx.shape, v0))
            flags = np.zeros(zx.shape, dtype=bool)
        else:
            num = self.num_field.values(zx, zy)
            den = self.den_field.values(zx, zy)
            r = qa_norm2(den)
            flags = r < SINGULAR_REL * max(self.r_max, np.max(r))
            safe = np.where(flags, 1.0, r)
            scale = 1.0 / (math.pi * self.base.beta0.conjugate() * safe)
            tau = qa_right_complex(qa_mul(num, qa_conj(den)), scale)
            tau = (np.where(flags, 0.0, tau[0]), np.where(flags, 0.0, tau[1]))
        ph = math.pi * (self.base.beta0.real * zx + self.base.beta0.imag * zy)
        g0, g1 = np.cos(ph), np.sin(ph)
        shift = qa_mul(tau, g)
        shift = (g0 * shift[0] - g1 * shift[1], g0 * shift[1] + g1 * shift[0])
        out = qa_add(f, shift)
        return out[0], out[1], flags


def darboux_monochromatic(torus: HslTorus, key: MultiplierKey,
                          which: int = 0) -> DarbouxSurface:
    """Closed-form transform of a single-frequency section of the key.

    Nonzero growth: independent of `which` (the two candidate frequencies
    give the same transform).  Zero growth at circle angle t in {0, pi}:
    the transform is the constant map through infinity.
    """
    if key.dim == 0:
        raise EmptyKey("multiplier carries no holomorphic sections")
    if not 0 <= which < key.dim:
        raise ValueError(f"frequency index {which} out of range for dim {key.dim}")
    beta0 = torus.beta0
    a = key.growth
    if a != 0:
        p = pair(beta0, a)
        d = 4.0 * abs(a) ** 4 + p * p
        tau = Quaternion.from_split(-2.0 * abs(a) ** 2 * a / (math.pi * d),
                                    p * a / (math.pi * d))
        return DarbouxSurface(base=torus, key=key, kind="monochromatic", factor=tau)
    w = 2.0 * (key.phase - key.freqs[which]) / beta0   # e^{it}
    if abs(w.imag) < AXIS_TOL:
        return DarbouxSurface(base=torus, key=key, kind="point_at_infinity")
    c = w / (math.pi * beta0.conjugate() * w.imag)
    tau = Quaternion.from_split(0.0, -1j * c)           # k * c
    return DarbouxSurface(base=torus, key=key, kind="monochromatic", factor=tau)


def darboux_polychromatic(torus: HslTorus, phase: complex,
                          weights, scan_n: int = 64) -> DarbouxSurface:
    """Transform from a weighted family of circle angles at growth = 0.

    weights: iterable of (t, u) with t an admissible circle angle of the
    multiplier (0, phase) and u a complex weight.  The denominator field is
    scanned on a scan_n x scan_n grid; near-vanishing flags the surface
    singular without aborting.
    """
    key = multiplier_key(torus.lattice, torus.beta0, 0j, phase)
    if key.dim == 0:
        raise EmptyKey(f"no admissible frequencies at phase {phase}")
    if all(abs(math.sin(t)) < AXIS_TOL for t in key.circle_angles):
        raise AngleNotAdmissible("only the axis angles {0, pi} are admissible here")
    dual = torus.lattice.dual()
    beta0 = torus.beta0
    num_terms, den_terms = [], []
    for t, u in weights:
        t = float(t)
        u = complex(u)
        w = complex(math.cos(t), math.sin(t))
        delta = key.phase - beta0 / 2.0 * w
        if not dual.contains(delta - beta0 / 2.0):
            raise AngleNotAdmissible(f"angle {t} misses the translated dual lattice")
        num_terms.append((delta, u, -1j * w * u))                    # (1 + k e^{it}) u
        den_terms.append((delta, w.imag * u, 1j * w * w.imag * u))   # (1 - k e^{it}) sin(t) u
    num = FourierField(beta0, 0.0, 0j, tuple(num_terms))
    den = FourierField(beta0, 0.0, 0j, tuple(den_terms))
    o1, o2 = torus.lattice.generators()
    s = np.arange(scan_n) / scan_n
    sx, sy = np.meshgrid(s, s, indexing="ij")
    zx = (sx * o1.real + sy * o2.real).ravel()
    zy = (sx * o1.imag + sy * o2.imag).ravel()
    r = qa_norm2(den.values(zx, zy))
    r_min, r_max = float(np.min(r)), float(np.max(r))
    return DarbouxSurface(base=torus, key=key, kind="polychromatic",
                          num_field=num, den_field=den,
                          singular=bool(r_min < SINGULAR_REL * r_max),
                          r_min=r_min, r_max=r_max)


def left_normal(surface: DarbouxSurface, z: complex) -> Quaternion:
    """Left normal e^{j*beta/2} tau i tau^{-1} e^{-j*beta/2} of the transform."""
    tau = surface.factor_at(z)
    if abs(tau) < 1e-12:
        raise ZeroTau(f"displacement factor vanishes at z={z}")
    beta = surface.base.beta(z)
    return gauge_exp(beta) * tau * I * tau.inverse() * gauge_exp(-beta)


def is_lagrangian(surface: DarbouxSurface, grid_n: int = 32,
                  tol: float = 1e-9) -> tuple[bool, float]:
    """Max over a grid of |Im(conj(tau0) tau1)| / (|tau0|^2 + |tau1|^2)."""
    if surface.kind == "point_at_infinity":
        raise TransformAtInfinity("constant transform has no tangent data")
    if surface.kind == "monochromatic":
        u, v = surface.factor.split()
        viol = abs((u.conjugate() * v).imag) / (abs(u) ** 2 + abs(v) ** 2)
        return viol < tol, viol
    o1, o2 = surface.base.lattice.generators()
    s = np.arange(grid_n) / grid_n
    sx, sy = np.meshgrid(s, s, indexing="ij")
    zx = (sx * o1.real + sy * o2.real).ravel()
    zy = (sx * o1.imag + sy * o2.imag).ravel()
    num = surface.num_field.values(zx, zy)
    den = surface.den_field.values(zx, zy)
    r = qa_norm2(den)
    good = r >= SINGULAR_REL * max(surface.r_max, float(np.max(r)))
    scale = 1.0 / (math.pi * surface.base.beta0.conjugate() * np.where(good, r, 1.0))
    u, v = qa_right_complex(qa_mul(num, qa_conj(den)), scale)
    denom = np.abs(u) ** 2 + np.abs(v) ** 2
    viol = np.abs((np.conj(u) * v).imag) / np.where(denom > 0, denom, 1.0)
    worst = float(np.max(np.where(good, viol, 0.0)))
    return worst < tol, worst


def angle_shift(surface: DarbouxSurface) -> float:
    """Constant Lagrangian-angle shift of a monochromatic transform.

    Factors tau = (tau0 + j tau1) c with tau0, tau1 real and returns the
    angle of (tau0 + j tau1)^2 in (-pi, pi].
    """
    if surface.kind != "monochromatic":
        raise NotMonochromatic(f"kind={surface.kind} has no constant angle shift")
    u, v = surface.factor.split()
    scale = math.hypot(abs(u), abs(v))
    pivot = u if abs(u) >= abs(v) else v
    phase = pivot / abs(pivot)
    t0 = u * phase.conjugate()
    t1 = v * phase.conjugate()
    if abs(t0.imag) > 1e-9 * scale or abs(t1.imag) > 1e-9 * scale:
        raise NotMonochromatic("displacement factor does not split as (t0 + j t1) c")
    shift = 2.0 * math.atan2(t1.real, t0.real)
    shift = math.remainder(shift, 2.0 * math.pi)
    if shift <= -math.pi:
        shift += 2.0 * math.pi
    return shift


def angle_shift_samples(surface: DarbouxSurface, grid_n: int = 32) -> np.ndarray:
    """Angle shift measured from the left normal at every grid point.

    Independent of angle_shift(): recovers beta_hat - beta from
    N_hat (-i) = e^{j(beta+shift)} pointwise, unwrapped near the first
    sample so a standard deviation is meaningful.
    """
    o1, o2 = surface.base.lattice.generators()
    s = np.arange(grid_n) / grid_n
    values = np.empty(grid_n * grid_n)
    betas = np.empty(grid_n * grid_n)
    idx = 0
    for a in s:
        for b in s:
            z = a * o1 + b * o2
            n_hat = left_normal(surface, z)
            m = n_hat * Quaternion(0.0, -1.0, 0.0, 0.0)   # N_hat * (-i)
            values[idx] = math.atan2(m.y, m.w)
            betas[idx] = surface.base.beta(z)
            idx += 1
    raw = values - betas
    base = math.remainder(raw[0], 2.0 * math.pi)
    out = base + np.array([math.remainder(r - base, 2.0 * math.pi) for r in raw])
    return out


def prolongation_transform(section: Section, torus: HslTorus,
                           z: complex) -> Quaternion:
    """Transform displacement T at z from the derivative of the section.

    T_hat = -(fx)^{-1} (d_x alpha) alpha^{-1}, cross-checked against the
    y-derivative route; returns T = T_hat^{-1}.  This is the independent
    path the closed forms are tested against.
    """
    alpha = section.value(z)
    if abs(alpha) < 1e-12:
        raise ZeroSection(f"section vanishes at z={z}")
    fx = torus.field_dx.value(z)
    fy = torus.field_dy.value(z)
    if abs(fx) < 1e-12:
        raise BranchPoint(f"surface derivative vanishes at z={z}")
    alpha_inv = alpha.inverse()
    t_x = -(fx.inverse() * section.field_dx.value(z) * alpha_inv)
    t_y = -(fy.inverse() * section.field_dy.value(z) * alpha_inv)
    if abs(t_x - t_y) > 1e-9 * (abs(t_x) + abs(t_y)) + 1e-15:
        raise HstorusError("x/y prolongation routes disagree; section not holomorphic?")
    t_hat = (t_x + t_y) * 0.5
    if abs(t_hat) < 1e-12:
        raise TransformAtInfinity("prolongation is constant; transform at infinity")
    return t_hat.inverse()


def mu_darboux(torus: HslTorus, mu: complex, sheet: str = "plus") -> DarbouxSurface:
    """Closed transform attached to a parallel section of the connection at mu."""
    sections = mu_sections(torus, mu)
    section = sections.plus if sheet == "plus" else sections.minus
    which = max(range(len(section.weights)), key=lambda i: abs(section.weights[i]))
    return darboux_monochromatic(torus, section.key, which)
