"""Finite-difference verification of the differential identities.

Every identity the synthesis and transform layers assert analytically is
re-checked here with second-order central differences; none of the
derivative code paths in `fourier` is reused.  Default step/tolerance
(h = 1e-5, tol = 1e-6 relative) balances O(h^2) truncation against O(eps/h)
rounding for double precision on unit-scale tori.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .darboux import DarbouxSurface, Section, angle_shift, mu_sections
from .errors import TransformAtInfinity
from .fourier import (qa_abs, qa_add, qa_conj, qa_const, qa_inv,
                      qa_left_complex, qa_mul, qa_norm2, qa_right_complex,
                      qa_scale, qa_sub)
from .quat import K, Quaternion
from .spectral import spectral_point
from .synthesis import HslTorus

DEFAULT_H = 1e-5
DEFAULT_TOL = 1e-6

#: grid points closer than this to a branch/singular point are excluded
EXCLUDE_TOL = 1e-6


@dataclass(frozen=True)
class FdReport:
    """Outcome of one finite-difference identity check."""

    name: str
    grid_n: int
    step: float
    tol: float
    max_rel_residual: float
    worst_point: complex
    passed: bool

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{status} {self.name}: max residual {self.max_rel_residual:.3e} "
                f"(tol {self.tol:.1e}, grid {self.grid_n}x{self.grid_n}, "
                f"h {self.step:.1e}, worst z {self.worst_point:.6f})")


def _report(name, grid_n, step, tol, residuals, mask, zx, zy) -> FdReport:
    residuals = np.where(mask, residuals, 0.0)
    if residuals.size == 0 or not mask.any():
        return FdReport(name, grid_n, step, tol, 0.0, 0j, True)
    k = int(np.argmax(residuals))
    worst = complex(zx[k], zy[k])
    top = float(residuals[k])
    return FdReport(name, grid_n, step, tol, top, worst, bool(top < tol))


def _grid(lattice, n, offset=0.31):
    """Flat coordinate arrays over the fundamental domain, offset off the
    lattice symmetry points."""
    o1, o2 = lattice.generators()
    s = (np.arange(n) + offset) / n
    sx, sy = np.meshgrid(s, s, indexing="ij")
    zx = (sx * o1.real + sy * o2.real).ravel()
    zy = (sx * o1.imag + sy * o2.imag).ravel()
    return zx, zy


def _fd(values, zx, zy, h):
    """Central-difference x/y derivatives of a batch evaluator.

    values(zx, zy) -> (u, v) split arrays; returns (dx, dy) as split pairs.
    """
    up, vp = values(zx + h, zy)
    um, vm = values(zx - h, zy)
    dx = ((up - um) / (2.0 * h), (vp - vm) / (2.0 * h))
    up, vp = values(zx, zy + h)
    um, vm = values(zx, zy - h)
    dy = ((up - um) / (2.0 * h), (vp - vm) / (2.0 * h))
    return dx, dy


def _gauge_rotate(q, ph):
    """Left multiplication by e^{j*ph} on a split pair."""
    g0, g1 = np.cos(ph), np.sin(ph)
    return g0 * q[0] - g1 * q[1], g0 * q[1] + g1 * q[0]


def check_conformal_lagrangian(torus: HslTorus, grid_n: int = 16,
                               h: float = DEFAULT_H,
                               tol: float = DEFAULT_TOL) -> FdReport:
    """df = e^{j*beta/2} dz g against central differences of f.

    Checks fx_FD = e^{j*beta/2} g, fy_FD = e^{j*beta/2} i g and the Hodge
    form fy_FD = N fx_FD, N = e^{j*beta} i.
    """
    zx, zy = _grid(torus.lattice, grid_n)
    fd_x, fd_y = _fd(torus.position_grid, zx, zy, h)
    g = torus.field_g.values(zx, zy)
    half_beta = math.pi * (torus.beta0.real * zx + torus.beta0.imag * zy)
    pred_x = _gauge_rotate(g, half_beta)
    pred_y = _gauge_rotate(qa_left_complex(1j, g), half_beta)
    n_fx = _gauge_rotate(qa_left_complex(1j, fd_x), 2.0 * half_beta)
    g_scale = 1.0 + qa_abs(g)
    res = np.maximum(qa_abs(qa_sub(fd_x, pred_x)) / g_scale,
                     qa_abs(qa_sub(fd_y, pred_y)) / g_scale)
    res = np.maximum(res, qa_abs(qa_sub(fd_y, n_fx)) / (1.0 + qa_abs(fd_x)))
    mask = qa_abs(g) > EXCLUDE_TOL
    return _report("conformal-lagrangian df = e^{jb/2} dz g", grid_n, h, tol,
                   res, mask, zx, zy)


def _left_normal_values(torus, zx, zy):
    """N = e^{j*beta} i on a grid."""
    ph = 2.0 * math.pi * (torus.beta0.real * zx + torus.beta0.imag * zy)
    base = qa_left_complex(1j, qa_const(Quaternion(1.0), zx.shape))
    return _gauge_rotate(base, ph)


def check_holomorphic(section: Section, torus: HslTorus, grid_n: int = 16,
                      h: float = DEFAULT_H, tol: float = DEFAULT_TOL,
                      label: str = "") -> FdReport:
    """*d alpha = N d alpha for a section, i.e. dy(alpha) = N dx(alpha) by FD."""
    zx, zy = _grid(torus.lattice, grid_n)
    fd_x, fd_y = _fd(section.values, zx, zy, h)
    n_dx = _gauge_rotate(qa_left_complex(1j, fd_x),
                         2.0 * math.pi * (torus.beta0.real * zx + torus.beta0.imag * zy))
    denom = 1.0 + qa_abs(fd_x) + qa_abs(fd_y)
    res = qa_abs(qa_sub(fd_y, n_dx)) / denom
    mask = np.ones(zx.shape, dtype=bool)
    return _report(f"holomorphicity *da = N da{label}", grid_n, h, tol,
                   res, mask, zx, zy)


def check_dmu_parallel(section: Section, torus: HslTorus, mu: complex,
                       grid_n: int = 16, h: float = DEFAULT_H,
                       tol: float = DEFAULT_TOL) -> FdReport:
    """Parallelism for the flat connection at mu:

        d alpha + (1/2) df H (N alpha (a-1) + alpha b) = 0

    with a = (mu + 1/mu)/2 and b = (1/mu - mu) i / 2 acting by right
    multiplication, N by left multiplication.
    """
    point = spectral_point(mu, torus.beta0)
    zx, zy = _grid(torus.lattice, grid_n)
    alpha = section.values(zx, zy)
    fd_x, fd_y = _fd(section.values, zx, zy, h)
    g = torus.field_g.values(zx, zy)
    half_beta = math.pi * (torus.beta0.real * zx + torus.beta0.imag * zy)
    fx = _gauge_rotate(g, half_beta)
    fy = _gauge_rotate(qa_left_complex(1j, g), half_beta)
    # H = pi g^{-1} conj(beta0) e^{j*beta/2} k
    h_field = qa_right_complex(qa_inv(g), math.pi * torus.beta0.conjugate())
    h_field = qa_mul(h_field, _gauge_rotate(qa_const(Quaternion(1.0), zx.shape), half_beta))
    h_field = qa_mul(h_field, qa_const(K, zx.shape))
    n_vals = _left_normal_values(torus, zx, zy)
    connector = qa_add(qa_mul(n_vals, qa_right_complex(alpha, point.a - 1.0)),
                       qa_right_complex(alpha, point.b_c))
    denom = qa_abs(alpha) + 1e-30
    worst = np.zeros(zx.shape)
    for fdir, d_alpha in ((fx, fd_x), (fy, fd_y)):
        res = qa_add(d_alpha, qa_scale(qa_mul(fdir, qa_mul(h_field, connector)), 0.5))
        worst = np.maximum(worst, qa_abs(res) / (qa_abs(d_alpha) + denom))
    mask = qa_abs(g) > EXCLUDE_TOL
    return _report(f"flat-connection parallelism at mu={mu}", grid_n, h, tol,
                   worst, mask, zx, zy)


def _transform_normals(surface: DarbouxSurface, zx, zy):
    """Analytic left normal e^{j*beta/2} tau i tau^{-1} e^{-j*beta/2} on a grid."""
    if surface.kind == "monochromatic":
        tau = qa_const(surface.factor, zx.shape)
        flags = np.zeros(zx.shape, dtype=bool)
    else:
        num = surface.num_field.values(zx, zy)
        den = surface.den_field.values(zx, zy)
        r = qa_norm2(den)
        flags = r < 1e-8 * max(surface.r_max, float(np.max(r)))
        scale = 1.0 / (math.pi * surface.base.beta0.conjugate() * np.where(flags, 1.0, r))
        tau = qa_right_complex(qa_mul(num, qa_conj(den)), scale)
    beta0 = surface.base.beta0
    half_beta = math.pi * (beta0.real * zx + beta0.imag * zy)
    inner = qa_mul(tau, qa_left_complex(1j, qa_inv(tau)))
    n_hat = _gauge_rotate(inner, half_beta)
    # right factor e^{-j*beta/2}: conjugate rotation applied from the right
    g0, g1 = np.cos(-half_beta), np.sin(-half_beta)
    n_hat = qa_mul(n_hat, (g0.astype(np.complex128), g1.astype(np.complex128)))
    return n_hat, flags


def check_hsl_preservation(surface: DarbouxSurface, grid_n: int = 16,
                           h: float = DEFAULT_H,
                           tol: float = DEFAULT_TOL) -> FdReport:
    """Conformality and left-normal identities of a transform by FD.

    (i) fy_FD = N_hat fx_FD, (ii) the left normal recovered from FD matches
    the analytic one, and (iii) for monochromatic transforms the normal is
    e^{j(beta + shift)} i with the constant shift from angle_shift().
    """
    if surface.kind == "point_at_infinity":
        raise TransformAtInfinity("constant transform has no conformality data")
    zx, zy = _grid(surface.base.lattice, grid_n)

    def values(px, py):
        u, v, _ = surface.position_grid(px, py)
        return u, v

    _, _, flags = surface.position_grid(zx, zy)
    fd_x, fd_y = _fd(values, zx, zy, h)
    n_hat, nflags = _transform_normals(surface, zx, zy)
    flags = flags | nflags
    fx_abs = qa_abs(fd_x)
    res = qa_abs(qa_sub(fd_y, qa_mul(n_hat, fd_x))) / (1.0 + fx_abs)
    mask = (~flags) & (fx_abs > EXCLUDE_TOL)
    n_fd = qa_mul(fd_y, qa_inv((fd_x[0] + (fx_abs <= EXCLUDE_TOL), fd_x[1])))
    res = np.maximum(res, np.where(mask, qa_abs(qa_sub(n_fd, n_hat)), 0.0) / 2.0)
    if surface.kind == "monochromatic":
        shift = angle_shift(surface)
        beta0 = surface.base.beta0
        ph = 2.0 * math.pi * (beta0.real * zx + beta0.imag * zy) + shift
        pred = _gauge_rotate(qa_left_complex(1j, qa_const(Quaternion(1.0), zx.shape)), ph)
        res = np.maximum(res, qa_abs(qa_sub(n_hat, pred)) / 2.0)
    return _report(f"transform conformality/left-normal ({surface.kind})",
                   grid_n, h, tol, res, mask, zx, zy)


def run_standard_checks(torus: HslTorus, grid_n: int = 16, h: float = DEFAULT_H,
                        tol: float = DEFAULT_TOL) -> list[FdReport]:
    """The verification battery run by the command line `verify` command."""
    reports = [check_conformal_lagrangian(torus, grid_n, h, tol)]
    for mu in (0.5 + 0j, cmath.rect(2.0, math.pi / 3.0)):
        sections = mu_sections(torus, mu)
        for tag, sec in (("plus", sections.plus), ("minus", sections.minus)):
            reports.append(check_holomorphic(sec, torus, grid_n, h, tol,
                                             label=f" [mu={mu} {tag}]"))
            reports.append(check_dmu_parallel(sec, torus, mu, grid_n, h, tol))
    from .darboux import darboux_monochromatic
    from .spectral import multiplier_key
    b = torus.beta0 / 2.0 * (1.0 + cmath.exp(2.0j))
    key = multiplier_key(torus.lattice, torus.beta0, 0j, b)
    reports.append(check_hsl_preservation(darboux_monochromatic(torus, key, 0),
                                          grid_n, h, tol))
    from .darboux import mu_darboux
    reports.append(check_hsl_preservation(mu_darboux(torus, 0.5 + 0j), grid_n, h, tol))
    return reports
