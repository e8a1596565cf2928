"""Surface sampling, projection to R^3 and deterministic file emission.

Meshes are periodic quad grids over the fundamental domain: vertex (i, j)
sits at z = (i/n) omega1 + (j/m) omega2 and faces wrap in both directions.
OBJ and CSV output is a pure function of the input (fixed float formatting,
fixed ordering), so identical configurations produce byte-identical files.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .spectral import MultiplierKey

#: stereographic pole guard: |1 - x4| below this flags the vertex
POLE_TOL = 1e-9

FMT = "%.17g"


@dataclass(frozen=True)
class MeshSample:
    """Periodic n x m sample of a surface in R^4 with per-vertex flags."""

    n: int
    m: int
    points: np.ndarray   # (n, m, 4)
    flags: np.ndarray    # (n, m) bool, True where evaluation was singular


@dataclass(frozen=True)
class Mesh3:
    """Projected n x m periodic mesh in R^3."""

    n: int
    m: int
    points: np.ndarray   # (n, m, 3)
    flags: np.ndarray


def sample_surface(surface, n: int, m: int) -> MeshSample:
    """Evaluate a surface on the periodic n x m parameter grid.

    Works for anything exposing position_grid(zx, zy) -> (u, v) or
    (u, v, flags) plus a lattice (directly or through .base).
    """
    if n < 2 or m < 2:
        raise ValueError("grid must be at least 2x2")
    lattice = getattr(surface, "lattice", None)
    if lattice is None:
        lattice = surface.base.lattice
    o1, o2 = lattice.generators()
    si = np.arange(n) / n
    sj = np.arange(m) / m
    sx, sy = np.meshgrid(si, sj, indexing="ij")
    zx = (sx * o1.real + sy * o2.real).ravel()
    zy = (sx * o1.imag + sy * o2.imag).ravel()
    out = surface.position_grid(zx, zy)
    if len(out) == 3:
        u, v, flags = out
    else:
        u, v = out
        flags = np.zeros(zx.shape, dtype=bool)
    points = np.stack([u.real, u.imag, v.real, -v.imag], axis=-1)
    return MeshSample(n=n, m=m, points=points.reshape(n, m, 4),
                      flags=flags.reshape(n, m).astype(bool))


def project_mesh(mesh: MeshSample, mode: str) -> Mesh3:
    """Project to R^3: ortho_k drops coordinate k; stereo recenters to the
    centroid, rescales by the mean radius and maps x -> (x1,x2,x3)/(1-x4)."""
    pts = mesh.points
    flags = mesh.flags.copy()
    if mode.startswith("ortho_"):
        k = int(mode.split("_", 1)[1])
        if k not in (1, 2, 3, 4):
            raise ValueError(f"unknown projection {mode!r}")
        keep = [c for c in range(4) if c != k - 1]
        return Mesh3(mesh.n, mesh.m, pts[..., keep].copy(), flags)
    if mode != "stereo":
        raise ValueError(f"unknown projection {mode!r}")
    good = ~flags
    if not good.any():
        return Mesh3(mesh.n, mesh.m, np.zeros((mesh.n, mesh.m, 3)), flags)
    centroid = pts[good].mean(axis=0)
    centered = pts - centroid
    radii = np.linalg.norm(centered[good], axis=-1)
    scale = radii.mean()
    if scale == 0.0:
        scale = 1.0
    unit = centered / scale
    denom = 1.0 - unit[..., 3]
    pole = np.abs(denom) < POLE_TOL
    flags |= pole
    safe = np.where(pole, 1.0, denom)
    out = unit[..., :3] / safe[..., None]
    out[pole] = 0.0
    return Mesh3(mesh.n, mesh.m, out, flags)


def write_obj(mesh: Mesh3, path) -> None:
    """Wavefront OBJ: vertices in row-major order, wrapped quad faces."""
    n, m = mesh.n, mesh.m
    lines = []
    for i in range(n):
        for j in range(m):
            x, y, z = mesh.points[i, j]
            lines.append("v %s %s %s" % (FMT % x, FMT % y, FMT % z))
    for i in range(n):
        for j in range(m):
            a = i * m + j + 1
            b = ((i + 1) % n) * m + j + 1
            c = ((i + 1) % n) * m + (j + 1) % m + 1
            d = i * m + (j + 1) % m + 1
            lines.append(f"f {a} {b} {c} {d}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def _clist(values) -> str:
    return ";".join("%s %s" % (FMT % v.real, FMT % v.imag) for v in values)


def spectrum_row(key: MultiplierKey) -> str:
    return ",".join([
        FMT % key.growth.real, FMT % key.growth.imag,
        FMT % key.phase.real, FMT % key.phase.imag,
        str(key.dim), _clist(key.freqs), _clist(key.lambdas),
    ])


def write_spectrum_csv(keys, path) -> None:
    """One row per multiplier key, in the given order."""
    lines = ["A_re,A_im,B_re,B_im,dim,delta_list,lambda_list"]
    lines.extend(spectrum_row(k) for k in keys)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
