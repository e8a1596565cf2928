"""Command line driver.

Subcommands: spectrum (multiplier sweep + double points -> CSV), synth
(sample/export the torus), darboux and mu (transform surfaces -> OBJ) and
verify (finite-difference identity battery; nonzero exit on any failure).
Exit codes: 0 success, 1 verification failure, 2 configuration error,
3 I/O error.
"""

from __future__ import annotations

import argparse
import cmath
import math
import sys

from .config import load_config
from .darboux import darboux_monochromatic, darboux_polychromatic, mu_darboux
from .errors import ConfigError, HstorusError
from .export import project_mesh, sample_surface, write_obj, write_spectrum_csv
from .spectral import double_points, is_degenerate_monodromy, multiplier_key
from .verify import run_standard_checks

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_CONFIG = 2
EXIT_IO = 3


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hstorus",
                                     description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
            ("spectrum", "sweep multipliers along the circle and enumerate double points"),
            ("synth", "sample the torus and write a projected OBJ mesh"),
            ("darboux", "build a Darboux transform surface and export it"),
            ("mu", "build the transform attached to a flat-connection parameter"),
            ("verify", "run the finite-difference identity checks")):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--config", required=True, help="run configuration file")
        cmd.add_argument("--out", default=None, help="output path")
        cmd.add_argument("--grid", type=int, default=None,
                         help="override the export/verify grid size")
        cmd.add_argument("--projection", default=None,
                         help="ortho_1..ortho_4 or stereo")
        cmd.add_argument("--fd-step", type=float, default=None,
                         help="finite difference step")
        cmd.add_argument("--tol", type=float, default=None,
                         help="verification tolerance")
    return parser


def _export_surface(surface, cfg, out_path):
    mesh = sample_surface(surface, cfg.grid_n, cfg.grid_m)
    mesh3 = project_mesh(mesh, cfg.projection)
    write_obj(mesh3, out_path)
    flagged = int(mesh3.flags.sum())
    print(f"wrote {out_path} ({cfg.grid_n}x{cfg.grid_m} grid, "
          f"projection {cfg.projection}, {flagged} flagged vertices)")


def _cmd_spectrum(cfg, out_path) -> int:
    torus = cfg.build_torus()
    keys = []
    n = cfg.spectrum_steps
    for k in range(n):
        t = 2.0 * math.pi * k / n
        phase = torus.beta0 / 2.0 * (1.0 + cmath.exp(1j * t))
        keys.append(multiplier_key(torus.lattice, torus.beta0, 0j, phase))
    max_norm = cfg.spectrum_max_norm or 3.0 * abs(torus.beta0)
    for zeta, growth in double_points(torus.lattice, torus.beta0, max_norm):
        keys.append(multiplier_key(torus.lattice, torus.beta0, growth,
                                   (torus.beta0 - zeta) / 2.0))
    write_spectrum_csv(keys, out_path)
    print(f"wrote {out_path} ({len(keys)} multipliers)")
    return EXIT_OK


def _cmd_darboux(cfg, out_path) -> int:
    torus = cfg.build_torus()
    if cfg.darboux_mode == "mono":
        key = multiplier_key(torus.lattice, torus.beta0,
                             cfg.darboux_growth, cfg.darboux_phase)
        if key.dim == 0:
            raise ConfigError("darboux growth/phase carries no holomorphic sections")
        surface = darboux_monochromatic(torus, key, cfg.darboux_index)
    else:
        if not cfg.darboux_weights:
            raise ConfigError("poly mode needs at least one weight")
        surface = darboux_polychromatic(torus, cfg.darboux_phase,
                                        cfg.darboux_weights)
        if surface.singular:
            print(f"warning: denominator nearly vanishes "
                  f"(min {surface.r_min:.3e}, max {surface.r_max:.3e}); "
                  f"singular vertices are flagged")
    if surface.kind == "point_at_infinity":
        print("point_at_infinity: the transform is a constant map; no mesh written")
        return EXIT_OK
    _export_surface(surface, cfg, out_path)
    return EXIT_OK


def _cmd_mu(cfg, out_path) -> int:
    torus = cfg.build_torus()
    surface = mu_darboux(torus, cfg.mu, cfg.mu_sheet)
    if is_degenerate_monodromy(torus.lattice, torus.beta0, cfg.mu):
        print(f"note: monodromy at mu={cfg.mu} is a multiple of the identity "
              f"(both sheets give the same transform)")
    if surface.kind == "point_at_infinity":
        print("point_at_infinity: the transform is a constant map; no mesh written")
        return EXIT_OK
    _export_surface(surface, cfg, out_path)
    return EXIT_OK


def _cmd_verify(cfg) -> int:
    torus = cfg.build_torus()
    reports = run_standard_checks(torus, cfg.verify_grid, cfg.fd_step, cfg.tol)
    failures = 0
    for report in reports:
        print(report.line())
        failures += not report.passed
    if failures:
        print(f"{failures}/{len(reports)} checks failed")
        return EXIT_VERIFY
    print(f"all {len(reports)} checks passed")
    return EXIT_OK


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        cfg = load_config(args.config)
        if args.grid is not None:
            cfg.grid_n = cfg.grid_m = cfg.verify_grid = args.grid
        if args.projection is not None:
            cfg.projection = args.projection
        if args.fd_step is not None:
            cfg.fd_step = args.fd_step
        if args.tol is not None:
            cfg.tol = args.tol
        if args.command == "verify":
            return _cmd_verify(cfg)
        out_default = "spectrum.csv" if args.command == "spectrum" else "mesh.obj"
        out_path = args.out or out_default
        if args.command == "spectrum":
            return _cmd_spectrum(cfg, out_path)
        if args.command == "synth":
            _export_surface(cfg.build_torus(), cfg, out_path)
            return EXIT_OK
        if args.command == "darboux":
            return _cmd_darboux(cfg, out_path)
        return _cmd_mu(cfg, out_path)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_IO
    except HstorusError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
