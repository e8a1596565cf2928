"""Hamiltonian stationary Lagrangian tori in R^4.

Construction from lattice data, multiplier spectra, Darboux and
flat-connection transforms, finite-difference verification of the governing
identities, and mesh/table export.
"""

from .backend import ACTIVE as BACKEND
from .darboux import (DarbouxSurface, MuSections, Section, angle_shift,
                      build_section, darboux_monochromatic,
                      darboux_polychromatic, is_lagrangian, left_normal,
                      mu_darboux, mu_sections, prolongation_transform)
from .lattice import DualLattice, Lattice
from .quat import Quaternion, gauge_exp, pair
from .spectral import (MultiplierKey, SpectralPoint, conjugate_key,
                       double_points, is_degenerate_monodromy,
                       is_real_multiplier, key_from_lambda, multiplier_key,
                       multiplier_value, spectral_point)
from .synthesis import (HslTorus, SurfaceJet, admissible_frequencies,
                        castro_urbano_torus, clifford_torus, homogeneous_torus)
from .verify import (FdReport, check_conformal_lagrangian, check_dmu_parallel,
                     check_holomorphic, check_hsl_preservation,
                     run_standard_checks)

__all__ = [
    "BACKEND", "DarbouxSurface", "DualLattice", "FdReport", "HslTorus",
    "Lattice", "MultiplierKey", "MuSections", "Quaternion", "Section",
    "SpectralPoint", "SurfaceJet", "admissible_frequencies", "angle_shift",
    "build_section", "castro_urbano_torus", "check_conformal_lagrangian",
    "check_dmu_parallel", "check_holomorphic", "check_hsl_preservation",
    "clifford_torus", "conjugate_key", "darboux_monochromatic",
    "darboux_polychromatic", "double_points", "gauge_exp",
    "homogeneous_torus", "is_degenerate_monodromy", "is_lagrangian",
    "is_real_multiplier", "key_from_lambda", "left_normal", "mu_darboux",
    "mu_sections", "multiplier_key", "multiplier_value", "pair",
    "prolongation_transform", "run_standard_checks", "spectral_point",
]

__version__ = "0.1.0"
