"""Exception types shared across the package."""


class HstorusError(Exception):
    """Base class for all package errors."""


class ZeroQuaternion(HstorusError):
    """Inverse of the zero quaternion requested."""


class DegenerateLattice(HstorusError):
    """Lattice generators are collinear."""


class Beta0NotInDualLattice(HstorusError):
    """The Lagrangian-angle frequency is not a dual lattice point."""


class BranchPoint(HstorusError):
    """The surface derivative vanishes at the requested point."""


class EmptyKey(HstorusError):
    """Multiplier key carries no admissible frequencies."""


class AllZeroCoefficients(HstorusError):
    """Section coefficients are identically zero."""


class ZeroLambda(HstorusError):
    """The normalization map is undefined at 0."""


class ZeroMu(HstorusError):
    """The flat-connection parameter must be nonzero."""


class ZeroSection(HstorusError):
    """Section vanishes at the requested point."""


class ZeroTau(HstorusError):
    """Transform displacement factor vanishes at the requested point."""


class NotMonochromatic(HstorusError):
    """Operation requires a single-frequency transform."""


class AngleNotAdmissible(HstorusError):
    """Circle angle does not hit a translated dual lattice point."""


class TransformAtInfinity(HstorusError):
    """The transform is the constant map through infinity."""


class ConfigError(HstorusError):
    """Malformed or inconsistent run configuration."""
