"""Line-oriented run configuration.

Format: UTF-8, `#` comments, `[section]` headers, `key = value` entries.
Complex numbers are two space-separated decimals, quaternions four;
`coeff = d_re d_im : w x y z` and `weight = t : u_re u_im` repeat.  Every
output of the tool is a pure function of one of these files.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ConfigError, HstorusError
from .lattice import Lattice
from .quat import Quaternion
from .synthesis import HslTorus


@dataclass
class RunConfig:
    omega1: complex = 1.0 + 0j
    omega2: complex = 1j
    beta0: complex = 0j
    coeffs: list = field(default_factory=list)          # [(delta, Quaternion)]
    # spectrum
    spectrum_steps: int = 64
    spectrum_max_norm: float = 0.0                      # 0: auto (3 |beta0|)
    # darboux
    darboux_mode: str = "mono"
    darboux_growth: complex = 0j
    darboux_phase: complex = 0j
    darboux_index: int = 0
    darboux_weights: list = field(default_factory=list)  # [(t, u)]
    # mu
    mu: complex = 0.5 + 0j
    mu_sheet: str = "plus"
    # export
    grid_n: int = 128
    grid_m: int = 128
    projection: str = "stereo"
    # verify
    verify_grid: int = 16
    fd_step: float = 1e-5
    tol: float = 1e-6

    def build_torus(self) -> HslTorus:
        try:
            lattice = Lattice(self.omega1, self.omega2)
            torus = HslTorus(lattice, self.beta0, tuple(self.coeffs))
            return torus.validate()
        except (HstorusError, ValueError) as exc:
            raise ConfigError(f"invalid torus data: {exc}") from exc


def _complex(words, where) -> complex:
    if len(words) != 2:
        raise ConfigError(f"{where}: expected two numbers, got {words!r}")
    try:
        return complex(float(words[0]), float(words[1]))
    except ValueError as exc:
        raise ConfigError(f"{where}: {exc}") from exc


def _quaternion(words, where) -> Quaternion:
    if len(words) != 4:
        raise ConfigError(f"{where}: expected four numbers, got {words!r}")
    try:
        return Quaternion(*(float(w) for w in words))
    except ValueError as exc:
        raise ConfigError(f"{where}: {exc}") from exc


def _scalar(kind, text, where):
    try:
        return kind(text)
    except ValueError as exc:
        raise ConfigError(f"{where}: {exc}") from exc


def parse_config(text: str) -> RunConfig:
    cfg = RunConfig()
    section = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        where = f"line {lineno}"
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1].strip().lower()
            if section not in ("torus", "spectrum", "darboux", "mu", "export", "verify"):
                raise ConfigError(f"{where}: unknown section [{section}]")
            continue
        if "=" not in line:
            raise ConfigError(f"{where}: expected key = value")
        key, value = (part.strip() for part in line.split("=", 1))
        key = key.lower()
        if section == "torus":
            if key == "omega1":
                cfg.omega1 = _complex(value.split(), where)
            elif key == "omega2":
                cfg.omega2 = _complex(value.split(), where)
            elif key == "beta0":
                cfg.beta0 = _complex(value.split(), where)
            elif key == "coeff":
                if ":" not in value:
                    raise ConfigError(f"{where}: coeff needs 'd_re d_im : w x y z'")
                left, right = value.split(":", 1)
                cfg.coeffs.append((_complex(left.split(), where),
                                   _quaternion(right.split(), where)))
            else:
                raise ConfigError(f"{where}: unknown torus key {key!r}")
        elif section == "spectrum":
            if key == "steps":
                cfg.spectrum_steps = _scalar(int, value, where)
            elif key == "max_norm":
                cfg.spectrum_max_norm = _scalar(float, value, where)
            else:
                raise ConfigError(f"{where}: unknown spectrum key {key!r}")
        elif section == "darboux":
            if key == "mode":
                if value not in ("mono", "poly"):
                    raise ConfigError(f"{where}: mode must be mono or poly")
                cfg.darboux_mode = value
            elif key == "growth":
                cfg.darboux_growth = _complex(value.split(), where)
            elif key == "phase":
                cfg.darboux_phase = _complex(value.split(), where)
            elif key == "index":
                cfg.darboux_index = _scalar(int, value, where)
            elif key == "weight":
                if ":" not in value:
                    raise ConfigError(f"{where}: weight needs 't : u_re u_im'")
                left, right = value.split(":", 1)
                cfg.darboux_weights.append((_scalar(float, left.strip(), where),
                                            _complex(right.split(), where)))
            else:
                raise ConfigError(f"{where}: unknown darboux key {key!r}")
        elif section == "mu":
            if key == "mu":
                cfg.mu = _complex(value.split(), where)
            elif key == "sheet":
                if value not in ("plus", "minus"):
                    raise ConfigError(f"{where}: sheet must be plus or minus")
                cfg.mu_sheet = value
            else:
                raise ConfigError(f"{where}: unknown mu key {key!r}")
        elif section == "export":
            if key == "grid_n":
                cfg.grid_n = _scalar(int, value, where)
            elif key == "grid_m":
                cfg.grid_m = _scalar(int, value, where)
            elif key == "projection":
                cfg.projection = value
            else:
                raise ConfigError(f"{where}: unknown export key {key!r}")
        elif section == "verify":
            if key == "grid_n":
                cfg.verify_grid = _scalar(int, value, where)
            elif key == "fd_step":
                cfg.fd_step = _scalar(float, value, where)
            elif key == "tol":
                cfg.tol = _scalar(float, value, where)
            else:
                raise ConfigError(f"{where}: unknown verify key {key!r}")
        else:
            raise ConfigError(f"{where}: key outside any section")
    if cfg.beta0 == 0 or not cfg.coeffs:
        raise ConfigError("config must define [torus] beta0 and at least one coeff")
    cfg.build_torus()   # beta0 in the dual lattice is validated on load
    return cfg


def load_config(path) -> RunConfig:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return parse_config(text)
