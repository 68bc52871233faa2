"""Run configuration for the verification harness and CLI.

Configuration comes from (lowest to highest precedence) built-in defaults, a
flat ``key = value`` text file (path from ``--config`` or the OSP22_CONFIG
environment variable), and command-line flags.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field, replace

import numpy as np

__all__ = [
    "ConfigError",
    "RunConfig",
    "parse_complex",
    "format_complex",
    "complex_to_json",
    "load_config_file",
    "DEFAULT_TOLERANCES",
    "ENV_CONFIG_VAR",
]

ENV_CONFIG_VAR = "OSP22_CONFIG"

DEFAULT_TOLERANCES = {
    "grassmann": 1e-14,
    "algebra": 1e-12,
    "quadrature": 1e-10,
    "coherent": 1e-8,
    "residual": 1e-6,
    "isometry": 1e-6,
}


class ConfigError(ValueError):
    """Invalid configuration value or file."""


def parse_complex(text) -> complex:
    """Parse "a+bi" (or "a+bj") strings; plain floats pass through."""
    if isinstance(text, (int, float, complex, np.integer, np.floating, np.complexfloating)):
        return complex(text)
    s = str(text).strip().replace(" ", "")
    if not s:
        raise ConfigError("empty complex literal")
    s = s.replace("i", "j")
    try:
        return complex(s)
    except ValueError as exc:
        raise ConfigError(f"cannot parse complex number {text!r}") from exc


def format_complex(c: complex) -> str:
    c = complex(c)
    if c.imag == 0:
        return repr(c.real)
    if c.real == 0:
        return f"{c.imag!r}i"
    sign = "+" if c.imag >= 0 else "-"
    return f"{c.real!r}{sign}{abs(c.imag)!r}i"


def complex_to_json(c: complex) -> dict:
    c = complex(c)
    return {"re": c.real, "im": c.imag}


def _default_z_samples() -> tuple:
    return (
        complex(0.3),
        0.5j,
        complex(-0.7),
        complex(0.8 * np.exp(1j * np.pi / 4.0)),
    )


@dataclass(frozen=True)
class RunConfig:
    n_max: int = 32
    nodes: int = 200
    tolerances: dict = field(default_factory=lambda: dict(DEFAULT_TOLERANCES))
    z_samples: tuple = field(default_factory=_default_z_samples)
    t_samples: tuple = (0.0, 1.0)
    alpha_coeff: complex = 1.0 + 0j
    out_dir: str = "."
    out_format: str = "json"
    seed: int = 20250810

    def tol(self, name: str) -> float:
        return float(self.tolerances[name])

    def validate(self, suite: str | None = None) -> None:
        if self.n_max < 8:
            raise ConfigError("n_max must be at least 8")
        if not 2 <= self.nodes <= 320:
            raise ConfigError("nodes must lie in [2, 320]")
        if self.out_format not in ("json", "csv"):
            raise ConfigError("format must be 'json' or 'csv'")
        for name, value in self.tolerances.items():
            if value <= 0:
                raise ConfigError(f"tolerance {name!r} must be positive")
        for z in self.z_samples:
            if abs(z) >= 1.0:
                raise ConfigError(f"z sample {format_complex(z)} must satisfy |z| < 1")
        if suite in ("coherent", "all"):
            # certified series truncation at the default depths needs |z| <= 0.9
            for z in self.z_samples:
                if abs(z) > 0.9:
                    raise ConfigError(
                        f"z sample {format_complex(z)} too close to the unit circle "
                        "for certified truncation (need |z| <= 0.9)"
                    )

    def echo(self) -> dict:
        return {
            "n_max": self.n_max,
            "nodes": self.nodes,
            "tolerances": {k: self.tolerances[k] for k in sorted(self.tolerances)},
            "z_samples": [complex_to_json(z) for z in self.z_samples],
            "t_samples": [float(t) for t in self.t_samples],
            "alpha_coeff": complex_to_json(self.alpha_coeff),
            "seed": self.seed,
        }


def load_config_file(path: str) -> dict:
    """Flat ``key = value`` file; '#' starts a comment; lists are comma-separated."""
    values: dict = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path!r}: {exc}") from exc
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
        key, _, val = line.partition("=")
        values[key.strip()] = val.strip()
    return values


_LIST_KEYS = {"z_samples", "t_samples"}


def build_config(file_values: dict | None = None, overrides: dict | None = None) -> RunConfig:
    """Merge defaults, config-file values, and CLI overrides (highest wins)."""
    cfg = RunConfig()
    for source in (file_values or {}, overrides or {}):
        updates: dict = {}
        tols = dict(cfg.tolerances)
        for key, val in source.items():
            if val is None:
                continue
            if key.startswith("tol_"):
                tols[key[4:]] = float(val)
            elif key == "n_max":
                updates["n_max"] = int(val)
            elif key == "nodes":
                updates["nodes"] = int(val)
            elif key == "seed":
                updates["seed"] = int(val)
            elif key == "z_samples":
                updates["z_samples"] = tuple(_parse_list(val, parse_complex))
            elif key == "t_samples":
                updates["t_samples"] = tuple(_parse_list(val, float))
            elif key == "alpha_coeff":
                updates["alpha_coeff"] = parse_complex(val)
            elif key == "out_dir":
                updates["out_dir"] = str(val)
            elif key == "out_format":
                updates["out_format"] = str(val)
            else:
                raise ConfigError(f"unknown configuration key {key!r}")
        updates["tolerances"] = tols
        cfg = replace(cfg, **updates)
    return cfg


def _parse_list(val, conv):
    if isinstance(val, (list, tuple)):
        return [conv(v) for v in val]
    return [conv(part) for part in str(val).split(",") if part.strip()]


def config_file_from_env() -> str | None:
    path = os.environ.get(ENV_CONFIG_VAR)
    return path if path else None
