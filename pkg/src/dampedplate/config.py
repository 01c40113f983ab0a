"""Flat ``section.key = value`` run configuration.

Lines are ``key = value``; ``#`` starts a comment.  Every key must appear in
:data:`SCHEMA`; an unknown key is an error that names it.  List values are
comma separated.
"""
from __future__ import annotations

import math
from pathlib import Path

from .grid import SpectralGrid
from .hypotheses import THEOREMS, theta_admissible
from .mild import PicardConfig
from .nonlinear import NonlinearityParams
from .propagator import CONVENTIONS


class ConfigError(ValueError):
    pass


def _str_list(v: str) -> list[str]:
    return [x.strip() for x in v.split(",") if x.strip()]


def _float_list(v: str) -> list[float]:
    return [float(x) for x in _str_list(v)]


def _int_list(v: str) -> list[int]:
    return [int(x) for x in _str_list(v)]


def _bool(v: str) -> bool:
    low = v.strip().lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {v!r}")


# key -> (parser, default)
SCHEMA: dict[str, tuple] = {
    "run.seed": (int, 0),
    "grid.n": (int, 1),
    "grid.N": (int, 256),
    "grid.L": (float, 40.0),
    "model.lam": (float, 3.0),
    "model.theta": (float, 1.0),
    "model.delta": (float, -1.0),
    "model.convention": (str, "paper"),
    "model.dealias": (str, "two_thirds"),
    "model.solver": (str, "march"),
    "model.theorem": (str, "none"),
    "model.blowup_factor": (float, 1e6),
    "data.u0": (str, "gaussian"),
    "data.u0_amplitude": (float, 0.1),
    "data.u0_width": (float, 1.0),
    "data.u1": (str, "zero"),
    "data.u1_amplitude": (float, 0.0),
    "data.u1_width": (float, 1.0),
    "data.modes": (int, 6),
    "time.dt": (float, 1e-3),
    "time.T": (float, 1.0),
    "time.samples_per_decade": (int, 0),
    "norms.s": (float, 1.0),
    "norms.p": (float, 2.0),
    "norms.sigma": (float, 0.0),
    "norms.q": (float, 2.0),
    "picard.max_iters": (int, 20),
    "picard.tol": (float, 1e-8),
    "picard.ball_radius": (float, math.inf),
    "picard.norm_kind": (str, "Y"),
    "fit.window_lo": (float, 20.0),
    "fit.window_hi": (float, math.inf),
    "fit.tol": (float, 0.1),
    "verify.lemmas": (_str_list, ["dtS_linf"]),
    "verify.test_function": (str, "gaussian"),
    "verify.width": (float, 1.0),
    "verify.t_min": (float, 1.0),
    "verify.t_max": (float, 500.0),
    "verify.t_samples": (int, 120),
    "verify.window_lo": (float, 20.0),
    "verify.window_hi": (float, 0.0),
    "verify.tol": (float, 0.1),
    "verify.k": (int, 1),
    "integrals.gamma_a": (_str_list, ["0", "1", "edge"]),
    "integrals.gamma_n": (_int_list, [1, 2]),
    "integrals.gamma_t": (_float_list, [1.0, 4.0, 16.0, 64.0]),
    "integrals.conv_pairs": (_str_list, ["1:1", "1:2", "0.5:1"]),
    "integrals.conv_t_min": (float, 1.0),
    "integrals.conv_t_max": (float, 100.0),
    "integrals.conv_samples": (int, 41),
    "nonlinear.which": (_str_list, ["difference", "leibnitz", "leibnitz_l1"]),
    "nonlinear.reps": (int, 100),
    "nonlinear.N": (int, 128),
    "nonlinear.L": (float, 10.0),
    "nonlinear.s": (float, 0.4),
    "nonlinear.p": (float, 4.0),
    "nonlinear.q": (float, 2.0),
    "nonlinear.modes": (int, 6),
    "oracle.times": (_float_list, [0.5, 1.0, 5.0]),
    "oracle.linear_tol": (float, 1e-8),
    "oracle.nonlinear_tol": (float, 1e-4),
    "oracle.reference_dt": (float, 2.5e-4),
    "sweep.kind": (str, "simulate"),
    "sweep.param": (str, ""),
    "sweep.values": (_str_list, []),
    "output.curves": (_bool, True),
}

LIST_KEYS = {k for k, (parser, _) in SCHEMA.items() if parser in (_str_list, _float_list, _int_list)}


def parse_text(text: str, source: str = "<config>") -> dict[str, str]:
    """Raw key -> value-string map, checking syntax and key names only."""
    raw: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if "=" not in body:
            raise ConfigError(f"{source}:{lineno}: expected 'key = value', got {line.strip()!r}")
        key, value = (part.strip() for part in body.split("=", 1))
        if key not in SCHEMA:
            raise ConfigError(f"{source}:{lineno}: unknown key {key!r}")
        if key in raw:
            raise ConfigError(f"{source}:{lineno}: duplicate key {key!r}")
        raw[key] = value
    return raw


def typed(raw: dict[str, str]) -> dict:
    """Apply the schema parsers on top of the defaults."""
    cfg = {k: (list(d) if isinstance(d, list) else d) for k, (_, d) in SCHEMA.items()}
    for key, value in raw.items():
        if key not in SCHEMA:
            raise ConfigError(f"unknown key {key!r}")
        parser = SCHEMA[key][0]
        try:
            cfg[key] = parser(value)
        except ValueError as exc:
            raise ConfigError(f"bad value for {key!r}: {value!r} ({exc})") from None
    return cfg


def validate(cfg: dict, kind: str) -> list[str]:
    """Raise ConfigError on the first violated constraint; return admissibility notes."""
    try:
        SpectralGrid(cfg["grid.n"], cfg["grid.N"], cfg["grid.L"])
        NonlinearityParams(cfg["model.lam"], cfg["model.theta"], cfg["model.delta"], cfg["model.dealias"])
        PicardConfig(cfg["picard.max_iters"], cfg["picard.tol"], cfg["picard.ball_radius"],
                     cfg["picard.norm_kind"])
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    if cfg["model.convention"] not in CONVENTIONS:
        raise ConfigError(f"model.convention must be one of {CONVENTIONS}")
    if cfg["model.solver"] not in ("march", "mol"):
        raise ConfigError("model.solver must be 'march' or 'mol'")
    if kind in ("simulate", "picard", "oracle-compare"):
        if not cfg["time.dt"] > 0 or not cfg["time.T"] > 0:
            raise ConfigError("time.dt and time.T must be positive")
    n, s, sig, p, q = (cfg["grid.n"], cfg["norms.s"], cfg["norms.sigma"], cfg["norms.p"], cfg["norms.q"])
    lam, theta = cfg["model.lam"], cfg["model.theta"]
    notes = []
    adm = theta_admissible(n, theta)
    if not adm:
        notes.append("theta: " + "; ".join(adm.violations))
    for name, pred in THEOREMS.items():
        res = pred(n, s, lam, theta) if name == "global_hs" else pred(n, s, sig, p, q, lam, theta)
        if not res:
            notes.append(f"{name}: " + "; ".join(res.violations))
        if cfg["model.theorem"] == name and not res:
            raise ConfigError(f"hypotheses of {name} violated: {res.violations[0]}")
    if cfg["model.theorem"] not in ("none", *THEOREMS):
        raise ConfigError(f"model.theorem must be 'none' or one of {sorted(THEOREMS)}")
    return notes


def load(path: str | Path, kind: str, overrides: dict[str, str] | None = None) -> tuple[dict, list[str]]:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    raw = parse_text(text, str(path))
    raw.update(overrides or {})
    cfg = typed(raw)
    return cfg, validate(cfg, kind)


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, list):
        return ", ".join(_fmt(x) for x in v)
    return str(v)


def dump(cfg: dict) -> str:
    """Canonical text form: every key, sorted, fully resolved."""
    return "".join(f"{k} = {_fmt(cfg[k])}\n" for k in sorted(cfg))
