"""Closed-form Fourier symbols of the linear plate semigroup.

With q = |xi|^2, the characteristic roots of

    (1 + q) r^2 + q r + q^2 = 0

are r = -a(q) +/- i phi(q) where

    a(q)   = q / (2 (1 + q))                       (damping rate)
    phi(q) = q sqrt(3 + 4 q) / (2 (1 + q))         (oscillation frequency)

and a / phi = 1 / sqrt(3 + 4 q) identically.  Every multiplier below is a
combination of exp(-a t), cos(t phi) and sin(t phi); the only removable
singularity is sin(t phi) / phi at q = 0.
"""
from __future__ import annotations

from enum import Enum

import numpy as np

from .grid import SpectralGrid

# below this value of t*phi, sin(t phi)/phi uses its Taylor polynomial
TAYLOR_SWITCH = 1e-4


class MultiplierKind(str, Enum):
    S = "S"
    dtS = "dtS"
    dt2S = "dt2S"
    SLap = "SLap"
    dtSLap = "dtSLap"
    LambdaTheta = "LambdaTheta"
    dtLambdaTheta = "dtLambdaTheta"
    P_ivp = "P_ivp"
    dtP_ivp = "dtP_ivp"


def decay_rate(q):
    q = np.asarray(q, dtype=float)
    return q / (2.0 * (1.0 + q))


def oscillation(q):
    q = np.asarray(q, dtype=float)
    return q * np.sqrt(3.0 + 4.0 * q) / (2.0 * (1.0 + q))


def damping_ratio(q):
    """a / phi, evaluated without forming the quotient."""
    return 1.0 / np.sqrt(3.0 + 4.0 * np.asarray(q, dtype=float))


def sinc_term(q, t):
    """sin(t phi) / phi with the q -> 0 limit t."""
    phi = oscillation(q)
    tp = t * phi
    small = tp < TAYLOR_SWITCH
    safe = np.where(small, 1.0, phi)
    direct = np.sin(tp) / safe
    taylor = t - t ** 3 * phi * phi / 6.0
    return np.where(small, taylor, direct)


def frac_power(q, theta: float):
    """|xi|^(2 theta) with 0^0 = 1."""
    q = np.asarray(q, dtype=float)
    if theta == 0:
        return np.ones_like(q)
    return q ** theta


def _evaluate(kind: MultiplierKind, q: np.ndarray, t, theta: float) -> np.ndarray:
    a = decay_rate(q)
    phi = oscillation(q)
    r = damping_ratio(q)
    E = np.exp(-a * t)
    c = np.cos(t * phi)
    s = np.sin(t * phi)

    if kind is MultiplierKind.S:
        return E * sinc_term(q, t)
    if kind is MultiplierKind.dtS:
        return E * (c - r * s)
    if kind is MultiplierKind.dt2S:
        coef = q * (1.0 + 2.0 * q) / ((1.0 + q) * np.sqrt(3.0 + 4.0 * q))
        return E * (-2.0 * a * c - coef * s)
    if kind is MultiplierKind.SLap:
        return -q * E * sinc_term(q, t)
    if kind is MultiplierKind.dtSLap:
        return -q * E * (c - r * s)
    if kind is MultiplierKind.LambdaTheta:
        return E * sinc_term(q, t) * frac_power(q, theta) / (1.0 + q)
    if kind is MultiplierKind.dtLambdaTheta:
        return E * (c - r * s) * frac_power(q, theta) / (1.0 + q)
    if kind is MultiplierKind.P_ivp:
        return E * (c + r * s)
    if kind is MultiplierKind.dtP_ivp:
        # a^2 / phi = a * r
        return -E * (phi + a * r) * s
    raise ValueError(f"unknown multiplier kind {kind!r}")


def multiplier_values(kind, xi_sq, t: float, theta: float = 1.0) -> np.ndarray:
    """Vectorized multiplier over an array of |xi|^2 values."""
    kind = MultiplierKind(kind)
    q = np.asarray(xi_sq, dtype=float)
    if np.any(q < 0):
        raise ValueError("xi_sq must be nonnegative")
    if t < 0:
        raise ValueError(f"time must be nonnegative, got {t}")
    return _evaluate(kind, q, float(t), float(theta))


def multiplier(kind, xi_sq: float, t: float, theta: float = 1.0) -> float:
    return float(multiplier_values(kind, xi_sq, t, theta))


def multiplier_array(kind, grid: SpectralGrid, t: float, theta: float = 1.0,
                     half: bool = False) -> np.ndarray:
    """Multiplier over all modes of ``grid`` (full FFT layout, or rfft layout)."""
    q = grid.xi_sq_r if half else grid.xi_sq
    return multiplier_values(kind, q, t, theta)


def multiplier_table(kind, q: np.ndarray, times: np.ndarray, theta: float = 1.0) -> np.ndarray:
    """Stack of multiplier arrays, one row per time."""
    kind = MultiplierKind(kind)
    q = np.asarray(q, dtype=float)
    times = np.asarray(times, dtype=float)
    if np.any(q < 0) or np.any(times < 0):
        raise ValueError("xi_sq and times must be nonnegative")
    tt = times.reshape((-1,) + (1,) * q.ndim)
    return _evaluate(kind, q[None], tt, float(theta))
