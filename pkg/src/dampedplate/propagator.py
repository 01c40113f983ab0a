"""Application of semigroup multipliers and the homogeneous linear solution."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .grid import Field, GridMismatchError, SpectralGrid, Spectrum, forward, inverse
from .symbols import MultiplierKind, multiplier_table, multiplier_values

CONVENTIONS = ("paper", "ivp")


@dataclass(frozen=True)
class LinearState:
    u: Field
    ut: Field
    t: float

    def __post_init__(self):
        if self.u.grid != self.ut.grid:
            raise GridMismatchError("u and ut live on different grids")
        if self.t < 0:
            raise ValueError("t must be nonnegative")


@lru_cache(maxsize=256)
def _cached_multiplier(kind: MultiplierKind, grid: SpectralGrid, t: float, theta: float,
                       half: bool) -> np.ndarray:
    q = grid.xi_sq_r if half else grid.xi_sq
    out = multiplier_values(kind, q, t, theta)
    out.setflags(write=False)
    return out


def cached_multiplier(kind, grid: SpectralGrid, t: float, theta: float = 1.0,
                      half: bool = False) -> np.ndarray:
    return _cached_multiplier(MultiplierKind(kind), grid, float(t), float(theta), half)


def apply(kind, f: Field, t: float, theta: float = 1.0) -> Field:
    """Fourier multiplier ``kind`` at time ``t`` applied to ``f``."""
    if not np.all(np.isfinite(f.values)):
        raise ValueError("input field is not finite")
    g = f.grid
    m = cached_multiplier(kind, g, t, theta)
    return inverse(Spectrum(g, forward(f).coeffs * m))


def apply_spectral(kind, coeffs: np.ndarray, grid: SpectralGrid, t: float,
                   theta: float = 1.0) -> np.ndarray:
    """Same as :func:`apply` on half-spectrum coefficients (rfft layout)."""
    return coeffs * cached_multiplier(kind, grid, t, theta, half=True)


def laplacian(f: Field) -> Field:
    return inverse(Spectrum(f.grid, -f.grid.xi_sq * forward(f).coeffs))


def _kinds(convention: str) -> tuple[MultiplierKind, MultiplierKind]:
    if convention == "paper":
        return MultiplierKind.dtS, MultiplierKind.dt2S
    if convention == "ivp":
        return MultiplierKind.P_ivp, MultiplierKind.dtP_ivp
    raise ValueError(f"convention must be one of {CONVENTIONS}, got {convention!r}")


def linear_solution(u0: Field, u1: Field, t: float, convention: str = "paper") -> LinearState:
    """Homogeneous solution with data u(0) = u0 and (ivp convention) u_t(0) = Lap u1.

    The ``paper`` convention propagates u0 with dtS, whose time derivative at
    t = 0 is -2a rather than 0; ``ivp`` uses the propagator that reproduces
    both initial conditions exactly.
    """
    if u0.grid != u1.grid:
        raise GridMismatchError("u0 and u1 live on different grids")
    g = u0.grid
    k_pos, k_vel = _kinds(convention)
    h0 = g.rfft(u0.values)
    h1 = g.rfft(u1.values)
    u_hat = apply_spectral(k_pos, h0, g, t) + apply_spectral(MultiplierKind.SLap, h1, g, t)
    ut_hat = apply_spectral(k_vel, h0, g, t) + apply_spectral(MultiplierKind.dtSLap, h1, g, t)
    return LinearState(Field(g, g.irfft(u_hat)), Field(g, g.irfft(ut_hat)), float(t))


def linear_trajectory(h0: np.ndarray, h1: np.ndarray, grid: SpectralGrid, times: np.ndarray,
                      convention: str = "paper") -> tuple[np.ndarray, np.ndarray]:
    """Half-spectrum linear part at every time in ``times``; arrays (K+1, ...)."""
    k_pos, k_vel = _kinds(convention)
    q = grid.xi_sq_r
    u_hat = multiplier_table(k_pos, q, times) * h0 + multiplier_table(MultiplierKind.SLap, q, times) * h1
    ut_hat = multiplier_table(k_vel, q, times) * h0 + multiplier_table(MultiplierKind.dtSLap, q, times) * h1
    return u_hat, ut_hat
