"""Mild solutions of the forced plate equation.

The Duhamel formula

    u(t) = L(t)[u0, u1] + delta * int_0^t Lambda_theta(t - tau) |u(tau)|^lambda dtau

is discretized with the trapezoidal product rule on a uniform time grid.
Because Lambda_theta(0) = 0 the endpoint tau = t carries no weight, so the
scheme is explicit.  Two drivers are provided: :func:`march` (sequential in
time) and :func:`picard` (fixed-point iteration on whole trajectories, the
discrete analogue of the contraction argument).  On the same time grid the
Picard fixed point and the march output coincide.
"""
from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from scipy.signal import fftconvolve

from .grid import Field, GridMismatchError, SpectralGrid
from .nonlinear import NonlinearityParams, power_values
from .norms import (
    NormParams,
    bessel_from_half,
    linf_from_values,
    sobolev_from_half,
    x_weighted,
    y_weighted,
    z_weighted,
)
from .propagator import LinearState, linear_trajectory
from .symbols import MultiplierKind, frac_power, multiplier_table, oscillation

log = logging.getLogger(__name__)

MAX_STEPS = 20000


class DivergenceWarning(RuntimeWarning):
    pass


@dataclass(frozen=True)
class TimeGrid:
    """Uniform steps t_k = k dt, k = 0..K, with an optional log-spaced recording overlay."""

    dt: float
    K: int
    samples_per_decade: int | None = None

    def __post_init__(self):
        if not self.dt > 0:
            raise ValueError("dt must be positive")
        if self.K < 1:
            raise ValueError("K must be at least 1")

    @classmethod
    def until(cls, T: float, dt: float, samples_per_decade: int | None = None) -> TimeGrid:
        return cls(dt, int(round(T / dt)), samples_per_decade)

    @property
    def T(self) -> float:
        return self.K * self.dt

    @cached_property
    def times(self) -> np.ndarray:
        return self.dt * np.arange(self.K + 1)

    @cached_property
    def record_indices(self) -> np.ndarray:
        if self.samples_per_decade is None:
            return np.arange(self.K + 1)
        decades = np.log10(self.T / self.dt)
        m = max(int(np.ceil(decades * self.samples_per_decade)), 1)
        targets = np.logspace(np.log10(self.dt), np.log10(self.T), m + 1)
        idx = np.unique(np.clip(np.rint(targets / self.dt).astype(int), 1, self.K))
        return np.concatenate([[0], idx])


@dataclass(eq=False)
class MildSolution:
    """Trajectory of (u, u_t) on a time grid, stored as half spectra."""

    grid: SpectralGrid
    tgrid: TimeGrid
    u_hat: np.ndarray
    ut_hat: np.ndarray
    nonlin_hat: np.ndarray
    params: NonlinearityParams
    status: str = "ok"
    norm_records: dict = field(default_factory=dict)

    @property
    def times(self) -> np.ndarray:
        return self.tgrid.times[: len(self.u_hat)]

    def __len__(self):
        return len(self.u_hat)

    @property
    def u(self) -> np.ndarray:
        return self.grid.irfft(self.u_hat)

    @property
    def ut(self) -> np.ndarray:
        return self.grid.irfft(self.ut_hat)

    def state(self, k: int) -> LinearState:
        g = self.grid
        return LinearState(Field(g, g.irfft(self.u_hat[k])), Field(g, g.irfft(self.ut_hat[k])),
                           float(self.times[k]))

    @property
    def trajectory(self) -> list[LinearState]:
        return [self.state(k) for k in range(len(self))]

    def recorded(self) -> np.ndarray:
        idx = self.tgrid.record_indices
        return idx[idx < len(self)]

    def norms(self, params: NormParams, with_bessel: bool = True, indices=None) -> dict:
        """Per-time norm records at the recording indices."""
        idx = self.recorded() if indices is None else np.asarray(indices)
        return trajectory_norms(self.grid, self.times[idx], self.u_hat[idx], self.ut_hat[idx],
                                params, with_bessel)


def trajectory_norms(grid: SpectralGrid, times, u_hat, ut_hat, params: NormParams,
                     with_bessel: bool = True) -> dict:
    rec = {
        "t": np.asarray(times, dtype=float),
        "linf": linf_from_values(grid.irfft(u_hat), grid.n),
        "hs": sobolev_from_half(u_hat, grid, params.s),
        "hs_minus1": sobolev_from_half(ut_hat, grid, params.s - 1),
    }
    if with_bessel:
        rec["hsp"] = bessel_from_half(u_hat, grid, params.s, params.p)
        rec["hsp_minus1"] = bessel_from_half(ut_hat, grid, params.s - 1, params.p)
    return rec


def space_time_norm(kind: str, grid: SpectralGrid, times, u_hat, ut_hat, params: NormParams) -> float:
    """Y, X or Z norm of a sampled trajectory."""
    kind = kind.upper()
    if kind == "Y":
        rec = trajectory_norms(grid, times, u_hat, ut_hat, params, with_bessel=False)
        return float(np.max(y_weighted(rec["t"], rec["linf"], rec["hs"], rec["hs_minus1"], params.alpha1)))
    rec = trajectory_norms(grid, times, u_hat, ut_hat, params, with_bessel=True)
    t = rec["t"]
    if kind == "X":
        vals = x_weighted(t, rec["hsp"], rec["hsp_minus1"], params.alpha, params.beta)[t > 0]
    elif kind == "Z":
        mask = t < params.T
        vals = z_weighted(t[mask], rec["hsp"][mask], rec["hsp_minus1"][mask], params.dispersion)
    else:
        raise ValueError(f"norm kind must be Y, X or Z, got {kind!r}")
    return float(np.max(vals)) if vals.size else 0.0


def _check_resolution(grid: SpectralGrid, dt: float, limit: float = 0.5) -> None:
    worst = dt * float(np.max(oscillation(grid.xi_sq_r)))
    if worst > limit:
        warnings.warn(
            f"dt * max phi = {worst:.3f} exceeds {limit}; fastest retained oscillation under-resolved",
            RuntimeWarning,
            stacklevel=3,
        )


def _default_norm_params(grid: SpectralGrid, params: NonlinearityParams) -> NormParams:
    return NormParams(n=grid.n, s=1.0, p=2.0, theta=params.theta, lam=params.lam)


def _prepare(u0: Field, u1: Field, params: NonlinearityParams, tg: TimeGrid, convention: str):
    if u0.grid != u1.grid:
        raise GridMismatchError("u0 and u1 live on different grids")
    if tg.K > MAX_STEPS:
        raise ValueError(f"K = {tg.K} exceeds the history guard of {MAX_STEPS} steps")
    g = u0.grid
    params.check_dimension(g.n)
    _check_resolution(g, tg.dt)
    h0 = g.rfft(u0.values)
    h1 = g.rfft(u1.values)
    lin_u, lin_ut = linear_trajectory(h0, h1, g, tg.times, convention)
    q = g.xi_sq_r
    lam_tab = multiplier_table(MultiplierKind.LambdaTheta, q, tg.times, params.theta)
    dlam_tab = multiplier_table(MultiplierKind.dtLambdaTheta, q, tg.times, params.theta)
    return g, lin_u, lin_ut, lam_tab, dlam_tab


def march(u0: Field, u1: Field, params: NonlinearityParams, tg: TimeGrid,
          convention: str = "paper", norm_params: NormParams | None = None,
          blowup_factor: float = 1e6) -> MildSolution:
    """Sequential trapezoidal convolution quadrature of the Duhamel formula.

    Cost is O(K^2) in the number of steps; the nonlinearity spectra are
    stored once and reused by every later step.
    """
    g, lin_u, lin_ut, lam_tab, dlam_tab = _prepare(u0, u1, params, tg, convention)
    dt, K, delta = tg.dt, tg.K, params.delta
    u_hat = np.empty_like(lin_u, dtype=complex)
    ut_hat = np.empty_like(u_hat)
    n_hat = np.empty_like(u_hat)

    u_hat[0] = lin_u[0]
    ut_hat[0] = lin_ut[0]
    vals = g.irfft(u_hat[0])
    cap = blowup_factor * max(float(np.max(np.abs(vals))), np.finfo(float).tiny)
    n_hat[0] = power_values(vals, g, params.lam, params.dealias)
    status = "ok"
    last = K

    for k in range(1, K + 1):
        # trapezoid weights dt/2, dt, ..., dt, dt/2; the tau = t_k term vanishes
        acc = np.einsum("ij,ij->j", lam_tab[k:0:-1].reshape(k, -1), n_hat[:k].reshape(k, -1))
        acc = acc.reshape(lam_tab.shape[1:])
        acc = dt * acc - 0.5 * dt * lam_tab[k] * n_hat[0]
        u_hat[k] = lin_u[k] + delta * acc
        vals = g.irfft(u_hat[k])
        peak = float(np.max(np.abs(vals)))
        if not np.isfinite(peak) or peak > cap:
            status = "diverged"
            last = k - 1
            warnings.warn(f"march diverged at t = {tg.times[k]:.4g} (max |u| = {peak:.3e})",
                          DivergenceWarning, stacklevel=2)
            break
        n_hat[k] = power_values(vals, g, params.lam, params.dealias)
        accd = np.einsum("ij,ij->j", dlam_tab[k::-1].reshape(k + 1, -1), n_hat[: k + 1].reshape(k + 1, -1))
        accd = accd.reshape(dlam_tab.shape[1:])
        accd = dt * accd - 0.5 * dt * (dlam_tab[k] * n_hat[0] + dlam_tab[0] * n_hat[k])
        ut_hat[k] = lin_ut[k] + delta * accd

    n = last + 1
    sol = MildSolution(g, tg, u_hat[:n], ut_hat[:n], n_hat[:n], params, status)
    sol.norm_records = sol.norms(norm_params or _default_norm_params(g, params))
    return sol


@dataclass(frozen=True)
class PicardConfig:
    max_iters: int = 20
    tol: float = 1e-8
    ball_radius: float = np.inf
    norm_kind: str = "Y"
    norm_params: NormParams | None = None

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.max_iters < 1:
            raise ValueError("max_iters must be >= 1")
        if self.norm_kind.upper() not in ("Y", "X", "Z"):
            raise ValueError(f"norm_kind must be Y, X or Z, got {self.norm_kind!r}")


@dataclass(eq=False)
class PicardResult:
    solution: MildSolution
    distances: list[float]
    iterate_norms: list[float]
    converged: bool
    in_ball: bool
    contraction_failed: bool

    @property
    def iterations(self) -> int:
        return len(self.distances)

    @property
    def ratios(self) -> np.ndarray:
        d = np.asarray(self.distances)
        with np.errstate(divide="ignore", invalid="ignore"):
            return d[1:] / d[:-1]

    def __iter__(self):
        yield self.solution
        yield self.distances


def duhamel(n_hat: np.ndarray, lam_tab: np.ndarray, dlam_tab: np.ndarray, dt: float):
    """Trapezoidal Duhamel sums for every time level, via FFT convolution in time."""
    K1 = len(n_hat)
    conv = fftconvolve(lam_tab, n_hat, axes=0)[:K1]
    dconv = fftconvolve(dlam_tab, n_hat, axes=0)[:K1]
    d = dt * conv - 0.5 * dt * (lam_tab * n_hat[0] + lam_tab[0] * n_hat)
    dd = dt * dconv - 0.5 * dt * (dlam_tab * n_hat[0] + dlam_tab[0] * n_hat)
    return d, dd


def picard(u0: Field, u1: Field, params: NonlinearityParams, tg: TimeGrid,
           cfg: PicardConfig = PicardConfig(), convention: str = "paper") -> PicardResult:
    """Fixed-point iteration u <- Phi(u) started from the linear part.

    Distances d_m = ||u^(m+1) - u^(m)|| are measured in ``cfg.norm_kind``.
    Three consecutive ratios d_(m+1)/d_m >= 1 stop the iteration with the
    ``contraction_failed`` flag set.
    """
    g, lin_u, lin_ut, lam_tab, dlam_tab = _prepare(u0, u1, params, tg, convention)
    np_ = cfg.norm_params or _default_norm_params(g, params)
    times = tg.times
    idx = tg.record_indices

    def measure(a, b):
        return space_time_norm(cfg.norm_kind, g, times[idx], a[idx], b[idx], np_)

    U, Ut = lin_u.astype(complex), lin_ut.astype(complex)
    norms = [measure(U, Ut)]
    distances: list[float] = []
    converged = failed = False
    streak = 0
    n_hat = None
    for m in range(cfg.max_iters):
        n_hat = power_values(g.irfft(U), g, params.lam, params.dealias)
        d, dd = duhamel(n_hat, lam_tab, dlam_tab, tg.dt)
        U_new = lin_u + params.delta * d
        Ut_new = lin_ut + params.delta * dd
        dist = measure(U_new - U, Ut_new - Ut)
        U, Ut = U_new, Ut_new
        distances.append(dist)
        norms.append(measure(U, Ut))
        log.debug("picard iteration %d: distance %.3e", m, dist)
        if not np.isfinite(dist):
            failed = True
            break
        if dist <= cfg.tol:
            converged = True
            break
        if len(distances) > 1 and dist >= distances[-2]:
            streak += 1
            if streak >= 3:
                failed = True
                break
        else:
            streak = 0

    n_hat = power_values(g.irfft(U), g, params.lam, params.dealias)
    sol = MildSolution(g, tg, U, Ut, n_hat, params, "ok" if converged else "unconverged")
    sol.norm_records = sol.norms(np_)
    in_ball = bool(np.all(np.asarray(norms) <= cfg.ball_radius))
    return PicardResult(sol, distances, norms, converged, in_ball, failed)


def residual(sol: MildSolution, params: NonlinearityParams | None = None,
             sobolev_index: float = -2.0) -> tuple[np.ndarray, np.ndarray]:
    """Strong-form residual (1 - Lap) u_tt + Lap^2 u - Lap u_t - delta (-Lap)^theta |u|^lambda.

    u_tt comes from the fourth-order centered difference of u in time, so
    residuals are reported at t_2 .. t_(K-2).  Returns (times, H^-2 norms).
    """
    params = params or sol.params
    if len(sol) < 5:
        raise ValueError("residual needs at least 5 time levels")
    g = sol.grid
    q = g.xi_sq_r
    dt = sol.tgrid.dt
    U = sol.u_hat
    utt = (-U[:-4] + 16 * U[1:-3] - 30 * U[2:-2] + 16 * U[3:-1] - U[4:]) / (12 * dt * dt)
    mid = slice(2, len(sol) - 2)
    res = ((1 + q) * utt + q * q * U[mid] + q * sol.ut_hat[mid]
           - params.delta * frac_power(q, params.theta) * sol.nonlin_hat[mid])
    return sol.times[mid], sobolev_from_half(res, g, sobolev_index)
