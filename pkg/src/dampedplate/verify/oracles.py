"""Solution oracles that never touch the closed-form multipliers.

* :func:`mode_ode_oracle` integrates the per-mode ODE
  (1 + q) y'' + q y' + q^2 y = F(t) with an adaptive 8th-order Runge-Kutta
  method.
* :func:`mol_oracle` steps the strong form of the nonlinear equation with
  classical RK4 in spectral space, evaluating |u|^lambda pointwise.
"""
from __future__ import annotations

import warnings
from collections.abc import Callable

import numpy as np
from scipy.integrate import solve_ivp

from ..grid import Field, GridMismatchError
from ..mild import MildSolution, TimeGrid
from ..nonlinear import NonlinearityParams, power_values
from ..norms import NormParams
from ..propagator import LinearState, linear_solution
from ..symbols import frac_power, oscillation


class IntegratorFailure(RuntimeError):
    pass


class NumericalInstability(RuntimeError):
    pass


def mode_ode_oracle(u0: Field, u1: Field, t, forcing: Callable[[float], np.ndarray] | None = None,
                    rtol: float = 1e-12, atol: float = 1e-14):
    """Integrate every Fourier mode from u(0) = u0, u_t(0) = Lap u1.

    ``forcing(t)`` returns the half-spectrum right-hand side F(t).  A scalar
    ``t`` yields one :class:`LinearState`; a sequence yields a list.
    """
    if u0.grid != u1.grid:
        raise GridMismatchError("u0 and u1 live on different grids")
    g = u0.grid
    q = g.xi_sq_r.ravel()
    y0 = g.rfft(u0.values).ravel()
    v0 = -q * g.rfft(u1.values).ravel()
    m = q.size
    inertia = 1.0 + q

    def rhs(tau, z):
        y, v = z[:m], z[m:]
        acc = -q * q * y - q * v
        if forcing is not None:
            acc = acc + np.asarray(forcing(tau)).ravel()
        return np.concatenate([v, acc / inertia])

    times = np.atleast_1d(np.asarray(t, dtype=float))
    if np.any(times < 0):
        raise ValueError("times must be nonnegative")
    order = np.argsort(times)
    t_end = float(times.max())
    z0 = np.concatenate([y0, v0]).astype(complex)
    if t_end == 0:
        zs = np.repeat(z0[:, None], times.size, axis=1)
    else:
        sol = solve_ivp(rhs, (0.0, t_end), z0, method="DOP853", t_eval=times[order],
                        rtol=rtol, atol=atol)
        if not sol.success:
            raise IntegratorFailure(f"mode ODE integration failed: {sol.message}")
        zs = np.empty_like(sol.y)
        zs[:, order] = sol.y

    states = []
    for i, tau in enumerate(times):
        y = zs[:m, i].reshape(g.xi_sq_r.shape)
        v = zs[m:, i].reshape(g.xi_sq_r.shape)
        states.append(LinearState(Field(g, g.irfft(y)), Field(g, g.irfft(v)), float(tau)))
    return states[0] if np.ndim(t) == 0 else states


def mol_oracle(u0: Field, u1: Field, params: NonlinearityParams, T: float, dt: float,
               convention: str = "paper", growth_limit: float = 10.0,
               norm_params: NormParams | None = None) -> MildSolution:
    """Method-of-lines reference for the nonlinear problem.

    The initial velocity is the one the chosen propagator convention
    implies, so the result is directly comparable to :func:`march`.
    """
    if u0.grid != u1.grid:
        raise GridMismatchError("u0 and u1 live on different grids")
    g = u0.grid
    q = g.xi_sq_r
    worst = dt * float(np.max(oscillation(q)))
    if worst > 0.2:
        warnings.warn(f"dt * max phi = {worst:.3f} exceeds the RK4 stability guideline 0.2",
                      RuntimeWarning, stacklevel=2)
    tg = TimeGrid.until(T, dt)
    start = linear_solution(u0, u1, 0.0, convention)
    y = g.rfft(start.u.values).astype(complex)
    v = g.rfft(start.ut.values).astype(complex)
    weight = params.delta * frac_power(q, params.theta)
    inertia = 1.0 + q

    def force(yh):
        return power_values(g.irfft(yh), g, params.lam, params.dealias)

    def accel(yh, vh):
        return (-q * q * yh - q * vh + weight * force(yh)) / inertia

    K = tg.K
    U = np.empty((K + 1,) + q.shape, dtype=complex)
    V = np.empty_like(U)
    Nh = np.empty_like(U)
    U[0], V[0] = y, v
    Nh[0] = force(y)
    h = tg.dt
    prev = max(float(np.max(np.abs(y))), np.finfo(float).tiny)
    for k in range(1, K + 1):
        k1y, k1v = v, accel(y, v)
        k2y, k2v = v + 0.5 * h * k1v, accel(y + 0.5 * h * k1y, v + 0.5 * h * k1v)
        k3y, k3v = v + 0.5 * h * k2v, accel(y + 0.5 * h * k2y, v + 0.5 * h * k2v)
        k4y, k4v = v + h * k3v, accel(y + h * k3y, v + h * k3v)
        y = y + h / 6.0 * (k1y + 2 * k2y + 2 * k3y + k4y)
        v = v + h / 6.0 * (k1v + 2 * k2v + 2 * k3v + k4v)
        cur = float(np.max(np.abs(y)))
        if not np.isfinite(cur) or cur > growth_limit * prev:
            raise NumericalInstability(f"RK4 norm grew by more than {growth_limit}x at step {k}")
        prev = max(cur, np.finfo(float).tiny)
        U[k], V[k] = y, v
        Nh[k] = force(y)

    sol = MildSolution(g, tg, U, V, Nh, params)
    sol.norm_records = sol.norms(norm_params or NormParams(n=g.n, theta=params.theta, lam=params.lam))
    return sol
