"""Quadrature checks of the two scalar integral inequalities."""
from __future__ import annotations

import numpy as np
from scipy.integrate import quad
from scipy.special import gamma

from .fits import LemmaReport, stable_constant

DEFAULT_T = (1.0, 4.0, 16.0, 64.0)


class QuadratureError(RuntimeError):
    pass


def sphere_measure(n: int) -> float:
    """Surface measure of the unit sphere in R^n (2 points for n = 1)."""
    return 2.0 * np.pi ** (n / 2.0) / gamma(n / 2.0)


def gaussian_ball_integral(a: float, n: int, t: float) -> float:
    """int_{|xi| <= 1} exp(-|xi|^2 t / 4) |xi|^a dxi by radial quadrature.

    The factor r^(a+n-1) goes into the algebraic weight, so the integrable
    singularity at r = 0 for -n < a < 1 - n costs nothing.
    """
    val, err, *rest = quad(lambda r: np.exp(-r * r * t / 4.0), 0.0, 1.0, weight="alg",
                           wvar=(a + n - 1.0, 0.0), epsabs=0.0, epsrel=1e-12, limit=200,
                           full_output=1)
    if len(rest) > 1:
        raise QuadratureError(f"radial quadrature did not converge: {rest[1]}")
    if err > 1e-8 * abs(val):
        raise QuadratureError(f"radial quadrature error {err:.2e} too large for value {val:.6g}")
    return sphere_measure(n) * val


def gamma_bound(a: float, n: int, t: float) -> float:
    """Bound produced by the change of variables: (omega/2) Gamma((n+a)/2) 2^(a+n) t^(-(n+a)/2)."""
    return 0.5 * sphere_measure(n) * gamma((n + a) / 2.0) * 2.0 ** (a + n) * t ** (-(n + a) / 2.0)


def check_gamma_lemma(a: float, n: int, t_grid=DEFAULT_T) -> LemmaReport:
    if not a > -n:
        raise ValueError(f"requires a > -n, got a = {a}, n = {n}")
    t = np.asarray(t_grid, dtype=float)
    if np.any(t <= 0):
        raise ValueError("t_grid must be positive")
    lhs = np.array([gaussian_ball_integral(a, n, tt) for tt in t])
    rhs = np.array([gamma_bound(a, n, tt) for tt in t])
    ratio = lhs / rhs
    return LemmaReport("gamma_ball", {"a": a, "n": n}, t, lhs, rhs, True,
                       float(ratio.max()), True)


def _power_integral(b: float, t: float) -> float:
    """int_0^t (1 + tau)^(-b) dtau in closed form."""
    if b == 1:
        return float(np.log1p(t))
    return float(((1.0 + t) ** (1.0 - b) - 1.0) / (1.0 - b))


def convolution_integral(a: float, b: float, t: float) -> float:
    val, err = quad(lambda s: (1.0 + t - s) ** (-a) * (1.0 + s) ** (-b), 0.0, t,
                    epsabs=0.0, epsrel=1e-12, limit=200)
    return val


def check_time_convolution(a: float, b: float, t_grid=None, rtol: float = 0.1) -> LemmaReport:
    """Empirical constant of int_0^t (1+t-tau)^-a (1+tau)^-b <= C (1+t)^-a int_0^t (1+tau)^-b.

    Stability means the running maximum of the ratio grows by at most
    ``rtol`` between the first half (in log t) of the grid and the whole grid.
    """
    if not b >= a >= 0:
        raise ValueError(f"requires b >= a >= 0, got a = {a}, b = {b}")
    t = np.geomspace(1.0, 100.0, 41) if t_grid is None else np.asarray(t_grid, dtype=float)
    lhs = np.array([convolution_integral(a, b, tt) for tt in t])
    rhs = np.array([(1.0 + tt) ** (-a) * _power_integral(b, tt) for tt in t])
    c_full, c_half, stable = stable_constant(t, lhs / rhs, rtol)
    rep = LemmaReport("time_convolution", {"a": a, "b": b}, t, lhs, rhs, a == 0, c_full, stable)
    rep.details["c_emp_first_half"] = c_half
    return rep
