"""Lebesgue, Sobolev and Bessel-potential norms, and the weighted space-time norms.

Space-time sups are finite-sample sups over whatever recording times the
trajectory carries; the truncation horizon is reported by the caller.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grid import Field, SpectralGrid, forward


@dataclass(frozen=True)
class NormParams:
    """Exponents of the weighted norms.

    ``alpha1``, ``alpha``, ``beta`` and the conjugate ``p_conj`` are derived
    from (n, theta, lam, p) and cannot be set directly.
    """

    n: int = 1
    s: float = 1.0
    p: float = 2.0
    theta: float = 1.0
    lam: float = 3.0
    sigma: float | None = None
    q: float | None = None
    T: float = np.inf

    def __post_init__(self):
        if not self.p >= 1:
            raise ValueError(f"p must be >= 1, got {self.p}")
        if self.q is not None and not self.q >= 1:
            raise ValueError(f"q must be >= 1, got {self.q}")
        if self.lam <= 1:
            raise ValueError("lambda must exceed 1")

    @property
    def p_conj(self) -> float:
        return conjugate(self.p)

    @property
    def dispersion(self) -> float:
        """(n/2)(1 - 2/p)."""
        return 0.5 * self.n * (1.0 - 2.0 * inv(self.p))

    @property
    def alpha1(self) -> float:
        return (self.n + 2.0 * (self.theta - 1.0)) / 2.0

    @property
    def alpha(self) -> float:
        return (2.0 - self.theta - self.dispersion) / (self.lam - 1.0)

    @property
    def beta(self) -> float:
        return self.alpha + 1.0 - self.theta


def inv(p: float) -> float:
    return 0.0 if np.isinf(p) else 1.0 / p


def conjugate(p: float) -> float:
    if p == 1:
        return np.inf
    if np.isinf(p):
        return 1.0
    return p / (p - 1.0)


def _values(f) -> tuple[np.ndarray, SpectralGrid | None]:
    if isinstance(f, Field):
        return f.values, f.grid
    return np.asarray(f), None


def lp_norm(f: Field, p: float) -> float:
    """(sum |f|^p dx^n)^(1/p); grid maximum for p = inf."""
    vals, g = _values(f)
    if np.isinf(p):
        return float(np.max(np.abs(vals)))
    w = g.dx ** g.n
    return float((np.sum(np.abs(vals) ** p) * w) ** (1.0 / p))


def sobolev_from_half(coeffs: np.ndarray, grid: SpectralGrid, s: float) -> np.ndarray:
    """H^s norms of half-spectrum coefficients; leading axes are batch axes."""
    q = grid.xi_sq_r
    dens = (1.0 + q) ** s * np.abs(coeffs) ** 2
    # rfft layout stores each +/-k pair once except the 0 and Nyquist columns
    weight = np.full(q.shape[-1], 2.0)
    weight[0] = 1.0
    if grid.N % 2 == 0:
        weight[-1] = 1.0
    axes = tuple(range(-grid.n, 0))
    total = np.sum(dens * weight, axis=axes)
    return np.sqrt(total * grid.dk ** grid.n)


def sobolev_norm(f: Field, s: float) -> float:
    """(sum (1 + |xi|^2)^s |f_hat|^2 dk^n)^(1/2)."""
    g = f.grid
    dens = (1.0 + g.xi_sq) ** s * np.abs(forward(f).coeffs) ** 2
    return float(np.sqrt(np.sum(dens) * g.dk ** g.n))


def bessel_filter(f: Field, s: float) -> np.ndarray:
    g = f.grid
    return g.irfft(g.rfft(f.values) * (1.0 + g.xi_sq_r) ** (s / 2.0))


def bessel_norm(f: Field, s: float, p: float) -> float:
    """|| (I - Lap)^(s/2) f ||_{L^p}."""
    g = f.grid
    return lp_norm(Field(g, bessel_filter(f, s)), p)


def bessel_from_half(coeffs: np.ndarray, grid: SpectralGrid, s: float, p: float) -> np.ndarray:
    """Batched H^s_p norms of half-spectrum coefficients."""
    vals = grid.irfft(coeffs * (1.0 + grid.xi_sq_r) ** (s / 2.0))
    axes = tuple(range(-grid.n, 0))
    if np.isinf(p):
        return np.max(np.abs(vals), axis=axes)
    return (np.sum(np.abs(vals) ** p, axis=axes) * grid.dx ** grid.n) ** (1.0 / p)


def linf_from_values(values: np.ndarray, n: int) -> np.ndarray:
    axes = tuple(range(-n, 0))
    return np.max(np.abs(values), axis=axes)


# --- weighted space-time norms -------------------------------------------

def y_weighted(times, linf, hs, hs_minus1, alpha1: float) -> np.ndarray:
    return (1.0 + np.asarray(times)) ** alpha1 * linf + hs + hs_minus1


def x_weighted(times, hsp, hsp_minus1, alpha: float, beta: float) -> np.ndarray:
    t = np.asarray(times, dtype=float)
    with np.errstate(divide="ignore"):
        out = t ** alpha * hsp + t ** beta * hsp_minus1
    return np.where(t > 0, out, np.nan)


def z_weighted(times, hsp, hsp_minus1, dispersion: float) -> np.ndarray:
    t = np.asarray(times, dtype=float)
    return t ** dispersion * (hsp + hsp_minus1)


def _records(sol, params: NormParams, need_p: bool) -> dict:
    rec = sol.norms(params, with_bessel=need_p)
    if len(rec["t"]) == 0:
        raise ValueError("empty trajectory")
    return rec


def y_norm(sol, s: float, alpha1: float) -> float:
    """sup_k (1 + t_k)^alpha1 ||u||_inf + ||u||_{H^s} + ||u_t||_{H^(s-1)}."""
    rec = _records(sol, NormParams(n=sol.grid.n, s=s), need_p=False)
    return float(np.max(y_weighted(rec["t"], rec["linf"], rec["hs"], rec["hs_minus1"], alpha1)))


def x_norm(sol, s: float, p: float, alpha: float, beta: float) -> float:
    """sup_{k >= 1} t^alpha ||u||_{H^s_p} + t^beta ||u_t||_{H^(s-1)_p}."""
    rec = _records(sol, NormParams(n=sol.grid.n, s=s, p=p), need_p=True)
    vals = x_weighted(rec["t"], rec["hsp"], rec["hsp_minus1"], alpha, beta)
    vals = vals[rec["t"] > 0]
    if vals.size == 0:
        raise ValueError("x_norm needs at least one positive sample time")
    return float(np.max(vals))


def z_norm(sol, s: float, p: float, T: float) -> float:
    """sup_{t_k < T} t^((n/2)(1-2/p)) (||u||_{H^s_p} + ||u_t||_{H^(s-1)_p})."""
    params = NormParams(n=sol.grid.n, s=s, p=p)
    rec = _records(sol, params, need_p=True)
    mask = rec["t"] < T
    vals = z_weighted(rec["t"][mask], rec["hsp"][mask], rec["hsp_minus1"][mask], params.dispersion)
    return float(np.max(vals)) if vals.size else 0.0


def data_norm_I0(u0: Field, u1: Field, s: float, p: float, sample_times, alpha: float,
                 beta: float) -> float:
    """Sampled version of the initial-data norm built from the linear propagators."""
    from .symbols import MultiplierKind, multiplier_table

    g = u0.grid
    times = np.asarray(sample_times, dtype=float)
    times = times[times > 0]
    h0 = g.rfft(u0.values)
    h1 = g.rfft(u1.values)
    q = g.xi_sq_r

    def norms(kind, coeffs, sob):
        return bessel_from_half(multiplier_table(kind, q, times) * coeffs, g, sob, p)

    first = norms(MultiplierKind.dtS, h0, s) + norms(MultiplierKind.SLap, h1, s)
    second = norms(MultiplierKind.dt2S, h0, s - 1) + norms(MultiplierKind.dtSLap, h1, s - 1)
    return float(np.max(times ** alpha * first) + np.max(times ** beta * second))
