"""Decay and boundedness checks of the linear propagator estimates.

Every estimate has the shape ||T(t) g||_X <= C rate(t) D(g).  The check
evaluates the left side on a time grid, divides by rate(t) D(g), records the
empirical constant, and fits the log-log slope of the left side against the
stated exponent.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from ..grid import Field
from ..hypotheses import lemma_hypotheses
from ..norms import bessel_from_half, bessel_norm, conjugate, linf_from_values, lp_norm, sobolev_from_half, sobolev_norm
from ..symbols import MultiplierKind as MK
from ..symbols import multiplier_table
from .fits import LemmaReport, fit_decay, stable_constant

# sup over xi of |cos - (a/phi) sin| <= sqrt(1 + 1/3)
DTS_SUP = float(np.sqrt(4.0 / 3.0))


@dataclass(frozen=True)
class LemmaPoint:
    theta: float = 1.0
    s: float = 1.0
    sigma: float = 0.0
    p: float = 2.0
    k: int = 1


@dataclass(frozen=True)
class _Estimate:
    kind: MK
    norm: str            # "linf", "hs" or "hsp"
    index: float         # Sobolev / Bessel index of the left side
    rate: object         # callable t -> rate factor multiplying the data norms
    data: object         # callable g -> data norm (or tuple of two for split right sides)
    exponent: float | None
    explicit: float | None = None


def _estimate(lemma_id: str, n: int, pt: LemmaPoint) -> _Estimate:
    a1 = (n + 2.0 * (pt.theta - 1.0)) / 2.0
    disp = 0.5 * n * (1.0 - 2.0 / pt.p) if np.isfinite(pt.p) else 0.5 * n
    pc = conjugate(pt.p)
    s, sig = pt.s, pt.sigma

    def l1(g):
        return lp_norm(g, 1)

    def hs(idx):
        return lambda g: sobolev_norm(g, idx)

    def split(decay, tail_idx):
        # C t^-decay ||g||_1 + C e^(-t/4) ||g||_{H^tail}
        return (lambda t: (t ** -decay, np.exp(-t / 4.0)), (l1, hs(tail_idx)))

    def joint(decay, tail_idx):
        return (lambda t: (1.0 + t) ** -decay, lambda g: l1(g) + sobolev_norm(g, tail_idx))

    if lemma_id == "lambda_linf":
        r, d = split(a1, s)
        return _Estimate(MK.LambdaTheta, "linf", 0.0, r, d, -a1)
    if lemma_id == "lambda_linf_1pt":
        r, d = joint(a1, s)
        return _Estimate(MK.LambdaTheta, "linf", 0.0, r, d, -a1)
    if lemma_id == "dtS_linf":
        r, d = split(n / 2.0, s + 1)
        return _Estimate(MK.dtS, "linf", 0.0, r, d, -n / 2.0)
    if lemma_id == "SLap_linf":
        r, d = split(n / 2.0, s + 2)
        return _Estimate(MK.SLap, "linf", 0.0, r, d, -n / 2.0)
    if lemma_id == "dtS_linf_1pt":
        r, d = joint(n / 2.0, s + 1)
        return _Estimate(MK.dtS, "linf", 0.0, r, d, -n / 2.0)
    if lemma_id == "SLap_linf_1pt":
        r, d = joint(n / 2.0, s + 2)
        return _Estimate(MK.SLap, "linf", 0.0, r, d, -n / 2.0)
    one = lambda t: np.ones_like(t)  # noqa: E731
    if lemma_id == "dtS_hs":
        return _Estimate(MK.dtS, "hs", s, one, hs(s), None, DTS_SUP)
    if lemma_id == "dt2S_hs":
        return _Estimate(MK.dt2S, "hs", s - 1, one, hs(s), None)
    if lemma_id == "SLap_hs":
        return _Estimate(MK.SLap, "hs", s, one, hs(s + 1), None)
    if lemma_id == "dtSLap_hs":
        return _Estimate(MK.dtSLap, "hs", s - 1, one, hs(s + 1), None)
    if lemma_id == "lambda_hs":
        e = 1.0 - pt.theta
        return _Estimate(MK.LambdaTheta, "hs", s, lambda t: t ** e, hs(s), e)
    if lemma_id == "dtlambda_hs":
        return _Estimate(MK.dtLambdaTheta, "hs", s - 1, one, hs(s - 1), None, DTS_SUP)
    dual = lambda g: lp_norm(g, pc)  # noqa: E731
    if lemma_id == "lambda_hsp":
        e = 1.0 - pt.theta - disp
        return _Estimate(MK.LambdaTheta, "hsp", sig, lambda t: t ** e, dual, e)
    if lemma_id == "dtlambda_hsp":
        return _Estimate(MK.dtLambdaTheta, "hsp", sig - 1, lambda t: t ** -disp, dual, -disp)
    if lemma_id in ("lin_hsp", "lin_hsp_lap"):
        if pt.k not in (1, 2):
            raise ValueError(f"k must be 1 or 2, got {pt.k}")
        if lemma_id == "lin_hsp":
            kind = MK.dtS if pt.k == 1 else MK.dt2S
            return _Estimate(kind, "hsp", sig - pt.k, lambda t: t ** -disp, dual, -disp)
        kind = MK.SLap if pt.k == 1 else MK.dtSLap
        return _Estimate(kind, "hsp", sig - pt.k + 1, lambda t: t ** -disp,
                         lambda g: bessel_norm(g, 2.0, pc), -disp)
    raise ValueError(f"unknown lemma id {lemma_id!r}")


def norm_series(kind, g: Field, times, theta: float = 1.0, norm: str = "linf", index: float = 0.0,
                p: float = 2.0, chunk_bytes: float = 2e8) -> np.ndarray:
    """||kind(t) g|| at every time, evaluated in chunks to bound memory."""
    grid = g.grid
    h = grid.rfft(g.values)
    q = grid.xi_sq_r
    times = np.asarray(times, dtype=float)
    per = max(int(chunk_bytes // (16 * q.size)), 1)
    out = np.empty(times.size)
    for i in range(0, times.size, per):
        tt = times[i:i + per]
        coeffs = multiplier_table(kind, q, tt, theta) * h
        if norm == "linf":
            out[i:i + per] = linf_from_values(grid.irfft(coeffs), grid.n)
        elif norm == "hs":
            out[i:i + per] = sobolev_from_half(coeffs, grid, index)
        elif norm == "hsp":
            out[i:i + per] = bessel_from_half(coeffs, grid, index, p)
        else:
            raise ValueError(f"unknown norm {norm!r}")
    return out


def check_linear_lemma(lemma_id: str, g: Field, pt: LemmaPoint = LemmaPoint(), t_grid=None,
                       window: tuple[float, float] | None = None, tol: float = 0.1,
                       rtol: float = 0.1) -> LemmaReport:
    """Evaluate one linear estimate along ``t_grid`` for the data ``g``.

    Parameter points outside the estimate's hypothesis set are rejected with
    the violated inequality named.
    """
    n = g.grid.n
    lemma_hypotheses(lemma_id, n=n, s=pt.s, theta=pt.theta, sigma=pt.sigma, p=pt.p).require(lemma_id)
    est = _estimate(lemma_id, n, pt)
    t = np.geomspace(1.0, 500.0, 120) if t_grid is None else np.asarray(t_grid, dtype=float)
    t = t[t > 0]
    lhs = norm_series(est.kind, g, t, pt.theta, est.norm, est.index, pt.p)
    rates = est.rate(t)
    if isinstance(rates, tuple):
        rhs = sum(r * dn(g) for r, dn in zip(rates, est.data))
    else:
        rhs = rates * est.data(g)
    if est.explicit is not None:
        rhs = est.explicit * rhs
    c_full, c_half, stable = stable_constant(t, lhs / rhs, rtol)

    fit = None
    if est.exponent is not None:
        win = window or (20.0, float(t.max()) / 2.0)
        if np.count_nonzero((t >= win[0]) & (t <= win[1])) >= 10:
            fit = fit_decay(t, lhs, est.exponent, win, tol)
    params = {"n": n, **asdict(pt)}
    rep = LemmaReport(lemma_id, params, t, lhs, rhs, est.explicit is not None, c_full, stable, fit)
    rep.details["c_emp_first_half"] = c_half
    return rep
