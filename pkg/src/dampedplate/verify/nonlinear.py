"""Empirical constants of the power-nonlinearity estimates.

``difference``
    || |f|^lam - |g|^lam ||_{H^s_p'} against ||f - g||_{H^s_q} (||f||^(lam-1) + ||g||^(lam-1)).
``leibnitz``
    the H^s product bound with L^inf factors.
``leibnitz_l1``
    the L^1 companion bound with L^2 factors.

The constant is the maximum ratio over random pairs; it passes when the
estimate at N and at 2N agree within a factor of 2.
"""
from __future__ import annotations

import warnings
from collections.abc import Callable

import numpy as np

from ..grid import Field, SpectralGrid, make_grid
from ..hypotheses import nonlinear_difference
from ..nonlinear import AdmissibilityWarning
from ..norms import bessel_norm, conjugate, lp_norm, sobolev_norm
from .fits import LemmaReport
from .testfunctions import random_bandlimited

ESTIMATES = ("difference", "leibnitz", "leibnitz_l1")
Sampler = Callable[[SpectralGrid, np.random.Generator], tuple[Field, Field]]


def bandlimited_pairs(modes: int = 6, amplitude: float = 1.0) -> Sampler:
    """Sampler of independent random band-limited pairs (grid-independent for a fixed stream)."""
    def sample(grid, rng):
        a, b = rng.integers(0, 2 ** 63, size=2)
        return (random_bandlimited(grid, int(a), modes, amplitude),
                random_bandlimited(grid, int(b), modes, amplitude))
    return sample


def _power(f: Field, lam: float) -> Field:
    return Field(f.grid, np.abs(f.values) ** lam)


def _ratio(which: str, f: Field, g: Field, s: float, p: float, q: float, lam: float) -> tuple[float, float]:
    diff = f - g
    if which == "difference":
        lhs = bessel_norm(_power(f, lam) - _power(g, lam), s, conjugate(p))
        rhs = bessel_norm(diff, s, q) * (bessel_norm(f, s, q) ** (lam - 1) + bessel_norm(g, s, q) ** (lam - 1))
    elif which == "leibnitz":
        lhs = sobolev_norm(_power(f, lam) - _power(g, lam), s)
        sup = lp_norm(f, np.inf) + lp_norm(g, np.inf)
        rhs = (lp_norm(diff, np.inf) * (sobolev_norm(f, s) + sobolev_norm(g, s)) * sup ** (lam - 2)
               + sobolev_norm(diff, s) * sup ** (lam - 1))
    elif which == "leibnitz_l1":
        lhs = lp_norm(_power(f, lam) - _power(g, lam), 1)
        sup = lp_norm(f, np.inf) + lp_norm(g, np.inf)
        rhs = sup ** (lam - 2) * (lp_norm(f, 2) + lp_norm(g, 2)) * lp_norm(diff, 2)
    else:
        raise ValueError(f"which must be one of {ESTIMATES}, got {which!r}")
    return lhs, rhs


def _sweep(which, grid, sampler, reps, seed, s, p, q, lam):
    rng = np.random.default_rng(seed)
    lhs = np.empty(reps)
    rhs = np.empty(reps)
    for i in range(reps):
        f, g = sampler(grid, rng)
        lhs[i], rhs[i] = _ratio(which, f, g, s, p, q, lam)
    return lhs, rhs


def check_nonlinear_estimate(which: str, sampler: Sampler | None = None, reps: int = 100, *,
                             n: int = 1, N: int = 128, L: float = 10.0, s: float = 0.4,
                             p: float = 4.0, q: float = 2.0, lam: float = 3.0,
                             seed: int = 0) -> LemmaReport:
    """Maximum ratio over ``reps`` random pairs at N, then again at 2N."""
    if which not in ESTIMATES:
        raise ValueError(f"which must be one of {ESTIMATES}, got {which!r}")
    if which == "difference":
        adm = nonlinear_difference(n, s, p, q, lam)
        if not adm:
            warnings.warn("difference estimate evaluated outside its hypotheses: "
                          + "; ".join(adm.violations), AdmissibilityWarning, stacklevel=2)
    sampler = sampler or bandlimited_pairs()
    coarse = make_grid(n, N, L)
    fine = make_grid(n, 2 * N, L)
    lhs, rhs = _sweep(which, coarse, sampler, reps, seed, s, p, q, lam)
    lhs2, rhs2 = _sweep(which, fine, sampler, reps, seed, s, p, q, lam)
    with np.errstate(divide="ignore", invalid="ignore"):
        r1 = np.where(rhs > 0, lhs / rhs, 0.0)
        r2 = np.where(rhs2 > 0, lhs2 / rhs2, 0.0)
    c1, c2 = float(r1.max()), float(r2.max())
    stable = (c1 == 0 and c2 == 0) or (c1 > 0 and c2 > 0 and 0.5 <= c2 / c1 <= 2.0)
    params = {"n": n, "N": N, "L": L, "s": s, "p": p, "q": q, "lam": lam, "seed": seed}
    rep = LemmaReport(which, params, np.arange(reps, dtype=float), lhs, rhs, False, c1, stable)
    rep.details["c_emp_refined"] = c2
    return rep
