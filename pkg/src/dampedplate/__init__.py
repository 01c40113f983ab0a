"""Fourier-multiplier solver for the damped plate equation with rotational inertia.

    u_tt - Lap u_tt + Lap^2 u - Lap u_t = delta (-Lap)^theta |u|^lambda

on a periodic box, together with numerical checks of its decay estimates.
"""
from __future__ import annotations

from .grid import Field, GridMismatchError, SpectralGrid, Spectrum, forward, inverse, make_grid
from .hypotheses import HypothesisViolation, global_hs, global_hsp, local_hsp
from .mild import (
    DivergenceWarning,
    MildSolution,
    PicardConfig,
    PicardResult,
    TimeGrid,
    march,
    picard,
    residual,
)
from .nonlinear import AdmissibilityWarning, NonlinearityParams, power_nonlinearity
from .norms import NormParams, bessel_norm, lp_norm, sobolev_norm
from .propagator import LinearState, apply, linear_solution
from .symbols import MultiplierKind, multiplier

__all__ = [
    "Field", "GridMismatchError", "SpectralGrid", "Spectrum", "forward", "inverse", "make_grid",
    "HypothesisViolation", "global_hs", "global_hsp", "local_hsp",
    "DivergenceWarning", "MildSolution", "PicardConfig", "PicardResult", "TimeGrid",
    "march", "picard", "residual",
    "AdmissibilityWarning", "NonlinearityParams", "power_nonlinearity",
    "NormParams", "bessel_norm", "lp_norm", "sobolev_norm",
    "LinearState", "apply", "linear_solution",
    "MultiplierKind", "multiplier",
]
