"""Power nonlinearity |u|^lambda and the spectral operators wrapped around it."""
from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .grid import Field, SpectralGrid, Spectrum, forward, inverse
from .symbols import frac_power

DEALIAS_MODES = ("none", "two_thirds", "zero_pad")


class AdmissibilityWarning(UserWarning):
    pass


@dataclass(frozen=True)
class NonlinearityParams:
    """Coefficients of the forcing ``delta (-Lap)^theta |u|^lambda``.

    ``delta`` defaults to -1 so that the mild solution carries the minus sign
    in front of the Duhamel integral.
    """

    lam: float = 3.0
    theta: float = 1.0
    delta: float = -1.0
    dealias: str = "two_thirds"

    def __post_init__(self):
        if self.lam < 2:
            raise ValueError(f"lambda must be >= 2, got {self.lam}")
        if not 0.0 <= self.theta <= 1.0:
            raise ValueError(f"theta must lie in [0, 1], got {self.theta}")
        if self.dealias not in DEALIAS_MODES:
            raise ValueError(f"dealias must be one of {DEALIAS_MODES}, got {self.dealias!r}")

    def check_dimension(self, n: int) -> None:
        """Warn when theta <= (2 - n)/2 in dimensions 1 and 2."""
        if n in (1, 2) and not self.theta > (2 - n) / 2:
            warnings.warn(
                f"theta = {self.theta} violates theta > (2 - n)/2 = {(2 - n) / 2} for n = {n}",
                AdmissibilityWarning,
                stacklevel=2,
            )


def _power(values: np.ndarray, lam: float) -> np.ndarray:
    with np.errstate(over="ignore", invalid="ignore"):
        out = np.abs(values) ** lam
    if not np.all(np.isfinite(out)):
        loc = np.unravel_index(np.argmax(np.abs(values)), values.shape)
        raise FloatingPointError(
            f"|u|^{lam} overflowed; max |u| = {np.max(np.abs(values)):.3e} at index {loc}"
        )
    return out


def two_thirds_mask(grid: SpectralGrid, half: bool = True) -> np.ndarray:
    """True on modes kept by the 2/3 rule, |j| <= N/3 along every axis."""
    keep = np.abs(grid.mode_index) <= grid.N // 3
    axes = [keep] * grid.n
    if half:
        axes[-1] = keep[: grid.N // 2 + 1]
    return np.logical_and.reduce(np.meshgrid(*axes, indexing="ij"))


def _pad_half(coeffs: np.ndarray, N: int, M: int, n: int) -> np.ndarray:
    """Zero-pad raw rfftn coefficients from N to M points per axis (Nyquist dropped)."""
    h = N // 2
    batch = coeffs.shape[: coeffs.ndim - n]
    if n == 1:
        out = np.zeros(batch + (M // 2 + 1,), dtype=complex)
        out[..., :h] = coeffs[..., :h]
        return out
    out = np.zeros(batch + (M, M // 2 + 1), dtype=complex)
    out[..., :h, :h] = coeffs[..., :h, :h]
    out[..., M - h + 1:, :h] = coeffs[..., h + 1:, :h]
    return out


def _truncate_half(coeffs: np.ndarray, N: int, M: int, n: int) -> np.ndarray:
    h = N // 2
    batch = coeffs.shape[: coeffs.ndim - n]
    if n == 1:
        out = np.zeros(batch + (h + 1,), dtype=complex)
        out[..., :h] = coeffs[..., :h]
        return out
    out = np.zeros(batch + (N, h + 1), dtype=complex)
    out[..., :h, :h] = coeffs[..., :h, :h]
    out[..., h + 1:, :h] = coeffs[..., M - h + 1:, :h]
    return out


def power_values(u: np.ndarray, grid: SpectralGrid, lam: float, dealias: str = "two_thirds") -> np.ndarray:
    """Half spectrum (continuum normalized) of |u|^lam for real ``u`` values.

    Leading axes of ``u`` beyond the grid dimensions are treated as a batch.
    """
    if dealias == "zero_pad":
        N = grid.N
        M = 3 * N // 2
        axes = tuple(range(-grid.n, 0))
        raw = np.fft.rfftn(u, axes=axes)
        fine = np.fft.irfftn(_pad_half(raw, N, M, grid.n), s=(M,) * grid.n, axes=axes)
        fine *= (M / N) ** grid.n
        praw = np.fft.rfftn(_power(fine, lam), axes=axes) * (N / M) ** grid.n
        return _truncate_half(praw, N, M, grid.n) * (grid.forward_scale * grid._phase_r)
    coeffs = grid.rfft(_power(u, lam))
    if dealias == "two_thirds":
        coeffs = coeffs * two_thirds_mask(grid)
    elif dealias != "none":
        raise ValueError(f"unknown dealias mode {dealias!r}")
    return coeffs


def power_nonlinearity(u: Field, lam: float, dealias: str = "two_thirds") -> Field:
    """Pointwise |u|^lam, optionally dealiased."""
    g = u.grid
    return Field(g, g.irfft(power_values(u.values, g, lam, dealias)))


def frac_laplacian(u: Field, theta: float) -> Field:
    """(-Lap)^theta as the multiplier |xi|^(2 theta)."""
    s = forward(u)
    return inverse(Spectrum(u.grid, s.coeffs * frac_power(u.grid.xi_sq, theta)))


def bessel_inverse(u: Field) -> Field:
    """(I - Lap)^(-1) as the multiplier 1 / (1 + |xi|^2)."""
    s = forward(u)
    return inverse(Spectrum(u.grid, s.coeffs / (1.0 + u.grid.xi_sq)))
