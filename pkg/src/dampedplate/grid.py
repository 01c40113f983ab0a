"""Periodic grids standing in for R^n, and continuum-normalized transforms.

The torus [-L, L)^n is sampled at N points per axis.  Spectral coefficients
approximate the unitary Fourier transform

    f_hat(k) = (2 pi)^(-n/2) * integral f(x) exp(-i k.x) dx,

so that grid L2 norms and coefficient l2 norms (weighted by dk^n) agree
without fudge factors.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import cached_property

import numpy as np


class GridMismatchError(ValueError):
    pass


class WrapAroundWarning(UserWarning):
    """Field amplitude near the torus boundary exceeds the monitor threshold."""


class SpectralGrid:
    """Uniform periodic grid on [-L, L)^n with n in {1, 2}.

    Wavenumbers along each axis are ``pi * j / L`` for
    ``j = -N/2, ..., N/2 - 1`` stored in numpy FFT order.
    """

    def __init__(self, n: int, N: int, L: float):
        if n not in (1, 2):
            raise ValueError(f"dimension n must be 1 or 2, got {n}")
        if int(N) != N or N % 2 or N < 8:
            raise ValueError(f"N must be an even integer >= 8, got {N}")
        if not L > 0:
            raise ValueError(f"half-period L must be positive, got {L}")
        self.n = int(n)
        self.N = int(N)
        self.L = float(L)
        self.dx = 2.0 * self.L / self.N
        self.dk = np.pi / self.L

    def __repr__(self):
        return f"SpectralGrid(n={self.n}, N={self.N}, L={self.L!r})"

    def __eq__(self, other):
        if not isinstance(other, SpectralGrid):
            return NotImplemented
        return (self.n, self.N, self.L) == (other.n, other.N, other.L)

    def __hash__(self):
        return hash((self.n, self.N, self.L))

    @property
    def shape(self) -> tuple[int, ...]:
        return (self.N,) * self.n

    @property
    def size(self) -> int:
        return self.N ** self.n

    @cached_property
    def x(self) -> np.ndarray:
        """1-D node coordinates ``-L + j dx``."""
        return -self.L + self.dx * np.arange(self.N)

    @cached_property
    def k(self) -> np.ndarray:
        """1-D wavenumbers in FFT order."""
        return 2.0 * np.pi * np.fft.fftfreq(self.N, d=self.dx)

    @cached_property
    def mode_index(self) -> np.ndarray:
        """Integer mode labels j in FFT order (k = pi j / L)."""
        return np.fft.fftfreq(self.N, d=1.0 / self.N).round().astype(int)

    def coords(self) -> tuple[np.ndarray, ...]:
        return tuple(np.meshgrid(*([self.x] * self.n), indexing="ij"))

    def radius_sq(self) -> np.ndarray:
        return sum(c * c for c in self.coords())

    @cached_property
    def xi_sq(self) -> np.ndarray:
        """|xi|^2 over the full tensor grid, FFT order."""
        ks = np.meshgrid(*([self.k] * self.n), indexing="ij")
        out = sum(kk * kk for kk in ks)
        out.setflags(write=False)
        return out

    @cached_property
    def xi_sq_r(self) -> np.ndarray:
        """|xi|^2 in the half-spectrum layout of ``numpy.fft.rfftn``."""
        axes = [self.k] * (self.n - 1) + [np.abs(self.k[: self.N // 2 + 1])]
        ks = np.meshgrid(*axes, indexing="ij")
        out = sum(kk * kk for kk in ks)
        out.setflags(write=False)
        return out

    @cached_property
    def _phase(self) -> np.ndarray:
        # exp(-i k x_0) with x_0 = -L reduces to (-1)^j per axis
        sign = np.where(self.mode_index % 2 == 0, 1.0, -1.0)
        grids = np.meshgrid(*([sign] * self.n), indexing="ij")
        return np.prod(grids, axis=0)

    @cached_property
    def _phase_r(self) -> np.ndarray:
        sign = np.where(self.mode_index % 2 == 0, 1.0, -1.0)
        axes = [sign] * (self.n - 1) + [sign[: self.N // 2 + 1]]
        grids = np.meshgrid(*axes, indexing="ij")
        return np.prod(grids, axis=0)

    @property
    def forward_scale(self) -> float:
        return self.dx ** self.n / (2.0 * np.pi) ** (self.n / 2)

    def rfft(self, values: np.ndarray) -> np.ndarray:
        """Continuum-normalized half spectrum of real data (last n axes)."""
        axes = tuple(range(-self.n, 0))
        return np.fft.rfftn(values, axes=axes) * (self.forward_scale * self._phase_r)

    def irfft(self, coeffs: np.ndarray) -> np.ndarray:
        axes = tuple(range(-self.n, 0))
        raw = coeffs * (self._phase_r / self.forward_scale)
        return np.fft.irfftn(raw, s=self.shape, axes=axes)

    def boundary_fraction(self, values: np.ndarray, band: float = 0.1) -> float:
        """Max |f| within ``band * L`` of the boundary, relative to max |f|."""
        peak = np.max(np.abs(values))
        if peak == 0:
            return 0.0
        edge = np.abs(self.x) >= (1.0 - band) * self.L
        masks = np.meshgrid(*([edge] * self.n), indexing="ij")
        mask = np.logical_or.reduce(masks)
        return float(np.max(np.abs(values[mask])) / peak)


def make_grid(n: int, N: int, L: float) -> SpectralGrid:
    return SpectralGrid(n, N, L)


@dataclass(frozen=True, eq=False)
class Field:
    """Real grid function."""

    grid: SpectralGrid
    values: np.ndarray

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=float)
        if vals.shape != self.grid.shape:
            raise ValueError(f"field shape {vals.shape} does not match grid {self.grid.shape}")
        if not np.all(np.isfinite(vals)):
            raise ValueError("field contains non-finite values")
        object.__setattr__(self, "values", vals)

    def _check(self, other: Field) -> None:
        if other.grid != self.grid:
            raise GridMismatchError(f"{self.grid} vs {other.grid}")

    def __add__(self, other: Field) -> Field:
        self._check(other)
        return Field(self.grid, self.values + other.values)

    def __sub__(self, other: Field) -> Field:
        self._check(other)
        return Field(self.grid, self.values - other.values)

    def __mul__(self, c: float) -> Field:
        return Field(self.grid, c * self.values)

    __rmul__ = __mul__

    def __neg__(self) -> Field:
        return Field(self.grid, -self.values)

    def l2(self) -> float:
        return float(np.sqrt(np.sum(self.values ** 2) * self.grid.dx ** self.grid.n))

    @classmethod
    def zeros(cls, grid: SpectralGrid) -> Field:
        return cls(grid, np.zeros(grid.shape))

    @classmethod
    def from_function(cls, grid: SpectralGrid, func) -> Field:
        return cls(grid, func(*grid.coords()))


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Continuum-normalized Fourier coefficients on the full FFT layout."""

    grid: SpectralGrid
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=complex)
        if c.shape != self.grid.shape:
            raise ValueError(f"spectrum shape {c.shape} does not match grid {self.grid.shape}")
        object.__setattr__(self, "coeffs", c)

    def l2(self) -> float:
        """Coefficient l2 norm with dk^n quadrature weights."""
        g = self.grid
        return float(np.sqrt(np.sum(np.abs(self.coeffs) ** 2) * g.dk ** g.n))

    def hermitian_defect(self) -> float:
        """max |c(-j) - conj(c(j))| relative to max |c|."""
        c = self.coeffs
        flipped = c
        for ax in range(c.ndim):
            flipped = np.roll(np.flip(flipped, axis=ax), 1, axis=ax)
        peak = np.max(np.abs(c))
        if peak == 0:
            return 0.0
        return float(np.max(np.abs(flipped - np.conj(c))) / peak)


def forward(f: Field) -> Spectrum:
    g = f.grid
    return Spectrum(g, np.fft.fftn(f.values) * (g.forward_scale * g._phase))


def inverse(s: Spectrum, check_real: bool = True) -> Field:
    """Inverse transform; the imaginary residue must be at roundoff level."""
    g = s.grid
    raw = np.fft.ifftn(s.coeffs * (g._phase / g.forward_scale))
    if check_real:
        _check_real(raw)
    return Field(g, raw.real)


def _check_real(raw: np.ndarray, rtol: float = 1e-12) -> None:
    amp = np.max(np.abs(raw.real)) if raw.size else 0.0
    resid = np.max(np.abs(raw.imag)) if raw.size else 0.0
    if resid > rtol * max(amp, np.finfo(float).tiny):
        raise ValueError(
            f"imaginary residue {resid:.3e} exceeds {rtol:g} of amplitude {amp:.3e}; "
            "spectrum is not Hermitian"
        )


def check_wraparound(f: Field | np.ndarray, grid: SpectralGrid | None = None,
                     threshold: float = 1e-8) -> float:
    """Warn when boundary-band amplitude exceeds ``threshold`` of the peak."""
    if isinstance(f, Field):
        grid, values = f.grid, f.values
    else:
        values = f
    frac = grid.boundary_fraction(values)
    if frac > threshold:
        warnings.warn(
            f"boundary-band amplitude {frac:.2e} of peak exceeds {threshold:g}; "
            f"increase L (currently {grid.L:g})",
            WrapAroundWarning,
            stacklevel=2,
        )
    return frac
