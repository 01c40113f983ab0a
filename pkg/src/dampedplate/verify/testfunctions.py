"""Representative data for the lemma checks.

The random band-limited field draws its coefficients on a fixed set of
physical wavenumbers, so the same seed gives the same function on every grid
that resolves those wavenumbers.
"""
from __future__ import annotations

import itertools

import numpy as np

from ..grid import Field, SpectralGrid

BATTERY = ("gaussian", "bump", "random_bandlimited")


def gaussian(grid: SpectralGrid, width: float = 1.0, amplitude: float = 1.0) -> Field:
    """amplitude * exp(-|x|^2 / (2 width^2))."""
    return Field(grid, amplitude * np.exp(-grid.radius_sq() / (2.0 * width * width)))


def bump(grid: SpectralGrid, radius: float = 2.0, amplitude: float = 1.0) -> Field:
    """Smooth compactly supported bump exp(1 - 1/(1 - |x|^2/radius^2)) with peak ``amplitude``."""
    r2 = grid.radius_sq() / (radius * radius)
    inside = r2 < 1.0
    vals = np.zeros(grid.shape)
    vals[inside] = amplitude * np.exp(1.0 - 1.0 / (1.0 - r2[inside]))
    return Field(grid, vals)


def random_bandlimited(grid: SpectralGrid, seed: int, modes: int = 6, amplitude: float = 1.0) -> Field:
    """Random trigonometric polynomial over mode indices |j| <= ``modes`` per axis.

    Coefficients are drawn in a fixed order that does not depend on N.
    """
    if modes >= grid.N // 3:
        raise ValueError(f"{modes} modes are not resolved on a grid with N = {grid.N}")
    rng = np.random.default_rng(seed)
    coords = grid.coords()
    vals = np.zeros(grid.shape)
    k0 = np.pi / grid.L
    for j in itertools.product(range(-modes, modes + 1), repeat=grid.n):
        phase = sum(ji * k0 * xi for ji, xi in zip(j, coords))
        c, d = rng.standard_normal(2)
        vals += c * np.cos(phase) + d * np.sin(phase)
    vals *= amplitude / np.max(np.abs(vals))
    return Field(grid, vals)


def make_test_function(name: str, grid: SpectralGrid, seed: int = 0, **kw) -> Field:
    if name == "gaussian":
        return gaussian(grid, **kw)
    if name == "bump":
        return bump(grid, **kw)
    if name == "random_bandlimited":
        return random_bandlimited(grid, seed, **kw)
    raise ValueError(f"unknown test function {name!r}; choose from {BATTERY}")
