from __future__ import annotations

import numpy as np
import pytest

from dampedplate.grid import Field, forward, make_grid
from dampedplate.nonlinear import (
    AdmissibilityWarning,
    NonlinearityParams,
    bessel_inverse,
    frac_laplacian,
    power_nonlinearity,
    power_values,
    two_thirds_mask,
)
from dampedplate.propagator import laplacian
from dampedplate.verify import random_bandlimited


@pytest.fixture
def g():
    return make_grid(1, 64, np.pi)


@pytest.mark.parametrize("mode", ["none", "two_thirds", "zero_pad"])
def test_trivial_powers(g, mode):
    assert np.all(power_nonlinearity(Field.zeros(g), 3, mode).values == 0)
    out = power_nonlinearity(Field(g, np.full(g.shape, -2.0)), 3, mode)
    assert np.allclose(out.values, 8.0, atol=1e-12)


@pytest.mark.parametrize("mode", ["none", "two_thirds", "zero_pad"])
def test_square_of_cosine(g, mode):
    u = Field(g, np.cos(4 * g.x))
    out = power_nonlinearity(u, 2, mode)
    assert np.allclose(out.values, (1 + np.cos(8 * g.x)) / 2, atol=1e-12)


def test_two_thirds_truncates(g):
    u = Field(g, np.cos(15 * g.x))
    c = forward(power_nonlinearity(u, 2, "two_thirds")).coeffs
    assert np.allclose(np.abs(c[np.abs(g.mode_index) > g.N // 3]), 0)
    assert two_thirds_mask(g).shape == g.xi_sq_r.shape


def test_zero_pad_product_exact(g):
    # product of two band-limited fields, spectrum within 3N/2 padding: exact
    a = random_bandlimited(g, 1, modes=12)
    b = random_bandlimited(g, 2, modes=12)
    s = Field(g, a.values + b.values)
    d = Field(g, a.values - b.values)
    prod = (power_nonlinearity(s, 2, "zero_pad").values - power_nonlinearity(d, 2, "zero_pad").values) / 4
    exact = a.values * b.values
    # a*b has modes up to 24 < N/2 = 32, so restriction is lossless
    assert np.max(np.abs(prod - exact)) <= 1e-12


def test_batch_power_values(g):
    a = random_bandlimited(g, 1).values
    b = random_bandlimited(g, 2).values
    for mode in ("none", "two_thirds", "zero_pad"):
        batch = power_values(np.stack([a, b]), g, 3, mode)
        assert np.allclose(batch[0], power_values(a, g, 3, mode), atol=1e-15)
        assert np.allclose(batch[1], power_values(b, g, 3, mode), atol=1e-15)


def test_2d_zero_pad_matches_none_for_low_modes():
    g2 = make_grid(2, 32, np.pi)
    X, Y = g2.coords()
    u = np.cos(2 * X) * np.sin(3 * Y)
    a = power_values(u, g2, 2, "zero_pad")
    b = power_values(u, g2, 2, "none")
    assert np.allclose(a, b, atol=1e-12)


def test_overflow_names_location(g):
    v = np.zeros(g.shape)
    v[5] = 1e200
    with pytest.raises(FloatingPointError, match="index"):
        power_nonlinearity(Field(g, v), 3)


def test_frac_laplacian_and_bessel(g):
    u = Field(g, np.cos(3 * g.x))
    assert np.allclose(frac_laplacian(u, 0).values, u.values, atol=1e-14)
    assert np.allclose(frac_laplacian(u, 0.5).values, 3 * u.values, atol=1e-12)
    assert np.allclose(frac_laplacian(u, 1).values, -laplacian(u).values, atol=1e-12)
    c = Field(g, np.full(g.shape, 1.5))
    assert np.allclose(bessel_inverse(c).values, 1.5)


def test_params():
    with pytest.raises(ValueError):
        NonlinearityParams(lam=1.5)
    with pytest.raises(ValueError):
        NonlinearityParams(theta=1.2)
    with pytest.raises(ValueError):
        NonlinearityParams(dealias="bogus")
    with pytest.warns(AdmissibilityWarning):
        NonlinearityParams(theta=0.5).check_dimension(1)
    assert NonlinearityParams().delta == -1.0
