from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dampedplate.grid import (
    Field,
    GridMismatchError,
    Spectrum,
    WrapAroundWarning,
    check_wraparound,
    forward,
    inverse,
    make_grid,
)


def test_unit_half_period_wavenumbers():
    g = make_grid(1, 8, np.pi)
    assert np.allclose(np.sort(g.k), np.arange(-4, 4))
    assert np.count_nonzero(g.xi_sq == 0) == 1


def test_nyquist_max_2d(frozen):
    g = make_grid(2, 16, 10)
    assert g.xi_sq.max() == pytest.approx(frozen["max_xi_sq_2_16_10"], rel=1e-14)
    assert g.xi_sq.max() == pytest.approx(12.633, abs=1e-3)
    assert np.count_nonzero(g.xi_sq == 0) == 1
    assert g.k[0] == 0 or 0.0 in g.k


@pytest.mark.parametrize("args", [(1, 7, 1.0), (3, 8, 1.0), (1, 8, 0.0), (1, 8, -2.0), (1, 6, 1.0)])
def test_make_grid_rejects(args):
    with pytest.raises(ValueError):
        make_grid(*args)


def test_xi_sq_read_only():
    g = make_grid(1, 16, 3.0)
    with pytest.raises(ValueError):
        g.xi_sq[0] = 1.0


def test_zero_and_constant_fields():
    g = make_grid(1, 16, 2.0)
    assert np.all(forward(Field.zeros(g)).coeffs == 0)
    c = forward(Field(g, np.full(g.shape, 3.0))).coeffs
    nz = np.flatnonzero(np.abs(c) > 1e-12 * np.abs(c).max())
    assert len(nz) == 1 and g.xi_sq.ravel()[nz[0]] == 0


def test_pure_harmonic_two_modes():
    g = make_grid(1, 32, 5.0)
    k1 = np.pi / g.L
    c = forward(Field(g, np.cos(k1 * g.x))).coeffs
    big = np.abs(c) > 1e-12 * np.abs(c).max()
    assert sorted(g.mode_index[big]) == [-1, 1]
    assert abs(c[big][0]) == pytest.approx(abs(c[big][1]), rel=1e-12)


def _random_field(n, N, seed):
    g = make_grid(n, N, 7.0)
    return Field(g, np.random.default_rng(seed).standard_normal(g.shape))


@given(st.sampled_from([(1, 8), (1, 64), (2, 16), (2, 32)]), st.integers(0, 2 ** 32 - 1))
def test_round_trip(shape, seed):
    f = _random_field(*shape, seed)
    back = inverse(forward(f))
    assert np.linalg.norm(back.values - f.values) / np.linalg.norm(f.values) <= 1e-12


@given(st.sampled_from([(1, 8), (1, 64), (2, 16)]), st.integers(0, 2 ** 32 - 1))
def test_hermitian_and_parseval(shape, seed):
    f = _random_field(*shape, seed)
    s = forward(f)
    assert s.hermitian_defect() <= 1e-12
    assert s.l2() == pytest.approx(f.l2(), rel=1e-10)


def test_hundred_round_trips():
    worst = max(np.linalg.norm(inverse(forward(f)).values - f.values) / np.linalg.norm(f.values)
                for f in (_random_field(1, 128, s) for s in range(100)))
    assert worst <= 1e-12


def test_rfft_layout_matches_full_layout():
    f = _random_field(2, 16, 3)
    g = f.grid
    full = forward(f).coeffs
    half = g.rfft(f.values)
    # column 0 of the half layout is the zero frequency on the last axis
    assert np.allclose(half[:, 0], full[:, 0])
    assert np.allclose(g.irfft(half), f.values, atol=1e-13)


def test_grid_mismatch():
    a = Field.zeros(make_grid(1, 8, 1.0))
    b = Field.zeros(make_grid(1, 16, 1.0))
    with pytest.raises(GridMismatchError):
        a + b
    with pytest.raises(ValueError):
        Spectrum(make_grid(1, 16, 1.0), forward(a).coeffs)


def test_field_rejects_non_finite():
    g = make_grid(1, 8, 1.0)
    v = np.zeros(8)
    v[2] = np.nan
    with pytest.raises(ValueError):
        Field(g, v)


def test_imaginary_residue_detected():
    g = make_grid(1, 16, 1.0)
    c = forward(Field(g, np.cos(np.pi * g.x))).coeffs.copy()
    c[3] += 1j
    with pytest.raises(ValueError):
        inverse(Spectrum(g, c))


def test_wraparound_warning():
    g = make_grid(1, 64, 5.0)
    narrow = Field(g, np.exp(-g.x ** 2))
    wide = Field(g, np.exp(-g.x ** 2 / 20.0))
    assert check_wraparound(narrow) < 1e-8
    with pytest.warns(WrapAroundWarning):
        check_wraparound(wide)
