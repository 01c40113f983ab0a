"""The ten acceptance criteria, each at its stated tolerance and runtime budget."""
from __future__ import annotations

import time
import warnings

import numpy as np
import pytest

from dampedplate.cli import main
from dampedplate.grid import Field, make_grid
from dampedplate.hypotheses import global_hs, global_hsp, local_hsp
from dampedplate.mild import PicardConfig, TimeGrid, march, picard
from dampedplate.nonlinear import NonlinearityParams
from dampedplate.norms import sobolev_from_half
from dampedplate.propagator import apply, linear_solution
from dampedplate.symbols import MultiplierKind, multiplier_table
from dampedplate.verify import (
    check_gamma_lemma,
    check_time_convolution,
    fit_decay,
    gaussian,
    mode_ode_oracle,
    mol_oracle,
    norm_series,
    random_bandlimited,
)


def rel_l2(a: Field, b: Field) -> float:
    return (a - b).l2() / b.l2()


def test_1_linear_oracle(criterion):
    start = time.perf_counter()
    g = make_grid(1, 256, 40.0)
    u0, u1 = gaussian(g), gaussian(g, width=0.7, amplitude=0.5)
    times = [0.5, 1.0, 5.0]
    refs = mode_ode_oracle(u0, u1, times)
    worst = 0.0
    for t, ref in zip(times, refs):
        got = linear_solution(u0, u1, t, "ivp")
        worst = max(worst, rel_l2(got.u, ref.u), rel_l2(got.ut, ref.ut))
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-8 and elapsed < 10
    assert criterion(1, ok, f"max rel L2 error {worst:.2e} (<= 1e-8), {elapsed:.1f} s (< 10 s)")


def test_2_nonlinear_oracle(criterion):
    start = time.perf_counter()
    g = make_grid(1, 256, 40.0)
    u0, u1 = gaussian(g, amplitude=0.1), Field.zeros(g)
    p = NonlinearityParams(lam=3.0, theta=1.0, delta=-1.0)
    ref = mol_oracle(u0, u1, p, 1.0, 2.5e-4)
    ref_u = ref.state(len(ref) - 1).u
    same_dt = mol_oracle(u0, u1, p, 1.0, 1e-3)
    errs = {}
    for dt in (4e-3, 2e-3, 1e-3):
        sol = march(u0, u1, p, TimeGrid.until(1.0, dt))
        errs[dt] = rel_l2(sol.state(len(sol) - 1).u, ref_u)
    direct = rel_l2(march(u0, u1, p, TimeGrid.until(1.0, 1e-3)).state(1000).u, same_dt.state(1000).u)
    r1, r2 = errs[4e-3] / errs[2e-3], errs[2e-3] / errs[1e-3]
    elapsed = time.perf_counter() - start
    ok = direct <= 1e-4 and errs[1e-3] <= 1e-4 and 3.5 <= r1 <= 4.5 and 3.5 <= r2 <= 4.5 and elapsed < 120
    assert criterion(2, ok, f"march vs MoL rel L2 {direct:.2e} (<= 1e-4); error ratios {r1:.2f}, {r2:.2f} "
                            f"(3.5-4.5); {elapsed:.1f} s (< 120 s)")


def _linf_slope(n, N, L, kind, theta=1.0):
    g = make_grid(n, N, L)
    t = np.geomspace(20.0, 500.0, 60)
    vals = norm_series(kind, gaussian(g), t, theta, "linf")
    return fit_decay(t, vals, expected=np.nan, window=(20.0, 500.0))


def test_3_dts_decay(criterion):
    start = time.perf_counter()
    f1 = _linf_slope(1, 4096, 200.0, MultiplierKind.dtS)
    f2 = _linf_slope(2, 1024, 100.0, MultiplierKind.dtS)
    elapsed = time.perf_counter() - start
    ok = (abs(f1.slope + 0.5) <= 0.1 and abs(f2.slope + 1.0) <= 0.1
          and min(f1.r2, f2.r2) >= 0.99 and elapsed < 180)
    assert criterion(3, ok, f"slopes {f1.slope:.4f} (n=1, -0.5), {f2.slope:.4f} (n=2, -1.0); "
                            f"R2 {f1.r2:.5f}, {f2.r2:.5f}; {elapsed:.1f} s (< 180 s)")


def test_4_lambda_decay(criterion):
    start = time.perf_counter()
    cases = [(2, 0.5, 1024, 100.0), (2, 1.0, 1024, 100.0), (1, 1.0, 4096, 200.0)]
    parts, ok = [], True
    for n, theta, N, L in cases:
        fit = _linf_slope(n, N, L, MultiplierKind.LambdaTheta, theta)
        expected = -(n + 2 * (theta - 1)) / 2
        ok &= abs(fit.slope - expected) <= 0.1 and fit.r2 >= 0.99
        parts.append(f"(n={n}, theta={theta}) {fit.slope:.4f} vs {expected}")
    elapsed = time.perf_counter() - start
    ok &= elapsed < 180
    assert criterion(4, bool(ok), "; ".join(parts) + f"; {elapsed:.1f} s (< 180 s)")


def test_5_hs_boundedness(criterion):
    g = make_grid(1, 128, 20.0)
    t = np.linspace(0.0, 100.0, 1001)
    s = 1.0
    table = multiplier_table(MultiplierKind.dtS, g.xi_sq_r, t)
    worst = 0.0
    for seed in range(20):
        h = g.rfft(random_bandlimited(g, seed).values)
        ratio = sobolev_from_half(table * h, g, s) / sobolev_from_half(h, g, s)
        worst = max(worst, float(ratio.max()))
    assert criterion(5, worst <= 1.16, f"sup ratio {worst:.4f} over 20 fields (<= 1.16)")


def test_6_gamma_lemma(criterion, frozen):
    worst = 0.0
    for n in (1, 2):
        for a in (0.0, 1.0, -n + 0.1):
            rep = check_gamma_lemma(a, n, (1.0, 4.0, 16.0, 64.0))
            worst = max(worst, float(rep.ratio.max()))
    spot = float(check_gamma_lemma(0.0, 1, (4.0,)).ratio[0])
    ok = worst <= 1.0 and abs(spot - 0.8427) <= 1e-3 and abs(spot - frozen["erf1"]) <= 1e-3
    assert criterion(6, ok, f"max ratio {worst:.6f} (<= 1); spot {spot:.6f} vs erf(1) {frozen['erf1']:.6f}")


def test_7_time_convolution(criterion):
    parts, ok = [], True
    for a, b in ((1, 1), (1, 2), (0.5, 1)):
        rep = check_time_convolution(a, b, np.geomspace(1.0, 100.0, 41), rtol=0.1)
        ok &= rep.stable
        parts.append(f"({a},{b}) C {rep.c_emp:.4f} vs first half {rep.details['c_emp_first_half']:.4f}")
    assert criterion(7, bool(ok), "; ".join(parts))


def test_8_contraction(criterion):
    start = time.perf_counter()
    g = make_grid(1, 1024, 160.0)
    tg = TimeGrid(0.02, 5000, samples_per_decade=64)
    params = NonlinearityParams(lam=3.0, theta=1.0, delta=-1.0)
    cfg = PicardConfig(max_iters=20, tol=1e-8)
    amplitude, res = 0.5, None
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        while amplitude >= 0.5 / 64:
            res = picard(gaussian(g, amplitude=amplitude), Field.zeros(g), params, tg, cfg)
            if res.converged and np.all(res.ratios < 1):
                break
            amplitude /= 2
    sol = res.solution
    idx = tg.record_indices
    t = tg.times[idx]
    linf = np.max(np.abs(g.irfft(sol.u_hat[idx])), axis=-1)
    weighted = (1 + t) ** 0.5 * linf
    # flat series: only the slope is meaningful, R^2 is not
    fit = fit_decay(1 + t, weighted, expected=0.0, window=(11.0, 101.0))
    elapsed = time.perf_counter() - start
    ok = (res.converged and res.iterations <= 20 and bool(np.all(res.ratios < 1))
          and fit.slope <= 0.1 and elapsed < 300)
    assert criterion(8, ok, f"amplitude {amplitude}; {res.iterations} iterations; max ratio "
                            f"{res.ratios.max():.3f}; weighted sup slope {fit.slope:.4f} (<= 0.1); "
                            f"{elapsed:.1f} s (< 300 s)")


# (predicate, args, hand-evaluated truth)
THEOREM_CASES = [
    (global_hs, (1, 1.0, 3.0, 1.0), False),   # n(lam-2) = 1
    (global_hs, (1, 1.0, 4.0, 1.0), False),   # 1 * 2 = 2, strict
    (global_hs, (1, 1.0, 4.1, 1.0), True),    # 2.1 > 2, s > -1/2
    (global_hs, (2, 1.0, 3.0, 1.0), False),   # 2 * 1 = 2, strict
    (global_hs, (2, 1.0, 3.1, 1.0), True),
    (global_hs, (2, 0.0, 4.0, 1.0), False),   # s > 0 strict
    (global_hs, (3, 1.0, 3.0, 1.0), True),    # 3 > 2, s > 1/2
    (global_hs, (3, 0.5, 3.0, 1.0), False),
    (global_hs, (3, 1.0, 2.9, 1.0), False),   # lam >= 3
    (global_hs, (3, 1.0, 3.0, 0.9), False),   # theta = 1
    (global_hs, (4, 1.01, 3.0, 1.0), True),   # s > 1
    (global_hs, (4, 1.0, 3.0, 1.0), False),
    (global_hsp, (1, 0.12, 0.1, 20, 20, 4, 0.9), True),   # alpha = 0.65/3 < 1/4
    (global_hsp, (1, 0.15, 0.1, 20, 20, 4, 0.9), False),  # s < 1/20 + 0.1 strict
    (global_hsp, (1, 0.12, 0.1, 20, 20, 3, 0.9), True),   # alpha = 0.65/2 = 0.325 < 1/3
    (global_hsp, (1, 0.5, 0.3, 2, 4, 3, 0.6), False),     # alpha = 0.7 > 1/3
    (global_hsp, (1, 0.12, 0.1, 20, 20, 4, 1.0), False),  # sigma < 3 - 1 - 2 = 0
    (local_hsp, (1, 0.5, 0.3, 2, 4, 3, 0.6), True),       # s in [0.425, 0.55), dispersion 0
    (local_hsp, (1, 0.425, 0.3, 2, 4, 3, 0.6), True),     # closed lower edge
    (local_hsp, (1, 0.55, 0.3, 2, 4, 3, 0.6), False),     # open upper edge
    (local_hsp, (1, 0.5, 0.2, 2, 4, 3, 0.6), False),      # sigma >= n(1/2 - 1/4)
    (local_hsp, (1, 0.12, 0.1, 20, 20, 4, 0.9), False),   # dispersion * lam = 1.8
    (local_hsp, (1, 0.5, 0.3, 2, 4, 3, 0.5), False),      # theta > 1/2 strict for n = 1
    (local_hsp, (1, 0.5, 0.3, 4, 2, 3, 0.6), False),      # p <= q
]


def test_9_hypothesis_predicates(criterion):
    agree = sum(bool(pred(*args)) is truth for pred, args, truth in THEOREM_CASES)
    total = len(THEOREM_CASES)
    ok = total >= 20 and agree == total
    assert criterion(9, ok, f"{agree}/{total} boundary cases agree with hand evaluation")


def test_10_determinism(criterion, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("grid.n = 1\ngrid.N = 128\ngrid.L = 20\ntime.dt = 0.01\ntime.T = 1\n"
                   "data.u0 = random_bandlimited\ndata.u0_amplitude = 0.3\n")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        codes = [main(["simulate", "--config", str(cfg), "--out", str(tmp_path / d), "--seed", "7"])
                 for d in ("a", "b")]
    names = sorted(p.name for p in (tmp_path / "a").glob("*.csv"))
    same = bool(names) and all((tmp_path / "a" / n).read_bytes() == (tmp_path / "b" / n).read_bytes()
                               for n in names)
    ok = codes == [0, 0] and same
    assert criterion(10, ok, f"{len(names)} CSV files byte-identical across two seeded runs: {same}")
