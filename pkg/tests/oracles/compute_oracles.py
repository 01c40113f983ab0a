"""Regenerate frozen.json with arbitrary-precision reference values.

Nothing here imports the package.  Multipliers come from the complex
characteristic roots r0, r1 of (1 + q) r^2 + q r + q^2 = 0, not from the
real closed forms the package uses.

    python3 tests/oracles/compute_oracles.py
"""
from __future__ import annotations

import json
from pathlib import Path

import mpmath as mp

mp.mp.dps = 40


def roots(q):
    q = mp.mpf(q)
    disc = mp.sqrt(q * q - 4 * (1 + q) * q * q + 0j)
    return (-q + disc) / (2 * (1 + q)), (-q - disc) / (2 * (1 + q))


def multipliers(q, t):
    t = mp.mpf(t)
    r0, r1 = roots(q)
    e0, e1 = mp.exp(r0 * t), mp.exp(r1 * t)
    d = r0 - r1
    out = {
        "S": (e0 - e1) / d,
        "dtS": (r0 * e0 - r1 * e1) / d,
        "dt2S": (r0 ** 2 * e0 - r1 ** 2 * e1) / d,
        "P_ivp": (r0 * e1 - r1 * e0) / d,
        "dtP_ivp": r0 * r1 * (e1 - e0) / d,
    }
    return {k: float(mp.re(v)) for k, v in out.items()}


def gamma_ratio(a, n, t):
    # with u = r^2 the ball integral over the full-space value is the
    # regularized lower incomplete gamma P((n+a)/2, t/4); tanh-sinh quadrature
    # of the r^(a+n-1) endpoint singularity is not accurate enough for a near -n
    a, t = mp.mpf(a), mp.mpf(t)
    return float(mp.gammainc((n + a) / 2, 0, t / 4, regularized=True))


def conv_ratio(a, b, t):
    a, b, t = mp.mpf(a), mp.mpf(b), mp.mpf(t)
    lhs = mp.quad(lambda s: (1 + t - s) ** (-a) * (1 + s) ** (-b), [0, t])
    rhs = (1 + t) ** (-a) * mp.quad(lambda s: (1 + s) ** (-b), [0, t])
    return float(lhs / rhs)


def main():
    pts = [(0.0, 0.7), (1e-6, 3.0), (1e-3, 2.0), (0.25, 0.5), (1.0, 1.0), (4.0, 2.5), (100.0, 0.3), (2500.0, 1.7)]
    data = {
        "multipliers": [{"q": q, "t": t, **multipliers(q, t)} for q, t in pts if q > 0],
        "S_q1_t1": float(mp.exp(-mp.mpf(1) / 4) * mp.sin(mp.sqrt(7) / 4) / (mp.sqrt(7) / 4)),
        "max_xi_sq_2_16_10": float(2 * (mp.pi * 8 / 10) ** 2),
        "gaussian_l2": float((mp.pi / 2) ** mp.mpf(0.25)),
        "erf1": float(mp.erf(1)),
        "gamma_ratio": [{"a": a, "n": n, "t": t, "ratio": gamma_ratio(a, n, t)}
                        for n in (1, 2) for a in (0.0, 1.0, -n + 0.1) for t in (1.0, 4.0, 16.0, 64.0)],
        "conv_ratio": [{"a": a, "b": b, "t": t, "ratio": conv_ratio(a, b, t)}
                       for a, b in ((1, 1), (1, 2), (0.5, 1), (0, 1)) for t in (1.0, 10.0, 100.0)],
    }
    out = Path(__file__).with_name("frozen.json")
    out.write_text(json.dumps(data, indent=1) + "\n")


if __name__ == "__main__":
    main()
