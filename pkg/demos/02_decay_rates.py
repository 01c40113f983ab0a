"""Measured decay exponents of the linear propagators.

||dtS(t) g||_inf decays like t^(-n/2) and ||Lambda_theta(t) g||_inf like
t^(-(n + 2(theta - 1))/2).  The box must be large enough that the spreading
profile does not wrap around within the horizon.
"""
from __future__ import annotations

import numpy as np

from dampedplate import make_grid
from dampedplate.symbols import MultiplierKind
from dampedplate.verify import fit_decay, gaussian, norm_series

t = np.geomspace(20.0, 500.0, 60)
g = make_grid(1, 4096, 200.0)
for kind, theta, expected in ((MultiplierKind.dtS, 1.0, -0.5), (MultiplierKind.LambdaTheta, 1.0, -0.5)):
    vals = norm_series(kind, gaussian(g), t, theta, "linf")
    fit = fit_decay(t, vals, expected, (20.0, 500.0))
    print(f"n=1 {kind.value:12s} slope {fit.slope:+.4f} (expected {expected}), R^2 {fit.r2:.5f}")

g2 = make_grid(2, 512, 100.0)
for theta in (0.5, 1.0):
    expected = -(2 + 2 * (theta - 1)) / 2
    vals = norm_series(MultiplierKind.LambdaTheta, gaussian(g2), t[t <= 200], theta, "linf")
    fit = fit_decay(t[t <= 200], vals, expected, (20.0, 200.0))
    print(f"n=2 LambdaTheta theta={theta}: slope {fit.slope:+.4f} (expected {expected})")
