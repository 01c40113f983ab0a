"""The two scalar integral inequalities behind the decay proofs.

The Gaussian ball integral is compared with its Gamma-function bound; the
time convolution of two power weights is compared with its factorized form
and the empirical constant is checked for stability as the horizon grows.
"""
from __future__ import annotations

from dampedplate.verify import check_gamma_lemma, check_time_convolution

for n in (1, 2):
    for a in (0.0, 1.0, -n + 0.1):
        rep = check_gamma_lemma(a, n)
        print(f"gamma lemma n={n} a={a:+.1f}: ratios {', '.join(f'{r:.4f}' for r in rep.ratio)}")

for a, b in ((1, 1), (1, 2), (0.5, 1), (0, 1)):
    rep = check_time_convolution(a, b)
    print(f"time convolution (a, b) = ({a}, {b}): C_emp {rep.c_emp:.4f}, "
          f"first half {rep.details['c_emp_first_half']:.4f}, stable {rep.stable}")
