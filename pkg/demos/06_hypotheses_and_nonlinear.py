"""Parameter admissibility and the power-nonlinearity estimates.

The existence theorems hold on explicit parameter sets; the predicates name
every violated inequality.  The nonlinear estimates are then sampled on
random band-limited pairs at two resolutions.
"""
from __future__ import annotations

import warnings

from dampedplate import global_hs, local_hsp
from dampedplate.verify import check_nonlinear_estimate

for args in ((1, 1.0, 3.0), (3, 1.0, 3.0), (2, 1.0, 3.0)):
    res = global_hs(*args)
    print(f"global H^s at (n, s, lambda) = {args}: {bool(res)} {list(res.violations)}")
print("local H^s_p at n=1, s=0.5, sigma=0.3, p=2, q=4, lambda=3, theta=0.6:",
      bool(local_hsp(1, 0.5, 0.3, 2, 4, 3, 0.6)))

for which in ("difference", "leibnitz", "leibnitz_l1"):
    rep = check_nonlinear_estimate(which, reps=30)
    print(f"{which:12s} C_emp {rep.c_emp:.4f} at N=128, {rep.details['c_emp_refined']:.4f} at N=256")

with warnings.catch_warnings(record=True) as caught:
    warnings.simplefilter("always")
    check_nonlinear_estimate("difference", reps=5, s=1.0, p=2.0, q=2.0, lam=2.0)
print("outside the hypotheses:", caught[0].message)
