"""Log-log decay regression and the report records shared by all checks."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field

import numpy as np
from scipy.stats import linregress

MIN_SAMPLES = 10
MIN_R2 = 0.99
TRUNCATION_DIAGNOSTIC = "domain-truncation suspected"
# quadrature round-off allowance when a ratio is compared against 1
RATIO_SLACK = 1e-10


@dataclass(frozen=True)
class DecayFit:
    t_lo: float
    t_hi: float
    slope: float
    intercept: float
    r2: float
    expected: float
    tol: float
    n_samples: int
    degenerate: bool = False
    diagnostic: str = ""

    @property
    def window(self) -> tuple[float, float]:
        return (self.t_lo, self.t_hi)

    @property
    def slope_ok(self) -> bool:
        return not self.degenerate and abs(self.slope - self.expected) <= self.tol

    @property
    def passed(self) -> bool:
        return self.slope_ok and self.r2 >= MIN_R2

    def row(self) -> dict:
        out = asdict(self)
        out["passed"] = self.passed
        return out


def fit_decay(times, values, expected: float, window: tuple[float, float] = (20.0, np.inf),
              tol: float = 0.1) -> DecayFit:
    """Least-squares fit of log(values) against log(times) inside ``window``.

    A series with nonpositive or non-finite entries inside the window is
    flagged ``degenerate`` and cannot pass.
    """
    t_lo, t_hi = window
    if t_lo < 1:
        raise ValueError(f"fit window must start at t >= 1, got {t_lo}")
    t = np.asarray(times, dtype=float)
    v = np.asarray(values, dtype=float)
    if t.shape != v.shape:
        raise ValueError("times and values must have the same shape")
    mask = (t >= t_lo) & (t <= t_hi)
    m = int(mask.sum())
    if m < MIN_SAMPLES:
        raise ValueError(f"need at least {MIN_SAMPLES} samples in the window, got {m}")
    tw, vw = t[mask], v[mask]
    t_hi = float(tw.max()) if np.isinf(t_hi) else float(t_hi)
    if np.any(~np.isfinite(vw)) or np.any(vw <= 0):
        return DecayFit(float(t_lo), t_hi, np.nan, np.nan, 0.0, expected, tol, m, True,
                        "degenerate series (zero or non-finite values)")
    res = linregress(np.log(tw), np.log(vw))
    r2 = float(res.rvalue ** 2)
    diag = "" if r2 >= MIN_R2 else TRUNCATION_DIAGNOSTIC
    return DecayFit(float(t_lo), t_hi, float(res.slope), float(res.intercept), r2, expected, tol, m,
                    False, diag)


def stable_constant(times, ratios, rtol: float = 0.1) -> tuple[float, float, bool]:
    """Compare the running maximum of ``ratios`` on the full grid with the
    maximum over the first half (in log t) of the grid.

    Returns (C_emp over the full grid, C_emp over the first half, stable).
    """
    t = np.asarray(times, dtype=float)
    r = np.asarray(ratios, dtype=float)
    pos = t > 0
    t, r = t[pos], r[pos]
    mid = np.sqrt(t.min() * t.max())
    c_full = float(np.max(r))
    c_half = float(np.max(r[t <= mid]))
    stable = c_half > 0 and c_full <= (1.0 + rtol) * c_half
    return c_full, c_half, bool(stable)


@dataclass
class LemmaReport:
    """Outcome of one lemma check.

    ``explicit_constant`` marks checks whose right-hand side carries a
    constant taken from a proof or closed form; those pass when every ratio is
    at most 1.  The others pass when the empirical constant is stable.
    """

    lemma_id: str
    params: dict
    times: np.ndarray
    lhs: np.ndarray
    rhs: np.ndarray
    explicit_constant: bool
    c_emp: float
    stable: bool
    fit: DecayFit | None = None
    details: dict = field(default_factory=dict)

    @property
    def ratio(self) -> np.ndarray:
        with np.errstate(divide="ignore", invalid="ignore"):
            return np.where(self.rhs > 0, self.lhs / self.rhs, 0.0)

    @property
    def passed(self) -> bool:
        if self.explicit_constant:
            return bool(np.all(self.ratio <= 1.0 + RATIO_SLACK))
        return self.stable

    def rows(self) -> list[dict]:
        """One flat record per sample time, ready for CSV output."""
        base = {"lemma_id": self.lemma_id}
        base.update({k: v for k, v in self.params.items()})
        out = []
        for t, lhs, rhs, ratio in zip(self.times, self.lhs, self.rhs, self.ratio):
            row = dict(base)
            row.update(t=float(t), lhs=float(lhs), rhs=float(rhs), ratio=float(ratio),
                       c_emp=self.c_emp, passed=self.passed)
            out.append(row)
        return out
