"""Admissibility predicates for the existence theorems and decay lemmas.

Each predicate returns an :class:`Admissibility` whose ``violations`` name
every inequality that fails, written out in plain text.  Comparisons carry a
1e-12 slack so that boundary cases evaluated in binary floating point land on
the side a hand computation would put them.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

EPS = 1e-12


class HypothesisViolation(ValueError):
    """A parameter point outside a lemma's or theorem's hypothesis set."""


@dataclass(frozen=True)
class Admissibility:
    ok: bool
    violations: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok

    def require(self, what: str = "parameters") -> None:
        if not self.ok:
            raise HypothesisViolation(f"{what} violate: " + "; ".join(self.violations))


class _Checker:
    def __init__(self):
        self.violations: list[str] = []

    def lt(self, lhs: float, rhs: float, text: str) -> None:
        if not lhs < rhs - EPS:
            self.violations.append(f"{text} ({lhs:.6g} vs {rhs:.6g})")

    def le(self, lhs: float, rhs: float, text: str) -> None:
        if not lhs <= rhs + EPS:
            self.violations.append(f"{text} ({lhs:.6g} vs {rhs:.6g})")

    def result(self) -> Admissibility:
        return Admissibility(not self.violations, tuple(self.violations))


def _inv(p: float) -> float:
    return 0.0 if np.isinf(p) else 1.0 / p


def _theta(c: _Checker, n: int, theta: float) -> None:
    if n in (1, 2):
        c.lt((2 - n) / 2, theta, "(2-n)/2 < theta")
    else:
        c.le(0.0, theta, "0 <= theta")
    c.le(theta, 1.0, "theta <= 1")


def dispersion(n: int, p: float) -> float:
    return 0.5 * n * (1.0 - 2.0 * _inv(p))


def theta_admissible(n: int, theta: float) -> Admissibility:
    """theta in ((2-n)/2, 1] for n = 1, 2 and in [0, 1] for n >= 3."""
    c = _Checker()
    _theta(c, n, theta)
    return c.result()


def global_hs(n: int, s: float, lam: float, theta: float = 1.0) -> Admissibility:
    """Small-data global existence in H^s."""
    c = _Checker()
    c.le(3.0, lam, "lambda >= 3")
    if theta != 1.0:
        c.violations.append(f"theta = 1 (got {theta:.6g})")
    c.lt((n - 2) / 2, s, "s > (n-2)/2")
    c.lt(2.0, n * (lam - 2), "n(lambda-2) > 2")
    return c.result()


def _bessel_common(c: _Checker, n: int, s: float, sigma: float, p: float, q: float,
                   lam: float, theta: float) -> None:
    c.le(2.0, lam, "lambda >= 2")
    _theta(c, n, theta)
    c.le(2.0, p, "2 <= p")
    c.le(p, q, "p <= q")
    c.lt(sigma, s, "s > sigma")
    c.le(n * (_inv(p) - _inv(q)), sigma, "n(1/p - 1/q) <= sigma")
    c.lt(sigma, 3 - n - 2 * theta, "sigma < 3 - n - 2 theta")
    lower = (lam * _inv(q) + _inv(p) - 1.0) * n / (lam - 1.0) + sigma
    upper = min(n * _inv(q), lam - 1.0) + sigma
    c.le(lower, s, "(lambda/q + 1/p - 1) n/(lambda-1) + sigma <= s")
    c.lt(s, upper, "s < min(n/q, lambda-1) + sigma")


def alpha(n: int, p: float, lam: float, theta: float) -> float:
    return (2.0 - theta - dispersion(n, p)) / (lam - 1.0)


def global_hsp(n: int, s: float, sigma: float, p: float, q: float, lam: float,
               theta: float) -> Admissibility:
    """Small-data global existence in H^s_p."""
    c = _Checker()
    _bessel_common(c, n, s, sigma, p, q, lam, theta)
    a = alpha(n, p, lam, theta)
    c.lt(0.0, a, "alpha > 0")
    c.lt(a, 1.0 / lam, "alpha < 1/lambda")
    c.lt(dispersion(n, p), 1.0, "(n/2)(1-2/p) < 1")
    return c.result()


def local_hsp(n: int, s: float, sigma: float, p: float, q: float, lam: float,
              theta: float) -> Admissibility:
    """Local existence in H^s_p."""
    c = _Checker()
    _bessel_common(c, n, s, sigma, p, q, lam, theta)
    c.lt(dispersion(n, p) * lam, 1.0, "(n/2)(1-2/p) lambda < 1")
    return c.result()


THEOREMS = {"global_hs": global_hs, "global_hsp": global_hsp, "local_hsp": local_hsp}


# --- lemma hypothesis sets --------------------------------------------------

def _lambda_linf(n, theta, s, **_):
    c = _Checker()
    _theta(c, n, theta)
    c.lt((n + 4 * theta - 6) / 2, s, "s > (n + 4 theta - 6)/2")
    return c


def _data_linf(n, s, **_):
    c = _Checker()
    c.lt((n - 2) / 2, s, "s > (n-2)/2")
    return c


def _none(**_):
    return _Checker()


def _theta_only(n, theta, **_):
    c = _Checker()
    _theta(c, n, theta)
    return c


def _lambda_hsp(n, theta, sigma, p, **_):
    c = _Checker()
    _theta(c, n, theta)
    c.lt(sigma, 3 - n - 2 * theta, "sigma < 3 - n - 2 theta")
    c.le(2.0, p, "2 <= p")
    return c


def _dtlambda_hsp(n, theta, sigma, p, **_):
    c = _Checker()
    c.le(0.0, theta, "0 <= theta")
    c.le(theta, 1.0, "theta <= 1")
    c.lt(sigma, 3 - n - 2 * theta, "sigma < 3 - n - 2 theta")
    c.le(2.0, p, "2 <= p")
    return c


def _lin_hsp(n, sigma, p, **_):
    c = _Checker()
    c.lt(sigma, 1 - n, "sigma < 1 - n")
    c.le(2.0, p, "2 <= p")
    return c


LEMMA_HYPOTHESES = {
    "lambda_linf": _lambda_linf,
    "lambda_linf_1pt": _lambda_linf,
    "dtS_linf": _data_linf,
    "SLap_linf": _data_linf,
    "dtS_linf_1pt": _data_linf,
    "SLap_linf_1pt": _data_linf,
    "dtS_hs": _none,
    "dt2S_hs": _none,
    "SLap_hs": _none,
    "dtSLap_hs": _none,
    "lambda_hsp": _lambda_hsp,
    "dtlambda_hsp": _dtlambda_hsp,
    "lambda_hs": _theta_only,
    "dtlambda_hs": _none,
    "lin_hsp": _lin_hsp,
    "lin_hsp_lap": _lin_hsp,
}


def lemma_hypotheses(lemma_id: str, *, n: int, s: float = 1.0, theta: float = 1.0,
                     sigma: float = 0.0, p: float = 2.0) -> Admissibility:
    try:
        check = LEMMA_HYPOTHESES[lemma_id]
    except KeyError:
        raise ValueError(f"unknown lemma id {lemma_id!r}; known: {sorted(LEMMA_HYPOTHESES)}") from None
    return check(n=n, s=s, theta=theta, sigma=sigma, p=p).result()


def nonlinear_difference(n: int, s: float, p: float, q: float, lam: float) -> Admissibility:
    """Hypotheses of the H^s_{p'} difference estimate for |f|^lambda - |g|^lambda."""
    c = _Checker()
    c.le(2.0, lam, "lambda >= 2")
    c.lt(1.0, p, "1 < p")
    c.lt(p, np.inf, "p < inf")
    c.lt(1.0, q, "1 < q")
    c.lt(q, np.inf, "q < inf")
    c.lt(0.0, s, "s > 0")
    c.lt(s, n * _inv(q), "s < n/q")
    odd = float(lam).is_integer() and int(lam) % 2 == 1
    if not odd:
        c.lt(s, lam - 1.0, "s < lambda - 1")
    c.le(_inv(q) + (lam - 1.0) / n * (n * _inv(q) - s), 1.0 - _inv(p),
         "1 - 1/p >= 1/q + ((lambda-1)/n)(n/q - s)")
    return c.result()
