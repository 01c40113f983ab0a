"""Oracles and quantitative checks of the decay and nonlinear estimates."""
from __future__ import annotations

from .fits import DecayFit, LemmaReport, fit_decay, stable_constant
from .integrals import check_gamma_lemma, check_time_convolution
from .linear import LemmaPoint, check_linear_lemma, norm_series
from .nonlinear import bandlimited_pairs, check_nonlinear_estimate
from .oracles import IntegratorFailure, NumericalInstability, mode_ode_oracle, mol_oracle
from .testfunctions import bump, gaussian, make_test_function, random_bandlimited

__all__ = [
    "DecayFit", "LemmaReport", "fit_decay", "stable_constant",
    "check_gamma_lemma", "check_time_convolution",
    "LemmaPoint", "check_linear_lemma", "norm_series",
    "bandlimited_pairs", "check_nonlinear_estimate",
    "IntegratorFailure", "NumericalInstability", "mode_ode_oracle", "mol_oracle",
    "bump", "gaussian", "make_test_function", "random_bandlimited",
]
