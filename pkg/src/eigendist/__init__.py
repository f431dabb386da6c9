"""Bounds for distinguishing eigenforms modulo a prime.

Submodules: ``arith`` (number theory kernel), ``primroots`` (prime
primitive roots), ``bounds`` (Sturm, Murty and GRH-conditional bounds),
``nhat`` (exact comparison thresholds), ``modforms`` (q-expansions and the
distinguisher) and ``experiments`` (numerical tables).
"""
from .arith import factorize, is_prime
from .bounds import BoundBreakdown, gamma0_index, main_bound, murty_bound, sturm_bound
from .modforms import QExpansion, distinguish_exact, distinguish_mod_p, load_qexpansion
from .nhat import NhatReport, brute_nhat, compute_nhat, nhat_range
from .primroots import WorstCaseSequence, gstar, worst_case_sequence

__version__ = "0.1.0"

__all__ = [
    "factorize",
    "is_prime",
    "BoundBreakdown",
    "gamma0_index",
    "main_bound",
    "murty_bound",
    "sturm_bound",
    "QExpansion",
    "distinguish_exact",
    "distinguish_mod_p",
    "load_qexpansion",
    "NhatReport",
    "brute_nhat",
    "compute_nhat",
    "nhat_range",
    "WorstCaseSequence",
    "gstar",
    "worst_case_sequence",
]
