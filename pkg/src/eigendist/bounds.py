"""Explicit bounds for distinguishing eigenforms.

Exact integer/rational quantities (the Gamma_0(N) index, the Sturm bound,
Murty's bound and the combined bound with its small-prime level
adjustments) live next to the GRH-conditional prime-in-progression
thresholds.

Every threshold involving a logarithm is evaluated in 40-digit decimal
arithmetic and rounded toward +infinity, so it is a guaranteed upper bound
on the real number it names.  Callers that scan "below the threshold" can
only ever scan too much, never too little.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from decimal import ROUND_CEILING, ROUND_FLOOR, ROUND_HALF_EVEN, Context, Decimal
from fractions import Fraction
from typing import Optional, Tuple

from .arith import euler_phi, factorize, integer_nth_root, is_prime
from .primroots import gstar, sequence_until

__all__ = [
    "TableCase",
    "BoundBreakdown",
    "gamma0_index",
    "sturm_bound",
    "sturm_floor",
    "murty_bound",
    "least_prime_not_dividing",
    "table_case",
    "main_bound",
    "bs_bound",
    "bs_refined_bound",
    "dist_lower_bound",
    "lemma_ap_threshold",
    "lemma_ap_floor",
    "cor_upper_bound",
    "nphi_lower",
    "worstcase_thresholds",
    "theoretical_r",
    "ceil_decimal",
]

PRECISION = 40
_UP = Context(prec=PRECISION, rounding=ROUND_CEILING)
_NEAREST = Context(prec=PRECISION, rounding=ROUND_HALF_EVEN)

BS_CONSTANT = Decimal("2")
BS_REFINED_CONSTANT = Decimal("1.56")
LEMMA_AP_CONSTANT = Decimal("6.24")
THEORETICAL_CONSTANT = Decimal("29.2032")
WORSTCASE_I_CONSTANT = Decimal("467.2512")


# ---------------------------------------------------------------------------
# Directed-rounding helpers
# ---------------------------------------------------------------------------

def _ln_up(n: int) -> Decimal:
    # Decimal.ln is correctly rounded to nearest; one ulp up makes it an upper bound.
    return _UP.next_plus(Decimal(n).ln(_NEAREST))


def _mul_up(*factors) -> Decimal:
    acc = Decimal(1)
    for f in factors:
        acc = _UP.multiply(acc, Decimal(f) if not isinstance(f, Decimal) else f)
    return acc


def _pow_up(base: Decimal, e: int) -> Decimal:
    # repeated multiplication; each step rounds up and all operands are positive
    return _mul_up(*([base] * e))


def ceil_decimal(x: Decimal) -> int:
    """Smallest integer ``>= x``."""
    return int(x.to_integral_value(rounding=ROUND_CEILING))


# ---------------------------------------------------------------------------
# Sturm / Murty / combined bound
# ---------------------------------------------------------------------------

def gamma0_index(N: int) -> int:
    """``[SL_2(Z) : Gamma_0(N)] = N * prod_{l | N} (1 + 1/l)``."""
    if N < 1:
        raise ValueError(f"level must be >= 1, got {N}")
    result = N
    for ell, _ in factorize(N):
        result = result // ell * (ell + 1)
    return result


def sturm_bound(k: int, N: int) -> Fraction:
    """Exact ``k * [SL_2(Z) : Gamma_0(N)] / 12``."""
    if k < 1:
        raise ValueError(f"weight must be >= 1, got {k}")
    return Fraction(k * gamma0_index(N), 12)


def sturm_floor(k: int, N: int) -> int:
    """Largest integer ``n`` with ``n <= sturm_bound(k, N)``."""
    return math.floor(sturm_bound(k, N))


def least_prime_not_dividing(N: int) -> int:
    if N < 1:
        raise ValueError(f"level must be >= 1, got {N}")
    ell = 2
    while N % ell == 0:
        ell += 1
        while not is_prime(ell):
            ell += 1
    return ell


def murty_bound(N: int) -> int:
    """``l**2`` for the least prime ``l`` not dividing ``N``."""
    return least_prime_not_dividing(N) ** 2


class TableCase(enum.Enum):
    P_GE_5 = "P_GE_5"
    P3_POWER_OF_3 = "P3_POWER_OF_3"
    P3_OTHER = "P3_OTHER"
    P2_DIV_5_7_11 = "P2_DIV_5_7_11"
    P2_OTHER = "P2_OTHER"


_LEVEL_MULTIPLIER = {
    TableCase.P_GE_5: 1,
    TableCase.P3_POWER_OF_3: 2,
    TableCase.P3_OTHER: 1,
    TableCase.P2_DIV_5_7_11: 1,
    TableCase.P2_OTHER: 5,
}


def _is_power_of(n: int, base: int) -> bool:
    while n % base == 0:
        n //= base
    return n == 1


def table_case(p: int, N: int) -> TableCase:
    """Which level adjustment applies to the prime ``p`` and level ``N``.

    For ``p >= 5`` the level is unchanged.  For ``p = 3`` a level that is a
    power of 3 (including ``N = 1``) is doubled; for ``p = 2`` a level prime
    to 5, 7 and 11 is multiplied by 5.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if N < 1:
        raise ValueError(f"level must be >= 1, got {N}")
    if p >= 5:
        return TableCase.P_GE_5
    if p == 3:
        return TableCase.P3_POWER_OF_3 if _is_power_of(N, 3) else TableCase.P3_OTHER
    if any(N % q == 0 for q in (5, 7, 11)):
        return TableCase.P2_DIV_5_7_11
    return TableCase.P2_OTHER


@dataclass(frozen=True)
class BoundBreakdown:
    p: int
    level: int
    weight: int
    adjusted_level: int
    table_case: TableCase
    gstar_value: int
    gstar_term: int
    sturm_term: Fraction
    selected: Fraction

    @property
    def selected_floor(self) -> int:
        return math.floor(self.selected)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "level": self.level,
            "weight": self.weight,
            "adjusted_level": self.adjusted_level,
            "table_case": self.table_case.value,
            "gstar_value": self.gstar_value,
            "gstar_term": self.gstar_term,
            "sturm_term": str(self.sturm_term),
            "selected": str(self.selected),
            "selected_floor": self.selected_floor,
        }


def main_bound(p: int, N: int, k2: int) -> BoundBreakdown:
    """Coefficient bound for telling apart two eigenforms of level ``N`` mod ``p``.

    ``k2`` is the larger of the two weights.  The result is the maximum of
    ``gstar(p, N)**2`` and the Sturm bound at weight ``k2`` for the level
    adjusted according to ``table_case``.
    """
    case = table_case(p, N)
    adjusted = N * _LEVEL_MULTIPLIER[case]
    g = gstar(p, N)
    gterm = g * g
    sterm = sturm_bound(k2, adjusted)
    return BoundBreakdown(
        p=p,
        level=N,
        weight=k2,
        adjusted_level=adjusted,
        table_case=case,
        gstar_value=g,
        gstar_term=gterm,
        sturm_term=sterm,
        selected=max(Fraction(gterm), sterm),
    )


# ---------------------------------------------------------------------------
# GRH-conditional explicit bounds (all rounded upward)
# ---------------------------------------------------------------------------

def _q_log_q_squared_up(q: int) -> Decimal:
    return _pow_up(_mul_up(q, _ln_up(q)), 2)


def bs_bound(q: int) -> Decimal:
    """Upper estimate of ``2 (q log q)**2``."""
    if q < 2:
        raise ValueError(f"bs_bound needs q >= 2, got {q}")
    return _mul_up(BS_CONSTANT, _q_log_q_squared_up(q))


def bs_refined_bound(q: int) -> Decimal:
    """Upper estimate of ``1.56 (q log q)**2`` (valid for ``q > 2``)."""
    if q <= 2:
        raise ValueError(f"bs_refined_bound needs q > 2, got {q}")
    return _mul_up(BS_REFINED_CONSTANT, _q_log_q_squared_up(q))


def _dist_threshold(q: int, t: int) -> Decimal:
    log_sq = _pow_up(_ln_up(q), 2)
    return _mul_up(BS_REFINED_CONSTANT, t * t, q ** (2 * t), log_sq)


def dist_lower_bound(q: int, t: int) -> Tuple[Decimal, int]:
    """``(x, c)`` such that ``pi_{a,q}(x) >= c`` for every ``a`` prime to ``q`` (under GRH)."""
    if q <= 2:
        raise ValueError(f"dist_lower_bound needs q > 2, got {q}")
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    return _dist_threshold(q, t), q ** (t - 1)


def lemma_ap_threshold(q: int) -> Decimal:
    if q < 5:
        raise ValueError(f"lemma_ap needs q >= 5, got {q}")
    return _mul_up(LEMMA_AP_CONSTANT, q ** 4, _pow_up(_ln_up(q), 2))


def lemma_ap_floor(q: int, x) -> Optional[int]:
    """``floor(x**(1/9))`` once ``x`` passes the threshold, else None.

    Past ``6.24 q**4 (log q)**2`` every progression mod ``q`` holds more
    than ``x**(1/9)`` primes up to ``x`` (under GRH).
    """
    threshold = lemma_ap_threshold(q)
    xd = Decimal(x) if not isinstance(x, Decimal) else x
    if xd < threshold:
        return None
    return integer_nth_root(int(xd.to_integral_value(rounding=ROUND_FLOOR)), 9)


def cor_upper_bound(p: int, t: int) -> Tuple[int, Decimal]:
    """``(i, b)`` with ``x_i <= b`` for ``i = phi(p-1) p**(t-1)`` (under GRH)."""
    if p <= 2:
        raise ValueError(f"cor_upper_bound needs p > 2, got {p}")
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    return euler_phi(p - 1) * p ** (t - 1), _dist_threshold(p, t)


def nphi_lower(p: int) -> int:
    """Exact ``(p + 1)**(phi(p - 1) / 2)``."""
    if p < 5:
        raise ValueError(f"nphi_lower needs p >= 5, got {p}")
    return (p + 1) ** (euler_phi(p - 1) // 2)


def worstcase_thresholds(p: int) -> Tuple[Decimal, Decimal]:
    """Upper estimates of ``29.2032 p^4 (log p)^4`` and ``467.2512 p^8 (log p)^4``."""
    if p < 5:
        raise ValueError(f"worstcase_thresholds needs p >= 5, got {p}")
    log4 = _pow_up(_ln_up(p), 4)
    return (_mul_up(THEORETICAL_CONSTANT, p ** 4, log4),
            _mul_up(WORSTCASE_I_CONSTANT, p ** 8, log4))


def theoretical_r(p: int) -> int:
    """Minimal ``r`` with ``N_{r-1} >= 29.2032 p^4 (log p)^4``."""
    if p < 5:
        raise ValueError(f"theoretical_r needs p >= 5, got {p}")
    ceiling = ceil_decimal(worstcase_thresholds(p)[0])
    seq = sequence_until(p, ceiling)
    # the sequence stops at the first t with N_t >= ceiling, so r - 1 = len(seq)
    return len(seq) + 1
