"""Numerical companions to the asymptotic statements.

The tables compare observed quantities against their conjectured or
proved limits; the limits themselves cannot be checked numerically, only
the trend toward them.  Logarithms use a private 40-digit mpmath context,
and ``log N_t`` is the sum of ``log x_i`` rather than the log of a huge
product.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import List, Sequence, Tuple

import mpmath

from .arith import euler_phi, is_prime, prime_sieve
from .bounds import gamma0_index
from .primroots import prime_primitive_roots

__all__ = [
    "RatioRow",
    "RatioTable",
    "asymp_xt_table",
    "asymp_gstar_table",
    "index_ratio_table",
    "index_ratio_constant",
    "primorial",
    "induction_check",
    "n10_x44_check",
]

_DPS = 40
CSV_DIGITS = 12


def _ctx() -> mpmath.MPContext:
    ctx = mpmath.MPContext()
    ctx.dps = _DPS
    return ctx


def _dec(ctx, x) -> Decimal:
    return Decimal(ctx.nstr(x, _DPS, strip_zeros=False, min_fixed=-ctx.inf, max_fixed=ctx.inf))


@dataclass(frozen=True)
class RatioRow:
    index: int
    observed: Decimal
    reference: Decimal
    ratio: Decimal

    @property
    def deviation(self) -> Decimal:
        """``|ratio - 1|``."""
        return abs(self.ratio - 1)


@dataclass(frozen=True)
class RatioTable:
    label: str
    rows: Tuple[RatioRow, ...]

    def row(self, index: int) -> RatioRow:
        for r in self.rows:
            if r.index == index:
                return r
        raise KeyError(index)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "observed", "reference", "ratio"])
        for r in self.rows:
            w.writerow([r.index] + [format(v, f".{CSV_DIGITS}g")
                                    for v in (r.observed, r.reference, r.ratio)])
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "rows": [{"index": r.index,
                      "observed": format(r.observed, f".{CSV_DIGITS}g"),
                      "reference": format(r.reference, f".{CSV_DIGITS}g"),
                      "ratio": format(r.ratio, f".{CSV_DIGITS}g")} for r in self.rows],
        }


def _make_row(ctx, index: int, observed, reference) -> RatioRow:
    return RatioRow(index, _dec(ctx, observed), _dec(ctx, reference),
                    _dec(ctx, observed / reference))


def _density_constant(p: int) -> Fraction:
    if p < 5 or not is_prime(p):
        raise ValueError(f"need a prime p >= 5, got {p}")
    return Fraction(p - 1, euler_phi(p - 1))


def asymp_xt_table(p: int, tmax: int) -> RatioTable:
    """Rows ``(t, x_t, c t log t, ratio)`` for ``t = 2..tmax``, ``c = (p-1)/phi(p-1)``."""
    c = _density_constant(p)
    if tmax < 2:
        raise ValueError("tmax must be >= 2")
    ctx = _ctx()
    cm = ctx.mpf(c.numerator) / c.denominator
    xs = prime_primitive_roots(p, tmax)
    rows = [_make_row(ctx, t, ctx.mpf(xs[t - 1]), cm * t * ctx.log(t))
            for t in range(2, tmax + 1)]
    return RatioTable(f"x_t / (c t log t), p={p}", tuple(rows))


def asymp_gstar_table(p: int, tmax: int) -> RatioTable:
    """Rows ``(t, x_{t+1} / log N_t, c, ratio)`` along the worst-case sequence."""
    c = _density_constant(p)
    if tmax < 1:
        raise ValueError("tmax must be >= 1")
    ctx = _ctx()
    cm = ctx.mpf(c.numerator) / c.denominator
    xs = prime_primitive_roots(p, tmax + 1)
    rows = []
    log_N = ctx.mpf(0)
    for t in range(1, tmax + 1):
        log_N += ctx.log(xs[t - 1])
        rows.append(_make_row(ctx, t, xs[t] / log_N, cm))
    return RatioTable(f"gstar(p, N_t) / log N_t, p={p}", tuple(rows))


def index_ratio_constant(ctx=None):
    """``6 e^gamma / pi^2``."""
    ctx = ctx or _ctx()
    return 6 * ctx.exp(ctx.euler) / ctx.pi ** 2


def primorial(k: int) -> int:
    """Product of the first ``k`` primes."""
    out = 1
    found = 0
    for q in prime_sieve(max(16, int(2 * k * (mpmath.log(k + 2) + 2)))).tolist():
        if found == k:
            break
        out *= q
        found += 1
    return out


def index_ratio_table(count: int) -> RatioTable:
    """Rows ``(k, index(P_k) / (P_k log log P_k), 6e^gamma/pi^2, ratio)`` for primorials ``P_k``."""
    if count < 2:
        raise ValueError("count must be >= 2")
    ctx = _ctx()
    ref = index_ratio_constant(ctx)
    rows = []
    for k in range(2, count + 1):
        N = primorial(k)
        observed = ctx.mpf(gamma0_index(N)) / (ctx.mpf(N) * ctx.log(ctx.log(N)))
        rows.append(_make_row(ctx, k, observed, ref))
    return RatioTable("index / (N log log N) over primorials", tuple(rows))


def induction_check(rmin: int, rmax: int) -> bool:
    """``primorial(r - 1) >= 12 (r/2)**18`` for every ``r`` in ``[rmin, rmax]``."""
    if rmin <= 44:
        raise ValueError("the induction is claimed only for r > 44")
    # scale by 2**18 to stay in integers
    return all(primorial(r - 1) * 2 ** 18 >= 12 * r ** 18 for r in range(rmin, rmax + 1))


def n10_x44_check(p: int) -> bool:
    """``N_10 > 12 x_44**2`` for ``p`` in {5, 7}."""
    if p not in (5, 7):
        raise ValueError(f"only p = 5 and p = 7 are covered, got {p}")
    xs = prime_primitive_roots(p, 44)
    N10 = 1
    for x in xs[:10]:
        N10 *= x
    return N10 > 12 * xs[43] ** 2
