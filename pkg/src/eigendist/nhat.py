"""Exact threshold beyond which the prime-root term never dominates.

For ``p >= 5`` the comparison

    12 * gstar(p, N)**2 <= [SL_2(Z) : Gamma_0(N)]

holds for all sufficiently large ``N``; ``compute_nhat`` finds the least
``nhat`` such that it holds for every ``N >= nhat``.

A failing ``N >= 12 x_t**2`` must be a multiple of ``N_t`` (its ``gstar``
exceeds ``x_t``, so ``x_1 ... x_t`` all divide it).  Together with the
GRH-conditional ceiling ``N_{r-1}`` this leaves only a handful of
candidates per ``t``.  ``brute_nhat`` is an independent linear scan used to
cross-check the pruned search.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .arith import is_prime, prime_sieve
from .bounds import ceil_decimal, gamma0_index, theoretical_r, worstcase_thresholds
from .primroots import WorstCaseSequence, gstar, sequence_until

__all__ = [
    "NhatReport",
    "comp_holds",
    "gamma0_index_table",
    "comp_failures",
    "nhat_candidates",
    "compute_nhat",
    "brute_nhat",
    "brute_failures",
    "nhat_range",
]

_CHUNK = 1 << 20


@dataclass(frozen=True)
class NhatReport:
    p: int
    nhat: int
    largest_failing_N: int
    candidates_tested: int
    ceiling_used: int

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "nhat": self.nhat,
            "largest_failing_N": self.largest_failing_N,
            "candidates_tested": self.candidates_tested,
            "ceiling_used": self.ceiling_used,
        }


def _check_p(p: int) -> None:
    if p < 5 or not is_prime(p):
        raise ValueError(f"the threshold is defined for primes p >= 5, got {p}")


def comp_holds(p: int, N: int) -> bool:
    """True iff ``12 gstar(p, N)**2 <= [SL_2(Z) : Gamma_0(N)]``."""
    _check_p(p)
    if N < 1:
        raise ValueError(f"level must be >= 1, got {N}")
    return 12 * gstar(p, N) ** 2 <= gamma0_index(N)


# ---------------------------------------------------------------------------
# Vectorised kernels
# ---------------------------------------------------------------------------

def gamma0_index_table(lo: int, hi: int) -> np.ndarray:
    """``[SL_2(Z) : Gamma_0(N)]`` for ``N`` in ``[lo, hi)`` via a multiplicative sieve.

    ``lo >= 1``.  Values are int64, so ``hi`` must stay well below 2**62.
    """
    if lo < 1 or hi < lo:
        raise ValueError(f"bad range [{lo}, {hi})")
    n = np.arange(lo, hi, dtype=np.int64)
    index = n.copy()
    rest = n.copy()
    for ell in prime_sieve(math.isqrt(max(hi - 1, 1))).tolist():
        first = -(-lo // ell) * ell
        if first >= hi:
            continue
        sl = slice(first - lo, None, ell)
        index[sl] = index[sl] // ell * (ell + 1)
        block = rest[sl]
        while True:
            mask = block % ell == 0
            if not mask.any():
                break
            block[mask] //= ell
        rest[sl] = block
    # whatever is left above 1 is a single prime factor larger than sqrt(hi)
    big = rest > 1
    index[big] = index[big] // rest[big] * (rest[big] + 1)
    return index


def _gstar_array(ns: np.ndarray, xs: Sequence[int]) -> np.ndarray:
    g = np.zeros(ns.shape, dtype=np.int64)
    pending = np.ones(ns.shape, dtype=bool)
    for x in xs:
        hit = pending & (ns % x != 0)
        g[hit] = x
        pending &= ~hit
        if not pending.any():
            return g
    raise ValueError("worst-case sequence too short to resolve gstar for every level")


def comp_failures(ns: np.ndarray, xs: Sequence[int], index: np.ndarray) -> np.ndarray:
    """The entries of ``ns`` (with matching ``index``) where the comparison fails."""
    g = _gstar_array(ns, xs)
    return ns[12 * g * g > index]


# ---------------------------------------------------------------------------
# Pruned search
# ---------------------------------------------------------------------------

def _sequence_for(p: int) -> Tuple[WorstCaseSequence, int, int]:
    r = theoretical_r(p)
    ceiling_bound = ceil_decimal(worstcase_thresholds(p)[0])
    # one term past N_{r-1} so gstar is resolvable for every level below the ceiling
    seq = sequence_until(p, ceiling_bound, extra=1)
    return seq, r, seq.N(r - 1)


def nhat_candidates(p: int) -> Tuple[np.ndarray, WorstCaseSequence, int]:
    """Levels that can possibly fail, plus the sequence and ``r`` they came from.

    Every ``N <= 12 x_1**2`` and, for ``t = 1, ..., r - 2``, the multiples
    of ``N_t`` inside ``[12 x_t**2, 12 x_{t+1}**2)``.
    """
    _check_p(p)
    seq, r, _ = _sequence_for(p)
    parts = [np.arange(1, 12 * seq.x(1) ** 2 + 1, dtype=np.int64)]
    for t in range(1, r - 1):
        lo, hi, step = 12 * seq.x(t) ** 2, 12 * seq.x(t + 1) ** 2, seq.N(t)
        first = -(-lo // step) * step
        if first < hi:
            parts.append(np.arange(first, hi, step, dtype=np.int64))
    cands = np.unique(np.concatenate(parts))
    return cands, seq, r


def _failures_among(cands: np.ndarray, xs: Sequence[int]) -> np.ndarray:
    if cands.size == 0:
        return cands
    index = gamma0_index_table(1, int(cands[-1]) + 1)
    return comp_failures(cands, xs, index[cands - 1])


def compute_nhat(p: int) -> NhatReport:
    """Least ``nhat`` such that the comparison holds for every ``N >= nhat``.

    Conditional on GRH through the ceiling ``N_{r-1}``.
    """
    cands, seq, r = nhat_candidates(p)
    failing = _failures_among(cands, seq.xs)
    worst = int(failing.max()) if failing.size else 0
    return NhatReport(p, worst + 1, worst, int(cands.size), seq.N(r - 1))


# ---------------------------------------------------------------------------
# Brute-force oracle
# ---------------------------------------------------------------------------

def _scan_chunk(args) -> np.ndarray:
    lo, hi, xs = args
    ns = np.arange(lo, hi, dtype=np.int64)
    return comp_failures(ns, xs, gamma0_index_table(lo, hi))


def _scan_limit(p: int, ceiling: int) -> Tuple[int, WorstCaseSequence]:
    # For N <= ceiling, gstar(p, N) = x_s forces N_{s-1} | N, so s - 1 <= T with
    # T = max{t : N_t <= ceiling} and gstar <= x_{T+1}.  A failure needs
    # N <= index(N) < 12 gstar**2 <= 12 x_{T+1}**2, so nothing past that can fail.
    seq = sequence_until(p, ceiling + 1)
    x_top = seq.xs[-1]
    return min(ceiling, 12 * x_top * x_top - 1), seq


def brute_failures(p: int, ceiling: int, jobs: int = 1) -> np.ndarray:
    """Every ``N <= ceiling`` at which the comparison fails, ascending."""
    _check_p(p)
    limit, seq = _scan_limit(p, ceiling)
    chunks = [(lo, min(lo + _CHUNK, limit + 1), seq.xs)
              for lo in range(1, limit + 1, _CHUNK)]
    if jobs > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_scan_chunk, chunks))
    else:
        parts = [_scan_chunk(c) for c in chunks]
    return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)


def brute_nhat(p: int, ceiling: Optional[int] = None, jobs: int = 1) -> NhatReport:
    """Linear-scan oracle for ``compute_nhat`` over every ``N <= ceiling``.

    ``ceiling`` defaults to ``N_{r-1}``.  Levels beyond ``12 x_{T+1}**2``
    (see ``_scan_limit``) are skipped because the index already exceeds
    twelve times the largest attainable ``gstar`` squared there.
    """
    _check_p(p)
    if ceiling is None:
        ceiling = _sequence_for(p)[2]
    if ceiling < 12 * gstar(p, 1) ** 2:
        raise ValueError("ceiling must be at least 12 x_1**2")
    failing = brute_failures(p, ceiling, jobs)
    worst = int(failing[-1]) if failing.size else 0
    limit, _ = _scan_limit(p, ceiling)
    return NhatReport(p, worst + 1, worst, limit, ceiling)


# ---------------------------------------------------------------------------
# Ranges of primes
# ---------------------------------------------------------------------------

def nhat_range(lo: int, hi: int, jobs: int = 1) -> Tuple[int, Optional[int], List[NhatReport]]:
    """Maximum ``nhat`` over primes ``lo <= p < hi`` (only ``p >= 5`` count).

    Returns ``(max_nhat, argmax_p, reports)``; ties resolve to the smallest ``p``.
    Parallel and serial runs give identical results.
    """
    primes = [int(p) for p in prime_sieve(hi - 1) if p >= max(lo, 5)]
    if jobs > 1 and len(primes) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(compute_nhat, primes, chunksize=8))
    else:
        reports = [compute_nhat(p) for p in primes]
    best, arg = 0, None
    for rep in reports:
        if rep.nhat > best:
            best, arg = rep.nhat, rep.p
    return best, arg, reports
