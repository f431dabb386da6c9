"""Least prime primitive roots avoiding a level, and the worst-case sequence.

For a prime ``p`` let ``x_1 < x_2 < ...`` be the primes that are primitive
roots mod ``p`` and ``N_t = x_1 * ... * x_t``.  ``gstar(p, N)`` is the
least such prime not dividing ``N``; the levels ``N_t`` are the smallest
ones forcing ``gstar`` past ``x_t``.

Small moduli need no special casing: mod 3 the primitive roots are the
residues ``2 (mod 3)``, and mod 2 the unit group is trivial so every odd
prime qualifies.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Iterator, List, Tuple

from .arith import factorize, is_prime, iter_primes

__all__ = [
    "WorstCaseSequence",
    "iter_prime_primitive_roots",
    "prime_primitive_roots",
    "gstar",
    "worst_case_sequence",
    "sequence_until",
]


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def iter_prime_primitive_roots(p: int) -> Iterator[int]:
    """Ascending iterator over the primes that are primitive roots mod ``p``."""
    _require_prime(p)
    qs = factorize(p - 1).primes
    exps = [(p - 1) // q for q in qs]
    for ell in iter_primes():
        if ell == p:
            continue
        if all(pow(ell, e, p) != 1 for e in exps):
            yield ell


def prime_primitive_roots(p: int, count: int) -> List[int]:
    """The first ``count`` prime primitive roots mod ``p``."""
    return list(islice(iter_prime_primitive_roots(p), count))


def gstar(p: int, N: int) -> int:
    """Least prime primitive root mod ``p`` that does not divide ``N``.

    >>> gstar(5, 6)
    7
    """
    if N < 1:
        raise ValueError(f"level must be >= 1, got {N}")
    for ell in iter_prime_primitive_roots(p):
        if N % ell:
            return ell
    raise AssertionError("unreachable: infinitely many prime primitive roots")


@dataclass(frozen=True)
class WorstCaseSequence:
    p: int
    xs: Tuple[int, ...]
    Ns: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.xs) != len(self.Ns):
            raise ValueError("xs and Ns differ in length")
        prod = 1
        for x, N in zip(self.xs, self.Ns):
            prod *= x
            if prod != N:
                raise ValueError("Ns must be the running products of xs")

    def __len__(self) -> int:
        return len(self.xs)

    def x(self, t: int) -> int:
        """``x_t``, one-based."""
        if t < 1:
            raise IndexError("x_t is defined for t >= 1")
        return self.xs[t - 1]

    def N(self, t: int) -> int:
        """``N_t``, one-based, with ``N_0 = 1``."""
        if t < 0:
            raise IndexError("N_t is defined for t >= 0")
        return 1 if t == 0 else self.Ns[t - 1]


def _build(p: int, xs: List[int]) -> WorstCaseSequence:
    Ns = []
    prod = 1
    for x in xs:
        prod *= x
        Ns.append(prod)
    return WorstCaseSequence(p, tuple(xs), tuple(Ns))


def worst_case_sequence(p: int, t: int) -> WorstCaseSequence:
    """First ``t`` prime primitive roots mod ``p`` and their running products."""
    if p < 3:
        raise ValueError(f"worst-case sequence needs p >= 3, got {p}")
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    return _build(p, prime_primitive_roots(p, t))


def sequence_until(p: int, bound: int, extra: int = 0) -> WorstCaseSequence:
    """Extend the sequence until some ``N_t >= bound``, then by ``extra`` more terms."""
    if p < 3:
        raise ValueError(f"worst-case sequence needs p >= 3, got {p}")
    xs: List[int] = []
    prod = 1
    remaining = None
    for ell in iter_prime_primitive_roots(p):
        xs.append(ell)
        prod *= ell
        if remaining is None and prod >= bound:
            remaining = extra
        if remaining is not None:
            if remaining == 0:
                break
            remaining -= 1
    return _build(p, xs)
