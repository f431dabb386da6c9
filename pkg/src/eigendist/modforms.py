"""q-expansions, Eisenstein series and the mod-p eigenform distinguisher.

Coefficients are rational integers throughout, so reduction modulo the
prime ideal is reduction modulo the rational prime ``p``.
"""
from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, List, NamedTuple, Optional, Sequence, Tuple, Union

from .arith import factorize, is_prime
from .bounds import BoundBreakdown, least_prime_not_dividing, main_bound

__all__ = [
    "QExpansion",
    "RationalSeries",
    "Outcome",
    "DistinguishReport",
    "HeckeCheck",
    "load_qexpansion",
    "dump_qexpansion",
    "bernoulli",
    "bernoulli_numbers",
    "sigma_power",
    "eisenstein_qexp",
    "eisenstein_congruence_check",
    "multiply_series",
    "delta_qexpansion",
    "times_eisenstein",
    "hecke_identity_check",
    "distinguish_mod_p",
    "distinguish_exact",
]

TRIVIAL = "trivial"


@dataclass(frozen=True)
class QExpansion:
    """Truncated Fourier expansion ``a_0 + a_1 q + ... + a_M q**M``."""

    level: int
    weight: int
    coeffs: Tuple[int, ...]
    character: str = TRIVIAL
    eigenform: bool = False

    def __post_init__(self) -> None:
        if not isinstance(self.level, int) or self.level < 1:
            raise ValueError(f"level must be an integer >= 1, got {self.level!r}")
        if not isinstance(self.weight, int) or self.weight < 1:
            raise ValueError(f"weight must be an integer >= 1, got {self.weight!r}")
        if self.character != TRIVIAL:
            raise ValueError(f"only the trivial character is supported, got {self.character!r}")
        coeffs = tuple(self.coeffs)
        if len(coeffs) < 2:
            raise ValueError("need coefficients a_0 and a_1 at least")
        if not all(isinstance(c, int) and not isinstance(c, bool) for c in coeffs):
            raise ValueError("coefficients must be integers")
        object.__setattr__(self, "coeffs", coeffs)
        if self.eigenform and coeffs[1] != 1:
            raise ValueError(f"normalised eigenform needs a_1 = 1, got {coeffs[1]}")

    @property
    def precision(self) -> int:
        """Index ``M`` of the last known coefficient."""
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]


@dataclass(frozen=True)
class RationalSeries:
    weight: int
    coeffs: Tuple[Fraction, ...]


def _parse_int(s, i: int) -> int:
    if isinstance(s, bool):
        raise ValueError(f"coefficient {i} is not an integer: {s!r}")
    if isinstance(s, int):
        return s
    if isinstance(s, str):
        t = s.strip()
        body = t[1:] if t[:1] in "+-" else t
        if body.isdigit() and body.isascii():
            return int(t)
    raise ValueError(f"coefficient {i} is not a decimal integer: {s!r}")


def load_qexpansion(source: Union[IO, bytes, str]) -> QExpansion:
    """Parse a JSON q-expansion document.

    Fields: ``level``, ``weight``, ``character`` (``"trivial"``),
    ``eigenform`` and ``coeffs``, a list of decimal integer strings with
    ``a_0`` first.
    """
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    doc = json.loads(source)
    if not isinstance(doc, dict):
        raise ValueError("q-expansion document must be a JSON object")
    missing = {"level", "weight", "character", "eigenform", "coeffs"} - doc.keys()
    if missing:
        raise ValueError(f"missing fields: {sorted(missing)}")
    for key in ("level", "weight"):
        if isinstance(doc[key], bool) or not isinstance(doc[key], int):
            raise ValueError(f"{key} must be an integer")
    if not isinstance(doc["eigenform"], bool):
        raise ValueError("eigenform must be a boolean")
    if not isinstance(doc["coeffs"], list):
        raise ValueError("coeffs must be an array")
    coeffs = tuple(_parse_int(c, i) for i, c in enumerate(doc["coeffs"]))
    return QExpansion(doc["level"], doc["weight"], coeffs, doc["character"], doc["eigenform"])


def dump_qexpansion(f: QExpansion) -> str:
    return json.dumps({
        "level": f.level,
        "weight": f.weight,
        "character": f.character,
        "eigenform": f.eigenform,
        "coeffs": [str(c) for c in f.coeffs],
    })


# ---------------------------------------------------------------------------
# Bernoulli numbers, divisor sums, Eisenstein series
# ---------------------------------------------------------------------------

def bernoulli_numbers(m: int) -> List[Fraction]:
    """``[B_0, ..., B_m]`` from ``sum_{k<=n} C(n+1, k) B_k = 0``; ``B_1 = -1/2``."""
    if m < 0:
        raise ValueError("m must be >= 0")
    B = [Fraction(1)]
    for n in range(1, m + 1):
        s = sum(math.comb(n + 1, k) * B[k] for k in range(n))
        B.append(-s / (n + 1))
    return B


def bernoulli(m: int) -> Fraction:
    return bernoulli_numbers(m)[m]


def sigma_power(n: int, e: int) -> int:
    """``sum_{d | n} d**e``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if e < 0:
        raise ValueError("e must be >= 0")
    result = 1
    for p, a in factorize(n):
        pe = p ** e
        result *= sum(pe ** j for j in range(a + 1))
    return result


def eisenstein_qexp(p: int, M: int) -> RationalSeries:
    """``E_{p-1} = 1 - (2p - 2)/B_{p-1} * sum sigma_{p-2}(n) q**n`` up to ``q**M``."""
    if p < 5 or not is_prime(p):
        raise ValueError(f"eisenstein_qexp needs a prime p >= 5, got {p}")
    if M < 1:
        raise ValueError("M must be >= 1")
    const = -Fraction(2 * p - 2) / bernoulli(p - 1)
    coeffs = [Fraction(1)] + [const * sigma_power(n, p - 2) for n in range(1, M + 1)]
    return RationalSeries(p - 1, tuple(coeffs))


def eisenstein_congruence_check(p: int, M: int) -> bool:
    """True iff ``E_{p-1} == 1 (mod p)`` on the coefficients ``1..M``."""
    series = eisenstein_qexp(p, M)
    return all(c.denominator % p != 0 and c.numerator % p == 0 for c in series.coeffs[1:])


def multiply_series(a: Sequence[int], b: Sequence[int], M: int) -> List[int]:
    """Product of two power series truncated after ``q**M``."""
    out = [0] * (M + 1)
    for i, ai in enumerate(a[:M + 1]):
        if ai:
            for j, bj in enumerate(b[:M + 1 - i]):
                out[i + j] += ai * bj
    return out


def _euler_product(M: int) -> List[int]:
    # prod (1 - q^n) = sum_k (-1)^k q^{k(3k-1)/2} over all integers k
    out = [0] * (M + 1)
    k = 0
    while True:
        hit = False
        for kk in ((k, -k) if k else (0,)):
            e = kk * (3 * kk - 1) // 2
            if e <= M:
                out[e] += -1 if kk % 2 else 1
                hit = True
        if not hit:
            return out
        k += 1


def delta_qexpansion(M: int) -> QExpansion:
    """The discriminant ``q prod (1 - q^n)^24`` through ``q**M``."""
    if M < 1:
        raise ValueError("M must be >= 1")
    eta = _euler_product(M)
    power = [1] + [0] * M
    base = eta
    e = 24
    while e:
        if e & 1:
            power = multiply_series(power, base, M)
        e >>= 1
        if e:
            base = multiply_series(base, base, M)
    coeffs = [0] + power[:M]
    return QExpansion(1, 12, tuple(coeffs), eigenform=True)


def times_eisenstein(f: QExpansion, p: int, r: int = 1, eigenform: bool = False) -> QExpansion:
    """``E_{p-1}**r * f``, of weight ``k + r (p - 1)``.

    The product need not be an eigenform; set ``eigenform`` only when the
    target space makes it one (e.g. ``E_4 * Delta`` in weight 16, level 1).
    """
    series = eisenstein_qexp(p, f.precision).coeffs
    if any(c.denominator != 1 for c in series):
        raise ValueError(f"E_{p - 1} does not have integral coefficients")
    e = [c.numerator for c in series]
    out = list(f.coeffs)
    for _ in range(r):
        out = multiply_series(out, e, f.precision)
    return QExpansion(f.level, f.weight + r * (p - 1), tuple(out), f.character, eigenform)


# ---------------------------------------------------------------------------
# Hecke identity
# ---------------------------------------------------------------------------

class HeckeCheck(NamedTuple):
    lhs: int
    rhs: int
    ok: bool


def hecke_identity_check(f: QExpansion, ell: int) -> HeckeCheck:
    """Compare ``a_l**2 - a_{l**2}`` with ``l**(k-1)`` (trivial character)."""
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    if f.level % ell == 0:
        raise ValueError(f"{ell} divides the level {f.level}")
    if f.precision < ell * ell:
        raise ValueError(f"need coefficients through q^{ell * ell}, have q^{f.precision}")
    lhs = f[ell] ** 2 - f[ell * ell]
    rhs = ell ** (f.weight - 1)
    return HeckeCheck(lhs, rhs, lhs == rhs)


# ---------------------------------------------------------------------------
# Distinguishing
# ---------------------------------------------------------------------------

class Outcome(enum.Enum):
    WITNESS = "WITNESS"
    CONGRUENT_UP_TO_BOUND = "CONGRUENT_UP_TO_BOUND"
    INSUFFICIENT_COEFFS = "INSUFFICIENT_COEFFS"


@dataclass(frozen=True)
class DistinguishReport:
    """Result of comparing two expansions.

    ``residues`` holds ``(a_n(f), a_n(g))`` reduced to ``[0, p)`` for the
    mod-p comparison, or the raw coefficients for the exact one.
    ``bound`` is the largest index that had to be inspected; ``breakdown``
    carries the full bound computation when one applies.
    """

    outcome: Outcome
    bound: Union[int, Fraction]
    witness_n: Optional[int] = None
    residues: Optional[Tuple[int, int]] = None
    breakdown: Optional[BoundBreakdown] = None
    fast_path_used: bool = False
    modulus: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "outcome": self.outcome.value,
            "witness_n": self.witness_n,
            "residues": list(self.residues) if self.residues is not None else None,
            "bound": str(self.bound),
            "breakdown": self.breakdown.to_dict() if self.breakdown else None,
            "fast_path_used": self.fast_path_used,
            "modulus": self.modulus,
        }


def _check_pair(f: QExpansion, g: QExpansion) -> None:
    if f.level != g.level:
        raise ValueError(f"level mismatch: {f.level} vs {g.level}")
    if f.character != g.character:
        raise ValueError(f"character mismatch: {f.character} vs {g.character}")


def distinguish_mod_p(f: QExpansion, g: QExpansion, p: int, fast_path: bool = True) -> DistinguishReport:
    """Find ``n`` with ``a_n(f) != a_n(g) (mod p)`` or certify congruence.

    The search runs over ``n <= main_bound(p, N, k2).selected``.  When the
    weights differ and ``p - 1`` does not divide their difference, a
    witness is guaranteed at ``l`` or ``l**2`` with ``l = gstar(p, N)``;
    those two indices are checked first unless ``fast_path`` is False.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    _check_pair(f, g)
    if f.weight > g.weight:
        report = distinguish_mod_p(g, f, p, fast_path)
        if report.residues is None:
            return report
        return DistinguishReport(report.outcome, report.bound, report.witness_n,
                                 report.residues[::-1], report.breakdown,
                                 report.fast_path_used, p)
    bd = main_bound(p, f.level, g.weight)
    limit = bd.selected_floor

    def differs(n: int) -> Optional[Tuple[int, int]]:
        rf, rg = f[n] % p, g[n] % p
        return (rf, rg) if rf != rg else None

    k1, k2 = f.weight, g.weight
    if fast_path and k1 != k2 and (k2 - k1) % (p - 1):
        ell = bd.gstar_value
        for n in (ell, ell * ell):
            if n > min(f.precision, g.precision):
                return DistinguishReport(Outcome.INSUFFICIENT_COEFFS, bd.selected,
                                         breakdown=bd, fast_path_used=True, modulus=p)
            res = differs(n)
            if res:
                return DistinguishReport(Outcome.WITNESS, bd.selected, n, res, bd, True, p)
        # the guarantee failed: these are not eigenforms as claimed; fall back to a scan

    for n in range(limit + 1):
        if n > min(f.precision, g.precision):
            return DistinguishReport(Outcome.INSUFFICIENT_COEFFS, bd.selected,
                                     breakdown=bd, modulus=p)
        res = differs(n)
        if res:
            return DistinguishReport(Outcome.WITNESS, bd.selected, n, res, bd, False, p)
    return DistinguishReport(Outcome.CONGRUENT_UP_TO_BOUND, bd.selected, breakdown=bd, modulus=p)


def distinguish_exact(f: QExpansion, g: QExpansion) -> DistinguishReport:
    """Least ``n <= l**2`` with ``a_n(f) != a_n(g)``, ``l`` the least prime not dividing ``N``.

    Two eigenforms of different weights always differ that early, so a
    ``CONGRUENT_UP_TO_BOUND`` outcome means the input data is wrong.
    """
    _check_pair(f, g)
    if f.weight == g.weight:
        raise ValueError("distinguish_exact needs different weights")
    bound = least_prime_not_dividing(f.level) ** 2
    for n in range(bound + 1):
        if n > min(f.precision, g.precision):
            return DistinguishReport(Outcome.INSUFFICIENT_COEFFS, bound)
        if f[n] != g[n]:
            return DistinguishReport(Outcome.WITNESS, bound, n, (f[n], g[n]))
    return DistinguishReport(Outcome.CONGRUENT_UP_TO_BOUND, bound)
