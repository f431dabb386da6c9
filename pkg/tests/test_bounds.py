import math
from decimal import Decimal
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from eigendist.arith import euler_phi, prime_sieve
from eigendist.bounds import (
    TableCase,
    bs_bound,
    bs_refined_bound,
    ceil_decimal,
    cor_upper_bound,
    dist_lower_bound,
    gamma0_index,
    lemma_ap_floor,
    lemma_ap_threshold,
    main_bound,
    murty_bound,
    nphi_lower,
    sturm_bound,
    sturm_floor,
    table_case,
    theoretical_r,
    worstcase_thresholds,
)
from eigendist.primroots import gstar, worst_case_sequence

ORACLE = mpmath.MPContext()
ORACLE.dps = 60


def oracle(expr):
    return ORACLE.mpf(expr) if not callable(expr) else expr(ORACLE)


def assert_tight_upper(value: Decimal, exact):
    """value >= exact and agrees to ~35 significant digits."""
    v = ORACLE.mpf(str(value))
    assert v >= exact
    assert (v - exact) / exact < ORACLE.mpf("1e-35")


def index_by_definition(N):
    primes = [l for l in range(2, N + 1) if N % l == 0 and all(l % d for d in range(2, l))]
    return Fraction(N) * math.prod((Fraction(l + 1, l) for l in primes), start=Fraction(1))


@pytest.mark.parametrize("N, expected", [(1, 1), (2, 3), (15, 24), (12, 24), (18, 36)])
def test_gamma0_index_examples(N, expected):
    assert gamma0_index(N) == expected


def test_gamma0_index_matches_product_formula():
    for N in range(1, 1500):
        assert gamma0_index(N) == index_by_definition(N)
        assert gamma0_index(N) >= N


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 10 ** 6), st.integers(1, 10 ** 6))
def test_gamma0_index_multiplicative(a, b):
    if math.gcd(a, b) == 1:
        assert gamma0_index(a * b) == gamma0_index(a) * gamma0_index(b)


@pytest.mark.parametrize("k, N, exact, floor", [(12, 1, 1, 1), (2, 11, 2, 2), (4, 1, Fraction(1, 3), 0)])
def test_sturm_bound_examples(k, N, exact, floor):
    assert sturm_bound(k, N) == exact
    assert sturm_floor(k, N) == floor


@pytest.mark.parametrize("N, expected", [(1, 4), (2, 9), (6, 25), (30, 49), (210, 121)])
def test_murty_bound_examples(N, expected):
    assert murty_bound(N) == expected


def test_main_bound_examples():
    b = main_bound(5, 1, 12)
    assert (b.gstar_term, b.sturm_term, b.selected) == (4, 1, 4)

    b = main_bound(3, 9, 12)
    assert b.table_case is TableCase.P3_POWER_OF_3
    assert (b.adjusted_level, b.sturm_term, b.gstar_term, b.selected) == (18, 36, 4, 36)

    b = main_bound(2, 3, 2)
    assert b.table_case is TableCase.P2_OTHER
    assert (b.adjusted_level, b.sturm_term, b.gstar_term, b.selected) == (15, 4, 25, 25)


@pytest.mark.parametrize("p, N, case, mult", [
    (5, 7, TableCase.P_GE_5, 1),
    (3, 1, TableCase.P3_POWER_OF_3, 2),
    (3, 27, TableCase.P3_POWER_OF_3, 2),
    (3, 6, TableCase.P3_OTHER, 1),
    (3, 10, TableCase.P3_OTHER, 1),
    (2, 35, TableCase.P2_DIV_5_7_11, 1),
    (2, 22, TableCase.P2_DIV_5_7_11, 1),
    (2, 1, TableCase.P2_OTHER, 5),
    (2, 13, TableCase.P2_OTHER, 5),
])
def test_table_case_rows(p, N, case, mult):
    b = main_bound(p, N, 4)
    assert b.table_case is case
    assert b.adjusted_level == mult * N


@settings(max_examples=300, deadline=None)
@given(st.sampled_from([2, 3, 5, 7, 11, 13]), st.integers(1, 5000), st.integers(1, 40))
def test_main_bound_invariants(p, N, k2):
    b = main_bound(p, N, k2)
    # exactly one case, determined independently here
    if p >= 5:
        expected = TableCase.P_GE_5
    elif p == 3:
        m = N
        while m % 3 == 0:
            m //= 3
        expected = TableCase.P3_POWER_OF_3 if m == 1 else TableCase.P3_OTHER
    else:
        expected = TableCase.P2_DIV_5_7_11 if any(N % q == 0 for q in (5, 7, 11)) else TableCase.P2_OTHER
    assert b.table_case is expected
    assert b.adjusted_level in (N, 2 * N, 5 * N)
    assert b.selected == max(Fraction(b.gstar_term), b.sturm_term)
    assert b.gstar_term == b.gstar_value ** 2
    assert N % b.gstar_value != 0
    assert b.sturm_term == Fraction(k2 * index_by_definition(b.adjusted_level), 12)


@pytest.mark.parametrize("q, approx", [(5, 129.52), (3, 21.72), (2, 3.84)])
def test_bs_bound_examples(q, approx):
    v = bs_bound(q)
    assert abs(float(v) - approx) < 0.01
    assert_tight_upper(v, 2 * (q * ORACLE.log(q)) ** 2)


@pytest.mark.parametrize("q, approx", [(5, 101.02), (3, 16.94)])
def test_bs_refined_bound_examples(q, approx):
    v = bs_refined_bound(q)
    assert abs(float(v) - approx) < 0.01
    assert_tight_upper(v, ORACLE.mpf("1.56") * (q * ORACLE.log(q)) ** 2)


def test_bs_refined_below_bs():
    for q in range(3, 500):
        assert bs_refined_bound(q) < bs_bound(q)


def test_bs_bound_domain():
    with pytest.raises(ValueError):
        bs_bound(1)
    with pytest.raises(ValueError):
        bs_refined_bound(2)
    with pytest.raises(ValueError):
        dist_lower_bound(2, 1)


@pytest.mark.parametrize("q, t, approx, count", [(5, 1, 101.02, 1), (5, 2, 10102.13, 5), (3, 1, 16.94, 1)])
def test_dist_lower_bound_examples(q, t, approx, count):
    x, c = dist_lower_bound(q, t)
    assert abs(float(x) - approx) < 0.01
    assert c == count
    assert_tight_upper(x, ORACLE.mpf("1.56") * t * t * ORACLE.mpf(q) ** (2 * t) * ORACLE.log(q) ** 2)


def test_dist_lower_bound_t1_is_refined_bs():
    for q in (3, 5, 7, 100):
        assert abs(dist_lower_bound(q, 1)[0] - bs_refined_bound(q)) < Decimal("1e-30")


def test_lemma_ap_floor():
    assert lemma_ap_floor(5, 10103) == 2
    assert 10103 ** (1 / 9) == pytest.approx(2.79, abs=0.01)
    assert lemma_ap_floor(5, 100) is None
    boundary = lemma_ap_threshold(7)
    assert_tight_upper(boundary, ORACLE.mpf("6.24") * 7 ** 4 * ORACLE.log(7) ** 2)
    assert lemma_ap_floor(7, boundary) is not None
    assert lemma_ap_floor(7, boundary - Decimal("1e-20")) is None
    with pytest.raises(ValueError):
        lemma_ap_floor(3, 10 ** 6)


def test_cor_upper_bound_examples():
    assert cor_upper_bound(5, 1)[0] == 2
    assert float(cor_upper_bound(5, 1)[1]) == pytest.approx(101.02, abs=0.01)
    assert cor_upper_bound(5, 2)[0] == 10
    assert float(cor_upper_bound(5, 2)[1]) == pytest.approx(10102.13, abs=0.01)
    idx, b = cor_upper_bound(7, 1)
    assert idx == 2
    # 1.56 * 49 * (log 7)^2
    assert_tight_upper(b, ORACLE.mpf("1.56") * 49 * ORACLE.log(7) ** 2)
    assert float(b) == pytest.approx(289.445, abs=0.001)
    assert worst_case_sequence(5, 2).x(2) == 3 and worst_case_sequence(7, 2).x(2) == 5


@pytest.mark.parametrize("p, expected", [(5, 6), (7, 8), (11, 144), (13, 14 ** 2)])
def test_nphi_lower_examples(p, expected):
    brute_phi = sum(1 for k in range(1, p) if math.gcd(k, p - 1) == 1)
    assert expected == (p + 1) ** (brute_phi // 2)
    assert nphi_lower(p) == expected


def test_nphi_lower_equality_at_5():
    assert worst_case_sequence(5, euler_phi(4)).N(2) == nphi_lower(5) == 6


def test_worstcase_thresholds():
    t1, t2 = worstcase_thresholds(5)
    exact1 = ORACLE.mpf("29.2032") * 625 * ORACLE.log(5) ** 4
    exact2 = ORACLE.mpf("467.2512") * 5 ** 8 * ORACLE.log(5) ** 4
    assert_tight_upper(t1, exact1)
    assert_tight_upper(t2, exact2)
    assert int(t1) == 122463
    for p in prime_sieve(300).tolist()[2:]:
        a, b = worstcase_thresholds(p)
        assert b > a


def test_theoretical_r_five():
    seq = worst_case_sequence(5, 8)
    assert seq.N(5) == 9282 < 122463 <= seq.N(6) == 213486
    assert theoretical_r(5) == 7


def test_theoretical_r_minimality():
    for p in prime_sieve(200).tolist()[2:]:
        r = theoretical_r(p)
        seq = worst_case_sequence(p, r)
        exact = ORACLE.mpf("29.2032") * ORACLE.mpf(p) ** 4 * ORACLE.log(p) ** 4
        assert seq.N(r - 1) >= exact
        assert r == 1 or seq.N(r - 2) < exact


def test_theoretical_r_seven():
    seq = worst_case_sequence(7, 6)
    assert list(seq.xs) == [3, 5, 17, 19, 31, 47]
    assert seq.N(5) < ORACLE.mpf("29.2032") * 7 ** 4 * ORACLE.log(7) ** 4 <= seq.N(6)
    assert theoretical_r(7) == 7


def test_ceil_decimal():
    assert ceil_decimal(Decimal("2.0001")) == 3
    assert ceil_decimal(Decimal("2")) == 2
