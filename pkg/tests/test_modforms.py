import io
import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from eigendist.modforms import (
    Outcome,
    QExpansion,
    bernoulli,
    bernoulli_numbers,
    delta_qexpansion,
    distinguish_exact,
    distinguish_mod_p,
    dump_qexpansion,
    eisenstein_congruence_check,
    eisenstein_qexp,
    hecke_identity_check,
    load_qexpansion,
    multiply_series,
    sigma_power,
    times_eisenstein,
)


def akiyama_tanigawa(m):
    # yields B_m with B_1 = +1/2; only used for m != 1
    a = [Fraction(1, j + 1) for j in range(m + 1)]
    for k in range(m, 0, -1):
        for j in range(k):
            a[j] = (j + 1) * (a[j] - a[j + 1])
        a.pop()
    return a[0]


def doc(**overrides):
    base = {"level": 1, "weight": 12, "character": "trivial", "eigenform": True,
            "coeffs": ["0", "1", "-24", "252"]}
    base.update(overrides)
    return json.dumps(base)


# ---------------------------------------------------------------------------
# fixtures against the independent oracle
# ---------------------------------------------------------------------------

def test_delta_matches_naive_product(delta, delta_oracle):
    assert list(delta.coeffs) == delta_oracle
    assert list(delta.coeffs[:6]) == [0, 1, -24, 252, -1472, 4830]


def test_e4_delta_matches_naive_product(e4_delta, e4_delta_oracle):
    assert list(e4_delta.coeffs) == e4_delta_oracle
    assert e4_delta.weight == 16
    assert e4_delta[2] == -24 + 240 == 216
    assert e4_delta[3] == -3348


# ---------------------------------------------------------------------------
# document format
# ---------------------------------------------------------------------------

def test_load_delta_document(delta):
    f = load_qexpansion(io.BytesIO(dump_qexpansion(delta).encode("utf-8")))
    assert f == delta


def test_load_accepts_huge_integers():
    big = str(10 ** 60 + 7)
    f = load_qexpansion(doc(coeffs=["0", "1", big, "-" + big]))
    assert f[2] == 10 ** 60 + 7 and f[3] == -(10 ** 60 + 7)


@pytest.mark.parametrize("bad", [
    dict(weight=0),
    dict(level=0),
    dict(coeffs=["0", "2", "3"]),
    dict(coeffs=["0", "1", "2.5"]),
    dict(coeffs=["0", "1", "x"]),
    dict(coeffs=["0"]),
    dict(character="quadratic"),
    dict(eigenform="yes"),
    dict(level=True),
])
def test_load_rejects(bad):
    with pytest.raises(ValueError):
        load_qexpansion(doc(**bad))


def test_load_rejects_missing_field():
    d = json.loads(doc())
    del d["weight"]
    with pytest.raises(ValueError):
        load_qexpansion(json.dumps(d))


def test_non_eigenform_may_have_any_a1():
    f = load_qexpansion(doc(eigenform=False, coeffs=["0", "2", "3"]))
    assert f[1] == 2


# ---------------------------------------------------------------------------
# Bernoulli, sigma, Eisenstein
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("m, expected", [(0, 1), (1, Fraction(-1, 2)), (4, Fraction(-1, 30)),
                                         (6, Fraction(1, 42)), (12, Fraction(-691, 2730))])
def test_bernoulli_examples(m, expected):
    assert bernoulli(m) == expected


def test_bernoulli_against_second_algorithm():
    B = bernoulli_numbers(60)
    for m in range(61):
        if m != 1:
            assert B[m] == akiyama_tanigawa(m)
    assert all(B[m] == 0 for m in range(3, 61, 2))


@pytest.mark.parametrize("n, e, expected", [(1, 3, 1), (2, 3, 9), (3, 3, 28), (12, 0, 6), (12, 1, 28)])
def test_sigma_power_examples(n, e, expected):
    assert sigma_power(n, e) == expected


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 5000), st.integers(0, 12))
def test_sigma_power_brute(n, e):
    assert sigma_power(n, e) == sum(d ** e for d in range(1, n + 1) if n % d == 0)


def test_eisenstein_examples():
    assert list(eisenstein_qexp(5, 3).coeffs) == [1, 240, 2160, 6720]
    e6 = eisenstein_qexp(7, 1)
    assert e6.coeffs[1] == -504
    for p in (5, 7, 11, 13, 17):
        assert eisenstein_qexp(p, 4).coeffs[0] == 1


def test_eisenstein_e4_classical():
    e4 = eisenstein_qexp(5, 50).coeffs
    assert list(e4) == [1] + [240 * sum(d ** 3 for d in range(1, n + 1) if n % d == 0) for n in range(1, 51)]


def test_eisenstein_rejects_small_p():
    with pytest.raises(ValueError):
        eisenstein_qexp(3, 5)


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19, 23])
def test_eisenstein_congruence(p):
    assert eisenstein_congruence_check(p, 100)
    assert bernoulli(p - 1).denominator % p == 0


def test_times_eisenstein_requires_integral():
    with pytest.raises(ValueError):
        times_eisenstein(delta_qexpansion(10), 13)


def test_multiply_series_truncates():
    assert multiply_series([1, 1], [1, 1], 1) == [1, 2]
    assert multiply_series([1, 1], [1, 1], 3) == [1, 2, 1, 0]


# ---------------------------------------------------------------------------
# Hecke identity
# ---------------------------------------------------------------------------

def test_hecke_examples(delta):
    assert hecke_identity_check(delta, 2) == (2048, 2048, True)
    assert (-24) ** 2 - (-1472) == 2 ** 11
    assert hecke_identity_check(delta, 3).lhs == 177147 == 3 ** 11
    assert hecke_identity_check(delta, 5).rhs == 48828125 == 5 ** 11


@pytest.mark.parametrize("ell", [2, 3, 5, 7, 11])
def test_hecke_identity_both_fixtures(delta, e4_delta, ell):
    assert hecke_identity_check(delta, ell).ok
    assert hecke_identity_check(e4_delta, ell).ok


def test_hecke_detects_non_eigenform(delta):
    twisted = QExpansion(1, 12, tuple(c + (1 if i == 4 else 0) for i, c in enumerate(delta.coeffs)))
    assert not hecke_identity_check(twisted, 2).ok


def test_hecke_errors(delta):
    with pytest.raises(ValueError):
        hecke_identity_check(delta_qexpansion(8), 3)
    level5 = QExpansion(5, 12, delta.coeffs)
    with pytest.raises(ValueError):
        hecke_identity_check(level5, 5)


# ---------------------------------------------------------------------------
# Distinguisher
# ---------------------------------------------------------------------------

def test_identical_inputs_congruent(delta):
    rep = distinguish_mod_p(delta, delta, 5)
    assert rep.outcome is Outcome.CONGRUENT_UP_TO_BOUND


def test_mod5_congruent(delta, e4_delta):
    rep = distinguish_mod_p(delta, e4_delta, 5)
    assert rep.outcome is Outcome.CONGRUENT_UP_TO_BOUND
    assert rep.bound == 4
    assert not rep.fast_path_used


def test_mod7_fast_path(delta, e4_delta):
    rep = distinguish_mod_p(delta, e4_delta, 7)
    assert rep.outcome is Outcome.WITNESS
    assert rep.fast_path_used
    assert rep.witness_n == 3
    assert rep.residues == (0, 5)
    assert rep.bound == 9 and rep.breakdown.gstar_value == 3
    assert 252 % 7 == 0 and -3348 % 7 == 5


def test_fast_path_consistency(delta, e4_delta):
    fast = distinguish_mod_p(delta, e4_delta, 7)
    full = distinguish_mod_p(delta, e4_delta, 7, fast_path=False)
    assert full.outcome is Outcome.WITNESS and not full.fast_path_used
    assert full.witness_n <= fast.witness_n <= fast.breakdown.selected_floor


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 691])
def test_symmetry_and_reduction(delta, e4_delta, p):
    a = distinguish_mod_p(delta, e4_delta, p)
    b = distinguish_mod_p(e4_delta, delta, p)
    assert a.outcome is b.outcome
    assert a.witness_n == b.witness_n
    if a.outcome is Outcome.WITNESS:
        n = a.witness_n
        assert a.residues == (delta[n] % p, e4_delta[n] % p)
        assert b.residues == a.residues[::-1]
        assert a.residues[0] != a.residues[1]
        assert all(0 <= r < p for r in a.residues)
        assert n <= a.breakdown.selected_floor
        # independent reduction: difference not divisible by p
        assert (delta[n] - e4_delta[n]) % p != 0


def test_fast_path_scan_agree_everywhere(delta, e4_delta):
    for p in (7, 11, 13, 17, 19, 23):
        fast = distinguish_mod_p(delta, e4_delta, p)
        full = distinguish_mod_p(delta, e4_delta, p, fast_path=False)
        assert full.outcome is Outcome.WITNESS
        assert full.witness_n <= fast.witness_n


def test_distinguish_level_mismatch(delta):
    other = QExpansion(2, 12, delta.coeffs, eigenform=True)
    with pytest.raises(ValueError):
        distinguish_mod_p(delta, other, 5)


def test_distinguish_insufficient(delta):
    short = QExpansion(1, 12, delta.coeffs[:3], eigenform=True)
    rep = distinguish_mod_p(short, short, 5)
    assert rep.outcome is Outcome.INSUFFICIENT_COEFFS


def test_distinguish_exact(delta, e4_delta):
    rep = distinguish_exact(delta, e4_delta)
    assert rep.outcome is Outcome.WITNESS
    assert rep.witness_n == 2
    assert rep.residues == (-24, 216)
    assert rep.bound == 4


def test_distinguish_exact_errors(delta, e4_delta):
    with pytest.raises(ValueError):
        distinguish_exact(delta, delta)
    short_f = QExpansion(1, 12, delta.coeffs[:2], eigenform=True)
    short_g = QExpansion(1, 16, e4_delta.coeffs[:2], eigenform=True)
    assert distinguish_exact(short_f, short_g).outcome is Outcome.INSUFFICIENT_COEFFS


def test_distinguish_exact_flags_bad_data(delta):
    fake = QExpansion(1, 16, delta.coeffs, eigenform=True)
    assert distinguish_exact(delta, fake).outcome is Outcome.CONGRUENT_UP_TO_BOUND
