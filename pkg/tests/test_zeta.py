import math

import numpy as np
import pytest

from dirichlet_bohr import (
    DEFAULT_POLICY,
    DomainError,
    InvalidArgumentError,
    TruncationPolicy,
    almost_prime_zeta,
    bohr_sum,
    direct_sum_oracle,
    prime_zeta,
    riemann_zeta,
)
from dirichlet_bohr.zeta import almost_prime_zetas

N = 10**6


def zeta_oracle(s):
    """[partial sum + integral from N+1, partial sum + integral from N]."""
    n = np.arange(1, N + 1, dtype=float)
    head = math.fsum(n**-s)
    return head + (N + 1) ** (1 - s) / (s - 1), head + N ** (1 - s) / (s - 1)


def prime_zeta_oracle(s, table):
    head = math.fsum(table.primes.astype(float) ** -s)
    return head, head + N ** (1 - s) / (s - 1)


def overlaps(enc, lo, hi, slack=0.0):
    return enc.lower <= hi + slack and lo - slack <= enc.upper


@pytest.mark.parametrize("s", [2.0, 4.0])
def test_riemann_zeta_against_partial_sums(s):
    lo, hi = zeta_oracle(s)
    z = riemann_zeta(s)
    assert overlaps(z, lo, hi, 1e-15)
    assert z.error < 1e-12


def test_riemann_zeta_known_values():
    assert riemann_zeta(2.0).contains(math.pi**2 / 6)
    assert riemann_zeta(4.0).contains(math.pi**4 / 90)
    assert abs(riemann_zeta(60.0).value - 1.0) < 2.0**-59


@pytest.mark.parametrize("bad", [1.0, 0.5, -2.0])
def test_domain_errors(bad):
    for fn in (riemann_zeta, prime_zeta):
        with pytest.raises(DomainError):
            fn(bad)
    with pytest.raises(DomainError):
        almost_prime_zeta(2, bad)


@pytest.mark.parametrize("s, approx", [(2.0, 0.4522474200), (4.0, 0.0769931)])
def test_prime_zeta_against_prime_sum(big_table, s, approx):
    lo, hi = prime_zeta_oracle(s, big_table)
    p = prime_zeta(s)
    assert overlaps(p, lo, hi, 1e-15)
    assert abs(p.value - approx) < 1e-7


def test_prime_zeta_first_term_dominates():
    p = prime_zeta(40.0)
    assert 0 <= p.value - 2.0**-40 <= 2 * 3.0**-40


def test_almost_prime_zeta_small_k():
    assert almost_prime_zeta(0, 3.7).value == 1.0
    assert almost_prime_zeta(0, 3.7).error == 0.0
    s1, p = almost_prime_zeta(1, 4.0), prime_zeta(4.0)
    assert abs(s1.value - p.value) <= s1.error + p.error
    s2 = almost_prime_zeta(2, 4.0)
    closed = (p * p + prime_zeta(8.0)).scale(0.5)
    assert s2.intersects(closed)
    assert abs(s2.value - 0.0049947) < 1e-7


def test_negative_k_rejected():
    with pytest.raises(InvalidArgumentError):
        almost_prime_zetas(-1, 3.0)


@pytest.mark.parametrize("s", [3.0, 4.0, 6.0])
@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_recurrence_matches_direct_sum(big_table, k, s):
    kernel = almost_prime_zeta(k, s)
    oracle = direct_sum_oracle(k, s, N, big_table)
    assert abs(kernel.value - oracle.value) <= kernel.error + oracle.tail_bound


def test_cumulative_sum_matches_direct_sum(big_table):
    s, K = 4.0, 6
    total = sum(almost_prime_zetas(K, s), start=almost_prime_zetas(0, s)[0].scale(0.0))
    n = np.flatnonzero(big_table.omega_array[: N + 1] <= K)
    n = n[n >= 1]
    direct = math.fsum(n.astype(float) ** -s)
    assert abs(total.value - direct) <= total.error + N ** (1 - s) / (s - 1)


@pytest.mark.parametrize("s", [3.0, 4.0])
def test_tail_lemma_holds_numerically(s):
    series = almost_prime_zetas(6, s)
    p = prime_zeta(s)
    for k in range(0, 6):
        assert series[k + 1].lower <= (p * series[k]).upper


def test_almost_prime_zeta_decreasing_in_s():
    grid = np.linspace(2.0, 8.0, 25)
    for k in range(1, 6):
        vals = [almost_prime_zeta(k, float(s)) for s in grid]
        assert all(b.upper < a.lower for a, b in zip(vals, vals[1:]))


def test_bohr_sum_published_targets():
    assert abs(bohr_sum(1.7267).value - 0.5) < 1e-3
    assert abs(bohr_sum(1.2061).value - 1.0) < 1e-3


def test_bohr_sum_large_sigma_against_brute_force(big_table):
    f = bohr_sum(4.0)
    s1 = direct_sum_oracle(1, 8.0, N, big_table)
    s2 = direct_sum_oracle(2, 8.0, N, big_table)
    s3 = direct_sum_oracle(3, 8.0, N, big_table)
    # k >= 3 contributes about sqrt(3**-24)
    head = math.sqrt(s1.value) + math.sqrt(s2.value)
    assert 0 < f.value - head < 2 * math.sqrt(s3.value)


def test_bohr_sum_decreasing():
    grid = np.linspace(1.0, 3.0, 41)
    vals = [bohr_sum(float(x)) for x in grid]
    assert all(b.upper < a.lower for a, b in zip(vals, vals[1:]))


def test_bohr_sum_precondition():
    with pytest.raises(DomainError, match="P\\(2\\*sigma\\) < 1"):
        bohr_sum(0.65)


def test_tighter_policy_stays_consistent():
    loose = TruncationPolicy(zeta_terms=16, moebius_terms=16, k_tail_tolerance=1e-8)
    for sigma in (1.1, 1.5, 2.5):
        a = bohr_sum(sigma, loose)
        b = bohr_sum(sigma, DEFAULT_POLICY)
        c = bohr_sum(sigma, DEFAULT_POLICY.tightened())
        assert a.intersects(b) and b.intersects(c) and a.intersects(c)
        assert c.error <= a.error


@pytest.mark.parametrize(
    "kwargs", [{"zeta_terms": 0}, {"moebius_terms": 0}, {"k_tail_tolerance": 1.0}, {"k_tail_tolerance": 0.0}]
)
def test_policy_validation(kwargs):
    with pytest.raises(InvalidArgumentError):
        TruncationPolicy(**kwargs)
