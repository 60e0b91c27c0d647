from fractions import Fraction

import dataclasses

import pytest

from dirichlet_bohr import (
    DomainError,
    OutOfRangeError,
    almost_prime_zeta,
    direct_sum_oracle,
    lattice_enumeration_check,
    lattice_for_degree,
)
from dirichlet_bohr.oracles import (
    FIXTURE_ENV,
    FixtureRecord,
    cached_direct_sum,
    read_fixture,
    write_fixture,
)

from .conftest import DATA


def test_primes_up_to_ten(small_table):
    r = direct_sum_oracle(1, 2.0, 10, small_table)
    exact = Fraction(1, 4) + Fraction(1, 9) + Fraction(1, 25) + Fraction(1, 49)
    assert r.value == pytest.approx(float(exact), rel=1e-15)
    assert r.terms_used == 4
    assert r.tail_bound >= 0.1


def test_no_qualifying_terms(big_table):
    r = direct_sum_oracle(20, 4.0, 10**6, big_table)
    assert r.value == 0.0 and r.terms_used == 0 and r.tail_bound > 0


def test_semiprimes_at_s4(big_table):
    r = direct_sum_oracle(2, 4.0, 10**6, big_table)
    assert r.value == pytest.approx(0.0049947, abs=1e-7)
    assert r.tail_bound < 1e-12


def test_oracle_errors(small_table):
    with pytest.raises(OutOfRangeError):
        direct_sum_oracle(1, 2.0, 10**4, small_table)
    with pytest.raises(DomainError):
        direct_sum_oracle(1, 1.0, 10, small_table)


def test_frozen_fixture_regression(big_table):
    records = read_fixture(DATA / "oracle_fixture.txt")
    assert len(records) == 15
    for rec in records:
        p = rec.parameters
        r = direct_sum_oracle(p["k"], p["s"], p["N"], big_table)
        assert r.value == rec.value and r.tail_bound == rec.tail_bound


def test_oracle_monotone_and_below_kernel(big_table):
    for k in (1, 2, 3):
        values = [direct_sum_oracle(k, 3.0, N, big_table).value for N in (10, 100, 1000, 10**4, 10**5)]
        assert values == sorted(values)
        assert values[-1] <= almost_prime_zeta(k, 3.0).upper


def test_fixture_round_trip(tmp_path):
    recs = [FixtureRecord("direct_sum", {"k": 2, "s": 4.0, "N": 100}, 0.1 + 0.2, 1e-9)]
    path = tmp_path / "f.txt"
    write_fixture(path, recs)
    assert read_fixture(path) == recs


def test_cached_direct_sum_uses_env(tmp_path, monkeypatch, small_table):
    monkeypatch.setenv(FIXTURE_ENV, str(tmp_path / "cache"))
    calls = []

    def factory():
        calls.append(1)
        return small_table

    first = cached_direct_sum(2, 3.0, 500, factory)
    second = cached_direct_sum(2, 3.0, 500, factory)
    assert calls == [1]
    assert first.value == second.value
    assert (tmp_path / "cache" / "oracle_fixture.txt").exists()


def test_cached_direct_sum_without_env(monkeypatch, small_table):
    monkeypatch.delenv(FIXTURE_ENV, raising=False)
    calls = []
    for _ in range(2):
        cached_direct_sum(1, 3.0, 100, lambda: calls.append(1) or small_table)
    assert len(calls) == 2


def test_lattice_check_examples(small_table):
    four = lattice_for_degree(4, small_table)
    assert lattice_enumeration_check(dataclasses.replace(four, integer_weights=(5, 8), integer_bound=10))
    # (3, 1) satisfies 3 + 1 <= 10 but 2**3 * 3 = 24 > 4
    assert not lattice_enumeration_check(dataclasses.replace(four, integer_weights=(1, 1), integer_bound=10))
    assert lattice_enumeration_check(lattice_for_degree(2, small_table))


def test_lattice_check_rejects_degenerate_weights(small_table):
    four = lattice_for_degree(4, small_table)
    assert not lattice_enumeration_check(dataclasses.replace(four, integer_weights=(0, 3)))
    assert not lattice_enumeration_check(dataclasses.replace(four, points=four.points[:-1]))
    # too tight: drops 4 = 2**2
    assert not lattice_enumeration_check(dataclasses.replace(four, integer_weights=(2, 3), integer_bound=3))
