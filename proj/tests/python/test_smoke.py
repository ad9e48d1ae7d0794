"""Smoke tests for the python bindings."""

import math

import pytest

import primelab as pl


@pytest.fixture(scope="module")
def sieve():
    return pl.Sieve(100_000)


def test_primality_and_witnesses(sieve):
    assert pl.is_prime(97)
    assert not pl.is_prime(91)
    assert pl.comp_witness(4) == (2, 2)
    assert pl.comp_witness(25) == (5, 5)
    assert pl.comp_witness(7) is None
    assert sieve.prime_count(10) == 4
    assert sieve.is_prime(99_991)


def test_factorize_and_certificates():
    assert pl.factorize(12) == {2: 2, 3: 1}
    assert pl.factorize(15552) == {2: 6, 3: 5}
    cert = pl.pratt_generate(97)
    assert pl.pratt_verify(97, cert)
    cert.generator = 1
    assert not pl.pratt_verify(97, cert)
    assert str(pl.pratt_generate(7)) == "7:3(2^1=2:1,3^1=3:2(2^1=2:1))"


def test_packing_machine():
    assert pl.tm_run(4)["outcome"] == "accepted"
    assert (pl.tm_run(4)["a"], pl.tm_run(4)["b"]) == (2, 2)
    assert pl.tm_run(6)["b"] == 3
    assert pl.tm_run(7, 100_000)["outcome"] == "fuel_exhausted"


def test_beaver():
    run = pl.beaver_run(6)
    assert run["classification"] == "composite"
    assert run["factor_log"] == [(2, 3, 6)]
    assert pl.beaver_run(7)["classification"] == "prime"
    max_steps, argmax = pl.pb_profile(10)
    assert max_steps >= 1 and 2 <= argmax <= 10


def test_schemata():
    assert not pl.comp_d("window:3", 25)
    assert pl.prime_d("window:3", 25)  # the schema's blind spot
    assert pl.omissions("window:3", 30) == [25]
    assert pl.farey_window(12, 3) == [(2, 6), (3, 4)]
    assert pl.delta_square(6) == {"a": 2, "b": 3, "area": 6, "perimeter": 10}
    assert pl.delta_square(11) is None


def test_goldbach(sieve):
    record = pl.extract(sieve, 8)
    assert (record["p"], record["q"]) == (3, 5)
    assert not record["counterexample"]
    assert pl.extract_verified(sieve, 123_456)
    assert pl.wgc_equivalence_check(200, sieve)


def test_zeta(sieve):
    assert pl.mu_s(4, 2.0) == pytest.approx(0.0625)
    assert pl.zeta_partial(2.0, 100_000).real == pytest.approx(math.pi**2 / 6, abs=1e-4)
    assert pl.von_mangoldt(8) == pytest.approx(math.log(2))
    assert pl.von_mangoldt(6) == 0.0
    lhs, rhs, delta = pl.log_deriv_compare(2.0, 10_000, 10_000, sieve)
    assert abs(delta) < 1e-3
    assert pl.reflection_check() == pytest.approx(-1 / 12, abs=1e-6)
    members, passes = pl.comp_lfp(10)
    assert members == [4, 6, 8, 9, 10]
    assert passes == 1


def test_stats(sieve):
    value, iterations = pl.phi_fixed_point(1.0, 1e-12)
    assert value == pytest.approx((1 + math.sqrt(5)) / 2, abs=1e-12)
    assert iterations <= 100
    assert pl.depth(65536)["k"] == 4
    assert pl.tiling_count(6) == (4, 2)
    assert pl.bounded_layer([0, 0, 1, 0], "sigma") == [0, 0, 1, 1]
    rho, approx, ratio = pl.rho(sieve, 100_000)
    assert 0.8 < ratio < 1.25
    assert pl.cost_of_knowledge(3) == pytest.approx(1 / math.log(3))
