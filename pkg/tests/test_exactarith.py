from math import factorial

import pytest
from hypothesis import given, strategies as st

from wlpci.exactarith import (
    binomial,
    binomial_mod,
    check_prime,
    factorial_valuation,
    is_prime,
    kummer_carries,
    multinomial_mod,
    padic_order,
)

from oracles import binomial_falling, multinomial, valuation_brute

PRIMES = [2, 3, 5, 7, 11]


def test_binomial_examples():
    assert binomial(3, -1) == 0
    assert binomial(0, 0) == 1
    assert binomial(5, 2) == 10
    assert binomial(2, 5) == 0


def test_binomial_negative_upper_index_uses_falling_factorial():
    for m in range(-8, 0):
        for i in range(0, 8):
            assert binomial(m, i) == binomial_falling(m, i)


def test_pascal_rule_on_grid():
    for m in range(1, 41):
        for i in range(1, 41):
            assert binomial(m, i) == binomial(m - 1, i - 1) + binomial(m - 1, i)


def test_binomial_mod_examples():
    assert binomial_mod(5, 2, 3) == 1
    assert binomial_mod(9, 3, 3) == 0
    for p in PRIMES:
        assert binomial_mod(17, 0, p) == 1


def test_binomial_mod_matches_exact_reduction_on_grid():
    for p in PRIMES:
        for m in range(61):
            for i in range(61):
                assert binomial_mod(m, i, p) == binomial(m, i) % p


def test_binomial_mod_rejects_bad_input():
    with pytest.raises(ValueError):
        binomial_mod(5, 2, 4)
    with pytest.raises(ValueError):
        binomial_mod(-1, 2, 3)


@given(st.integers(0, 10**6), st.integers(0, 10**6), st.sampled_from([3, 5, 7, 101, 65521]))
def test_binomial_mod_large_arguments(m, i, p):
    if i <= m and m < 3000:
        assert binomial_mod(m, i, p) == binomial(m, i) % p
    else:
        assert 0 <= binomial_mod(m, i, p) < p


@given(st.lists(st.integers(0, 9), min_size=1, max_size=5), st.sampled_from(PRIMES))
def test_multinomial_mod(parts, p):
    assert multinomial_mod(parts, p) == multinomial(parts) % p


def test_factorial_valuation_examples():
    assert factorial_valuation(10, 3) == 4
    assert factorial_valuation(0, 7) == 0
    assert factorial_valuation(4, 5) == 0


def test_factorial_valuation_matches_padic_order():
    for p in PRIMES:
        for m in range(41):
            assert factorial_valuation(m, p) == padic_order(factorial(m), p)


def test_padic_order_examples():
    assert padic_order(54, 3) == 3
    assert padic_order(1, 5) == 0
    assert padic_order(-45, 3) == 2
    with pytest.raises(ValueError):
        padic_order(0, 3)


def test_kummer_carries_match_valuation():
    for p in PRIMES:
        for m in range(61):
            for i in range(m + 1):
                assert padic_order(binomial(m, i), p) == kummer_carries(i, m - i, p)


@given(st.integers(-10**9, 10**9).filter(lambda x: x != 0), st.sampled_from(PRIMES))
def test_padic_order_property(x, p):
    k = padic_order(x, p)
    assert x % p**k == 0 and (x // p**k) % p != 0
    assert k == valuation_brute(abs(x), p)


def test_primality():
    assert [q for q in range(30) if is_prime(q)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    with pytest.raises(ValueError):
        check_prime(9)
