import pytest
from hypothesis import given, strategies as st

from catalan_lab.primes import is_prime, primes_in_class, primes_upto


def trial_division(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@pytest.mark.parametrize("n,expected", [(2, True), (1, False), (0, False), (1000003, True), (1000001, False)])
def test_is_prime_examples(n, expected):
    assert is_prime(n) is expected
    assert trial_division(n) is expected


@pytest.mark.slow
def test_is_prime_agrees_with_trial_division():
    sieve = set(primes_upto(10**6))
    for n in range(10**6 + 1):
        assert is_prime(n) == (n in sieve)
    # the sieve itself is checked against trial division on a prefix
    assert [n for n in range(20000) if trial_division(n)] == primes_upto(19999)


def test_is_prime_trial_division_prefix():
    for n in range(50000):
        assert is_prime(n) == trial_division(n)


@pytest.mark.parametrize(
    "n",
    [
        2**61 - 1,  # Mersenne prime
        18446744073709551557,  # largest 64-bit prime
    ],
)
def test_is_prime_large_primes(n):
    assert is_prime(n)


@pytest.mark.parametrize(
    "n",
    [
        3215031751,  # strong pseudoprime to bases 2, 3, 5, 7
        3825123056546413051,  # strong pseudoprime to bases 2..23
        2**64 - 1,
        (2**31 - 1) * (2**31 - 1),
    ],
)
def test_is_prime_rejects_strong_pseudoprimes(n):
    assert not is_prime(n)


@given(st.integers(min_value=2, max_value=10**6), st.integers(min_value=2, max_value=10**6))
def test_products_are_composite(a, b):
    assert not is_prime(a * b)


def test_primes_in_class_examples():
    assert list(primes_in_class(20, 1)) == [7, 13, 19]
    assert list(primes_in_class(20, 2)) == [2, 5, 11, 17]
    assert list(primes_in_class(20, 0)) == [3]
    assert list(primes_in_class(2, 0)) == []


def test_primes_in_class_partition():
    L = 10**6
    full = primes_upto(L)
    parts = [primes_in_class(L, c) for c in (0, 1, 2)]
    assert sorted(p for part in parts for p in part) == full
    for part in parts:
        assert list(part.primes) == sorted(part.primes)
        assert part.limit == L


def test_primes_in_class_rejects_bad_class():
    with pytest.raises(ValueError):
        primes_in_class(10, 3)
