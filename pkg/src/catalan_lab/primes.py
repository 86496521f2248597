"""Deterministic primality and prime enumeration by residue class mod 3."""
from __future__ import annotations

from dataclasses import dataclass

_SMALL = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
# First 12 primes as Miller-Rabin bases are exact for n < 3.3e24 (covers 2^64).
_WITNESSES = _SMALL


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _SMALL:
        if n % q == 0:
            return n == q
    if n < 37 * 37:
        return True
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_upto(limit: int) -> list[int]:
    """Sieve of Eratosthenes."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(limit**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, limit + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


@dataclass(frozen=True)
class PrimeList:
    primes: tuple[int, ...]
    limit: int

    def __iter__(self):
        return iter(self.primes)

    def __len__(self):
        return len(self.primes)


def primes_in_class(limit: int, c: int) -> PrimeList:
    """Primes p <= limit with p = c (mod 3), ascending."""
    if c not in (0, 1, 2):
        raise ValueError(f"class must be 0, 1 or 2, got {c}")
    return PrimeList(tuple(p for p in primes_upto(limit) if p % 3 == c), limit)


def primes_between(lo: int, hi: int) -> list[int]:
    return [p for p in primes_upto(hi) if p >= lo]
