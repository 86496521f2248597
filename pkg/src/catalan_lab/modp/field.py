"""Residues modulo a prime (or prime power) and reduction of exact rationals."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from ..primes import is_prime


class DenominatorDivisible(ArithmeticError):
    """The modulus divides the denominator; the residue is undefined."""


class Prime(int):
    """An int that passed the deterministic primality test."""

    def __new__(cls, p):
        p = int(p)
        if not (0 < p < 2**64 and is_prime(p)):
            raise ValueError(f"{p} is not a 64-bit prime")
        return super().__new__(cls, p)


def reduce_mod(q, modulus: int) -> int:
    """Least nonnegative residue of the rational ``q`` modulo ``modulus``."""
    q = Fraction(q)
    try:
        inv = pow(q.denominator, -1, modulus)
    except ValueError:
        raise DenominatorDivisible(
            f"denominator {q.denominator} not invertible mod {modulus}"
        ) from None
    return q.numerator * inv % modulus


@dataclass(frozen=True)
class Fp:
    residue: int
    p: int

    def __post_init__(self):
        if not 0 <= self.residue < self.p:
            raise ValueError(f"residue {self.residue} out of range for p={self.p}")

    def _coerce(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ValueError(f"moduli differ: {self.p} vs {other.p}")
            return other.residue
        if isinstance(other, (int, Fraction)):
            return reduce_mod(other, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Fp((self.residue + o) % self.p, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Fp((self.residue - o) % self.p, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Fp((o - self.residue) % self.p, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Fp(self.residue * o % self.p, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.residue % self.p, self.p)

    def inverse(self) -> "Fp":
        if self.residue == 0:
            raise ZeroDivisionError(f"0 has no inverse mod {self.p}")
        return Fp(pow(self.residue, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * Fp(o, self.p).inverse()

    def __str__(self):
        return str(self.residue)

    def __int__(self):
        return self.residue


def fp_reduce(q, p: int) -> Fp:
    return Fp(reduce_mod(q, p), p)


_TABLE_LIMIT = 1 << 16


@lru_cache(maxsize=64)
def _factorial_tables(p: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """k! and 1/k! mod p for k < p; built once per prime, read-only afterwards."""
    fact = [1] * p
    for k in range(1, p):
        fact[k] = fact[k - 1] * k % p
    inv = [1] * p
    inv[p - 1] = pow(fact[p - 1], -1, p)
    for k in range(p - 1, 0, -1):
        inv[k - 1] = inv[k] * k % p
    return tuple(fact), tuple(inv)


def _small_binom(n: int, k: int, p: int) -> int:
    # 0 <= k <= n < p
    if p <= _TABLE_LIMIT:
        fact, inv = _factorial_tables(p)
        return fact[n] * inv[k] * inv[n - k] % p
    num = den = 1
    for j in range(k):
        num = num * (n - j) % p
        den = den * (j + 1) % p
    return num * pow(den, -1, p) % p


def binom_mod(n: int, k: int, p: int) -> Fp:
    """C(n, k) mod p by Lucas' theorem over base-p digits."""
    if n < 0:
        raise ValueError("binom_mod needs n >= 0")
    if k < 0 or k > n:
        return Fp(0, p)
    res = 1
    while k:
        n, ni = divmod(n, p)
        k, ki = divmod(k, p)
        if ki > ni:
            return Fp(0, p)
        res = res * _small_binom(ni, ki, p) % p
    return Fp(res, p)


def harmonic_sum_mod(values, p: int) -> Fp:
    """sum_{k>=1} values[k-1] / k mod p, with k running below p.

    The sum is formed exactly as an integer over lcm(1..n) and reduced once.
    """
    n = len(values)
    if n >= p:
        raise DenominatorDivisible(f"harmonic weight 1/{p} in a sum mod {p}")
    L = lcm(*range(1, n + 1)) if n else 1
    total = sum(v * (L // k) for k, v in enumerate(values, start=1))
    return Fp(total * pow(L, -1, p) % p, p)
