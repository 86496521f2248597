"""Exact integer and rational combinatorial primitives.

Binomial coefficients follow the product definition for any upper argument,
so ``binom_int(-3, 2) == 6`` rather than 0.  Rationals are
:class:`fractions.Fraction`, which is always kept in lowest terms with a
positive denominator.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

__all__ = [
    "Fraction",
    "binom_int",
    "binom_rat",
    "catalan",
    "gen_catalan",
    "shifted_catalan",
    "stirling2",
    "legendre3",
    "iverson",
]


def iverson(cond) -> int:
    """[A]: 1 if the assertion holds, else 0."""
    return 1 if cond else 0


def binom_int(x: int, k: int) -> int:
    if k < 0:
        return 0
    if x >= 0:
        return comb(x, k)
    # (-y choose k) = (-1)^k (y+k-1 choose k)
    v = comb(k - x - 1, k)
    return -v if k & 1 else v


def binom_rat(x, k: int) -> Fraction:
    """Binomial coefficient with a rational upper argument."""
    if k < 0:
        return Fraction(0)
    x = Fraction(x)
    num = Fraction(1)
    for j in range(k):
        num *= x - j
    return num / factorial(k)


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    if n < 0:
        raise ValueError(f"catalan index must be nonnegative, got {n}")
    return comb(2 * n, n) // (n + 1)


def gen_catalan(n: int, j: int) -> int:
    """C_{n,j} = 2 C(2n, n-j) - C(2n, n-1-j) - C(2n, n+1-j) for 0 <= j <= n+1."""
    if n < 0 or not 0 <= j <= n + 1:
        raise ValueError(f"gen_catalan needs 0 <= j <= n+1, got n={n}, j={j}")
    m = 2 * n
    return 2 * binom_int(m, n - j) - binom_int(m, n - 1 - j) - binom_int(m, n + 1 - j)


def shifted_catalan(n: int, k: int) -> int:
    """C_n^{(k)} = C(2n+k, n) - C(2n+k, n-1); defined for all integers."""
    top = 2 * n + k
    return binom_int(top, n) - binom_int(top, n - 1)


def stirling2(r: int, s: int) -> int:
    """Stirling number of the second kind from the explicit alternating sum."""
    if not 0 <= s <= r:
        raise ValueError(f"stirling2 needs 0 <= s <= r, got r={r}, s={s}")
    total = sum((-1) ** (s - t) * comb(s, t) * t**r for t in range(s + 1))
    q, rem = divmod(total, factorial(s))
    assert rem == 0
    return q


def legendre3(a: int) -> int:
    """(a/3): the element of {-1, 0, 1} congruent to a modulo 3."""
    r = a % 3
    return -1 if r == 2 else r
