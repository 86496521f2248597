"""Exact rational constants that Catalan sums reduce to modulo p.

Everything here is a function of the residue class of p mod 3 only, never of
p itself, which is what makes the constants F(d, r) and G(d, r) well defined.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from ..exact import binom_int, binom_rat, catalan, gen_catalan, iverson, legendre3, stirling2


def _sign(e: int) -> int:
    return -1 if e & 1 else 1


def epsilon_vector(c: int, r: int) -> tuple[int, ...]:
    """eps_i = ((c - i - 1)/3) for i = 0..r.

    ``c`` may be a concrete prime or just its class mod 3; only c mod 3 matters.
    """
    return tuple(legendre3(c - i - 1) for i in range(r + 1))


def _f_sum(i: int, eps: int) -> Fraction:
    total = Fraction(0)
    for k in range((i + 1 - eps) // 3 + 1):
        upper = k + Fraction(i - 2 + eps, 3)
        total += _sign(k + eps) * binom_int(i + 2, 3 * k + 1 + eps) * binom_rat(upper, i)
    return total


@lru_cache(maxsize=None)
def f_eps(i: int, eps: int) -> Fraction:
    """f_i(eps): the value of sum_{k<p} C(k+i, i) C_k mod p when eps = ((p-i-1)/3).

    The upper argument (i - 2 + eps)/3 of the inner binomial is kept as an
    exact rational; it is not rounded.
    """
    if i < 0 or eps not in (-1, 0, 1):
        raise ValueError(f"f_eps needs i >= 0 and eps in {{-1,0,1}}, got ({i}, {eps})")
    total = _f_sum(i, eps)
    total += iverson(eps == 0 and (i + 1) % 3 == 0)
    total += iverson(i == 0) * (3 * iverson(eps == -1) - 1)
    return total


def bracket_free_sum(r: int, eps: int) -> Fraction:
    """The bracket-free sum used for large primes (p >= 4r + 7)."""
    return _f_sum(r, eps)


def shifted_sum_rhs(d: int, r: int, eps: tuple[int, ...]) -> Fraction:
    """Right side for (-1)^r sum_{k<p} C(k+r, r) C_{k+d}, given eps_0..eps_r."""
    total = Fraction(sum(binom_int(d - 1 - k, r) * catalan(k) for k in range(d)))
    for i in range(r + 1):
        total += _sign(i) * binom_int(d, r - i) * f_eps(i, eps[i])
    return total


def three_case_d0_value(p: int, r: int) -> Fraction:
    """Three-case closed form for sum_{k<p} C(k+r, r) C_k, keyed on (p - r) mod 3.

    Kept exactly as the three-case formula reads.  It lacks the i = 0
    correction that f_0 carries, so at r = 0 it disagrees with the direct sum.
    """
    case = (p - r) % 3
    total = Fraction(0)
    if case == 0:
        for k in range((r + 2) // 3 + 1):
            total += _sign(k - 1) * binom_int(r + 2, 3 * k) * binom_rat(k + Fraction(r - 3, 3), r)
    elif case == 1:
        for k in range((r + 1) // 3 + 1):
            total += _sign(k) * binom_int(r + 2, 3 * k + 1) * binom_rat(k + Fraction(r - 2, 3), r)
        total += iverson(p == 3)
    else:
        for k in range(r // 3 + 1):
            total += _sign(k - 1) * binom_int(r + 2, 3 * k + 2) * binom_rat(k + Fraction(r - 1, 3), r)
    return total


@lru_cache(maxsize=None)
def harmonic_constants(d: int) -> tuple[Fraction, Fraction]:
    """(A, B) with sum_{0<k<p-d} C_{k+d}/k = A + B (p/3) mod p for primes p >= 5."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    cdj = {j: Fraction(gen_catalan(d, j), j) for j in range(1, d + 2)}
    a = 2 * sum(Fraction(catalan(d - k), k) for k in range(1, d + 1))
    a += sum((2 * _sign(j) - 1) * v for j, v in cdj.items())
    a += Fraction(3, 2) * sum(v for j, v in cdj.items() if j % 3)
    b = Fraction(3, 2) * sum(legendre3(j) * v for j, v in cdj.items())
    return Fraction(a), Fraction(b)


@lru_cache(maxsize=None)
def fg_constants(d: int, r: int, c: int) -> Fraction:
    """F(d, r) for c = 1 and G(d, r) for c = 2.

    For every prime p > max(d, r, 3) with p = c (mod 3),
    sum_{k=1}^{p-1} k^r C_{k+d} is congruent to the returned rational.
    Powers k^r are expanded in rising binomials C(k+s, s) through Stirling
    numbers, each such sum is evaluated by the shifted-sum closed form at
    d+1, and for r = 0 the extra k = p term C_{p+d} = 2 C_d is removed.
    """
    if d < 0 or r < 0:
        raise ValueError("d and r must be nonnegative")
    if c not in (1, 2):
        raise ValueError(f"residue class must be 1 or 2, got {c}")
    eps = epsilon_vector(c, r)
    total = Fraction(0)
    for s in range(r + 1):
        rising = _sign(s) * shifted_sum_rhs(d + 1, s, eps)
        total += _sign(s) * factorial(s) * stirling2(r, s) * rising
    total *= _sign(r)
    if r == 0:
        total -= 2 * catalan(d)
    return total
