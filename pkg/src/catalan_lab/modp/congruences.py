"""Catalan and central-binomial sums modulo p: direct sums against closed forms.

Every left side is an exact integer sum reduced once at the end (harmonic
sums are put over a common denominator first).  Right sides are exact
rationals reduced with :func:`fp_reduce`.  The two never share code.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, lcm

from ..exact import catalan, gen_catalan, iverson, legendre3
from ..primes import is_prime
from .constants import epsilon_vector, fg_constants, harmonic_constants, shifted_sum_rhs
from .field import Fp, fp_reduce, harmonic_sum_mod

CENTRAL_PARTS = ("sum", "weighted", "harmonic")


def _sign(e: int) -> int:
    return -1 if e & 1 else 1


def _require_prime(p: int):
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


# -- central binomial sums ----------------------------------------------------


def central_sum_closed_form(p: int, d: int, part: str) -> Fraction:
    eps = legendre3(p - d)
    if part == "sum":
        return Fraction(eps)
    if part == "weighted":
        return (iverson((p - d) % 3 == 0) - Fraction(1, 3)) * (2 * eps - d) - iverson(p == 3)
    if part == "harmonic":
        if d == 0:
            return Fraction(-iverson(p == 3))
        return Fraction(-1 + 2 * _sign(d) + 3 * iverson((p - d) % 3 == 0), d)
    raise ValueError(f"unknown part {part!r}")


def central_sum_direct(p: int, d: int, part: str) -> Fp:
    if part == "sum":
        return Fp(sum(comb(2 * k, k + d) for k in range(p)) % p, p)
    if part == "weighted":
        return Fp(sum(k * comb(2 * k, k + d) for k in range(1, p)) % p, p)
    if part == "harmonic":
        return harmonic_sum_mod([comb(2 * k, k + d) for k in range(1, p)], p)
    raise ValueError(f"unknown part {part!r}")


def eval_thm12(p: int, d: int, part: str) -> tuple[Fp, Fp]:
    """sum_k C(2k, k+d) w(k) with w in {1, k, 1/k}, direct vs closed form."""
    _require_prime(p)
    if not 0 <= d <= p:
        raise ValueError(f"need 0 <= d <= p, got d={d}, p={p}")
    return central_sum_direct(p, d, part), fp_reduce(central_sum_closed_form(p, d, part), p)


def central_sum_table(primes):
    """Yield ``(p, {part: [lhs for d = 0..p]})`` for ascending ``primes``.

    Shares exact prefix sums over k between primes, so a sweep over all
    p <= P costs O(P^2) big-integer additions instead of O(P^3).  The
    harmonic sums carry the common factor L = lcm(1..P-1); for each p the
    p-part of L is divided out exactly before the single reduction.
    """
    primes = sorted(primes)
    if not primes:
        return
    top = primes[-1]
    big_l = lcm(*range(1, top)) if top > 1 else 1
    s0 = [0] * (top + 1)
    s1 = [0] * (top + 1)
    sh = [0] * (top + 1)
    row = [1]  # row 2k of Pascal's triangle
    it = iter(primes)
    nxt = next(it)
    for k in range(top):
        if k:
            for _ in range(2):
                row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
        wk = big_l // k if k else 0
        for d in range(min(k, top) + 1):
            b = row[k + d]
            s0[d] += b
            if k:
                s1[d] += k * b
                sh[d] += b * wk
        while nxt is not None and nxt == k + 1:
            p = nxt
            a, lp = 0, big_l
            while lp % p == 0:
                lp //= p
                a += 1
            inv = pow(lp, -1, p)
            harm = []
            for d in range(p + 1):
                q, rem = divmod(sh[d], p**a)
                assert rem == 0
                harm.append(Fp(q * inv % p, p))
            yield p, {
                "sum": [Fp(s0[d] % p, p) for d in range(p + 1)],
                "weighted": [Fp(s1[d] % p, p) for d in range(p + 1)],
                "harmonic": harm,
            }
            nxt = next(it, None)


# -- harmonic Catalan sums ------------------------------------------------------


def harmonic_catalan_closed_form(p: int, d: int) -> Fraction:
    total = Fraction(-iverson(p == 3) * catalan(d))
    for j in range(1, d + 2):
        coef = -1 + 2 * _sign(j) + 3 * iverson((p - j) % 3 == 0)
        total += Fraction(coef * gen_catalan(d, j), j)
    return total


def eval_cong_1_7(p: int, d: int) -> tuple[Fp, Fp]:
    """sum_{k=1}^{p-1} C_{k+d}/k, direct vs closed form."""
    _require_prime(p)
    if not 0 <= d < p:
        raise ValueError(f"need 0 <= d < p, got d={d}, p={p}")
    lhs = harmonic_sum_mod([catalan(k + d) for k in range(1, p)], p)
    return lhs, fp_reduce(harmonic_catalan_closed_form(p, d), p)


def truncated_harmonic_direct(p: int, d: int) -> Fp:
    """sum_{0<k<p-d} C_{k+d}/k mod p."""
    return harmonic_sum_mod([catalan(k + d) for k in range(1, p - d)], p)


def eval_truncated_harmonic(p: int, d: int) -> tuple[Fp, Fp]:
    _require_prime(p)
    if p < 5:
        raise ValueError("truncated harmonic constants need p >= 5")
    a, b = harmonic_constants(d)
    return truncated_harmonic_direct(p, d), fp_reduce(a + b * legendre3(p), p)


# -- rising-binomial and power sums ------------------------------------------


def eval_cong_1_15(p: int, d: int, r: int) -> tuple[Fp, Fp]:
    """(-1)^r sum_{k<p} C(k+r, r) C_{k+d} against its closed form."""
    _require_prime(p)
    if not (0 <= d < p and 0 <= r < p):
        raise ValueError(f"need 0 <= d, r < p, got d={d}, r={r}, p={p}")
    lhs = _sign(r) * sum(comb(k + r, r) * catalan(k + d) for k in range(p))
    rhs = shifted_sum_rhs(d, r, epsilon_vector(p, r))
    return Fp(lhs % p, p), fp_reduce(rhs, p)


def weighted_sum_closed_form(p: int, d: int, r: int) -> Fraction:
    sym = legendre3(p)
    if r == 0:
        return Fraction(3 * sym - 1, 2) + sum(catalan(k) for k in range(d))
    if r == 1:
        return (
            Fraction(d + 1, 2) * (1 - sym)
            - sym * d
            - sum(k * catalan(d - k) for k in range(d + 1))
        )
    if r == 2:
        return (
            Fraction(9 * d * d + 6 * d - 1, 6) * sym
            - Fraction((d + 1) ** 2, 2)
            - iverson(p == 3)
            + sum(k * k * catalan(d - k) for k in range(1, d + 1))
        )
    raise ValueError(f"r must be 0, 1 or 2, got {r}")


def eval_cor13(p: int, d: int, r: int) -> tuple[Fp, Fp]:
    """sum_{k<p} k^r C_{k+d} for r in {0, 1, 2}, direct vs closed form."""
    _require_prime(p)
    if not 0 <= d < p:
        raise ValueError(f"need 0 <= d < p, got d={d}, p={p}")
    lhs = sum(k**r * catalan(k + d) for k in range(p))
    return Fp(lhs % p, p), fp_reduce(weighted_sum_closed_form(p, d, r), p)


def oracle_power_sum(p: int, d: int, r: int) -> Fp:
    """sum_{k=1}^{p-1} k^r C_{k+d} mod p by exact summation."""
    _require_prime(p)
    return Fp(sum(k**r * catalan(k + d) for k in range(1, p)) % p, p)


def eval_fg(p: int, d: int, r: int) -> tuple[Fp, Fp]:
    """Direct power sum against F(d, r) or G(d, r) chosen by p mod 3."""
    _require_prime(p)
    if p <= 3 or p <= max(d, r):
        raise ValueError(f"need p > max(d, r, 3), got p={p}, d={d}, r={r}")
    return oracle_power_sum(p, d, r), fp_reduce(fg_constants(d, r, p % 3), p)


def catalan_shift(p: int, k: int) -> tuple[Fp, Fp]:
    """(C_{p+k} mod p, 2 C_k mod p) for 0 <= k <= p-2."""
    _require_prime(p)
    if not 0 <= k <= p - 2:
        raise ValueError(f"need 0 <= k <= p-2, got k={k}, p={p}")
    return Fp(catalan(p + k) % p, p), Fp(2 * catalan(k) % p, p)
