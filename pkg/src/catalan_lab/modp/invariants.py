"""Intermediate congruences used on the way to the main results.

Each function returns ``(name, lhs, rhs)`` triples (or a pair for single
checks) with both sides as least nonnegative residues, so that sweeps can
report them uniformly.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb

from ..exact import catalan, gen_catalan, iverson, legendre3
from .constants import f_eps, bracket_free_sum
from .field import DenominatorDivisible, reduce_mod


def _sign(e: int) -> int:
    return -1 if e & 1 else 1


def wolstenholme_check(p: int) -> tuple[int, int]:
    """(C(2p, p) mod p^2, C(2p-1, p-1) mod p^3).

    Uses C(2p-1, p-1) = prod_{k<p} (p+k)/k, with every k a unit mod p^3,
    so no big binomials are formed.
    """
    if p < 2:
        raise ValueError("needs a prime p")
    m3 = p**3
    num = den = 1
    for k in range(1, p):
        num = num * (p + k) % m3
        den = den * k % m3
    half = num * pow(den, -1, m3) % m3
    return 2 * half % (p * p), half
def binom_mod_p_triples(p: int, k: int, r: int):
    """C(p-1, k) = (-1)^k and C(p+k+r, p+r) = C(p+k+r, r) = C(k+r, r) mod p."""
    top = p + k + r
    return [
        ("alt", comb(p - 1, k) % p, _sign(k) % p),
        ("upper", comb(top, p + r) % p, comb(top, r) % p),
        ("lower", comb(top, r) % p, comb(k + r, r) % p),
    ]


def catalan_binom_sum_checks(p: int, r: int):
    """Direct sum_{k<p} C(k+r, r) C_k against the bracket-free formula and f_r."""
    direct = sum(comb(k + r, r) * catalan(k) for k in range(p)) % p
    eps = legendre3(p - r - 1)
    return [
        ("formula", direct, reduce_mod(bracket_free_sum(r, eps), p)),
        ("f", direct, reduce_mod(f_eps(r, eps), p)),
    ]


def binom_p_k_mod_p2(p: int, k: int) -> tuple[int, int]:
    """C(p, k) against (p/k)(-1)^(k-1) mod p^2, 1 <= k <= p-1."""
    m = p * p
    return comb(p, k) % m, reduce_mod(Fraction(p * _sign(k - 1), k), m)


def s_double_count(p: int, d: int):
    """Two evaluations of S = sum_{k=0}^p (-1)^k C(p,k) C(2p+d-k,p) C(2k,k+d) mod p^2."""
    m2 = p * p
    m = 2 * p + d
    s = sum(
        _sign(k) * comb(p, k) * comb(2 * p + d - k, p) * comb(2 * k, k + d)
        for k in range(p + 1)
    )
    # exact value from the l = p instance of the two-parameter identity
    exact = 0
    if m % 3 == 0:
        exact = _sign(d) * comb(p, m // 3) * comb(2 * m // 3, p)
    if (p - d) % 3 == 0:
        route1 = reduce_mod(Fraction(-3 * p, m), m2)
    else:
        route1 = 0
    partial = sum(_sign(k) * comb(p, k) * comb(2 * k, k + d) for k in range(d, p))
    if d:
        route2 = reduce_mod(Fraction((2 * _sign(d) - 1) * p, d), m2)
    else:
        route2 = -1 % m2
    full = sum(_sign(k) * comb(p, k) * comb(2 * k, k + d) for k in range(p))
    if d:
        combined = Fraction(-iverson((p - d) % 3 == 0) * 3 * p - (2 * _sign(d) - 1) * p, d)
    else:
        combined = Fraction(iverson(p == 3) + 1)
    return [
        ("exact", s, exact),
        ("via-identity", s % m2, route1),
        ("via-expansion", (s - partial) % m2, route2),
        ("combined", full % m2, reduce_mod(combined, m2)),
    ]


def tail_sum_checks(p: int, d: int):
    """Sums of C_{k+d} and k C_{k+d} over k < p expanded through C_{d,j}.

    Entries whose reduction mod p is undefined are left out.  The combined
    form is only valid for p >= 5; at p = 3 it can disagree (d = 2).
    """
    sym = legendre3(p)
    cd = catalan(d)
    cdj = {j: gen_catalan(d, j) for j in range(1, d + 2)}
    s0 = sum(catalan(k + d) for k in range(p))
    s1 = sum(k * catalan(k + d) for k in range(p))

    r1 = Fraction(sym * cd) + sum(legendre3(p - j) * c for j, c in cdj.items())
    r2 = -sym * Fraction(2, 3) * cd
    r3 = Fraction(0)
    for j, c in cdj.items():
        third = iverson((p - j) % 3 == 0) - Fraction(1, 3)
        r2 += c * third * (2 * legendre3(p - j) - j)
        r3 -= third * j * c
    lhs3 = Fraction(s1) + Fraction(2, 3) * s0
    out = []
    for name, lhs, rhs in (("plain", s0, r1), ("weighted", s1, r2), ("combined", lhs3, r3)):
        try:
            out.append((name, reduce_mod(lhs, p), reduce_mod(rhs, p)))
        except DenominatorDivisible:
            # thirds do not reduce at p = 3
            continue
    return out
