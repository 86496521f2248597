"""Both sides of the integer identities, evaluated exactly.

Each ``eval_*`` returns all sides as a tuple so callers can report the actual
values when a comparison fails.  Summations run over the full index range
written in the identity; ``fast=True`` skips terms whose binomial factors are
known to vanish and must agree with the literal transcription.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import binom_int, catalan, gen_catalan, iverson, legendre3, shifted_catalan


def _sign(e: int) -> int:
    return -1 if e & 1 else 1


def _ceil3(m: int) -> int:
    return -(-m // 3)


@dataclass(frozen=True)
class IdentityCheck:
    check_id: str
    params: tuple[tuple[str, int], ...]
    sides: tuple
    passed: bool

    @classmethod
    def of(cls, check_id: str, params: Sequence[tuple[str, int]], sides: Sequence):
        sides = tuple(sides)
        return cls(check_id, tuple(params), sides, all(s == sides[0] for s in sides))


# -- two-parameter identities --------------------------------------------------


def _alternating_lhs(l: int, m: int, n: int, fast: bool) -> int:
    """sum_{k=0}^{l} (-1)^{m-k} C(l,k) C(m-k,n) C(2k, k-2l+m)."""
    ks = range(l + 1)
    if fast:
        # C(2k, k-2l+m) != 0 needs |2l - m| <= k
        ks = range(max(0, abs(2 * l - m)), l + 1)
    total = 0
    for k in ks:
        total += (
            _sign(m - k)
            * binom_int(l, k)
            * binom_int(m - k, n)
            * binom_int(2 * k, k - 2 * l + m)
        )
    return total


def eval_identity_guo(l: int, m: int, fast: bool = False) -> tuple[int, int]:
    lhs = _alternating_lhs(l, m, l, fast)
    c = _ceil3(m)
    rhs = iverson(m % 3 == 0) * binom_int(l, c) * binom_int(2 * c, l)
    return lhs, rhs


def eval_identity_main(l: int, m: int, n: int, fast: bool = False) -> tuple[int, int]:
    lhs = _alternating_lhs(l, m, n, fast)
    ks = range(l + 1)
    if fast:
        # C(2k, n) needs 2k >= n; the last factor needs m+n-3k-l >= 0
        hi = min(l, (m + n - l) // 3) if m + n - l >= 0 else -1
        ks = range((n + 1) // 2, hi + 1)
    rhs = 0
    for k in ks:
        rhs += binom_int(l, k) * binom_int(2 * k, n) * binom_int(n - l, m + n - 3 * k - l)
    return lhs, rhs


def eval_identity_cor11(l: int, m: int, j: int, fast: bool = False) -> tuple[int, int]:
    if j not in (1, 2):
        raise ValueError(f"j must be 1 or 2, got {j}")
    lhs = _alternating_lhs(l, m, l + j, fast)
    c = _ceil3(m)
    if j == 1:
        factor = 1 - iverson((m - 1) % 3 == 0)
    else:
        factor = 1 + iverson((m + 1) % 3 == 0)
    rhs = factor * binom_int(l, c) * binom_int(2 * c, l + j)
    return lhs, rhs


def eval_decomposition(d: int, k: int) -> tuple[int, int]:
    """C_{k+d} against C_d C(2k,k) + sum_j C_{d,j} C(2k,k+j)."""
    rhs = catalan(d) * binom_int(2 * k, k)
    for j in range(1, d + 2):
        rhs += gen_catalan(d, j) * binom_int(2 * k, k + j)
    return catalan(k + d), rhs


def eval_shifted_decomposition(d: int, j: int) -> tuple[int, int]:
    """C_{d,j} against C_{d-j}^{(2j)} - C_{d-j+1}^{(2j-2)}."""
    return gen_catalan(d, j), shifted_catalan(d - j, 2 * j) - shifted_catalan(d - j + 1, 2 * j - 2)


# -- Catalan recurrences -------------------------------------------------------


def eval_recurrence_1_19(d: int) -> tuple[int, Fraction, Fraction, Fraction]:
    prefix = sum(catalan(k) for k in range(d))
    cdj = [gen_catalan(d, j) for j in range(d + 2)]
    forms = []
    for delta in (0, 1):
        v = Fraction((1 - 2 * delta) * prefix + 1 + delta)
        v += _sign(delta) * sum(legendre3(i - delta) * cdj[i + 1] for i in range(d + 1))
        forms.append(v)
    third = Fraction(1, 2) * sum((1 - 3 * iverson(j % 3 == 0)) * cdj[j] for j in range(1, d + 2))
    forms.append(third + Fraction(3, 2))
    for v in forms:
        if v.denominator != 1:
            raise ArithmeticError(f"non-integral recurrence form at d={d}: {v}")
    return (catalan(d), *forms)


def eval_recurrence_1_20(d: int) -> tuple[int, int, int]:
    lhs = sum(k * catalan(d - k) for k in range(d + 1))
    first = second = 0
    for j in range(1, d + 2):
        w = 2 * binom_int(2 * d, d - j) - (d + 1) * gen_catalan(d, j)
        first += legendre3(j - 1) * w
        second += legendre3(j + 1) * w
    return lhs, first - d, second + 2 * d + 1


def eval_recurrence_1_21(d: int) -> tuple[Fraction, Fraction, Fraction]:
    jc = {j: j * gen_catalan(d, j) for j in range(1, d + 2)}
    left = sum((Fraction(k) - Fraction(2, 3)) * catalan(d - k) for k in range(1, d + 1))
    left += Fraction(1, 3) * sum(jc.values())
    mid = sum(v for j, v in jc.items() if j % 3 == 1) - d + Fraction(2, 3)
    right = sum(v for j, v in jc.items() if j % 3 == 2) + 2 * d - Fraction(1, 3)
    return Fraction(left), Fraction(mid), Fraction(right)


# -- sweep driver --------------------------------------------------------------

# check id -> (parameter names, evaluator); "j" for rem1.3 ranges over 1..d+1.
IDENTITY_CHECKS = {
    "eq1.0": (("l", "m"), lambda l, m: eval_identity_guo(l, m, fast=True)),
    "eq1.1": (("l", "m", "n"), lambda l, m, n: eval_identity_main(l, m, n, fast=True)),
    "eq1.2": (("l", "m"), lambda l, m: eval_identity_cor11(l, m, 1, fast=True)),
    "eq1.3": (("l", "m"), lambda l, m: eval_identity_cor11(l, m, 2, fast=True)),
    "eq1.13": (("d", "k"), eval_decomposition),
    "eq1.19": (("d",), eval_recurrence_1_19),
    "eq1.20": (("d",), eval_recurrence_1_20),
    "eq1.21": (("d",), eval_recurrence_1_21),
    "rem1.3": (("d",), None),
}


def identity_tuples(check_id: str, ranges: dict[str, int]) -> Iterable[tuple[int, ...]]:
    """Parameter tuples for one check, or nothing if a bound is missing."""
    names, _ = IDENTITY_CHECKS[check_id]
    if any(n not in ranges for n in names):
        return []
    grids = [range(ranges[n] + 1) for n in names]
    if check_id == "rem1.3":
        return [(d, j) for (d,) in itertools.product(*grids) for j in range(1, d + 2)]
    return list(itertools.product(*grids))


def run_identity(check_id: str, params: tuple[int, ...]) -> IdentityCheck:
    if check_id == "rem1.3":
        d, j = params
        return IdentityCheck.of(check_id, (("d", d), ("j", j)), eval_shifted_decomposition(d, j))
    names, fn = IDENTITY_CHECKS[check_id]
    return IdentityCheck.of(check_id, tuple(zip(names, params)), fn(*params))


def sweep_identities(
    ranges: dict[str, int], checks: Iterable[str] | None = None
) -> list[IdentityCheck]:
    """Evaluate every requested identity over the Cartesian product of ``ranges``.

    ``ranges`` maps parameter names (l, m, n, d, k) to inclusive upper
    bounds.  A check whose parameters are not all bounded is skipped.
    """
    if any(v < 0 for v in ranges.values()):
        raise ValueError("bounds must be nonnegative")
    ids = sorted(checks if checks is not None else IDENTITY_CHECKS)
    out = [run_identity(c, t) for c in ids for t in identity_tuples(c, ranges)]
    out.sort(key=lambda r: (r.check_id, tuple(v for _, v in r.params)))
    return out
