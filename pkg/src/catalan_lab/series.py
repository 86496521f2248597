"""Truncated bivariate polynomials in s, t over the integers.

Used to replay the generating-function argument for the three-parameter
binomial identity: the coefficient of s^m t^n in

    ((s + s t)^2 + s (1 - s - s t)^2) ** l

equals both sides of the identity at (l, m, n).
"""
from __future__ import annotations

from dataclasses import dataclass


class BoundError(ValueError):
    """Truncation bounds are mismatched or too small for the request."""


@dataclass(frozen=True)
class TruncatedPoly:
    """Dense table ``coeffs[i][j]`` of s^i t^j for i <= max_s, j <= max_t."""

    max_s: int
    max_t: int
    coeffs: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.max_s < 0 or self.max_t < 0:
            raise BoundError("truncation degrees must be nonnegative")
        if len(self.coeffs) != self.max_s + 1 or any(
            len(row) != self.max_t + 1 for row in self.coeffs
        ):
            raise BoundError("coefficient table does not match bounds")

    @classmethod
    def from_terms(cls, terms: dict[tuple[int, int], int], max_s: int, max_t: int):
        """Build from ``{(i, j): c}``; terms beyond the bounds are dropped."""
        table = [[0] * (max_t + 1) for _ in range(max_s + 1)]
        for (i, j), c in terms.items():
            if i < 0 or j < 0:
                raise ValueError("exponents must be nonnegative")
            if i <= max_s and j <= max_t:
                table[i][j] += c
        return cls(max_s, max_t, tuple(tuple(r) for r in table))

    @classmethod
    def constant(cls, c: int, max_s: int, max_t: int):
        return cls.from_terms({(0, 0): c}, max_s, max_t)

    def _check_bounds(self, other: "TruncatedPoly"):
        if (self.max_s, self.max_t) != (other.max_s, other.max_t):
            raise BoundError(
                f"bounds differ: ({self.max_s},{self.max_t}) vs ({other.max_s},{other.max_t})"
            )

    def __add__(self, other):
        if not isinstance(other, TruncatedPoly):
            return NotImplemented
        self._check_bounds(other)
        return TruncatedPoly(
            self.max_s,
            self.max_t,
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.coeffs, other.coeffs)
            ),
        )

    def __mul__(self, other):
        if not isinstance(other, TruncatedPoly):
            return NotImplemented
        return poly_mul(self, other)

    def coeff(self, i: int, j: int) -> int:
        return coeff(self, i, j)

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.coeffs)


def poly_mul(a: TruncatedPoly, b: TruncatedPoly) -> TruncatedPoly:
    a._check_bounds(b)
    ms, mt = a.max_s, a.max_t
    out = [[0] * (mt + 1) for _ in range(ms + 1)]
    b_terms = [
        (i, j, c) for i, row in enumerate(b.coeffs) for j, c in enumerate(row) if c
    ]
    for i1, row in enumerate(a.coeffs):
        for j1, c1 in enumerate(row):
            if not c1:
                continue
            for i2, j2, c2 in b_terms:
                i, j = i1 + i2, j1 + j2
                if i <= ms and j <= mt:
                    out[i][j] += c1 * c2
    return TruncatedPoly(ms, mt, tuple(tuple(r) for r in out))


def kernel(max_s: int, max_t: int) -> TruncatedPoly:
    """(s + s t)^2 + s (1 - s - s t)^2, expanded.

    (s + st)^2        = s^2 + 2 s^2 t + s^2 t^2
    s (1 - s - st)^2  = s - 2 s^2 - 2 s^2 t + s^3 + 2 s^3 t + s^3 t^2
    """
    terms: dict[tuple[int, int], int] = {}
    for key, c in [
        ((2, 0), 1), ((2, 1), 2), ((2, 2), 1),
        ((1, 0), 1), ((2, 0), -2), ((2, 1), -2),
        ((3, 0), 1), ((3, 1), 2), ((3, 2), 1),
    ]:
        terms[key] = terms.get(key, 0) + c
    return TruncatedPoly.from_terms(terms, max_s, max_t)


def kernel_pow(l: int, max_s: int, max_t: int) -> TruncatedPoly:
    if l < 0:
        raise ValueError("exponent must be nonnegative")
    if max_s < 3 * l:
        raise BoundError(f"max_s={max_s} < 3l={3 * l}: coefficients would be lost")
    k = kernel(max_s, max_t)
    acc = TruncatedPoly.constant(1, max_s, max_t)
    for _ in range(l):
        acc = poly_mul(acc, k)
    return acc


def coeff(p: TruncatedPoly, i: int, j: int) -> int:
    if not (0 <= i <= p.max_s and 0 <= j <= p.max_t):
        raise IndexError(f"({i},{j}) outside bounds ({p.max_s},{p.max_t})")
    return p.coeffs[i][j]
