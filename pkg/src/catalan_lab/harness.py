"""Suites of checks, split into picklable tasks and run serially or in a pool.

A task is a plain tuple ``(kind, *args)``; :func:`run_task` turns it into a
list of :class:`Record` plus a count of skipped tuples (closed forms whose
reduction is undefined for that prime, e.g. a denominator 2 at p = 2).
Records are sorted after collection, so output does not depend on ``jobs``.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb

from .identities import IDENTITY_CHECKS, identity_tuples, run_identity
from .identities import eval_identity_main
from .modp import congruences as cg
from .modp.constants import fg_constants, harmonic_constants, three_case_d0_value
from .modp.field import DenominatorDivisible, binom_mod, fp_reduce
from .modp import invariants as inv
from .primes import primes_between
from .report import Record, canonical
from .series import kernel_pow

SUITES = ("identities", "congruences", "series", "fg", "harmonic", "oracle")
JOBS_ENV = "CATALAN_LAB_JOBS"

DEFAULTS = {
    "l_max": 10,
    "m_max": 30,
    "n_max": 10,
    "d_max": 8,
    "r_max": 6,
    "p_min": 2,
    "p_max": 200,
}


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


@dataclass(frozen=True)
class SweepConfig:
    suite: str
    l_max: int = DEFAULTS["l_max"]
    m_max: int = DEFAULTS["m_max"]
    n_max: int = DEFAULTS["n_max"]
    d_max: int = DEFAULTS["d_max"]
    r_max: int = DEFAULTS["r_max"]
    p_min: int = DEFAULTS["p_min"]
    p_max: int = DEFAULTS["p_max"]
    classes: frozenset = frozenset({"1", "2"})
    jobs: int = 1
    # test hook: (check, ((name, value), ...)) pairs whose rhs gets perturbed
    corrupt: tuple = field(default=())

    def validate(self):
        if self.suite not in SUITES:
            raise ValueError(f"unknown suite {self.suite!r}")
        for name in DEFAULTS:
            if getattr(self, name) < 0:
                raise ValueError(f"--{name.replace('_', '-')} must be nonnegative")
        if self.p_min > self.p_max:
            raise ValueError("--p-min must not exceed --p-max")
        if not self.classes or not self.classes <= {"1", "2", "3"}:
            raise ValueError("--classes must be a nonempty subset of 1,2,3")
        if self.jobs < 1:
            raise ValueError("--jobs must be positive")

    def primes(self) -> list[int]:
        out = []
        for p in primes_between(self.p_min, self.p_max):
            if p == 3:
                if "3" in self.classes:
                    out.append(p)
            elif str(p % 3) in self.classes:
                out.append(p)
        return out


def _bump(value):
    # Fp, int and Fraction all shift by one; for Fp this always changes the residue
    return value + 1


def _matches(check, params, corrupt) -> bool:
    have = dict(params)
    for c_check, c_params in corrupt:
        if c_check == check and all(have.get(k) == v for k, v in c_params):
            return True
    return False


class _Sink:
    def __init__(self, corrupt):
        self.corrupt = corrupt
        self.records: list[Record] = []
        self.skipped = 0

    def add(self, check, params, lhs, rhs):
        params = tuple(params)
        if self.corrupt and _matches(check, params, self.corrupt):
            rhs = _bump(rhs)
        self.records.append(Record(check, params, canonical(lhs), canonical(rhs)))

    def add_lazy(self, check, params, fn):
        """Record ``fn()`` (an lhs, rhs pair), counting undefined reductions as skipped."""
        try:
            lhs, rhs = fn()
        except DenominatorDivisible:
            self.skipped += 1
            return
        self.add(check, params, lhs, rhs)


# -- task bodies ---------------------------------------------------------------


def _task_identity(sink, check_id, first, ranges):
    for t in identity_tuples(check_id, ranges):
        if t[0] != first:
            continue
        res = run_identity(check_id, t)
        sides = res.sides
        if len(sides) == 2:
            sink.add(check_id, res.params, sides[0], sides[1])
        else:
            for i in range(1, len(sides)):
                sink.add(check_id, res.params + (("form", i),), sides[0], sides[i])


def _task_congruences(sink, p, d_max, r_max):
    for part in cg.CENTRAL_PARTS:
        for d in range(min(p, d_max) + 1):
            sink.add_lazy(f"thm1.2.{part}", (("p", p), ("d", d)), lambda: cg.eval_thm12(p, d, part))
    for d in range(min(p - 1, d_max) + 1):
        sink.add_lazy("eq1.7", (("p", p), ("d", d)), lambda: cg.eval_cong_1_7(p, d))
        for r in range(min(p - 1, r_max) + 1):
            sink.add_lazy("eq1.15", (("p", p), ("d", d), ("r", r)), lambda: cg.eval_cong_1_15(p, d, r))
        for r in range(3):
            sink.add_lazy("cor1.3", (("p", p), ("d", d), ("r", r)), lambda: cg.eval_cor13(p, d, r))
    # the three-case d = 0 form is only claimed here for r >= 1
    for r in range(1, min(p - 1, r_max) + 1):
        def three_case():
            lhs, rhs = cg.eval_cong_1_15(p, 0, r)
            return fp_reduce(three_case_d0_value(p, r), p), rhs * (-1) ** r
        sink.add_lazy("rem1.2a", (("p", p), ("r", r)), three_case)


def _task_fg(sink, d, r_max, primes):
    for r in range(r_max + 1):
        for p in primes:
            if p > max(d, r, 3):
                sink.add_lazy("fg", (("d", d), ("r", r), ("p", p)), lambda: cg.eval_fg(p, d, r))


def _task_harmonic(sink, p, d_max):
    for d in range(min(d_max, p - 1) + 1):
        sink.add_lazy("harmonic", (("p", p), ("d", d)), lambda: cg.eval_truncated_harmonic(p, d))


def _task_series(sink, l, n_max):
    max_s = 3 * l + 6
    poly = kernel_pow(l, max_s, n_max)
    for m in range(max_s + 1):
        for n in range(n_max + 1):
            lhs, rhs = eval_identity_main(l, m, n)
            c = poly.coeff(m, n)
            sink.add("series.lhs", (("l", l), ("m", m), ("n", n)), c, lhs)
            sink.add("series.rhs", (("l", l), ("m", m), ("n", n)), c, rhs)


def _task_oracle(sink, p, d_max, r_max):
    pp = (("p", p),)
    for k in range(min(p - 1, d_max) + 1):
        for r in range(min(p - 1, r_max) + 1):
            for name, a, b in inv.binom_mod_p_triples(p, k, r):
                sink.add(f"lemma3.1.{name}", pp + (("k", k), ("r", r)), a, b)
    for r in range(1, min(r_max, (p - 7) // 4) + 1):
        for name, a, b in inv.catalan_binom_sum_checks(p, r):
            sink.add(f"lemma4.1.{name}", pp + (("r", r),), a, b)
    for k in range(min(p - 2, d_max) + 1):
        sink.add("eq1.14", pp + (("k", k),), *cg.catalan_shift(p, k))
    if p >= 2:
        w2, w3 = inv.wolstenholme_check(p)
        sink.add("wolstenholme.p2", pp, w2, 2)
        if p > 3:
            sink.add("wolstenholme.p3", pp, w3, 1)
    if p >= 5:
        for d in range(min(p - 1, d_max) + 1):
            for name, a, b in inv.s_double_count(p, d):
                sink.add(f"s-mod-p2.{name}", pp + (("d", d),), a, b)
            for name, a, b in inv.tail_sum_checks(p, d):
                sink.add(f"tail.{name}", pp + (("d", d),), a, b)
    for k in range(1, min(p - 1, d_max) + 1):
        sink.add("binom-p-k.mod-p2", pp + (("k", k),), *inv.binom_p_k_mod_p2(p, k))
    for n in range(2 * p + 1):
        for k in range(min(n, d_max) + 1):
            sink.add("lucas", pp + (("n", n), ("k", k)), binom_mod(n, k, p), comb(n, k) % p)


_TASKS = {
    "identity": _task_identity,
    "congruences": _task_congruences,
    "fg": _task_fg,
    "harmonic": _task_harmonic,
    "series": _task_series,
    "oracle": _task_oracle,
}


def run_task(task) -> tuple[list[Record], int]:
    kind, corrupt, *args = task
    sink = _Sink(corrupt)
    _TASKS[kind](sink, *args)
    return sink.records, sink.skipped


def build_tasks(cfg: SweepConfig) -> list[tuple]:
    c = cfg.corrupt
    if cfg.suite == "identities":
        ranges = {"l": cfg.l_max, "m": cfg.m_max, "n": cfg.n_max, "d": cfg.d_max, "k": cfg.d_max}
        tasks = []
        for check_id in sorted(IDENTITY_CHECKS):
            names, _ = IDENTITY_CHECKS[check_id]
            for first in range(ranges[names[0]] + 1):
                tasks.append(("identity", c, check_id, first, ranges))
        return tasks
    if cfg.suite == "series":
        return [("series", c, l, cfg.n_max) for l in range(cfg.l_max + 1)]
    if cfg.suite == "fg":
        primes = tuple(p for p in cfg.primes() if p % 3 in (1, 2))
        return [("fg", c, d, cfg.r_max, primes) for d in range(cfg.d_max + 1)]
    primes = cfg.primes()
    if cfg.suite == "congruences":
        return [("congruences", c, p, cfg.d_max, cfg.r_max) for p in primes]
    if cfg.suite == "harmonic":
        return [("harmonic", c, p, cfg.d_max) for p in primes if p >= 5]
    if cfg.suite == "oracle":
        return [("oracle", c, p, cfg.d_max, cfg.r_max) for p in primes]
    raise ValueError(f"unknown suite {cfg.suite!r}")


def map_tasks(fn, tasks, jobs: int):
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, tasks))


def run_suite(cfg: SweepConfig) -> tuple[list[Record], int]:
    cfg.validate()
    results = map_tasks(run_task, build_tasks(cfg), cfg.jobs)
    records = [r for recs, _ in results for r in recs]
    records.sort(key=Record.sort_key)
    return records, sum(s for _, s in results)


# -- constant tables ------------------------------------------------------------


def _fg_row(args):
    d, r = args
    return [str(d), str(r), canonical(fg_constants(d, r, 1)), canonical(fg_constants(d, r, 2))]


def _harmonic_row(d):
    a, b = harmonic_constants(d)
    return [str(d), canonical(a), canonical(b)]


def table_rows(suite: str, d_max: int | None, r_max: int | None, jobs: int = 1):
    """(header, rows) for the F/G or harmonic constant tables, sorted by (d, r)."""
    if suite == "fg":
        header = ["d", "r", "F", "G"]
        if d_max is None or r_max is None:
            return header, []
        grid = [(d, r) for d in range(d_max + 1) for r in range(r_max + 1)]
        return header, map_tasks(_fg_row, grid, jobs)
    if suite == "harmonic":
        header = ["d", "A", "B"]
        if d_max is None:
            return header, []
        return header, map_tasks(_harmonic_row, list(range(d_max + 1)), jobs)
    raise ValueError(f"table supports suites fg and harmonic, not {suite!r}")
