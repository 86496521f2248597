"""Verification records and their JSON / CSV serialization."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction

from .modp.field import Fp


def canonical(value) -> str:
    """Integers and rationals as reduced "num/den" (or "num"); residues as ints."""
    if isinstance(value, Fp):
        return str(value.residue)
    if isinstance(value, (int, Fraction)):
        return str(Fraction(value))
    raise TypeError(f"cannot serialize {type(value).__name__}")


def parse_rational(text: str) -> Fraction:
    q = Fraction(text)
    if str(q) != text:
        raise ValueError(f"{text!r} is not in canonical form")
    return q


@dataclass(frozen=True)
class Record:
    check: str
    params: tuple[tuple[str, int], ...]
    lhs: str
    rhs: str

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def sort_key(self):
        return (self.check, tuple(v for _, v in self.params))

    def to_json(self) -> str:
        return json.dumps(
            {
                "check": self.check,
                "params": dict(self.params),
                "lhs": self.lhs,
                "rhs": self.rhs,
                "pass": self.passed,
            },
            separators=(",", ":"),
        )

    def params_text(self) -> str:
        return ";".join(f"{k}={v}" for k, v in self.params)


def render(records: list[Record], fmt: str, skipped: int = 0) -> str:
    """Full report text: one line per record, then a summary footer."""
    failures = [r for r in records if not r.passed]
    if fmt == "json":
        lines = [r.to_json() for r in records]
        summary = {
            "total": len(records),
            "failed": len(failures),
            "skipped": skipped,
            "failures": [{"check": r.check, "params": dict(r.params)} for r in failures],
        }
        lines.append(json.dumps(summary, separators=(",", ":")))
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["check", "params", "lhs", "rhs", "pass"])
        for r in records:
            w.writerow([r.check, r.params_text(), r.lhs, r.rhs, "true" if r.passed else "false"])
        for r in failures:
            buf.write(f"# FAIL {r.check} {r.params_text()}\n")
        buf.write(f"# total={len(records)} failed={len(failures)} skipped={skipped}\n")
        return buf.getvalue()
    raise ValueError(f"unknown format {fmt!r}")
