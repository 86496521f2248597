import csv
import io
import json

import pytest

from catalan_lab.cli import main
from catalan_lab.harness import SweepConfig, run_suite
from catalan_lab.modp import eval_fg
from catalan_lab.report import Record, canonical, parse_rational
from fractions import Fraction


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def json_lines(text):
    return [json.loads(line) for line in text.splitlines()]


def test_verify_identities_passes():
    code, out, _ = run(["verify", "--suite", "identities", "--l-max", "10", "--m-max", "30", "--n-max", "10"])
    assert code == 0
    recs = json_lines(out)
    summary = recs[-1]
    assert summary["failed"] == 0 and summary["total"] == len(recs) - 1 > 0
    assert all(r["pass"] and r["lhs"] == r["rhs"] for r in recs[:-1])


def test_verify_congruences_passes():
    code, out, _ = run(["verify", "--suite", "congruences", "--p-max", "200", "--d-max", "8", "--r-max", "6"])
    assert code == 0
    assert json_lines(out)[-1]["failed"] == 0


@pytest.mark.parametrize("suite", ["series", "fg", "harmonic", "oracle"])
def test_other_suites_pass(suite):
    code, out, _ = run(["verify", "--suite", suite, "--p-max", "60", "--l-max", "3", "--n-max", "4"])
    assert code == 0, out.splitlines()[-1]


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--suite", "identities", "--l-max", "-1"],
        ["verify", "--suite", "congruences", "--p-min", "50", "--p-max", "10"],
        ["verify", "--suite", "fg", "--classes", "4"],
        ["verify", "--suite", "nope"],
        ["verify", "--suite", "fg", "--jobs", "0"],
        ["oracle", "4", "0", "0"],
        ["oracle", "5", "5", "0"],
        ["fg", "-1", "0"],
        [],
    ],
)
def test_usage_errors_exit_2(argv):
    code, _, _ = run(argv)
    assert code == 2


def test_fg_command():
    code, out, _ = run(["fg", "0", "2"])
    assert code == 0
    assert json.loads(out) == {"d": 0, "r": 2, "F": "-2/3", "G": "-1/3"}
    _, out, _ = run(["fg", "0", "0"])
    assert json.loads(out) == {"d": 0, "r": 0, "F": "0", "G": "-3"}


def test_fg_command_d4_r0_against_oracle():
    _, out, _ = run(["fg", "4", "0"])
    rec = json.loads(out)
    for p, key in ((13, "F"), (11, "G")):
        _, oracle, _ = run(["oracle", str(p), "4", "0"])
        q = parse_rational(rec[key])
        assert int(oracle) == q.numerator * pow(q.denominator, -1, p) % p
        a, b = eval_fg(p, 4, 0)
        assert a == b


def test_fg_command_csv():
    _, out, _ = run(["fg", "0", "2", "--format", "csv"])
    assert out == "d,r,F,G\n0,2,-2/3,-1/3\n"


def test_oracle_command():
    assert run(["oracle", "5", "0", "2"])[:2] == (0, "3\n")
    assert run(["oracle", "7", "0", "2"])[:2] == (0, "4\n")


def test_table_fg(tmp_path):
    path = tmp_path / "fg.csv"
    code, _, _ = run(["table", "--suite", "fg", "--d-max", "1", "--r-max", "1", "--out", str(path)])
    assert code == 0
    rows = list(csv.reader(path.open()))
    assert rows[0] == ["d", "r", "F", "G"]
    assert len(rows) == 5
    assert [r[:2] for r in rows[1:]] == [["0", "0"], ["0", "1"], ["1", "0"], ["1", "1"]]


def test_table_harmonic():
    code, out, _ = run(["table", "--suite", "harmonic", "--d-max", "4"])
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows == [
        ["d", "A", "B"],
        ["0", "3/2", "-3/2"],
        ["1", "3/4", "3/4"],
        ["2", "0", "3"],
        ["3", "-47/24", "69/8"],
        ["4", "-497/60", "501/20"],
    ]


def test_table_empty_bounds():
    assert run(["table", "--suite", "fg"])[1] == "d,r,F,G\n"
    assert run(["table", "--suite", "harmonic"])[1] == "d,A,B\n"


def test_table_unwritable(tmp_path):
    code, _, err = run(["table", "--suite", "harmonic", "--d-max", "2", "--out", str(tmp_path / "no" / "x.csv")])
    assert code == 2 and "cannot write" in err


def test_table_deterministic_across_jobs():
    a = run(["table", "--suite", "fg", "--d-max", "3", "--r-max", "3", "--jobs", "1"])[1]
    b = run(["table", "--suite", "fg", "--d-max", "3", "--r-max", "3", "--jobs", "4"])[1]
    assert a == b


@pytest.mark.parametrize("suite", ["identities", "congruences", "fg", "oracle"])
def test_report_deterministic_across_jobs(suite):
    base = ["verify", "--suite", suite, "--p-max", "40", "--l-max", "4", "--m-max", "8", "--n-max", "4"]
    one = run(base + ["--jobs", "1"])[1]
    many = run(base + ["--jobs", "3"])[1]
    assert one == many
    assert one == run(base + ["--jobs", "1"])[1]


def test_jobs_default_from_environment(monkeypatch):
    monkeypatch.setenv("CATALAN_LAB_JOBS", "2")
    base = ["verify", "--suite", "fg", "--p-max", "30", "--d-max", "2", "--r-max", "2"]
    with_env = run(base)[1]
    monkeypatch.delenv("CATALAN_LAB_JOBS")
    assert with_env == run(base)[1]


def test_csv_report():
    code, out, _ = run(["series-check", "--l-max", "1", "--n-max", "1", "--format", "csv"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "check,params,lhs,rhs,pass"
    assert lines[-1].startswith("# total=")
    assert "series.lhs,l=0;m=0;n=0,1,1,true" in lines


def test_corrupted_closed_form_is_surfaced():
    base = ["verify", "--suite", "congruences", "--p-max", "30", "--d-max", "3", "--r-max", "2"]
    code, out, _ = run(base + ["--corrupt", "eq1.7:p=11,d=2", "--corrupt", "cor1.3:p=13,r=1"])
    assert code == 1
    recs = json_lines(out)
    failed = [(r["check"], r["params"]) for r in recs[:-1] if not r["pass"]]
    expected = [("cor1.3", {"p": 13, "d": d, "r": 1}) for d in range(4)] + [("eq1.7", {"p": 11, "d": 2})]
    assert sorted(failed, key=str) == sorted(expected, key=str)
    assert recs[-1]["failed"] == len(expected)
    assert sorted(recs[-1]["failures"], key=str) == sorted(
        [{"check": c, "params": p} for c, p in expected], key=str
    )


def test_corrupt_hook_on_identities():
    code, out, _ = run(["verify", "--suite", "identities", "--l-max", "2", "--m-max", "2", "--n-max", "2",
                        "--d-max", "1", "--corrupt", "eq1.1:l=1,m=1,n=0"])
    assert code == 1
    assert json_lines(out)[-1]["failures"] == [{"check": "eq1.1", "params": {"l": 1, "m": 1, "n": 0}}]


def test_rational_strings_round_trip():
    records, _ = run_suite(SweepConfig(suite="identities", l_max=2, m_max=2, n_max=2, d_max=12))
    for r in records:
        for text in (r.lhs, r.rhs):
            q = parse_rational(text)
            assert canonical(q) == text
    _, out, _ = run(["table", "--suite", "fg", "--d-max", "3", "--r-max", "3"])
    for row in list(csv.reader(io.StringIO(out)))[1:]:
        for text in row[2:]:
            assert canonical(parse_rational(text)) == text


def test_canonical_forms():
    assert canonical(Fraction(6, -4)) == "-3/2"
    assert canonical(Fraction(4, 2)) == "2"
    assert canonical(-7) == "-7"
    with pytest.raises(ValueError):
        parse_rational("2/4")


def test_record_pass_is_string_equality():
    assert Record("x", (("p", 5),), "3", "3").passed
    assert not Record("x", (("p", 5),), "3", "3/1").passed


def test_undefined_reductions_are_counted_as_skipped():
    from catalan_lab.harness import _Sink
    from catalan_lab.modp import reduce_mod

    sink = _Sink(corrupt=())
    sink.add_lazy("demo", (("p", 3),), lambda: (reduce_mod(Fraction(1, 3), 3), 0))
    sink.add_lazy("demo", (("p", 5),), lambda: (reduce_mod(Fraction(1, 3), 5), 2))
    assert sink.skipped == 1
    assert [r.passed for r in sink.records] == [True]
    from catalan_lab.report import render

    summary = json.loads(render(sink.records, "json", sink.skipped).splitlines()[-1])
    assert summary == {"total": 1, "failed": 0, "skipped": 1, "failures": []}
    assert render(sink.records, "csv", sink.skipped).endswith("# total=1 failed=0 skipped=1\n")
