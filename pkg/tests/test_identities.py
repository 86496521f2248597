from fractions import Fraction

import pytest

from catalan_lab.exact import catalan
from catalan_lab.identities import (
    IdentityCheck,
    eval_decomposition,
    eval_identity_cor11,
    eval_identity_guo,
    eval_identity_main,
    eval_recurrence_1_19,
    eval_recurrence_1_20,
    eval_recurrence_1_21,
    sweep_identities,
)


def test_single_sum_identity_examples():
    assert eval_identity_guo(1, 3) == (2, 2)
    assert eval_identity_guo(1, 2) == (0, 0)
    assert eval_identity_guo(0, 0) == (1, 1)


def test_main_examples():
    assert eval_identity_main(1, 1, 0) == (1, 1)
    assert eval_identity_main(1, 2, 0) == (-1, -1)


def test_three_parameter_identity_specializes():
    for l in range(41):
        for m in range(121):
            assert eval_identity_main(l, m, l, fast=True) == eval_identity_guo(l, m, fast=True)


def test_shifted_identity_examples():
    assert eval_identity_cor11(0, 0, 1) == (0, 0)
    a, b = eval_identity_cor11(1, 3, 1)
    assert a == b
    a, b = eval_identity_cor11(2, 5, 2)
    assert a == b


def test_shifted_identity_rejects_bad_j():
    with pytest.raises(ValueError):
        eval_identity_cor11(1, 1, 3)


def test_fast_path_matches_literal():
    for l in range(16):
        for m in range(3 * l + 8):
            assert eval_identity_guo(l, m) == eval_identity_guo(l, m, fast=True)
            for j in (1, 2):
                assert eval_identity_cor11(l, m, j) == eval_identity_cor11(l, m, j, fast=True)
            for n in range(16):
                assert eval_identity_main(l, m, n) == eval_identity_main(l, m, n, fast=True)


def test_single_sum_identity_vanishes_off_multiples_of_three():
    for l in range(30):
        for m in range(90):
            if m % 3:
                assert eval_identity_guo(l, m)[0] == 0


def test_decomposition_examples():
    assert eval_decomposition(0, 5) == (42, 42)
    assert eval_decomposition(1, 1) == (2, 2)
    for d in range(10):
        assert eval_decomposition(d, 0) == (catalan(d), catalan(d))


def test_decomposition_grid():
    for d in range(51):
        for k in range(51):
            a, b = eval_decomposition(d, k)
            assert a == b


@pytest.mark.parametrize("d,value", [(0, 1), (1, 1), (3, 5)])
def test_first_recurrence_examples(d, value):
    assert eval_recurrence_1_19(d) == (value,) * 4


def test_second_recurrence_examples():
    assert eval_recurrence_1_20(0) == (0, 0, 0)
    assert eval_recurrence_1_20(1) == (1, 1, 1)
    a, b, c = eval_recurrence_1_20(4)
    # brute force: sum k C_{4-k}
    assert a == 0 * 14 + 1 * 5 + 2 * 2 + 3 * 1 + 4 * 1 == b == c


def test_third_recurrence_examples():
    assert eval_recurrence_1_21(1) == (Fraction(-1, 3),) * 3
    for d in (0, 5):
        a, b, c = eval_recurrence_1_21(d)
        assert a == b == c


def test_identity_check_pass_flag():
    assert IdentityCheck.of("x", (("a", 1),), (3, 3, 3)).passed
    assert not IdentityCheck.of("x", (("a", 1),), (3, 3, 4)).passed


def test_sweep_counts():
    recs = sweep_identities({"l": 2, "m": 2, "n": 2}, checks=["eq1.1"])
    assert len(recs) == 27 and all(r.passed for r in recs)
    recs = sweep_identities({"d": 10}, checks=["eq1.19", "eq1.20", "eq1.21"])
    assert len(recs) == 33 and all(r.passed for r in recs)
    assert sweep_identities({}) == []


def test_sweep_is_sorted_and_complete():
    recs = sweep_identities({"l": 3, "m": 5, "n": 2, "d": 4, "k": 4})
    keys = [(r.check_id, tuple(v for _, v in r.params)) for r in recs]
    assert keys == sorted(keys)
    assert {r.check_id for r in recs} == {
        "eq1.0", "eq1.1", "eq1.2", "eq1.3", "eq1.13", "eq1.19", "eq1.20", "eq1.21", "rem1.3"
    }
    assert all(r.passed for r in recs)


def test_sweep_rejects_negative_bounds():
    with pytest.raises(ValueError):
        sweep_identities({"l": -1})
