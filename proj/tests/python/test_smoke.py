"""Smoke tests for the python bindings."""

import pytest

import semibound as sb


def test_semigroup_basics():
    s = sb.NumericalSemigroup([9, 8, 31])
    assert s.generators == [8, 9, 31]
    assert s.multiplicity == 8
    assert s.genus() == 24
    assert 31 in s
    assert 7 not in s

    s56 = sb.make_semigroup([5, 6])
    assert s56.genus() == 10
    assert s56.frobenius() == 19
    assert s56.minimal_generators() == [5, 6]
    assert s56.elements_up_to(12) == [0, 5, 6, 10, 11, 12]
    assert s56.apery_set(5).least == [0, 6, 12, 18, 24]
    assert sb.make_semigroup([8, 9, 31, 40]) == s.__class__([8, 9, 31])


def test_bounds():
    s = sb.make_semigroup([8, 9, 31])
    assert sb.lewittes(s, 37) == 297
    assert sb.gm_general(s, 37) == 295
    assert sb.gm_two_generators(5, 6, 13) == 64
    assert not sb.gm_equals_lewittes(sb.make_semigroup([6, 7]), 11)
    assert sb.gm_equals_lewittes(sb.make_semigroup([6, 7]), 12)

    report = sb.bound_report(sb.make_semigroup([5, 6]), 13)
    assert report == {
        "gm": 64,
        "lewittes": 66,
        "equal": False,
        "method": "two-generator",
        "genus": 10,
    }


def test_intervals():
    assert sb.apery_interval(5, 2).least == [0, 6, 7, 13, 14]
    assert sb.gm_interval_sum(15, 12, 2) == 22
    assert sb.gm_interval_setA(15, 12, 2) == 22
    assert sb.gm_interval_closed(15, 12, 2) == 22
    assert sb.interval_contains_q(15, 3, 16)
    assert not sb.interval_contains_q(15, 3, 19)


def test_kummer():
    report = sb.curve_report(37, 27, [1, 3, 3], 1)
    assert report["generators"] == [8, 9, 31]
    assert report["genus"] == 24
    assert report["gm"] == 295
    assert report["lewittes"] == 297
    assert report["hws"] == 326
    assert report["ihara"] == 299
    assert report["yl"] == 922

    yl = sb.yl_bound(13, 10, [1, 5, 8, 8], 1)
    assert yl["upper"] == 104
    assert not yl["coprime_branch"]

    assert sb.cmq_semigroup(7, 3) == (5, 2)
    assert sb.kummer_consecutive_bound(8, 5, 2) == 25
    assert sb.hws_bound(37, 24) == 326
    assert sb.ihara_bound(13, 10) == 73

    ws = sb.weierstrass_semigroup(13, 11, [1, 3, 6, 6], 1)
    assert ws.minimal_generators() == [7, 9, 11]


def test_oracle_and_verify():
    s = sb.make_semigroup([6, 7])
    assert sb.gm_bruteforce(s, 11) == 63
    assert sb.gm_bruteforce(s, 11) == sb.gm_general(s, 11)
    assert sb.gm_setdiff_bruteforce(sb.make_semigroup([2, 3]), 2) == [0, 2, 3, 5]
    assert sb.verify(trials=60, seed=42) == []


def test_errors():
    with pytest.raises(ValueError):
        sb.make_semigroup([4, 6])
    with pytest.raises(ValueError):
        sb.make_semigroup([])
    with pytest.raises(ValueError):
        sb.gm_interval_closed(2, 1, 5)  # t = 1 refused
    with pytest.raises(OverflowError):
        sb.lewittes(sb.make_semigroup([5, 6]), 2**62)
    with pytest.raises(RuntimeError):
        sb.gm_bruteforce(sb.make_semigroup([5, 6]), 13, 10)  # cap exceeded
