#!/usr/bin/env python3
"""
Tests for the closed-form capacity formulas
"""

from fractions import Fraction

import pytest

from src.adtcomp import (
    NetworkParams2x2,
    NetworkParamsSym,
    PreconditionError,
    capacity_2x2,
    capacity_degenerate,
    capacity_report,
    capacity_symmetric,
    luser_linear_capacity,
    luser_upper_bound,
    normalized_capacity,
    normalized_curve,
    separation_rate,
    upper_cutset,
    upper_nondegenerate,
)


def test_symmetric_capacity_spot_values():
    assert capacity_symmetric(3, 5) == 3
    assert capacity_symmetric(3, 4) == Fraction(8, 3)
    assert capacity_symmetric(4, 4) == 4
    assert capacity_symmetric(5, 3) == 3
    assert capacity_symmetric(0, 5) == 0
    assert capacity_symmetric(0, 0) == 0


def test_symmetric_capacity_grid():
    for m in range(21):
        for n in range(21):
            low, high = min(m, n), max(m, n)
            value = capacity_symmetric(m, n)
            assert isinstance(value, Fraction)
            if m == n:
                assert value == n
            elif 3 * low <= 2 * high:
                assert value == low
            else:
                assert value == Fraction(2 * high, 3)
            assert value == capacity_symmetric(n, m)


def test_symmetric_capacity_respects_upper_bounds():
    for m in range(21):
        for n in range(21):
            if m == n:
                continue
            two_user = NetworkParamsSym(m=m, n=n).to_2x2()
            value = capacity_symmetric(m, n)
            assert value <= upper_cutset(two_user), (m, n)
            bound = upper_nondegenerate(two_user)
            assert bound is not None and value <= bound, (m, n)


def test_computing_beats_separation_between_half_and_one():
    for m in range(21):
        for n in range(1, 21):
            low, high = min(m, n), max(m, n)
            value, separation = capacity_symmetric(m, n), separation_rate(m, n)
            assert value >= separation, (m, n)
            if m != n:
                assert (value > separation) == (high < 2 * low), (m, n)
            else:
                # alpha = 1: the channel sum gives n against n/2
                assert value == 2 * separation


def test_two_user_bounds():
    assert upper_cutset(NetworkParams2x2(n11=3, n12=1, n21=2, n22=4)) == 1
    sym = NetworkParamsSym(m=3, n=4).to_2x2()
    assert upper_nondegenerate(sym) == Fraction(8, 3)
    assert upper_nondegenerate(NetworkParams2x2(n11=2, n12=1, n21=2, n22=1)) is None


def test_degenerate_capacity():
    params = NetworkParams2x2(n11=3, n12=1, n21=4, n22=2)
    assert capacity_degenerate(params) == 1
    assert capacity_2x2(params) == 1
    with pytest.raises(PreconditionError):
        capacity_degenerate(NetworkParams2x2(n11=2, n12=1, n21=1, n22=2))


def test_capacity_2x2_unknown_region():
    assert capacity_2x2(NetworkParams2x2(n11=3, n12=1, n21=1, n22=2)) is None
    assert capacity_2x2(NetworkParams2x2(n11=4, n12=3, n21=3, n22=4)) == Fraction(8, 3)


def test_normalized_capacity_and_separation():
    assert normalized_capacity(2, 3) == Fraction(2, 3)
    assert normalized_capacity(3, 4) == Fraction(2, 3)
    assert normalized_capacity(1, 3) == Fraction(1, 3)
    assert normalized_capacity(3, 3) == 1
    assert normalized_capacity(0, 0) == 0

    assert separation_rate(3, 4) == 2
    assert separation_rate(1, 4) == 1
    assert separation_rate(3, 4, L=3) == Fraction(4, 3)
    assert separation_rate(0, 0) == 0
    # computing beats separation strictly between 1/2 and 1
    assert capacity_symmetric(3, 4) > separation_rate(3, 4)


def test_luser_formulas():
    assert luser_linear_capacity(3, 4, 3) == 2
    assert luser_linear_capacity(1, 4, 3) == 1
    assert luser_linear_capacity(4, 4, 5) == 4
    assert luser_upper_bound(3, 4, 3) == Fraction(12, 5)
    assert luser_upper_bound(3, 4, 4) == Fraction(16, 7)
    for L in (3, 4, 5):
        for m in range(9):
            for n in range(9):
                linear, upper = luser_linear_capacity(m, n, L), luser_upper_bound(m, n, L)
                assert linear <= upper
                assert (linear == upper) == (m == n or 2 * min(m, n) <= max(m, n)), (m, n, L)
    with pytest.raises(PreconditionError):
        luser_linear_capacity(3, 4, 2)
    with pytest.raises(PreconditionError):
        luser_upper_bound(3, 4, 2)


def test_normalized_curve():
    curve = normalized_curve(4)
    assert len(curve) == 5
    assert curve[0] == (0, 0, 0)
    assert curve[3] == (Fraction(3, 4), Fraction(2, 3), Fraction(1, 2))
    assert curve[4] == (1, 1, Fraction(1, 2))
    with pytest.raises(PreconditionError):
        normalized_curve(0)


def test_capacity_report():
    report = capacity_report(NetworkParamsSym(m=3, n=4, L=3))
    assert report.capacity is None
    assert report.luser_linear == 2
    assert report.as_dict()["capacity"] is None
    assert capacity_report(NetworkParamsSym(m=2, n=5, L=3)).capacity == 2
    assert capacity_report(NetworkParamsSym(m=4, n=4, L=3)).capacity == 4
    assert report.luser_upper == Fraction(12, 5)
    assert report.separation == Fraction(4, 3)
    assert report.as_dict()["luser_upper"] == "12/5"

    two_user = capacity_report(NetworkParamsSym(m=3, n=4))
    assert two_user.capacity == Fraction(8, 3)
    assert two_user.nondegenerate_bound == Fraction(8, 3)
    assert two_user.cutset == 3


if __name__ == "__main__":
    print("🧪 Testing capacity formulas")
    print("=" * 50)
    for name, fn in list(globals().items()):
        if name.startswith("test_") and callable(fn):
            fn()
            print(f"   - {name}: ✅")
    print("\n✅ All tests passed!")
