#!/usr/bin/env python3
"""
Tests for decodability checks, simulation and subspace dimensions
"""

import pytest

from src.adtcomp import (
    Gf2Matrix,
    LinearCode,
    NetworkParamsSym,
    PreconditionError,
    construct_auto,
    construct_case1,
    construct_case2,
    construct_uncoded,
    decoder_exists,
    rank_condition,
    simulate,
    subspace_dims,
)
from src.adtcomp.tools.gf2 import identity_stack
from src.adtcomp.verification import receiver_map


def _blind_code() -> LinearCode:
    """K = 1 on (1,2) with transmitter 1 silent."""
    params = NetworkParamsSym(m=1, n=2)
    silent = Gf2Matrix.from_columns(2, [0])
    top = Gf2Matrix.from_columns(2, [0b01])
    return LinearCode(params, 1, 1, (silent, top))


def test_decoders_reproduce_the_sum():
    code = construct_case2(3, 4)
    report = decoder_exists(code)
    assert report.passed
    target = identity_stack(code.K, 2)
    for rx, receiver in enumerate(report.receivers):
        assert receiver.decoder @ receiver_map(code, rx) == target
        assert receiver.rank == 12


def test_silent_transmitter_fails():
    report = decoder_exists(_blind_code())
    assert not report.passed
    assert not _blind_code().transmits_every_bit()
    with pytest.raises(PreconditionError):
        simulate(_blind_code())


def test_simulation_matches_decoders():
    assert simulate(construct_case2(3, 4), seed=1, trials=1000)
    assert simulate(construct_case1(3, 5), seed=2, trials=200)


def test_exhaustive_simulation_three_users():
    code = construct_auto(NetworkParamsSym(m=3, n=4, L=3))
    assert code.num_users * code.K == 6
    assert simulate(code, exhaustive=True)


def test_exhaustive_simulation_size_cap():
    # 3 users x 7 bits is past the enumeration cap
    with pytest.raises(PreconditionError):
        simulate(construct_uncoded(7, 7, L=3), exhaustive=True)


def test_rank_condition_requires_three_slot_code():
    with pytest.raises(PreconditionError):
        rank_condition(construct_case1(3, 5))
    assert rank_condition(construct_case2(4, 3)) == (12, 12)


def test_subspace_dims_on_constructed_codes():
    for L in (3, 4):
        for m in range(1, 9):
            for n in range(1, 9):
                code = construct_auto(NetworkParamsSym(m=m, n=n, L=L))
                if code.K == 0:
                    continue
                report = subspace_dims(code)
                assert all(report.independent), (m, n, L)
                assert report.pattern_check_applicable == (m != n)
                assert not report.forbidden_patterns, (m, n, L)
                assert report.ok


def test_single_level_pattern_is_flagged():
    # every transmitter on the bottom level: the cross shift pushes it out of view
    params = NetworkParamsSym(m=1, n=2, L=3)
    bottom = Gf2Matrix.from_columns(2, [0b10])
    code = LinearCode(params, 1, 1, (bottom,) * 3)
    report = subspace_dims(code)
    assert report.dims == [[1, 1, 1]]
    assert (1, 1, 2) in report.forbidden_patterns
    assert not report.ok
    assert not decoder_exists(code).passed


def test_equal_strength_codes_skip_the_pattern_check():
    report = subspace_dims(construct_uncoded(1, 1, L=3))
    assert not report.pattern_check_applicable
    assert report.dims == [[1, 1, 1]]
    assert report.ok


def test_report_serializes():
    data = decoder_exists(construct_case1(3, 5)).to_dict()
    assert data["passed"]
    assert len(data["receivers"]) == 2
    assert data["receivers"][0]["decoder"]["cols"] == 5


if __name__ == "__main__":
    print("🧪 Testing verification")
    print("=" * 50)
    for name, fn in list(globals().items()):
        if name.startswith("test_") and callable(fn):
            fn()
            print(f"   - {name}: ✅")
    print("\n✅ All tests passed!")
