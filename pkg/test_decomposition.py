#!/usr/bin/env python3
"""
Tests for level colorings and network decomposition
"""

import pytest

from src.adtcomp import (
    NetworkParamsSym,
    PreconditionError,
    adt_graph,
    decompose_odd,
    decompose_scale,
    full_decompose,
    validate_coloring,
)


def test_two_seven_factorization():
    dec = full_decompose(2, 7)
    assert dec.factorization() == "(0,1)^3 x (1,2)^2"
    assert dec.totals() == (2, 7)
    assert validate_coloring(NetworkParamsSym(m=2, n=7), dec)


def test_full_decompose_grid():
    for m in range(1, 13):
        for n in range(1, 13):
            if m == n:
                continue
            dec = full_decompose(m, n)
            assert dec.totals() == (m, n)
            assert len(dec.color_models) == abs(n - m)
            assert all(abs(a - b) == 1 for a, b in dec.color_models)
            assert validate_coloring(NetworkParamsSym(m=m, n=n), dec), (m, n)


def test_full_decompose_many_users():
    for L in (3, 4):
        dec = full_decompose(3, 5, L)
        assert validate_coloring(NetworkParamsSym(m=3, n=5, L=L), dec)
        assert dec.factorization() == "(1,2)^1 x (2,3)^1"


def test_full_decompose_needs_distinct_strengths():
    with pytest.raises(PreconditionError):
        full_decompose(3, 3)


def test_odd_split():
    dec = decompose_odd(5, 7)
    assert dec.color_models == ((3, 4), (2, 3))
    assert validate_coloring(NetworkParamsSym(m=5, n=7), dec)
    assert dec.coloring.levels_of("tx", 1, 0) == [1, 3, 5, 7]
    assert dec.coloring.levels_of("rx", 2, 1) == [2, 4, 6]

    mirrored = decompose_odd(7, 5)
    assert validate_coloring(NetworkParamsSym(m=7, n=5), mirrored)
    with pytest.raises(PreconditionError):
        decompose_odd(4, 5)


def test_scale_split():
    dec = decompose_scale(1, 2, 3)
    assert (dec.m, dec.n) == (3, 6)
    assert dec.factorization() == "(1,2)^3"
    assert validate_coloring(NetworkParamsSym(m=3, n=6), dec)
    with pytest.raises(PreconditionError):
        decompose_scale(1, 2, 0)


def test_level_graph_shape():
    graph = adt_graph(1, 2, 2)
    assert graph.number_of_nodes() == 8
    assert graph.number_of_edges() == 6
    assert graph.has_edge(("tx", 1, 1), ("rx", 2, 2))


def test_broken_coloring_is_rejected():
    params = NetworkParamsSym(m=2, n=7)
    dec = full_decompose(2, 7)
    color, sub = dec.coloring.color_of("tx", 1, 1)
    broken = dec.coloring.with_assignment(("tx", 1, 1), ((color + 1) % 5, sub))
    assert not validate_coloring(params, dec.with_coloring(broken))

    wrong_model = full_decompose(2, 5)
    assert not validate_coloring(params, wrong_model)


def test_coloring_table_rows():
    rows = list(full_decompose(1, 2).coloring.table())
    assert rows[0] == ("tx1", 1, 0, 1)
    assert len(rows) == 2 * 2 * 2


if __name__ == "__main__":
    print("🧪 Testing decomposition")
    print("=" * 50)
    for name, fn in list(globals().items()):
        if name.startswith("test_") and callable(fn):
            fn()
            print(f"   - {name}: ✅")
    print("\n✅ All tests passed!")
